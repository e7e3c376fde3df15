#ifndef DENOTATE_FOCALIZER_HPP
#define DENOTATE_FOCALIZER_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "denotate/document.hpp"
#include "denotate/hierarchy.hpp"
#include "denotate/lexicon.hpp"
#include "denotate/tokenizer.hpp"

namespace denotate {

/// Records why a mention's focalisation was (or was not) set.
struct FocalizationTrace {
  std::optional<std::string> fired_rule;
  std::vector<std::string> competing_rules;  // matched but lost, sorted by id
  std::string facet = kNoFacet;
};

struct FocalizeResult {
  SemFrame sem;
  FocalizationTrace trace;
};

/// Updates a mention's focalisation from same-sentence triggers.
///
/// Among rules whose applies_to is a supertype-or-equal of the mention's type
/// and whose trigger matches inside the sentence, the winner has the highest
/// priority, then the smallest token distance to the mention, then the
/// smallest rule_id. Equal-priority equal-distance rules naming different
/// facets cancel out: the facet stays `none` and all of them are reported as
/// competing (underspecification on conflict).
FocalizeResult focalize(const Mention& mention, std::span<const Token> sentence,
                        const TriggerRuleSet& rules, const TypeHierarchy& hierarchy);

}  // namespace denotate

#endif
