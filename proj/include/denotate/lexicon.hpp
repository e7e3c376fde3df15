#ifndef DENOTATE_LEXICON_HPP
#define DENOTATE_LEXICON_HPP

#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "denotate/hierarchy.hpp"

namespace denotate {

enum class CasePolicy { Exact, Fold };

/// Proper-name dictionary: surface form (possibly multi-word) -> entity type.
struct Gazetteer {
  CasePolicy case_policy = CasePolicy::Exact;
  std::map<std::string, std::string> entries;
};

/// Line format: surface<TAB>type. Types are validated against the hierarchy.
/// Duplicate surfaces with conflicting types are rejected.
Gazetteer load_gazetteer(std::istream& in, const TypeHierarchy& hierarchy,
                         CasePolicy policy = CasePolicy::Exact,
                         const std::string& source = "<stream>");
Gazetteer load_gazetteer_file(const std::string& path, const TypeHierarchy& hierarchy,
                              CasePolicy policy = CasePolicy::Exact);

enum class MarkerSide { Before, After };

struct Marker {
  std::string type;
  MarkerSide side = MarkerSide::Before;
};

/// Lexical markers (Mr, Inc.) that type an adjacent unknown capitalized
/// sequence. Line format: surface<TAB>type<TAB>before|after.
struct MarkerLexicon {
  std::map<std::string, Marker> entries;
};

MarkerLexicon load_markers(std::istream& in, const TypeHierarchy& hierarchy,
                           const std::string& source = "<stream>");
MarkerLexicon load_markers_file(const std::string& path, const TypeHierarchy& hierarchy);

enum class TriggerKind { Verb, Noun, Prep };

/// A same-sentence focalization trigger.
struct TriggerRule {
  std::string rule_id;
  std::string trigger;  // raw field: form[|alternative...]
  std::vector<std::vector<std::string>> alternatives;  // tokenized forms
  TriggerKind kind = TriggerKind::Verb;
  std::string applies_to;  // entity type
  std::string facet;
  int priority = 0;
};

/// Rules sorted by descending priority, then rule_id.
struct TriggerRuleSet {
  std::vector<TriggerRule> rules;
};

/// Line format: rule_id<TAB>trigger[|alt...]<TAB>verb|noun|prep<TAB>type<TAB>facet<TAB>priority.
/// Each facet must be valid for its type per the hierarchy.
TriggerRuleSet load_trigger_rules(std::istream& in, const TypeHierarchy& hierarchy,
                                  const std::string& source = "<stream>");
TriggerRuleSet load_trigger_rules_file(const std::string& path, const TypeHierarchy& hierarchy);

/// General-language word list gating the unknown-word heuristic.
/// Stored case-folded; one word per line.
struct GeneralDictionary {
  std::unordered_set<std::string> words;

  bool contains(std::string_view surface) const;
};

GeneralDictionary load_dictionary(std::istream& in, const std::string& source = "<stream>");
GeneralDictionary load_dictionary_file(const std::string& path);

}  // namespace denotate

#endif
