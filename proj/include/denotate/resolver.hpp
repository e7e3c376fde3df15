#ifndef DENOTATE_RESOLVER_HPP
#define DENOTATE_RESOLVER_HPP

#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "denotate/document.hpp"
#include "denotate/hierarchy.hpp"
#include "denotate/kb.hpp"
#include "denotate/tokenizer.hpp"

namespace denotate {

/// Common-noun heads of definite descriptions -> entity type.
/// Line format: noun<TAB>type. Lookup is case-folded.
struct HeadLexicon {
  std::map<std::string, std::string> entries;  // folded noun -> type

  const std::string* type_of(std::string_view noun) const;
};

HeadLexicon load_head_lexicon(std::istream& in, const TypeHierarchy& hierarchy,
                              const std::string& source = "<stream>");
HeadLexicon load_head_lexicon_file(const std::string& path, const TypeHierarchy& hierarchy);

/// "L'organisation de Kofi Annan": head noun + `de X` complement.
struct DefiniteDescription {
  std::string head_noun;   // surface as written
  std::string complement;  // the name sequence's surface
  Span span;               // from the article to the end of the complement
  std::string head_type;
};

struct Candidate {
  std::string entity_id;
  std::string attribute;

  bool operator==(const Candidate&) const = default;
};

struct Resolution {
  DefiniteDescription description;
  std::optional<std::string> resolved_entity;
  std::string justification;  // Attr(Entity)=Value; empty when unresolved
  std::vector<Candidate> candidates;  // ranked
};

/// Detects [definite article] [head noun] de/d' [capitalized name sequence]
/// within one sentence.
std::vector<DefiniteDescription> parse_descriptions(const Document& document,
                                                    std::span<const Token> sentence,
                                                    const HeadLexicon& heads);

/// Resolves a description by attribute inversion over the template store,
/// keeping only entities whose type is a subtype of the head type. Candidates
/// are ranked IsLeadedBy > IsComposedOf > IsLocatedIn > KindOf > user-defined
/// (alphabetical), then by entity id.
Resolution resolve(const DefiniteDescription& description, const TemplateStore& store,
                   const TypeHierarchy& hierarchy);

}  // namespace denotate

#endif
