#ifndef DENOTATE_DOCUMENT_HPP
#define DENOTATE_DOCUMENT_HPP

#include <cstddef>
#include <string>

namespace denotate {

/// Half-open character interval [start, end), counted in code points.
struct Span {
  std::size_t start = 0;
  std::size_t end = 0;

  bool operator==(const Span& other) const = default;
  bool overlaps(const Span& other) const {
    return start < other.end && other.start < end;
  }
};

struct Document {
  std::string id;
  std::string text;  // UTF-8
};

/// Distinguished focalisation value: facet left unresolved.
inline const std::string kNoFacet = "none";

/// The Sem{Type; Focalisation} block attached to a mention.
struct SemFrame {
  std::string entity_type;
  std::string focalisation = kNoFacet;
};

/// A recognized entity span.
struct Mention {
  std::string lexical_unit;  // document substring at span, unnormalized
  Span span;
  std::string doc_id;
  SemFrame sem;
};

}  // namespace denotate

#endif
