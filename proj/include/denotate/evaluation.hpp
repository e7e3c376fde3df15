#ifndef DENOTATE_EVALUATION_HPP
#define DENOTATE_EVALUATION_HPP

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "denotate/document.hpp"
#include "denotate/hierarchy.hpp"

namespace denotate {

/// One system or gold annotation in standoff form.
struct Annotation {
  std::string doc_id;
  Span span;
  std::string entity_type;
  std::string focalisation = kNoFacet;  // omitted facets read as `none`

  bool operator==(const Annotation&) const = default;
};

using GoldAnnotation = Annotation;

enum class MatchMode { Exact, Overlap };
enum class ScoreKeys { Span, SpanType, SpanTypeFacet };

struct PRTriple {
  double precision = 0.0;
  double recall = 0.0;
  double combined = 0.0;
  std::size_t true_positive = 0;
  std::size_t system_total = 0;
  std::size_t gold_total = 0;
};

struct PRReport {
  MatchMode mode = MatchMode::Exact;
  ScoreKeys keys = ScoreKeys::SpanType;
  PRTriple overall;
  std::map<std::string, PRTriple> per_type;  // over gold types
};

/// Combined precision/recall: 2pr/(p+r), 0 when p+r = 0.
/// Inputs outside [0, 1] are rejected.
double fmeasure(double precision, double recall);

/// Scores system annotations against gold. Pairs are one-to-one per document
/// and maximize the number of pairs that match under the mode (exact:
/// identical spans; overlap: intersecting spans) with all requested keys
/// agreeing. When document_set is given, any annotation referencing a
/// document outside it is an error.
PRReport score(const std::vector<Annotation>& system, const std::vector<Annotation>& gold,
               MatchMode mode, ScoreKeys keys,
               const std::optional<std::vector<std::string>>& document_set = std::nullopt);

/// Gold file: doc_id<TAB>start<TAB>end<TAB>type[<TAB>facet], # comments.
/// Parse failures report the line number. Types are validated against the
/// hierarchy when one is supplied.
std::vector<Annotation> load_gold(std::istream& in, const TypeHierarchy* hierarchy = nullptr,
                                  const std::string& source = "<stream>");
std::vector<Annotation> load_gold_file(const std::string& path,
                                       const TypeHierarchy* hierarchy = nullptr);

Annotation to_annotation(const Mention& mention);

}  // namespace denotate

#endif
