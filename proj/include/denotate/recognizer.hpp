#ifndef DENOTATE_RECOGNIZER_HPP
#define DENOTATE_RECOGNIZER_HPP

#include <vector>

#include "denotate/document.hpp"
#include "denotate/hierarchy.hpp"
#include "denotate/lexicon.hpp"
#include "denotate/matcher.hpp"
#include "denotate/tokenizer.hpp"

namespace denotate {

/// Marker-based spans extend over consecutive capitalized unknown tokens,
/// capped to bound pathological runs.
inline constexpr std::size_t kMaxMarkerSpanTokens = 4;

/// Produces typed mentions from gazetteer matches and marker rules.
///
/// A marker types the adjacent capitalized word sequence on its declared side
/// when the words are absent from the general dictionary (pass nullptr to
/// gate on capitalization alone). Gazetteer matches win over overlapping
/// marker candidates. Mentions come back sorted by span start,
/// non-overlapping, focalisation initialized to `none`.
std::vector<Mention> recognize(const Document& document, const std::vector<Token>& tokens,
                               const PatternMatcher& matcher, const TypeHierarchy& hierarchy,
                               const GeneralDictionary* dictionary = nullptr);

}  // namespace denotate

#endif
