#ifndef DENOTATE_MATCHER_HPP
#define DENOTATE_MATCHER_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "denotate/lexicon.hpp"
#include "denotate/tokenizer.hpp"

namespace denotate {

/// Gazetteer hit over token indices [begin, end).
struct EntityMatch {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::string type;
};

/// Marker hit over token indices [begin, end).
struct MarkerMatch {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::string type;
  MarkerSide side = MarkerSide::Before;
};

struct ScanResult {
  std::vector<EntityMatch> entities;
  std::vector<MarkerMatch> markers;
};

/// Immutable multi-pattern matcher over token sequences.
///
/// Surfaces are tokenized with the document tokenizer at compile time, so
/// match boundaries always align with token boundaries. scan() reports
/// non-overlapping leftmost-longest matches; output does not depend on
/// gazetteer insertion order.
class PatternMatcher {
 public:
  ScanResult scan(const std::vector<Token>& tokens) const;

  bool empty() const { return gazetteer_.root().empty() && markers_.root().empty(); }
  CasePolicy case_policy() const { return policy_; }

 private:
  friend PatternMatcher compile_matcher(const Gazetteer&, const MarkerLexicon&);

  // Token-edge trie; node 0 is the root's children map.
  template <typename Payload>
  class Trie {
   public:
    void insert(const std::vector<std::string>& key, Payload payload);
    // Longest key matching tokens[pos..] under a projection of the token
    // surface; returns match length and payload.
    const Payload* longest(const std::vector<std::string>& tokens, std::size_t pos,
                           std::size_t* length) const;
    const std::map<std::string, std::size_t>& root() const { return root_; }

   private:
    struct Node {
      std::map<std::string, std::size_t> children;
      std::optional<Payload> payload;
    };
    std::map<std::string, std::size_t> root_;
    std::vector<Node> nodes_;
  };

  Trie<std::string> gazetteer_;  // payload: entity type
  Trie<Marker> markers_;
  CasePolicy policy_ = CasePolicy::Exact;
};

PatternMatcher compile_matcher(const Gazetteer& gazetteer, const MarkerLexicon& markers);

}  // namespace denotate

#endif
