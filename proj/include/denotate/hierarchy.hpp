#ifndef DENOTATE_HIERARCHY_HPP
#define DENOTATE_HIERARCHY_HPP

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace denotate {

/// Rooted tree of entity types with per-type focalization facets.
///
/// Loaded from a line-oriented spec:
///   type <id> parent <id>     (parent "-" declares the root)
///   facet <type-id> <facet-id>
///   # comment
///
/// Immutable after load; safe to share across threads.
class TypeHierarchy {
 public:
  static TypeHierarchy load(std::istream& in, const std::string& source = "<stream>");
  static TypeHierarchy load_file(const std::string& path);

  /// Writes the validated structure back in the spec format.
  /// load(serialize(h)) reproduces h exactly.
  std::string serialize() const;

  bool contains(std::string_view type) const;
  const std::string& root() const { return root_; }

  /// True iff b lies on the parent chain from a to the root, a included.
  /// Throws Error for unknown ids.
  bool is_subtype(std::string_view a, std::string_view b) const;

  /// Allowed facets for a type: ancestor facets first (root-most ancestor
  /// first), then the type's own, each group in declaration order.
  /// Duplicates keep their first occurrence. Throws Error for unknown ids.
  std::vector<std::string> valid_focalizations(std::string_view type) const;

  /// Facets declared directly on a type, in declaration order.
  const std::vector<std::string>& own_facets(std::string_view type) const;

  /// True if the identifier appears in any facet declaration.
  bool is_declared_facet(std::string_view facet) const;

  /// All type ids in declaration order.
  std::vector<std::string> types() const;

  const std::string& parent(std::string_view type) const;  // empty for the root

 private:
  struct Node {
    std::string id;
    std::string parent;  // empty for the root
    std::vector<std::string> facets;
  };

  std::size_t index_of(std::string_view type) const;  // throws Error when absent

  std::vector<Node> nodes_;  // declaration order
  std::unordered_map<std::string, std::size_t> index_;
  std::unordered_set<std::string> declared_facets_;
  std::string root_;
};

}  // namespace denotate

#endif
