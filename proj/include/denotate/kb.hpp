#ifndef DENOTATE_KB_HPP
#define DENOTATE_KB_HPP

#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "denotate/hierarchy.hpp"

namespace denotate {

inline const std::string kAttrIsLocatedIn = "IsLocatedIn";
inline const std::string kAttrIsComposedOf = "IsComposedOf";
inline const std::string kAttrIsLeadedBy = "IsLeadedBy";
inline const std::string kAttrKindOf = "KindOf";

/// Internal spaces and underscores are interchangeable in entity ids and
/// attribute values; this is the canonical key form.
std::string normalize_key(std::string_view value);

/// Attribute/value record for one canonical entity.
struct EntityTemplate {
  std::string entity_id;
  std::string entity_type;
  /// Attribute name -> values, in declaration order.
  std::vector<std::pair<std::string, std::vector<std::string>>> attributes;

  const std::vector<std::string>* find(std::string_view attribute) const;
};

/// Read-only store of entity templates with an inverted (attribute, value)
/// index for attribute inversion queries.
class TemplateStore {
 public:
  /// Record blocks separated by blank lines:
  ///   entity<TAB>id<TAB>type
  ///   attr<TAB>Name<TAB>value[ && value...]
  /// KindOf values that name a declared facet must be valid focalizations of
  /// the entity's type.
  static TemplateStore load(std::istream& in, const TypeHierarchy& hierarchy,
                            const std::string& source = "<stream>");
  static TemplateStore load_file(const std::string& path, const TypeHierarchy& hierarchy);

  /// Deterministic file-format rendering; load(serialize()) round-trips.
  std::string serialize() const;

  /// Exact-match retrieval after underscore/space normalization; nullptr when
  /// absent. Ids are case-sensitive.
  const EntityTemplate* lookup(std::string_view entity_id) const;

  /// All entity ids whose template carries the value (normalized) under the
  /// attribute. Unknown attributes yield the empty set.
  std::set<std::string> invert(std::string_view attribute, std::string_view value) const;

  const std::vector<EntityTemplate>& templates() const { return templates_; }
  bool empty() const { return templates_.empty(); }

  /// (attribute, normalized value) -> entity ids. Exposed for the
  /// rebuild-and-compare consistency check.
  const std::map<std::pair<std::string, std::string>, std::set<std::string>>& inverted() const {
    return inverted_;
  }

 private:
  std::vector<EntityTemplate> templates_;  // declaration order
  std::map<std::string, std::size_t> by_key_;  // normalized id -> index
  std::map<std::pair<std::string, std::string>, std::set<std::string>> inverted_;
};

}  // namespace denotate

#endif
