#ifndef DENOTATE_ERROR_HPP
#define DENOTATE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace denotate {

/// Base class for all engine errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised while loading a hierarchy, lexicon, template store or gold file.
/// The kind identifies which validation failed; the message carries the
/// offending file, line and identifier.
struct LoadError : Error {
  enum class Kind {
    Io,                // file missing or unreadable
    Malformed,         // bad line shape, bad field value, bad encoding
    DuplicateNode,     // hierarchy: type declared twice
    Cycle,             // hierarchy: parent chain does not reach the root
    UndeclaredParent,  // hierarchy: parent never declared as a type
    UndeclaredFacet,   // hierarchy: facet attached to an undeclared type
    DuplicateConflict, // gazetteer: one surface mapped to two types
    UnknownType,       // resource references a type absent from the hierarchy
    UnknownFacet,      // trigger/template facet not valid for its type
    DuplicateRule,     // trigger rule_id declared twice
    DuplicateEntity,   // template entity_id declared twice
  };

  LoadError(Kind kind, const std::string& message) : Error(message), kind(kind) {}

  Kind kind;
};

}  // namespace denotate

#endif
