// Canonical JSON serialization of the Entity Tree.

#ifndef ENTITREE_JSON_IO_HPP
#define ENTITREE_JSON_IO_HPP

#include <string>

#include "entitree/entity_tree.hpp"

namespace entitree {

// Canonical form: keys sorted, entities in document order, every field
// present (null for absent optionals), two-space indent, trailing newline.
std::string to_json(const EntityTree& tree);

// Inverse of to_json. Schema violations raise Error(SchemaError) with the
// JSON path; well-formed JSON encoding an invalid tree raises
// Error(InvalidTree) / Error(InheritanceCycle).
EntityTree from_json(const std::string& text);

}  // namespace entitree

#endif  // ENTITREE_JSON_IO_HPP
