// PlantUML class diagram emitter.

#ifndef ENTITREE_PLANTUML_HPP
#define ENTITREE_PLANTUML_HPP

#include <string>

#include "entitree/entity_tree.hpp"

namespace entitree {

// One class block per entity; primitive relationships become typed fields,
// the rest become labeled association arrows with multiplicities; extends
// becomes a generalization arrow.
std::string to_plantuml(const EntityTree& tree);

// UpperCamelCase class name of a lemma ("customer" -> "Customer").
std::string class_name(const std::string& lemma);

}  // namespace entitree

#endif  // ENTITREE_PLANTUML_HPP
