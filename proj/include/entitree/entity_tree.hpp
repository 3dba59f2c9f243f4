// The Entity Tree: aggregation of per-sentence scene graphs, cardinality
// extraction, inheritance resolution and type description.

#ifndef ENTITREE_ENTITY_TREE_HPP
#define ENTITREE_ENTITY_TREE_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "entitree/config.hpp"
#include "entitree/scene_graph.hpp"
#include "entitree/segmentation.hpp"

namespace entitree {

// One relationship entry: the eight-item dictionary attached to a subject
// entity.
struct Relationship {
  std::optional<long> exact_number;  // exact count of subject entities
  bool primitivity = false;
  std::string min;  // cardinality mark on the subject side: "0", "1", "*"
  std::string max;  // cardinality mark on the object side
  std::vector<std::string> object_attributes;
  std::string object_name;
  std::string relationship_type;  // predicate lemma
  std::string type;  // parent class, primitive type, or "String"

  bool operator==(const Relationship&) const = default;
};

struct EntityComponent {
  std::string name;
  std::vector<std::string> attributes;
  std::optional<std::string> extends;
  std::vector<Relationship> relationships;

  bool operator==(const EntityComponent&) const = default;
};

struct EntityTree {
  std::vector<EntityComponent> entities;  // document order
  std::string source_digest;

  bool operator==(const EntityTree&) const = default;
};

// --- operations ---------------------------------------------------------------

// Fuses per-sentence scene graphs: triples are unioned with set semantics,
// document order preserved.
SceneGraph aggregate(const std::vector<SceneGraph>& scene_graphs);

// Annotates each relationship with min (subject side) and max (object side)
// marks, consulting the original sentences for surface plurality.
SceneGraph extract_cardinality(SceneGraph scene,
                               const std::vector<Sentence>& sentences);

struct InheritanceResolution {
  std::map<std::string, std::string> parent_of;
  std::set<std::size_t> consumed;  // indices of copular relation triples
  std::set<std::pair<std::string, std::string>> promoted;  // (child, parent)
};

// Copular "be" triples become extends links; a noun attribute is promoted to
// parent only when it is mentioned elsewhere as an entity.
// Throws Error(InheritanceCycle) with the cycle path.
InheritanceResolution resolve_inheritance(const SceneGraph& scene);

// Fills type and primitivity per relationship.
// Throws Error(AmbiguousType) when an object carries two distinct primitive
// attributes.
SceneGraph assign_types(SceneGraph scene, const PipelineConfig& config,
                        const InheritanceResolution& inheritance);

// Full pipeline: segmentation -> per-sentence parsing -> aggregation ->
// cardinality -> inheritance -> types -> tree assembly.
EntityTree build_entity_tree(const std::string& document,
                             const PipelineConfig& config);

struct PipelineRun {
  EntityTree tree;
  SegmentedDocument segmented;
  SceneGraph fused;
  std::vector<std::string> diagnostics;
};

// build_entity_tree plus the intermediate products and a diagnostics log,
// for the command line front end.
PipelineRun run_pipeline(const std::string& document,
                         const PipelineConfig& config);

// Checks every EntityTree invariant; throws Error(InvalidTree).
void validate_tree(const EntityTree& tree);

// Stable content hash for source_digest ("fnv1a:" + 16 hex digits).
std::string fnv1a_digest(const std::string& text);

}  // namespace entitree

#endif  // ENTITREE_ENTITY_TREE_HPP
