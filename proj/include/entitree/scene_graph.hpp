// Per-sentence intermediate representation: dependency graph, entity
// mentions, and the scene graph of relation and attribute triples.

#ifndef ENTITREE_SCENE_GRAPH_HPP
#define ENTITREE_SCENE_GRAPH_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "entitree/token.hpp"

namespace entitree {

enum class DepLabel {
  Subj,
  Obj,
  Amod,
  Cop,
  Prep,
  Pobj,
  Poss,
  SubjPass,
  Acl,
  Det,
  Num,
  Other,
};

const char* dep_label_name(DepLabel l);

struct DepEdge {
  std::size_t head = 0;
  std::size_t dependent = 0;
  DepLabel label = DepLabel::Other;
};

// Quantifier information attached to a promoted head noun.
struct QuantMark {
  std::optional<long> exact_number;
  bool forced_plural = false;
};

struct DependencyGraph {
  std::vector<Token> nodes;
  std::vector<DepEdge> edges;
  std::size_t root_index = 0;
  std::size_t sentence_index = 0;
  std::map<std::size_t, QuantMark> quant;  // node index -> quantifier mark
  std::set<std::size_t> dropped;           // nodes excluded from extraction

  bool has_edge(std::size_t head, std::size_t dep, DepLabel label) const;
  std::optional<std::size_t> dependent_of(std::size_t head, DepLabel label) const;
  std::vector<std::size_t> dependents_of(std::size_t head, DepLabel label) const;
};

struct EntityMention {
  std::string head_lemma;
  std::vector<std::string> modifiers;  // ordered, no duplicates
  bool plural = false;
  std::optional<long> exact_number;
  bool optional_flag = false;
  std::size_t sentence_index = 0;
  std::size_t token_index = 0;
};

struct RelationTriple {
  EntityMention subject;
  std::string predicate;  // lemma, possibly compound ("sit_on")
  EntityMention object;
  // Filled by the cardinality and type stages.
  std::string min;
  std::string max;
  bool primitivity = false;
  std::string type;
};

// Placeholder object for subject-predicate constructions with no object.
inline const char* kNoObject = "—";

struct AttributeTriple {
  EntityMention subject;
  std::string predicate;
  std::string attribute;
};

struct SceneGraph {
  std::vector<RelationTriple> relationships;
  std::vector<AttributeTriple> attributes;
};

}  // namespace entitree

#endif  // ENTITREE_SCENE_GRAPH_HPP
