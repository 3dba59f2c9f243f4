// Rule-based scene graph parser: dependency construction, quantificational
// modifier stripping, pronoun resolution, plural resolution, and triple
// extraction over eight construction patterns.

#ifndef ENTITREE_PARSER_HPP
#define ENTITREE_PARSER_HPP

#include <vector>

#include "entitree/config.hpp"
#include "entitree/scene_graph.hpp"
#include "entitree/token.hpp"

namespace entitree {

// Deterministic rule cascade over a tagged sentence: chunk nominal groups,
// pick the root, attach subj/obj/cop/prep/poss/acl edges by linear position.
// Throws Error(NoExtractableContent) when the sentence has no noun and no verb.
DependencyGraph build_dependency_graph(const Sentence& sentence,
                                       const PipelineConfig& config,
                                       std::size_t sentence_index = 0);

// Removes precompiled quantificational expressions ("both of", ...) and
// promotes the embedded noun to head. Idempotent.
DependencyGraph strip_quantificational_modifiers(DependencyGraph graph,
                                                 const PipelineConfig& config);

// Replaces pronoun nodes with the most recent number-agreeing prior mention;
// with no prior mentions the pronoun is dropped.
DependencyGraph resolve_pronouns(DependencyGraph graph,
                                 const std::vector<EntityMention>& prior_mentions,
                                 const PipelineConfig& config);

// Applies the eight construction patterns and emits the scene graph.
SceneGraph extract_triples(const DependencyGraph& graph,
                           const PipelineConfig& config);

// Distributive plural reading: plural mentions stay single entities; keeps
// exact_number and plural flags mutually consistent.
SceneGraph resolve_plurals(SceneGraph scene);

// Full per-sentence chain: build -> strip -> pronouns -> extract -> plurals.
SceneGraph parse_sentence(const Sentence& sentence, std::size_t sentence_index,
                          const std::vector<EntityMention>& prior_mentions,
                          const PipelineConfig& config);

// Mentions of a scene graph in document order, for pronoun resolution state.
std::vector<EntityMention> collect_mentions(const SceneGraph& scene);

}  // namespace entitree

#endif  // ENTITREE_PARSER_HPP
