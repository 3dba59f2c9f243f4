#include "entitree/entity_tree.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <tuple>

#include "entitree/errors.hpp"
#include "entitree/parser.hpp"

namespace entitree {

std::string fnv1a_digest(const std::string& text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream out;
  out << "fnv1a:" << std::hex;
  for (int shift = 60; shift >= 0; shift -= 4)
    out << "0123456789abcdef"[(h >> shift) & 0xF];
  return out.str();
}

// --- aggregate -----------------------------------------------------------------

SceneGraph aggregate(const std::vector<SceneGraph>& scene_graphs) {
  SceneGraph fused;
  std::map<std::string, std::size_t> rel_index, attr_index;

  auto merge_mention = [](EntityMention& into, const EntityMention& from) {
    for (const auto& mod : from.modifiers) {
      if (std::find(into.modifiers.begin(), into.modifiers.end(), mod) ==
          into.modifiers.end())
        into.modifiers.push_back(mod);
    }
    into.plural = into.plural || from.plural;
    if (!into.exact_number) into.exact_number = from.exact_number;
    into.optional_flag = into.optional_flag || from.optional_flag;
  };

  for (const auto& scene : scene_graphs) {
    for (const auto& r : scene.relationships) {
      std::string key = to_lower(r.subject.head_lemma) + "\x1f" + r.predicate +
                        "\x1f" + to_lower(r.object.head_lemma);
      auto it = rel_index.find(key);
      if (it == rel_index.end()) {
        rel_index.emplace(key, fused.relationships.size());
        fused.relationships.push_back(r);
      } else {
        merge_mention(fused.relationships[it->second].subject, r.subject);
        merge_mention(fused.relationships[it->second].object, r.object);
      }
    }
    for (const auto& a : scene.attributes) {
      std::string key = to_lower(a.subject.head_lemma) + "\x1f" + a.predicate +
                        "\x1f" + a.attribute;
      auto it = attr_index.find(key);
      if (it == attr_index.end()) {
        attr_index.emplace(key, fused.attributes.size());
        fused.attributes.push_back(a);
      } else {
        merge_mention(fused.attributes[it->second].subject, a.subject);
      }
    }
  }
  return fused;
}

// --- extract_cardinality ---------------------------------------------------------

namespace {

bool surface_plural(const EntityMention& m,
                    const std::vector<Sentence>& sentences) {
  if (m.sentence_index >= sentences.size()) return false;
  const auto& tokens = sentences[m.sentence_index].tokens;
  if (m.token_index >= tokens.size()) return false;
  return tokens[m.token_index].plural;
}

std::string cardinality_mark(const EntityMention& m, bool min_side,
                             const std::vector<Sentence>& sentences) {
  bool plural = m.plural || surface_plural(m, sentences);
  if (m.optional_flag && plural) return min_side ? "0" : "*";
  if (m.optional_flag) return "0";
  if (plural) return "*";
  return "1";
}

}  // namespace

SceneGraph extract_cardinality(SceneGraph scene,
                               const std::vector<Sentence>& sentences) {
  for (auto& r : scene.relationships) {
    r.min = cardinality_mark(r.subject, true, sentences);
    r.max = cardinality_mark(r.object, false, sentences);
  }
  return scene;
}

// --- resolve_inheritance ----------------------------------------------------------

InheritanceResolution resolve_inheritance(const SceneGraph& scene) {
  InheritanceResolution res;

  // Copular triples define parents outright.
  for (std::size_t i = 0; i < scene.relationships.size(); ++i) {
    const auto& r = scene.relationships[i];
    if (r.predicate != "be") continue;
    res.consumed.insert(i);
    const std::string child = to_lower(r.subject.head_lemma);
    const std::string parent = to_lower(r.object.head_lemma);
    if (child == parent) continue;
    if (!res.parent_of.count(child)) res.parent_of[child] = parent;
  }

  // Entities mentioned by non-copular triples, for attribute promotion.
  std::set<std::string> entity_like;
  for (std::size_t i = 0; i < scene.relationships.size(); ++i) {
    if (res.consumed.count(i)) continue;
    entity_like.insert(to_lower(scene.relationships[i].subject.head_lemma));
    entity_like.insert(to_lower(scene.relationships[i].object.head_lemma));
  }
  for (const auto& a : scene.attributes) {
    if (a.attribute == kNoObject) continue;
    const std::string child = to_lower(a.subject.head_lemma);
    const std::string parent = to_lower(a.attribute);
    if (child == parent || !entity_like.count(parent)) continue;
    if (!res.parent_of.count(child)) {
      res.parent_of[child] = parent;
      res.promoted.insert({child, parent});
    }
  }

  // Cycle detection over the extends graph.
  for (const auto& [start, unused] : res.parent_of) {
    std::vector<std::string> path{start};
    std::set<std::string> seen{start};
    std::string cur = start;
    while (true) {
      auto it = res.parent_of.find(cur);
      if (it == res.parent_of.end()) break;
      cur = it->second;
      path.push_back(cur);
      if (!seen.insert(cur).second) {
        std::string msg = "inheritance cycle: ";
        for (std::size_t i = 0; i < path.size(); ++i) {
          if (i) msg += " -> ";
          msg += path[i];
        }
        throw Error(ErrorKind::InheritanceCycle, msg);
      }
    }
  }
  return res;
}

// --- assign_types -------------------------------------------------------------------

SceneGraph assign_types(SceneGraph scene, const PipelineConfig& config,
                        const InheritanceResolution& inheritance) {
  // Everything that acts as a subject anywhere is a modeled class.
  std::set<std::string> subjects;
  for (const auto& r : scene.relationships)
    subjects.insert(to_lower(r.subject.head_lemma));

  for (std::size_t i = 0; i < scene.relationships.size(); ++i) {
    if (inheritance.consumed.count(i)) continue;
    auto& r = scene.relationships[i];
    const std::string obj = to_lower(r.object.head_lemma);

    // Explicit primitive attribute ("Date", "Long", ...).
    std::vector<std::string> prims;
    for (const auto& mod : r.object.modifiers) {
      for (const auto& p : config.primitive_types) {
        if (to_lower(p) == to_lower(mod) &&
            std::find(prims.begin(), prims.end(), p) == prims.end())
          prims.push_back(p);
      }
    }
    if (prims.size() > 1) {
      throw Error(ErrorKind::AmbiguousType,
                  "object '" + r.object.head_lemma + "' carries primitives '" +
                      prims[0] + "' and '" + prims[1] + "'");
    }
    if (prims.size() == 1) {
      r.primitivity = true;
      r.type = prims[0];
      continue;
    }
    if (subjects.count(obj)) {
      r.primitivity = false;
      auto it = inheritance.parent_of.find(obj);
      r.type = it != inheritance.parent_of.end() ? it->second : obj;
      continue;
    }
    r.primitivity = true;
    r.type = "String";
  }
  return scene;
}

// --- tree assembly -----------------------------------------------------------------

namespace {

struct TreeAssembler {
  const SceneGraph& scene;
  const InheritanceResolution& inheritance;
  EntityTree tree;
  std::map<std::string, std::size_t> index_of;

  EntityComponent& ensure_entity(const std::string& lemma) {
    const std::string key = to_lower(lemma);
    auto it = index_of.find(key);
    if (it != index_of.end()) return tree.entities[it->second];
    index_of.emplace(key, tree.entities.size());
    EntityComponent e;
    e.name = key;
    tree.entities.push_back(std::move(e));
    return tree.entities.back();
  }

  void run() {
    // Entities appear in document order. Introducing events: relation
    // subjects, copular parents, non-primitive objects, and subjects of
    // placeholder attributes (verbal predications with no object). Subjects
    // of plain value attributes never introduce entities on their own.
    struct Intro {
      std::size_t sentence;
      std::size_t token;
      const std::string* lemma;
    };
    std::vector<Intro> intros;
    for (std::size_t i = 0; i < scene.relationships.size(); ++i) {
      const auto& r = scene.relationships[i];
      intros.push_back(
          {r.subject.sentence_index, r.subject.token_index, &r.subject.head_lemma});
      if (inheritance.consumed.count(i) || !r.primitivity) {
        intros.push_back(
            {r.object.sentence_index, r.object.token_index, &r.object.head_lemma});
      }
    }
    for (const auto& a : scene.attributes) {
      if (a.attribute == kNoObject)
        intros.push_back(
            {a.subject.sentence_index, a.subject.token_index, &a.subject.head_lemma});
    }
    std::stable_sort(intros.begin(), intros.end(),
                     [](const Intro& a, const Intro& b) {
                       return std::tie(a.sentence, a.token) <
                              std::tie(b.sentence, b.token);
                     });
    for (const auto& intro : intros) ensure_entity(*intro.lemma);

    // Relationships, in document order.
    for (std::size_t i = 0; i < scene.relationships.size(); ++i) {
      if (inheritance.consumed.count(i)) continue;
      const auto& r = scene.relationships[i];
      Relationship rel;
      rel.exact_number = r.subject.exact_number;
      rel.primitivity = r.primitivity;
      rel.min = r.min;
      rel.max = r.max;
      rel.object_attributes = r.object.modifiers;
      rel.object_name = to_lower(r.object.head_lemma);
      rel.relationship_type = r.predicate;
      rel.type = r.type;
      ensure_entity(r.subject.head_lemma).relationships.push_back(std::move(rel));
    }

    // Attributes: non-placeholder values, minus promoted parents.
    for (const auto& a : scene.attributes) {
      if (a.attribute == kNoObject) continue;
      const std::string subj = to_lower(a.subject.head_lemma);
      auto it = index_of.find(subj);
      if (it == index_of.end()) continue;
      if (inheritance.promoted.count({subj, to_lower(a.attribute)})) continue;
      auto& attrs = tree.entities[it->second].attributes;
      if (std::find(attrs.begin(), attrs.end(), a.attribute) == attrs.end())
        attrs.push_back(a.attribute);
    }

    // Extends links for entities we materialized.
    for (auto& e : tree.entities) {
      auto it = inheritance.parent_of.find(e.name);
      if (it != inheritance.parent_of.end()) e.extends = it->second;
    }
  }
};

}  // namespace

// --- validation ---------------------------------------------------------------------

void validate_tree(const EntityTree& tree) {
  std::set<std::string> names;
  for (const auto& e : tree.entities) {
    if (e.name.empty())
      throw Error(ErrorKind::InvalidTree, "entity with empty name");
    if (!names.insert(e.name).second)
      throw Error(ErrorKind::InvalidTree, "duplicate entity name: " + e.name);
  }
  for (const auto& e : tree.entities) {
    if (e.extends) {
      if (*e.extends == e.name)
        throw Error(ErrorKind::InvalidTree, e.name + " extends itself");
      if (!names.count(*e.extends))
        throw Error(ErrorKind::InvalidTree,
                    e.name + " extends unknown entity " + *e.extends);
    }
    for (const auto& r : e.relationships) {
      if (r.object_name.empty())
        throw Error(ErrorKind::InvalidTree, "relationship with empty object");
      if (!r.primitivity && !names.count(r.object_name))
        throw Error(ErrorKind::InvalidTree,
                    "non-primitive object '" + r.object_name +
                        "' is not an entity in the tree");
      auto mark_ok = [](const std::string& m) {
        return m == "0" || m == "1" || m == "*";
      };
      if (!mark_ok(r.min) || !mark_ok(r.max))
        throw Error(ErrorKind::InvalidTree,
                    "cardinality marks must be 0, 1 or *");
      if (r.type.empty())
        throw Error(ErrorKind::InvalidTree, "relationship with empty type");
      if (r.exact_number && *r.exact_number < 1)
        throw Error(ErrorKind::InvalidTree, "exact_number must be >= 1");
      if (r.relationship_type.empty())
        throw Error(ErrorKind::InvalidTree, "empty relationship_type");
    }
  }
  // Extends links must be acyclic.
  std::map<std::string, std::string> parent;
  for (const auto& e : tree.entities)
    if (e.extends) parent[e.name] = *e.extends;
  for (const auto& e : tree.entities) {
    std::set<std::string> seen{e.name};
    std::string cur = e.name;
    while (parent.count(cur)) {
      cur = parent[cur];
      if (!seen.insert(cur).second)
        throw Error(ErrorKind::InheritanceCycle,
                    "extends cycle through " + cur);
    }
  }
}

// --- pipeline ------------------------------------------------------------------------

PipelineRun run_pipeline(const std::string& document,
                         const PipelineConfig& config) {
  PipelineRun run;
  run.segmented = segment_document(document, config);
  for (const auto& sub : run.segmented.substitutions) {
    run.diagnostics.push_back(
        "substitution: sentence " + std::to_string(sub.sentence_index) +
        ": '" + sub.pronoun_surface + "' -> '" + sub.antecedent_text + "'");
  }

  std::vector<SceneGraph> scenes;
  std::vector<EntityMention> prior;
  for (std::size_t si = 0; si < run.segmented.sentences.size(); ++si) {
    const Sentence& s = run.segmented.sentences[si];
    DependencyGraph g;
    try {
      g = build_dependency_graph(s, config, si);
    } catch (const Error& err) {
      if (err.kind() == ErrorKind::NoExtractableContent) {
        run.diagnostics.push_back("skipped sentence " + std::to_string(si) +
                                  ": no extractable content");
        scenes.emplace_back();
        continue;
      }
      throw;
    }
    g = strip_quantificational_modifiers(std::move(g), config);
    std::size_t dropped_before = g.dropped.size();
    g = resolve_pronouns(std::move(g), prior, config);
    for (std::size_t idx : g.dropped) {
      if (g.dropped.size() > dropped_before &&
          idx < g.nodes.size() && g.nodes[idx].pos == Pos::Pronoun) {
        run.diagnostics.push_back("dropped pronoun '" +
                                  g.nodes[idx].surface + "' in sentence " +
                                  std::to_string(si));
      }
    }
    SceneGraph scene = resolve_plurals(extract_triples(g, config));
    for (const auto& m : collect_mentions(scene)) prior.push_back(m);
    scenes.push_back(std::move(scene));
  }

  run.fused = aggregate(scenes);
  run.fused = extract_cardinality(std::move(run.fused), run.segmented.sentences);
  InheritanceResolution inheritance = resolve_inheritance(run.fused);
  run.fused = assign_types(std::move(run.fused), config, inheritance);

  TreeAssembler assembler{run.fused, inheritance, {}, {}};
  assembler.run();
  run.tree = std::move(assembler.tree);
  run.tree.source_digest = fnv1a_digest(document);
  validate_tree(run.tree);
  return run;
}

EntityTree build_entity_tree(const std::string& document,
                             const PipelineConfig& config) {
  return run_pipeline(document, config).tree;
}

}  // namespace entitree
