#include "entitree/parser.hpp"

#include <algorithm>
#include <optional>
#include <tuple>

#include "entitree/errors.hpp"

namespace entitree {

const char* dep_label_name(DepLabel l) {
  switch (l) {
    case DepLabel::Subj:     return "subj";
    case DepLabel::Obj:      return "obj";
    case DepLabel::Amod:     return "amod";
    case DepLabel::Cop:      return "cop";
    case DepLabel::Prep:     return "prep";
    case DepLabel::Pobj:     return "pobj";
    case DepLabel::Poss:     return "poss";
    case DepLabel::SubjPass: return "subj_pass";
    case DepLabel::Acl:      return "acl";
    case DepLabel::Det:      return "det";
    case DepLabel::Num:      return "num";
    case DepLabel::Other:    return "other";
  }
  return "other";
}

bool DependencyGraph::has_edge(std::size_t head, std::size_t dep,
                               DepLabel label) const {
  return std::any_of(edges.begin(), edges.end(), [&](const DepEdge& e) {
    return e.head == head && e.dependent == dep && e.label == label;
  });
}

std::optional<std::size_t> DependencyGraph::dependent_of(std::size_t head,
                                                         DepLabel label) const {
  for (const auto& e : edges)
    if (e.head == head && e.label == label) return e.dependent;
  return std::nullopt;
}

std::vector<std::size_t> DependencyGraph::dependents_of(std::size_t head,
                                                        DepLabel label) const {
  std::vector<std::size_t> out;
  for (const auto& e : edges)
    if (e.head == head && e.label == label) out.push_back(e.dependent);
  return out;
}

namespace {

struct Chunk {
  std::size_t begin = 0;  // token range [begin, end)
  std::size_t end = 0;
  std::size_t head = 0;   // head token index
  bool absorbed = false;  // owner side of a possessive
  bool is_pobj = false;
  bool is_object = false;
  bool is_complement = false;
  bool used_as_subject = false;
};

enum class PredKind { Verbal, Copular, Passive, Progressive };

struct Predicate {
  std::size_t verb = 0;                  // main token (verb or copula)
  PredKind kind = PredKind::Verbal;
  std::optional<std::size_t> copula;     // for passive/progressive pairs
  std::optional<std::size_t> clause_head;  // acl: the modified noun
  std::size_t clause_begin = 0;          // clause token range, main preds: 0..n
  std::size_t clause_end = 0;
};

bool is_possessive_pronoun(const std::string& lower) {
  return lower == "its" || lower == "his" || lower == "her" ||
         lower == "their" || lower == "my" || lower == "your" ||
         lower == "our";
}

bool is_relative_pronoun(const std::string& lower) {
  return lower == "that" || lower == "who" || lower == "which" ||
         lower == "whom";
}

bool chunkable_start(const Token& t) {
  return t.pos == Pos::Determiner || t.pos == Pos::Adjective ||
         t.pos == Pos::Noun || t.pos == Pos::Number ||
         (t.pos == Pos::Pronoun && !is_relative_pronoun(to_lower(t.surface)));
}

bool chunkable_continue(const Token& t) {
  return t.pos == Pos::Adjective || t.pos == Pos::Noun || t.pos == Pos::Number;
}

// True when every token in (a, b) is a comma or a conjunction, with at least
// one of them present.
bool conjunction_gap(const std::vector<Token>& tokens, std::size_t a,
                     std::size_t b) {
  if (a >= b) return false;
  bool any = false;
  for (std::size_t i = a; i < b; ++i) {
    if (tokens[i].surface == "," || tokens[i].pos == Pos::Conjunction) {
      any = true;
      continue;
    }
    return false;
  }
  return any;
}

bool participle_like(const Token& t) {
  const std::string lower = to_lower(t.surface);
  if (lower.size() > 3 && lower.ends_with("ing")) return false;
  return lower != t.lemma || lower.ends_with("ed") || lower.ends_with("en");
}

}  // namespace

DependencyGraph build_dependency_graph(const Sentence& sentence,
                                       [[maybe_unused]] const PipelineConfig& config,
                                       std::size_t sentence_index) {
  const auto& tokens = sentence.tokens;
  DependencyGraph g;
  g.nodes = tokens;
  g.sentence_index = sentence_index;

  bool has_noun = std::any_of(tokens.begin(), tokens.end(), [](const Token& t) {
    return t.pos == Pos::Noun || t.pos == Pos::Pronoun;
  });
  bool has_verb = std::any_of(tokens.begin(), tokens.end(), [](const Token& t) {
    return t.pos == Pos::Verb || t.pos == Pos::Copula;
  });
  if (!has_noun && !has_verb)
    throw Error(ErrorKind::NoExtractableContent,
                "sentence has no noun and no verb: " + sentence.text);

  const std::size_t n = tokens.size();

  // ---- 1. chunk nominal groups --------------------------------------------
  std::vector<Chunk> chunks;
  std::vector<std::optional<std::size_t>> chunk_of(n);
  {
    std::size_t i = 0;
    while (i < n) {
      if (!chunkable_start(tokens[i])) {
        ++i;
        continue;
      }
      Chunk c;
      c.begin = i;
      std::size_t last_noun = n, last_any = i;
      std::size_t j = i;
      bool pronoun_chunk = tokens[i].pos == Pos::Pronoun &&
                           !is_possessive_pronoun(to_lower(tokens[i].surface));
      if (pronoun_chunk) {
        c.head = i;
        c.end = i + 1;
        chunks.push_back(c);
        chunk_of[i] = chunks.size() - 1;
        ++i;
        continue;
      }
      while (j < n) {
        const Token& t = tokens[j];
        bool ok = j == i ? chunkable_start(t) : chunkable_continue(t);
        if (!ok) break;
        if (t.pos == Pos::Noun) last_noun = j;
        last_any = j;
        ++j;
      }
      c.end = j;
      if (last_noun != n) {
        c.head = last_noun;
      } else {
        c.head = last_any;  // degenerate: determiner, adjective or number head
      }
      chunks.push_back(c);
      for (std::size_t k = c.begin; k < c.end; ++k)
        chunk_of[k] = chunks.size() - 1;
      i = j;
    }
  }

  // Possessives: [owner] 's [owned] merges into one nominal with a poss edge;
  // a possessive pronoun folds into the chunk to its right.
  for (std::size_t ci = 0; ci + 1 < chunks.size(); ++ci) {
    Chunk& owner = chunks[ci];
    Chunk& owned = chunks[ci + 1];
    if (owner.end < n && tokens[owner.end].surface == "'s" &&
        owned.begin == owner.end + 1) {
      g.edges.push_back({owned.head, owner.head, DepLabel::Poss});
      owner.absorbed = true;
    }
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (tokens[i].pos == Pos::Pronoun &&
        is_possessive_pronoun(to_lower(tokens[i].surface)) && chunk_of[i + 1] &&
        !chunk_of[i]) {
      g.edges.push_back(
          {chunks[*chunk_of[i + 1]].head, i, DepLabel::Poss});
    }
  }

  // ---- 2. relative clauses -------------------------------------------------
  std::vector<Predicate> predicates;
  std::vector<bool> in_clause(n, false);
  std::vector<bool> is_clause_verb(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (tokens[i].pos != Pos::Pronoun ||
        !is_relative_pronoun(to_lower(tokens[i].surface)))
      continue;
    if (i == 0 || !chunk_of[i - 1]) continue;
    // Next non-adverb token must be a verb.
    std::size_t v = i + 1;
    while (v < n && tokens[v].pos == Pos::Adverb) ++v;
    if (v >= n || (tokens[v].pos != Pos::Verb && tokens[v].pos != Pos::Copula))
      continue;
    // Clause runs until the next verb outside it (the main predicate) or end.
    std::size_t end = v + 1;
    while (end < n && tokens[end].pos != Pos::Verb &&
           tokens[end].pos != Pos::Copula)
      ++end;
    Predicate p;
    p.verb = v;
    p.kind = PredKind::Verbal;
    p.clause_head = chunks[*chunk_of[i - 1]].head;
    p.clause_begin = i;
    p.clause_end = end;
    predicates.push_back(p);
    is_clause_verb[v] = true;
    for (std::size_t k = i; k < end; ++k) in_clause[k] = true;
    g.edges.push_back({*p.clause_head, v, DepLabel::Acl});
  }

  // ---- 3. main predicates ---------------------------------------------------
  std::vector<std::size_t> main_pred_ids;
  for (std::size_t i = 0; i < n; ++i) {
    if (in_clause[i] || chunk_of[i]) continue;
    if (tokens[i].pos == Pos::Copula) {
      // Copula + participle = passive; copula + -ing verb = progressive.
      std::size_t v = i + 1;
      while (v < n && tokens[v].pos == Pos::Adverb) ++v;
      if (v < n && tokens[v].pos == Pos::Verb && !in_clause[v]) {
        Predicate p;
        p.verb = v;
        p.copula = i;
        p.kind = participle_like(tokens[v]) ? PredKind::Passive
                                            : PredKind::Progressive;
        predicates.push_back(p);
        main_pred_ids.push_back(predicates.size() - 1);
        i = v;  // consume both
        continue;
      }
      Predicate p;
      p.verb = i;
      p.kind = PredKind::Copular;
      predicates.push_back(p);
      main_pred_ids.push_back(predicates.size() - 1);
    } else if (tokens[i].pos == Pos::Verb) {
      Predicate p;
      p.verb = i;
      p.kind = PredKind::Verbal;
      predicates.push_back(p);
      main_pred_ids.push_back(predicates.size() - 1);
    }
  }

  // Root: first main predicate, else the first usable chunk head.
  if (!main_pred_ids.empty()) {
    g.root_index = predicates[main_pred_ids.front()].verb;
  } else {
    std::size_t root = n;
    for (const Chunk& c : chunks) {
      if (!c.absorbed) {
        root = c.head;
        break;
      }
    }
    if (root == n) {
      // Clause verb or nothing at all.
      if (!predicates.empty())
        root = predicates.front().verb;
      else
        throw Error(ErrorKind::NoExtractableContent,
                    "no predicate or nominal head: " + sentence.text);
    }
    g.root_index = root;
  }

  // ---- 4. prepositions ------------------------------------------------------
  // Governor: the nearest predicate to the left when only its direct-object
  // material intervenes; otherwise the nearest nominal head to the left.
  struct PrepInfo {
    std::size_t prep;
    std::size_t governor;
    std::optional<std::size_t> pobj_chunk;
  };
  std::vector<PrepInfo> preps;
  for (std::size_t i = 0; i < n; ++i) {
    if (tokens[i].pos != Pos::Preposition || chunk_of[i]) continue;
    PrepInfo info;
    info.prep = i;

    // Object of the preposition: a chunk starting right after it.
    std::size_t after = i + 1;
    while (after < n && tokens[after].pos == Pos::Adverb) ++after;
    if (after < n && chunk_of[after] && chunks[*chunk_of[after]].begin == after) {
      info.pobj_chunk = *chunk_of[after];
      chunks[*chunk_of[after]].is_pobj = true;
    }

    // Nearest predicate to the left within the same clause region.
    std::optional<std::size_t> left_pred;
    for (const auto& p : predicates) {
      if (p.verb < i && in_clause[p.verb] == in_clause[i] &&
          (!left_pred || p.verb > *left_pred))
        left_pred = p.verb;
    }
    bool pobj_between = false;
    std::size_t non_pobj_chunks = 0;
    if (left_pred) {
      for (std::size_t ci = 0; ci < chunks.size(); ++ci) {
        const Chunk& c = chunks[ci];
        if (c.begin > *left_pred && c.end <= i && !c.absorbed) {
          if (c.is_pobj)
            pobj_between = true;
          else
            ++non_pobj_chunks;
        }
      }
    }
    if (left_pred && !pobj_between && non_pobj_chunks <= 1) {
      info.governor = *left_pred;
    } else {
      // Nearest nominal head to the left.
      std::optional<std::size_t> noun_head;
      for (const Chunk& c : chunks) {
        if (c.end <= i && !c.absorbed) noun_head = c.head;
      }
      if (noun_head) {
        info.governor = *noun_head;
      } else if (left_pred) {
        info.governor = *left_pred;
      } else {
        info.governor = g.root_index;
      }
    }
    if (info.governor != i) {
      g.edges.push_back({info.governor, i, DepLabel::Prep});
      if (info.pobj_chunk)
        g.edges.push_back(
            {i, chunks[*info.pobj_chunk].head, DepLabel::Pobj});
      preps.push_back(info);
    }
  }

  // ---- 5. subjects, objects, complements ------------------------------------
  auto chunk_eligible = [&](const Chunk& c) {
    return !c.absorbed && !c.is_pobj;
  };
  auto expand_chain_left = [&](std::size_t ci) {
    std::vector<std::size_t> ids{ci};
    while (ids.front() > 0) {
      std::size_t prev = ids.front() - 1;
      if (chunk_eligible(chunks[prev]) &&
          conjunction_gap(tokens, chunks[prev].end, chunks[ids.front()].begin))
        ids.insert(ids.begin(), prev);
      else
        break;
    }
    return ids;
  };
  auto expand_chain_right = [&](std::size_t ci, std::size_t limit) {
    std::vector<std::size_t> ids{ci};
    while (ids.back() + 1 < chunks.size()) {
      std::size_t next = ids.back() + 1;
      if (chunks[next].begin >= limit) break;
      if (chunk_eligible(chunks[next]) &&
          conjunction_gap(tokens, chunks[ids.back()].end, chunks[next].begin))
        ids.push_back(next);
      else
        break;
    }
    return ids;
  };

  for (std::size_t mi = 0; mi < main_pred_ids.size(); ++mi) {
    Predicate& p = predicates[main_pred_ids[mi]];
    std::size_t anchor = p.copula ? *p.copula : p.verb;

    // Subject: nearest eligible chunk to the left, not already consumed.
    std::optional<std::size_t> subj_chunk;
    for (std::size_t ci = 0; ci < chunks.size(); ++ci) {
      const Chunk& c = chunks[ci];
      if (c.end <= anchor && chunk_eligible(c) && !c.is_object &&
          !c.is_complement && !in_clause[c.head])
        subj_chunk = ci;
    }
    if (!subj_chunk && mi > 0) {
      // Coordinated predicate shares the first predicate's subject.
      const Predicate& first = predicates[main_pred_ids.front()];
      for (const auto& e : g.edges) {
        if (e.head == first.verb &&
            (e.label == DepLabel::Subj || e.label == DepLabel::SubjPass)) {
          g.edges.push_back({p.verb, e.dependent,
                             p.kind == PredKind::Passive ? DepLabel::SubjPass
                                                         : DepLabel::Subj});
        }
      }
    }
    if (subj_chunk) {
      for (std::size_t ci : expand_chain_left(*subj_chunk)) {
        chunks[ci].used_as_subject = true;
        g.edges.push_back({p.verb, chunks[ci].head,
                           p.kind == PredKind::Passive ? DepLabel::SubjPass
                                                       : DepLabel::Subj});
      }
    }

    // Right-hand side: direct object (verbal) or complement (copular).
    std::size_t next_pred_tok = n;
    if (mi + 1 < main_pred_ids.size())
      next_pred_tok = predicates[main_pred_ids[mi + 1]].copula
                          ? *predicates[main_pred_ids[mi + 1]].copula
                          : predicates[main_pred_ids[mi + 1]].verb;
    if (p.kind == PredKind::Passive) continue;  // patient is the subj_pass

    std::optional<std::size_t> rhs_chunk;
    for (std::size_t i = p.verb + 1; i < next_pred_tok; ++i) {
      if (tokens[i].pos == Pos::Adverb) continue;
      if (tokens[i].pos == Pos::Preposition) break;
      if (tokens[i].pos == Pos::Conjunction) {
        // A conjunction that introduces another predicate ends the search.
        bool verb_follows = false;
        for (std::size_t k = i + 1; k < n; ++k)
          if ((tokens[k].pos == Pos::Verb || tokens[k].pos == Pos::Copula) &&
              !in_clause[k] && !chunk_of[k]) {
            verb_follows = true;
            break;
          }
        if (verb_follows) break;
        continue;
      }
      if (chunk_of[i]) {
        if (chunk_eligible(chunks[*chunk_of[i]]))
          rhs_chunk = *chunk_of[i];
        break;
      }
      if (tokens[i].pos == Pos::Other) continue;
      break;
    }
    if (rhs_chunk) {
      auto chain = expand_chain_right(*rhs_chunk, next_pred_tok);
      for (std::size_t ci : chain) {
        if (p.kind == PredKind::Copular) {
          chunks[ci].is_complement = true;
          g.edges.push_back({p.verb, chunks[ci].head, DepLabel::Cop});
        } else {
          chunks[ci].is_object = true;
          g.edges.push_back({p.verb, chunks[ci].head, DepLabel::Obj});
        }
      }
    }
  }

  // Clause-verb objects.
  for (auto& p : predicates) {
    if (!p.clause_head) continue;
    for (std::size_t i = p.verb + 1; i < p.clause_end; ++i) {
      if (tokens[i].pos == Pos::Adverb) continue;
      if (tokens[i].pos == Pos::Preposition) break;
      if (chunk_of[i]) {
        Chunk& c = chunks[*chunk_of[i]];
        if (chunk_eligible(c)) {
          c.is_object = true;
          g.edges.push_back({p.verb, c.head, DepLabel::Obj});
        }
        break;
      }
    }
  }

  // ---- 6. in-chunk edges ----------------------------------------------------
  for (const Chunk& c : chunks) {
    for (std::size_t i = c.begin; i < c.end; ++i) {
      if (i == c.head) continue;
      const Token& t = tokens[i];
      if (t.pos == Pos::Determiner)
        g.edges.push_back({c.head, i, DepLabel::Det});
      else if (t.pos == Pos::Number)
        g.edges.push_back({c.head, i, DepLabel::Num});
      else if (t.pos == Pos::Adjective || t.pos == Pos::Noun)
        g.edges.push_back({c.head, i, DepLabel::Amod});
    }
  }

  // ---- 7. connectivity ------------------------------------------------------
  std::vector<bool> attached(n, false);
  attached[g.root_index] = true;
  for (const auto& e : g.edges) {
    attached[e.head] = true;
    attached[e.dependent] = true;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!attached[i] && i != g.root_index)
      g.edges.push_back({g.root_index, i, DepLabel::Other});
  }

  return g;
}

// --- strip_quantificational_modifiers ----------------------------------------

DependencyGraph strip_quantificational_modifiers(DependencyGraph graph,
                                                 const PipelineConfig& config) {
  const auto& tokens = graph.nodes;
  for (const std::string& expr : config.quantificational_modifiers) {
    // Expression words, lowercased.
    std::vector<std::string> words;
    {
      std::size_t b = 0;
      while (b < expr.size()) {
        std::size_t e = expr.find(' ', b);
        if (e == std::string::npos) e = expr.size();
        if (e > b) words.push_back(to_lower(expr.substr(b, e - b)));
        b = e + 1;
      }
    }
    if (words.empty()) continue;

    for (std::size_t start = 0; start + words.size() <= tokens.size(); ++start) {
      bool match = true;
      for (std::size_t k = 0; k < words.size(); ++k) {
        if (to_lower(tokens[start + k].surface) != words[k]) {
          match = false;
          break;
        }
      }
      if (!match) continue;
      std::size_t last = start + words.size() - 1;  // the "of" token
      // The embedded noun is the object of the final preposition. Absent
      // pobj means the expression was already stripped (idempotence).
      auto embedded = graph.dependent_of(last, DepLabel::Pobj);
      if (!embedded) continue;

      auto in_expr = [&](std::size_t idx) {
        return idx >= start && idx <= last;
      };
      std::vector<DepEdge> kept;
      for (DepEdge e : graph.edges) {
        if (in_expr(e.head) && e.dependent == *embedded) continue;  // pobj link
        if (in_expr(e.head) && in_expr(e.dependent)) continue;
        if (in_expr(e.dependent) && !in_expr(e.head)) {
          e.dependent = *embedded;  // promote: edges into the expression
        } else if (in_expr(e.head)) {
          continue;  // edges out of the expression vanish with it
        }
        kept.push_back(e);
      }
      graph.edges = std::move(kept);
      for (std::size_t k = start; k <= last; ++k) graph.dropped.insert(k);
      if (graph.root_index >= start && graph.root_index <= last)
        graph.root_index = *embedded;

      QuantMark& mark = graph.quant[*embedded];
      std::string lowered = to_lower(expr);
      if (lowered == "both of") {
        mark.exact_number = 2;
        mark.forced_plural = true;
      } else if (lowered == "a couple of") {
        mark.exact_number = 2;
        mark.forced_plural = true;
      } else if (lowered == "a bunch of" || lowered == "a lot of" ||
                 lowered == "a number of") {
        mark.forced_plural = true;
      }
      // "some of" / "all of" keep the embedded noun's own number.
    }
  }
  return graph;
}

// --- resolve_pronouns ----------------------------------------------------------

namespace {

bool resolvable_pronoun_lemma(const std::string& lemma) {
  return lemma == "it" || lemma == "they" || lemma == "he" || lemma == "she" ||
         lemma == "this" || lemma == "these" || lemma == "those";
}

bool pronoun_plural(const std::string& surface_lower, const Lexicon& lex) {
  auto it = lex.entries().find(surface_lower);
  if (it == lex.entries().end()) return false;
  for (const auto& e : it->second)
    if (e.pos == Pos::Pronoun) return e.plural;
  return false;
}

}  // namespace

DependencyGraph resolve_pronouns(DependencyGraph graph,
                                 const std::vector<EntityMention>& prior_mentions,
                                 const PipelineConfig& config) {
  for (std::size_t i = 0; i < graph.nodes.size(); ++i) {
    Token& t = graph.nodes[i];
    if (t.pos != Pos::Pronoun || graph.dropped.count(i)) continue;
    if (is_relative_pronoun(to_lower(t.surface))) continue;
    if (!resolvable_pronoun_lemma(t.lemma)) continue;

    if (prior_mentions.empty()) {
      graph.dropped.insert(i);
      continue;
    }
    bool want_plural = pronoun_plural(to_lower(t.surface), config.lexicon);
    const EntityMention* chosen = nullptr;
    for (auto it = prior_mentions.rbegin(); it != prior_mentions.rend(); ++it) {
      if (it->plural == want_plural) {
        chosen = &*it;
        break;
      }
    }
    if (chosen == nullptr) chosen = &prior_mentions.back();

    t.surface = chosen->head_lemma;
    t.lemma = chosen->head_lemma;
    t.pos = Pos::Noun;
    t.plural = chosen->plural;
    t.numeric_value.reset();
  }
  return graph;
}

// --- extract_triples -------------------------------------------------------------

namespace {

bool quantifier_adjective(const Token& t, const Lexicon& lex) {
  if (t.pos != Pos::Adjective) return false;
  auto it = lex.entries().find(to_lower(t.surface));
  if (it == lex.entries().end()) return false;
  for (const auto& e : it->second)
    if (e.pos == Pos::Adjective) return e.plural;
  return false;
}

struct MentionBuilder {
  const DependencyGraph& g;
  const PipelineConfig& cfg;

  std::optional<EntityMention> build(std::size_t idx) const {
    const Token& t = g.nodes[idx];
    if (g.dropped.count(idx)) return std::nullopt;
    if (t.pos != Pos::Noun) return std::nullopt;
    if (t.lemma.empty()) return std::nullopt;

    EntityMention m;
    m.head_lemma = t.lemma;
    m.plural = t.plural;
    m.sentence_index = g.sentence_index;
    m.token_index = idx;

    std::vector<std::size_t> mods = g.dependents_of(idx, DepLabel::Amod);
    std::sort(mods.begin(), mods.end());
    for (std::size_t d : mods) {
      const Token& mt = g.nodes[d];
      if (g.dropped.count(d)) continue;
      if (to_lower(mt.surface) == "optional") {
        m.optional_flag = true;
        continue;
      }
      if (quantifier_adjective(mt, cfg.lexicon)) {
        m.plural = true;
        continue;
      }
      if (std::find(m.modifiers.begin(), m.modifiers.end(), mt.lemma) ==
          m.modifiers.end())
        m.modifiers.push_back(mt.lemma);
    }
    for (std::size_t d : g.dependents_of(idx, DepLabel::Num)) {
      if (g.nodes[d].numeric_value && *g.nodes[d].numeric_value >= 1)
        m.exact_number = *g.nodes[d].numeric_value;
    }
    auto qit = g.quant.find(idx);
    if (qit != g.quant.end()) {
      if (qit->second.exact_number) m.exact_number = qit->second.exact_number;
      if (qit->second.forced_plural) m.plural = true;
    }
    if (m.exact_number) m.plural = *m.exact_number > 1;
    return m;
  }
};

std::string attribute_value_filter(const Token& t, const PipelineConfig& cfg) {
  if (to_lower(t.surface) == "optional") return "";
  if (quantifier_adjective(t, cfg.lexicon)) return "";
  return t.lemma;
}

}  // namespace

SceneGraph extract_triples(const DependencyGraph& g,
                           const PipelineConfig& config) {
  SceneGraph scene;
  MentionBuilder mb{g, config};

  // Dropped or unresolved pronoun root: nothing extractable.
  if (g.nodes.empty()) return scene;

  std::set<std::string> rel_keys, attr_keys;
  auto add_relation = [&](const EntityMention& s, const std::string& pred,
                          const EntityMention& o) {
    std::string key = s.head_lemma + "\x1f" + pred + "\x1f" + o.head_lemma;
    if (rel_keys.insert(key).second)
      scene.relationships.push_back({s, pred, o, "", "", false, ""});
  };
  auto add_attribute = [&](const EntityMention& s, const std::string& pred,
                           const std::string& value) {
    if (value.empty()) return;
    std::string key = s.head_lemma + "\x1f" + pred + "\x1f" + value;
    if (attr_keys.insert(key).second)
      scene.attributes.push_back({s, pred, value});
  };

  // Pattern 1: adjectival (and nominal) modifiers.
  for (const auto& e : g.edges) {
    if (e.label != DepLabel::Amod) continue;
    auto subj = mb.build(e.head);
    if (!subj) continue;
    if (g.dropped.count(e.dependent)) continue;
    add_attribute(*subj, "is",
                  attribute_value_filter(g.nodes[e.dependent], config));
  }

  // Per-predicate patterns. A predicate is any node with subj/subj_pass/cop
  // edges out of it, or an acl head's clause verb.
  std::set<std::size_t> predicate_nodes;
  for (const auto& e : g.edges) {
    if (e.label == DepLabel::Subj || e.label == DepLabel::SubjPass ||
        e.label == DepLabel::Cop || e.label == DepLabel::Obj)
      predicate_nodes.insert(e.head);
    if (e.label == DepLabel::Acl) predicate_nodes.insert(e.dependent);
  }

  for (std::size_t v : predicate_nodes) {
    const Token& vt = g.nodes[v];
    if (vt.pos != Pos::Verb && vt.pos != Pos::Copula) continue;

    // Subjects: explicit edges, or the modified noun for clause verbs.
    std::vector<EntityMention> subjects;
    bool passive = false;
    for (const auto& e : g.edges) {
      if (e.head != v) continue;
      if (e.label == DepLabel::Subj || e.label == DepLabel::SubjPass) {
        if (e.label == DepLabel::SubjPass) passive = true;
        if (auto m = mb.build(e.dependent)) subjects.push_back(*m);
      }
    }
    std::optional<std::size_t> acl_head;
    for (const auto& e : g.edges) {
      if (e.label == DepLabel::Acl && e.dependent == v) acl_head = e.head;
    }
    if (subjects.empty() && acl_head) {
      if (auto m = mb.build(*acl_head)) subjects.push_back(*m);
    }

    std::vector<EntityMention> objects;
    for (std::size_t d : g.dependents_of(v, DepLabel::Obj)) {
      if (auto m = mb.build(d)) objects.push_back(*m);
    }

    // Prepositional attachments of this predicate.
    struct PrepArc {
      std::string prep_lemma;
      std::optional<EntityMention> object;
    };
    std::vector<PrepArc> prep_arcs;
    for (std::size_t p : g.dependents_of(v, DepLabel::Prep)) {
      PrepArc arc;
      arc.prep_lemma = g.nodes[p].lemma;
      if (auto pobj = g.dependent_of(p, DepLabel::Pobj)) {
        arc.object = mb.build(*pobj);
        if (!arc.object) continue;  // dropped or non-nominal: skip the arc
      }
      prep_arcs.push_back(arc);
    }

    if (passive) {
      // Pattern 7: patient was attached as subj_pass; agent from "by".
      std::vector<EntityMention> agents;
      for (const auto& arc : prep_arcs) {
        if (arc.prep_lemma == "by" && arc.object)
          agents.push_back(*arc.object);
      }
      for (const auto& patient : subjects) {
        if (!agents.empty()) {
          for (const auto& agent : agents)
            add_relation(agent, vt.lemma, patient);
        } else {
          add_attribute(patient, vt.lemma, kNoObject);
        }
      }
      continue;
    }

    if (vt.pos == Pos::Copula) {
      // Pattern 4: copular constructions.
      std::vector<std::size_t> comps = g.dependents_of(v, DepLabel::Cop);
      for (const auto& s : subjects) {
        for (std::size_t c : comps) {
          const Token& ct = g.nodes[c];
          if (g.dropped.count(c)) continue;
          if (ct.pos == Pos::Noun) {
            if (auto m = mb.build(c)) add_relation(s, "be", *m);
          } else if (ct.pos == Pos::Adjective) {
            add_attribute(s, "is", attribute_value_filter(ct, config));
          }
        }
        // Pattern 5 variant: "X is on Y".
        for (const auto& arc : prep_arcs) {
          if (arc.object)
            add_relation(s, "be_" + arc.prep_lemma, *arc.object);
        }
      }
      continue;
    }

    // Pattern 2: subject-predicate-object.
    for (const auto& s : subjects) {
      for (const auto& o : objects) add_relation(s, vt.lemma, o);
    }
    // Pattern 5: prepositional phrases on a verbal predicate.
    bool any_prep_object = false;
    for (const auto& arc : prep_arcs) {
      if (!arc.object) continue;
      any_prep_object = true;
      for (const auto& s : subjects)
        add_relation(s, vt.lemma + "_" + arc.prep_lemma, *arc.object);
    }
    // Pattern 3: subject-predicate with no object. Particles fold into the
    // predicate ("log in" -> log_in).
    if (objects.empty() && !any_prep_object) {
      std::string pred = vt.lemma;
      for (const auto& arc : prep_arcs) {
        if (!arc.object) {
          pred += "_" + arc.prep_lemma;
          break;
        }
      }
      for (const auto& s : subjects) add_attribute(s, pred, kNoObject);
    }
  }

  // Pattern 6: possessives.
  for (const auto& e : g.edges) {
    if (e.label != DepLabel::Poss) continue;
    auto owned = mb.build(e.head);
    auto owner = mb.build(e.dependent);
    if (owned && owner) add_relation(*owner, "have", *owned);
  }

  // Pattern 5 for nominal governors ("guys in uniforms").
  for (const auto& e : g.edges) {
    if (e.label != DepLabel::Prep) continue;
    const Token& gov = g.nodes[e.head];
    if (gov.pos != Pos::Noun) continue;
    auto subj = mb.build(e.head);
    if (!subj) continue;
    if (auto pobj = g.dependent_of(e.dependent, DepLabel::Pobj)) {
      if (auto obj = mb.build(*pobj))
        add_relation(*subj, g.nodes[e.dependent].lemma, *obj);
    }
  }

  return scene;
}

// --- resolve_plurals -------------------------------------------------------------

SceneGraph resolve_plurals(SceneGraph scene) {
  auto fix = [](EntityMention& m) {
    if (m.exact_number) m.plural = *m.exact_number > 1;
  };
  for (auto& r : scene.relationships) {
    fix(r.subject);
    fix(r.object);
  }
  for (auto& a : scene.attributes) fix(a.subject);
  return scene;
}

// --- parse_sentence / collect_mentions --------------------------------------------

SceneGraph parse_sentence(const Sentence& sentence, std::size_t sentence_index,
                          const std::vector<EntityMention>& prior_mentions,
                          const PipelineConfig& config) {
  DependencyGraph g = build_dependency_graph(sentence, config, sentence_index);
  g = strip_quantificational_modifiers(std::move(g), config);
  g = resolve_pronouns(std::move(g), prior_mentions, config);
  return resolve_plurals(extract_triples(g, config));
}

std::vector<EntityMention> collect_mentions(const SceneGraph& scene) {
  std::vector<EntityMention> mentions;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  auto add = [&](const EntityMention& m) {
    if (seen.insert({m.sentence_index, m.token_index}).second)
      mentions.push_back(m);
  };
  for (const auto& r : scene.relationships) {
    add(r.subject);
    add(r.object);
  }
  for (const auto& a : scene.attributes) add(a.subject);
  std::sort(mentions.begin(), mentions.end(),
            [](const EntityMention& a, const EntityMention& b) {
              return std::tie(a.sentence_index, a.token_index) <
                     std::tie(b.sentence_index, b.token_index);
            });
  return mentions;
}

}  // namespace entitree
