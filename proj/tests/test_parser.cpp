#include <doctest.h>

#include <algorithm>

#include "entitree/errors.hpp"
#include "entitree/parser.hpp"
#include "entitree/segmentation.hpp"

using namespace entitree;

namespace {

const PipelineConfig& cfg() {
  static PipelineConfig c;
  return c;
}

Sentence sentence_of(const std::string& text) {
  auto sentences = split_sentences(text, cfg());
  REQUIRE(sentences.size() == 1);
  return sentences[0];
}

SceneGraph parse_one(const std::string& text,
                     const std::vector<EntityMention>& prior = {}) {
  return parse_sentence(sentence_of(text), 0, prior, cfg());
}

bool has_relation(const SceneGraph& s, const std::string& subj,
                  const std::string& pred, const std::string& obj) {
  return std::any_of(s.relationships.begin(), s.relationships.end(),
                     [&](const RelationTriple& r) {
                       return r.subject.head_lemma == subj &&
                              r.predicate == pred &&
                              r.object.head_lemma == obj;
                     });
}

bool has_attribute(const SceneGraph& s, const std::string& subj,
                   const std::string& pred, const std::string& value) {
  return std::any_of(s.attributes.begin(), s.attributes.end(),
                     [&](const AttributeTriple& a) {
                       return a.subject.head_lemma == subj &&
                              a.predicate == pred && a.attribute == value;
                     });
}

EntityMention mention(const std::string& lemma, bool plural = false) {
  EntityMention m;
  m.head_lemma = lemma;
  m.plural = plural;
  return m;
}

}  // namespace

TEST_CASE("dependency graph for the worked example") {
  auto g = build_dependency_graph(sentence_of("A new customer buys a product."),
                                  cfg());
  // subj(buys -> customer), obj(buys -> product), amod(customer -> new), dets.
  CHECK(g.nodes[g.root_index].surface == "buys");
  CHECK(g.has_edge(3, 2, DepLabel::Subj));
  CHECK(g.has_edge(3, 5, DepLabel::Obj));
  CHECK(g.has_edge(2, 1, DepLabel::Amod));
  CHECK(g.has_edge(2, 0, DepLabel::Det));
  CHECK(g.has_edge(5, 4, DepLabel::Det));
  for (const auto& e : g.edges) CHECK(e.head != e.dependent);
}

TEST_CASE("copular sentences link subject and complement") {
  auto g = build_dependency_graph(sentence_of("A customer is person."), cfg());
  CHECK(g.nodes[g.root_index].pos == Pos::Copula);
  CHECK(g.has_edge(2, 1, DepLabel::Subj));
  CHECK(g.has_edge(2, 3, DepLabel::Cop));
}

TEST_CASE("prepositional attachment to the verb") {
  auto g = build_dependency_graph(sentence_of("The cat sat on the mat."), cfg());
  CHECK(g.has_edge(2, 1, DepLabel::Subj));
  CHECK(g.has_edge(2, 3, DepLabel::Prep));
  CHECK(g.has_edge(3, 5, DepLabel::Pobj));
}

TEST_CASE("no noun and no verb raises NoExtractableContent") {
  Sentence s;
  s.text = "?!";
  Token t;
  t.surface = "?";
  t.lemma = "?";
  t.pos = Pos::Other;
  s.tokens = {t};
  CHECK_THROWS_AS(build_dependency_graph(s, cfg()), Error);
}

TEST_CASE("root is never a pronoun after stripping and resolution") {
  auto g = build_dependency_graph(sentence_of("Both of the men hold a sign."),
                                  cfg());
  g = strip_quantificational_modifiers(std::move(g), cfg());
  CHECK(g.nodes[g.root_index].pos == Pos::Verb);

  auto frag = build_dependency_graph(sentence_of("Both of the men"), cfg());
  frag = strip_quantificational_modifiers(std::move(frag), cfg());
  auto pos = frag.nodes[frag.root_index].pos;
  CHECK((pos == Pos::Verb || pos == Pos::Copula || pos == Pos::Noun));
}

TEST_CASE("quantificational modifiers are stripped and annotated") {
  auto scene = parse_one("Both of the men hold a sign.");
  REQUIRE(has_relation(scene, "man", "hold", "sign"));
  const auto& r = scene.relationships.front();
  CHECK(r.subject.plural);
  REQUIRE(r.subject.exact_number.has_value());
  CHECK(*r.subject.exact_number == 2);

  auto bunch = parse_one("A bunch of users create an account.");
  REQUIRE(has_relation(bunch, "user", "create", "account"));
  CHECK(bunch.relationships.front().subject.plural);
  CHECK_FALSE(bunch.relationships.front().subject.exact_number.has_value());
}

TEST_CASE("stripping is idempotent") {
  auto g = build_dependency_graph(sentence_of("Both of the men hold a sign."),
                                  cfg());
  auto once = strip_quantificational_modifiers(g, cfg());
  auto twice = strip_quantificational_modifiers(once, cfg());
  CHECK(once.edges.size() == twice.edges.size());
  CHECK(once.root_index == twice.root_index);
  CHECK(once.dropped == twice.dropped);
}

TEST_CASE("graphs without quantifiers are unchanged by stripping") {
  auto g = build_dependency_graph(sentence_of("A customer buys a product."),
                                  cfg());
  auto stripped = strip_quantificational_modifiers(g, cfg());
  CHECK(g.edges.size() == stripped.edges.size());
  CHECK(g.root_index == stripped.root_index);
}

TEST_CASE("pronoun resolution prefers the most recent agreeing mention") {
  // "It" with prior [customer, product]: most recent singular -> product.
  auto scene = parse_one("It has a text description.",
                         {mention("customer"), mention("product")});
  CHECK(has_relation(scene, "product", "have", "description"));

  // "They" with prior [customer(plural), product(singular)] -> customer.
  auto plural = parse_one("They arrive.",
                          {mention("customer", true), mention("product")});
  CHECK(has_attribute(plural, "customer", "arrive", kNoObject));
}

TEST_CASE("graphs without pronouns pass through resolution unchanged") {
  auto g = build_dependency_graph(sentence_of("A customer buys a product."),
                                  cfg());
  auto resolved = resolve_pronouns(g, {mention("user")}, cfg());
  CHECK(g.edges.size() == resolved.edges.size());
  for (std::size_t i = 0; i < g.nodes.size(); ++i)
    CHECK(g.nodes[i].surface == resolved.nodes[i].surface);
}

TEST_CASE("pronouns with no prior mentions are dropped") {
  auto scene = parse_one("It has a description.", {});
  CHECK(scene.relationships.empty());
}

TEST_CASE("no pronoun lemma appears in an emitted scene graph") {
  const char* texts[] = {
      "It has a description.",
      "They hold a sign.",
      "A customer buys it.",
  };
  for (const char* text : texts) {
    auto scene = parse_one(text, {mention("product"), mention("user", true)});
    for (const auto& r : scene.relationships) {
      for (const char* p : {"it", "they", "he", "she", "this", "these", "those"}) {
        CHECK(r.subject.head_lemma != p);
        CHECK(r.object.head_lemma != p);
      }
    }
  }
}

// --- the eight constructions ---------------------------------------------------

TEST_CASE("pattern 1: adjectival modifiers") {
  auto scene = parse_one("A new customer buys a product.");
  CHECK(has_attribute(scene, "customer", "is", "new"));
  REQUIRE(has_relation(scene, "customer", "buy", "product"));
  const auto& subj = scene.relationships.front().subject;
  REQUIRE(subj.modifiers.size() == 1);
  CHECK(subj.modifiers[0] == "new");
}

TEST_CASE("pattern 2: subject-predicate-object") {
  auto scene = parse_one("A customer buys a product.");
  REQUIRE(scene.relationships.size() == 1);
  CHECK(has_relation(scene, "customer", "buy", "product"));
}

TEST_CASE("pattern 3: subject-predicate records a placeholder attribute") {
  auto scene = parse_one("The server restarts.");
  CHECK(scene.relationships.empty());
  CHECK(has_attribute(scene, "server", "restart", kNoObject));
}

TEST_CASE("pattern 4: copular constructions") {
  auto noun = parse_one("A customer is person.");
  REQUIRE(noun.relationships.size() == 1);
  CHECK(has_relation(noun, "customer", "be", "person"));

  auto adj = parse_one("The door is open.");
  CHECK(adj.relationships.empty());
  CHECK(has_attribute(adj, "door", "is", "open"));
}

TEST_CASE("pattern 5: prepositional phrases") {
  auto scene = parse_one("The cat sat on the mat.");
  REQUIRE(scene.relationships.size() == 1);
  CHECK(has_relation(scene, "cat", "sit_on", "mat"));
}

TEST_CASE("pattern 6: possessive constructions") {
  auto scene = parse_one("The customer's order arrives.");
  CHECK(has_relation(scene, "customer", "have", "order"));
  CHECK(has_attribute(scene, "order", "arrive", kNoObject));
}

TEST_CASE("pattern 7: passive constructions") {
  auto scene = parse_one("The product is ordered by the customer.");
  REQUIRE(scene.relationships.size() == 1);
  CHECK(has_relation(scene, "customer", "order", "product"));
}

TEST_CASE("pattern 8: clausal modifiers of nouns") {
  auto scene = parse_one("The user that owns the account pays.");
  CHECK(has_relation(scene, "user", "own", "account"));
  CHECK(has_attribute(scene, "user", "pay", kNoObject));
}

// --- plural resolution ---------------------------------------------------------

TEST_CASE("distributive plural keeps one mention with plural flags") {
  auto scene = parse_one("Two guys in police uniforms");
  REQUIRE(has_relation(scene, "guy", "in", "uniform"));
  const auto& r = scene.relationships.front();
  CHECK(r.subject.plural);
  REQUIRE(r.subject.exact_number.has_value());
  CHECK(*r.subject.exact_number == 2);
  // One guy mention in total: no duplicate subject entities.
  int guy_triples = 0;
  for (const auto& rel : scene.relationships)
    if (rel.subject.head_lemma == "guy") ++guy_triples;
  CHECK(guy_triples == 1);
}

TEST_CASE("backseat example keeps the container singular") {
  auto scene = parse_one("Two passengers in the backseat of the car");
  REQUIRE(has_relation(scene, "passenger", "in", "backseat"));
  REQUIRE(has_relation(scene, "backseat", "of", "car"));
  for (const auto& r : scene.relationships) {
    if (r.subject.head_lemma == "passenger") {
      CHECK(r.subject.plural);
      CHECK(r.subject.exact_number == 2);
      CHECK_FALSE(r.object.plural);
    }
  }
}

TEST_CASE("all-singular scenes are unchanged by plural resolution") {
  auto scene = parse_one("A customer buys a product.");
  auto resolved = resolve_plurals(scene);
  CHECK(scene.relationships.size() == resolved.relationships.size());
  CHECK_FALSE(resolved.relationships.front().subject.plural);
}

TEST_CASE("exact numbers force plural consistency") {
  SceneGraph s;
  EntityMention m = mention("user");
  m.exact_number = 3;
  m.plural = false;  // inconsistent on purpose
  s.relationships.push_back({m, "own", mention("car"), "", "", false, ""});
  auto fixed = resolve_plurals(s);
  CHECK(fixed.relationships[0].subject.plural);
}

// --- misc properties --------------------------------------------------------------

TEST_CASE("parsing is deterministic") {
  auto a = parse_one("A new customer buys a product in the store.");
  auto b = parse_one("A new customer buys a product in the store.");
  REQUIRE(a.relationships.size() == b.relationships.size());
  for (std::size_t i = 0; i < a.relationships.size(); ++i) {
    CHECK(a.relationships[i].subject.head_lemma ==
          b.relationships[i].subject.head_lemma);
    CHECK(a.relationships[i].predicate == b.relationships[i].predicate);
    CHECK(a.relationships[i].object.head_lemma ==
          b.relationships[i].object.head_lemma);
  }
}

TEST_CASE("coordinated objects fan out") {
  auto scene = parse_one("The product has a category and a price.");
  CHECK(has_relation(scene, "product", "have", "category"));
  CHECK(has_relation(scene, "product", "have", "price"));
}

TEST_CASE("coordinated verbs share the subject") {
  auto scene = parse_one("A user logs in and buys a product.");
  CHECK(has_relation(scene, "user", "buy", "product"));
  CHECK(has_attribute(scene, "user", "log_in", kNoObject));
}

TEST_CASE("collect_mentions orders by document position") {
  auto scene = parse_one("A customer buys a product.");
  auto mentions = collect_mentions(scene);
  REQUIRE(mentions.size() == 2);
  CHECK(mentions[0].head_lemma == "customer");
  CHECK(mentions[1].head_lemma == "product");
}

TEST_CASE("scene graphs deduplicate triples") {
  auto scene = parse_one("A customer buys a product and a product.");
  int count = 0;
  for (const auto& r : scene.relationships)
    if (r.object.head_lemma == "product") ++count;
  CHECK(count == 1);
}
