#include <doctest.h>

#include <algorithm>

#include "entitree/entity_tree.hpp"
#include "entitree/errors.hpp"
#include "entitree/parser.hpp"

using namespace entitree;

namespace {

const PipelineConfig& cfg() {
  static PipelineConfig c;
  return c;
}

const std::string kFig1 =
    "A new customer buys a product. It has a text description, a category "
    "and a price. A customer is person.";

const EntityComponent* find_entity(const EntityTree& t, const std::string& n) {
  for (const auto& e : t.entities)
    if (e.name == n) return &e;
  return nullptr;
}

EntityMention mk(const std::string& lemma, bool plural = false) {
  EntityMention m;
  m.head_lemma = lemma;
  m.plural = plural;
  return m;
}

}  // namespace

TEST_CASE("aggregate merges mentions across sentences") {
  auto doc = segment_document(kFig1, cfg());
  std::vector<SceneGraph> scenes;
  std::vector<EntityMention> prior;
  for (std::size_t i = 0; i < doc.sentences.size(); ++i) {
    auto scene = parse_sentence(doc.sentences[i], i, prior, cfg());
    for (const auto& m : collect_mentions(scene)) prior.push_back(m);
    scenes.push_back(scene);
  }
  auto fused = aggregate(scenes);
  std::set<std::string> lemmas;
  for (const auto& r : fused.relationships) {
    lemmas.insert(r.subject.head_lemma);
    lemmas.insert(r.object.head_lemma);
  }
  CHECK(lemmas == std::set<std::string>{"customer", "product", "person",
                                        "description", "category", "price"});
}

TEST_CASE("aggregate is identity on a single graph") {
  SceneGraph s;
  s.relationships.push_back({mk("a"), "own", mk("b"), "", "", false, ""});
  auto fused = aggregate({s});
  CHECK(fused.relationships.size() == 1);
  CHECK(fused.attributes.empty());
}

TEST_CASE("aggregate unions modifiers of duplicate triples") {
  SceneGraph s1, s2;
  EntityMention with_mod = mk("customer");
  with_mod.modifiers = {"new"};
  s1.relationships.push_back({with_mod, "buy", mk("product"), "", "", false, ""});
  s2.relationships.push_back({mk("customer"), "buy", mk("product"), "", "",
                              false, ""});
  auto fused = aggregate({s1, s2});
  REQUIRE(fused.relationships.size() == 1);
  CHECK(fused.relationships[0].subject.modifiers ==
        std::vector<std::string>{"new"});

  auto reversed = aggregate({s2, s1});
  REQUIRE(reversed.relationships.size() == 1);
  CHECK(reversed.relationships[0].subject.modifiers ==
        std::vector<std::string>{"new"});
}

TEST_CASE("cardinality marks: many-to-one from plural object") {
  auto tree = build_entity_tree("A level has multiple bosses.", cfg());
  const auto* level = find_entity(tree, "level");
  REQUIRE(level != nullptr);
  REQUIRE(level->relationships.size() == 1);
  CHECK(level->relationships[0].object_name == "boss");
  CHECK(level->relationships[0].relationship_type == "have");
  CHECK(level->relationships[0].min == "1");
  CHECK(level->relationships[0].max == "*");
}

TEST_CASE("cardinality marks: singular sides give 1/1") {
  auto tree = build_entity_tree("A customer buys a product.", cfg());
  const auto* customer = find_entity(tree, "customer");
  REQUIRE(customer != nullptr);
  REQUIRE(customer->relationships.size() == 1);
  CHECK(customer->relationships[0].min == "1");
  CHECK(customer->relationships[0].max == "1");
}

TEST_CASE("optional objects get a 0 mark on their side") {
  auto tree = build_entity_tree("A user has an optional nickname.", cfg());
  const auto* user = find_entity(tree, "user");
  REQUIRE(user != nullptr);
  REQUIRE(user->relationships.size() == 1);
  CHECK(user->relationships[0].max == "0");
  CHECK(user->relationships[0].min == "1");
  // "optional" is consumed as a cardinality marker, not kept as a label.
  CHECK(user->relationships[0].object_attributes.empty());
}

TEST_CASE("plural subjects mark the min side") {
  auto tree = build_entity_tree("Customers buy a product.", cfg());
  const auto* customer = find_entity(tree, "customer");
  REQUIRE(customer != nullptr);
  REQUIRE(customer->relationships.size() == 1);
  CHECK(customer->relationships[0].min == "*");
  CHECK(customer->relationships[0].max == "1");
}

TEST_CASE("exact numbers land on the relationship") {
  auto tree = build_entity_tree("Both of the men hold a sign.", cfg());
  const auto* man = find_entity(tree, "man");
  REQUIRE(man != nullptr);
  REQUIRE(man->relationships.size() == 1);
  REQUIRE(man->relationships[0].exact_number.has_value());
  CHECK(*man->relationships[0].exact_number == 2);
  CHECK(man->relationships[0].min == "*");
}

TEST_CASE("copular triples resolve to inheritance") {
  auto tree = build_entity_tree(kFig1, cfg());
  const auto* customer = find_entity(tree, "customer");
  REQUIRE(customer != nullptr);
  REQUIRE(customer->extends.has_value());
  CHECK(*customer->extends == "person");
  // The copular triple is consumed: only the buy relationship remains.
  REQUIRE(customer->relationships.size() == 1);
  CHECK(customer->relationships[0].relationship_type == "buy");
  // The parent is materialized as an (empty) entity.
  const auto* person = find_entity(tree, "person");
  REQUIRE(person != nullptr);
  CHECK(person->relationships.empty());
  CHECK(person->attributes.empty());
}

TEST_CASE("adjective complements stay attributes, no inheritance") {
  auto tree = build_entity_tree(
      "The invoice is valid. The invoice contains a price.", cfg());
  const auto* invoice = find_entity(tree, "invoice");
  REQUIRE(invoice != nullptr);
  CHECK_FALSE(invoice->extends.has_value());
  CHECK(std::find(invoice->attributes.begin(), invoice->attributes.end(),
                  "valid") != invoice->attributes.end());
}

TEST_CASE("verbal predications materialize their subjects") {
  auto tree = build_entity_tree("The server restarts.", cfg());
  const auto* server = find_entity(tree, "server");
  REQUIRE(server != nullptr);
  CHECK(server->relationships.empty());
}

TEST_CASE("noun attributes promote to parent only when mentioned as entities") {
  // "admin" appears as a subject elsewhere: promoted to parent of user.
  auto tree = build_entity_tree(
      "An admin user logs in. An admin manages the system.", cfg());
  const auto* user = find_entity(tree, "user");
  REQUIRE(user != nullptr);
  REQUIRE(user->extends.has_value());
  CHECK(*user->extends == "admin");
  CHECK(std::find(user->attributes.begin(), user->attributes.end(), "admin") ==
        user->attributes.end());
  // "text" is never an entity: stays an attribute of description.
  auto fig1 = build_entity_tree(kFig1, cfg());
  const auto* product = find_entity(fig1, "product");
  REQUIRE(product != nullptr);
  bool saw_description = false;
  for (const auto& r : product->relationships) {
    if (r.object_name == "description") {
      saw_description = true;
      CHECK(r.object_attributes == std::vector<std::string>{"text"});
    }
  }
  CHECK(saw_description);
}

TEST_CASE("inheritance cycles are reported with a path") {
  SceneGraph s;
  s.relationships.push_back({mk("a"), "be", mk("b"), "1", "1", false, ""});
  s.relationships.push_back({mk("b"), "be", mk("a"), "1", "1", false, ""});
  try {
    resolve_inheritance(s);
    FAIL("expected InheritanceCycle");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InheritanceCycle);
    CHECK(std::string(e.what()).find("a -> b") != std::string::npos);
  }
}

TEST_CASE("types: primitive attribute, subject elsewhere, String default") {
  auto tree = build_entity_tree(
      "An employee has a Date birthday. An employee has a desk. "
      "A desk holds a lamp.",
      cfg());
  const auto* employee = find_entity(tree, "employee");
  REQUIRE(employee != nullptr);
  REQUIRE(employee->relationships.size() == 2);

  const Relationship* birthday = nullptr;
  const Relationship* desk = nullptr;
  for (const auto& r : employee->relationships) {
    if (r.object_name == "birthday") birthday = &r;
    if (r.object_name == "desk") desk = &r;
  }
  REQUIRE(birthday != nullptr);
  CHECK(birthday->primitivity);
  CHECK(birthday->type == "Date");

  REQUIRE(desk != nullptr);
  CHECK_FALSE(desk->primitivity);
  CHECK(desk->type == "desk");

  const auto* d = find_entity(tree, "desk");
  REQUIRE(d != nullptr);
  REQUIRE(d->relationships.size() == 1);
  CHECK(d->relationships[0].object_name == "lamp");
  CHECK(d->relationships[0].primitivity);
  CHECK(d->relationships[0].type == "String");
}

TEST_CASE("object typed by its parent class when it has one") {
  auto tree = build_entity_tree(
      "A customer is person. A shop serves the customer.", cfg());
  const auto* shop = find_entity(tree, "shop");
  REQUIRE(shop != nullptr);
  REQUIRE(shop->relationships.size() == 1);
  CHECK_FALSE(shop->relationships[0].primitivity);
  CHECK(shop->relationships[0].type == "person");
}

TEST_CASE("two distinct primitive attributes are ambiguous") {
  PipelineConfig c;
  SceneGraph s;
  EntityMention obj = mk("stamp");
  obj.modifiers = {"date", "long"};
  s.relationships.push_back({mk("record"), "have", obj, "1", "1", false, ""});
  InheritanceResolution none;
  try {
    assign_types(s, c, none);
    FAIL("expected AmbiguousType");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::AmbiguousType);
    CHECK(std::string(e.what()).find("Date") != std::string::npos);
    CHECK(std::string(e.what()).find("Long") != std::string::npos);
  }
}

TEST_CASE("primitive list is user-redefinable") {
  PipelineConfig c;
  c.primitive_types = {"Timestamp"};
  auto tree = build_entity_tree("An employee has a Date birthday.", c);
  const auto* employee = find_entity(tree, "employee");
  REQUIRE(employee != nullptr);
  // "Date" no longer primitive: birthday defaults to String,
  // with "date" kept as a plain attribute.
  REQUIRE(employee->relationships.size() == 1);
  CHECK(employee->relationships[0].type == "String");
  CHECK(employee->relationships[0].object_attributes ==
        std::vector<std::string>{"date"});
}

TEST_CASE("full pipeline on the worked document") {
  auto tree = build_entity_tree(kFig1, cfg());
  REQUIRE(tree.entities.size() == 3);
  CHECK(tree.entities[0].name == "customer");
  CHECK(tree.entities[1].name == "product");
  CHECK(tree.entities[2].name == "person");

  const auto* customer = find_entity(tree, "customer");
  CHECK(customer->attributes == std::vector<std::string>{"new"});
  const auto* product = find_entity(tree, "product");
  REQUIRE(product->relationships.size() == 3);
  for (const auto& r : product->relationships) {
    CHECK(r.primitivity);
    CHECK(r.type == "String");
    CHECK(r.relationship_type == "have");
  }
  validate_tree(tree);
}

TEST_CASE("empty document fails with EmptyInput") {
  CHECK_THROWS_AS(build_entity_tree("", cfg()), Error);
  try {
    build_entity_tree("  \n ", cfg());
    FAIL("expected EmptyInput");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::EmptyInput);
  }
}

TEST_CASE("tree invariants hold on every suite document") {
  const char* docs[] = {
      kFig1.c_str(),
      "A level has multiple bosses.",
      "Both of the men hold a sign.",
      "The product is ordered by the customer.",
      "The customer's order arrives.",
      "A user has an optional nickname.",
  };
  for (const char* doc : docs) {
    auto tree = build_entity_tree(doc, cfg());
    validate_tree(tree);
    for (const auto& e : tree.entities) {
      for (const auto& r : e.relationships) {
        CHECK((r.min == "0" || r.min == "1" || r.min == "*"));
        CHECK((r.max == "0" || r.max == "1" || r.max == "*"));
        CHECK(!r.type.empty());
      }
    }
  }
}

TEST_CASE("independent sentences aggregate order-independently") {
  const std::string a = "A customer buys a product. A level has multiple bosses.";
  const std::string b = "A level has multiple bosses. A customer buys a product.";
  auto ta = build_entity_tree(a, cfg());
  auto tb = build_entity_tree(b, cfg());
  // Same entity and relationship sets; list order follows the document.
  REQUIRE(ta.entities.size() == tb.entities.size());
  std::set<std::string> na, nb;
  for (const auto& e : ta.entities) na.insert(e.name);
  for (const auto& e : tb.entities) nb.insert(e.name);
  CHECK(na == nb);
  CHECK(ta.entities[0].name == "customer");
  CHECK(tb.entities[0].name == "level");
  for (const auto& e : ta.entities) {
    const auto* other = find_entity(tb, e.name);
    REQUIRE(other != nullptr);
    CHECK(e.relationships == other->relationships);
  }
}

TEST_CASE("pipeline run reports substitutions as diagnostics") {
  auto run = run_pipeline(kFig1, cfg());
  REQUIRE(!run.diagnostics.empty());
  CHECK(run.diagnostics[0].find("'It' -> 'product'") != std::string::npos);
}

TEST_CASE("source digest is stable and input-sensitive") {
  auto t1 = build_entity_tree("A customer buys a product.", cfg());
  auto t2 = build_entity_tree("A customer buys a product.", cfg());
  auto t3 = build_entity_tree("A customer buys a service.", cfg());
  CHECK(t1.source_digest == t2.source_digest);
  CHECK(t1.source_digest != t3.source_digest);
  CHECK(t1.source_digest.rfind("fnv1a:", 0) == 0);
}
