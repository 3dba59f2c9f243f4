#include "entitree/pattern_suite.hpp"

namespace entitree {

const char* pattern_kind_name(PatternKind k) {
  switch (k) {
    case PatternKind::AdjectivalModifier:     return "adjectival_modifier";
    case PatternKind::SubjectPredicateObject: return "subject_predicate_object";
    case PatternKind::SubjectPredicate:       return "subject_predicate";
    case PatternKind::Copular:                return "copular";
    case PatternKind::Prepositional:          return "prepositional";
    case PatternKind::Possessive:             return "possessive";
    case PatternKind::Passive:                return "passive";
    case PatternKind::ClausalModifier:        return "clausal_modifier";
  }
  return "unknown";
}

namespace {

Triplet t(std::string s, std::vector<std::string> sa, std::string r,
          std::string o, std::vector<std::string> oa = {}) {
  return Triplet{std::move(s), std::move(sa), std::move(r), std::move(o),
                 std::move(oa)};
}

std::vector<PatternCase> make_suite() {
  using PK = PatternKind;
  std::vector<PatternCase> suite;
  auto add = [&](PK p, std::string id, std::string text,
                 std::vector<Triplet> expected) {
    suite.push_back({p, std::move(id), std::move(text), std::move(expected)});
  };

  // Adjectival modifiers
  add(PK::AdjectivalModifier, "amod-1", "A new customer buys a product.",
      {t("customer", {"new"}, "buy", "product")});
  add(PK::AdjectivalModifier, "amod-2", "The young student reads an old book.",
      {t("student", {"young"}, "read", "book", {"old"})});
  add(PK::AdjectivalModifier, "amod-3", "A big red box contains a small cat.",
      {t("box", {"big", "red"}, "contain", "cat", {"small"})});

  // Subject-predicate-object
  add(PK::SubjectPredicateObject, "spo-1", "A customer buys a product.",
      {t("customer", {}, "buy", "product")});
  add(PK::SubjectPredicateObject, "spo-2", "The manager approves the request.",
      {t("manager", {}, "approve", "request")});
  add(PK::SubjectPredicateObject, "spo-3", "A level has multiple bosses.",
      {t("level", {}, "have", "boss")});
  add(PK::SubjectPredicateObject, "spo-4", "The teacher teaches a course.",
      {t("teacher", {}, "teach", "course")});
  add(PK::SubjectPredicateObject, "spo-5",
      "A customer buys a product and a service.",
      {t("customer", {}, "buy", "product"), t("customer", {}, "buy", "service")});
  add(PK::SubjectPredicateObject, "spo-6",
      "The product has a category and a price.",
      {t("product", {}, "have", "category"), t("product", {}, "have", "price")});

  // Subject-predicate (no object: nothing lands in the triplet set)
  add(PK::SubjectPredicate, "sp-1", "The server restarts.", {});
  add(PK::SubjectPredicate, "sp-2", "A customer exists.", {});
  add(PK::SubjectPredicate, "sp-3", "A manager manages employees. They work.",
      {t("manager", {}, "manage", "employee")});

  // Copular constructions
  add(PK::Copular, "cop-1", "A customer is person.",
      {t("customer", {}, "be", "person")});
  add(PK::Copular, "cop-2", "A manager is an employee.",
      {t("manager", {}, "be", "employee")});
  add(PK::Copular, "cop-3", "The door is open.", {});
  add(PK::Copular, "cop-4", "The invoice is valid.", {});

  // Prepositional phrases
  add(PK::Prepositional, "prep-1", "The cat sat on the mat.",
      {t("cat", {}, "sit_on", "mat")});
  add(PK::Prepositional, "prep-2", "The user logs into the system.",
      {t("user", {}, "log_into", "system")});
  add(PK::Prepositional, "prep-3", "Two guys in police uniforms",
      {t("guy", {}, "in", "uniform", {"police"})});
  add(PK::Prepositional, "prep-4", "Two passengers in the backseat of the car",
      {t("passenger", {}, "in", "backseat"), t("backseat", {}, "of", "car")});
  add(PK::Prepositional, "prep-5", "Both of the men hold a sign.",
      {t("man", {}, "hold", "sign")});
  add(PK::Prepositional, "prep-6", "A bunch of users create an account.",
      {t("user", {}, "create", "account")});
  add(PK::Prepositional, "prep-7", "All of the students attend the course.",
      {t("student", {}, "attend", "course")});

  // Possessive constructions
  add(PK::Possessive, "poss-1", "The customer's order arrives.",
      {t("customer", {}, "have", "order")});
  add(PK::Possessive, "poss-2", "The company's employees work.",
      {t("company", {}, "have", "employee")});

  // Passive constructions
  add(PK::Passive, "pass-1", "The product is ordered by the customer.",
      {t("customer", {}, "order", "product")});
  add(PK::Passive, "pass-2", "The course is taught by the teacher.",
      {t("teacher", {}, "teach", "course")});

  // Clausal modifiers of nouns
  add(PK::ClausalModifier, "acl-1", "The user that owns the account pays.",
      {t("user", {}, "own", "account")});
  add(PK::ClausalModifier, "acl-2",
      "A manager who approves the request works.",
      {t("manager", {}, "approve", "request")});

  // Cardinality, optionality and typing scenarios
  add(PK::SubjectPredicateObject, "card-1", "A user has an optional nickname.",
      {t("user", {}, "have", "nickname")});
  add(PK::SubjectPredicateObject, "card-2", "An employee has a Date birthday.",
      {t("employee", {}, "have", "birthday", {"date"})});
  add(PK::SubjectPredicateObject, "card-3", "A customer has an email.",
      {t("customer", {}, "have", "email")});

  // Documents with pronoun handling and inheritance
  add(PK::SubjectPredicateObject, "doc-1",
      "A new customer buys a product. It has a text description, a category "
      "and a price. A customer is person.",
      {t("customer", {"new"}, "buy", "product"),
       t("product", {}, "have", "description", {"text"}),
       t("product", {}, "have", "category"),
       t("product", {}, "have", "price"),
       t("customer", {}, "be", "person")});
  add(PK::SubjectPredicateObject, "doc-2",
      "A customer pays. He receives a receipt.",
      {t("customer", {}, "receive", "receipt")});
  add(PK::Copular, "doc-3",
      "An admin user logs in. An admin manages the system.",
      {t("admin", {}, "manage", "system")});

  return suite;
}

}  // namespace

const std::vector<PatternCase>& pattern_suite() {
  static const std::vector<PatternCase> suite = make_suite();
  return suite;
}

}  // namespace entitree
