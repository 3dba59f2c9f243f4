#include <doctest.h>

#include "entitree/errors.hpp"
#include "entitree/segmentation.hpp"

using namespace entitree;

namespace {

const PipelineConfig& cfg() {
  static PipelineConfig c;
  return c;
}

const std::string kFig1 =
    "A new customer buys a product. It has a text description, a category "
    "and a price. A customer is person.";

}  // namespace

TEST_CASE("split_sentences finds the three example sentences") {
  auto sentences = split_sentences(kFig1, cfg());
  REQUIRE(sentences.size() == 3);
  CHECK(sentences[0].text == "A new customer buys a product.");
  CHECK(sentences[2].text == "A customer is person.");
}

TEST_CASE("decimals are not sentence boundaries") {
  auto sentences = split_sentences("The price is 3.50 euros.", cfg());
  CHECK(sentences.size() == 1);
}

TEST_CASE("URLs survive splitting") {
  auto sentences = split_sentences("See http://a.b/c. A user logs in.", cfg());
  REQUIRE(sentences.size() == 2);
  CHECK(sentences[0].text == "See http://a.b/c.");
  CHECK(sentences[1].text == "A user logs in.");
  // URL token intact in the first sentence.
  bool found = false;
  for (const auto& t : sentences[0].tokens)
    found = found || t.surface == "http://a.b/c";
  CHECK(found);
}

TEST_CASE("abbreviations are not boundaries") {
  auto sentences = split_sentences(
      "The list holds items, e.g. products. Dr. Smith approves.", cfg());
  REQUIRE(sentences.size() == 2);
  CHECK(sentences[1].text == "Dr. Smith approves.");
}

TEST_CASE("phone-style digit groups stay together") {
  auto sentences = split_sentences("Call 555.123.4567 now. A user waits.", cfg());
  CHECK(sentences.size() == 2);
}

TEST_CASE("question and exclamation marks end sentences") {
  auto sentences =
      split_sentences("Does a user exist? The system replies! Good.", cfg());
  CHECK(sentences.size() == 3);
}

TEST_CASE("split is a partition of the document") {
  const std::string doc = "  A user exists.   The system runs.  ";
  auto sentences = split_sentences(doc, cfg());
  REQUIRE(sentences.size() == 2);
  std::size_t cursor = 0;
  for (const auto& s : sentences) {
    CHECK(s.source_span.begin >= cursor);
    for (std::size_t i = cursor; i < s.source_span.begin; ++i)
      CHECK(std::isspace(static_cast<unsigned char>(doc[i])));
    CHECK(doc.substr(s.source_span.begin,
                     s.source_span.end - s.source_span.begin) == s.text);
    cursor = s.source_span.end;
  }
  for (std::size_t i = cursor; i < doc.size(); ++i)
    CHECK(std::isspace(static_cast<unsigned char>(doc[i])));
}

TEST_CASE("empty documents are rejected") {
  CHECK_THROWS_AS(split_sentences("", cfg()), Error);
  try {
    split_sentences("   ", cfg());
    FAIL("expected EmptyInput");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::EmptyInput);
  }
}

TEST_CASE("leading pronoun replaced by the previous nominal head") {
  auto doc = segment_document(kFig1, cfg());
  REQUIRE(doc.sentences.size() == 3);
  REQUIRE(doc.substitutions.size() == 1);
  CHECK(doc.substitutions[0].sentence_index == 1);
  CHECK(doc.substitutions[0].pronoun_surface == "It");
  CHECK(doc.substitutions[0].antecedent_text == "product");
  CHECK(doc.sentences[1].tokens[0].surface == "product");
  CHECK(doc.sentences[1].tokens[0].pos == Pos::Noun);
}

TEST_CASE("sentences without pronouns are untouched") {
  auto doc = segment_document("A user exists.", cfg());
  CHECK(doc.substitutions.empty());
  CHECK(doc.sentences.size() == 1);
}

TEST_CASE("number agreement picks the agreeing antecedent") {
  auto doc = segment_document(
      "Managers hire a consultant. They approve the budget.", cfg());
  REQUIRE(doc.substitutions.size() == 1);
  // "They" is plural: skips singular "consultant", lands on "manager".
  CHECK(doc.substitutions[0].antecedent_text == "manager");
  CHECK(doc.sentences[1].tokens[0].plural);
}

TEST_CASE("singular pronoun picks the last singular nominal") {
  auto doc = segment_document(
      "A new customer buys a product. It has a text description.", cfg());
  REQUIRE(doc.substitutions.size() == 1);
  CHECK(doc.substitutions[0].antecedent_text == "product");
}

TEST_CASE("document-initial pronoun is unresolvable") {
  CHECK_THROWS_AS(segment_document("They arrive. A user exists.", cfg()), Error);
  try {
    segment_document("They arrive.", cfg());
    FAIL("expected UnresolvablePronoun");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnresolvablePronoun);
    CHECK(e.span().has_value());
  }
}

TEST_CASE("substitution preserves sentence count and removes the pronoun") {
  auto split = split_sentences(kFig1, cfg());
  auto doc = resolve_leading_pronouns(split, cfg());
  CHECK(doc.sentences.size() == split.size());
  for (const auto& s : doc.sentences) {
    REQUIRE(!s.tokens.empty());
    CHECK(s.tokens[0].pos != Pos::Pronoun);
  }
}

TEST_CASE("determiner 'this' before a noun is not replaced") {
  auto doc =
      segment_document("A user exists. This user logs in.", cfg());
  CHECK(doc.substitutions.empty());
  CHECK(doc.sentences[1].tokens[0].surface == "This");
  CHECK(doc.sentences[1].tokens[0].pos == Pos::Determiner);
}
