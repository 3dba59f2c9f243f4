// Lexical units: tokens and sentences.

#ifndef ENTITREE_TOKEN_HPP
#define ENTITREE_TOKEN_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace entitree {

enum class Pos {
  Noun,
  Verb,
  Adjective,
  Determiner,
  Pronoun,
  Preposition,
  Conjunction,
  Number,
  Adverb,
  Copula,
  Other,
};

const char* pos_name(Pos p);

struct Token {
  std::string surface;
  std::string lemma;                 // lowercase stem, never empty once tagged
  Pos pos = Pos::Other;
  std::size_t index = 0;             // 0-based position in sentence
  std::size_t offset = 0;            // character offset within the sentence text
  bool plural = false;               // nouns only
  std::optional<long> numeric_value; // present iff pos == Number
};

struct SourceSpan {
  std::size_t begin = 0;  // character offsets into the original document
  std::size_t end = 0;
};

struct Sentence {
  std::vector<Token> tokens;
  SourceSpan source_span;
  std::string text;  // the raw sentence slice the tokens were produced from
};

}  // namespace entitree

#endif  // ENTITREE_TOKEN_HPP
