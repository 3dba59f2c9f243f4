// Deterministic lexical layer: tokenization, POS tagging, lemmatization
// and number-word parsing. Lexicon-first with suffix heuristics as fallback.

#ifndef ENTITREE_LEXICON_HPP
#define ENTITREE_LEXICON_HPP

#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "entitree/token.hpp"

namespace entitree {

// One lexicon entry: a surface form mapped to its lemma and part of speech.
struct LexEntry {
  std::string lemma;
  Pos pos = Pos::Noun;
  bool plural = false;
};

class Lexicon {
 public:
  // Builds the bundled seed lexicon (closed-class lists plus a ~200 word
  // open-class vocabulary for the requirements register).
  static Lexicon seed();

  // Loads entries from a UTF-8 file, one per line:
  //   surface<TAB>lemma<TAB>pos[<TAB>plural]
  // Later entries override earlier ones. Blank lines and '#' comments skipped.
  void load_file(const std::string& path);
  void load_text(const std::string& text, const std::string& origin = "<text>");

  void add(const std::string& surface, const std::string& lemma, Pos pos,
           bool plural = false);

  const LexEntry* lookup(const std::string& surface_lower) const;
  bool has_with_pos(const std::string& surface_lower, Pos pos) const;

  std::size_t size() const { return entries_.size(); }

  // Every (surface, entry) pair; used by property tests.
  const std::unordered_map<std::string, std::vector<LexEntry>>& entries() const {
    return entries_;
  }

 private:
  // A surface may carry several readings ("open" adjective/verb); the tagger
  // picks by context, lookup() returns the first (preferred) reading.
  std::unordered_map<std::string, std::vector<LexEntry>> entries_;
};

// --- operations ------------------------------------------------------------

// Splits one raw sentence into tokens. Punctuation becomes its own token with
// pos Other; decimal numbers, URLs and hyphenated words stay whole.
// Throws Error(EmptyInput) when the input is empty after trimming.
std::vector<Token> tokenize(const std::string& raw_sentence);

// Assigns exactly one pos per token. Forms of "be" become Copula; unknown
// words fall back to Noun after suffix heuristics.
void tag_pos(std::vector<Token>& tokens, const Lexicon& lex);

// Lowercase stem of a tagged token. Plural nouns map to the singular lemma,
// inflected verbs to the base form.
std::string lemmatize(const Token& token, const Lexicon& lex);

// Digit strings and English number words up to one hundred.
std::optional<long> parse_number_word(const std::string& surface);

// Convenience: tokenize + tag + lemmatize in one pass.
std::vector<Token> analyze_sentence(const std::string& raw_sentence,
                                    const Lexicon& lex);

// Lowercase helper used across the pipeline (ASCII).
std::string to_lower(const std::string& s);

}  // namespace entitree

#endif  // ENTITREE_LEXICON_HPP
