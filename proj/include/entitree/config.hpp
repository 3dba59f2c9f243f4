// User-tunable pipeline configuration: primitive types, quantificational
// modifiers, the pronoun lexicon, abbreviations and the BLEU threshold.

#ifndef ENTITREE_CONFIG_HPP
#define ENTITREE_CONFIG_HPP

#include <string>
#include <vector>

#include "entitree/lexicon.hpp"

namespace entitree {

struct PipelineConfig {
  // Object attributes matching one of these mark the relationship primitive.
  std::vector<std::string> primitive_types{"Date", "Long", "Short", "Int"};

  // Noun-phrase quantifiers stripped before extraction.
  std::vector<std::string> quantificational_modifiers{
      "both of", "a bunch of", "a lot of",  "a number of",
      "a couple of", "some of", "all of"};

  // Pronouns eligible for sentence-initial replacement.
  std::vector<std::string> pronouns{"it",   "they",  "he",   "she",
                                    "this", "these", "those"};

  // Tokens that end with one of these never close a sentence.
  std::vector<std::string> abbreviations{"e.g.", "i.e.", "etc.", "dr.",
                                         "mr.",  "mrs.", "ms.",  "prof.",
                                         "vs.",  "st.",  "no.",  "fig.",
                                         "al.",  "inc.", "ltd.", "co."};

  double bleu_k = 0.6;

  Lexicon lexicon = Lexicon::seed();

  // Reads a UTF-8 key-value file:
  //   key = value, value, ...
  // '=' replaces the default list, '+=' appends. Scalar keys: bleu_k.
  // 'lexicon_file = path' loads extra lexicon entries. '#' starts a comment.
  static PipelineConfig load(const std::string& path);
  void apply_text(const std::string& text, const std::string& origin);

  bool is_primitive(const std::string& word) const;
  bool is_leading_pronoun(const std::string& surface_lower) const;
};

}  // namespace entitree

#endif  // ENTITREE_CONFIG_HPP
