// Sentence splitting and sentence-initial pronoun replacement, so every
// sentence can be parsed on its own.

#ifndef ENTITREE_SEGMENTATION_HPP
#define ENTITREE_SEGMENTATION_HPP

#include <string>
#include <vector>

#include "entitree/config.hpp"
#include "entitree/token.hpp"

namespace entitree {

struct Substitution {
  std::size_t sentence_index = 0;
  std::string pronoun_surface;
  std::string antecedent_text;
};

struct SegmentedDocument {
  std::vector<Sentence> sentences;
  std::vector<Substitution> substitutions;
};

// Splits at sentence-final punctuation, protecting decimals, abbreviations,
// URLs and digit-grouped patterns like phone numbers. Sentences come back
// tokenized and tagged.
std::vector<Sentence> split_sentences(const std::string& document,
                                      const PipelineConfig& config);

// Replaces a sentence-initial pronoun with the head of the last
// number-agreeing nominal group of the preceding sentence.
SegmentedDocument resolve_leading_pronouns(std::vector<Sentence> sentences,
                                           const PipelineConfig& config);

// split_sentences + resolve_leading_pronouns.
SegmentedDocument segment_document(const std::string& document,
                                   const PipelineConfig& config);

}  // namespace entitree

#endif  // ENTITREE_SEGMENTATION_HPP
