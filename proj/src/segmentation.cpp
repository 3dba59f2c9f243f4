#include "entitree/segmentation.hpp"

#include <algorithm>
#include <cctype>

#include "entitree/errors.hpp"

namespace entitree {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)); }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

// The non-whitespace run around position i.
std::pair<std::size_t, std::size_t> run_around(const std::string& doc,
                                               std::size_t i) {
  std::size_t b = i;
  while (b > 0 && !is_space(doc[b - 1])) --b;
  std::size_t e = i;
  while (e < doc.size() && !is_space(doc[e])) ++e;
  return {b, e};
}

bool run_is_url(const std::string& run) {
  return run.find("://") != std::string::npos || run.rfind("www.", 0) == 0;
}

// True when the '.' at doc[i] must not end a sentence.
bool protected_period(const std::string& doc, std::size_t i,
                      const PipelineConfig& cfg) {
  // Decimal numbers and digit groups (versions, phone numbers).
  if (i > 0 && i + 1 < doc.size() && is_digit(doc[i - 1]) && is_digit(doc[i + 1]))
    return true;

  auto [b, e] = run_around(doc, i);
  std::string run = doc.substr(b, e - b);
  if (run_is_url(run)) {
    // Inside a URL only the final character may close the sentence.
    return i + 1 != e;
  }

  // Abbreviations: the word ending at this '.' (inclusive) matches the list.
  std::string word = to_lower(doc.substr(b, i - b + 1));
  while (!word.empty() &&
         !std::isalnum(static_cast<unsigned char>(word.front())) &&
         word.front() != '.')
    word.erase(word.begin());
  for (const auto& abbr : cfg.abbreviations) {
    if (word == to_lower(abbr)) return true;
    // "e.g." also protects its internal period when scanned at "e."
    if (to_lower(abbr).rfind(word, 0) == 0 && word.size() < abbr.size())
      return true;
  }
  return false;
}

}  // namespace

std::vector<Sentence> split_sentences(const std::string& document,
                                      const PipelineConfig& config) {
  if (document.find_first_not_of(" \t\r\n") == std::string::npos)
    throw Error(ErrorKind::EmptyInput, "document is empty");

  std::vector<std::pair<std::size_t, std::size_t>> spans;
  std::size_t start = 0;
  const std::size_t n = document.size();
  std::size_t i = 0;
  while (i < n) {
    char c = document[i];
    bool boundary = false;
    if (c == '!' || c == '?') {
      boundary = true;
    } else if (c == '.') {
      boundary = !protected_period(document, i, config);
    }
    if (boundary) {
      // Swallow the whole terminator run (e.g. "?!", "...").
      std::size_t end = i + 1;
      while (end < n &&
             (document[end] == '.' || document[end] == '!' ||
              document[end] == '?'))
        ++end;
      spans.emplace_back(start, end);
      i = end;
      start = end;
    } else {
      ++i;
    }
  }
  if (start < n) spans.emplace_back(start, n);

  std::vector<Sentence> sentences;
  for (auto [b, e] : spans) {
    // Trim the span to its non-whitespace extent.
    while (b < e && is_space(document[b])) ++b;
    while (e > b && is_space(document[e - 1])) --e;
    if (b == e) continue;
    Sentence s;
    s.source_span = {b, e};
    s.text = document.substr(b, e - b);
    s.tokens = analyze_sentence(s.text, config.lexicon);
    sentences.push_back(std::move(s));
  }
  if (sentences.empty())
    throw Error(ErrorKind::EmptyInput, "document has no sentences");
  return sentences;
}

namespace {

// Maximal determiner-adjective*-noun runs; returns head token indices.
std::vector<std::size_t> nominal_group_heads(const Sentence& s) {
  std::vector<std::size_t> heads;
  std::size_t i = 0;
  const auto& t = s.tokens;
  while (i < t.size()) {
    Pos p = t[i].pos;
    if (p == Pos::Determiner || p == Pos::Adjective || p == Pos::Noun ||
        p == Pos::Number) {
      std::size_t last_noun = t.size();
      std::size_t j = i;
      while (j < t.size() &&
             (t[j].pos == Pos::Adjective || t[j].pos == Pos::Noun ||
              t[j].pos == Pos::Number ||
              (j == i && t[j].pos == Pos::Determiner))) {
        if (t[j].pos == Pos::Noun) last_noun = j;
        ++j;
      }
      if (last_noun != t.size()) heads.push_back(last_noun);
      i = j > i ? j : i + 1;
    } else {
      ++i;
    }
  }
  return heads;
}

bool pronoun_is_plural(const std::string& surface_lower, const Lexicon& lex) {
  auto it = lex.entries().find(surface_lower);
  if (it == lex.entries().end()) return false;
  for (const auto& e : it->second)
    if (e.pos == Pos::Pronoun) return e.plural;
  return false;
}

}  // namespace

SegmentedDocument resolve_leading_pronouns(std::vector<Sentence> sentences,
                                           const PipelineConfig& config) {
  SegmentedDocument doc;
  if (sentences.empty())
    throw Error(ErrorKind::EmptyInput, "no sentences to resolve");

  for (std::size_t si = 0; si < sentences.size(); ++si) {
    Sentence& s = sentences[si];
    if (s.tokens.empty()) continue;
    Token& first = s.tokens.front();
    const std::string surf = to_lower(first.surface);
    if (first.pos != Pos::Pronoun || !config.is_leading_pronoun(surf)) continue;

    if (si == 0) {
      throw Error(ErrorKind::UnresolvablePronoun,
                  "document starts with pronoun '" + first.surface + "'",
                  {s.source_span.begin, s.source_span.end});
    }

    // Last agreeing nominal group, walking back through prior sentences.
    bool want_plural = pronoun_is_plural(surf, config.lexicon);
    const Token* antecedent = nullptr;
    for (std::size_t back = si; back-- > 0 && antecedent == nullptr;) {
      auto heads = nominal_group_heads(sentences[back]);
      // Rightmost agreeing head wins; fall back to the rightmost head.
      for (auto it = heads.rbegin(); it != heads.rend(); ++it) {
        const Token& cand = sentences[back].tokens[*it];
        if (cand.plural == want_plural) {
          antecedent = &cand;
          break;
        }
      }
      if (antecedent == nullptr && !heads.empty())
        antecedent = &sentences[back].tokens[heads.back()];
    }
    if (antecedent == nullptr) {
      throw Error(ErrorKind::UnresolvablePronoun,
                  "no antecedent for leading pronoun '" + first.surface + "'",
                  {s.source_span.begin, s.source_span.end});
    }

    Substitution sub;
    sub.sentence_index = si;
    sub.pronoun_surface = first.surface;
    sub.antecedent_text = antecedent->lemma;
    doc.substitutions.push_back(sub);

    first.surface = antecedent->lemma;
    first.lemma = antecedent->lemma;
    first.pos = Pos::Noun;
    first.plural = antecedent->plural;
    first.numeric_value.reset();
  }

  doc.sentences = std::move(sentences);
  return doc;
}

SegmentedDocument segment_document(const std::string& document,
                                   const PipelineConfig& config) {
  return resolve_leading_pronouns(split_sentences(document, config), config);
}

}  // namespace entitree
