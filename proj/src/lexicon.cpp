#include "entitree/lexicon.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "entitree/errors.hpp"

namespace entitree {

const char* pos_name(Pos p) {
  switch (p) {
    case Pos::Noun:        return "noun";
    case Pos::Verb:        return "verb";
    case Pos::Adjective:   return "adj";
    case Pos::Determiner:  return "det";
    case Pos::Pronoun:     return "pron";
    case Pos::Preposition: return "prep";
    case Pos::Conjunction: return "conj";
    case Pos::Number:      return "num";
    case Pos::Adverb:      return "adv";
    case Pos::Copula:      return "cop";
    case Pos::Other:       return "other";
  }
  return "other";
}

std::string to_lower(const std::string& s) {
  std::string out = s;
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

namespace {

std::optional<Pos> pos_from_name(const std::string& name) {
  static const std::unordered_map<std::string, Pos> table = {
      {"noun", Pos::Noun},        {"verb", Pos::Verb},
      {"adj", Pos::Adjective},    {"det", Pos::Determiner},
      {"pron", Pos::Pronoun},     {"prep", Pos::Preposition},
      {"conj", Pos::Conjunction}, {"num", Pos::Number},
      {"adv", Pos::Adverb},       {"cop", Pos::Copula},
      {"other", Pos::Other},
  };
  auto it = table.find(name);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

bool is_word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '\'' || c == '-' ||
         c == '_';
}

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

bool looks_like_url(const std::string& run) {
  return run.find("://") != std::string::npos || run.rfind("www.", 0) == 0;
}

bool is_vowel(char c) {
  c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

}  // namespace

// --- Lexicon ----------------------------------------------------------------

void Lexicon::add(const std::string& surface, const std::string& lemma, Pos pos,
                  bool plural) {
  entries_[to_lower(surface)].push_back(LexEntry{to_lower(lemma), pos, plural});
}

void Lexicon::load_text(const std::string& text, const std::string& origin) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  // Surfaces redefined by this load replace their previous readings once.
  std::unordered_set<std::string> touched;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cols;
    std::size_t start = 0;
    while (true) {
      std::size_t tab = line.find('\t', start);
      cols.push_back(line.substr(start, tab - start));
      if (tab == std::string::npos) break;
      start = tab + 1;
    }
    if (cols.size() < 3 || cols.size() > 4) {
      throw Error(ErrorKind::ConfigError,
                  origin + ":" + std::to_string(lineno) +
                      ": expected surface<TAB>lemma<TAB>pos[<TAB>plural]");
    }
    auto pos = pos_from_name(cols[2]);
    if (!pos) {
      throw Error(ErrorKind::ConfigError, origin + ":" + std::to_string(lineno) +
                                              ": unknown pos '" + cols[2] + "'");
    }
    bool plural = cols.size() == 4 && cols[3] == "plural";
    std::string key = to_lower(cols[0]);
    if (touched.insert(key).second) entries_[key].clear();
    entries_[key].push_back(LexEntry{to_lower(cols[1]), *pos, plural});
  }
}

void Lexicon::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, "cannot open lexicon file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  load_text(buf.str(), path);
}

const LexEntry* Lexicon::lookup(const std::string& surface_lower) const {
  auto it = entries_.find(surface_lower);
  if (it == entries_.end() || it->second.empty()) return nullptr;
  return &it->second.front();
}

bool Lexicon::has_with_pos(const std::string& surface_lower, Pos pos) const {
  auto it = entries_.find(surface_lower);
  if (it == entries_.end()) return false;
  for (const auto& e : it->second)
    if (e.pos == pos) return true;
  return false;
}

// --- tokenize ---------------------------------------------------------------

std::vector<Token> tokenize(const std::string& raw_sentence) {
  std::string_view s(raw_sentence);
  std::size_t first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos)
    throw Error(ErrorKind::EmptyInput, "sentence is empty");

  std::vector<Token> tokens;
  auto push = [&](std::size_t offset, std::string surface) {
    Token t;
    t.offset = offset;
    t.index = tokens.size();
    t.surface = std::move(surface);
    tokens.push_back(std::move(t));
  };

  std::size_t i = 0;
  const std::size_t n = s.size();
  while (i < n) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    // Whole non-space run, to detect URLs up front.
    std::size_t run_end = i;
    while (run_end < n && !std::isspace(static_cast<unsigned char>(s[run_end])))
      ++run_end;
    std::string run(s.substr(i, run_end - i));
    if (looks_like_url(run)) {
      // Peel trailing sentence punctuation off the URL.
      std::size_t keep = run.size();
      while (keep > 0 && (run[keep - 1] == '.' || run[keep - 1] == ',' ||
                          run[keep - 1] == '!' || run[keep - 1] == '?' ||
                          run[keep - 1] == ';' || run[keep - 1] == ':'))
        --keep;
      if (keep > 0) push(i, run.substr(0, keep));
      for (std::size_t p = keep; p < run.size(); ++p)
        push(i + p, std::string(1, run[p]));
      i = run_end;
      continue;
    }
    if (is_word_char(c)) {
      std::size_t j = i;
      while (j < n && is_word_char(s[j])) ++j;
      // Keep '.' inside digit contexts (3.50, 1.2.3) glued to the token.
      while (j < n && s[j] == '.' && j + 1 < n && is_digit(s[j + 1]) && j > i &&
             is_digit(s[j - 1])) {
        ++j;
        while (j < n && is_word_char(s[j])) ++j;
      }
      std::string word(s.substr(i, j - i));
      // Possessive clitics become their own tokens.
      if (word.size() > 2 && (word.ends_with("'s") || word.ends_with("'S"))) {
        push(i, word.substr(0, word.size() - 2));
        push(i + word.size() - 2, word.substr(word.size() - 2));
      } else if (word.size() > 1 && word.back() == '\'') {
        push(i, word.substr(0, word.size() - 1));
        push(i + word.size() - 1, "'");
      } else {
        push(i, word);
      }
      i = j;
      continue;
    }
    push(i, std::string(1, c));
    ++i;
  }
  if (tokens.empty()) throw Error(ErrorKind::EmptyInput, "sentence is empty");
  return tokens;
}

// --- parse_number_word --------------------------------------------------------

std::optional<long> parse_number_word(const std::string& surface) {
  const std::string w = to_lower(surface);
  if (w.empty()) return std::nullopt;
  if (std::all_of(w.begin(), w.end(), [](char c) { return is_digit(c); })) {
    if (w.size() > 9) return std::nullopt;
    return std::stol(w);
  }
  static const std::unordered_map<std::string, long> units = {
      {"zero", 0},     {"one", 1},       {"two", 2},      {"three", 3},
      {"four", 4},     {"five", 5},      {"six", 6},      {"seven", 7},
      {"eight", 8},    {"nine", 9},      {"ten", 10},     {"eleven", 11},
      {"twelve", 12},  {"thirteen", 13}, {"fourteen", 14},{"fifteen", 15},
      {"sixteen", 16}, {"seventeen", 17},{"eighteen", 18},{"nineteen", 19}};
  static const std::unordered_map<std::string, long> tens = {
      {"twenty", 20}, {"thirty", 30}, {"forty", 40},  {"fifty", 50},
      {"sixty", 60},  {"seventy", 70},{"eighty", 80}, {"ninety", 90}};
  if (auto it = units.find(w); it != units.end()) return it->second;
  if (auto it = tens.find(w); it != tens.end()) return it->second;
  if (w == "hundred" || w == "one-hundred") return 100;
  // hyphenated compounds: twenty-one .. ninety-nine
  std::size_t dash = w.find('-');
  if (dash != std::string::npos) {
    auto t = tens.find(w.substr(0, dash));
    auto u = units.find(w.substr(dash + 1));
    if (t != tens.end() && u != units.end() && u->second >= 1 && u->second <= 9)
      return t->second + u->second;
  }
  return std::nullopt;
}

// --- tag_pos ------------------------------------------------------------------

namespace {

// Crude pos guess for a not-yet-tagged word, mirroring the unknown-word rules.
Pos sketch_pos(const std::string& w, const Lexicon& lex) {
  if (const LexEntry* e = lex.lookup(w)) return e->pos;
  if (w.size() > 1 && w.back() == 's' && !w.ends_with("ss")) {
    std::string stem = w.substr(0, w.size() - 1);
    std::string es_stem =
        w.size() > 2 && w.ends_with("es") ? w.substr(0, w.size() - 2) : "";
    if (lex.has_with_pos(stem, Pos::Verb) ||
        (!es_stem.empty() && lex.has_with_pos(es_stem, Pos::Verb)))
      if (!lex.has_with_pos(stem, Pos::Noun)) return Pos::Verb;
  }
  return Pos::Noun;
}

bool noun_context_follows(const std::vector<Token>& tokens, std::size_t i,
                          const Lexicon& lex) {
  // True when token i is followed by adjectives/nouns, i.e. determiner reading.
  for (std::size_t j = i + 1; j < tokens.size(); ++j) {
    Pos p = sketch_pos(to_lower(tokens[j].surface), lex);
    if (p == Pos::Adjective || p == Pos::Number) continue;
    return p == Pos::Noun;
  }
  return false;
}

Pos previous_pos(const std::vector<Token>& tokens, std::size_t i) {
  if (i == 0) return Pos::Other;
  return tokens[i - 1].pos;
}

// Picks one reading of an ambiguous surface using the left context.
const LexEntry* pick_reading(const std::vector<LexEntry>& readings,
                             const std::vector<Token>& tokens, std::size_t i) {
  if (readings.size() == 1) return &readings[0];
  Pos prev = previous_pos(tokens, i);
  auto find = [&](Pos p) -> const LexEntry* {
    for (const auto& r : readings)
      if (r.pos == p) return &r;
    return nullptr;
  };
  if (prev == Pos::Determiner || prev == Pos::Adjective || prev == Pos::Number) {
    if (auto* e = find(Pos::Noun)) return e;
    if (auto* e = find(Pos::Adjective)) return e;
  }
  if (prev == Pos::Copula) {
    if (auto* e = find(Pos::Adjective)) return e;
    if (auto* e = find(Pos::Verb)) return e;
  }
  if (prev == Pos::Noun || prev == Pos::Pronoun) {
    if (auto* e = find(Pos::Verb)) return e;
  }
  return &readings[0];
}

}  // namespace

void tag_pos(std::vector<Token>& tokens, const Lexicon& lex) {
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    Token& t = tokens[i];
    const std::string w = to_lower(t.surface);
    t.plural = false;
    t.numeric_value.reset();

    // Punctuation and clitics.
    if (w == "'s" || w == "'") {
      t.pos = Pos::Other;
      t.lemma = w;
      continue;
    }
    if (!std::isalnum(static_cast<unsigned char>(w[0])) || looks_like_url(w)) {
      t.pos = Pos::Other;
      t.lemma = w;
      continue;
    }

    // Digits and number words.
    if (is_digit(w[0])) {
      auto num = parse_number_word(w);
      t.pos = Pos::Number;
      t.lemma = w;
      t.numeric_value = num;
      if (!t.numeric_value) t.numeric_value = 0;
      continue;
    }

    auto it = lex.entries().find(w);
    if (it != lex.entries().end() && !it->second.empty()) {
      const LexEntry* e = pick_reading(it->second, tokens, i);
      t.pos = e->pos;
      t.lemma = e->lemma;
      // Token.plural is a noun property; pronoun/quantifier number lives in
      // the lexicon entry and is queried where agreement is decided.
      t.plural = e->pos == Pos::Noun && e->plural;
      // Demonstratives and relatives: determiner before nominal material.
      // "that" right after a noun reads as a relative pronoun instead.
      if ((w == "this" || w == "these" || w == "those" || w == "that") &&
          t.pos == Pos::Pronoun && noun_context_follows(tokens, i, lex) &&
          !(w == "that" && previous_pos(tokens, i) == Pos::Noun)) {
        t.pos = Pos::Determiner;
      }
      if (t.pos == Pos::Number) {
        t.numeric_value = parse_number_word(w);
        if (!t.numeric_value) t.numeric_value = 0;
      }
      continue;
    }

    // Unknown word: suffix heuristics, Noun as the last resort.
    Pos prev = previous_pos(tokens, i);
    if (w.size() > 3 && w.ends_with("ly")) {
      t.pos = Pos::Adverb;
      t.lemma = w;
      continue;
    }
    if (w.size() > 2 && w.ends_with("ed")) {
      // After determiner/adjective read it as a participle acting adjectivally.
      if (prev == Pos::Determiner || prev == Pos::Adjective) {
        t.pos = Pos::Adjective;
      } else {
        t.pos = Pos::Verb;
      }
      t.lemma = "";  // filled by lemmatize below
      t.lemma = lemmatize(t, lex);
      continue;
    }
    if (w.size() > 4 && w.ends_with("ing")) {
      t.pos = (prev == Pos::Determiner || prev == Pos::Adjective) ? Pos::Noun
                                                                  : Pos::Verb;
      t.lemma = lemmatize(t, lex);
      continue;
    }
    if (w.size() > 1 && w.back() == 's' && !w.ends_with("ss")) {
      // "-s": 3rd-person verb after a nominal, plural noun after a determiner.
      std::string stem = w.substr(0, w.size() - 1);
      std::string es_stem =
          w.size() > 2 && w.ends_with("es") ? w.substr(0, w.size() - 2) : "";
      bool verb_stem = lex.has_with_pos(stem, Pos::Verb) ||
                       (!es_stem.empty() && lex.has_with_pos(es_stem, Pos::Verb));
      bool noun_stem = lex.has_with_pos(stem, Pos::Noun) ||
                       (!es_stem.empty() && lex.has_with_pos(es_stem, Pos::Noun));
      if (verb_stem && !noun_stem) {
        t.pos = Pos::Verb;
      } else if (noun_stem && !verb_stem) {
        t.pos = Pos::Noun;
        t.plural = true;
      } else if (prev == Pos::Determiner || prev == Pos::Adjective ||
                 prev == Pos::Number) {
        t.pos = Pos::Noun;
        t.plural = true;
      } else if (prev == Pos::Noun || prev == Pos::Pronoun) {
        t.pos = Pos::Verb;
      } else {
        t.pos = Pos::Noun;
        t.plural = true;
      }
      t.lemma = lemmatize(t, lex);
      continue;
    }
    t.pos = Pos::Noun;
    t.lemma = w;
  }
  // Second pass: lemma/plural for anything the first pass left blank.
  for (auto& t : tokens) {
    if (t.lemma.empty()) t.lemma = lemmatize(t, lex);
  }
}

// --- lemmatize ----------------------------------------------------------------

namespace {

bool ends_with_sibilant(const std::string& stem) {
  return stem.ends_with("s") || stem.ends_with("x") || stem.ends_with("z") ||
         stem.ends_with("ch") || stem.ends_with("sh");
}

std::string strip_noun_plural(const std::string& w) {
  if (w.size() > 3 && w.ends_with("ies")) return w.substr(0, w.size() - 3) + "y";
  if (w.size() > 2 && w.ends_with("es")) {
    std::string stem = w.substr(0, w.size() - 2);
    if (ends_with_sibilant(stem)) return stem;  // bosses, boxes, matches
  }
  if (w.size() > 1 && w.ends_with("s") && !w.ends_with("ss"))
    return w.substr(0, w.size() - 1);
  return w;
}

std::string strip_verb_inflection(const std::string& w, const Lexicon& lex) {
  if (w.size() > 3 && w.ends_with("ies")) return w.substr(0, w.size() - 3) + "y";
  if (w.size() > 3 && w.ends_with("ied")) return w.substr(0, w.size() - 3) + "y";
  if (w.size() > 2 && w.ends_with("es")) {
    std::string stem = w.substr(0, w.size() - 2);
    if (ends_with_sibilant(stem)) return stem;  // processes, watches
    if (lex.has_with_pos(stem + "e", Pos::Verb)) return stem + "e";
  }
  if (w.size() > 1 && w.ends_with("s") && !w.ends_with("ss"))
    return w.substr(0, w.size() - 1);
  if (w.size() > 2 && w.ends_with("ed")) {
    std::string stem = w.substr(0, w.size() - 2);
    if (lex.has_with_pos(stem, Pos::Verb)) return stem;           // ordered
    if (lex.has_with_pos(stem + "e", Pos::Verb)) return stem + "e";  // described
    if (stem.size() > 2 && stem[stem.size() - 1] == stem[stem.size() - 2] &&
        !is_vowel(stem.back()))
      return stem.substr(0, stem.size() - 1);  // stopped -> stop
    return stem;
  }
  if (w.size() > 3 && w.ends_with("ing")) {
    std::string stem = w.substr(0, w.size() - 3);
    if (lex.has_with_pos(stem, Pos::Verb)) return stem;             // holding
    if (lex.has_with_pos(stem + "e", Pos::Verb)) return stem + "e";  // making
    if (stem.size() > 2 && stem[stem.size() - 1] == stem[stem.size() - 2] &&
        !is_vowel(stem.back()))
      return stem.substr(0, stem.size() - 1);  // running -> run
    return stem;
  }
  return w;
}

}  // namespace

std::string lemmatize(const Token& token, const Lexicon& lex) {
  std::string w = to_lower(token.surface);
  if (w.empty()) return w;
  if (token.pos == Pos::Number || token.pos == Pos::Other) return w;

  auto it = lex.entries().find(w);
  if (it != lex.entries().end()) {
    // Prefer the reading matching the assigned pos.
    for (const auto& e : it->second)
      if (e.pos == token.pos) return e.lemma;
    if (!it->second.empty()) return it->second.front().lemma;
  }
  if (token.pos == Pos::Noun) return strip_noun_plural(w);
  if (token.pos == Pos::Verb || token.pos == Pos::Copula ||
      token.pos == Pos::Adjective)
    return strip_verb_inflection(w, lex);
  return w;
}

std::vector<Token> analyze_sentence(const std::string& raw_sentence,
                                    const Lexicon& lex) {
  std::vector<Token> tokens = tokenize(raw_sentence);
  tag_pos(tokens, lex);
  for (auto& t : tokens) {
    if (t.lemma.empty()) t.lemma = lemmatize(t, lex);
    // Surface-level plural detection for nouns the lexicon knows only in
    // singular form.
    if (t.pos == Pos::Noun && !t.plural) {
      std::string w = to_lower(t.surface);
      if (w != t.lemma && w.size() > t.lemma.size() && w.ends_with("s"))
        t.plural = true;
    }
  }
  return tokens;
}

}  // namespace entitree
