// The bundled pattern checklist: canonical sentences per construction with
// their expected triplets.

#ifndef ENTITREE_PATTERN_SUITE_HPP
#define ENTITREE_PATTERN_SUITE_HPP

#include <string>
#include <vector>

#include "entitree/metrics.hpp"

namespace entitree {

enum class PatternKind {
  AdjectivalModifier,
  SubjectPredicateObject,
  SubjectPredicate,
  Copular,
  Prepositional,
  Possessive,
  Passive,
  ClausalModifier,
};

const char* pattern_kind_name(PatternKind k);

struct PatternCase {
  PatternKind pattern;
  std::string id;
  std::string text;  // may span several sentences
  std::vector<Triplet> expected_triplets;
};

// All bundled cases; covers every construction plus plural, cardinality,
// inheritance and type scenarios.
const std::vector<PatternCase>& pattern_suite();

}  // namespace entitree

#endif  // ENTITREE_PATTERN_SUITE_HPP
