// Triplet-extraction metrics: Pair IoU plus three BLEU-based scores over
// reference and candidate triplet sets.

#ifndef ENTITREE_METRICS_HPP
#define ENTITREE_METRICS_HPP

#include <optional>
#include <string>
#include <vector>

namespace entitree {

struct Triplet {
  std::string subject_name;
  std::vector<std::string> subject_attributes;
  std::string relation;
  std::string object_name;
  std::vector<std::string> object_attributes;

  bool operator==(const Triplet&) const = default;
};

struct TripletSet {
  std::vector<Triplet> triplets;
  std::string label;

  // References are deduplicated on load; candidates may repeat.
  void dedup();
};

struct Threshold {
  double k = 0.6;
};

// The paper's double sum counts every (reference, candidate) pair over the
// threshold, which can exceed 1; matched-reference counts each reference at
// most once and stays in [0, 1].
enum class MatchMode { MatchedReference, Literal };

// Sorted attributes joined by spaces, then the name; lowercase.
std::string canonical_pair_string(const std::string& name,
                                  const std::vector<std::string>& attributes);

// Papineni-style sentence BLEU on whitespace tokens: modified n-gram
// precision for n up to min(4, |cand|, |ref|), uniform weights, brevity
// penalty exp(1 - r/c) for short candidates, no smoothing (any zero
// precision gives 0). Throws Error(EmptyInput) on an empty string.
double bleu(const std::string& candidate, const std::string& reference);

// |A intersect B| / |A union B| over canonical (subject, object) pairs.
double pair_iou(const TripletSet& refs, const TripletSet& cands);

// B(x,y) = (bleu(x,y) + bleu(y,x)) / 2, both subject and object must clear k.
double pairs_mean_bleu(const TripletSet& refs, const TripletSet& cands,
                       Threshold k,
                       MatchMode mode = MatchMode::MatchedReference);

// As pairs_mean_bleu with B(x,y) = max of the two directions.
double pairs_exclusive_bleu(const TripletSet& refs, const TripletSet& cands,
                            Threshold k,
                            MatchMode mode = MatchMode::MatchedReference);

// Whole-triplet variant on "subject relation object" strings, max-direction
// B. Without a threshold the score is the mean best-candidate B per
// reference (the unthresholded variant reported by the evaluation table).
double triplet_bleu(const TripletSet& refs, const TripletSet& cands,
                    std::optional<Threshold> k = std::nullopt,
                    MatchMode mode = MatchMode::MatchedReference);

// W(t): canonical subject string + " " + relation + " " + canonical object.
std::string triplet_string(const Triplet& t);

}  // namespace entitree

#endif  // ENTITREE_METRICS_HPP
