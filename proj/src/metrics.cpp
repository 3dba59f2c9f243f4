#include "entitree/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "entitree/errors.hpp"
#include "entitree/lexicon.hpp"

namespace entitree {

void TripletSet::dedup() {
  std::vector<Triplet> unique;
  for (const auto& t : triplets) {
    if (std::find(unique.begin(), unique.end(), t) == unique.end())
      unique.push_back(t);
  }
  triplets = std::move(unique);
}

std::string canonical_pair_string(const std::string& name,
                                  const std::vector<std::string>& attributes) {
  std::vector<std::string> attrs;
  attrs.reserve(attributes.size());
  for (const auto& a : attributes) attrs.push_back(to_lower(a));
  std::sort(attrs.begin(), attrs.end());
  std::string out;
  for (const auto& a : attrs) {
    out += a;
    out += ' ';
  }
  out += to_lower(name);
  return out;
}

std::string triplet_string(const Triplet& t) {
  return canonical_pair_string(t.subject_name, t.subject_attributes) + " " +
         to_lower(t.relation) + " " +
         canonical_pair_string(t.object_name, t.object_attributes);
}

// --- BLEU ---------------------------------------------------------------------

namespace {

std::vector<std::string> whitespace_tokens(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

}  // namespace

double bleu(const std::string& candidate, const std::string& reference) {
  std::vector<std::string> c = whitespace_tokens(candidate);
  std::vector<std::string> r = whitespace_tokens(reference);
  if (c.empty() || r.empty())
    throw Error(ErrorKind::EmptyInput, "bleu over an empty string");

  const std::size_t max_n = std::min<std::size_t>(4, std::min(c.size(), r.size()));
  double log_sum = 0.0;
  for (std::size_t n = 1; n <= max_n; ++n) {
    std::map<std::vector<std::string>, long> cand_grams, ref_grams;
    for (std::size_t i = 0; i + n <= c.size(); ++i)
      ++cand_grams[{c.begin() + i, c.begin() + i + n}];
    for (std::size_t i = 0; i + n <= r.size(); ++i)
      ++ref_grams[{r.begin() + i, r.begin() + i + n}];
    long matched = 0, total = 0;
    for (const auto& [gram, count] : cand_grams) {
      total += count;
      auto it = ref_grams.find(gram);
      if (it != ref_grams.end()) matched += std::min(count, it->second);
    }
    if (matched == 0) return 0.0;  // no smoothing
    log_sum += std::log(static_cast<double>(matched) / total) / max_n;
  }
  double bp = 1.0;
  if (c.size() < r.size())
    bp = std::exp(1.0 - static_cast<double>(r.size()) / c.size());
  return bp * std::exp(log_sum);
}

// --- Pair IoU ---------------------------------------------------------------------

double pair_iou(const TripletSet& refs, const TripletSet& cands) {
  if (refs.triplets.empty())
    throw Error(ErrorKind::EmptyReference, "reference triplet set is empty");
  std::set<std::pair<std::string, std::string>> a, b;
  for (const auto& t : refs.triplets)
    a.insert({canonical_pair_string(t.subject_name, t.subject_attributes),
              canonical_pair_string(t.object_name, t.object_attributes)});
  for (const auto& t : cands.triplets)
    b.insert({canonical_pair_string(t.subject_name, t.subject_attributes),
              canonical_pair_string(t.object_name, t.object_attributes)});
  std::size_t intersection = 0;
  for (const auto& p : a) intersection += b.count(p);
  std::size_t uni = a.size() + b.size() - intersection;
  if (uni == 0) return 0.0;
  return static_cast<double>(intersection) / static_cast<double>(uni);
}

// --- BLEU-based set metrics ----------------------------------------------------------

namespace {

double mean_b(const std::string& x, const std::string& y) {
  return (bleu(x, y) + bleu(y, x)) / 2.0;
}

double max_b(const std::string& x, const std::string& y) {
  return std::max(bleu(x, y), bleu(y, x));
}

template <typename BFn>
double pairs_metric(const TripletSet& refs, const TripletSet& cands,
                    Threshold k, MatchMode mode, BFn b) {
  if (refs.triplets.empty())
    throw Error(ErrorKind::EmptyReference, "reference triplet set is empty");
  if (cands.triplets.empty()) return 0.0;

  long count = 0;
  for (const auto& ref : refs.triplets) {
    const std::string rs =
        canonical_pair_string(ref.subject_name, ref.subject_attributes);
    const std::string ro =
        canonical_pair_string(ref.object_name, ref.object_attributes);
    long matches_for_ref = 0;
    for (const auto& cand : cands.triplets) {
      const std::string cs =
          canonical_pair_string(cand.subject_name, cand.subject_attributes);
      const std::string co =
          canonical_pair_string(cand.object_name, cand.object_attributes);
      if (b(rs, cs) >= k.k && b(ro, co) >= k.k) ++matches_for_ref;
    }
    if (mode == MatchMode::MatchedReference)
      count += matches_for_ref > 0 ? 1 : 0;
    else
      count += matches_for_ref;
  }
  return static_cast<double>(count) /
         static_cast<double>(refs.triplets.size());
}

}  // namespace

double pairs_mean_bleu(const TripletSet& refs, const TripletSet& cands,
                       Threshold k, MatchMode mode) {
  return pairs_metric(refs, cands, k, mode, mean_b);
}

double pairs_exclusive_bleu(const TripletSet& refs, const TripletSet& cands,
                            Threshold k, MatchMode mode) {
  return pairs_metric(refs, cands, k, mode, max_b);
}

double triplet_bleu(const TripletSet& refs, const TripletSet& cands,
                    std::optional<Threshold> k, MatchMode mode) {
  if (refs.triplets.empty())
    throw Error(ErrorKind::EmptyReference, "reference triplet set is empty");
  if (cands.triplets.empty()) return 0.0;

  double total = 0.0;
  for (const auto& ref : refs.triplets) {
    const std::string rw = triplet_string(ref);
    double best = 0.0;
    double sum = 0.0;
    long matches = 0;
    for (const auto& cand : cands.triplets) {
      double b = max_b(rw, triplet_string(cand));
      best = std::max(best, b);
      sum += b;
      if (k && b >= k->k) ++matches;
    }
    if (k) {
      total += mode == MatchMode::MatchedReference
                   ? (matches > 0 ? 1.0 : 0.0)
                   : static_cast<double>(matches);
    } else {
      total += mode == MatchMode::MatchedReference ? best : sum;
    }
  }
  return total / static_cast<double>(refs.triplets.size());
}

}  // namespace entitree
