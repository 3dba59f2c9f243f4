// Corpus file formats (JSON Lines), triplet extraction for evaluation, and
// metric reports.

#ifndef ENTITREE_CORPUS_HPP
#define ENTITREE_CORPUS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "entitree/metrics.hpp"
#include "entitree/scene_graph.hpp"

namespace entitree {

// One labeled example: a text with its reference triplets. The dependencies
// field is carried through untouched for dataset compatibility.
struct CorpusExample {
  std::string theme;
  std::string content;
  std::vector<Triplet> triplets;
  std::optional<std::string> dependencies;  // opaque JSON, re-emitted verbatim
};

std::vector<CorpusExample> load_corpus_jsonl(const std::string& path);
void save_corpus_jsonl(const std::string& path,
                       const std::vector<CorpusExample>& examples);

// Reference/hypothesis files: {"id": ..., "triplets": [...]} per line.
struct EvalExample {
  std::string id;
  TripletSet triplets;
};

std::vector<EvalExample> load_triplet_jsonl(const std::string& path,
                                            bool dedup_refs);
void save_triplet_jsonl(const std::string& path,
                        const std::vector<EvalExample>& examples);

// Relation triples of a scene graph as evaluation triplets.
std::vector<Triplet> triplets_from_scene(const SceneGraph& scene);

// --- corpus-level evaluation ----------------------------------------------------

struct ExampleScores {
  std::string id;
  double iou_pair = 0.0;
  double bleu_exclusive = 0.0;
  double bleu_mean = 0.0;
  double bleu_triplet = 0.0;
};

struct MetricReport {
  double k = 0.6;
  MatchMode mode = MatchMode::MatchedReference;
  std::size_t examples = 0;
  double iou_pair = 0.0;
  double bleu_exclusive = 0.0;
  double bleu_mean = 0.0;
  double bleu_triplet = 0.0;
  std::vector<ExampleScores> per_example;  // sorted by id
};

// Scores each (reference, candidate) pair and macro-averages over examples.
// An example with no reference triplets scores 1.0 when the candidate set is
// also empty and 0.0 otherwise.
MetricReport evaluate_examples(
    const std::vector<std::pair<EvalExample, EvalExample>>& pairs, double k,
    MatchMode mode);

// Plain-text table mirroring the evaluation-table layout.
std::string report_text(const MetricReport& report,
                        const std::string& column_title);
std::string report_json(const MetricReport& report);

}  // namespace entitree

#endif  // ENTITREE_CORPUS_HPP
