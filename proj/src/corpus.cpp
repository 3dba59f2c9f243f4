#include "entitree/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "entitree/errors.hpp"

namespace entitree {

using nlohmann::json;

namespace {

json triplet_to_json(const Triplet& t) {
  json j;
  j["subject"] = t.subject_name;
  j["subject_attributes"] = t.subject_attributes;
  j["relation"] = t.relation;
  j["object"] = t.object_name;
  j["object_attributes"] = t.object_attributes;
  return j;
}

Triplet triplet_from_json(const json& j, const std::string& where) {
  if (!j.is_object())
    throw Error(ErrorKind::CorpusError, where + ": triplet must be an object");
  Triplet t;
  auto str = [&](const char* key) {
    auto it = j.find(key);
    if (it == j.end() || !it->is_string())
      throw Error(ErrorKind::CorpusError,
                  where + ": missing string field '" + key + "'");
    return it->get<std::string>();
  };
  auto strings = [&](const char* key) {
    std::vector<std::string> out;
    auto it = j.find(key);
    if (it == j.end()) return out;  // attribute lists default to empty
    if (!it->is_array())
      throw Error(ErrorKind::CorpusError,
                  where + ": field '" + key + "' must be an array");
    for (const auto& v : *it) {
      if (!v.is_string())
        throw Error(ErrorKind::CorpusError,
                    where + ": field '" + key + "' must hold strings");
      out.push_back(v.get<std::string>());
    }
    return out;
  };
  t.subject_name = str("subject");
  t.subject_attributes = strings("subject_attributes");
  t.relation = str("relation");
  t.object_name = str("object");
  t.object_attributes = strings("object_attributes");
  if (t.subject_name.empty() || t.relation.empty() || t.object_name.empty())
    throw Error(ErrorKind::CorpusError,
                where + ": subject, relation and object must be non-empty");
  return t;
}

json parse_line(const std::string& line, const std::string& path,
                std::size_t lineno) {
  try {
    return json::parse(line);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::CorpusError, path + ":" + std::to_string(lineno) +
                                            ": " + e.what());
  }
}

}  // namespace

std::vector<CorpusExample> load_corpus_jsonl(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, "cannot open corpus: " + path);
  std::vector<CorpusExample> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json j = parse_line(line, path, lineno);
    const std::string where = path + ":" + std::to_string(lineno);
    CorpusExample ex;
    if (auto it = j.find("theme"); it != j.end() && it->is_string())
      ex.theme = it->get<std::string>();
    auto content = j.find("content");
    if (content == j.end() || !content->is_string() ||
        content->get<std::string>().empty())
      throw Error(ErrorKind::CorpusError,
                  where + ": 'content' must be a non-empty string");
    ex.content = content->get<std::string>();
    if (auto it = j.find("triplets"); it != j.end()) {
      if (!it->is_array())
        throw Error(ErrorKind::CorpusError, where + ": 'triplets' must be an array");
      for (const auto& jt : *it)
        ex.triplets.push_back(triplet_from_json(jt, where));
    }
    if (auto it = j.find("dependencies"); it != j.end() && !it->is_null())
      ex.dependencies = it->dump();
    out.push_back(std::move(ex));
  }
  return out;
}

void save_corpus_jsonl(const std::string& path,
                       const std::vector<CorpusExample>& examples) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::IoError, "cannot write corpus: " + path);
  for (const auto& ex : examples) {
    json j;
    j["theme"] = ex.theme;
    j["content"] = ex.content;
    json ts = json::array();
    for (const auto& t : ex.triplets) ts.push_back(triplet_to_json(t));
    j["triplets"] = std::move(ts);
    if (ex.dependencies) j["dependencies"] = json::parse(*ex.dependencies);
    out << j.dump() << "\n";
  }
}

std::vector<EvalExample> load_triplet_jsonl(const std::string& path,
                                            bool dedup_refs) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, "cannot open triplet file: " + path);
  std::vector<EvalExample> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json j = parse_line(line, path, lineno);
    const std::string where = path + ":" + std::to_string(lineno);
    EvalExample ex;
    if (auto it = j.find("id"); it != j.end() && it->is_string())
      ex.id = it->get<std::string>();
    else
      ex.id = "line-" + std::to_string(lineno);
    auto it = j.find("triplets");
    if (it == j.end() || !it->is_array())
      throw Error(ErrorKind::CorpusError, where + ": 'triplets' must be an array");
    for (const auto& jt : *it)
      ex.triplets.triplets.push_back(triplet_from_json(jt, where));
    ex.triplets.label = ex.id;
    if (dedup_refs) ex.triplets.dedup();
    out.push_back(std::move(ex));
  }
  return out;
}

void save_triplet_jsonl(const std::string& path,
                        const std::vector<EvalExample>& examples) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::IoError, "cannot write triplet file: " + path);
  for (const auto& ex : examples) {
    json j;
    j["id"] = ex.id;
    json ts = json::array();
    for (const auto& t : ex.triplets.triplets) ts.push_back(triplet_to_json(t));
    j["triplets"] = std::move(ts);
    out << j.dump() << "\n";
  }
}

std::vector<Triplet> triplets_from_scene(const SceneGraph& scene) {
  std::vector<Triplet> out;
  for (const auto& r : scene.relationships) {
    Triplet t;
    t.subject_name = r.subject.head_lemma;
    t.subject_attributes = r.subject.modifiers;
    t.relation = r.predicate;
    t.object_name = r.object.head_lemma;
    t.object_attributes = r.object.modifiers;
    out.push_back(std::move(t));
  }
  return out;
}

// --- evaluation -----------------------------------------------------------------

MetricReport evaluate_examples(
    const std::vector<std::pair<EvalExample, EvalExample>>& pairs, double k,
    MatchMode mode) {
  MetricReport report;
  report.k = k;
  report.mode = mode;
  report.examples = pairs.size();

  for (const auto& [ref, cand] : pairs) {
    ExampleScores row;
    row.id = ref.id;
    if (ref.triplets.triplets.empty()) {
      // Nothing to find: perfect iff nothing was claimed.
      double s = cand.triplets.triplets.empty() ? 1.0 : 0.0;
      row.iou_pair = row.bleu_exclusive = row.bleu_mean = row.bleu_triplet = s;
    } else {
      row.iou_pair = pair_iou(ref.triplets, cand.triplets);
      row.bleu_exclusive =
          pairs_exclusive_bleu(ref.triplets, cand.triplets, {k}, mode);
      row.bleu_mean = pairs_mean_bleu(ref.triplets, cand.triplets, {k}, mode);
      row.bleu_triplet =
          triplet_bleu(ref.triplets, cand.triplets, std::nullopt, mode);
    }
    report.per_example.push_back(std::move(row));
  }
  std::sort(report.per_example.begin(), report.per_example.end(),
            [](const ExampleScores& a, const ExampleScores& b) {
              return a.id < b.id;
            });

  if (!report.per_example.empty()) {
    for (const auto& row : report.per_example) {
      report.iou_pair += row.iou_pair;
      report.bleu_exclusive += row.bleu_exclusive;
      report.bleu_mean += row.bleu_mean;
      report.bleu_triplet += row.bleu_triplet;
    }
    const double n = static_cast<double>(report.per_example.size());
    report.iou_pair /= n;
    report.bleu_exclusive /= n;
    report.bleu_mean /= n;
    report.bleu_triplet /= n;
  }
  return report;
}

namespace {

std::string fixed3(double v) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(3) << v;
  return out.str();
}

std::string k_suffix(double k) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(2) << k;
  return out.str();
}

}  // namespace

std::string report_text(const MetricReport& report,
                        const std::string& column_title) {
  // Reference triplets are counted per example and averaged over examples
  // (micro within, macro across).
  std::ostringstream out;
  out << "# per-example scores, macro-averaged over " << report.examples
      << " examples";
  if (report.mode == MatchMode::Literal) out << " (literal double-sum mode)";
  out << "\n";
  const std::string excl = "BLEU_Exclusive@" + k_suffix(report.k);
  const std::string mean = "BLEU_Mean@" + k_suffix(report.k);
  std::size_t width = std::max<std::size_t>(excl.size(), 12) + 4;
  auto row = [&](const std::string& name, double v) {
    out << name << std::string(width - name.size(), ' ') << fixed3(v) << "\n";
  };
  out << "metric" << std::string(width - 6, ' ') << column_title << "\n";
  row("IoU_Pair", report.iou_pair);
  row(excl, report.bleu_exclusive);
  row(mean, report.bleu_mean);
  row("BLEU_Triplet", report.bleu_triplet);
  return out.str();
}

std::string report_json(const MetricReport& report) {
  json j;
  j["k"] = report.k;
  j["mode"] = report.mode == MatchMode::Literal ? "literal" : "matched-reference";
  j["examples"] = report.examples;
  j["note"] =
      "reference triplets are counted per example and averaged over examples "
      "(micro within, macro across); BLEU_Triplet is unthresholded";
  j["metrics"] = {{"iou_pair", report.iou_pair},
                  {"bleu_exclusive_at_k", report.bleu_exclusive},
                  {"bleu_mean_at_k", report.bleu_mean},
                  {"bleu_triplet", report.bleu_triplet}};
  json rows = json::array();
  for (const auto& row : report.per_example) {
    rows.push_back({{"id", row.id},
                    {"iou_pair", row.iou_pair},
                    {"bleu_exclusive_at_k", row.bleu_exclusive},
                    {"bleu_mean_at_k", row.bleu_mean},
                    {"bleu_triplet", row.bleu_triplet}});
  }
  j["per_example"] = std::move(rows);
  return j.dump(2) + "\n";
}

}  // namespace entitree
