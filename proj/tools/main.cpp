// entitree command line: parse requirements text into an entity tree and
// render it, evaluate triplet files, or self-test on the bundled patterns.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "entitree/corpus.hpp"
#include "entitree/crud.hpp"
#include "entitree/entity_tree.hpp"
#include "entitree/errors.hpp"
#include "entitree/json_io.hpp"
#include "entitree/pattern_suite.hpp"
#include "entitree/plantuml.hpp"

namespace fs = std::filesystem;
using namespace entitree;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitPipeline = 3;
constexpr int kExitEval = 4;

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::IoError:
    case ErrorKind::ConfigError:
    case ErrorKind::UnknownTemplate:
      return kExitUsage;
    case ErrorKind::EmptyReference:
    case ErrorKind::CorpusError:
      return kExitEval;
    default:
      return kExitPipeline;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "input not found: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw Error(ErrorKind::IoError, "cannot write: " + path.string());
  out << text;
}

PipelineConfig load_config(const std::string& config_path) {
  if (config_path.empty()) return PipelineConfig{};
  return PipelineConfig::load(config_path);
}

int cmd_parse(const std::string& input_path, const std::string& format,
              const std::string& template_name, const std::string& config_path,
              const std::string& out_dir) {
  PipelineConfig config = load_config(config_path);
  const std::string document = read_file(input_path);
  PipelineRun run = run_pipeline(document, config);

  fs::path out(out_dir);
  fs::create_directories(out);
  const std::string stem = fs::path(input_path).stem().string();

  if (format == "json") {
    write_file(out / (stem + ".json"), to_json(run.tree));
  } else if (format == "plantuml") {
    write_file(out / (stem + ".puml"), to_plantuml(run.tree));
  } else {
    for (const auto& [name, text] : to_crud_code(run.tree, template_name))
      write_file(out / name, text);
  }

  std::string log;
  for (const auto& d : run.diagnostics) log += d + "\n";
  write_file(out / (stem + ".log"), log);
  return kExitOk;
}

void print_report(const MetricReport& report, const std::string& column) {
  std::cout << report_text(report, column);
}

int cmd_eval(const std::string& refs_path, const std::string& hyps_path,
             double k, bool literal, const std::string& out_dir) {
  auto refs = load_triplet_jsonl(refs_path, /*dedup_refs=*/true);
  auto hyps = load_triplet_jsonl(hyps_path, /*dedup_refs=*/false);

  std::map<std::string, EvalExample> hyp_by_id;
  for (auto& h : hyps) hyp_by_id[h.id] = h;
  std::vector<std::pair<EvalExample, EvalExample>> pairs;
  for (auto& r : refs) {
    EvalExample cand;
    cand.id = r.id;
    auto it = hyp_by_id.find(r.id);
    if (it != hyp_by_id.end()) cand = it->second;
    pairs.emplace_back(std::move(r), std::move(cand));
  }

  MetricReport report = evaluate_examples(
      pairs, k, literal ? MatchMode::Literal : MatchMode::MatchedReference);
  print_report(report, "score");
  if (!out_dir.empty()) {
    fs::create_directories(out_dir);
    write_file(fs::path(out_dir) / "eval_report.json", report_json(report));
  }
  return kExitOk;
}

int cmd_selftest(double k, bool literal, const std::string& corpus_path,
                 const std::string& config_path, const std::string& out_dir) {
  PipelineConfig config = load_config(config_path);
  std::vector<std::pair<EvalExample, EvalExample>> pairs;

  if (corpus_path.empty()) {
    for (const auto& pc : pattern_suite()) {
      EvalExample ref;
      ref.id = pc.id;
      ref.triplets.label = pc.id;
      ref.triplets.triplets = pc.expected_triplets;
      ref.triplets.dedup();
      EvalExample hyp;
      hyp.id = pc.id;
      PipelineRun run = run_pipeline(pc.text, config);
      hyp.triplets.triplets = triplets_from_scene(run.fused);
      pairs.emplace_back(std::move(ref), std::move(hyp));
    }
  } else {
    auto corpus = load_corpus_jsonl(corpus_path);
    std::size_t idx = 0;
    for (const auto& ex : corpus) {
      EvalExample ref;
      ref.id = ex.theme.empty() ? "example-" + std::to_string(idx) : ex.theme;
      ref.triplets.triplets = ex.triplets;
      ref.triplets.dedup();
      EvalExample hyp;
      hyp.id = ref.id;
      PipelineRun run = run_pipeline(ex.content, config);
      hyp.triplets.triplets = triplets_from_scene(run.fused);
      pairs.emplace_back(std::move(ref), std::move(hyp));
      ++idx;
    }
  }

  MetricReport report = evaluate_examples(
      pairs, k, literal ? MatchMode::Literal : MatchMode::MatchedReference);
  print_report(report, corpus_path.empty() ? "patterns" : "corpus");
  if (!out_dir.empty()) {
    fs::create_directories(out_dir);
    write_file(fs::path(out_dir) / "selftest_report.json", report_json(report));
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"requirements-to-model compiler and triplet evaluation harness"};
  app.require_subcommand(1);

  // parse
  auto* parse = app.add_subcommand("parse", "parse text into an entity tree");
  std::string input_path, format = "json", template_name, config_path,
              out_dir = ".";
  parse->add_option("input", input_path, "input text file")->required();
  parse->add_option("--format", format, "json, plantuml or crud")
      ->check(CLI::IsMember({"json", "plantuml", "crud"}));
  parse->add_option("--template", template_name,
                    "crud template (java, python, or a .tmpl path)");
  parse->add_option("--config", config_path, "pipeline config file");
  parse->add_option("--out-dir", out_dir, "output directory");

  // eval
  auto* eval = app.add_subcommand("eval", "evaluate hypothesis triplets");
  std::string refs_path, hyps_path, eval_out_dir;
  double k = 0.6;
  bool literal = false;
  eval->add_option("refs", refs_path, "reference JSONL")->required();
  eval->add_option("hyps", hyps_path, "hypothesis JSONL")->required();
  eval->add_option("--k", k, "BLEU threshold (default 0.6)");
  eval->add_flag("--literal", literal, "paper-literal double-sum counting");
  eval->add_option("--out-dir", eval_out_dir, "where to write eval_report.json");

  // selftest
  auto* selftest =
      app.add_subcommand("selftest", "run the pipeline on the bundled patterns");
  std::string st_corpus, st_config, st_out_dir;
  double st_k = 0.6;
  bool st_literal = false;
  selftest->add_option("--k", st_k, "BLEU threshold (default 0.6)");
  selftest->add_flag("--literal", st_literal, "paper-literal counting");
  selftest->add_option("--corpus", st_corpus,
                       "evaluate an external corpus JSONL instead");
  selftest->add_option("--config", st_config, "pipeline config file");
  selftest->add_option("--out-dir", st_out_dir,
                       "where to write selftest_report.json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (parse->parsed()) {
      if (format == "crud" && template_name.empty()) {
        std::cerr << "usage error: --format crud requires --template\n";
        return kExitUsage;
      }
      return cmd_parse(input_path, format, template_name, config_path, out_dir);
    }
    if (eval->parsed()) {
      if (k < 0.0 || k > 1.0) {
        std::cerr << "usage error: --k must be in [0,1]\n";
        return kExitUsage;
      }
      return cmd_eval(refs_path, hyps_path, k, literal, eval_out_dir);
    }
    if (selftest->parsed()) {
      if (st_k < 0.0 || st_k > 1.0) {
        std::cerr << "usage error: --k must be in [0,1]\n";
        return kExitUsage;
      }
      return cmd_selftest(st_k, st_literal, st_corpus, st_config, st_out_dir);
    }
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPipeline;
  }
  return kExitUsage;
}
