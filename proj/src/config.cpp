#include "entitree/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "entitree/errors.hpp"

namespace entitree {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

bool PipelineConfig::is_primitive(const std::string& word) const {
  const std::string w = to_lower(word);
  return std::any_of(primitive_types.begin(), primitive_types.end(),
                     [&](const std::string& p) { return to_lower(p) == w; });
}

bool PipelineConfig::is_leading_pronoun(const std::string& surface_lower) const {
  return std::find(pronouns.begin(), pronouns.end(), surface_lower) !=
         pronouns.end();
}

void PipelineConfig::apply_text(const std::string& text,
                                const std::string& origin) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;

    bool append = false;
    std::size_t eq = line.find("+=");
    if (eq != std::string::npos) {
      append = true;
    } else {
      eq = line.find('=');
    }
    if (eq == std::string::npos) {
      throw Error(ErrorKind::ConfigError, origin + ":" + std::to_string(lineno) +
                                              ": expected key = value");
    }
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + (append ? 2 : 1)));

    auto set_list = [&](std::vector<std::string>& target) {
      auto items = split_list(value);
      if (append) {
        target.insert(target.end(), items.begin(), items.end());
      } else {
        target = items;
      }
    };

    if (key == "primitive_types") {
      set_list(primitive_types);
    } else if (key == "quantificational_modifiers") {
      set_list(quantificational_modifiers);
    } else if (key == "pronouns") {
      set_list(pronouns);
    } else if (key == "abbreviations") {
      set_list(abbreviations);
      for (auto& a : abbreviations) a = to_lower(a);
    } else if (key == "bleu_k") {
      try {
        bleu_k = std::stod(value);
      } catch (const std::exception&) {
        throw Error(ErrorKind::ConfigError,
                    origin + ":" + std::to_string(lineno) + ": bad bleu_k");
      }
      if (bleu_k < 0.0 || bleu_k > 1.0) {
        throw Error(ErrorKind::ConfigError,
                    origin + ":" + std::to_string(lineno) +
                        ": bleu_k must be in [0,1]");
      }
    } else if (key == "lexicon_file") {
      lexicon.load_file(value);
    } else {
      throw Error(ErrorKind::ConfigError, origin + ":" + std::to_string(lineno) +
                                              ": unknown key '" + key + "'");
    }
  }
}

PipelineConfig PipelineConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, "cannot open config file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  PipelineConfig cfg;
  cfg.apply_text(buf.str(), path);
  return cfg;
}

}  // namespace entitree
