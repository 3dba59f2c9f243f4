#include "entitree/json_io.hpp"

#include <json.hpp>

#include "entitree/errors.hpp"

namespace entitree {

using nlohmann::json;

std::string to_json(const EntityTree& tree) {
  json root;
  json entities = json::array();
  for (const auto& e : tree.entities) {
    json je;
    je["name"] = e.name;
    je["attributes"] = e.attributes;
    je["extends"] = e.extends ? json(*e.extends) : json(nullptr);
    json rels = json::array();
    for (const auto& r : e.relationships) {
      json jr;
      jr["exact_number"] =
          r.exact_number ? json(*r.exact_number) : json(nullptr);
      jr["primitivity"] = r.primitivity;
      jr["min"] = r.min;
      jr["max"] = r.max;
      jr["object_attributes"] = r.object_attributes;
      jr["object_name"] = r.object_name;
      jr["relationship_type"] = r.relationship_type;
      jr["type"] = r.type;
      rels.push_back(std::move(jr));
    }
    je["relationships"] = std::move(rels);
    entities.push_back(std::move(je));
  }
  root["entities"] = std::move(entities);
  root["source_digest"] = tree.source_digest;
  return root.dump(2) + "\n";
}

namespace {

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
  throw Error(ErrorKind::SchemaError, path + ": " + what);
}

const json& require(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) schema_error(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) schema_error(path + "." + key, "missing field");
  return *it;
}

std::string require_string(const json& obj, const char* key,
                           const std::string& path) {
  const json& v = require(obj, key, path);
  if (!v.is_string()) schema_error(path + "." + key, "expected a string");
  return v.get<std::string>();
}

std::vector<std::string> require_string_array(const json& obj, const char* key,
                                              const std::string& path) {
  const json& v = require(obj, key, path);
  if (!v.is_array()) schema_error(path + "." + key, "expected an array");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_string())
      schema_error(path + "." + key + "[" + std::to_string(i) + "]",
                   "expected a string");
    out.push_back(v[i].get<std::string>());
  }
  return out;
}

void reject_unknown_keys(const json& obj, const std::set<std::string>& known,
                         const std::string& path) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (!known.count(it.key()))
      schema_error(path + "." + it.key(), "unknown field");
  }
}

}  // namespace

EntityTree from_json(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::SchemaError, std::string("not valid JSON: ") +
                                            e.what());
  }
  if (!root.is_object()) schema_error("$", "expected an object");
  reject_unknown_keys(root, {"entities", "source_digest"}, "$");

  EntityTree tree;
  tree.source_digest = require_string(root, "source_digest", "$");

  const json& jents = require(root, "entities", "$");
  if (!jents.is_array()) schema_error("$.entities", "expected an array");

  for (std::size_t i = 0; i < jents.size(); ++i) {
    const std::string epath = "entities[" + std::to_string(i) + "]";
    const json& je = jents[i];
    if (!je.is_object()) schema_error(epath, "expected an object");
    reject_unknown_keys(je, {"name", "attributes", "extends", "relationships"},
                        epath);

    EntityComponent e;
    e.name = require_string(je, "name", epath);
    e.attributes = require_string_array(je, "attributes", epath);
    const json& jext = require(je, "extends", epath);
    if (jext.is_string()) {
      e.extends = jext.get<std::string>();
    } else if (!jext.is_null()) {
      schema_error(epath + ".extends", "expected a string or null");
    }

    const json& jrels = require(je, "relationships", epath);
    if (!jrels.is_array()) schema_error(epath + ".relationships", "expected an array");
    for (std::size_t k = 0; k < jrels.size(); ++k) {
      const std::string rpath = epath + ".relationships[" + std::to_string(k) + "]";
      const json& jr = jrels[k];
      if (!jr.is_object()) schema_error(rpath, "expected an object");
      reject_unknown_keys(jr,
                          {"exact_number", "primitivity", "min", "max",
                           "object_attributes", "object_name",
                           "relationship_type", "type"},
                          rpath);

      Relationship r;
      const json& jn = require(jr, "exact_number", rpath);
      if (jn.is_number_integer()) {
        r.exact_number = jn.get<long>();
      } else if (!jn.is_null()) {
        schema_error(rpath + ".exact_number", "expected an integer or null");
      }
      const json& jp = require(jr, "primitivity", rpath);
      if (!jp.is_boolean()) schema_error(rpath + ".primitivity", "expected a boolean");
      r.primitivity = jp.get<bool>();
      r.min = require_string(jr, "min", rpath);
      r.max = require_string(jr, "max", rpath);
      r.object_attributes = require_string_array(jr, "object_attributes", rpath);
      r.object_name = require_string(jr, "object_name", rpath);
      r.relationship_type = require_string(jr, "relationship_type", rpath);
      r.type = require_string(jr, "type", rpath);
      e.relationships.push_back(std::move(r));
    }
    tree.entities.push_back(std::move(e));
  }

  validate_tree(tree);
  return tree;
}

}  // namespace entitree
