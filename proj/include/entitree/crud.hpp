// CRUD class skeleton generation from text templates with named placeholders.

#ifndef ENTITREE_CRUD_HPP
#define ENTITREE_CRUD_HPP

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "entitree/entity_tree.hpp"

namespace entitree {

enum class RenderKind { Json, Plantuml, Crud };

struct RenderTarget {
  RenderKind kind = RenderKind::Json;
  std::optional<std::string> crud_template;  // present iff kind == Crud
};

struct CrudTemplate {
  std::string name;
  std::string extension;       // includes the dot, e.g. ".java"
  std::string comment_prefix;  // e.g. "//"
  std::set<std::string> reserved;
  // Sections: class, field, method, extends; no_fields is optional.
  std::string class_section;
  std::string field_section;
  std::string method_section;
  std::string extends_section;
  std::string no_fields_section;
};

// Bundled template names ("java", "python").
std::vector<std::string> bundled_template_names();

// Resolves a bundled name or a path to a .tmpl file.
// Throws Error(UnknownTemplate) when neither matches.
CrudTemplate load_template(const std::string& name_or_path);

// Parses the template text format:
//   @extension .java
//   @comment //
//   @reserved word word ...
//   @section <name>
//   ...lines...
CrudTemplate parse_template(const std::string& text, const std::string& name);

// One (filename, contents) pair per entity. Identifiers colliding with the
// template's reserved words get a trailing underscore and a header note.
std::vector<std::pair<std::string, std::string>> to_crud_code(
    const EntityTree& tree, const std::string& template_name_or_path);

std::vector<std::pair<std::string, std::string>> to_crud_code(
    const EntityTree& tree, const CrudTemplate& tmpl);

}  // namespace entitree

#endif  // ENTITREE_CRUD_HPP
