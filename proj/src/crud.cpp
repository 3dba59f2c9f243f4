#include "entitree/crud.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "entitree/errors.hpp"
#include "entitree/plantuml.hpp"

namespace entitree {

namespace {

const char* kJavaTemplate = R"tmpl(@extension .java
@comment //
@reserved abstract assert boolean break byte case catch char class const continue default do double else enum extends final finally float for goto if implements import instanceof int interface long native new package private protected public return short static strictfp super switch synchronized this throw throws transient try void volatile while
@section field
    private {{type}} {{name}};
@section method
    public void {{method}}() {
        throw new UnsupportedOperationException("{{method}}");
    }
@section extends
 extends {{parent}}
@section class
{{header}}public class {{class}}{{extends}} {
{{fields}}

{{crud_methods}}
}
)tmpl";

const char* kPythonTemplate = R"tmpl(@extension .py
@comment #
@reserved False None True and as assert async await break class continue def del elif else except finally for from global if import in is lambda nonlocal not or pass raise return try while with yield
@section field
        self.{{name}} = None  # {{type}}
@section no_fields
        pass
@section method
    def {{method}}(self):
        raise NotImplementedError("{{method}}")
@section extends
({{parent}})
@section class
{{header}}class {{class}}{{extends}}:
    def __init__(self):
{{fields}}

{{crud_methods}}
)tmpl";

std::string replace_all(std::string text, const std::string& from,
                        const std::string& to) {
  std::size_t pos = 0;
  while ((pos = text.find(from, pos)) != std::string::npos) {
    text.replace(pos, from.size(), to);
    pos += to.size();
  }
  return text;
}

std::string strip_trailing_newline(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  return s;
}

}  // namespace

std::vector<std::string> bundled_template_names() { return {"java", "python"}; }

CrudTemplate parse_template(const std::string& text, const std::string& name) {
  CrudTemplate t;
  t.name = name;
  std::istringstream in(text);
  std::string line;
  std::string* section = nullptr;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.rfind("@extension", 0) == 0) {
      t.extension = line.substr(10);
      t.extension.erase(0, t.extension.find_first_not_of(' '));
      section = nullptr;
    } else if (line.rfind("@comment", 0) == 0) {
      t.comment_prefix = line.substr(8);
      t.comment_prefix.erase(0, t.comment_prefix.find_first_not_of(' '));
      section = nullptr;
    } else if (line.rfind("@reserved", 0) == 0) {
      std::istringstream words(line.substr(9));
      std::string w;
      while (words >> w) t.reserved.insert(w);
      section = nullptr;
    } else if (line.rfind("@section", 0) == 0) {
      std::string sname = line.substr(8);
      sname.erase(0, sname.find_first_not_of(' '));
      if (sname == "class")
        section = &t.class_section;
      else if (sname == "field")
        section = &t.field_section;
      else if (sname == "method")
        section = &t.method_section;
      else if (sname == "extends")
        section = &t.extends_section;
      else if (sname == "no_fields")
        section = &t.no_fields_section;
      else
        throw Error(ErrorKind::UnknownTemplate,
                    "template '" + name + "': unknown section '" + sname + "'");
    } else if (section != nullptr) {
      *section += line;
      *section += '\n';
    }
  }
  if (t.class_section.empty() || t.field_section.empty() ||
      t.method_section.empty() || t.extension.empty())
    throw Error(ErrorKind::UnknownTemplate,
                "template '" + name + "' is missing required parts");
  return t;
}

CrudTemplate load_template(const std::string& name_or_path) {
  if (name_or_path == "java") return parse_template(kJavaTemplate, "java");
  if (name_or_path == "python") return parse_template(kPythonTemplate, "python");
  std::ifstream in(name_or_path);
  if (!in)
    throw Error(ErrorKind::UnknownTemplate,
                "unknown template '" + name_or_path +
                    "' (bundled: java, python; or a path to a .tmpl file)");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_template(buf.str(), name_or_path);
}

std::vector<std::pair<std::string, std::string>> to_crud_code(
    const EntityTree& tree, const std::string& template_name_or_path) {
  return to_crud_code(tree, load_template(template_name_or_path));
}

std::vector<std::pair<std::string, std::string>> to_crud_code(
    const EntityTree& tree, const CrudTemplate& tmpl) {
  std::vector<std::pair<std::string, std::string>> files;

  for (const auto& e : tree.entities) {
    std::vector<std::string> notes;
    auto safe_ident = [&](std::string ident) {
      if (tmpl.reserved.count(ident)) {
        notes.push_back(tmpl.comment_prefix + " note: renamed reserved identifier '" +
                        ident + "' to '" + ident + "_'");
        ident += "_";
      }
      return ident;
    };

    std::string cls = safe_ident(class_name(e.name));

    // Fields: primitive relationships carry their type, associations a
    // typed reference to the target class.
    std::vector<std::string> field_lines;
    std::set<std::string> used_names;
    for (const auto& r : e.relationships) {
      std::string fname = safe_ident(r.object_name);
      if (!used_names.insert(fname).second) {
        std::size_t suffix = 2;
        while (!used_names.insert(fname + std::to_string(suffix)).second)
          ++suffix;
        fname += std::to_string(suffix);
      }
      std::string ftype = r.primitivity ? r.type : class_name(r.object_name);
      std::string line = replace_all(tmpl.field_section, "{{name}}", fname);
      line = replace_all(line, "{{type}}", ftype);
      field_lines.push_back(strip_trailing_newline(line));
    }
    std::string fields;
    if (field_lines.empty()) {
      fields = strip_trailing_newline(tmpl.no_fields_section);
    } else {
      for (std::size_t i = 0; i < field_lines.size(); ++i) {
        if (i) fields += "\n";
        fields += field_lines[i];
      }
    }

    std::string methods;
    const char* kCrudOps[] = {"create", "read", "update", "delete"};
    for (std::size_t i = 0; i < 4; ++i) {
      std::string m =
          replace_all(tmpl.method_section, "{{method}}", kCrudOps[i]);
      m = replace_all(m, "{{class}}", cls);
      if (i) methods += "\n";
      methods += strip_trailing_newline(m);
    }

    std::string extends_clause;
    if (e.extends) {
      extends_clause = strip_trailing_newline(replace_all(
          tmpl.extends_section, "{{parent}}", class_name(*e.extends)));
    }

    std::string header;
    for (const auto& n : notes) header += n + "\n";

    std::string body = tmpl.class_section;
    body = replace_all(body, "{{header}}", header);
    body = replace_all(body, "{{class}}", cls);
    body = replace_all(body, "{{extends}}", extends_clause);
    body = replace_all(body, "{{fields}}", fields);
    body = replace_all(body, "{{crud_methods}}", methods);

    files.emplace_back(cls + tmpl.extension, body);
  }
  return files;
}

}  // namespace entitree
