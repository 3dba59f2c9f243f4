#include "entitree/plantuml.hpp"

#include <cctype>
#include <sstream>

namespace entitree {

std::string class_name(const std::string& lemma) {
  std::string out;
  bool upper_next = true;
  for (char c : lemma) {
    if (c == '_' || c == '-' || c == ' ') {
      upper_next = true;
      continue;
    }
    out += upper_next ? static_cast<char>(std::toupper(static_cast<unsigned char>(c)))
                      : c;
    upper_next = false;
  }
  return out;
}

namespace {

std::string end_label(const std::string& mark,
                      const std::optional<long>& exact_number) {
  if (mark == "*" && exact_number) return std::to_string(*exact_number);
  return mark;
}

}  // namespace

std::string to_plantuml(const EntityTree& tree) {
  std::ostringstream out;
  out << "@startuml\n";
  for (const auto& e : tree.entities) {
    out << "class " << class_name(e.name) << " {\n";
    for (const auto& a : e.attributes) out << "  " << a << "\n";
    for (const auto& r : e.relationships) {
      if (r.primitivity)
        out << "  " << r.object_name << " : " << r.type << "\n";
    }
    out << "}\n";
  }
  for (const auto& e : tree.entities) {
    if (e.extends)
      out << class_name(e.name) << " --|> " << class_name(*e.extends) << "\n";
    for (const auto& r : e.relationships) {
      if (r.primitivity) continue;
      out << class_name(e.name) << " \"" << end_label(r.min, r.exact_number)
          << "\" --> \"" << end_label(r.max, std::nullopt) << "\" "
          << class_name(r.object_name) << " : " << r.relationship_type << "\n";
    }
  }
  out << "@enduml\n";
  return out.str();
}

}  // namespace entitree
