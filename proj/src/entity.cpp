#include "ontomap/entity.hpp"

#include <cctype>

#include "ontomap/error.hpp"

namespace ontomap {

std::string_view to_string(EntityKind kind) {
  switch (kind) {
    case EntityKind::Class: return "Class";
    case EntityKind::ObjectProperty: return "ObjectProperty";
    case EntityKind::DataProperty: return "DataProperty";
    case EntityKind::Individual: return "NamedIndividual";
  }
  return "?";
}

namespace {

bool is_name_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_';
}

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' || c == '-';
}

}  // namespace

bool is_valid_local_name(std::string_view local) {
  if (local.empty() || !is_name_start(local.front())) return false;
  for (char c : local)
    if (!is_name_char(c)) return false;
  return true;
}

bool is_valid_prefix_name(std::string_view prefix) {
  return prefix.empty() || is_valid_local_name(prefix);
}

EntityName EntityName::parse(std::string_view qualified) {
  const auto colon = qualified.find(':');
  if (colon == std::string_view::npos)
    throw Error(Errc::InvalidName, "missing ':' in '" + std::string(qualified) + "'");
  EntityName name{std::string(qualified.substr(0, colon)),
                  std::string(qualified.substr(colon + 1))};
  if (!is_valid_prefix_name(name.prefix) || !is_valid_local_name(name.local))
    throw Error(Errc::InvalidName, "malformed name '" + std::string(qualified) + "'");
  return name;
}

}  // namespace ontomap
