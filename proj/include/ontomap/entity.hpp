#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace ontomap {

enum class EntityKind { Class, ObjectProperty, DataProperty, Individual };

std::string_view to_string(EntityKind kind);

// A prefixed entity name, written `prefix:local` in ontology files. The
// default (empty) prefix is written `:local`.
struct EntityName {
  std::string prefix;
  std::string local;

  auto operator<=>(const EntityName&) const = default;
  bool operator==(const EntityName&) const = default;

  std::string qualified() const { return prefix + ":" + local; }

  // Identifier for graph exports: `local` for the default prefix,
  // `prefix:local` otherwise.
  std::string display() const { return prefix.empty() ? local : qualified(); }

  // Parses `prefix:local`; throws Error(InvalidName) on malformed input.
  static EntityName parse(std::string_view qualified);
};

// `[A-Za-z_][A-Za-z0-9_-]*`
bool is_valid_local_name(std::string_view local);
// Prefix names follow the same rule but may be empty.
bool is_valid_prefix_name(std::string_view prefix);

// Sort predicate on the written form, used for canonical output.
struct QualifiedLess {
  bool operator()(const EntityName& a, const EntityName& b) const {
    return a.qualified() < b.qualified();
  }
};

}  // namespace ontomap
