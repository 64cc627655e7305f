#include "ontomap/ontology.hpp"

#include <algorithm>

#include "ontomap/error.hpp"

namespace ontomap {

void Ontology::set_prefix(const std::string& name, std::string iri) {
  if (!is_valid_prefix_name(name)) throw Error(Errc::InvalidName, "bad prefix '" + name + "'");
  prefixes_[name] = std::move(iri);
}

bool Ontology::declare(const EntityName& name, EntityKind kind) {
  if (!is_valid_prefix_name(name.prefix) || !is_valid_local_name(name.local))
    throw Error(Errc::InvalidName, "malformed name '" + name.qualified() + "'");
  return declarations_.insert({name, kind}).second;
}

bool Ontology::is_declared(const EntityName& name, EntityKind kind) const {
  return declarations_.count({name, kind}) != 0;
}

bool Ontology::is_declared(const EntityName& name) const {
  for (auto kind : {EntityKind::Class, EntityKind::ObjectProperty, EntityKind::DataProperty,
                    EntityKind::Individual})
    if (is_declared(name, kind)) return true;
  return false;
}

std::vector<EntityName> Ontology::entities(EntityKind kind) const {
  std::vector<EntityName> out;
  for (const auto& d : declarations_)
    if (d.kind == kind) out.push_back(d.name);
  return out;
}

void Ontology::validate(const Axiom& axiom) const {
  for_each_reference(axiom, [&](const EntityName& name, std::optional<EntityKind> expected) {
    if (!expected) {
      if (!is_declared(name))
        throw Error(Errc::UndeclaredEntity, name.qualified() + " is not declared");
      return;
    }
    if (is_declared(name, *expected)) return;
    if (is_declared(name))
      throw Error(Errc::KindMismatch, name.qualified() + " is not declared as " +
                                          std::string(to_string(*expected)));
    throw Error(Errc::UndeclaredEntity, name.qualified() + " is not declared");
  });

  auto distinct = [](std::vector<EntityName> names) {
    std::sort(names.begin(), names.end());
    return std::adjacent_find(names.begin(), names.end()) == names.end();
  };
  if (const auto* d = std::get_if<axioms::DisjointClasses>(&axiom)) {
    if (d->classes.size() < 2 || !distinct(d->classes))
      throw Error(Errc::InvalidAxiom, "DisjointClasses needs at least two distinct classes");
  } else if (const auto* u = std::get_if<axioms::DisjointUnion>(&axiom)) {
    if (u->parts.size() < 2 || !distinct(u->parts))
      throw Error(Errc::InvalidAxiom, "DisjointUnion needs at least two distinct parts");
  } else if (const auto* lit = std::get_if<axioms::DataPropertyAssertion>(&axiom)) {
    if (!is_valid_lexical_form(lit->value.lexical, lit->value.type))
      throw Error(Errc::InvalidAxiom, "'" + lit->value.lexical + "' is not a valid " +
                                          std::string(to_string(lit->value.type)));
  }
}

bool Ontology::add_axiom(Axiom axiom) {
  validate(axiom);
  if (index_.count(axiom)) return false;
  index_.insert(axiom);
  axioms_.push_back(std::move(axiom));
  return true;
}

std::vector<std::string> Ontology::labels(const EntityName& name) const {
  std::vector<std::string> out;
  for (const auto& ax : axioms_)
    if (const auto* l = std::get_if<axioms::Label>(&ax); l && l->entity == name)
      out.push_back(l->text);
  return out;
}

bool operator==(const Ontology& a, const Ontology& b) {
  return a.id_ == b.id_ && a.prefixes_ == b.prefixes_ && a.declarations_ == b.declarations_ &&
         a.index_ == b.index_;
}

Ontology add_axiom(Ontology ontology, Axiom axiom) {
  ontology.add_axiom(std::move(axiom));
  return ontology;
}

}  // namespace ontomap
