#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ontomap/axiom.hpp"
#include "ontomap/entity.hpp"

namespace ontomap {

struct Declaration {
  EntityName name;
  EntityKind kind = EntityKind::Class;

  auto operator<=>(const Declaration&) const = default;
  bool operator==(const Declaration&) const = default;
};

// An ontology: prefixes, entity declarations and a deduplicated axiom list.
//
// The same name may be declared under several kinds (punning), but each
// (name, kind) pair at most once. Every axiom references declared entities
// of the expected kind. Mutating members need exclusive access; readers of a
// const Ontology never observe changes.
//
// Equality is structural and ignores axiom order.
class Ontology {
 public:
  Ontology() = default;
  explicit Ontology(std::string id) : id_(std::move(id)) {}

  const std::string& id() const { return id_; }
  void set_id(std::string id) { id_ = std::move(id); }

  const std::map<std::string, std::string>& prefixes() const { return prefixes_; }
  void set_prefix(const std::string& name, std::string iri);

  // Returns false when (name, kind) was already declared. Throws
  // Error(InvalidName) for malformed names.
  bool declare(const EntityName& name, EntityKind kind);
  bool is_declared(const EntityName& name, EntityKind kind) const;
  bool is_declared(const EntityName& name) const;
  const std::set<Declaration>& declarations() const { return declarations_; }
  // Declared names of one kind, in name order.
  std::vector<EntityName> entities(EntityKind kind) const;

  // Appends `axiom` unless a structurally equal one is present; returns
  // whether it was appended. Throws Error(UndeclaredEntity),
  // Error(KindMismatch) or Error(InvalidAxiom).
  bool add_axiom(Axiom axiom);
  bool contains(const Axiom& axiom) const { return index_.count(axiom) != 0; }
  const std::vector<Axiom>& axioms() const { return axioms_; }

  // rdfs:label texts of `name`, in axiom order.
  std::vector<std::string> labels(const EntityName& name) const;

  friend bool operator==(const Ontology& a, const Ontology& b);

 private:
  void validate(const Axiom& axiom) const;

  std::string id_;
  std::map<std::string, std::string> prefixes_;
  std::set<Declaration> declarations_;
  std::vector<Axiom> axioms_;
  std::set<Axiom> index_;
};

// Value-returning form of Ontology::add_axiom.
Ontology add_axiom(Ontology ontology, Axiom axiom);

}  // namespace ontomap
