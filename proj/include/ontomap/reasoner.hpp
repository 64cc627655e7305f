#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ontomap/ontology.hpp"
#include "ontomap/parser.hpp"

namespace ontomap {

enum class FactKind { IsA, Rel, Sub };

// Ground fact. IsA(individual, class) uses `first`/`second`;
// Rel(property, subject, object) uses all three; Sub(sub, sup) uses
// `first`/`second`.
struct Fact {
  FactKind kind = FactKind::IsA;
  EntityName first, second, third;

  static Fact is_a(EntityName individual, EntityName cls);
  static Fact rel(EntityName property, EntityName subject, EntityName object);
  static Fact sub(EntityName sub, EntityName sup);

  auto operator<=>(const Fact&) const = default;
  bool operator==(const Fact&) const = default;
};

// `IsA(:a :C)`, `Rel(:p :a :b)`, `Sub(:A :B)`
std::string to_string(const Fact& fact);
std::optional<Fact> parse_fact(std::string_view text);

// Inference rules:
//   R1  Sub transitivity
//   R2  named EquivalentClasses -> Sub both ways
//   R3  DisjointUnion(C; D..) -> Di Sub C (and pairwise disjointness)
//   R3b EquivalentClasses(C, D1 or .. or Dn), SubClassOf(D1 or .. , C) -> Di Sub C
//   R4  IsA(a,A), Sub(A,B) -> IsA(a,B)
//   R5  Rel(p,a,b), domain(p)=C -> IsA(a,C)
//   R6  Rel(p,a,b), range(p)=C -> IsA(b,C)
//   R7  Rel(p,a,b), inverse(p,q) -> Rel(q,b,a)
//   R8  symmetric p: Rel(p,a,b) -> Rel(p,b,a)
//   R9  transitive p: Rel(p,a,b), Rel(p,b,c) -> Rel(p,a,c)
//   R10 p sub q: Rel(p,a,b) -> Rel(q,a,b)
enum class Rule { Asserted, R1, R2, R3, R3b, R4, R5, R6, R7, R8, R9, R10 };

std::string_view to_string(Rule rule);

// How a fact entered the store. R2, R3 and R3b facts come straight from a
// class axiom and have no fact premises.
struct Derivation {
  Fact fact;
  Rule rule = Rule::Asserted;
  std::vector<Fact> premises;
};

enum class ViolationKind {
  DisjointMembership,
  IrreflexiveLoop,
  AsymmetryBreach,
  FunctionalFanout,
  UnsatisfiableClass,
  // Strict mode only: a domain or range typing that the asserted class
  // memberships do not already entail.
  DomainRangeMismatch,
};

std::string_view to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind = ViolationKind::DisjointMembership;
  Severity severity = Severity::Error;
  std::vector<EntityName> involved;
  std::vector<Fact> witnesses;

  auto operator<=>(const Violation&) const = default;
  bool operator==(const Violation&) const = default;
};

// `kind<TAB>severity<TAB>entities(space separated)<TAB>witnesses(; separated)`
std::string to_record(const Violation& violation);

struct ReasonerOptions {
  // Closed-world reading of domain/range: also report typings that only
  // R5/R6 produce.
  bool strict = false;
};

// Saturated fact set with first-found derivations and the violations found
// after the fixpoint. Immutable once built.
class InferredStore {
 public:
  const std::set<Fact>& facts() const { return facts_; }
  const std::map<Fact, Derivation>& derivations() const { return derivations_; }
  const std::vector<Violation>& violations() const { return violations_; }

  bool contains(const Fact& fact) const { return facts_.count(fact) != 0; }
  std::size_t asserted_count() const;

  const std::vector<EntityName>& classes() const { return classes_; }
  const std::vector<EntityName>& individuals() const { return individuals_; }
  const std::vector<EntityName>& properties() const { return properties_; }

 private:
  friend InferredStore saturate(const Ontology&, ReasonerOptions);

  std::set<Fact> facts_;
  std::map<Fact, Derivation> derivations_;
  std::vector<Violation> violations_;
  std::vector<EntityName> classes_, individuals_, properties_;
};

// Forward-chains R1..R10 to the least fixpoint (semi-naive: each new fact is
// joined once against the facts processed before it), then collects
// violations. Unions are only used in the member-to-union direction.
InferredStore saturate(const Ontology& ontology, ReasonerOptions options = {});

// Individuals a with IsA(a, cls). Throws Error(UndeclaredEntity) if `cls` is
// not a class of the store.
std::set<EntityName> instances_of(const InferredStore& store, const EntityName& cls);

struct ExplanationNode {
  Fact fact;
  Rule rule = Rule::Asserted;
  std::vector<ExplanationNode> premises;
};

// Derivation tree down to asserted (or axiom-sourced) facts. Throws
// Error(UnknownFact) if `fact` is not in the store.
ExplanationNode explain(const InferredStore& store, const Fact& fact);

// Indented text rendering, one fact per line with its rule.
std::string format_explanation(const ExplanationNode& node);

// ---------------------------------------------------------------------------
// Taxonomy

// A node of the class hierarchy; classes that subsume each other are merged
// into one node.
struct TaxonomyNode {
  std::vector<EntityName> classes;
  std::vector<std::size_t> direct_supers;
  std::vector<std::size_t> direct_subs;
};

struct TaxonomyDiagnostic {
  std::string code;  // "CyclicHierarchy"
  std::vector<EntityName> classes;
};

struct Taxonomy {
  std::vector<TaxonomyNode> nodes;
  std::map<EntityName, std::size_t> node_of;
  std::vector<TaxonomyDiagnostic> diagnostics;

  // Flattened class names of the direct supers/subs of `cls`'s node.
  std::vector<EntityName> direct_supers(const EntityName& cls) const;
  std::vector<EntityName> direct_subs(const EntityName& cls) const;
};

// Transitive reduction of the Sub relation over named classes.
Taxonomy classify(const InferredStore& store);

}  // namespace ontomap
