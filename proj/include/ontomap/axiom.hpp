#pragma once

#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ontomap/entity.hpp"

namespace ontomap {

enum class Datatype { String, Integer, Decimal, Boolean };

std::string_view to_string(Datatype type);  // `xsd:integer` etc.
std::optional<Datatype> parse_datatype(std::string_view qualified);

struct Literal {
  std::string lexical;
  Datatype type = Datatype::String;

  auto operator<=>(const Literal&) const = default;
  bool operator==(const Literal&) const = default;
};

// True when `lexical` is a valid lexical form for `type`.
bool is_valid_lexical_form(std::string_view lexical, Datatype type);

enum class Characteristic {
  Symmetric,
  Asymmetric,
  Transitive,
  Irreflexive,
  Functional,
  InverseFunctional,
};

// Either a named class (one member) or a flat union of at least two distinct
// named classes.
class ClassExpression {
 public:
  ClassExpression() = default;
  static ClassExpression named(EntityName name);
  static ClassExpression union_of(std::vector<EntityName> members);

  bool is_named() const { return members_.size() == 1; }
  bool is_union() const { return members_.size() > 1; }
  const EntityName& name() const { return members_.front(); }
  const std::vector<EntityName>& members() const { return members_; }

  auto operator<=>(const ClassExpression&) const = default;
  bool operator==(const ClassExpression&) const = default;

 private:
  std::vector<EntityName> members_;
};

namespace axioms {

struct SubClassOf {
  ClassExpression sub, sup;
  auto operator<=>(const SubClassOf&) const = default;
};
struct EquivalentClasses {
  ClassExpression first, second;
  auto operator<=>(const EquivalentClasses&) const = default;
};
struct DisjointClasses {
  std::vector<EntityName> classes;
  auto operator<=>(const DisjointClasses&) const = default;
};
struct DisjointUnion {
  EntityName whole;
  std::vector<EntityName> parts;
  auto operator<=>(const DisjointUnion&) const = default;
};
struct ObjectPropertyDomain {
  EntityName property;
  ClassExpression domain;
  auto operator<=>(const ObjectPropertyDomain&) const = default;
};
struct ObjectPropertyRange {
  EntityName property;
  ClassExpression range;
  auto operator<=>(const ObjectPropertyRange&) const = default;
};
struct DataPropertyDomain {
  EntityName property;
  ClassExpression domain;
  auto operator<=>(const DataPropertyDomain&) const = default;
};
struct DataPropertyRange {
  EntityName property;
  Datatype range = Datatype::String;
  auto operator<=>(const DataPropertyRange&) const = default;
};
struct SubObjectPropertyOf {
  EntityName sub, sup;
  auto operator<=>(const SubObjectPropertyOf&) const = default;
};
struct InverseObjectProperties {
  EntityName first, second;
  auto operator<=>(const InverseObjectProperties&) const = default;
};
struct PropertyCharacteristic {
  EntityName property;
  Characteristic characteristic = Characteristic::Symmetric;
  auto operator<=>(const PropertyCharacteristic&) const = default;
};
struct ClassAssertion {
  ClassExpression type;
  EntityName individual;
  auto operator<=>(const ClassAssertion&) const = default;
};
struct ObjectPropertyAssertion {
  EntityName property, subject, object;
  auto operator<=>(const ObjectPropertyAssertion&) const = default;
};
struct DataPropertyAssertion {
  EntityName property, subject;
  Literal value;
  auto operator<=>(const DataPropertyAssertion&) const = default;
};
// rdfs:label annotation; the only annotation kept in the model.
struct Label {
  EntityName entity;
  std::string text;
  auto operator<=>(const Label&) const = default;
};

}  // namespace axioms

using Axiom = std::variant<axioms::SubClassOf, axioms::EquivalentClasses, axioms::DisjointClasses,
                           axioms::DisjointUnion, axioms::ObjectPropertyDomain,
                           axioms::ObjectPropertyRange, axioms::DataPropertyDomain,
                           axioms::DataPropertyRange, axioms::SubObjectPropertyOf,
                           axioms::InverseObjectProperties, axioms::PropertyCharacteristic,
                           axioms::ClassAssertion, axioms::ObjectPropertyAssertion,
                           axioms::DataPropertyAssertion, axioms::Label>;

// Functional-syntax keyword, e.g. `SubClassOf`, `IrreflexiveObjectProperty`,
// `AnnotationAssertion` for labels.
std::string_view keyword(const Axiom& axiom);
std::string_view keyword(Characteristic characteristic);
std::optional<Characteristic> characteristic_from_keyword(std::string_view keyword);

// Logical axioms are everything except annotations.
bool is_logical(const Axiom& axiom);

// Keywords of all logical axiom types in report order.
const std::vector<std::string_view>& logical_axiom_keywords();

// Visits every entity reference in `axiom` together with the kind expected in
// that position. Label subjects may be any kind and are reported with
// std::nullopt.
using ReferenceVisitor = std::function<void(const EntityName&, std::optional<EntityKind>)>;
void for_each_reference(const Axiom& axiom, const ReferenceVisitor& visit);

}  // namespace ontomap
