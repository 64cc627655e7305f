#include "ontomap/axiom.hpp"

#include <algorithm>
#include <regex>

#include "ontomap/error.hpp"

namespace ontomap {

namespace {
template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;
}  // namespace

std::string_view to_string(Datatype type) {
  switch (type) {
    case Datatype::String: return "xsd:string";
    case Datatype::Integer: return "xsd:integer";
    case Datatype::Decimal: return "xsd:decimal";
    case Datatype::Boolean: return "xsd:boolean";
  }
  return "xsd:string";
}

std::optional<Datatype> parse_datatype(std::string_view qualified) {
  if (qualified == "xsd:string") return Datatype::String;
  if (qualified == "xsd:integer") return Datatype::Integer;
  if (qualified == "xsd:decimal") return Datatype::Decimal;
  if (qualified == "xsd:boolean") return Datatype::Boolean;
  return std::nullopt;
}

bool is_valid_lexical_form(std::string_view lexical, Datatype type) {
  static const std::regex integer(R"([+-]?[0-9]+)");
  static const std::regex decimal(R"([+-]?([0-9]+(\.[0-9]*)?|\.[0-9]+))");
  const std::string s(lexical);
  switch (type) {
    case Datatype::String: return true;
    case Datatype::Integer: return std::regex_match(s, integer);
    case Datatype::Decimal: return std::regex_match(s, decimal);
    case Datatype::Boolean: return s == "true" || s == "false";
  }
  return false;
}

ClassExpression ClassExpression::named(EntityName name) {
  ClassExpression e;
  e.members_.push_back(std::move(name));
  return e;
}

ClassExpression ClassExpression::union_of(std::vector<EntityName> members) {
  if (members.size() < 2)
    throw Error(Errc::InvalidAxiom, "ObjectUnionOf needs at least two classes");
  auto sorted = members;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error(Errc::InvalidAxiom, "ObjectUnionOf members must be distinct");
  ClassExpression e;
  e.members_ = std::move(members);
  return e;
}

std::string_view keyword(Characteristic characteristic) {
  switch (characteristic) {
    case Characteristic::Symmetric: return "SymmetricObjectProperty";
    case Characteristic::Asymmetric: return "AsymmetricObjectProperty";
    case Characteristic::Transitive: return "TransitiveObjectProperty";
    case Characteristic::Irreflexive: return "IrreflexiveObjectProperty";
    case Characteristic::Functional: return "FunctionalObjectProperty";
    case Characteristic::InverseFunctional: return "InverseFunctionalObjectProperty";
  }
  return "?";
}

std::optional<Characteristic> characteristic_from_keyword(std::string_view kw) {
  for (auto c : {Characteristic::Symmetric, Characteristic::Asymmetric, Characteristic::Transitive,
                 Characteristic::Irreflexive, Characteristic::Functional,
                 Characteristic::InverseFunctional})
    if (keyword(c) == kw) return c;
  return std::nullopt;
}

std::string_view keyword(const Axiom& axiom) {
  return std::visit(
      Overloaded{
          [](const axioms::SubClassOf&) -> std::string_view { return "SubClassOf"; },
          [](const axioms::EquivalentClasses&) -> std::string_view { return "EquivalentClasses"; },
          [](const axioms::DisjointClasses&) -> std::string_view { return "DisjointClasses"; },
          [](const axioms::DisjointUnion&) -> std::string_view { return "DisjointUnion"; },
          [](const axioms::ObjectPropertyDomain&) -> std::string_view {
            return "ObjectPropertyDomain";
          },
          [](const axioms::ObjectPropertyRange&) -> std::string_view {
            return "ObjectPropertyRange";
          },
          [](const axioms::DataPropertyDomain&) -> std::string_view {
            return "DataPropertyDomain";
          },
          [](const axioms::DataPropertyRange&) -> std::string_view { return "DataPropertyRange"; },
          [](const axioms::SubObjectPropertyOf&) -> std::string_view {
            return "SubObjectPropertyOf";
          },
          [](const axioms::InverseObjectProperties&) -> std::string_view {
            return "InverseObjectProperties";
          },
          [](const axioms::PropertyCharacteristic& a) { return keyword(a.characteristic); },
          [](const axioms::ClassAssertion&) -> std::string_view { return "ClassAssertion"; },
          [](const axioms::ObjectPropertyAssertion&) -> std::string_view {
            return "ObjectPropertyAssertion";
          },
          [](const axioms::DataPropertyAssertion&) -> std::string_view {
            return "DataPropertyAssertion";
          },
          [](const axioms::Label&) -> std::string_view { return "AnnotationAssertion"; },
      },
      axiom);
}

bool is_logical(const Axiom& axiom) { return !std::holds_alternative<axioms::Label>(axiom); }

const std::vector<std::string_view>& logical_axiom_keywords() {
  static const std::vector<std::string_view> keywords = {
      "SubClassOf",
      "EquivalentClasses",
      "DisjointClasses",
      "DisjointUnion",
      "ObjectPropertyDomain",
      "ObjectPropertyRange",
      "DataPropertyDomain",
      "DataPropertyRange",
      "SubObjectPropertyOf",
      "InverseObjectProperties",
      "SymmetricObjectProperty",
      "AsymmetricObjectProperty",
      "TransitiveObjectProperty",
      "IrreflexiveObjectProperty",
      "FunctionalObjectProperty",
      "InverseFunctionalObjectProperty",
      "ClassAssertion",
      "ObjectPropertyAssertion",
      "DataPropertyAssertion",
  };
  return keywords;
}

void for_each_reference(const Axiom& axiom, const ReferenceVisitor& visit) {
  constexpr auto kClass = EntityKind::Class;
  constexpr auto kObject = EntityKind::ObjectProperty;
  constexpr auto kData = EntityKind::DataProperty;
  constexpr auto kIndividual = EntityKind::Individual;
  auto expr = [&](const ClassExpression& e) {
    for (const auto& m : e.members()) visit(m, kClass);
  };
  std::visit(Overloaded{
                 [&](const axioms::SubClassOf& a) {
                   expr(a.sub);
                   expr(a.sup);
                 },
                 [&](const axioms::EquivalentClasses& a) {
                   expr(a.first);
                   expr(a.second);
                 },
                 [&](const axioms::DisjointClasses& a) {
                   for (const auto& c : a.classes) visit(c, kClass);
                 },
                 [&](const axioms::DisjointUnion& a) {
                   visit(a.whole, kClass);
                   for (const auto& c : a.parts) visit(c, kClass);
                 },
                 [&](const axioms::ObjectPropertyDomain& a) {
                   visit(a.property, kObject);
                   expr(a.domain);
                 },
                 [&](const axioms::ObjectPropertyRange& a) {
                   visit(a.property, kObject);
                   expr(a.range);
                 },
                 [&](const axioms::DataPropertyDomain& a) {
                   visit(a.property, kData);
                   expr(a.domain);
                 },
                 [&](const axioms::DataPropertyRange& a) { visit(a.property, kData); },
                 [&](const axioms::SubObjectPropertyOf& a) {
                   visit(a.sub, kObject);
                   visit(a.sup, kObject);
                 },
                 [&](const axioms::InverseObjectProperties& a) {
                   visit(a.first, kObject);
                   visit(a.second, kObject);
                 },
                 [&](const axioms::PropertyCharacteristic& a) { visit(a.property, kObject); },
                 [&](const axioms::ClassAssertion& a) {
                   expr(a.type);
                   visit(a.individual, kIndividual);
                 },
                 [&](const axioms::ObjectPropertyAssertion& a) {
                   visit(a.property, kObject);
                   visit(a.subject, kIndividual);
                   visit(a.object, kIndividual);
                 },
                 [&](const axioms::DataPropertyAssertion& a) {
                   visit(a.property, kData);
                   visit(a.subject, kIndividual);
                 },
                 [&](const axioms::Label& a) { visit(a.entity, std::nullopt); },
             },
             axiom);
}

}  // namespace ontomap
