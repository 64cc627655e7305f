#include <algorithm>
#include <sstream>

#include "ontomap/parser.hpp"

namespace ontomap {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string quote(std::string_view text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

std::string expr(const ClassExpression& e) {
  if (e.is_named()) return e.name().qualified();
  std::string out = "ObjectUnionOf(";
  for (std::size_t i = 0; i < e.members().size(); ++i) {
    if (i) out += ' ';
    out += e.members()[i].qualified();
  }
  return out + ")";
}

std::string names(const std::vector<EntityName>& list) {
  std::string out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (i) out += ' ';
    out += list[i].qualified();
  }
  return out;
}

std::string literal(const Literal& lit) {
  if (lit.type == Datatype::String) return quote(lit.lexical);
  return quote(lit.lexical) + "^^" + std::string(to_string(lit.type));
}

// Everything after `Keyword(` up to the closing parenthesis.
std::string arguments(const Axiom& axiom) {
  return std::visit(
      Overloaded{
          [](const axioms::SubClassOf& a) { return expr(a.sub) + " " + expr(a.sup); },
          [](const axioms::EquivalentClasses& a) { return expr(a.first) + " " + expr(a.second); },
          [](const axioms::DisjointClasses& a) { return names(a.classes); },
          [](const axioms::DisjointUnion& a) {
            return a.whole.qualified() + " " + names(a.parts);
          },
          [](const axioms::ObjectPropertyDomain& a) {
            return a.property.qualified() + " " + expr(a.domain);
          },
          [](const axioms::ObjectPropertyRange& a) {
            return a.property.qualified() + " " + expr(a.range);
          },
          [](const axioms::DataPropertyDomain& a) {
            return a.property.qualified() + " " + expr(a.domain);
          },
          [](const axioms::DataPropertyRange& a) {
            return a.property.qualified() + " " + std::string(to_string(a.range));
          },
          [](const axioms::SubObjectPropertyOf& a) {
            return a.sub.qualified() + " " + a.sup.qualified();
          },
          [](const axioms::InverseObjectProperties& a) {
            return a.first.qualified() + " " + a.second.qualified();
          },
          [](const axioms::PropertyCharacteristic& a) { return a.property.qualified(); },
          [](const axioms::ClassAssertion& a) {
            return expr(a.type) + " " + a.individual.qualified();
          },
          [](const axioms::ObjectPropertyAssertion& a) {
            return a.property.qualified() + " " + a.subject.qualified() + " " +
                   a.object.qualified();
          },
          [](const axioms::DataPropertyAssertion& a) {
            return a.property.qualified() + " " + a.subject.qualified() + " " +
                   literal(a.value);
          },
          [](const axioms::Label& a) {
            return "rdfs:label " + a.entity.qualified() + " " + quote(a.text);
          },
      },
      axiom);
}

}  // namespace

std::string to_functional_syntax(const Axiom& axiom) {
  return std::string(keyword(axiom)) + "(" + arguments(axiom) + ")";
}

std::string serialize(const Ontology& ontology) {
  std::ostringstream out;
  for (const auto& [name, iri] : ontology.prefixes())
    out << "Prefix(" << name << ":=<" << iri << ">)\n";
  out << "Ontology(";
  if (!ontology.id().empty()) out << '<' << ontology.id() << '>';
  out << '\n';

  std::vector<Declaration> decls(ontology.declarations().begin(), ontology.declarations().end());
  std::sort(decls.begin(), decls.end(), [](const Declaration& a, const Declaration& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    return a.name.qualified() < b.name.qualified();
  });
  for (const auto& d : decls)
    out << "Declaration(" << to_string(d.kind) << '(' << d.name.qualified() << "))\n";

  using Keyed = std::pair<std::pair<std::string, std::string>, const Axiom*>;
  std::vector<Keyed> logical, annotations;
  for (const auto& ax : ontology.axioms()) {
    Keyed k{{std::string(keyword(ax)), arguments(ax)}, &ax};
    (is_logical(ax) ? logical : annotations).push_back(std::move(k));
  }
  auto by_key = [](const Keyed& a, const Keyed& b) { return a.first < b.first; };
  std::sort(logical.begin(), logical.end(), by_key);
  std::sort(annotations.begin(), annotations.end(), by_key);
  for (const auto* group : {&logical, &annotations})
    for (const auto& k : *group) out << k.first.first << '(' << k.first.second << ")\n";
  out << ")\n";
  return out.str();
}

}  // namespace ontomap
