#include "random_ontology.hpp"

#include <algorithm>
#include <string>

namespace ontomap::testing {

namespace {

std::size_t pick(Rng& rng, std::size_t n) { return static_cast<std::size_t>(rng.below(n)); }

std::vector<EntityName> distinct(Rng& rng, const std::vector<EntityName>& pool, std::size_t count) {
  auto copy = pool;
  rng.shuffle(copy);
  copy.resize(std::min(count, copy.size()));
  return copy;
}

std::string random_text(Rng& rng) {
  static const std::vector<std::string> pieces = {"low", "blood", " ", "sugar", "\"q\"", "back\\slash",
                                                  "caf\xc3\xa9", "#hash", "(paren)", "tab\tx", ""};
  std::string out;
  const auto n = 1 + pick(rng, 4);
  for (std::size_t i = 0; i < n; ++i) out += pieces[pick(rng, pieces.size())];
  return out;
}

Literal random_literal(Rng& rng) {
  switch (pick(rng, 4)) {
    case 0: return {random_text(rng), Datatype::String};
    case 1: return {std::to_string(static_cast<long>(pick(rng, 2000)) - 1000), Datatype::Integer};
    case 2: return {std::to_string(pick(rng, 100)) + "." + std::to_string(pick(rng, 100)), Datatype::Decimal};
    default: return {pick(rng, 2) ? "true" : "false", Datatype::Boolean};
  }
}

}  // namespace

Ontology random_ontology(Rng& rng, const RandomOntologySpec& spec) {
  Ontology o(pick(rng, 5) == 0 ? "" : "http://example.org/r" + std::to_string(pick(rng, 1000)));
  o.set_prefix("", "http://example.org/r#");
  const bool ex = spec.extra_prefix && pick(rng, 2) == 0;
  if (ex) o.set_prefix("ex", "http://example.org/ex#");
  auto name = [&](const std::string& stem, std::size_t i) {
    const bool use_ex = ex && pick(rng, 3) == 0;
    return EntityName{use_ex ? "ex" : "", stem + std::to_string(i)};
  };

  std::vector<EntityName> classes, props, inds, data;
  const auto nc = 1 + pick(rng, spec.max_classes);
  for (std::size_t i = 0; i < nc; ++i) classes.push_back(name("C", i));
  const auto np = spec.max_properties ? pick(rng, spec.max_properties + 1) : 0;
  for (std::size_t i = 0; i < np; ++i) props.push_back(name("p", i));
  const auto ni = spec.max_individuals ? pick(rng, spec.max_individuals + 1) : 0;
  for (std::size_t i = 0; i < ni; ++i) {
    if (spec.punning && pick(rng, 8) == 0)
      inds.push_back(classes[pick(rng, classes.size())]);
    else
      inds.push_back(name("i", i));
  }
  std::sort(inds.begin(), inds.end());
  inds.erase(std::unique(inds.begin(), inds.end()), inds.end());
  const auto nd = spec.max_data_properties ? pick(rng, spec.max_data_properties + 1) : 0;
  for (std::size_t i = 0; i < nd; ++i) data.push_back(name("d", i));

  for (const auto& c : classes) o.declare(c, EntityKind::Class);
  for (const auto& p : props) o.declare(p, EntityKind::ObjectProperty);
  for (const auto& i : inds) o.declare(i, EntityKind::Individual);
  for (const auto& d : data) o.declare(d, EntityKind::DataProperty);

  auto cls_expr = [&]() {
    if (classes.size() >= 2 && pick(rng, 4) == 0) {
      auto members = distinct(rng, classes, 2 + pick(rng, 2));
      if (members.size() >= 2) return ClassExpression::union_of(members);
    }
    return ClassExpression::named(classes[pick(rng, classes.size())]);
  };
  auto named = [&]() { return ClassExpression::named(classes[pick(rng, classes.size())]); };

  const auto count = pick(rng, spec.max_axioms + 1);
  for (std::size_t n = 0; n < count; ++n) {
    const auto kind = pick(rng, 15);
    std::optional<Axiom> ax;
    switch (kind) {
      case 0: ax = axioms::SubClassOf{pick(rng, 3) ? named() : cls_expr(), pick(rng, 4) ? named() : cls_expr()}; break;
      case 1: ax = axioms::EquivalentClasses{named(), cls_expr()}; break;
      case 2:
        if (classes.size() >= 2) ax = axioms::DisjointClasses{distinct(rng, classes, 2 + pick(rng, 2))};
        break;
      case 3:
        if (classes.size() >= 3) {
          auto parts = distinct(rng, classes, 3 + pick(rng, 2));
          auto whole = parts.back();
          parts.pop_back();
          ax = axioms::DisjointUnion{whole, parts};
        }
        break;
      case 4:
        if (!props.empty()) ax = axioms::ObjectPropertyDomain{props[pick(rng, props.size())], cls_expr()};
        break;
      case 5:
        if (!props.empty()) ax = axioms::ObjectPropertyRange{props[pick(rng, props.size())], cls_expr()};
        break;
      case 6:
        if (!data.empty()) ax = axioms::DataPropertyDomain{data[pick(rng, data.size())], cls_expr()};
        break;
      case 7:
        if (!data.empty())
          ax = axioms::DataPropertyRange{data[pick(rng, data.size())], static_cast<Datatype>(pick(rng, 4))};
        break;
      case 8:
        if (!props.empty())
          ax = axioms::SubObjectPropertyOf{props[pick(rng, props.size())], props[pick(rng, props.size())]};
        break;
      case 9:
        if (!props.empty())
          ax = axioms::InverseObjectProperties{props[pick(rng, props.size())], props[pick(rng, props.size())]};
        break;
      case 10:
        if (!props.empty())
          ax = axioms::PropertyCharacteristic{props[pick(rng, props.size())],
                                              static_cast<Characteristic>(pick(rng, 6))};
        break;
      case 11:
        if (!inds.empty()) ax = axioms::ClassAssertion{pick(rng, 5) ? named() : cls_expr(), inds[pick(rng, inds.size())]};
        break;
      case 12:
      case 13:
        if (!props.empty() && !inds.empty())
          ax = axioms::ObjectPropertyAssertion{props[pick(rng, props.size())], inds[pick(rng, inds.size())],
                                               inds[pick(rng, inds.size())]};
        break;
      default:
        if (!data.empty() && !inds.empty() && pick(rng, 2))
          ax = axioms::DataPropertyAssertion{data[pick(rng, data.size())], inds[pick(rng, inds.size())],
                                             random_literal(rng)};
        else if (spec.annotations) {
          std::vector<EntityName> any = classes;
          any.insert(any.end(), inds.begin(), inds.end());
          any.insert(any.end(), props.begin(), props.end());
          ax = axioms::Label{any[pick(rng, any.size())], random_text(rng)};
        }
        break;
    }
    if (ax) o.add_axiom(std::move(*ax));
  }
  return o;
}

Ontology shuffled_copy(const Ontology& ontology, Rng& rng) {
  Ontology copy(ontology.id());
  for (const auto& [name, iri] : ontology.prefixes()) copy.set_prefix(name, iri);
  for (const auto& d : ontology.declarations()) copy.declare(d.name, d.kind);
  auto axioms = ontology.axioms();
  rng.shuffle(axioms);
  for (auto& ax : axioms) copy.add_axiom(std::move(ax));
  return copy;
}

}  // namespace ontomap::testing
