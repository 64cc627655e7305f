#include "naive_reasoner.hpp"

#include <map>
#include <vector>

namespace ontomap::testing {

std::set<Fact> naive_closure(const Ontology& o) {
  std::set<Fact> facts;
  std::vector<std::pair<EntityName, EntityName>> domain, range, inverse, subprop;
  std::set<EntityName> symmetric, transitive;

  for (const auto& ax : o.axioms()) {
    if (const auto* a = std::get_if<axioms::SubClassOf>(&ax)) {
      if (a->sup.is_named())
        for (const auto& m : a->sub.members()) facts.insert(Fact::sub(m, a->sup.name()));
    } else if (const auto* a = std::get_if<axioms::EquivalentClasses>(&ax)) {
      if (a->first.is_named() && a->second.is_named()) {
        facts.insert(Fact::sub(a->first.name(), a->second.name()));
        facts.insert(Fact::sub(a->second.name(), a->first.name()));
      } else if (a->first.is_named() || a->second.is_named()) {
        const auto& n = a->first.is_named() ? a->first : a->second;
        const auto& u = a->first.is_named() ? a->second : a->first;
        for (const auto& m : u.members()) facts.insert(Fact::sub(m, n.name()));
      }
    } else if (const auto* a = std::get_if<axioms::DisjointUnion>(&ax)) {
      for (const auto& p : a->parts) facts.insert(Fact::sub(p, a->whole));
    } else if (const auto* a = std::get_if<axioms::ObjectPropertyDomain>(&ax)) {
      if (a->domain.is_named()) domain.emplace_back(a->property, a->domain.name());
    } else if (const auto* a = std::get_if<axioms::ObjectPropertyRange>(&ax)) {
      if (a->range.is_named()) range.emplace_back(a->property, a->range.name());
    } else if (const auto* a = std::get_if<axioms::SubObjectPropertyOf>(&ax)) {
      subprop.emplace_back(a->sub, a->sup);
    } else if (const auto* a = std::get_if<axioms::InverseObjectProperties>(&ax)) {
      inverse.emplace_back(a->first, a->second);
      inverse.emplace_back(a->second, a->first);
    } else if (const auto* a = std::get_if<axioms::PropertyCharacteristic>(&ax)) {
      if (a->characteristic == Characteristic::Symmetric) symmetric.insert(a->property);
      if (a->characteristic == Characteristic::Transitive) transitive.insert(a->property);
    } else if (const auto* a = std::get_if<axioms::ClassAssertion>(&ax)) {
      if (a->type.is_named()) facts.insert(Fact::is_a(a->individual, a->type.name()));
    } else if (const auto* a = std::get_if<axioms::ObjectPropertyAssertion>(&ax)) {
      facts.insert(Fact::rel(a->property, a->subject, a->object));
    }
  }

  for (bool changed = true; changed;) {
    changed = false;
    std::vector<Fact> snapshot(facts.begin(), facts.end());
    auto add = [&](Fact f) { changed |= facts.insert(std::move(f)).second; };
    for (const auto& f : snapshot) {
      for (const auto& g : snapshot) {
        if (f.kind == FactKind::Sub && g.kind == FactKind::Sub && f.second == g.first)
          add(Fact::sub(f.first, g.second));
        if (f.kind == FactKind::IsA && g.kind == FactKind::Sub && f.second == g.first)
          add(Fact::is_a(f.first, g.second));
        if (f.kind == FactKind::Rel && g.kind == FactKind::Rel && f.first == g.first &&
            transitive.count(f.first) && f.third == g.second)
          add(Fact::rel(f.first, f.second, g.third));
      }
      if (f.kind != FactKind::Rel) continue;
      for (const auto& [p, c] : domain)
        if (p == f.first) add(Fact::is_a(f.second, c));
      for (const auto& [p, c] : range)
        if (p == f.first) add(Fact::is_a(f.third, c));
      for (const auto& [p, q] : inverse)
        if (p == f.first) add(Fact::rel(q, f.third, f.second));
      if (symmetric.count(f.first)) add(Fact::rel(f.first, f.third, f.second));
      for (const auto& [p, q] : subprop)
        if (p == f.first) add(Fact::rel(q, f.second, f.third));
    }
  }
  return facts;
}

}  // namespace ontomap::testing
