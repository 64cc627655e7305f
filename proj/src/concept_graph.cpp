#include "ontomap/concept_graph.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace ontomap {

std::string_view to_string(NodeKind kind) {
  return kind == NodeKind::Class ? "class" : "individual";
}

std::optional<std::size_t> ConceptGraph::index_of(std::string_view id) const {
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i].id == id) return i;
  return std::nullopt;
}

namespace {

std::string label_of(const Ontology& o, const EntityName& name) {
  const auto labels = o.labels(name);
  return labels.empty() ? name.local : labels.front();
}

// Collects edges per kind group, dropping exact duplicates, so each group is
// emitted in sorted order.
class EdgeGroup {
 public:
  void add(const EntityName& s, const EntityName& t, std::string kind) {
    edges_.insert({s.display(), t.display(), std::move(kind)});
  }
  void append_to(std::vector<GraphEdge>& out) const {
    for (const auto& [s, t, k] : edges_) out.push_back({s, t, k, 1.0});
  }

 private:
  std::set<std::tuple<std::string, std::string, std::string>> edges_;
};

}  // namespace

ConceptGraph build_concept_graph(const InferredStore& store, const Ontology& ontology,
                                 bool include_individuals) {
  ConceptGraph g;
  const auto classes = ontology.entities(EntityKind::Class);
  for (const auto& c : classes) g.nodes.push_back({c.display(), NodeKind::Class, label_of(ontology, c)});
  if (include_individuals)
    for (const auto& i : ontology.entities(EntityKind::Individual))
      if (!ontology.is_declared(i, EntityKind::Class))
        g.nodes.push_back({i.display(), NodeKind::Individual, label_of(ontology, i)});

  EdgeGroup subclass;
  const Taxonomy taxonomy = classify(store);
  for (const auto& node : taxonomy.nodes)
    for (const auto sup : node.direct_supers)
      for (const auto& a : node.classes)
        for (const auto& b : taxonomy.nodes[sup].classes) subclass.add(a, b, "subclass");

  std::map<EntityName, std::set<EntityName>> domains, ranges;
  EdgeGroup relation, assertion, instance_of;
  for (const auto& ax : ontology.axioms()) {
    if (const auto* a = std::get_if<axioms::ObjectPropertyDomain>(&ax)) {
      domains[a->property].insert(a->domain.members().begin(), a->domain.members().end());
    } else if (const auto* a = std::get_if<axioms::ObjectPropertyRange>(&ax)) {
      ranges[a->property].insert(a->range.members().begin(), a->range.members().end());
    } else if (!include_individuals) {
      continue;
    } else if (const auto* a = std::get_if<axioms::ObjectPropertyAssertion>(&ax)) {
      assertion.add(a->subject, a->object, "assertion:" + a->property.display());
    } else if (const auto* a = std::get_if<axioms::ClassAssertion>(&ax)) {
      if (a->type.is_named() && a->type.name() != a->individual)
        instance_of.add(a->individual, a->type.name(), "instance_of");
    }
  }
  for (const auto& [p, ds] : domains) {
    auto r = ranges.find(p);
    if (r == ranges.end()) continue;
    for (const auto& d : ds)
      for (const auto& t : r->second) relation.add(d, t, "relation:" + p.display());
  }

  subclass.append_to(g.edges);
  relation.append_to(g.edges);
  assertion.append_to(g.edges);
  instance_of.append_to(g.edges);
  return g;
}

}  // namespace ontomap
