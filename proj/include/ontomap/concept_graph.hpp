#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ontomap/ontology.hpp"
#include "ontomap/reasoner.hpp"

namespace ontomap {

enum class NodeKind { Class, Individual };

std::string_view to_string(NodeKind kind);  // "class" / "individual"

struct GraphNode {
  std::string id;  // EntityName::display()
  NodeKind kind = NodeKind::Class;
  std::string label;
};

// `kind` is one of `subclass`, `relation:<property>`, `assertion:<property>`,
// `instance_of`. Edges are directed source -> target.
struct GraphEdge {
  std::string source, target, kind;
  double weight = 1.0;
};

struct ConceptGraph {
  std::vector<GraphNode> nodes;
  std::vector<GraphEdge> edges;

  bool empty() const { return nodes.empty(); }
  std::optional<std::size_t> index_of(std::string_view id) const;
};

// Nodes: classes in name order, then (when requested) individuals not
// already present as a punned class. Edges: direct subclass pairs from the
// taxonomy, domain -> range per object property (unions expanded), asserted
// property edges between individuals and individual -> asserted class.
ConceptGraph build_concept_graph(const InferredStore& store, const Ontology& ontology,
                                 bool include_individuals);

}  // namespace ontomap
