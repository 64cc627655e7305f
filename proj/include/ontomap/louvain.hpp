#pragma once

#include <cstdint>
#include <vector>

#include "ontomap/concept_graph.hpp"

namespace ontomap {

// Undirected weighted graph on nodes 0..n-1. Parallel edges add up; a self
// loop of weight w counts 2w towards its node's degree.
class WeightedGraph {
 public:
  explicit WeightedGraph(std::size_t n = 0) : adj_(n) {}

  // Undirected projection: every edge of `g` in either direction, weights
  // summed.
  static WeightedGraph from(const ConceptGraph& g);

  void add_edge(std::size_t u, std::size_t v, double w = 1.0);

  std::size_t size() const { return adj_.size(); }
  double total_weight() const { return total_; }  // m
  double degree(std::size_t u) const;
  // Symmetric adjacency row: A(u,v) for every v with nonzero weight; the
  // diagonal entry is 2w for a loop of weight w.
  const std::vector<std::pair<std::size_t, double>>& row(std::size_t u) const { return adj_[u]; }

 private:
  void bump(std::size_t u, std::size_t v, double w);

  std::vector<std::vector<std::pair<std::size_t, double>>> adj_;
  double total_ = 0.0;
};

// Cluster id per node (aligned with the graph's node order), dense from 0.
struct Partition {
  std::vector<std::size_t> assignment;
  std::uint64_t seed = 0;

  std::size_t cluster_count() const;
};

struct LouvainResult {
  Partition partition;
  // Modularity of the flattened partition: singletons first, then after
  // every local-move + aggregation phase.
  std::vector<double> trace;
};

// Throws Error(EmptyGraph) on a graph without nodes.
LouvainResult louvain(const WeightedGraph& g, std::uint64_t seed);
Partition cluster(const ConceptGraph& g, std::uint64_t seed);

// Q = sum_c [ in(c)/2m - (tot(c)/2m)^2 ]; 0 on a graph without edges.
// Throws Error(PartitionMismatch) unless the assignment covers every node.
double modularity(const WeightedGraph& g, const std::vector<std::size_t>& assignment);
double modularity(const ConceptGraph& g, const Partition& p);

// Renumbers cluster ids densely in order of first appearance.
std::vector<std::size_t> normalize_assignment(const std::vector<std::size_t>& assignment);

}  // namespace ontomap
