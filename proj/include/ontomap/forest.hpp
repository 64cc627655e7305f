#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "ontomap/constraints.hpp"

namespace ontomap {

struct ForestParams {
  double beta = 0.01;
  double eta = 100.0;
  double epsilon = 1e-6;
  std::size_t max_cliques = 128;
};

inline constexpr std::size_t kNoNode = std::numeric_limits<std::size_t>::max();

// Node of the Dirichlet tree. Edge weights are stored as a coefficient of
// beta; the weight of the edge into a node is `coef * beta`.
struct ForestNode {
  std::size_t parent = kNoNode;
  double coef = 0.0;
  std::vector<std::size_t> children;
  std::int64_t word = -1;       // leaves only
  std::size_t region = kNoNode;  // set on a region node, whose children depend on the branch
};

// A connected part of the cannot-link graph. Each branch is one maximal
// clique of the complement graph over the region's must-link components.
struct ForestRegion {
  std::size_t node = kNoNode;
  std::vector<std::vector<std::uint32_t>> components;
  std::vector<std::vector<std::size_t>> cliques;  // indices into `components`
  // Per branch: the children of the region node, and every node of the
  // branch subtree below the region node.
  std::vector<std::vector<std::size_t>> branch_children;
  std::vector<std::vector<std::size_t>> branch_nodes;
};

// One step of a root-to-leaf path: internal node `parent`, child `child`,
// with gamma = edge weight of the child and gamma_sum = total weight of the
// parent's children.
struct PathStep {
  std::size_t parent, child;
  double gamma, gamma_sum;
};

class DirichletForest {
 public:
  std::size_t vocabulary_size() const { return leaf_.size(); }
  double beta() const { return params_.beta; }
  const ForestParams& params() const { return params_; }

  const std::vector<ForestNode>& nodes() const { return nodes_; }
  const std::vector<ForestRegion>& regions() const { return regions_; }
  std::size_t root() const { return 0; }

  // Region of `word`, or kNoNode for words outside every region.
  std::size_t region_of(std::uint32_t word) const { return region_of_[word]; }
  std::size_t branch_count(std::size_t region) const { return regions_[region].cliques.size(); }
  bool is_flat() const { return regions_.empty() && nodes_.size() == leaf_.size() + 1; }

  // Path for `word` given the branch chosen in its region (ignored outside
  // regions).
  const std::vector<PathStep>& path(std::uint32_t word, std::size_t branch = 0) const;

  // Children of an internal node under a branch choice; for nodes that are
  // not region nodes the branch is ignored.
  const std::vector<std::size_t>& children(std::size_t node, std::size_t branch) const;
  double gamma(std::size_t node) const { return nodes_[node].coef * params_.beta; }
  double gamma_sum(std::size_t node, std::size_t branch) const;

  // Internal nodes of branch `branch` of `region`, starting with the region
  // node itself.
  std::vector<std::size_t> branch_internal_nodes(std::size_t region, std::size_t branch) const;
  // Leaf node of `word` in the given branch.
  std::size_t leaf(std::uint32_t word, std::size_t branch = 0) const;

 private:
  friend DirichletForest build_forest(const ConstraintSet&, std::size_t, const ForestParams&);

  ForestParams params_;
  std::vector<ForestNode> nodes_;
  std::vector<ForestRegion> regions_;
  std::vector<std::size_t> region_of_;
  // leaf_[w][branch] and paths_[w][branch]; a single entry outside regions.
  std::vector<std::vector<std::size_t>> leaf_;
  std::vector<std::vector<std::vector<PathStep>>> paths_;
  std::vector<double> child_coef_sum_;
  std::vector<std::vector<double>> branch_coef_sum_;
};

// Builds the tree from must-link components and cannot-link regions:
// a multi-word component hangs under a node of weight |M|*beta with leaves
// eta*beta, a singleton word under its parent with weight beta; a region
// node (weight = words in region * beta) has one branch per maximal clique
// of the complement of the cannot-link graph, whose components keep their
// structure while the remaining words attach with epsilon*beta.
//
// Throws Error(InvalidHyperparameter) unless beta > 0, eta >= 1 and
// 0 < epsilon <= 1; Error(TooManyCliques) when a region has more than
// max_cliques branches; Error(ConflictingConstraints) when a cannot-link
// lies inside a must-link component.
DirichletForest build_forest(const ConstraintSet& constraints, std::size_t vocabulary_size,
                             const ForestParams& params);

// Maximal cliques of an undirected graph given as adjacency sets, each
// sorted, in lexicographic order. Throws Error(TooManyCliques) past `limit`.
std::vector<std::vector<std::size_t>> maximal_cliques(const std::vector<std::vector<bool>>& adjacent,
                                                      std::size_t limit);

}  // namespace ontomap
