#include "ontomap/louvain.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "ontomap/error.hpp"
#include "ontomap/random.hpp"

namespace ontomap {

namespace {

constexpr double kMoveEpsilon = 1e-12;
constexpr double kMinPhaseGain = 1e-9;

}  // namespace

void WeightedGraph::bump(std::size_t u, std::size_t v, double w) {
  auto& r = adj_[u];
  auto it = std::lower_bound(r.begin(), r.end(), v,
                             [](const auto& e, std::size_t x) { return e.first < x; });
  if (it != r.end() && it->first == v)
    it->second += w;
  else
    r.insert(it, {v, w});
}

void WeightedGraph::add_edge(std::size_t u, std::size_t v, double w) {
  if (u >= size() || v >= size()) throw Error(Errc::PartitionMismatch, "edge endpoint out of range");
  if (u == v) {
    bump(u, u, 2.0 * w);
  } else {
    bump(u, v, w);
    bump(v, u, w);
  }
  total_ += w;
}

double WeightedGraph::degree(std::size_t u) const {
  double k = 0.0;
  for (const auto& [v, w] : adj_[u]) k += w;
  return k;
}

WeightedGraph WeightedGraph::from(const ConceptGraph& g) {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < g.nodes.size(); ++i) index.emplace(g.nodes[i].id, i);
  WeightedGraph out(g.nodes.size());
  for (const auto& e : g.edges) out.add_edge(index.at(e.source), index.at(e.target), e.weight);
  return out;
}

std::size_t Partition::cluster_count() const {
  std::size_t n = 0;
  for (const auto c : assignment) n = std::max(n, c + 1);
  return n;
}

std::vector<std::size_t> normalize_assignment(const std::vector<std::size_t>& assignment) {
  std::map<std::size_t, std::size_t> ids;
  std::vector<std::size_t> out;
  out.reserve(assignment.size());
  for (const auto c : assignment) out.push_back(ids.try_emplace(c, ids.size()).first->second);
  return out;
}

double modularity(const WeightedGraph& g, const std::vector<std::size_t>& assignment) {
  if (assignment.size() != g.size())
    throw Error(Errc::PartitionMismatch, "partition covers " + std::to_string(assignment.size()) +
                                             " nodes, graph has " + std::to_string(g.size()));
  const double two_m = 2.0 * g.total_weight();
  if (two_m <= 0.0) return 0.0;
  std::map<std::size_t, double> in, tot;
  for (std::size_t u = 0; u < g.size(); ++u)
    for (const auto& [v, w] : g.row(u)) {
      tot[assignment[u]] += w;
      if (assignment[u] == assignment[v]) in[assignment[u]] += w;
    }
  double q = 0.0;
  for (const auto& [c, t] : tot) q += in[c] / two_m - (t / two_m) * (t / two_m);
  return q;
}

double modularity(const ConceptGraph& g, const Partition& p) {
  return modularity(WeightedGraph::from(g), p.assignment);
}

namespace {

// One level of the method: greedy local moves on `g`. Returns the community
// of each node (not yet dense) and whether anything moved.
std::pair<std::vector<std::size_t>, bool> local_moves(const WeightedGraph& g, Rng& rng) {
  const std::size_t n = g.size();
  const double two_m = 2.0 * g.total_weight();
  std::vector<std::size_t> comm(n);
  std::vector<double> k(n), tot(n);
  for (std::size_t i = 0; i < n; ++i) {
    comm[i] = i;
    k[i] = g.degree(i);
    tot[i] = k[i];
  }
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;

  bool any = false;
  std::map<std::size_t, double> links;
  for (bool moved = true; moved;) {
    moved = false;
    rng.shuffle(order);
    for (const auto i : order) {
      const std::size_t own = comm[i];
      links.clear();
      links[own] = 0.0;
      for (const auto& [j, w] : g.row(i))
        if (j != i) links[comm[j]] += w;
      tot[own] -= k[i];
      auto gain = [&](std::size_t c) { return links[c] - tot[c] * k[i] / two_m; };

      // `links` iterates in ascending community id, so the first candidate
      // within epsilon of the maximum is the lowest id. Staying wins unless
      // a move strictly improves.
      const double stay = gain(own);
      double top = stay;
      for (const auto& [c, w] : links) top = std::max(top, gain(c));
      std::size_t best = own;
      if (top > stay + kMoveEpsilon)
        for (const auto& [c, w] : links)
          if (c != own && gain(c) >= top - kMoveEpsilon) {
            best = c;
            break;
          }
      tot[best] += k[i];
      if (best != own) {
        comm[i] = best;
        moved = any = true;
      }
    }
  }
  return {comm, any};
}

WeightedGraph aggregate(const WeightedGraph& g, const std::vector<std::size_t>& comm,
                        std::size_t communities) {
  WeightedGraph out(communities);
  for (std::size_t u = 0; u < g.size(); ++u)
    for (const auto& [v, w] : g.row(u)) {
      // Each off-diagonal weight is seen from both ends; a loop in the new
      // graph receives its full intra-community sum.
      const auto cu = comm[u], cv = comm[v];
      if (cu == cv)
        out.add_edge(cu, cu, w / 2.0);
      else if (cu < cv)
        out.add_edge(cu, cv, w);
    }
  return out;
}

}  // namespace

LouvainResult louvain(const WeightedGraph& g, std::uint64_t seed) {
  if (g.size() == 0) throw Error(Errc::EmptyGraph, "cannot cluster an empty graph");
  Rng rng(seed);
  LouvainResult result;
  std::vector<std::size_t> flat(g.size());
  for (std::size_t i = 0; i < flat.size(); ++i) flat[i] = i;
  result.trace.push_back(modularity(g, flat));

  if (g.total_weight() > 0.0) {
    WeightedGraph level = g;
    for (;;) {
      auto [comm, moved] = local_moves(level, rng);
      if (!moved) break;
      comm = normalize_assignment(comm);
      std::size_t count = 0;
      for (const auto c : comm) count = std::max(count, c + 1);
      for (auto& c : flat) c = comm[c];
      const double q = modularity(g, flat);
      const double gain = q - result.trace.back();
      result.trace.push_back(q);
      if (gain < kMinPhaseGain || count == level.size()) break;
      level = aggregate(level, comm, count);
    }
  }
  result.partition.assignment = normalize_assignment(flat);
  result.partition.seed = seed;
  return result;
}

Partition cluster(const ConceptGraph& g, std::uint64_t seed) {
  return louvain(WeightedGraph::from(g), seed).partition;
}

}  // namespace ontomap
