#include "ontomap/forest.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "ontomap/error.hpp"

namespace ontomap {

std::vector<std::vector<std::size_t>> maximal_cliques(const std::vector<std::vector<bool>>& adjacent,
                                                      std::size_t limit) {
  const std::size_t n = adjacent.size();
  std::vector<std::vector<std::size_t>> cliques;
  std::vector<std::size_t> r;
  // Bron-Kerbosch with pivoting on the vertex covering most of P u X.
  std::function<void(std::vector<std::size_t>, std::vector<std::size_t>)> expand =
      [&](std::vector<std::size_t> p, std::vector<std::size_t> x) {
        if (p.empty() && x.empty()) {
          if (cliques.size() == limit)
            throw Error(Errc::TooManyCliques,
                        "more than " + std::to_string(limit) + " maximal cliques in a cannot-link region");
          auto c = r;
          std::sort(c.begin(), c.end());
          cliques.push_back(std::move(c));
          return;
        }
        std::size_t pivot = p.empty() ? x.front() : p.front();
        std::size_t best = 0;
        for (const auto* set : {&p, &x})
          for (const auto u : *set) {
            std::size_t cover = 0;
            for (const auto v : p) cover += adjacent[u][v] ? 1 : 0;
            if (cover > best) best = cover, pivot = u;
          }
        std::vector<std::size_t> candidates;
        for (const auto v : p)
          if (!adjacent[pivot][v]) candidates.push_back(v);
        for (const auto v : candidates) {
          std::vector<std::size_t> np, nx;
          for (const auto u : p)
            if (adjacent[v][u]) np.push_back(u);
          for (const auto u : x)
            if (adjacent[v][u]) nx.push_back(u);
          r.push_back(v);
          expand(std::move(np), std::move(nx));
          r.pop_back();
          p.erase(std::find(p.begin(), p.end(), v));
          x.push_back(v);
        }
      };
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  if (n > 0) expand(all, {});
  std::sort(cliques.begin(), cliques.end());
  return cliques;
}

const std::vector<PathStep>& DirichletForest::path(std::uint32_t word, std::size_t branch) const {
  const auto& p = paths_.at(word);
  return p.size() == 1 ? p.front() : p.at(branch);
}

std::size_t DirichletForest::leaf(std::uint32_t word, std::size_t branch) const {
  const auto& l = leaf_.at(word);
  return l.size() == 1 ? l.front() : l.at(branch);
}

const std::vector<std::size_t>& DirichletForest::children(std::size_t node, std::size_t branch) const {
  const auto r = nodes_[node].region;
  return r == kNoNode ? nodes_[node].children : regions_[r].branch_children.at(branch);
}

double DirichletForest::gamma_sum(std::size_t node, std::size_t branch) const {
  const auto r = nodes_[node].region;
  return (r == kNoNode ? child_coef_sum_[node] : branch_coef_sum_[r].at(branch)) * params_.beta;
}

std::vector<std::size_t> DirichletForest::branch_internal_nodes(std::size_t region,
                                                                std::size_t branch) const {
  std::vector<std::size_t> out{regions_[region].node};
  for (const auto n : regions_[region].branch_nodes.at(branch))
    if (!nodes_[n].children.empty()) out.push_back(n);
  return out;
}

DirichletForest build_forest(const ConstraintSet& constraints, std::size_t vocabulary_size,
                             const ForestParams& params) {
  if (!(params.beta > 0.0)) throw Error(Errc::InvalidHyperparameter, "beta must be > 0");
  if (!(params.eta >= 1.0)) throw Error(Errc::InvalidHyperparameter, "eta must be >= 1");
  if (!(params.epsilon > 0.0 && params.epsilon <= 1.0))
    throw Error(Errc::InvalidHyperparameter, "epsilon must lie in (0, 1]");
  for (const auto* list : {&constraints.must_links, &constraints.cannot_links})
    for (const auto& c : *list)
      if (c.pair.b >= vocabulary_size)
        throw Error(Errc::ForestVocabMismatch, "constraint word id outside the vocabulary");

  DirichletForest f;
  f.params_ = params;
  const auto comps = must_link_components(constraints, vocabulary_size);
  std::vector<std::size_t> comp_of(vocabulary_size);
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (const auto w : comps[c]) comp_of[w] = c;

  std::vector<std::set<std::size_t>> conflicts(comps.size());
  for (const auto& c : constraints.cannot_links) {
    const auto x = comp_of[c.pair.a], y = comp_of[c.pair.b];
    if (x == y)
      throw Error(Errc::ConflictingConstraints,
                  "cannot-link between words " + std::to_string(c.pair.a) + " and " +
                      std::to_string(c.pair.b) + " of one must-link component");
    conflicts[x].insert(y);
    conflicts[y].insert(x);
  }

  // Regions: connected components of the cannot-link graph over components.
  std::vector<std::size_t> region_of_comp(comps.size(), kNoNode);
  std::vector<std::vector<std::size_t>> region_comps;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    if (conflicts[c].empty() || region_of_comp[c] != kNoNode) continue;
    const std::size_t r = region_comps.size();
    std::vector<std::size_t> members, stack{c};
    region_of_comp[c] = r;
    while (!stack.empty()) {
      const auto u = stack.back();
      stack.pop_back();
      members.push_back(u);
      for (const auto v : conflicts[u])
        if (region_of_comp[v] == kNoNode) region_of_comp[v] = r, stack.push_back(v);
    }
    std::sort(members.begin(), members.end());
    region_comps.push_back(std::move(members));
  }

  auto& nodes = f.nodes_;
  nodes.push_back({});
  f.leaf_.assign(vocabulary_size, {});
  f.region_of_.assign(vocabulary_size, kNoNode);

  // `siblings` is null when the child belongs to the parent's own list;
  // region nodes keep per-branch lists instead.
  auto add_node = [&](std::size_t parent, double coef, std::vector<std::size_t>* siblings,
                      std::int64_t word = -1) {
    const std::size_t id = nodes.size();
    ForestNode n;
    n.parent = parent;
    n.coef = coef;
    n.word = word;
    nodes.push_back(std::move(n));
    (siblings ? *siblings : nodes[parent].children).push_back(id);
    if (word >= 0) f.leaf_[static_cast<std::size_t>(word)].push_back(id);
    return id;
  };
  // Adds a component under `parent`; new node ids also go to `track`.
  auto attach = [&](std::size_t parent, const std::vector<std::uint32_t>& comp,
                    std::vector<std::size_t>* siblings, std::vector<std::size_t>* track) {
    if (comp.size() == 1) {
      const auto id = add_node(parent, 1.0, siblings, comp.front());
      if (track) track->push_back(id);
      return;
    }
    const auto inner = add_node(parent, static_cast<double>(comp.size()), siblings);
    if (track) track->push_back(inner);
    for (const auto w : comp) {
      const auto id = add_node(inner, params.eta, nullptr, w);
      if (track) track->push_back(id);
    }
  };

  std::vector<bool> region_built(region_comps.size(), false);
  for (std::size_t c = 0; c < comps.size(); ++c) {
    const auto r = region_of_comp[c];
    if (r == kNoNode) {
      attach(0, comps[c], nullptr, nullptr);
      continue;
    }
    if (region_built[r]) continue;
    region_built[r] = true;

    ForestRegion region;
    const auto& members = region_comps[r];
    std::size_t words = 0;
    for (const auto m : members) {
      region.components.push_back(comps[m]);
      words += comps[m].size();
      for (const auto w : comps[m]) f.region_of_[w] = r;
    }
    std::vector<std::vector<bool>> compatible(members.size(), std::vector<bool>(members.size(), false));
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = 0; j < members.size(); ++j)
        compatible[i][j] = i != j && !conflicts[members[i]].count(members[j]);
    region.cliques = maximal_cliques(compatible, params.max_cliques);

    region.node = add_node(0, static_cast<double>(words), nullptr);
    nodes[region.node].region = r;
    const auto branches = region.cliques.size();
    region.branch_children.resize(branches);
    region.branch_nodes.resize(branches);
    for (std::size_t j = 0; j < branches; ++j) {
      const auto& clique = region.cliques[j];
      for (std::size_t i = 0; i < members.size(); ++i) {
        if (std::binary_search(clique.begin(), clique.end(), i)) {
          attach(region.node, region.components[i], &region.branch_children[j], &region.branch_nodes[j]);
        } else {
          for (const auto w : region.components[i])
            region.branch_nodes[j].push_back(
                add_node(region.node, params.epsilon, &region.branch_children[j], w));
        }
      }
    }
    f.regions_.push_back(std::move(region));
  }

  f.child_coef_sum_.assign(nodes.size(), 0.0);
  for (std::size_t n = 0; n < nodes.size(); ++n)
    for (const auto c : nodes[n].children) f.child_coef_sum_[n] += nodes[c].coef;
  for (const auto& region : f.regions_) {
    std::vector<double> sums;
    for (const auto& kids : region.branch_children) {
      double s = 0.0;
      for (const auto c : kids) s += nodes[c].coef;
      sums.push_back(s);
    }
    f.branch_coef_sum_.push_back(std::move(sums));
  }

  f.paths_.resize(vocabulary_size);
  for (std::uint32_t w = 0; w < vocabulary_size; ++w) {
    for (std::size_t b = 0; b < f.leaf_[w].size(); ++b) {
      std::vector<PathStep> steps;
      for (std::size_t n = f.leaf_[w][b]; nodes[n].parent != kNoNode; n = nodes[n].parent) {
        const auto p = nodes[n].parent;
        steps.push_back({p, n, f.gamma(n), f.gamma_sum(p, b)});
      }
      std::reverse(steps.begin(), steps.end());
      f.paths_[w].push_back(std::move(steps));
    }
  }
  return f;
}

}  // namespace ontomap
