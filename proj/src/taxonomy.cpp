#include <algorithm>

#include "ontomap/error.hpp"
#include "ontomap/reasoner.hpp"

namespace ontomap {

namespace {

std::vector<EntityName> flatten(const Taxonomy& t, const std::vector<std::size_t>& ids) {
  std::vector<EntityName> out;
  for (const auto id : ids)
    out.insert(out.end(), t.nodes[id].classes.begin(), t.nodes[id].classes.end());
  return out;
}

}  // namespace

std::vector<EntityName> Taxonomy::direct_supers(const EntityName& cls) const {
  auto it = node_of.find(cls);
  if (it == node_of.end()) throw Error(Errc::UndeclaredEntity, cls.qualified() + " is not classified");
  return flatten(*this, nodes[it->second].direct_supers);
}

std::vector<EntityName> Taxonomy::direct_subs(const EntityName& cls) const {
  auto it = node_of.find(cls);
  if (it == node_of.end()) throw Error(Errc::UndeclaredEntity, cls.qualified() + " is not classified");
  return flatten(*this, nodes[it->second].direct_subs);
}

Taxonomy classify(const InferredStore& store) {
  const auto& classes = store.classes();
  const std::size_t n = classes.size();
  std::map<EntityName, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[classes[i]] = i;

  std::vector<std::vector<bool>> sub(n, std::vector<bool>(n, false));
  for (auto it = store.facts().lower_bound(Fact{FactKind::Sub, {}, {}, {}});
       it != store.facts().end() && it->kind == FactKind::Sub; ++it)
    sub[index.at(it->first)][index.at(it->second)] = true;

  // Classes are in name order, so nodes come out ordered by their first class.
  Taxonomy t;
  std::vector<std::size_t> node(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (node[i] != n) continue;
    TaxonomyNode tn;
    for (std::size_t j = i; j < n; ++j)
      if (j == i || (sub[i][j] && sub[j][i])) {
        node[j] = t.nodes.size();
        tn.classes.push_back(classes[j]);
      }
    if (tn.classes.size() > 1) t.diagnostics.push_back({"CyclicHierarchy", tn.classes});
    t.nodes.push_back(std::move(tn));
  }
  for (std::size_t i = 0; i < n; ++i) t.node_of[classes[i]] = node[i];

  const std::size_t m = t.nodes.size();
  std::vector<std::size_t> rep(m);
  for (std::size_t i = n; i-- > 0;) rep[node[i]] = i;
  auto below = [&](std::size_t a, std::size_t b) { return a != b && sub[rep[a]][rep[b]]; };

  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      if (!below(a, b)) continue;
      bool direct = true;
      for (std::size_t c = 0; c < m && direct; ++c)
        if (below(a, c) && below(c, b)) direct = false;
      if (direct) {
        t.nodes[a].direct_supers.push_back(b);
        t.nodes[b].direct_subs.push_back(a);
      }
    }
  }
  for (auto& tn : t.nodes) std::sort(tn.direct_subs.begin(), tn.direct_subs.end());
  return t;
}

}  // namespace ontomap
