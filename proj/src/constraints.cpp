#include "ontomap/constraints.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include <json.hpp>

#include "ontomap/error.hpp"

namespace ontomap {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

using PairMap = std::map<WordPair, std::set<std::string>>;

std::vector<LinkConstraint> to_list(const PairMap& m) {
  std::vector<LinkConstraint> out;
  for (const auto& [p, src] : m) out.push_back({p, {src.begin(), src.end()}});
  return out;
}

std::string pair_text(const WordPair& p, const std::vector<std::string>& vocab) {
  return "(" + vocab[p.a] + ", " + vocab[p.b] + ")";
}

// Drops cannot-links inside a must-link component.
void resolve(ConstraintSet& cs, PairMap& cannot, const std::vector<std::string>& vocab) {
  const auto comps = must_link_components(cs, vocab.size());
  std::vector<std::size_t> comp_of(vocab.size());
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (const auto w : comps[c]) comp_of[w] = c;
  for (auto it = cannot.begin(); it != cannot.end();) {
    if (comp_of[it->first.a] == comp_of[it->first.b]) {
      cs.warnings.push_back("cannot-link " + pair_text(it->first, vocab) +
                            " joined by must-links; dropped");
      it = cannot.erase(it);
    } else {
      ++it;
    }
  }
  cs.cannot_links = to_list(cannot);
}

}  // namespace

std::vector<std::vector<std::uint32_t>> must_link_components(const ConstraintSet& constraints,
                                                             std::size_t vocabulary_size) {
  DisjointSets sets(vocabulary_size);
  for (const auto& m : constraints.must_links) sets.unite(m.pair.a, m.pair.b);
  std::map<std::size_t, std::vector<std::uint32_t>> by_root;
  for (std::size_t w = 0; w < vocabulary_size; ++w)
    by_root[sets.find(w)].push_back(static_cast<std::uint32_t>(w));
  std::vector<std::vector<std::uint32_t>> out;
  for (auto& [root, words] : by_root) out.push_back(std::move(words));
  return out;
}

ConstraintSet derive_constraints(const Ontology& ontology, const ConceptLexicon& lexicon,
                                 const std::vector<std::string>& vocabulary,
                                 const ConstraintOptions& options) {
  auto in_vocab = [&](const std::set<std::string>& tokens) {
    std::set<std::uint32_t> ids;
    for (const auto& t : tokens) {
      auto it = std::lower_bound(vocabulary.begin(), vocabulary.end(), t);
      if (it != vocabulary.end() && *it == t) ids.insert(static_cast<std::uint32_t>(it - vocabulary.begin()));
    }
    return ids;
  };

  ConstraintSet cs;
  PairMap must, cannot;
  if (options.must_links) {
    for (const auto& [name, tokens] : lexicon.entries) {
      const auto ids = in_vocab(tokens);
      for (auto i = ids.begin(); i != ids.end(); ++i)
        for (auto j = std::next(i); j != ids.end(); ++j) must[WordPair::of(*i, *j)].insert(name.qualified());
    }
  }
  cs.must_links = to_list(must);

  if (options.cannot_links) {
    std::map<EntityName, std::set<std::uint32_t>> side_cache;
    auto side = [&](const EntityName& cls) -> const std::set<std::uint32_t>& {
      auto [it, fresh] = side_cache.try_emplace(cls);
      if (fresh) {
        it->second = in_vocab(lexicon.tokens(cls));
        for (const auto& ax : ontology.axioms())
          if (const auto* a = std::get_if<axioms::ClassAssertion>(&ax))
            if (a->type.is_named() && a->type.name() == cls) {
              const auto more = in_vocab(lexicon.tokens(a->individual));
              it->second.insert(more.begin(), more.end());
            }
      }
      return it->second;
    };
    auto cross = [&](const EntityName& x, const EntityName& y, const std::string& source) {
      const auto& sx = side(x);
      const auto& sy = side(y);
      std::set<std::uint32_t> shared;
      std::set_intersection(sx.begin(), sx.end(), sy.begin(), sy.end(),
                            std::inserter(shared, shared.end()));
      for (const auto w : shared)
        cs.warnings.push_back("token '" + vocabulary[w] + "' appears on both sides of " + source +
                              "; left out of its cannot-links");
      for (const auto a : sx)
        for (const auto b : sy)
          if (!shared.count(a) && !shared.count(b)) cannot[WordPair::of(a, b)].insert(source);
    };
    for (const auto& ax : ontology.axioms()) {
      if (const auto* a = std::get_if<axioms::DisjointClasses>(&ax)) {
        const std::string source = "DisjointClasses(" + a->classes.front().qualified() + " ...)";
        for (std::size_t i = 0; i < a->classes.size(); ++i)
          for (std::size_t j = i + 1; j < a->classes.size(); ++j)
            cross(a->classes[i], a->classes[j], source);
      } else if (const auto* a = std::get_if<axioms::DisjointUnion>(&ax)) {
        const std::string source = "DisjointUnion(" + a->whole.qualified() + " ...)";
        for (std::size_t i = 0; i < a->parts.size(); ++i)
          for (std::size_t j = i + 1; j < a->parts.size(); ++j) cross(a->parts[i], a->parts[j], source);
      }
    }
  }
  resolve(cs, cannot, vocabulary);
  return cs;
}

std::string constraints_to_json(const ConstraintSet& constraints,
                                const std::vector<std::string>& vocabulary) {
  nlohmann::ordered_json doc;
  doc["must"] = nlohmann::ordered_json::array();
  doc["cannot"] = nlohmann::ordered_json::array();
  for (const auto& m : constraints.must_links)
    doc["must"].push_back({vocabulary.at(m.pair.a), vocabulary.at(m.pair.b)});
  for (const auto& c : constraints.cannot_links)
    doc["cannot"].push_back({vocabulary.at(c.pair.a), vocabulary.at(c.pair.b)});
  return doc.dump(2) + "\n";
}

ConstraintSet constraints_from_json(std::string_view text, const std::vector<std::string>& vocabulary) {
  ConstraintSet cs;
  PairMap must, cannot;
  try {
    const auto doc = nlohmann::json::parse(text);
    auto load = [&](const char* key, PairMap& into) {
      if (!doc.contains(key)) return;
      for (const auto& pair : doc.at(key)) {
        if (!pair.is_array() || pair.size() != 2)
          throw Error(Errc::MalformedInput, std::string("each '") + key + "' entry must be a word pair");
        const auto x = pair[0].get<std::string>(), y = pair[1].get<std::string>();
        auto ix = std::lower_bound(vocabulary.begin(), vocabulary.end(), x);
        auto iy = std::lower_bound(vocabulary.begin(), vocabulary.end(), y);
        if (ix == vocabulary.end() || *ix != x || iy == vocabulary.end() || *iy != y) {
          cs.warnings.push_back(std::string(key) + " pair (" + x + ", " + y + ") outside vocabulary; skipped");
          continue;
        }
        if (ix == iy) continue;
        into[WordPair::of(static_cast<std::uint32_t>(ix - vocabulary.begin()),
                          static_cast<std::uint32_t>(iy - vocabulary.begin()))]
            .insert("file");
      }
    };
    if (!doc.is_object()) throw Error(Errc::MalformedInput, "constraint file must hold a JSON object");
    load("must", must);
    load("cannot", cannot);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::MalformedInput, std::string("constraint file: ") + e.what());
  }
  cs.must_links = to_list(must);
  resolve(cs, cannot, vocabulary);
  return cs;
}

}  // namespace ontomap
