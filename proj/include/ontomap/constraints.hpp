#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ontomap/lexicon.hpp"
#include "ontomap/ontology.hpp"

namespace ontomap {

// Unordered word-id pair, stored with a < b.
struct WordPair {
  std::uint32_t a = 0, b = 0;

  static WordPair of(std::uint32_t x, std::uint32_t y) { return x < y ? WordPair{x, y} : WordPair{y, x}; }
  auto operator<=>(const WordPair&) const = default;
};

struct LinkConstraint {
  WordPair pair;
  std::vector<std::string> provenance;  // entity names or axiom descriptions
};

// Must-links and cannot-links over vocabulary ids, each sorted by pair.
// Conflicts are resolved before a set is handed out: no pair is on both
// lists and no cannot-link joins two words of one must-link component.
struct ConstraintSet {
  std::vector<LinkConstraint> must_links;
  std::vector<LinkConstraint> cannot_links;
  std::vector<std::string> warnings;

  bool empty() const { return must_links.empty() && cannot_links.empty(); }
};

struct ConstraintOptions {
  bool must_links = true;
  bool cannot_links = true;
};

// Must-link: every pair of in-vocabulary tokens of one lexicon entry.
// Cannot-link: for each disjoint class pair (DisjointClasses, DisjointUnion
// parts), the cross pairs between the in-vocabulary tokens of each side,
// where a side is the class's tokens plus those of its asserted instances.
// Conflicts favour must-links: a token on both sides leaves that axiom's
// pairs, and pairs inside one must-link component are dropped, each with a
// warning.
ConstraintSet derive_constraints(const Ontology& ontology, const ConceptLexicon& lexicon,
                                 const std::vector<std::string>& vocabulary,
                                 const ConstraintOptions& options = {});

// Word-id components of the must-link transitive closure, each sorted, in
// order of their smallest word. Words without must-links are singletons.
std::vector<std::vector<std::uint32_t>> must_link_components(const ConstraintSet& constraints,
                                                             std::size_t vocabulary_size);

// `{"must": [[w1, w2], ...], "cannot": [[w1, w2], ...]}` with word strings.
std::string constraints_to_json(const ConstraintSet& constraints,
                                const std::vector<std::string>& vocabulary);
// Words outside the vocabulary are skipped with a warning; conflicts are
// resolved as in derive_constraints. Throws Error(MalformedInput).
ConstraintSet constraints_from_json(std::string_view text, const std::vector<std::string>& vocabulary);

}  // namespace ontomap
