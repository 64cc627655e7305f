#pragma once

#include <map>
#include <set>
#include <string>

#include "ontomap/ontology.hpp"

namespace ontomap {

// Lowercase label tokens for every class and individual that has at least
// one token after stopword filtering. A punned name has a single entry.
struct ConceptLexicon {
  std::map<EntityName, std::set<std::string>> entries;

  bool empty() const { return entries.empty(); }
  // Empty set for unknown names.
  const std::set<std::string>& tokens(const EntityName& name) const;
};

// Tokens are the words of each rdfs:label plus the identifier split of the
// local name, minus `stopwords`.
ConceptLexicon build_lexicon(const Ontology& ontology, const std::set<std::string>& stopwords);

}  // namespace ontomap
