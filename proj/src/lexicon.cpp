#include "ontomap/lexicon.hpp"

#include "ontomap/text.hpp"

namespace ontomap {

const std::set<std::string>& ConceptLexicon::tokens(const EntityName& name) const {
  static const std::set<std::string> none;
  auto it = entries.find(name);
  return it == entries.end() ? none : it->second;
}

ConceptLexicon build_lexicon(const Ontology& ontology, const std::set<std::string>& stopwords) {
  std::map<EntityName, std::vector<std::string>> labels;
  for (const auto& ax : ontology.axioms())
    if (const auto* l = std::get_if<axioms::Label>(&ax)) labels[l->entity].push_back(l->text);

  ConceptLexicon lexicon;
  for (const auto& d : ontology.declarations()) {
    if (d.kind != EntityKind::Class && d.kind != EntityKind::Individual) continue;
    if (lexicon.entries.count(d.name)) continue;
    std::set<std::string> tokens;
    for (auto& w : split_identifier(d.name.local)) tokens.insert(std::move(w));
    if (auto it = labels.find(d.name); it != labels.end())
      for (const auto& text : it->second)
        for (auto& w : split_words(text)) tokens.insert(std::move(w));
    for (const auto& s : stopwords) tokens.erase(s);
    if (!tokens.empty()) lexicon.entries.emplace(d.name, std::move(tokens));
  }
  return lexicon;
}

}  // namespace ontomap
