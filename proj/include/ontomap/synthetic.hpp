#pragma once

#include <cstdint>
#include <vector>

#include "ontomap/corpus.hpp"

namespace ontomap {

struct PlantedCorpusSpec {
  std::size_t documents = 200;
  std::size_t words_per_topic = 50;
  std::size_t document_length = 50;
  std::size_t topics = 2;
  std::uint64_t seed = 1;
};

// Documents each drawn from exactly one of `topics` disjoint vocabularies
// (words `t<topic>w<index>`), with the true topic per document.
struct PlantedCorpus {
  std::vector<DocumentRecord> records;
  std::vector<std::size_t> labels;
};

PlantedCorpus planted_corpus(const PlantedCorpusSpec& spec);

// Obesity-literature-like abstracts mixing a few themes (conditions,
// dietary treatment, surgery and drugs, symptoms) with filler and stopwords;
// vocabulary overlaps the bundled ontology's labels.
std::vector<DocumentRecord> obesity_corpus(std::size_t documents, std::uint64_t seed);

}  // namespace ontomap
