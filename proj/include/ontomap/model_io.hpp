#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ontomap/lda.hpp"

namespace ontomap {

struct RunMetadata {
  std::string model;  // "lda" or "dflda"
  std::uint64_t seed = 0;
  std::size_t iterations = 0;
  std::size_t topics = 0;
  double alpha = 0.0;
  double beta = 0.0;
  std::optional<double> eta, epsilon;
  std::size_t must_links = 0, cannot_links = 0;
  std::size_t documents = 0, vocabulary = 0, tokens = 0;
};

struct TopicSummary {
  std::vector<std::pair<std::string, double>> words;
  std::vector<ConceptTag> tags;
};

// What the `lda` subcommand writes: run metadata, final log-likelihood and
// per-topic top words (with tags when an ontology was given).
struct ModelReport {
  RunMetadata metadata;
  double log_likelihood = 0.0;
  std::vector<TopicSummary> topics;
  bool tagged = false;
};

ModelReport summarize(const TopicModelState& state, const Corpus& corpus, RunMetadata metadata,
                      std::size_t top_n, const ConceptLexicon* lexicon);

std::string to_json(const ModelReport& report);
// Throws Error(MalformedInput).
ModelReport model_report_from_json(std::string_view text);

// Re-tags the top words stored in a report.
std::vector<std::vector<ConceptTag>> tag_report(const ModelReport& report, const ConceptLexicon& lexicon);
std::string tags_to_json(const std::vector<std::vector<ConceptTag>>& tags);

}  // namespace ontomap
