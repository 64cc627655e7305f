#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ontomap/corpus.hpp"
#include "ontomap/forest.hpp"
#include "ontomap/lexicon.hpp"
#include "ontomap/random.hpp"

namespace ontomap {

struct LdaParams {
  std::size_t topics = 2;
  double alpha = 25.0;  // conventionally 50 / topics
  double beta = 0.01;   // plain LDA only; a forest carries its own
  std::size_t iterations = 1000;
  std::uint64_t seed = 42;

  static LdaParams with_defaults(std::size_t topics);
};

// Collapsed Gibbs state. For a constrained run `forest` is set and `branch`
// holds q[k][region]; `node_counts[k][node]` are the per-topic counts under
// each forest node of the selected trees.
struct TopicModelState {
  std::size_t topics = 0;
  double alpha = 0.0;
  double beta = 0.0;
  std::uint64_t seed = 0;
  std::size_t iterations = 0;

  std::vector<std::vector<std::uint32_t>> z;
  std::vector<std::vector<std::uint32_t>> doc_topic;   // n_dk
  std::vector<std::vector<std::uint32_t>> topic_word;  // n_kw
  std::vector<std::uint32_t> topic_total;              // n_k

  std::optional<DirichletForest> forest;
  std::vector<std::vector<std::size_t>> branch;
  std::vector<std::vector<std::uint32_t>> node_counts;
};

// Called after every sweep with the sweep number (1-based) and the state.
using SweepObserver = std::function<void(std::size_t, const TopicModelState&)>;

// Plain LDA: p(z=k) ~ (n_dk + alpha) * (n_kw + beta) / (n_k + V beta), tokens
// swept in document order. Initial topics are uniform draws; each token step
// consumes one uniform. Throws Error(InvalidHyperparameter).
TopicModelState lda_gibbs(const Corpus& corpus, const LdaParams& params,
                          const SweepObserver& observer = {});

// Sampler over a Dirichlet forest. With a flat forest it consumes the random
// stream exactly as lda_gibbs and produces the same assignments.
class DfLdaSampler {
 public:
  // Throws Error(ForestVocabMismatch) or Error(InvalidHyperparameter).
  DfLdaSampler(const Corpus& corpus, DirichletForest forest, const LdaParams& params);

  // One full sweep: every token in document order, then every (topic,
  // region) branch.
  void sweep();
  void token_step(std::size_t doc, std::size_t position);
  void branch_step();
  void resample_branch(std::size_t topic, std::size_t region);

  // Unnormalized log posterior of each branch of `region` for `topic`:
  // the Dirichlet-multinomial marginal of the branch's internal nodes.
  std::vector<double> branch_log_weights(std::size_t topic, std::size_t region) const;

  // Replaces all topic assignments and rebuilds every count.
  void set_assignments(const std::vector<std::vector<std::uint32_t>>& z);
  void set_branch(std::size_t topic, std::size_t region, std::size_t branch);

  const TopicModelState& state() const { return state_; }
  TopicModelState& mutable_state() { return state_; }
  const DirichletForest& forest() const { return *state_.forest; }

 private:
  void add_token(std::uint32_t word, std::uint32_t topic, int delta);
  void rebuild_branch_counts(std::size_t topic, std::size_t region);
  std::size_t branch_of(std::uint32_t word, std::size_t topic) const;

  const Corpus& corpus_;
  TopicModelState state_;
  Rng rng_;
  std::vector<double> weights_;
};

TopicModelState dflda_gibbs(const Corpus& corpus, const DirichletForest& forest, const LdaParams& params,
                            const SweepObserver& observer = {});

// Empty when every count invariant holds, otherwise a description of the
// first breach.
std::string check_counts(const TopicModelState& state, const Corpus& corpus);

// phi[k][w]: posterior mean word distribution per topic (flat or tree).
std::vector<std::vector<double>> topic_word_probabilities(const TopicModelState& state);

struct WordScore {
  std::uint32_t word;
  double probability;
};

// Top `n` words per topic, by probability then word id; n is clipped at V.
std::vector<std::vector<WordScore>> top_words(const TopicModelState& state, std::size_t n);

struct ConceptTag {
  EntityName entity;
  double score;
};

// score = sum of phi over the concept's tokens among the topic's top-n
// words, divided by the number of concept tokens. Zero scores are omitted;
// ranked by score, then name.
std::vector<std::vector<ConceptTag>> tag_topics(const std::vector<std::vector<WordScore>>& top,
                                                const std::vector<std::string>& vocabulary,
                                                const ConceptLexicon& lexicon);
std::vector<std::vector<ConceptTag>> tag_topics(const TopicModelState& state, const Corpus& corpus,
                                                const ConceptLexicon& lexicon, std::size_t n = 10);

// log p(w, z) under the current counts.
double log_likelihood(const TopicModelState& state, const Corpus& corpus);

// Draws index i with probability weights[i] / sum using one uniform.
std::size_t draw_discrete(const std::vector<double>& weights, Rng& rng);

}  // namespace ontomap
