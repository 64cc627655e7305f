#include "ontomap/lda.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

#include "ontomap/error.hpp"

namespace ontomap {

LdaParams LdaParams::with_defaults(std::size_t topics) {
  LdaParams p;
  p.topics = topics;
  p.alpha = topics > 0 ? 50.0 / static_cast<double>(topics) : 50.0;
  return p;
}

std::size_t draw_discrete(const std::vector<double>& weights, Rng& rng) {
  double total = 0.0;
  for (const double w : weights) total += w;
  const double u = rng.uniform() * total;
  double acc = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    acc += weights[i];
    if (u < acc) return i;
  }
  return weights.size() - 1;
}

namespace {

void validate(const Corpus& corpus, const LdaParams& p, bool need_beta) {
  if (p.topics < 1) throw Error(Errc::InvalidHyperparameter, "topic count must be >= 1");
  if (!(p.alpha > 0.0) || !std::isfinite(p.alpha))
    throw Error(Errc::InvalidHyperparameter, "alpha must be > 0");
  if (need_beta && (!(p.beta > 0.0) || !std::isfinite(p.beta)))
    throw Error(Errc::InvalidHyperparameter, "beta must be > 0");
  if (corpus.documents.empty()) throw Error(Errc::EmptyCorpus, "corpus has no documents");
}

void size_counts(TopicModelState& s, const Corpus& corpus) {
  const std::size_t K = s.topics, V = corpus.vocabulary.size();
  s.doc_topic.assign(corpus.documents.size(), std::vector<std::uint32_t>(K, 0));
  s.topic_word.assign(K, std::vector<std::uint32_t>(V, 0));
  s.topic_total.assign(K, 0);
}

TopicModelState initial_state(const LdaParams& p) {
  TopicModelState s;
  s.topics = p.topics;
  s.alpha = p.alpha;
  s.beta = p.beta;
  s.seed = p.seed;
  return s;
}

}  // namespace

TopicModelState lda_gibbs(const Corpus& corpus, const LdaParams& params, const SweepObserver& observer) {
  validate(corpus, params, true);
  if (params.iterations < 1) throw Error(Errc::InvalidHyperparameter, "iterations must be >= 1");
  TopicModelState s = initial_state(params);
  size_counts(s, corpus);
  const std::size_t K = s.topics;
  const double alpha = s.alpha, beta = s.beta;
  const double vbeta = static_cast<double>(corpus.vocabulary.size()) * beta;
  Rng rng(params.seed);

  s.z.resize(corpus.documents.size());
  for (std::size_t d = 0; d < corpus.documents.size(); ++d) {
    for (const auto w : corpus.documents[d]) {
      const auto k = static_cast<std::uint32_t>(rng.below(K));
      s.z[d].push_back(k);
      ++s.doc_topic[d][k];
      ++s.topic_word[k][w];
      ++s.topic_total[k];
    }
  }

  std::vector<double> weights(K);
  for (std::size_t it = 1; it <= params.iterations; ++it) {
    for (std::size_t d = 0; d < corpus.documents.size(); ++d) {
      const auto& doc = corpus.documents[d];
      auto& ndk = s.doc_topic[d];
      for (std::size_t i = 0; i < doc.size(); ++i) {
        const auto w = doc[i];
        auto k = s.z[d][i];
        --ndk[k];
        --s.topic_word[k][w];
        --s.topic_total[k];
        for (std::size_t t = 0; t < K; ++t) {
          double weight = ndk[t] + alpha;
          weight *= (s.topic_word[t][w] + beta) / (s.topic_total[t] + vbeta);
          weights[t] = weight;
        }
        k = static_cast<std::uint32_t>(draw_discrete(weights, rng));
        s.z[d][i] = k;
        ++ndk[k];
        ++s.topic_word[k][w];
        ++s.topic_total[k];
      }
    }
    s.iterations = it;
    if (observer) observer(it, s);
  }
  return s;
}

DfLdaSampler::DfLdaSampler(const Corpus& corpus, DirichletForest forest, const LdaParams& params)
    : corpus_(corpus), state_(initial_state(params)), rng_(params.seed), weights_(params.topics) {
  if (forest.vocabulary_size() != corpus.vocabulary.size())
    throw Error(Errc::ForestVocabMismatch,
                "forest covers " + std::to_string(forest.vocabulary_size()) + " words, corpus has " +
                    std::to_string(corpus.vocabulary.size()));
  validate(corpus, params, false);
  state_.beta = forest.beta();
  state_.forest = std::move(forest);
  size_counts(state_, corpus);
  const std::size_t K = state_.topics;
  state_.branch.assign(K, std::vector<std::size_t>(this->forest().regions().size(), 0));
  state_.node_counts.assign(K, std::vector<std::uint32_t>(this->forest().nodes().size(), 0));

  state_.z.resize(corpus.documents.size());
  for (std::size_t d = 0; d < corpus.documents.size(); ++d) {
    for (const auto w : corpus.documents[d]) {
      const auto k = static_cast<std::uint32_t>(rng_.below(K));
      state_.z[d].push_back(k);
      ++state_.doc_topic[d][k];
      add_token(w, k, +1);
    }
  }
}

std::size_t DfLdaSampler::branch_of(std::uint32_t word, std::size_t topic) const {
  const auto r = forest().region_of(word);
  return r == kNoNode ? 0 : state_.branch[topic][r];
}

void DfLdaSampler::add_token(std::uint32_t word, std::uint32_t topic, int delta) {
  auto& counts = state_.node_counts[topic];
  const auto step = static_cast<std::uint32_t>(delta);  // wraps for -1
  state_.topic_word[topic][word] += step;
  state_.topic_total[topic] += step;
  counts[forest().root()] += step;
  for (const auto& s : forest().path(word, branch_of(word, topic))) counts[s.child] += step;
}

void DfLdaSampler::token_step(std::size_t doc, std::size_t position) {
  const auto w = corpus_.documents[doc][position];
  auto& ndk = state_.doc_topic[doc];
  auto k = state_.z[doc][position];
  --ndk[k];
  add_token(w, k, -1);
  for (std::size_t t = 0; t < state_.topics; ++t) {
    const auto& counts = state_.node_counts[t];
    double weight = ndk[t] + state_.alpha;
    for (const auto& s : forest().path(w, branch_of(w, t)))
      weight *= (counts[s.child] + s.gamma) / (counts[s.parent] + s.gamma_sum);
    weights_[t] = weight;
  }
  k = static_cast<std::uint32_t>(draw_discrete(weights_, rng_));
  state_.z[doc][position] = k;
  ++ndk[k];
  add_token(w, k, +1);
}

namespace {

// Tokens of `topic` under `node` in branch `branch`, from the word counts.
double count_under(const DirichletForest& f, const std::vector<std::uint32_t>& topic_word,
                   std::size_t node, std::size_t branch) {
  const auto& n = f.nodes()[node];
  if (n.word >= 0) return topic_word[static_cast<std::size_t>(n.word)];
  double total = 0.0;
  for (const auto c : f.children(node, branch)) total += count_under(f, topic_word, c, branch);
  return total;
}

}  // namespace

std::vector<double> DfLdaSampler::branch_log_weights(std::size_t topic, std::size_t region) const {
  const auto& f = forest();
  const auto& nkw = state_.topic_word[topic];
  std::vector<double> out;
  for (std::size_t j = 0; j < f.branch_count(region); ++j) {
    double lw = 0.0;
    for (const auto s : f.branch_internal_nodes(region, j)) {
      const double gsum = f.gamma_sum(s, j);
      double ns = 0.0;
      for (const auto c : f.children(s, j)) {
        const double nc = count_under(f, nkw, c, j);
        const double g = f.gamma(c);
        ns += nc;
        lw += std::lgamma(g + nc) - std::lgamma(g);
      }
      lw += std::lgamma(gsum) - std::lgamma(gsum + ns);
    }
    out.push_back(lw);
  }
  return out;
}

void DfLdaSampler::rebuild_branch_counts(std::size_t topic, std::size_t region) {
  const auto& f = forest();
  const auto& r = f.regions()[region];
  auto& counts = state_.node_counts[topic];
  for (const auto& nodes : r.branch_nodes)
    for (const auto n : nodes) counts[n] = 0;
  counts[r.node] = 0;
  const auto b = state_.branch[topic][region];
  for (const auto& comp : r.components)
    for (const auto w : comp) {
      const auto n = state_.topic_word[topic][w];
      if (n == 0) continue;
      for (const auto& s : f.path(w, b))
        if (s.parent != f.root()) counts[s.child] += n;
      counts[r.node] += n;
    }
}

void DfLdaSampler::set_branch(std::size_t topic, std::size_t region, std::size_t branch) {
  if (branch >= forest().branch_count(region))
    throw Error(Errc::InvalidHyperparameter, "branch index out of range");
  state_.branch[topic][region] = branch;
  rebuild_branch_counts(topic, region);
}

void DfLdaSampler::resample_branch(std::size_t topic, std::size_t region) {
  const auto lw = branch_log_weights(topic, region);
  const double top = *std::max_element(lw.begin(), lw.end());
  std::vector<double> weights;
  weights.reserve(lw.size());
  for (const double v : lw) weights.push_back(std::exp(v - top));
  state_.branch[topic][region] = draw_discrete(weights, rng_);
  rebuild_branch_counts(topic, region);
}

void DfLdaSampler::branch_step() {
  for (std::size_t k = 0; k < state_.topics; ++k)
    for (std::size_t r = 0; r < forest().regions().size(); ++r) resample_branch(k, r);
}

void DfLdaSampler::sweep() {
  for (std::size_t d = 0; d < corpus_.documents.size(); ++d)
    for (std::size_t i = 0; i < corpus_.documents[d].size(); ++i) token_step(d, i);
  branch_step();
  ++state_.iterations;
}

void DfLdaSampler::set_assignments(const std::vector<std::vector<std::uint32_t>>& z) {
  if (z.size() != corpus_.documents.size())
    throw Error(Errc::MalformedInput, "assignment does not match the corpus");
  for (std::size_t d = 0; d < z.size(); ++d) {
    if (z[d].size() != corpus_.documents[d].size())
      throw Error(Errc::MalformedInput, "assignment does not match the corpus");
    for (const auto k : z[d])
      if (k >= state_.topics) throw Error(Errc::MalformedInput, "topic id out of range");
  }
  size_counts(state_, corpus_);
  for (auto& row : state_.node_counts) std::fill(row.begin(), row.end(), 0);
  state_.z = z;
  for (std::size_t d = 0; d < z.size(); ++d)
    for (std::size_t i = 0; i < z[d].size(); ++i) {
      ++state_.doc_topic[d][z[d][i]];
      add_token(corpus_.documents[d][i], z[d][i], +1);
    }
}

TopicModelState dflda_gibbs(const Corpus& corpus, const DirichletForest& forest, const LdaParams& params,
                            const SweepObserver& observer) {
  if (params.iterations < 1) throw Error(Errc::InvalidHyperparameter, "iterations must be >= 1");
  DfLdaSampler sampler(corpus, forest, params);
  for (std::size_t it = 1; it <= params.iterations; ++it) {
    sampler.sweep();
    if (observer) observer(it, sampler.state());
  }
  return sampler.state();
}

std::string check_counts(const TopicModelState& s, const Corpus& corpus) {
  const std::size_t K = s.topics, V = corpus.vocabulary.size();
  if (s.z.size() != corpus.documents.size()) return "assignment/document count differs";
  std::vector<std::vector<std::uint32_t>> nkw(K, std::vector<std::uint32_t>(V, 0));
  for (std::size_t d = 0; d < s.z.size(); ++d) {
    if (s.z[d].size() != corpus.documents[d].size()) return "document " + std::to_string(d) + " length differs";
    std::vector<std::uint32_t> ndk(K, 0);
    for (std::size_t i = 0; i < s.z[d].size(); ++i) {
      ++ndk[s.z[d][i]];
      ++nkw[s.z[d][i]][corpus.documents[d][i]];
    }
    if (ndk != s.doc_topic[d]) return "n_dk of document " + std::to_string(d) + " does not match z";
  }
  for (std::size_t k = 0; k < K; ++k) {
    if (nkw[k] != s.topic_word[k]) return "n_kw of topic " + std::to_string(k) + " does not match z";
    std::uint64_t total = 0;
    for (const auto n : s.topic_word[k]) total += n;
    if (total != s.topic_total[k]) return "n_k of topic " + std::to_string(k) + " is not the sum of n_kw";
  }
  if (!s.forest) return {};

  const auto& f = *s.forest;
  for (std::size_t k = 0; k < K; ++k) {
    const auto& counts = s.node_counts[k];
    if (counts[f.root()] != s.topic_total[k]) return "root count of topic " + std::to_string(k) + " differs";
    std::string problem;
    std::function<void(std::size_t)> visit = [&](std::size_t node) {
      const auto& n = f.nodes()[node];
      const std::size_t b = n.region == kNoNode ? 0 : s.branch[k][n.region];
      const auto& kids = f.children(node, b);
      if (n.word >= 0) {
        if (counts[node] != s.topic_word[k][static_cast<std::size_t>(n.word)])
          problem = "leaf count differs from n_kw";
        return;
      }
      std::uint64_t sum = 0;
      for (const auto c : kids) {
        sum += counts[c];
        visit(c);
      }
      if (sum != counts[node]) problem = "internal node count is not the sum of its children";
    };
    visit(f.root());
    if (!problem.empty()) return "topic " + std::to_string(k) + ": " + problem;
  }
  return {};
}

std::vector<std::vector<double>> topic_word_probabilities(const TopicModelState& s) {
  const std::size_t K = s.topics;
  const std::size_t V = s.topic_word.empty() ? 0 : s.topic_word.front().size();
  std::vector<std::vector<double>> phi(K, std::vector<double>(V, 0.0));
  if (!s.forest) {
    const double vbeta = static_cast<double>(V) * s.beta;
    for (std::size_t k = 0; k < K; ++k)
      for (std::size_t w = 0; w < V; ++w)
        phi[k][w] = (s.topic_word[k][w] + s.beta) / (s.topic_total[k] + vbeta);
    return phi;
  }
  const auto& f = *s.forest;
  for (std::size_t k = 0; k < K; ++k) {
    const auto& counts = s.node_counts[k];
    for (std::uint32_t w = 0; w < V; ++w) {
      const auto r = f.region_of(w);
      double p = 1.0;
      for (const auto& st : f.path(w, r == kNoNode ? 0 : s.branch[k][r]))
        p *= (counts[st.child] + st.gamma) / (counts[st.parent] + st.gamma_sum);
      phi[k][w] = p;
    }
  }
  return phi;
}

std::vector<std::vector<WordScore>> top_words(const TopicModelState& state, std::size_t n) {
  const auto phi = topic_word_probabilities(state);
  std::vector<std::vector<WordScore>> out;
  for (const auto& row : phi) {
    std::vector<WordScore> scores;
    for (std::size_t w = 0; w < row.size(); ++w) scores.push_back({static_cast<std::uint32_t>(w), row[w]});
    std::stable_sort(scores.begin(), scores.end(),
                     [](const WordScore& a, const WordScore& b) { return a.probability > b.probability; });
    scores.resize(std::min(n, scores.size()));
    out.push_back(std::move(scores));
  }
  return out;
}

std::vector<std::vector<ConceptTag>> tag_topics(const std::vector<std::vector<WordScore>>& top,
                                                const std::vector<std::string>& vocabulary,
                                                const ConceptLexicon& lexicon) {
  std::vector<std::vector<ConceptTag>> out;
  for (const auto& words : top) {
    std::map<std::string_view, double> phi;
    for (const auto& ws : words) phi[vocabulary.at(ws.word)] = ws.probability;
    std::vector<ConceptTag> tags;
    for (const auto& [name, tokens] : lexicon.entries) {
      double sum = 0.0;
      for (const auto& t : tokens)
        if (auto it = phi.find(t); it != phi.end()) sum += it->second;
      if (sum > 0.0) tags.push_back({name, sum / static_cast<double>(tokens.size())});
    }
    std::stable_sort(tags.begin(), tags.end(),
                     [](const ConceptTag& a, const ConceptTag& b) { return a.score > b.score; });
    out.push_back(std::move(tags));
  }
  return out;
}

std::vector<std::vector<ConceptTag>> tag_topics(const TopicModelState& state, const Corpus& corpus,
                                                const ConceptLexicon& lexicon, std::size_t n) {
  return tag_topics(top_words(state, n), corpus.vocabulary, lexicon);
}

double log_likelihood(const TopicModelState& s, const Corpus& corpus) {
  const std::size_t K = s.topics;
  const double Ka = static_cast<double>(K) * s.alpha;
  double ll = 0.0;
  for (std::size_t d = 0; d < corpus.documents.size(); ++d) {
    ll += std::lgamma(Ka) - std::lgamma(Ka + static_cast<double>(corpus.documents[d].size()));
    for (std::size_t k = 0; k < K; ++k) ll += std::lgamma(s.alpha + s.doc_topic[d][k]) - std::lgamma(s.alpha);
  }
  if (!s.forest) {
    const std::size_t V = corpus.vocabulary.size();
    const double vbeta = static_cast<double>(V) * s.beta;
    for (std::size_t k = 0; k < K; ++k) {
      ll += std::lgamma(vbeta) - std::lgamma(vbeta + s.topic_total[k]);
      for (std::size_t w = 0; w < V; ++w) ll += std::lgamma(s.beta + s.topic_word[k][w]) - std::lgamma(s.beta);
    }
    return ll;
  }
  const auto& f = *s.forest;
  for (std::size_t k = 0; k < K; ++k) {
    const auto& counts = s.node_counts[k];
    std::function<void(std::size_t)> visit = [&](std::size_t node) {
      const auto& n = f.nodes()[node];
      const std::size_t b = n.region == kNoNode ? 0 : s.branch[k][n.region];
      const auto& kids = f.children(node, b);
      if (kids.empty()) return;
      const double gsum = f.gamma_sum(node, b);
      ll += std::lgamma(gsum) - std::lgamma(gsum + counts[node]);
      for (const auto c : kids) {
        ll += std::lgamma(f.gamma(c) + counts[c]) - std::lgamma(f.gamma(c));
        visit(c);
      }
    };
    visit(f.root());
  }
  return ll;
}

}  // namespace ontomap
