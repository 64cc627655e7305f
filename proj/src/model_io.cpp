#include "ontomap/model_io.hpp"

#include <algorithm>

#include <json.hpp>

#include "ontomap/error.hpp"

namespace ontomap {

using ojson = nlohmann::ordered_json;

ModelReport summarize(const TopicModelState& state, const Corpus& corpus, RunMetadata metadata,
                      std::size_t top_n, const ConceptLexicon* lexicon) {
  ModelReport report;
  report.metadata = std::move(metadata);
  report.metadata.documents = corpus.documents.size();
  report.metadata.vocabulary = corpus.vocabulary.size();
  report.metadata.tokens = corpus.token_count();
  report.log_likelihood = log_likelihood(state, corpus);
  const auto top = top_words(state, top_n);
  std::vector<std::vector<ConceptTag>> tags;
  if (lexicon) {
    tags = tag_topics(top, corpus.vocabulary, *lexicon);
    report.tagged = true;
  }
  for (std::size_t k = 0; k < top.size(); ++k) {
    TopicSummary t;
    for (const auto& ws : top[k]) t.words.emplace_back(corpus.vocabulary[ws.word], ws.probability);
    if (lexicon) t.tags = tags[k];
    report.topics.push_back(std::move(t));
  }
  return report;
}

namespace {

ojson tags_json(const std::vector<ConceptTag>& tags) {
  ojson out = ojson::array();
  for (const auto& t : tags) out.push_back({{"entity", t.entity.qualified()}, {"score", t.score}});
  return out;
}

}  // namespace

std::string to_json(const ModelReport& r) {
  const auto& m = r.metadata;
  ojson meta;
  meta["model"] = m.model;
  meta["seed"] = m.seed;
  meta["iterations"] = m.iterations;
  meta["topics"] = m.topics;
  meta["alpha"] = m.alpha;
  meta["beta"] = m.beta;
  meta["eta"] = m.eta ? ojson(*m.eta) : ojson(nullptr);
  meta["epsilon"] = m.epsilon ? ojson(*m.epsilon) : ojson(nullptr);
  meta["must_links"] = m.must_links;
  meta["cannot_links"] = m.cannot_links;
  meta["documents"] = m.documents;
  meta["vocabulary"] = m.vocabulary;
  meta["tokens"] = m.tokens;

  ojson doc;
  doc["metadata"] = std::move(meta);
  doc["log_likelihood"] = r.log_likelihood;
  doc["topics"] = ojson::array();
  for (std::size_t k = 0; k < r.topics.size(); ++k) {
    ojson t;
    t["id"] = k;
    t["words"] = ojson::array();
    for (const auto& [w, p] : r.topics[k].words) t["words"].push_back({{"word", w}, {"phi", p}});
    if (r.tagged) t["tags"] = tags_json(r.topics[k].tags);
    doc["topics"].push_back(std::move(t));
  }
  return doc.dump(2) + "\n";
}

ModelReport model_report_from_json(std::string_view text) {
  ModelReport r;
  try {
    const auto doc = nlohmann::json::parse(text);
    const auto& m = doc.at("metadata");
    r.metadata.model = m.at("model").get<std::string>();
    r.metadata.seed = m.at("seed").get<std::uint64_t>();
    r.metadata.iterations = m.at("iterations").get<std::size_t>();
    r.metadata.topics = m.at("topics").get<std::size_t>();
    r.metadata.alpha = m.at("alpha").get<double>();
    r.metadata.beta = m.at("beta").get<double>();
    if (m.contains("eta") && !m["eta"].is_null()) r.metadata.eta = m["eta"].get<double>();
    if (m.contains("epsilon") && !m["epsilon"].is_null()) r.metadata.epsilon = m["epsilon"].get<double>();
    r.metadata.must_links = m.value("must_links", std::size_t{0});
    r.metadata.cannot_links = m.value("cannot_links", std::size_t{0});
    r.metadata.documents = m.value("documents", std::size_t{0});
    r.metadata.vocabulary = m.value("vocabulary", std::size_t{0});
    r.metadata.tokens = m.value("tokens", std::size_t{0});
    r.log_likelihood = doc.at("log_likelihood").get<double>();
    for (const auto& t : doc.at("topics")) {
      TopicSummary s;
      for (const auto& w : t.at("words")) s.words.emplace_back(w.at("word").get<std::string>(), w.at("phi").get<double>());
      if (t.contains("tags")) {
        r.tagged = true;
        for (const auto& g : t["tags"])
          s.tags.push_back({EntityName::parse(g.at("entity").get<std::string>()), g.at("score").get<double>()});
      }
      r.topics.push_back(std::move(s));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::MalformedInput, std::string("model file: ") + e.what());
  }
  return r;
}

std::vector<std::vector<ConceptTag>> tag_report(const ModelReport& report, const ConceptLexicon& lexicon) {
  std::vector<std::string> vocab;
  for (const auto& t : report.topics)
    for (const auto& [w, p] : t.words) vocab.push_back(w);
  std::sort(vocab.begin(), vocab.end());
  vocab.erase(std::unique(vocab.begin(), vocab.end()), vocab.end());
  std::vector<std::vector<WordScore>> top;
  for (const auto& t : report.topics) {
    std::vector<WordScore> ws;
    for (const auto& [w, p] : t.words)
      ws.push_back({static_cast<std::uint32_t>(std::lower_bound(vocab.begin(), vocab.end(), w) - vocab.begin()), p});
    top.push_back(std::move(ws));
  }
  return tag_topics(top, vocab, lexicon);
}

std::string tags_to_json(const std::vector<std::vector<ConceptTag>>& tags) {
  ojson doc;
  doc["topics"] = ojson::array();
  for (std::size_t k = 0; k < tags.size(); ++k) doc["topics"].push_back({{"id", k}, {"tags", tags_json(tags[k])}});
  return doc.dump(2) + "\n";
}

}  // namespace ontomap
