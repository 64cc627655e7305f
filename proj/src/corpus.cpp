#include "ontomap/corpus.hpp"

#include <algorithm>
#include <map>

#include <json.hpp>

#include "ontomap/error.hpp"
#include "ontomap/text.hpp"

namespace ontomap {

CorpusConfig CorpusConfig::defaults() {
  CorpusConfig c;
  c.stopwords = default_stopwords();
  return c;
}

std::size_t Corpus::token_count() const {
  std::size_t n = 0;
  for (const auto& d : documents) n += d.size();
  return n;
}

std::optional<std::uint32_t> Corpus::word_id(std::string_view word) const {
  auto it = std::lower_bound(vocabulary.begin(), vocabulary.end(), word);
  if (it == vocabulary.end() || *it != word) return std::nullopt;
  return static_cast<std::uint32_t>(it - vocabulary.begin());
}

Corpus ingest_corpus(const std::vector<DocumentRecord>& records, const CorpusConfig& config) {
  std::vector<std::vector<std::string>> tokenized;
  tokenized.reserve(records.size());
  std::map<std::string, std::size_t> df;
  for (const auto& r : records) {
    std::vector<std::string> kept;
    for (auto& w : split_words(r.text, config.lowercase))
      if (w.size() >= config.min_token_len && !config.stopwords.count(w)) kept.push_back(std::move(w));
    std::set<std::string> seen(kept.begin(), kept.end());
    for (const auto& w : seen) ++df[w];
    tokenized.push_back(std::move(kept));
  }

  Corpus corpus;
  for (const auto& [w, n] : df)
    if (n >= config.min_df) corpus.vocabulary.push_back(w);

  for (std::size_t i = 0; i < records.size(); ++i) {
    std::vector<std::uint32_t> doc;
    for (const auto& w : tokenized[i])
      if (auto id = corpus.word_id(w)) doc.push_back(*id);
    if (doc.empty()) {
      corpus.warnings.push_back("document '" + records[i].id + "' is empty after filtering; dropped");
      continue;
    }
    corpus.documents.push_back(std::move(doc));
    corpus.doc_ids.push_back(records[i].id);
  }
  if (corpus.documents.empty()) throw Error(Errc::EmptyCorpus, "no document survives filtering");
  return corpus;
}

std::vector<DocumentRecord> read_tsv_records(std::istream& in) {
  std::vector<DocumentRecord> out;
  std::string line;
  for (std::size_t n = 1; std::getline(in, line); ++n) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos)
      throw Error(Errc::MalformedInput, "line " + std::to_string(n) + ": expected doc_id<TAB>text");
    out.push_back({line.substr(0, tab), line.substr(tab + 1)});
  }
  return out;
}

std::vector<DocumentRecord> read_jsonl_records(std::istream& in) {
  std::vector<DocumentRecord> out;
  std::string line;
  for (std::size_t n = 1; std::getline(in, line); ++n) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      const auto j = nlohmann::json::parse(line);
      const auto& id = j.at("id");
      out.push_back({id.is_string() ? id.get<std::string>() : id.dump(), j.at("text").get<std::string>()});
    } catch (const nlohmann::json::exception& e) {
      throw Error(Errc::MalformedInput, "line " + std::to_string(n) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace ontomap
