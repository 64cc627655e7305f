#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace ontomap {

struct DocumentRecord {
  std::string id;
  std::string text;
};

struct CorpusConfig {
  std::set<std::string> stopwords;
  std::size_t min_token_len = 3;
  std::size_t min_df = 2;
  bool lowercase = true;

  // Built-in stopword list with the default thresholds.
  static CorpusConfig defaults();
};

// Token-id documents over a sorted vocabulary.
struct Corpus {
  std::vector<std::string> vocabulary;
  std::vector<std::vector<std::uint32_t>> documents;
  std::vector<std::string> doc_ids;
  std::vector<std::string> warnings;  // one per dropped document

  std::size_t token_count() const;
  std::optional<std::uint32_t> word_id(std::string_view word) const;
};

// Tokenizes with split_words, then drops stopwords, short tokens and tokens
// whose document frequency is below min_df. Documents left empty are dropped
// with a warning. Throws Error(EmptyCorpus) when nothing survives.
Corpus ingest_corpus(const std::vector<DocumentRecord>& records, const CorpusConfig& config);

// `doc_id<TAB>text` per line; blank lines skipped. Throws
// Error(MalformedInput) on a line without a tab.
std::vector<DocumentRecord> read_tsv_records(std::istream& in);
// `{"id": ..., "text": ...}` per line. Throws Error(MalformedInput).
std::vector<DocumentRecord> read_jsonl_records(std::istream& in);

}  // namespace ontomap
