#include "ontomap/text.hpp"

#include <cctype>

namespace ontomap {

namespace {

bool is_word_byte(unsigned char c) { return std::isalnum(c) != 0 || c >= 0x80; }

char lower(char c) {
  return static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
}

}  // namespace

std::vector<std::string> split_words(std::string_view text, bool lowercase) {
  std::vector<std::string> words;
  std::string current;
  for (char c : text) {
    if (is_word_byte(static_cast<unsigned char>(c))) {
      current += lowercase ? lower(c) : c;
    } else if (!current.empty()) {
      words.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) words.push_back(std::move(current));
  return words;
}

std::vector<std::string> split_identifier(std::string_view identifier) {
  std::vector<std::string> words;
  for (const auto& chunk : split_words(identifier, false)) {
    std::string current;
    for (std::size_t i = 0; i < chunk.size(); ++i) {
      const auto c = static_cast<unsigned char>(chunk[i]);
      if (!current.empty() && i > 0) {
        const auto prev = static_cast<unsigned char>(chunk[i - 1]);
        const bool next_lower =
            i + 1 < chunk.size() && std::islower(static_cast<unsigned char>(chunk[i + 1]));
        bool boundary = false;
        if (std::isupper(c) && (std::islower(prev) || std::isdigit(prev))) boundary = true;
        if (std::isupper(c) && std::isupper(prev) && next_lower) boundary = true;
        if (std::isdigit(c) != 0 && std::isalpha(prev) != 0) boundary = true;
        if (std::isalpha(c) != 0 && std::isdigit(prev) != 0) boundary = true;
        if (boundary) {
          words.push_back(std::move(current));
          current.clear();
        }
      }
      current += lower(static_cast<char>(c));
    }
    if (!current.empty()) words.push_back(std::move(current));
  }
  return words;
}

const std::set<std::string>& default_stopwords() {
  static const std::set<std::string> words = {
      "a",       "about",   "above",  "after",   "again",  "against", "all",     "also",
      "am",      "an",      "and",    "any",     "are",    "as",      "at",      "be",
      "because", "been",    "before", "being",   "below",  "between", "both",    "but",
      "by",      "can",     "could",  "did",     "do",     "does",    "doing",   "down",
      "during",  "each",    "few",    "for",     "from",   "further", "had",     "has",
      "have",    "having",  "he",     "her",     "here",   "hers",    "herself", "him",
      "himself", "his",     "how",    "i",       "if",     "in",      "into",    "is",
      "it",      "its",     "itself", "may",     "me",     "might",   "more",    "most",
      "must",    "my",      "myself", "no",      "nor",    "not",     "of",      "off",
      "on",      "once",    "only",   "or",      "other",  "our",     "ours",    "ourselves",
      "out",     "over",    "own",    "same",    "shall",  "she",     "should",  "so",
      "some",    "such",    "than",   "that",    "the",    "their",   "theirs",  "them",
      "themselves", "then", "there",  "these",   "they",   "this",    "those",   "through",
      "to",      "too",     "under",  "until",   "up",     "very",    "was",     "we",
      "were",    "what",    "when",   "where",   "which",  "while",   "who",     "whom",
      "why",     "will",    "with",   "would",   "you",    "your",    "yours",   "yourself",
      "yourselves",
  };
  return words;
}

std::set<std::string> read_stopwords(std::istream& in) {
  std::set<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    for (auto& w : split_words(line)) words.insert(std::move(w));
  }
  return words;
}

}  // namespace ontomap
