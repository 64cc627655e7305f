#pragma once

#include <istream>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace ontomap {

// Splits on every byte that is not an ASCII letter or digit; bytes >= 0x80
// are kept inside words so UTF-8 text is not shredded. ASCII letters are
// lowercased when `lowercase` is set.
std::vector<std::string> split_words(std::string_view text, bool lowercase = true);

// Splits an identifier into lowercase words on separators, camel-case
// humps and letter/digit boundaries:
//   `Low-CalorieDiet` -> low calorie diet
//   `Type2Diabetes`   -> type 2 diabetes
//   `HTMLParser`      -> html parser
std::vector<std::string> split_identifier(std::string_view identifier);

// Built-in English stopword list.
const std::set<std::string>& default_stopwords();

// One word per line; blank lines and `#` comments ignored; lowercased.
std::set<std::string> read_stopwords(std::istream& in);

}  // namespace ontomap
