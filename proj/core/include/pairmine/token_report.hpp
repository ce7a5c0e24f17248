#pragma once

#include <array>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "pairmine/types.hpp"

namespace pairmine {

// Bundled Spanish function-word list for the token report. Deliberately
// keeps label-bearing words like "caso" and "si" out so they can surface.
const std::set<std::string>& default_stopwords();

std::set<std::string> stopwords_from_file(const std::string& path);

struct TokenCount {
  std::string token;
  std::int64_t count = 0;
};

// Per-class ranked token counts over premise and hypothesis text, stopwords
// removed, ordered by count then token.
std::array<std::vector<TokenCount>, 4> class_token_report(
    const std::vector<LabeledPair>& pairs, std::size_t top_k,
    const std::set<std::string>& stopwords);

}  // namespace pairmine
