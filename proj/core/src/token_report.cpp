#include "pairmine/token_report.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <stdexcept>

#include "pairmine/utf8.hpp"
#include "pairmine/vocab.hpp"

namespace pairmine {

const std::set<std::string>& default_stopwords() {
  static const std::set<std::string> words = {
      "a",        "al",       "algo",     "algunas",  "algunos",  "ante",
      "antes",    "como",     "con",      "contra",   "cual",     "cuando",
      "de",       "del",      "desde",    "donde",    "durante",  "e",
      "el",       "ella",     "ellas",    "ellos",    "en",       "entre",
      "era",      "eran",     "es",       "esa",      "esas",     "ese",
      "eso",      "esos",     "esta",     "estaba",   "estaban",  "están",
      "estas",    "este",     "esto",     "estos",    "fue",      "fueron",
      "ha",       "había",    "habían",   "han",      "hasta",    "hay",
      "la",       "las",      "le",       "les",      "lo",       "los",
      "me",       "mi",       "mis",      "mucho",    "muy",      "nada",
      "ni",       "no",       "nos",      "nuestra",  "nuestro",  "o",
      "os",       "otra",     "otras",    "otro",     "otros",    "para",
      "pero",     "poco",     "por",      "porque",   "pues",     "que",
      "quien",    "se",       "según",    "ser",      "sin",      "sobre",
      "son",      "su",       "sus",      "también",  "tanto",    "te",
      "tiene",    "tienen",   "toda",     "todas",    "todo",     "todos",
      "tras",     "tu",       "tus",      "u",        "un",       "una",
      "unas",     "uno",      "unos",     "y",        "ya",       "yo"};
  return words;
}

std::set<std::string> stopwords_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open stopword file: " + path);
  std::set<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    const auto w = std::string(utf8::trim(line));
    if (!w.empty()) words.insert(w);
  }
  return words;
}

std::array<std::vector<TokenCount>, 4> class_token_report(
    const std::vector<LabeledPair>& pairs, std::size_t top_k,
    const std::set<std::string>& stopwords) {
  std::array<std::map<std::string, std::int64_t>, 4> counts;
  for (const auto& p : pairs) {
    auto& bucket = counts[static_cast<std::size_t>(p.label)];
    for (const auto& t : feature_tokens(p.premise))
      if (!stopwords.count(t)) ++bucket[t];
    for (const auto& t : feature_tokens(p.hypothesis))
      if (!stopwords.count(t)) ++bucket[t];
  }

  std::array<std::vector<TokenCount>, 4> report;
  for (std::size_t c = 0; c < 4; ++c) {
    std::vector<TokenCount> ranked;
    ranked.reserve(counts[c].size());
    for (const auto& [token, count] : counts[c]) ranked.push_back({token, count});
    std::sort(ranked.begin(), ranked.end(), [](const TokenCount& a, const TokenCount& b) {
      if (a.count != b.count) return a.count > b.count;
      return a.token < b.token;
    });
    if (ranked.size() > top_k) ranked.resize(top_k);
    report[c] = std::move(ranked);
  }
  return report;
}

}  // namespace pairmine
