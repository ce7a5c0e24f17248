#include "pairmine/stress.hpp"

#include <random>

#include "pairmine/rng.hpp"
#include "pairmine/utf8.hpp"

namespace pairmine {

std::string_view to_string(StressKind k) {
  switch (k) {
    case StressKind::length_mismatch: return "length_mismatch";
    case StressKind::negation: return "negation";
    case StressKind::overlap: return "overlap";
    case StressKind::spelling: return "spelling";
  }
  return "spelling";
}

std::optional<StressKind> stress_kind_from_string(std::string_view s) {
  for (StressKind k : kAllStressKinds)
    if (to_string(k) == s) return k;
  return std::nullopt;
}

namespace {

struct TokenSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::vector<char32_t> cps;
};

// Whitespace-delimited premise chunks that are purely alphabetic and at
// least four letters long, with at least one differing adjacent interior
// character pair (so a transposition always changes the text).
std::vector<TokenSpan> spelling_candidates(std::string_view premise) {
  std::vector<TokenSpan> out;
  std::size_t i = 0;
  const std::size_t n = premise.size();
  while (i < n) {
    auto d = utf8::decode(premise, i);
    if (utf8::is_space(d.cp)) {
      i += static_cast<std::size_t>(d.len);
      continue;
    }
    TokenSpan span;
    span.begin = i;
    bool alphabetic = true;
    while (i < n) {
      d = utf8::decode(premise, i);
      if (utf8::is_space(d.cp)) break;
      if (!utf8::is_alpha(d.cp)) alphabetic = false;
      span.cps.push_back(d.cp);
      i += static_cast<std::size_t>(d.len);
    }
    span.end = i;
    if (!alphabetic || span.cps.size() < 4) continue;
    bool transposable = false;
    for (std::size_t k = 1; k + 2 < span.cps.size(); ++k)
      if (span.cps[k] != span.cps[k + 1]) transposable = true;
    if (transposable) out.push_back(std::move(span));
  }
  return out;
}

void apply_spelling(LabeledPair& pair, std::uint64_t seed) {
  const auto candidates = spelling_candidates(pair.premise);
  if (candidates.empty()) {
    pair.stress_unmodified = true;
    return;
  }
  std::mt19937_64 g(rng::hash64(seed, {pair.pair_id}));
  const auto& token = candidates[static_cast<std::size_t>(
      rng::bounded(g, candidates.size()))];

  std::vector<std::size_t> positions;  // k such that swapping k,k+1 changes text
  for (std::size_t k = 1; k + 2 < token.cps.size(); ++k)
    if (token.cps[k] != token.cps[k + 1]) positions.push_back(k);
  const std::size_t k = positions[static_cast<std::size_t>(
      rng::bounded(g, positions.size()))];

  std::vector<char32_t> cps = token.cps;
  std::swap(cps[k], cps[k + 1]);
  pair.premise = pair.premise.substr(0, token.begin) + utf8::encode(cps) +
                 pair.premise.substr(token.end);
  pair.stress_unmodified = false;
}

}  // namespace

LabeledPair apply_stress(const LabeledPair& pair, StressKind kind,
                         std::uint64_t seed) {
  LabeledPair out = pair;
  switch (kind) {
    case StressKind::length_mismatch:
      out.premise += ' ';
      out.premise += kLengthMismatchFiller;
      break;
    case StressKind::negation:
      out.hypothesis += ' ';
      out.hypothesis += kNegationFiller;
      break;
    case StressKind::overlap:
      out.hypothesis += ' ';
      out.hypothesis += kOverlapFiller;
      break;
    case StressKind::spelling:
      apply_spelling(out, seed);
      break;
  }
  return out;
}

std::vector<LabeledPair> apply_stress_all(const std::vector<LabeledPair>& pairs,
                                          StressKind kind, std::uint64_t seed) {
  std::vector<LabeledPair> out;
  out.reserve(pairs.size());
  for (const auto& p : pairs) out.push_back(apply_stress(p, kind, seed));
  return out;
}

}  // namespace pairmine
