#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "pairmine/types.hpp"

namespace pairmine {

enum class StressKind { length_mismatch, negation, overlap, spelling };

inline constexpr std::array<StressKind, 4> kAllStressKinds = {
    StressKind::length_mismatch, StressKind::negation, StressKind::overlap,
    StressKind::spelling};

std::string_view to_string(StressKind k);
std::optional<StressKind> stress_kind_from_string(std::string_view s);

inline constexpr std::string_view kLengthMismatchFiller =
    "y verdadero es verdadero y verdadero es verdadero y verdadero es verdadero"
    " y verdadero es verdadero y verdadero es verdadero";
inline constexpr std::string_view kNegationFiller = "y falso no es verdadero";
inline constexpr std::string_view kOverlapFiller = "y verdadero es verdadero";

// Label, ids, and provenance are unchanged; only one text field moves:
//   length_mismatch appends " " + the 124-character filler to the premise;
//   negation / overlap append " " + their filler to the hypothesis;
//   spelling transposes two adjacent differing interior characters of one
//   seeded-random alphabetic premise token of length >= 4 and sets
//   stress_unmodified=false, or leaves the premise alone and sets
//   stress_unmodified=true when no such token exists.
LabeledPair apply_stress(const LabeledPair& pair, StressKind kind,
                         std::uint64_t seed);

// The same pairs in input order under every stress kind.
std::vector<LabeledPair> apply_stress_all(const std::vector<LabeledPair>& pairs,
                                          StressKind kind, std::uint64_t seed);

}  // namespace pairmine
