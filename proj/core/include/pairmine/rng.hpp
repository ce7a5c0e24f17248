#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace pairmine::rng {

inline constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ULL;
inline constexpr std::uint64_t kFnvPrime = 0x100000001b3ULL;

constexpr std::uint64_t fnv1a64(std::string_view data, std::uint64_t h = kFnvOffset) {
  for (char c : data) {
    h ^= static_cast<std::uint8_t>(c);
    h *= kFnvPrime;
  }
  return h;
}

constexpr std::uint64_t fnv1a64_u64(std::uint64_t v, std::uint64_t h = kFnvOffset) {
  for (int i = 0; i < 8; ++i) {
    h ^= (v >> (i * 8)) & 0xffu;
    h *= kFnvPrime;
  }
  return h;
}

// Combine a seed with string parts into one 64-bit value.
std::uint64_t hash64(std::uint64_t seed, std::initializer_list<std::string_view> parts);

std::string to_hex16(std::uint64_t v);

// Uniform value in [0, n) by rejection sampling on the raw 64-bit stream.
// mt19937_64 output is fully specified by the standard, so results are
// identical across platforms; uniform_int_distribution is not.
std::uint64_t bounded(std::mt19937_64& g, std::uint64_t n);

// Fisher-Yates with bounded(); deterministic for a given engine state.
template <typename T>
void shuffle(std::vector<T>& v, std::mt19937_64& g) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(bounded(g, i));
    std::swap(v[i - 1], v[j]);
  }
}

// k distinct indices from [0, n), in draw order.
std::vector<std::size_t> sample_indices(std::mt19937_64& g, std::size_t n, std::size_t k);

}  // namespace pairmine::rng
