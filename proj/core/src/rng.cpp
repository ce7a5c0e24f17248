#include "pairmine/rng.hpp"

#include <algorithm>
#include <unordered_set>

namespace pairmine::rng {

std::uint64_t hash64(std::uint64_t seed, std::initializer_list<std::string_view> parts) {
  std::uint64_t h = fnv1a64_u64(seed);
  for (std::string_view p : parts) {
    h = fnv1a64(p, h);
    h ^= 0x1fu;
    h *= kFnvPrime;
  }
  return h;
}

std::string to_hex16(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[v & 0xfu];
    v >>= 4;
  }
  return out;
}

std::uint64_t bounded(std::mt19937_64& g, std::uint64_t n) {
  if (n <= 1) return 0;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x;
  do {
    x = g();
  } while (x >= limit);
  return x % n;
}

std::vector<std::size_t> sample_indices(std::mt19937_64& g, std::size_t n, std::size_t k) {
  k = std::min(k, n);
  std::vector<std::size_t> out;
  out.reserve(k);
  std::unordered_set<std::size_t> seen;
  while (out.size() < k) {
    std::size_t idx = static_cast<std::size_t>(bounded(g, n));
    if (seen.insert(idx).second) out.push_back(idx);
  }
  return out;
}

}  // namespace pairmine::rng
