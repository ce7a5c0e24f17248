#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "pairmine/rng.hpp"
#include "pairmine/types.hpp"

using namespace pairmine;

TEST_CASE("fnv1a64 known vectors") {
  CHECK(rng::fnv1a64("") == 0xcbf29ce484222325ULL);
  CHECK(rng::fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
  CHECK(rng::fnv1a64("foobar") == 0x85944171f73967e8ULL);
}

TEST_CASE("hash64 separates part boundaries") {
  CHECK(rng::hash64(1, {"ab", "c"}) != rng::hash64(1, {"a", "bc"}));
  CHECK(rng::hash64(1, {"abc"}) != rng::hash64(2, {"abc"}));
  CHECK(rng::hash64(5, {"x", "y"}) == rng::hash64(5, {"x", "y"}));
}

TEST_CASE("to_hex16 is 16 lowercase hex digits") {
  CHECK(rng::to_hex16(0) == "0000000000000000");
  CHECK(rng::to_hex16(0xdeadbeefULL) == "00000000deadbeef");
  CHECK(rng::to_hex16(~0ULL) == "ffffffffffffffff");
}

TEST_CASE("bounded draws stay in range and are deterministic") {
  std::mt19937_64 a(42), b(42);
  for (int i = 0; i < 2000; ++i) {
    const auto va = rng::bounded(a, 7);
    CHECK(va < 7);
    CHECK(va == rng::bounded(b, 7));
  }
  std::mt19937_64 c(42);
  std::vector<int> hits(7, 0);
  for (int i = 0; i < 7000; ++i) ++hits[static_cast<std::size_t>(rng::bounded(c, 7))];
  for (int h : hits) CHECK(h > 700);  // loose uniformity guard
}

TEST_CASE("shuffle permutes deterministically") {
  std::vector<int> v1{1, 2, 3, 4, 5, 6, 7, 8};
  std::vector<int> v2 = v1;
  const std::vector<int> orig = v1;
  std::mt19937_64 a(9), b(9);
  rng::shuffle(v1, a);
  rng::shuffle(v2, b);
  CHECK(v1 == v2);
  auto sorted = v1;
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == orig);
}

TEST_CASE("sample_indices draws distinct indices") {
  std::mt19937_64 g(3);
  const auto picks = rng::sample_indices(g, 10, 4);
  CHECK(picks.size() == 4);
  std::set<std::size_t> uniq(picks.begin(), picks.end());
  CHECK(uniq.size() == 4);
  for (auto p : picks) CHECK(p < 10);

  std::mt19937_64 h(3);
  CHECK(rng::sample_indices(h, 10, 4) == picks);

  std::mt19937_64 k(1);
  const auto all = rng::sample_indices(k, 5, 5);
  std::set<std::size_t> uniq5(all.begin(), all.end());
  CHECK(uniq5.size() == 5);
}

TEST_CASE("pair ids are stable and label-sensitive") {
  const SentenceLoc p{0, 1};
  const SentenceLoc h{0, 2};
  const auto id1 = make_pair_id("corpusA", "doc1", p, h, Label::contrasting);
  CHECK(id1.size() == 16);
  CHECK(id1.find_first_not_of("0123456789abcdef") == std::string::npos);
  CHECK(id1 == make_pair_id("corpusA", "doc1", p, h, Label::contrasting));
  CHECK(id1 != make_pair_id("corpusA", "doc1", p, h, Label::entailment));
  CHECK(id1 != make_pair_id("corpusA", "doc2", p, h, Label::contrasting));
  CHECK(id1 != make_pair_id("corpusB", "doc1", p, h, Label::contrasting));
  CHECK(id1 != make_pair_id("corpusA", "doc1", h, p, Label::contrasting));
}
