#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "trinary/codes.hpp"
#include "trinary/error.hpp"

using namespace trinary::codes;

namespace {

std::vector<std::size_t> sorted_lengths(const CodeTable& t) {
  auto l = t.lengths();
  std::sort(l.begin(), l.end());
  return l;
}

std::vector<double> random_weights(std::mt19937& rng, std::size_t m) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> w(m);
  for (double& x : w) x = u(rng);
  return w;
}

}  // namespace

TEST_CASE("dummy padding") {
  CHECK(dummy_count(4, 3) == 1);
  CHECK(dummy_count(5, 3) == 0);
  CHECK(dummy_count(9, 3) == 0);
  CHECK(dummy_count(2, 3) == 1);
  CHECK(dummy_count(7, 2) == 0);
  CHECK(dummy_count(2, 5) == 3);
  CHECK(dummy_count(6, 4) == 1);
  CHECK(dummy_count(5, 4) == 2);
  for (std::size_t m = 2; m < 40; ++m) {
    for (int r = 2; r <= 6; ++r) REQUIRE((m + static_cast<std::size_t>(dummy_count(m, r)) - 1) % static_cast<std::size_t>(r - 1) == 0);
  }
}

TEST_CASE("uniform weights") {
  const auto nine = huffman(SymbolWeights::uniform(9), 3);
  CHECK(sorted_lengths(nine) == std::vector<std::size_t>(9, 2));
  CHECK(expected_length(nine, SymbolWeights::uniform(9)) == doctest::Approx(2.0));

  const auto four = huffman(SymbolWeights::uniform(4), 3);
  CHECK(sorted_lengths(four) == std::vector<std::size_t>{1, 1, 2, 2});
  CHECK(expected_length(four, SymbolWeights::uniform(4)) == doctest::Approx(1.5));
  CHECK(oracle::exhaustive_min_expected_length({0.25, 0.25, 0.25, 0.25}, 3).expected == doctest::Approx(1.5));
  CHECK(is_prefix_free(four));
}

TEST_CASE("two symbols") {
  for (auto w : {std::vector<double>{1, 1}, std::vector<double>{0.9, 0.1}, std::vector<double>{0, 5}}) {
    auto strings = huffman(SymbolWeights(w), 2).strings();
    std::sort(strings.begin(), strings.end());
    CHECK(strings == std::vector<std::string>{"0", "1"});
  }
}

TEST_CASE("deterministic tie-breaking") {
  const SymbolWeights w({1, 1, 1, 1});
  CHECK(huffman(w, 2).strings() == huffman(w, 2).strings());
  // Ties go to the smaller symbol index first; within a merge the lightest node takes the highest digit.
  CHECK(huffman(SymbolWeights({4, 2, 1, 1}), 2).strings() == std::vector<std::string>{"1", "01", "001", "000"});
}

TEST_CASE("zero-weight symbols get the longest codewords") {
  const SymbolWeights w({0.5, 0.0, 0.3, 0.2, 0.0});
  for (int radix : {2, 3}) {
    const auto t = huffman(w, radix);
    CHECK(is_prefix_free(t));
    const auto lens = t.lengths();
    const auto longest = *std::max_element(lens.begin(), lens.end());
    CHECK(lens[1] == longest);
    CHECK(lens[4] == longest);
  }
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(huffman(SymbolWeights::uniform(3), 1), trinary::DomainError);
  CHECK_THROWS_AS(SymbolWeights({2.0}), trinary::DomainError);
  CHECK_THROWS_AS(SymbolWeights({2.0, -1.0}), trinary::DomainError);
}

TEST_CASE("optimal against exhaustive search") {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t m = std::uniform_int_distribution<std::size_t>(2, 5)(rng);
    const auto w = random_weights(rng, m);
    const SymbolWeights sw(w);
    for (int radix : {2, 3}) {
      const auto t = huffman(sw, radix);
      const auto best = oracle::exhaustive_min_expected_length(sw.probabilities(), radix);
      REQUIRE(expected_length(t, sw) == doctest::Approx(best.expected).epsilon(1e-12));
    }
  }
}

TEST_CASE("never worse than the enumeration code on uniform weights") {
  for (int radix : {2, 3}) {
    for (int m = 2; m <= 12; ++m) {
      const auto w = SymbolWeights::uniform(static_cast<std::size_t>(m));
      CHECK(expected_length(huffman(w, radix), w) <=
            trinary::to_double(average_length(enumeration_code(m, radix))) + 1e-12);
    }
  }
}

TEST_CASE("random tables are prefix-free and respect Kraft and the entropy bound") {
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t m = std::uniform_int_distribution<std::size_t>(2, 64)(rng);
    const int radix = std::uniform_int_distribution<int>(2, 5)(rng);
    const SymbolWeights sw(random_weights(rng, m));
    const auto t = huffman(sw, radix);
    REQUIRE(t.codewords.size() == m);
    REQUIRE(is_prefix_free(t));
    REQUIRE(kraft_sum(t) <= 1);
    const double bits = to_bits(expected_length(t, sw), radix);
    REQUIRE(bits >= oracle::entropy_bits(sw.probabilities()) - 1e-12);
  }
}
