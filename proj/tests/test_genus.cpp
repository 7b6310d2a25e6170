#include <doctest.h>

#include <random>

#include "chartlab/chart_ops.hpp"
#include "chartlab/errors.hpp"
#include "chartlab/genus.hpp"
#include "chartlab/notation.hpp"
#include "chartlab/words.hpp"
#include "support.hpp"

using namespace chartlab;
using testing::chart;

namespace {

std::vector<std::vector<long long>> rows_of(const IntegerMatrix& m) {
  std::vector<std::vector<long long>> out(static_cast<std::size_t>(m.size()));
  for (int i = 1; i <= m.size(); ++i)
    for (int j = 1; j <= m.size(); ++j) out[static_cast<std::size_t>(i - 1)].push_back(m(i, j));
  return out;
}

}  // namespace

TEST_CASE("genus of the example curves") {
  CHECK(genus_euler(chart("(1,3,-3,-1)(2,4,-4,-2)")).genus_euler == 1);
  CHECK(genus_euler(chart("(1,-1,3,-3)(2,-4,4,-2)")).genus_euler == 0);
  CHECK(genus_euler(chart("(1,-1,3,-3)(2,-2,4,-4)")).genus_euler == 1);
  CHECK(genus_euler(chart("(1,-2,2,-1)")).genus_euler == 0);
  CHECK(genus_euler(chart("(1,2,-1,-2)")).genus_euler == 0);
  CHECK(genus_euler(chart("(1,-2,3,-1,2,-3)")).genus_euler == 0);
  CHECK(genus_euler(chart("(1,3,-1,-3)(2,4,-2,-4)")).genus_euler == 1);
  CHECK(genus_rank(chart("(1,3,-3,-1)(2,4,-4,-2)")) == 1);
  CHECK(genus_rank(chart("(1,-1,3,-3)(2,-4,4,-2)")) == 0);
  CHECK(genus_rank(chart("(1,-1,3,-3)(2,-2,4,-4)")) == 1);

  const auto r = genus_euler(chart("(1,3,-3,-1)(2,4,-4,-2)"));
  CHECK(r.vertices == 2);
  CHECK(r.edges == 4);
  CHECK(r.faces == 2);
  CHECK_FALSE(r.genus_rank.has_value());
  CHECK(genus_euler(Chart{}) == GenusReport{});
}

TEST_CASE("Euler genus matches face tracing on every small chart") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& o : oracle::all_charts(n)) {
      const auto r = genus_euler(testing::from_oracle(o, n));
      CHECK(r.genus_euler == oracle::euler_genus(o, n));
      CHECK(r.vertices + r.faces == oracle::vertices_plus_faces(o, n));
    }
}

TEST_CASE("intersection matrix rank equals twice the genus") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& o : oracle::all_charts(n)) {
      const auto c = testing::from_oracle(o, n);
      const auto b = intersection_matrix(c);
      bool skew = true;
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) skew = skew && b(i, j) == -b(j, i);
      CHECK(skew);
      const int rank = oracle::rational_rank(rows_of(b));
      CHECK(integer_rank(b) == rank);
      CHECK(rank == 2 * oracle::euler_genus(o, n));
      CHECK(genus_rank(c) == oracle::euler_genus(o, n));
    }
  CHECK_THROWS_AS(intersection_matrix(Chart{}), Error);
}

TEST_CASE("integer rank agrees with rational elimination") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 7);
    // mostly small entries, some huge ones to force the big-integer path
    const long long span = trial % 5 == 0 ? 4000000000LL : 3;
    std::uniform_int_distribution<long long> dist(-span, span);
    IntegerMatrix m(n);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) m(i, j) = dist(rng);
    if (trial % 3 == 0 && n > 2)  // make a dependent row
      for (int j = 1; j <= n; ++j) m(n, j) = m(1, j) - 2 * m(2, j);
    CHECK(integer_rank(m) == oracle::rational_rank(rows_of(m)));
  }
  CHECK(integer_rank(IntegerMatrix(3)) == 0);
}

TEST_CASE("GF(2) rank agrees with elimination on dense rows") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 70);
    BitMatrix m(n);
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        const bool bit = (rng() % 3) == 0;
        m.set(i, j, bit);
        rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = bit;
      }
    CHECK(gf2_rank(m) == oracle::gf2_rank(rows));
  }
  BitMatrix z(5);
  CHECK(z.is_zero());
  z.set(2, 3, true);
  CHECK_FALSE(z.is_zero());
  CHECK(z(2, 3));
  z.set(2, 3, false);
  CHECK(z.is_zero());
}

TEST_CASE("word genus") {
  CHECK(genus_word(parse_word("A+A+A")) == 1);
  CHECK(is_planar(parse_word("AAAA+")));
  CHECK(is_planar(parse_word("ABA+")));
  CHECK(is_planar(parse_word("BAA+")));
  CHECK(genus_word(parse_word("A+B+AB")) == 1);
  CHECK(is_planar(parse_word("AA+")));
  CHECK(genus_word(SignedWord{}) == 0);
  CHECK_THROWS_AS(word_matrix(parse_word("AAB")), NotOddWord);
  CHECK_THROWS_AS(word_matrix(parse_word("A+")), NotOddWord);
  CHECK_THROWS_AS(word_matrix(SignedWord({"A"}, {true}, {"A", "B"})), NotFullWord);
  const auto w = word_matrix(parse_word("A+B+AB"));
  for (int k = 1; k <= 4; ++k)
    for (int l = 1; l <= 4; ++l) CHECK(w(k, l) == w(l, k));
}

TEST_CASE("word matrix is the intersection matrix mod 2 on coherent semicharts") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& o : oracle::all_semicharts(n)) {
      const auto s = testing::from_oracle(o);
      if (!is_coherent(s)) continue;
      const auto c = semichart_to_chart(s);
      const auto word = word_of_semichart(s);
      const auto b = intersection_matrix(c);
      const auto w = word_matrix(word);
      bool same = true;
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) same = same && ((b(k, l) % 2 != 0) == w(k, l));
      CHECK(same);
      CHECK(genus_word(word) == oracle::euler_genus(testing::to_oracle(c), n));
      const auto report = genus_report(c);
      REQUIRE(report.genus_gf2.has_value());
      CHECK(*report.genus_gf2 == report.genus_euler);
      CHECK(*report.genus_rank == report.genus_euler);
    }
}

TEST_CASE("genus report routes") {
  const auto bent = genus_report(chart("(1,3,-3,-1)(2,4,-4,-2)"));
  CHECK(bent.genus_rank == 1);
  CHECK_FALSE(bent.genus_gf2.has_value());
  const auto straight = genus_report(chart("(1,3,-1,-3)(2,4,-2,-4)"));
  CHECK(straight.genus_euler == 1);
  CHECK(straight.genus_gf2 == 1);
  CHECK(genus_report(Chart{}) == GenusReport{});
}
