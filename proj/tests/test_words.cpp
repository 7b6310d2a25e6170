#include <doctest.h>

#include <numeric>
#include <set>

#include "chartlab/chart_ops.hpp"
#include "chartlab/errors.hpp"
#include "chartlab/genus.hpp"
#include "chartlab/notation.hpp"
#include "chartlab/words.hpp"
#include "support.hpp"

using namespace chartlab;
using testing::chart;

namespace {

bool realizable(const oracle::Word& w) {
  std::set<int> seen;
  for (std::size_t i = 0; i < w.letters.size(); ++i)
    if (w.unmarked[i]) seen.insert(w.letters[i]);
  return seen.size() == std::set<int>(w.letters.begin(), w.letters.end()).size();
}

}  // namespace

TEST_CASE("word grammar") {
  const auto w = parse_word("A+B+AB");
  CHECK(w.size() == 4);
  CHECK(w.letter(1) == "A");
  CHECK_FALSE(w.in_s(1));
  CHECK(w.in_s(3));
  CHECK(w.subset() == std::vector<int>{3, 4});
  CHECK(w.alphabet() == std::vector<std::string>{"A", "B"});
  CHECK(format_word(w) == "A+B+AB");
  CHECK(parse_word("A+ B+ A B") == w);
  CHECK(parse_word("A⁺B⁺AB") == w);

  const auto long_letters = parse_word("A1A2+A1");
  CHECK(long_letters.size() == 3);
  CHECK(long_letters.letter(2) == "A2");
  CHECK(format_word(long_letters) == "A1 A2+ A1");
  CHECK(parse_word(format_word(long_letters)) == long_letters);
  CHECK(parse_word("foo bar+ foo").letter(2) == "bar");
  CHECK(parse_word("").empty());

  CHECK_THROWS_AS(parse_word("+A"), SyntaxError);
  CHECK_THROWS_AS(parse_word("a"), SyntaxError);
  CHECK_THROWS_AS(parse_word("A++"), SyntaxError);
}

TEST_CASE("full and odd words") {
  CHECK(is_full(parse_word("ABAB")));
  CHECK_FALSE(is_full(SignedWord({"A"}, {true}, {"A", "B"})));
  CHECK(is_odd(parse_word("A+B+AB")));
  CHECK(is_odd(parse_word("A+A+A")));
  CHECK_FALSE(is_odd(parse_word("ABAB")));
  CHECK_FALSE(is_odd(parse_word("AA+B+")));
  CHECK(is_odd(SignedWord{}));
}

TEST_CASE("circular shifts and congruence") {
  const auto w = parse_word("A+B+AB");
  CHECK(format_word(circular_shift(w, 1)) == "BA+B+A");
  CHECK(circular_shift(w, 4) == w);
  CHECK(circular_shift(w, -1) == circular_shift(w, 3));
  CHECK(congruent(w, parse_word("X+Y+XY")));
  CHECK_FALSE(congruent(w, parse_word("A+B+BA")));
  CHECK_FALSE(congruent(w, circular_shift(w, 1)));
  const auto key = congruence_key(parse_word("Q+R+QR"));
  CHECK(key.classes == std::vector<int>{0, 1, 0, 1});
  CHECK(word_from_key(key) == w);
  CHECK_THROWS_AS(congruence_key(SignedWord({"A"}, {true}, {"A", "B"})), NotFullWord);

  CHECK(letter_name(0) == "A");
  CHECK(letter_name(25) == "Z");
  CHECK(letter_name(26) == "AA");
  CHECK(letter_name(27) == "AB");
  CHECK(letter_name(26 + 26 * 26) == "AAA");
}

TEST_CASE("words of charts") {
  CHECK(format_word(word_of_chart(chart("(1,3,-3,-1)(2,4,-4,-2)"))) == "A+B+AB");
  CHECK(format_word(word_of_chart(chart("(1,-1,3,-3)(2,-4,4,-2)"))) == "ABAB");
  CHECK(format_word(word_of_chart(chart("(1,-1,3,-3)(2,-2,4,-4)"))) == "ABAB");
  CHECK(word_of_chart(Chart{}).empty());
  CHECK(format_word(word_of_semichart(parse_semichart("(1,3)(2,4)/{3,4}"))) == "A+B+AB");

  for (int n = 1; n <= 4; ++n)
    for (const auto& o : oracle::all_charts(n)) {
      const auto w = word_of_chart(testing::from_oracle(o, n));
      CHECK(testing::from_word(w) == oracle::word_of(o, n));
      CHECK(is_full(w));
    }
}

TEST_CASE("realizing words by charts") {
  const auto t = realize_word(parse_word("A+B+AB"));
  CHECK(congruent(word_of_chart(t), parse_word("A+B+AB")));
  const auto triangle = realize_word(parse_word("ABC"));
  CHECK(genus_euler(triangle).genus_euler == 0);
  CHECK(profile(triangle) == Profile::parse("k1=3"));
  CHECK_THROWS_AS(realize_word(parse_word("A+")), NotRealizable);
  CHECK_THROWS_AS(realize_word(SignedWord({"A"}, {true}, {"A", "B"})), NotFullWord);
  CHECK(realize_word(SignedWord{}).trivial());

  // A letter that never occurs unmarked is impossible in the word of a
  // chart: walking an orbit from a to -a passes some r > 0 with t(r) < 0.
  // Certified here on every chart with n <= 4.
  for (int n = 1; n <= 4; ++n) {
    std::set<oracle::Word> words_of_charts;
    for (const auto& o : oracle::all_charts(n)) words_of_charts.insert(oracle::word_of(o, n));
    for (const auto& w : oracle::full_words(n, 4)) {
      const auto word = testing::to_word(w);
      if (realizable(w)) {
        const auto c = realize_word(word);
        CHECK(c.size() == n);
        CHECK(congruent(word_of_chart(c), word));
        CHECK(words_of_charts.count(w) == 1);
      } else {
        CHECK_THROWS_AS(realize_word(word), NotRealizable);
        CHECK(words_of_charts.count(w) == 0);
      }
    }
  }
}

TEST_CASE("coherent realization") {
  const auto s = realize_coherent(parse_word("A+B+AB"));
  CHECK(format_semichart(s) == "(1,3)(2,4)/{3,4}");
  CHECK(format_cycles(semichart_to_chart(s)) == "(1,3,-1,-3)(2,4,-2,-4)");
  CHECK(coherent_successor(parse_word("ABACA")) == std::vector<int>{3, 2, 5, 4, 1});
  CHECK_THROWS_AS(realize_coherent(parse_word("ABAB")), NotOddWord);
  const auto eight = semichart_to_chart(realize_coherent(parse_word("AA+")));
  CHECK(genus_euler(eight).genus_euler == 0);
  CHECK(profile(eight) == Profile::parse("k2=1"));
  CHECK(genus_euler(semichart_to_chart(s)).genus_euler == 1);
  const auto polygon = semichart_to_chart(realize_coherent(parse_word("A1A2A3A4A5")));
  CHECK(genus_euler(polygon).genus_euler == 0);
  CHECK(profile(polygon) == Profile::parse("k1=5"));

  // the coherent semicharts of size n are in bijection with odd full words
  for (int n = 0; n <= 5; ++n) {
    std::set<CongruenceKey> keys;
    std::size_t coherent = 0;
    for (const auto& o : oracle::all_semicharts(n)) {
      const auto sc = testing::from_oracle(o);
      if (!is_coherent(sc)) continue;
      ++coherent;
      const auto w = word_of_semichart(sc);
      CHECK(realize_coherent(w) == sc);
      keys.insert(congruence_key(w));
    }
    std::size_t odd = 0;
    for (const auto& w : oracle::full_words(n, n)) {
      if (!oracle::is_odd(w)) continue;
      ++odd;
      const auto word = testing::to_word(w);
      const auto sc = realize_coherent(word);
      CHECK(is_coherent(sc));
      CHECK(congruent(word_of_semichart(sc), word));
    }
    CHECK(keys.size() == coherent);
    CHECK(coherent == odd);
  }
}

TEST_CASE("unsigned words and Gauss words") {
  const auto t = realize_unsigned(parse_word("ABAB"));
  CHECK(t(1) == -1);
  CHECK(t(-1) == 3);
  CHECK(congruent(word_of_chart(t), parse_word("ABAB")));
  CHECK_THROWS_AS(realize_unsigned(parse_word("A+A")), SPresent);
  for (int n = 1; n <= 5; ++n)
    for (const auto& w : oracle::full_words(n, 4)) {
      if (std::find(w.unmarked.begin(), w.unmarked.end(), false) != w.unmarked.end()) continue;
      const auto word = testing::to_word(w);
      CHECK(congruent(word_of_chart(realize_unsigned(word)), word));
    }

  CHECK(is_gauss_word(parse_word("A+B+AB")));
  CHECK(is_gauss_word(parse_word("AA+")));
  CHECK_FALSE(is_gauss_word(parse_word("AAB")));
  CHECK_FALSE(is_gauss_word(parse_word("A+A+")));
  CHECK_FALSE(is_gauss_word(parse_word("AAA+")));
}

TEST_CASE("Christoffel words") {
  CHECK(format_word(christoffel(1, 1)) == "A");
  CHECK(format_word(christoffel(2, 5)) == "A+A+AA+A");
  CHECK_THROWS_AS(christoffel(2, 4), NotCoprime);
  CHECK_THROWS_AS(christoffel(0, 3), NotCoprime);
  CHECK_THROWS_AS(christoffel(5, 3), NotCoprime);
  for (int n = 1; n <= 12; ++n)
    for (int p = 1; p <= n; ++p) {
      if (std::gcd(p, n) != 1) continue;
      const auto w = christoffel(p, n);
      CHECK(w.size() == n);
      CHECK(static_cast<int>(w.subset().size()) == p);
      CHECK(is_odd(w) == (p % 2 == 1));
      if (p % 2 == 1) CHECK(genus_word(w) == (n % 2 == 1 ? (n - p) / 2 : (n - p - 1) / 2));
    }
}
