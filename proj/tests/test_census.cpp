#include <doctest.h>

#include <cstdlib>
#include <map>
#include <set>

#include "chartlab/census.hpp"
#include "chartlab/chart_ops.hpp"
#include "chartlab/errors.hpp"
#include "chartlab/symmetry.hpp"
#include "chartlab/words.hpp"
#include "support.hpp"

using namespace chartlab;

namespace {

constexpr CurveClass kChartClasses[] = {CurveClass::all, CurveClass::straight, CurveClass::generic,
                                        CurveClass::alternating, CurveClass::beaming};
constexpr CurveClass kSemichartClasses[] = {CurveClass::all, CurveClass::generic, CurveClass::alternating,
                                            CurveClass::beaming, CurveClass::coherent, CurveClass::perfect};

bool in_class(const Chart& c, CurveClass cls) {
  switch (cls) {
    case CurveClass::straight: return is_straight(c);
    case CurveClass::generic: return is_generic(c);
    case CurveClass::alternating: return is_alternating(c);
    case CurveClass::beaming: return is_beaming(c);
    default: return true;
  }
}

bool in_class(const Semichart& s, CurveClass cls) {
  switch (cls) {
    case CurveClass::generic: return is_generic(s);
    case CurveClass::alternating: return is_alternating(s);
    case CurveClass::beaming: return is_beaming(s);
    case CurveClass::coherent: return is_coherent(s);
    case CurveClass::perfect: return is_perfect(s);
    default: return true;
  }
}

// Class statistics from canonical-form bucketing of a plain stream.
struct Buckets {
  std::uint64_t raw = 0;
  std::map<std::vector<int>, int> classes;  // canonical images -> |Aut|
  std::map<int, std::uint64_t> by_order() const {
    std::map<int, std::uint64_t> out;
    for (const auto& [_, order] : classes) ++out[order];
    return out;
  }
  Rational weighted() const {
    Rational total = 0;
    for (const auto& [_, order] : classes) total += Rational(1, order);
    return total;
  }
  void add(const Chart& c) {
    ++raw;
    const auto canon = canonical_form(c);
    classes.emplace(std::vector<int>(canon.images().begin(), canon.images().end()), aut_chart(c).order);
  }
};

BigInt falling(long long n) { return factorial(n); }

}  // namespace

TEST_CASE("names of kinds and classes") {
  CHECK(parse_census_kind("charts") == CensusKind::charts);
  CHECK(parse_census_kind("semicharts") == CensusKind::semicharts);
  CHECK_THROWS_AS(parse_census_kind("curves"), SyntaxError);
  for (auto cls : kSemichartClasses) CHECK(parse_curve_class(to_string(cls)) == cls);
  CHECK(parse_curve_class("straight") == CurveClass::straight);
  CHECK_THROWS_AS(parse_curve_class("round"), SyntaxError);
  CHECK(applies_to(CurveClass::straight, CensusKind::charts));
  CHECK_FALSE(applies_to(CurveClass::straight, CensusKind::semicharts));
  CHECK_FALSE(applies_to(CurveClass::coherent, CensusKind::charts));
  CHECK_THROWS_AS(class_census(Profile::parse("k1=1"), CensusKind::charts, CurveClass::perfect), Error);
}

TEST_CASE("closed forms") {
  CHECK(predicted_raw_count(Profile::parse("k1=1"), CensusKind::charts) == 1);
  CHECK(predicted_raw_count(Profile::parse("k2=1"), CensusKind::charts) == 6);
  CHECK(predicted_raw_count(Profile::parse("k1=1,k2=1"), CensusKind::charts) == 18);
  CHECK(predicted_raw_count(Profile::parse("k2=1"), CensusKind::semicharts) == 2);
  CHECK(predicted_raw_count(Profile::parse("k1=1"), CensusKind::semicharts) == 1);
  CHECK(predicted_raw_count(Profile::parse("k3=1"), CensusKind::semicharts) == 8);
  CHECK(predicted_weighted_sum(Profile{}, CensusKind::charts) == 1);
  CHECK(predicted_weighted_sum(Profile::parse("k1=3"), CensusKind::charts) == Rational(1, 3));
  CHECK(predicted_weighted_sum(Profile::parse("k2=1"), CensusKind::charts) == 3);
  for (int n = 1; n <= 8; ++n)
    for (const auto& p : profiles_of_size(n))
      for (auto kind : {CensusKind::charts, CensusKind::semicharts})
        CHECK(predicted_weighted_sum(p, kind) * n == Rational(predicted_raw_count(p, kind)));
}

TEST_CASE("chart streams are complete and duplicate free") {
  for (int n = 1; n <= 4; ++n) {
    std::map<std::vector<int>, std::set<std::vector<int>>> by_profile;
    for (const auto& o : oracle::all_charts(n)) by_profile[oracle::multiplicities(o)].insert(oracle::flat(o, n));
    for (const auto& p : profiles_of_size(n)) {
      std::vector<int> mults;
      for (int m = 1; m <= p.max_multiplicity(); ++m)
        for (long long i = 0; i < p.k(m); ++i) mults.push_back(m);
      std::set<std::vector<int>> seen;
      std::size_t count = 0;
      enumerate_charts(p, [&](const Chart& c) {
        ++count;
        seen.emplace(c.images().begin(), c.images().end());
        CHECK(profile(c) == p);
      });
      CHECK(count == seen.size());
      CHECK(seen == by_profile[mults]);
    }
  }
  for (int n = 5; n <= 6; ++n)
    for (const auto& p : profiles_of_size(n)) {
      std::uint64_t count = 0;
      enumerate_charts(p, [&](const Chart&) { ++count; });
      CHECK(BigInt(count) == predicted_raw_count(p, CensusKind::charts));
    }
}

TEST_CASE("semichart streams are complete and duplicate free") {
  for (int n = 0; n <= 5; ++n) {
    std::set<std::pair<std::vector<int>, std::vector<bool>>> brute;
    for (const auto& o : oracle::all_semicharts(n)) brute.emplace(o.v, o.in_s);
    std::set<std::pair<std::vector<int>, std::vector<bool>>> streamed;
    std::size_t count = 0;
    for (const auto& p : profiles_of_size(n))
      enumerate_semicharts(p, [&](const Semichart& s) {
        ++count;
        std::vector<bool> in_s;
        for (int k = 1; k <= n; ++k) in_s.push_back(s.in_s(k));
        streamed.emplace(std::vector<int>(s.permutation().begin(), s.permutation().end()), in_s);
        CHECK_NOTHROW(Semichart::make(n, std::vector<int>(s.permutation().begin(), s.permutation().end()), s.subset()));
      });
    CHECK(count == streamed.size());
    CHECK(streamed == brute);
  }
  for (int n = 6; n <= 8; ++n)
    for (const auto& p : profiles_of_size(n)) {
      std::uint64_t count = 0;
      enumerate_semicharts(p, [&](const Semichart&) { ++count; });
      CHECK(BigInt(count) == predicted_raw_count(p, CensusKind::semicharts));
    }
}

TEST_CASE("chart census agrees with canonical-form bucketing") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& p : profiles_of_size(n)) {
      Buckets buckets;
      enumerate_charts(p, [&](const Chart& c) { buckets.add(c); });
      const auto r = census(p, CensusKind::charts);
      CHECK(r.raw_count == buckets.raw);
      CHECK(r.class_count == buckets.classes.size());
      CHECK(r.classes_by_aut_order == buckets.by_order());
      CHECK(r.weighted_sum == buckets.weighted());
      CHECK(r.verified());
    }
}

TEST_CASE("semichart census agrees with canonical-form bucketing") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& p : profiles_of_size(n)) {
      Buckets buckets;
      enumerate_semicharts(p, [&](const Semichart& s) { buckets.add(semichart_to_chart(s)); });
      const auto r = census(p, CensusKind::semicharts);
      CHECK(r.raw_count == buckets.raw);
      CHECK(r.class_count == buckets.classes.size());
      CHECK(r.classes_by_aut_order == buckets.by_order());
      CHECK(r.verified());
    }
}

TEST_CASE("class censuses") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& p : profiles_of_size(n)) {
      for (auto cls : kChartClasses) {
        Buckets buckets;
        enumerate_charts(p, [&](const Chart& c) {
          if (in_class(c, cls)) buckets.add(c);
        });
        const auto r = class_census(p, CensusKind::charts, cls);
        CHECK(r.raw_count == buckets.raw);
        CHECK(r.class_count == buckets.classes.size());
        CHECK(r.weighted_sum == buckets.weighted());
        CHECK(BigInt(r.raw_count) == predicted_raw_count(p, CensusKind::charts, cls));
        CHECK(r.verified());
      }
      for (auto cls : kSemichartClasses) {
        Buckets buckets;
        enumerate_semicharts(p, [&](const Semichart& s) {
          if (in_class(s, cls)) buckets.add(semichart_to_chart(s));
        });
        const auto r = class_census(p, CensusKind::semicharts, cls);
        CHECK(r.raw_count == buckets.raw);
        CHECK(r.class_count == buckets.classes.size());
        CHECK(r.weighted_sum == buckets.weighted());
        CHECK(BigInt(r.raw_count) == predicted_raw_count(p, CensusKind::semicharts, cls));
        CHECK(r.verified());
      }
    }
  // straight charts are the semicharts in disguise
  for (int n = 1; n <= 6; ++n)
    for (const auto& p : profiles_of_size(n))
      CHECK(predicted_raw_count(p, CensusKind::charts, CurveClass::straight) ==
            predicted_raw_count(p, CensusKind::semicharts));
}

TEST_CASE("coherent semicharts match odd full words letter by letter") {
  for (int n = 1; n <= 6; ++n) {
    std::map<Profile, std::uint64_t> words;
    for (const auto& w : oracle::full_words(n, n)) {
      if (!oracle::is_odd(w)) continue;
      std::map<int, int> occurrences;
      for (int x : w.letters) ++occurrences[x];
      std::vector<int> mults;
      for (auto [_, m] : occurrences) mults.push_back(m);
      ++words[Profile::from_multiplicities(mults)];
    }
    for (const auto& p : profiles_of_size(n))
      CHECK(class_census(p, CensusKind::semicharts, CurveClass::coherent).raw_count == words[p]);
  }
}

TEST_CASE("perfect semicharts are coherent and beaming") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& p : profiles_of_size(n))
      enumerate_semicharts(p, [&](const Semichart& s) {
        if (!is_perfect(s)) return;
        CHECK(is_coherent(s));
        CHECK(is_beaming(s));
      });
  const auto r = class_census(Profile::parse("k2=1"), CensusKind::semicharts, CurveClass::perfect);
  CHECK_FALSE(r.conjugation_invariant());
  CHECK(r.raw_count == 1);
  CHECK(r.class_count == 1);
  CHECK(r.verified());
}

TEST_CASE("special values") {
  // semicharts with profile (k', k)
  const std::pair<int, int> pairs[] = {{0, 1}, {0, 2}, {0, 3}, {1, 1}, {1, 2}, {2, 1}, {3, 1}};
  for (auto [k1, k2] : pairs) {
    const auto r = census(Profile({k1, k2}), CensusKind::semicharts);
    CHECK(r.weighted_sum == Rational(falling(2 * k2 + k1 - 1), falling(k2) * falling(k1)));
  }
  for (int k = 1; k <= 3; ++k)
    CHECK(BigInt(census(Profile({1, k}), CensusKind::semicharts).class_count) == falling(2 * k) / falling(k));
  // charts with profile (k1, k2)
  for (int k1 = 0; k1 <= 6; ++k1)
    for (int k2 = 0; k1 + 2 * k2 <= 6; ++k2) {
      if (k1 + k2 == 0) continue;
      BigInt three = 1;
      for (int i = 0; i < k2; ++i) three *= 3;
      const auto r = census(Profile({k1, k2}), CensusKind::charts);
      CHECK(r.weighted_sum == Rational(falling(k1 + 2 * k2 - 1) * three, falling(k1) * falling(k2)));
    }
  for (int k1 = 1; k1 <= 7; ++k1) {
    const auto r = census(Profile({k1}), CensusKind::charts);
    CHECK(r.class_count == 1);
    CHECK(r.weighted_sum == Rational(1, k1));
  }
  const auto empty = census(Profile{}, CensusKind::charts);
  CHECK(empty.raw_count == 1);
  CHECK(empty.class_count == 1);
  CHECK(empty.verified());
}

TEST_CASE("gcd corollaries") {
  CHECK(gcd_corollary_applies(Profile({1, 2}), CensusKind::charts));
  CHECK_FALSE(gcd_corollary_applies(Profile({0, 2}), CensusKind::charts));
  CHECK(gcd_corollary_applies(Profile({1, 0, 1}), CensusKind::semicharts));
  CHECK(gcd_corollary_applies(Profile({0, 1, 2}), CensusKind::semicharts));
  CHECK_FALSE(gcd_corollary_applies(Profile({0, 1, 2}), CensusKind::charts));
  CHECK(verify_gcd_corollaries(Profile({1, 2}), CensusKind::charts));
  CHECK(verify_gcd_corollaries(Profile({0, 2}), CensusKind::charts));
  CHECK(verify_gcd_corollaries(Profile({2, 0, 1}), CensusKind::semicharts));
  for (int n = 1; n <= 6; ++n)
    for (const auto& p : profiles_of_size(n))
      for (auto kind : {CensusKind::charts, CensusKind::semicharts}) CHECK(verify_gcd_corollaries(p, kind));
}

TEST_CASE("bounds and threads") {
  CHECK(census_bound(CensusKind::charts) == 7);
  CHECK(census_bound(CensusKind::semicharts) == 8);
  CHECK(census_bound(CensusKind::charts, {1, 3}) == 3);
  CHECK_THROWS_AS(census(Profile({4}), CensusKind::charts, {1, 3}), BoundExceeded);
  CHECK_THROWS_AS(census(Profile({9}), CensusKind::semicharts), BoundExceeded);
  ::setenv("CHARTLAB_MAX_N", "2", 1);
  CHECK(census_bound(CensusKind::charts) == 2);
  CHECK_THROWS_AS(census(Profile({3}), CensusKind::charts), BoundExceeded);
  ::unsetenv("CHARTLAB_MAX_N");

  const auto p = Profile({1, 1, 1});
  const auto one = census(p, CensusKind::charts, {1, std::nullopt});
  const auto four = census(p, CensusKind::charts, {4, std::nullopt});
  CHECK(one.raw_count == four.raw_count);
  CHECK(one.classes_by_aut_order == four.classes_by_aut_order);
  CHECK(one.weighted_sum == four.weighted_sum);
}
