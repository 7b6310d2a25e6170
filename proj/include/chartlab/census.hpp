#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "chartlab/chart.hpp"
#include "chartlab/profile.hpp"
#include "chartlab/rational.hpp"

namespace chartlab {

enum class CensusKind { charts, semicharts };

/// Class filters.  `straight` applies to charts only; `generic`,
/// `alternating` and `beaming` to both kinds; `coherent` and `perfect` to
/// semicharts only.
enum class CurveClass { all, straight, generic, alternating, beaming, coherent, perfect };

std::string_view to_string(CensusKind kind);
std::string_view to_string(CurveClass cls);
CensusKind parse_census_kind(std::string_view text);
CurveClass parse_curve_class(std::string_view text);
bool applies_to(CurveClass cls, CensusKind kind);

struct CensusResult {
  Profile profile;
  CensusKind kind = CensusKind::charts;
  CurveClass curve_class = CurveClass::all;
  std::uint64_t raw_count = 0;    ///< pointed curves: charts or semicharts in the stream
  std::uint64_t class_count = 0;  ///< conjugation classes
  Rational weighted_sum;          ///< sum over classes of 1/|Aut|
  Rational predicted_weighted;
  BigInt predicted_raw;
  std::map<int, std::uint64_t> classes_by_aut_order;

  /// False for perfect curves: perfection refers to the base point, so
  /// conjugation moves curves in and out of the class.  Class counts then
  /// cover every conjugation class meeting the class and only the raw count
  /// is checked.
  bool conjugation_invariant() const { return curve_class != CurveClass::perfect; }
  /// raw = n * weighted (skipped for n = 0).
  bool burnside_balanced() const;
  /// Balanced, and both closed forms match; only the raw count when the
  /// class is not conjugation invariant.
  bool verified() const;
};

struct CensusOptions {
  int threads = 1;
  /// Overrides the size bound (otherwise CHARTLAB_MAX_N, then 7 for charts / 8 for semicharts).
  std::optional<int> max_n;
};

/// Size bound in effect for `kind`, honouring CHARTLAB_MAX_N.
int census_bound(CensusKind kind, const CensusOptions& options = {});

/// Every chart with profile K exactly once: a set partition of {1..n} into
/// blocks of the profile's sizes, then a single cycle on +-A for each block A.
/// The Chart passed to `visit` is reused between calls.
void enumerate_charts(const Profile& profile, const std::function<void(const Chart&)>& visit);

/// Every semichart with profile K exactly once: set partition, a cyclic
/// action on each block, then an odd subset of each block.
void enumerate_semicharts(const Profile& profile,
                          const std::function<void(const Semichart&)>& visit);

/// Closed-form number of charts/semicharts with profile K in the given class.
BigInt predicted_raw_count(const Profile& profile, CensusKind kind,
                           CurveClass cls = CurveClass::all);

/// (n-1)! prod_m (1/k_m!) c_m^{k_m} with c_m = (2m-1)!/m! for charts and
/// 2^{m-1}/m for semicharts; 1 for the empty profile.
Rational predicted_weighted_sum(const Profile& profile, CensusKind kind);

/// Streams the profile, counts conjugation classes through their canonical
/// representatives and accumulates 1/|Aut| per class.  Throws BoundExceeded.
CensusResult census(const Profile& profile, CensusKind kind, const CensusOptions& options = {});

/// census() restricted to a curve class.  The predicted weighted sum is the
/// predicted raw count divided by n.
CensusResult class_census(const Profile& profile, CensusKind kind, CurveClass cls,
                          const CensusOptions& options = {});

/// True when gcd{m k_m} = 1 (or, for semicharts, some k_{2^q} = 1), i.e.
/// every automorphism group in the census is forced to be trivial.
bool gcd_corollary_applies(const Profile& profile, CensusKind kind);

/// When the corollary applies, checks that every class has trivial
/// automorphisms and class_count equals the predicted weighted sum.
/// Otherwise only checks that the census balances.
bool verify_gcd_corollaries(const Profile& profile, CensusKind kind,
                            const CensusOptions& options = {});

}  // namespace chartlab
