#pragma once

#include <span>
#include <vector>

#include "chartlab/chart.hpp"
#include "chartlab/profile.hpp"
#include "chartlab/signed_index_map.hpp"

namespace chartlab {

/// Orbits of a bijection of the signed index set.
///
/// Elements are totally ordered by (|a|, sign) with +a before -a.  Orbits are
/// listed by their least element and each orbit is stored as the cycle
/// a, t(a), t^2(a), ... starting from that least element, so `position`
/// realises the cyclic order the map induces on the orbit.
struct OrbitPartition {
  int n = 0;
  std::vector<std::vector<int>> orbits;
  std::vector<int> orbit_index;  ///< flat index -> orbit id
  std::vector<int> position;     ///< flat index -> position within its cycle

  int orbit_of(int k) const {
    return orbit_index[static_cast<std::size_t>(SignedIndexMap::index_of(n, k))];
  }
  int position_of(int k) const {
    return position[static_cast<std::size_t>(SignedIndexMap::index_of(n, k))];
  }
  std::size_t count() const noexcept { return orbits.size(); }
};

OrbitPartition orbit_partition(const SignedIndexMap& map);
inline OrbitPartition orbit_partition(const Chart& c) { return orbit_partition(c.map()); }

/// Number of orbits without materialising them.
int orbit_count(const SignedIndexMap& map);

/// Checks the chart condition; throws NotAChart with a witness whose orbit misses its negation.
Chart validate_chart(const SignedIndexMap& map);

Profile profile(const Chart& c);

/// sigma^j t sigma^{-j}.
Chart conjugate(const Chart& c, long long j);

/// The lexicographically least conjugate, comparing (t(1),...,t(n),t(-1),...,t(-n)).
Chart canonical_form(const Chart& c);
bool homeomorphic(const Chart& a, const Chart& b);

bool is_straight(const Chart& c);
Semichart chart_to_semichart(const Chart& c);
Chart semichart_to_chart(const Semichart& s);

/// (sigma^j v sigma^{-j}, sigma^j(S)) with sigma the circular permutation of {1..n}.
Semichart conjugate(const Semichart& s, long long j);

/// Orbits of v, sorted by least element, each as a cycle from that element.
std::vector<std::vector<int>> semichart_orbits(const Semichart& s);

bool is_generic(const Semichart& s);
bool is_generic(const Chart& c);
bool is_alternating(const Semichart& s);
bool is_alternating(const Chart& c);
bool is_beaming(const Semichart& s);
bool is_beaming(const Chart& c);
bool is_coherent(const Semichart& s);
bool is_perfect(const Semichart& s);

/// True when every orbit has exactly one negative r with t(r) > 0.  This is the
/// "t^{-1}(r) outgoing" reading of beaming; it agrees with is_beaming on charts.
bool is_beaming_incoming(const Chart& c);

namespace detail {

struct ConjugacyScan {
  bool minimal = false;      ///< no conjugate is lexicographically smaller
  int stabilizer_order = 1;  ///< number of j in Z/nZ with sigma^j t sigma^{-j} = t
};

/// Compares the flattened images of a chart with all of its conjugates in one
/// pass.  When `minimal` is false the scan stops early and stabilizer_order is
/// meaningless.
ConjugacyScan scan_conjugates(std::span<const int> images, int n);

}  // namespace detail

}  // namespace chartlab
