#include "chartlab/chart_ops.hpp"

#include <algorithm>
#include <cstdlib>

#include "chartlab/errors.hpp"

namespace chartlab {

namespace {

inline std::size_t idx(int n, int k) { return static_cast<std::size_t>(SignedIndexMap::index_of(n, k)); }

// sigma^j applied to a signed index.
inline int shift(int x, long long j, int n) {
  const int k = std::abs(x);
  long long r = (k - 1 + j) % n;
  if (r < 0) r += n;
  const int moved = static_cast<int>(r) + 1;
  return x > 0 ? moved : -moved;
}

}  // namespace

OrbitPartition orbit_partition(const SignedIndexMap& map) {
  OrbitPartition out;
  const int n = map.size();
  out.n = n;
  out.orbit_index.assign(static_cast<std::size_t>(2 * n), -1);
  out.position.assign(static_cast<std::size_t>(2 * n), -1);
  for (int a = 1; a <= n; ++a) {
    for (int start : {a, -a}) {
      if (out.orbit_index[idx(n, start)] >= 0) continue;
      const int id = static_cast<int>(out.orbits.size());
      std::vector<int> cycle;
      for (int x = start; out.orbit_index[idx(n, x)] < 0; x = map(x)) {
        out.orbit_index[idx(n, x)] = id;
        out.position[idx(n, x)] = static_cast<int>(cycle.size());
        cycle.push_back(x);
      }
      out.orbits.push_back(std::move(cycle));
    }
  }
  return out;
}

int orbit_count(const SignedIndexMap& map) {
  const int n = map.size();
  std::vector<bool> seen(static_cast<std::size_t>(2 * n), false);
  int count = 0;
  for (int i = 0; i < 2 * n; ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    ++count;
    for (int x = SignedIndexMap::element_at(n, i); !seen[idx(n, x)]; x = map(x)) seen[idx(n, x)] = true;
  }
  return count;
}

Chart validate_chart(const SignedIndexMap& map) {
  const OrbitPartition orbits = orbit_partition(map);
  for (int a = 1; a <= map.size(); ++a)
    if (orbits.orbit_of(a) != orbits.orbit_of(-a)) throw NotAChart(a);
  return detail::ChartAccess::trusted(map);
}

Profile profile(const Chart& c) {
  const OrbitPartition orbits = orbit_partition(c);
  std::vector<int> multiplicities;
  multiplicities.reserve(orbits.count());
  for (const auto& orbit : orbits.orbits) multiplicities.push_back(static_cast<int>(orbit.size() / 2));
  return Profile::from_multiplicities(multiplicities);
}

Chart conjugate(const Chart& c, long long j) {
  const int n = c.size();
  if (n == 0) return c;
  std::vector<int> images(static_cast<std::size_t>(2 * n));
  for (int i = 0; i < 2 * n; ++i) {
    const int x = SignedIndexMap::element_at(n, i);
    images[static_cast<std::size_t>(i)] = shift(c(shift(x, -j, n)), j, n);
  }
  return detail::ChartAccess::trusted(detail::MapAccess::make(n, std::move(images)));
}

Chart canonical_form(const Chart& c) {
  Chart best = c;
  for (int j = 1; j < c.size(); ++j) {
    Chart candidate = conjugate(c, j);
    if (std::ranges::lexicographical_compare(candidate.images(), best.images())) best = std::move(candidate);
  }
  return best;
}

bool homeomorphic(const Chart& a, const Chart& b) {
  return a.size() == b.size() && canonical_form(a) == canonical_form(b);
}

bool is_straight(const Chart& c) {
  for (int k = 1; k <= c.size(); ++k)
    if (c(-k) != -c(k)) return false;
  return true;
}

Semichart chart_to_semichart(const Chart& c) {
  if (!is_straight(c)) throw NotStraight();
  const int n = c.size();
  std::vector<int> v(static_cast<std::size_t>(n));
  std::vector<int> subset;
  for (int k = 1; k <= n; ++k) {
    v[static_cast<std::size_t>(k - 1)] = std::abs(c(k));
    if (c(k) < 0) subset.push_back(k);
  }
  return Semichart::make(n, std::move(v), subset);
}

Chart semichart_to_chart(const Semichart& s) {
  const int n = s.size();
  std::vector<int> images(static_cast<std::size_t>(2 * n));
  for (int k = 1; k <= n; ++k) {
    const int image = s.in_s(k) ? -s.v(k) : s.v(k);
    images[static_cast<std::size_t>(k - 1)] = image;
    images[static_cast<std::size_t>(n + k - 1)] = -image;
  }
  return validate_chart(detail::MapAccess::make(n, std::move(images)));
}

Semichart conjugate(const Semichart& s, long long j) {
  const int n = s.size();
  if (n == 0) return s;
  std::vector<int> v(static_cast<std::size_t>(n));
  std::vector<bool> in_s(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    const int to = shift(k, j, n);
    v[static_cast<std::size_t>(to - 1)] = shift(s.v(k), j, n);
    in_s[static_cast<std::size_t>(to - 1)] = s.in_s(k);
  }
  return detail::ChartAccess::trusted_semichart(n, std::move(v), std::move(in_s));
}

std::vector<std::vector<int>> semichart_orbits(const Semichart& s) {
  const int n = s.size();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<std::vector<int>> out;
  for (int start = 1; start <= n; ++start) {
    if (seen[static_cast<std::size_t>(start - 1)]) continue;
    std::vector<int> cycle;
    for (int k = start; !seen[static_cast<std::size_t>(k - 1)]; k = s.v(k)) {
      seen[static_cast<std::size_t>(k - 1)] = true;
      cycle.push_back(k);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

bool is_generic(const Semichart& s) {
  for (int k = 1; k <= s.size(); ++k)
    if (s.v(s.v(k)) != k) return false;
  return true;
}

bool is_generic(const Chart& c) {
  if (!is_straight(c)) return false;
  for (const auto& orbit : orbit_partition(c).orbits)
    if (orbit.size() != 2 && orbit.size() != 4) return false;
  return true;
}

bool is_alternating(const Semichart& s) {
  for (int k = 1; k <= s.size(); ++k)
    if (!s.in_s(k)) return false;
  return true;
}

bool is_alternating(const Chart& c) {
  for (int k = 1; k <= c.size(); ++k)
    if (c(k) > 0) return false;
  return true;
}

bool is_beaming(const Semichart& s) {
  for (const auto& orbit : semichart_orbits(s)) {
    const auto hits = std::ranges::count_if(orbit, [&](int k) { return s.in_s(k); });
    if (hits != 1) return false;
  }
  return true;
}

bool is_beaming(const Chart& c) {
  for (const auto& orbit : orbit_partition(c).orbits) {
    const auto sign_changes = std::ranges::count_if(orbit, [&](int r) { return r > 0 && c(r) < 0; });
    if (sign_changes != 1) return false;
  }
  return true;
}

bool is_beaming_incoming(const Chart& c) {
  for (const auto& orbit : orbit_partition(c).orbits) {
    const auto sign_changes = std::ranges::count_if(orbit, [&](int r) { return r < 0 && c(r) > 0; });
    if (sign_changes != 1) return false;
  }
  return true;
}

bool is_coherent(const Semichart& s) {
  for (const auto& orbit : semichart_orbits(s)) {
    const auto [lo, hi] = std::ranges::minmax(orbit);
    for (int k : orbit)
      if (!(k < s.v(k) || (k == hi && s.v(k) == lo))) return false;
  }
  return true;
}

bool is_perfect(const Semichart& s) {
  if (!is_coherent(s)) return false;
  for (const auto& orbit : semichart_orbits(s)) {
    const int hi = std::ranges::max(orbit);
    for (int k : orbit)
      if (s.in_s(k) != (k == hi)) return false;
  }
  return true;
}

namespace detail {

ConjugacyScan scan_conjugates(std::span<const int> images, int n) {
  ConjugacyScan scan{true, 1};
  for (int j = 1; j < n; ++j) {
    int cmp = 0;
    for (int i = 0; i < 2 * n && cmp == 0; ++i) {
      const int x = SignedIndexMap::element_at(n, i);
      const int conj = shift(images[idx(n, shift(x, -j, n))], j, n);
      const int own = images[static_cast<std::size_t>(i)];
      cmp = conj < own ? -1 : (conj > own ? 1 : 0);
    }
    if (cmp < 0) return {false, 1};
    if (cmp == 0) ++scan.stabilizer_order;
  }
  return scan;
}

}  // namespace detail

}  // namespace chartlab
