#pragma once

#include <span>
#include <vector>

#include "chartlab/signed_index_map.hpp"

namespace chartlab {

namespace detail {
struct ChartAccess;
}

/// A signed index map whose orbits are all closed under negation.
///
/// Only obtainable through validate_chart() or library constructions that
/// produce charts by design, so holding a Chart means the condition holds.
class Chart {
 public:
  /// The trivial chart (n = 0).
  Chart() = default;

  int size() const noexcept { return map_.size(); }
  bool trivial() const noexcept { return map_.trivial(); }
  int operator()(int k) const { return map_(k); }
  const SignedIndexMap& map() const noexcept { return map_; }
  std::span<const int> images() const noexcept { return map_.images(); }

  friend bool operator==(const Chart&, const Chart&) = default;
  friend auto operator<=>(const Chart&, const Chart&) = default;

 private:
  friend struct detail::ChartAccess;
  explicit Chart(SignedIndexMap m) : map_(std::move(m)) {}
  SignedIndexMap map_;
};

/// (n, v, S): a permutation v of {1..n} and a subset S meeting every v-orbit
/// in an odd number of elements.
class Semichart {
 public:
  /// The empty semichart (n = 0).
  Semichart() = default;

  /// `v[k-1]` is v(k); `subset` lists the elements of S.  Throws
  /// InvalidSemichart when v is not a permutation or S has even trace on an orbit.
  static Semichart make(int n, std::vector<int> v, const std::vector<int>& subset);

  int size() const noexcept { return n_; }
  int v(int k) const { return v_[static_cast<std::size_t>(k - 1)]; }
  bool in_s(int k) const { return in_s_[static_cast<std::size_t>(k - 1)]; }
  std::span<const int> permutation() const noexcept { return v_; }
  std::vector<int> subset() const;

  friend bool operator==(const Semichart&, const Semichart&) = default;

 private:
  friend struct detail::ChartAccess;
  int n_ = 0;
  std::vector<int> v_;
  std::vector<bool> in_s_;
};

namespace detail {
struct ChartAccess {
  static Chart trusted(SignedIndexMap m) { return Chart(std::move(m)); }
  static SignedIndexMap& map(Chart& c) { return c.map_; }
  static Semichart trusted_semichart(int n, std::vector<int> v, std::vector<bool> in_s) {
    Semichart s;
    s.n_ = n;
    s.v_ = std::move(v);
    s.in_s_ = std::move(in_s);
    return s;
  }
  static std::vector<int>& v(Semichart& s) { return s.v_; }
  static std::vector<bool>& in_s(Semichart& s) { return s.in_s_; }
  static void resize(Semichart& s, int n) {
    s.n_ = n;
    s.v_.assign(static_cast<std::size_t>(n), 0);
    s.in_s_.assign(static_cast<std::size_t>(n), false);
  }
};
}  // namespace detail

}  // namespace chartlab
