#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace chartlab {

namespace detail {
struct MapAccess;
}

/// A bijection of the signed index set {-n,...,-1,1,...,n}.
///
/// Images are stored densely in the order t(1),...,t(n),t(-1),...,t(-n):
/// index k-1 holds t(k) and index n+k-1 holds t(-k).  That flattened
/// sequence is also the key used for canonical forms.  The n = 0 map is the
/// identity of the one-point domain {0} and stores nothing.
class SignedIndexMap {
 public:
  SignedIndexMap() = default;

  /// Builds a map from its flattened images; throws InvalidMap unless the
  /// images form a bijection of the signed index set.
  static SignedIndexMap from_images(int n, std::vector<int> images);
  static SignedIndexMap identity(int n);

  int size() const noexcept { return n_; }
  bool trivial() const noexcept { return n_ == 0; }

  int operator()(int k) const { return images_[static_cast<std::size_t>(index_of(n_, k))]; }
  std::span<const int> images() const noexcept { return images_; }

  SignedIndexMap inverse() const;
  SignedIndexMap pow(long long e) const;

  /// Flat index of k in a map of size n.
  static constexpr int index_of(int n, int k) noexcept { return k > 0 ? k - 1 : n - k - 1; }
  /// Signed element stored at flat index i.
  static constexpr int element_at(int n, int i) noexcept { return i < n ? i + 1 : -(i - n + 1); }

  friend bool operator==(const SignedIndexMap&, const SignedIndexMap&) = default;
  friend auto operator<=>(const SignedIndexMap& a, const SignedIndexMap& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.images_ <=> b.images_;
  }

 private:
  friend struct detail::MapAccess;
  int n_ = 0;
  std::vector<int> images_;
};

/// Composition (a * b)(k) = a(b(k)); both maps must have the same size.
SignedIndexMap operator*(const SignedIndexMap& a, const SignedIndexMap& b);

/// The circular permutation sending +-k to +-(k+1) and +-n to +-1.
SignedIndexMap circular_perm(int n);

/// theta(k) = -sigma(k), theta(-k) = sigma^{-1}(k) for k in {1..n}; requires n >= 1.
SignedIndexMap theta(int n);

/// k -> -k.
SignedIndexMap negation(int n);

namespace detail {
/// Unchecked construction for code that builds bijections by construction.
struct MapAccess {
  static SignedIndexMap make(int n, std::vector<int> images) {
    SignedIndexMap m;
    m.n_ = n;
    m.images_ = std::move(images);
    return m;
  }
  static std::vector<int>& images(SignedIndexMap& m) { return m.images_; }
  static void resize(SignedIndexMap& m, int n) {
    m.n_ = n;
    m.images_.assign(static_cast<std::size_t>(2 * n), 0);
  }
};
}  // namespace detail

}  // namespace chartlab
