#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "chartlab/chart.hpp"
#include "chartlab/signed_word.hpp"

namespace chartlab {

/// Cell counts of the surface carrying a filling curve, and its genus by up
/// to three independent routes.
struct GenusReport {
  int n = 0;
  int vertices = 0;  ///< orbits of t
  int edges = 0;     ///< n
  int faces = 0;     ///< orbits of r -> t(theta(r))
  int genus_euler = 0;
  std::optional<int> genus_rank;  ///< half the rank of the intersection matrix
  std::optional<int> genus_gf2;   ///< half the GF(2) rank of the word matrix

  friend bool operator==(const GenusReport&, const GenusReport&) = default;
};

/// Dense n x n integer matrix, 1-based accessors.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  explicit IntegerMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * n, 0) {}
  int size() const noexcept { return n_; }
  long long& operator()(int row, int col) { return data_[index(row, col)]; }
  long long operator()(int row, int col) const { return data_[index(row, col)]; }
  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

 private:
  std::size_t index(int row, int col) const {
    return static_cast<std::size_t>(row - 1) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(col - 1);
  }
  int n_ = 0;
  std::vector<long long> data_;
};

/// Dense n x n matrix over GF(2) stored as packed 64-bit rows, 1-based accessors.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(int n)
      : n_(n), words_((n + 63) / 64), rows_(static_cast<std::size_t>(n) * words_, 0) {}
  int size() const noexcept { return n_; }
  bool operator()(int row, int col) const {
    return (rows_[word(row, col)] >> ((col - 1) % 64)) & 1ULL;
  }
  void set(int row, int col, bool value) {
    const auto bit = std::uint64_t{1} << ((col - 1) % 64);
    if (value)
      rows_[word(row, col)] |= bit;
    else
      rows_[word(row, col)] &= ~bit;
  }
  bool is_zero() const;
  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  friend int gf2_rank(BitMatrix m);
  std::size_t word(int row, int col) const {
    return static_cast<std::size_t>(row - 1) * static_cast<std::size_t>(words_) +
           static_cast<std::size_t>((col - 1) / 64);
  }
  int n_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> rows_;
};

/// Intersection numbers B(h_k, h_l) of the loops h_k on the surface of a chart.
using IntersectionMatrix = IntegerMatrix;
/// The mod-2 matrix W_{k,l} of an odd full word.
using WordMatrix = BitMatrix;

/// Euler-characteristic genus with vertex/edge/face counts; rank fields unset.
GenusReport genus_euler(const Chart& c);

/// Requires n >= 1.
IntersectionMatrix intersection_matrix(const Chart& c);
/// Rank over Q by fraction-free elimination.
int integer_rank(const IntegerMatrix& m);
int genus_rank(const Chart& c);

/// Requires an odd full word (NotOddWord / NotFullWord otherwise).
WordMatrix word_matrix(const SignedWord& w);
int gf2_rank(BitMatrix m);
int genus_word(const SignedWord& w);
bool is_planar(const SignedWord& w);

/// Every applicable route: Euler and intersection rank always (n >= 1), and
/// the word route when the chart is the coherent realization of its word.
GenusReport genus_report(const Chart& c);

}  // namespace chartlab
