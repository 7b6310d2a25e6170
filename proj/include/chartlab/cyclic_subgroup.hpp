#pragma once

#include <compare>

namespace chartlab {

/// A subgroup of Z/nZ.  Every automorphism group in this library is one.
struct CyclicSubgroup {
  int modulus = 0;
  int order = 1;
  int generator = 0;

  /// The unique subgroup of the given order; `order` must divide `modulus`
  /// (order 1 when modulus is 0).
  static CyclicSubgroup of_order(int modulus, int order);
  static CyclicSubgroup trivial(int modulus) { return of_order(modulus, 1); }

  bool contains(long long residue) const;
  /// Index of the subgroup in Z/nZ, i.e. the smallest positive element (n when trivial).
  int step() const { return modulus == 0 ? 0 : modulus / order; }

  friend bool operator==(const CyclicSubgroup&, const CyclicSubgroup&) = default;
};

}  // namespace chartlab
