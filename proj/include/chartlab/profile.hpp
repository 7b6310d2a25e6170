#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace chartlab {

/// Crossing profile K = (k_1, k_2, ...): k_m counts orbits of multiplicity m
/// (corners for m = 1).  Trailing zeros are never stored.
class Profile {
 public:
  Profile() = default;
  explicit Profile(std::vector<long long> counts);

  /// Parses "k1=1,k2=2", "1,2" or "(1,2)"; throws SyntaxError.
  static Profile parse(std::string_view text);
  /// The profile of a multiset of multiplicities.
  static Profile from_multiplicities(const std::vector<int>& multiplicities);

  /// k_m for m >= 1; zero beyond the stored length.
  long long k(int m) const;
  /// Largest m with k_m > 0 (0 for the empty profile).
  int max_multiplicity() const noexcept { return static_cast<int>(counts_.size()); }
  long long n() const;
  long long block_count() const;
  const std::vector<long long>& counts() const noexcept { return counts_; }

  /// "k1=1,k2=2"; the empty profile prints as "".
  std::string to_string() const;

  friend bool operator==(const Profile&, const Profile&) = default;
  friend auto operator<=>(const Profile&, const Profile&) = default;

 private:
  std::vector<long long> counts_;
};

/// All profiles with n(K) = n, i.e. the integer partitions of n.
std::vector<Profile> profiles_of_size(int n);

}  // namespace chartlab
