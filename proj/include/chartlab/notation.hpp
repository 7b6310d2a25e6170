#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chartlab/chart.hpp"
#include "chartlab/signed_index_map.hpp"

namespace chartlab {

/// Parses `(1,3,-3,-1)(2,4,-4,-2)`.  Omitted elements are fixed points; n is
/// the largest absolute value unless given.  An empty string (or "()") is the
/// trivial map.  Throws SyntaxError or InvalidMap.
SignedIndexMap parse_cycles(std::string_view text, std::optional<int> n = std::nullopt);

/// Cycle notation, orbits ordered by smallest |a| and each written from that
/// element (positive before negative); fixed points are omitted, the identity
/// prints as "()".
std::string format_cycles(const SignedIndexMap& map);
inline std::string format_cycles(const Chart& c) { return format_cycles(c.map()); }

/// Cycle notation for a permutation of {1..n}, `perm[k-1]` being the image of k.
std::string format_permutation(std::span<const int> perm);

/// Parses `v/S`, e.g. `(1,3)(2,4)/3,4` or `(1,3)(2,4)/{3,4}`.  v uses
/// positive entries only.  n is the largest entry unless given.
Semichart parse_semichart(std::string_view text, std::optional<int> n = std::nullopt);
/// Inverse of parse_semichart: `(1,3)(2,4)/{3,4}`.
std::string format_semichart(const Semichart& s);

std::string format_subset(const std::vector<int>& elements);

}  // namespace chartlab
