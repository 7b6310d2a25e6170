#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "chartlab/chart.hpp"
#include "chartlab/cyclic_subgroup.hpp"
#include "chartlab/rational.hpp"
#include "chartlab/signed_word.hpp"

namespace chartlab {

/// Powers sigma^j commuting with t.
CyclicSubgroup aut_chart(const Chart& c);

/// Powers of the circular permutation of {1..n} commuting with v and fixing S.
CyclicSubgroup aut_semichart(const Semichart& s);

/// One automorphism (psi, shift) of a word: psi(w(k)) = w(k + shift).
struct WordAutomorphism {
  int shift = 0;
  std::map<std::string, std::string> psi;
};

struct WordAutomorphismGroup {
  CyclicSubgroup image;                    ///< p(Aut(W)) inside Z/nZ
  std::vector<WordAutomorphism> elements;  ///< ordered by shift
};

/// Requires a full word (NotFullWord otherwise).
WordAutomorphismGroup aut_word(const SignedWord& w);

/// Subgroup of aut_semichart(s) mapping the given v-orbit onto itself.  Orbit
/// ids follow semichart_orbits(), i.e. orbits sorted by least element.
CyclicSubgroup orbit_stabilizer(const Semichart& s, int orbit_id);

/// Sum of 1/|H| over the given stabilizers; with a full orbit decomposition of
/// a Z/nZ-set this times n is the set's cardinality.
Rational weighted_class_sum(std::span<const CyclicSubgroup> stabilizers);

}  // namespace chartlab
