#include "chartlab/symmetry.hpp"

#include <string>

#include "chartlab/chart_ops.hpp"
#include "chartlab/errors.hpp"
#include "chartlab/words.hpp"

namespace chartlab {

namespace {

// The members of a subgroup of Z/nZ found by scanning must be the multiples
// of n / count; anything else means a predicate is not a group condition.
CyclicSubgroup from_members(int n, const std::vector<int>& members) {
  const int order = static_cast<int>(members.size());
  if (order == 0 || n % order != 0) throw InternalInvariant("automorphisms do not form a subgroup of Z/nZ");
  const CyclicSubgroup group = CyclicSubgroup::of_order(n, order);
  for (int m : members)
    if (!group.contains(m)) throw InternalInvariant("automorphisms do not form a subgroup of Z/nZ");
  return group;
}

}  // namespace

CyclicSubgroup aut_chart(const Chart& c) {
  const int n = c.size();
  if (n == 0) return CyclicSubgroup::trivial(0);
  std::vector<int> members;
  for (int j = 0; j < n; ++j)
    if (conjugate(c, j) == c) members.push_back(j);
  return from_members(n, members);
}

CyclicSubgroup aut_semichart(const Semichart& s) {
  const int n = s.size();
  if (n == 0) return CyclicSubgroup::trivial(0);
  std::vector<int> members;
  for (int j = 0; j < n; ++j)
    if (conjugate(s, j) == s) members.push_back(j);
  return from_members(n, members);
}

WordAutomorphismGroup aut_word(const SignedWord& w) {
  if (!is_full(w)) throw NotFullWord();
  const int n = w.size();
  WordAutomorphismGroup group;
  if (n == 0) {
    group.image = CyclicSubgroup::trivial(0);
    group.elements.push_back({});
    return group;
  }
  std::vector<int> members;
  for (int m = 0; m < n; ++m) {
    std::map<std::string, std::string> psi;
    std::map<std::string, std::string> inverse;
    bool ok = true;
    for (int k = 1; k <= n && ok; ++k) {
      const int moved = (k - 1 + m) % n + 1;
      if (w.in_s(k) != w.in_s(moved)) ok = false;
      const auto [it, fresh] = psi.try_emplace(w.letter(k), w.letter(moved));
      const auto [jt, fresh_inv] = inverse.try_emplace(w.letter(moved), w.letter(k));
      if (it->second != w.letter(moved) || jt->second != w.letter(k)) ok = false;
    }
    if (!ok) continue;
    members.push_back(m);
    group.elements.push_back({m, std::move(psi)});
  }
  group.image = from_members(n, members);
  return group;
}

CyclicSubgroup orbit_stabilizer(const Semichart& s, int orbit_id) {
  const auto orbits = semichart_orbits(s);
  if (orbit_id < 0 || static_cast<std::size_t>(orbit_id) >= orbits.size()) throw UnknownOrbit(orbit_id);
  const int n = s.size();
  const CyclicSubgroup aut = aut_semichart(s);
  const auto& orbit = orbits[static_cast<std::size_t>(orbit_id)];
  std::vector<bool> member(static_cast<std::size_t>(n), false);
  for (int k : orbit) member[static_cast<std::size_t>(k - 1)] = true;

  std::vector<int> members;
  for (int j = 0; j < n; j += aut.step()) {
    bool keeps = true;
    for (int k : orbit)
      if (!member[static_cast<std::size_t>((k - 1 + j) % n)]) keeps = false;
    if (keeps) members.push_back(j);
  }
  return from_members(n, members);
}

Rational weighted_class_sum(std::span<const CyclicSubgroup> stabilizers) {
  Rational total = 0;
  for (const auto& h : stabilizers) total += Rational(1, h.order);
  return total;
}

}  // namespace chartlab
