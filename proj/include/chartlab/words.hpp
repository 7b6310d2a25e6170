#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "chartlab/chart.hpp"
#include "chartlab/signed_word.hpp"

namespace chartlab {

/// Parses the word grammar.  With whitespace present every token is a letter
/// optionally followed by '+'.  Without whitespace a letter is an uppercase
/// character followed by any digits, lowercase characters or underscores, so
/// `A+B+AB` and `A1A2A3` both parse.  Throws SyntaxError.
SignedWord parse_word(std::string_view text);

/// Unseparated when every letter is a single character, space separated otherwise.
std::string format_word(const SignedWord& w);

bool is_full(const SignedWord& w);
/// Every letter of the alphabet occurs unmarked an odd number of times.
bool is_odd(const SignedWord& w);

/// The j-fold circular permutation (w sigma^{-j}, sigma^j(S)).
SignedWord circular_shift(const SignedWord& w, long long j);

/// w-equivalence classes numbered by first occurrence, together with S.
struct CongruenceKey {
  std::vector<int> classes;
  std::vector<bool> in_s;
  int size() const noexcept { return static_cast<int>(classes.size()); }
  friend bool operator==(const CongruenceKey&, const CongruenceKey&) = default;
  friend auto operator<=>(const CongruenceKey&, const CongruenceKey&) = default;
};

struct CongruenceKeyHash {
  std::size_t operator()(const CongruenceKey& key) const noexcept;
};

/// Requires a full word.
CongruenceKey congruence_key(const SignedWord& w);
bool congruent(const SignedWord& a, const SignedWord& b);
/// The word with letters A, B, ... in class order.
SignedWord word_from_key(const CongruenceKey& key);

/// Letter names A..Z, AA, AB, ... for ids 0, 1, 2, ...
std::string letter_name(int id);

/// Orbits become letters, named in order of least |a|.
SignedWord word_of_chart(const Chart& c);
SignedWord word_of_semichart(const Semichart& s);

/// A chart whose word is congruent to w.  Every letter must occur at least
/// once unmarked; otherwise NotRealizable.
Chart realize_word(const SignedWord& w);

/// v_w(k): the next position after k (cyclically, wrapping to the smallest)
/// carrying the same letter.  v_w(k) = k for letters occurring once.
std::vector<int> coherent_successor(const SignedWord& w);

/// The unique coherent semichart whose word is congruent to w.
Semichart realize_coherent(const SignedWord& w);

/// t(k) = -k, t(-k) = v_w(k); requires S = {1..n}.
Chart realize_unsigned(const SignedWord& w);

/// Each letter occurs exactly twice, exactly once unmarked.
bool is_gauss_word(const SignedWord& w);

/// One-letter word with S = {i : floor(ip/n) = floor((i-1)p/n) + 1}.
SignedWord christoffel(int p, int n);

}  // namespace chartlab
