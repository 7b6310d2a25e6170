#include "chartlab/words.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>

#include "chartlab/chart_ops.hpp"
#include "chartlab/errors.hpp"

namespace chartlab {

namespace {

constexpr std::string_view kSuperscriptPlus = "⁺";

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

// Length of a '+' marker at `pos`, either ASCII or the superscript sign.
std::size_t plus_at(std::string_view text, std::size_t pos) {
  if (pos < text.size() && text[pos] == '+') return 1;
  if (text.substr(pos, kSuperscriptPlus.size()) == kSuperscriptPlus) return kSuperscriptPlus.size();
  return 0;
}

}  // namespace

SignedWord parse_word(std::string_view text) {
  std::vector<std::string> letters;
  std::vector<bool> in_s;
  const bool spaced = std::ranges::any_of(text, is_space);
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (is_space(text[pos])) {
      ++pos;
      continue;
    }
    const std::size_t start = pos;
    if (spaced) {
      while (pos < text.size() && !is_space(text[pos]) && plus_at(text, pos) == 0) ++pos;
    } else {
      if (!std::isupper(static_cast<unsigned char>(text[pos])))
        throw SyntaxError("a letter must start with an uppercase character", pos);
      ++pos;
      while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) ||
                                   std::islower(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
        ++pos;
    }
    if (pos == start) throw SyntaxError("'+' must follow a letter", pos);
    letters.emplace_back(text.substr(start, pos - start));
    const std::size_t mark = plus_at(text, pos);
    in_s.push_back(mark == 0);
    pos += mark;
    if (spaced && pos < text.size() && !is_space(text[pos]))
      throw SyntaxError("unexpected character after '+'", pos);
  }
  return SignedWord(std::move(letters), std::move(in_s));
}

std::string format_word(const SignedWord& w) {
  const bool compact = std::ranges::all_of(w.letters(), [](const std::string& l) { return l.size() == 1; });
  std::string out;
  for (int k = 1; k <= w.size(); ++k) {
    if (!compact && k > 1) out += ' ';
    out += w.letter(k);
    if (!w.in_s(k)) out += '+';
  }
  return out;
}

bool is_full(const SignedWord& w) {
  const std::set<std::string> used(w.letters().begin(), w.letters().end());
  return std::ranges::all_of(w.alphabet(), [&](const std::string& l) { return used.contains(l); });
}

bool is_odd(const SignedWord& w) {
  std::map<std::string, int> unmarked;
  for (const auto& l : w.alphabet()) unmarked[l] = 0;
  for (int k = 1; k <= w.size(); ++k)
    if (w.in_s(k)) ++unmarked[w.letter(k)];
  return std::ranges::all_of(unmarked, [](const auto& entry) { return entry.second % 2 == 1; });
}

SignedWord circular_shift(const SignedWord& w, long long j) {
  const int n = w.size();
  if (n == 0) return w;
  std::vector<std::string> letters(static_cast<std::size_t>(n));
  std::vector<bool> in_s(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    long long to = (k - 1 + j) % n;
    if (to < 0) to += n;
    letters[static_cast<std::size_t>(to)] = w.letter(k);
    in_s[static_cast<std::size_t>(to)] = w.in_s(k);
  }
  return SignedWord(std::move(letters), std::move(in_s), w.alphabet());
}

std::size_t CongruenceKeyHash::operator()(const CongruenceKey& key) const noexcept {
  std::size_t h = key.classes.size();
  for (std::size_t i = 0; i < key.classes.size(); ++i) {
    const std::size_t v = static_cast<std::size_t>(key.classes[i]) * 2 + (key.in_s[i] ? 1 : 0);
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

CongruenceKey congruence_key(const SignedWord& w) {
  if (!is_full(w)) throw NotFullWord();
  CongruenceKey key;
  std::map<std::string, int> ids;
  for (int k = 1; k <= w.size(); ++k) {
    const auto [it, inserted] = ids.try_emplace(w.letter(k), static_cast<int>(ids.size()));
    key.classes.push_back(it->second);
  }
  key.in_s = w.marks();
  return key;
}

bool congruent(const SignedWord& a, const SignedWord& b) { return congruence_key(a) == congruence_key(b); }

SignedWord word_from_key(const CongruenceKey& key) {
  std::vector<std::string> letters;
  letters.reserve(key.classes.size());
  for (int c : key.classes) letters.push_back(letter_name(c));
  return SignedWord(std::move(letters), key.in_s);
}

std::string letter_name(int id) {
  if (id < 0) throw Error("letter ids are non-negative");
  std::string out;
  for (int v = id + 1; v > 0; v = (v - 1) / 26) out.insert(out.begin(), static_cast<char>('A' + (v - 1) % 26));
  return out;
}

SignedWord word_of_chart(const Chart& c) {
  const OrbitPartition orbits = orbit_partition(c);
  std::vector<std::string> letters;
  std::vector<bool> in_s;
  for (int k = 1; k <= c.size(); ++k) {
    letters.push_back(letter_name(orbits.orbit_of(k)));
    in_s.push_back(c(k) < 0);
  }
  return SignedWord(std::move(letters), std::move(in_s));
}

SignedWord word_of_semichart(const Semichart& s) {
  const auto orbits = semichart_orbits(s);
  std::vector<int> id(static_cast<std::size_t>(s.size()));
  for (std::size_t o = 0; o < orbits.size(); ++o)
    for (int k : orbits[o]) id[static_cast<std::size_t>(k - 1)] = static_cast<int>(o);
  std::vector<std::string> letters;
  std::vector<bool> in_s;
  for (int k = 1; k <= s.size(); ++k) {
    letters.push_back(letter_name(id[static_cast<std::size_t>(k - 1)]));
    in_s.push_back(s.in_s(k));
  }
  return SignedWord(std::move(letters), std::move(in_s));
}

namespace {

// Positions grouped by letter, in order of first occurrence; each group ascending.
std::vector<std::vector<int>> letter_classes(const SignedWord& w) {
  std::map<std::string, std::size_t> ids;
  std::vector<std::vector<int>> classes;
  for (int k = 1; k <= w.size(); ++k) {
    const auto [it, inserted] = ids.try_emplace(w.letter(k), classes.size());
    if (inserted) classes.emplace_back();
    classes[it->second].push_back(k);
  }
  return classes;
}

}  // namespace

Chart realize_word(const SignedWord& w) {
  if (!is_full(w)) throw NotFullWord();
  const int n = w.size();
  std::vector<int> images(static_cast<std::size_t>(2 * n));
  auto set = [&](int from, int to) { images[static_cast<std::size_t>(SignedIndexMap::index_of(n, from))] = to; };
  for (const auto& cls : letter_classes(w)) {
    std::vector<int> marked;
    std::vector<int> unmarked;
    for (int k : cls) (w.in_s(k) ? unmarked : marked).push_back(k);
    if (unmarked.empty()) throw NotRealizable(w.letter(cls.front()));
    // a_1 .. a_q, then a_{q+i}, -a_{q+i} for each element of S, then -a_q .. -a_1.
    std::vector<int> cycle(marked.begin(), marked.end());
    for (int a : unmarked) {
      cycle.push_back(a);
      cycle.push_back(-a);
    }
    for (auto it = marked.rbegin(); it != marked.rend(); ++it) cycle.push_back(-*it);
    for (std::size_t i = 0; i < cycle.size(); ++i) set(cycle[i], cycle[(i + 1) % cycle.size()]);
  }
  return validate_chart(SignedIndexMap::from_images(n, std::move(images)));
}

std::vector<int> coherent_successor(const SignedWord& w) {
  std::vector<int> v(static_cast<std::size_t>(w.size()));
  for (const auto& cls : letter_classes(w))
    for (std::size_t i = 0; i < cls.size(); ++i)
      v[static_cast<std::size_t>(cls[i] - 1)] = cls[(i + 1) % cls.size()];
  return v;
}

Semichart realize_coherent(const SignedWord& w) {
  if (!is_full(w)) throw NotFullWord();
  if (!is_odd(w)) throw NotOddWord();
  return Semichart::make(w.size(), coherent_successor(w), w.subset());
}

Chart realize_unsigned(const SignedWord& w) {
  if (!is_full(w)) throw NotFullWord();
  const int n = w.size();
  for (int k = 1; k <= n; ++k)
    if (!w.in_s(k)) throw SPresent();
  const std::vector<int> v = coherent_successor(w);
  std::vector<int> images(static_cast<std::size_t>(2 * n));
  for (int k = 1; k <= n; ++k) {
    images[static_cast<std::size_t>(k - 1)] = -k;
    images[static_cast<std::size_t>(n + k - 1)] = v[static_cast<std::size_t>(k - 1)];
  }
  return validate_chart(SignedIndexMap::from_images(n, std::move(images)));
}

bool is_gauss_word(const SignedWord& w) {
  std::map<std::string, std::pair<int, int>> counts;  // occurrences, unmarked occurrences
  for (int k = 1; k <= w.size(); ++k) {
    auto& [total, unmarked] = counts[w.letter(k)];
    ++total;
    if (w.in_s(k)) ++unmarked;
  }
  return std::ranges::all_of(counts, [](const auto& e) { return e.second.first == 2 && e.second.second == 1; });
}

SignedWord christoffel(int p, int n) {
  if (p < 1 || n < 1 || p > n || std::gcd(p, n) != 1) throw NotCoprime(p, n);
  std::vector<std::string> letters(static_cast<std::size_t>(n), "A");
  std::vector<bool> in_s(static_cast<std::size_t>(n));
  const long long pp = p;
  for (int i = 1; i <= n; ++i) in_s[static_cast<std::size_t>(i - 1)] = (i * pp) / n == ((i - 1) * pp) / n + 1;
  return SignedWord(std::move(letters), std::move(in_s));
}

}  // namespace chartlab
