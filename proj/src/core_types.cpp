#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <set>
#include <string>

#include "chartlab/chart.hpp"
#include "chartlab/cyclic_subgroup.hpp"
#include "chartlab/errors.hpp"
#include "chartlab/profile.hpp"
#include "chartlab/rational.hpp"
#include "chartlab/signed_word.hpp"

namespace chartlab {

// ---------------------------------------------------------------- Rational

std::string to_string(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string to_string(const BigInt& v) { return v.str(); }

BigInt factorial(long long n) {
  BigInt result = 1;
  for (long long i = 2; i <= n; ++i) result *= i;
  return result;
}

// ---------------------------------------------------------- CyclicSubgroup

CyclicSubgroup CyclicSubgroup::of_order(int modulus, int order) {
  if (modulus < 0 || order < 1) throw Error("invalid cyclic subgroup parameters");
  if (modulus == 0) {
    if (order != 1) throw Error("the group of the trivial object has order 1");
    return {0, 1, 0};
  }
  if (modulus % order != 0) throw Error("subgroup order must divide the modulus");
  return {modulus, order, (modulus / order) % modulus};
}

bool CyclicSubgroup::contains(long long residue) const {
  if (modulus == 0) return residue == 0;
  long long r = residue % modulus;
  if (r < 0) r += modulus;
  return r % step() == 0;
}

// ----------------------------------------------------------------- Profile

Profile::Profile(std::vector<long long> counts) : counts_(std::move(counts)) {
  for (long long c : counts_)
    if (c < 0) throw Error("profile entries must be non-negative");
  while (!counts_.empty() && counts_.back() == 0) counts_.pop_back();
}

Profile Profile::from_multiplicities(const std::vector<int>& multiplicities) {
  std::vector<long long> counts;
  for (int m : multiplicities) {
    if (m < 1) throw Error("multiplicities are positive");
    if (counts.size() < static_cast<std::size_t>(m)) counts.resize(static_cast<std::size_t>(m), 0);
    ++counts[static_cast<std::size_t>(m - 1)];
  }
  return Profile(std::move(counts));
}

namespace {

long long parse_count(std::string_view text, std::size_t offset) {
  long long value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || value < 0)
    throw SyntaxError("expected a non-negative integer, got '" + std::string(text) + "'", offset);
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Profile Profile::parse(std::string_view text) {
  std::string_view body = trim(text);
  std::size_t base = static_cast<std::size_t>(body.data() - text.data());
  if (!body.empty() && body.front() == '(') {
    if (body.back() != ')') throw SyntaxError("unbalanced parenthesis", base + body.size());
    body = body.substr(1, body.size() - 2);
    ++base;
  }
  std::vector<long long> counts;
  std::vector<bool> assigned;
  std::size_t next_position = 1;
  std::size_t start = 0;
  while (start <= body.size()) {
    std::size_t comma = body.find(',', start);
    if (comma == std::string_view::npos) comma = body.size();
    const std::string_view raw = body.substr(start, comma - start);
    const std::string_view item = trim(raw);
    const std::size_t offset = base + start;
    if (item.empty()) {
      if (body.find_first_not_of(" \t") == std::string_view::npos) break;
      throw SyntaxError("empty profile entry", offset);
    }
    std::size_t m = next_position;
    std::string_view value = item;
    if (const auto eq = item.find('='); eq != std::string_view::npos) {
      std::string_view key = trim(item.substr(0, eq));
      if (key.size() < 2 || (key.front() != 'k' && key.front() != 'K'))
        throw SyntaxError("expected key of the form k<m>", offset);
      const long long mm = parse_count(key.substr(1), offset + 1);
      if (mm < 1) throw SyntaxError("multiplicity index must be at least 1", offset);
      m = static_cast<std::size_t>(mm);
      value = trim(item.substr(eq + 1));
    }
    const long long count = parse_count(value, offset);
    if (counts.size() < m) {
      counts.resize(m, 0);
      assigned.resize(m, false);
    }
    if (assigned[m - 1]) throw SyntaxError("k" + std::to_string(m) + " given twice", offset);
    assigned[m - 1] = true;
    counts[m - 1] = count;
    next_position = m + 1;
    start = comma + 1;
  }
  return Profile(std::move(counts));
}

long long Profile::k(int m) const {
  if (m < 1 || static_cast<std::size_t>(m) > counts_.size()) return 0;
  return counts_[static_cast<std::size_t>(m - 1)];
}

long long Profile::n() const {
  long long total = 0;
  for (std::size_t i = 0; i < counts_.size(); ++i)
    total += static_cast<long long>(i + 1) * counts_[i];
  return total;
}

long long Profile::block_count() const {
  return std::accumulate(counts_.begin(), counts_.end(), 0LL);
}

std::string Profile::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (counts_[i] == 0) continue;
    if (!out.empty()) out += ',';
    out += "k" + std::to_string(i + 1) + "=" + std::to_string(counts_[i]);
  }
  return out;
}

namespace {
void partitions_into(int remaining, int max_part, std::vector<long long>& counts,
                     std::vector<Profile>& out) {
  if (remaining == 0) {
    out.emplace_back(counts);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    ++counts[static_cast<std::size_t>(part - 1)];
    partitions_into(remaining - part, part, counts, out);
    --counts[static_cast<std::size_t>(part - 1)];
  }
}
}  // namespace

std::vector<Profile> profiles_of_size(int n) {
  if (n < 0) throw Error("profile size must be non-negative");
  std::vector<Profile> out;
  std::vector<long long> counts(static_cast<std::size_t>(std::max(n, 1)), 0);
  partitions_into(n, n, counts, out);
  std::sort(out.begin(), out.end());
  return out;
}

// --------------------------------------------------------------- Semichart

Semichart Semichart::make(int n, std::vector<int> v, const std::vector<int>& subset) {
  if (n < 0) throw InvalidSemichart("negative size");
  if (v.size() != static_cast<std::size_t>(n))
    throw InvalidSemichart("permutation has " + std::to_string(v.size()) + " entries, expected " +
                           std::to_string(n));
  std::vector<bool> hit(static_cast<std::size_t>(n), false);
  for (int x : v) {
    if (x < 1 || x > n) throw InvalidSemichart("permutation value " + std::to_string(x) + " out of range");
    if (hit[static_cast<std::size_t>(x - 1)])
      throw InvalidSemichart("permutation value " + std::to_string(x) + " repeated");
    hit[static_cast<std::size_t>(x - 1)] = true;
  }
  std::vector<bool> in_s(static_cast<std::size_t>(n), false);
  for (int x : subset) {
    if (x < 1 || x > n) throw InvalidSemichart("subset element " + std::to_string(x) + " out of range");
    in_s[static_cast<std::size_t>(x - 1)] = true;
  }
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int start = 1; start <= n; ++start) {
    if (seen[static_cast<std::size_t>(start - 1)]) continue;
    int hits = 0;
    for (int k = start; !seen[static_cast<std::size_t>(k - 1)]; k = v[static_cast<std::size_t>(k - 1)]) {
      seen[static_cast<std::size_t>(k - 1)] = true;
      hits += in_s[static_cast<std::size_t>(k - 1)] ? 1 : 0;
    }
    if (hits % 2 == 0)
      throw InvalidSemichart("S meets the orbit of " + std::to_string(start) +
                             " in an even number of elements");
  }
  return detail::ChartAccess::trusted_semichart(n, std::move(v), std::move(in_s));
}

std::vector<int> Semichart::subset() const {
  std::vector<int> out;
  for (int k = 1; k <= n_; ++k)
    if (in_s_[static_cast<std::size_t>(k - 1)]) out.push_back(k);
  return out;
}

// -------------------------------------------------------------- SignedWord

SignedWord::SignedWord(std::vector<std::string> letters, std::vector<bool> in_s)
    : letters_(std::move(letters)), in_s_(std::move(in_s)) {
  if (letters_.size() != in_s_.size()) throw Error("letters and marks differ in length");
  std::set<std::string> seen;
  for (const auto& l : letters_) {
    if (l.empty()) throw Error("letters must be non-empty");
    if (seen.insert(l).second) alphabet_.push_back(l);
  }
}

SignedWord::SignedWord(std::vector<std::string> letters, std::vector<bool> in_s,
                       std::vector<std::string> alphabet)
    : letters_(std::move(letters)), in_s_(std::move(in_s)), alphabet_(std::move(alphabet)) {
  if (letters_.size() != in_s_.size()) throw Error("letters and marks differ in length");
  const std::set<std::string> alpha(alphabet_.begin(), alphabet_.end());
  if (alpha.size() != alphabet_.size()) throw Error("alphabet has repeated letters");
  for (const auto& l : letters_)
    if (!alpha.contains(l)) throw Error("letter '" + l + "' is not in the alphabet");
}

std::vector<int> SignedWord::subset() const {
  std::vector<int> out;
  for (int k = 1; k <= size(); ++k)
    if (in_s(k)) out.push_back(k);
  return out;
}

}  // namespace chartlab
