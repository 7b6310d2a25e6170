#include "chartlab/genus.hpp"

#include <array>
#include <initializer_list>
#include <string>

#include "chartlab/chart_ops.hpp"
#include "chartlab/errors.hpp"
#include "chartlab/rational.hpp"
#include "chartlab/words.hpp"

namespace chartlab {

namespace {

// Orbits of a bijection of the signed index set given as a callable.
template <class Map>
int count_orbits(int n, Map&& map) {
  std::vector<char> seen(static_cast<std::size_t>(2 * n), 0);
  int count = 0;
  for (int i = 0; i < 2 * n; ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    ++count;
    for (int x = SignedIndexMap::element_at(n, i); !seen[static_cast<std::size_t>(SignedIndexMap::index_of(n, x))];
         x = map(x))
      seen[static_cast<std::size_t>(SignedIndexMap::index_of(n, x))] = 1;
  }
  return count;
}

}  // namespace

GenusReport genus_euler(const Chart& c) {
  GenusReport report;
  const int n = c.size();
  report.n = n;
  if (n == 0) return report;
  // theta(k) = -sigma(k), theta(-k) = sigma^{-1}(k)
  auto theta_of = [n](int r) { return r > 0 ? -(r % n + 1) : (-r + n - 2) % n + 1; };
  report.vertices = count_orbits(n, [&](int r) { return c(r); });
  report.edges = n;
  report.faces = count_orbits(n, [&](int r) { return c(theta_of(r)); });
  const int twice = 2 + n - report.vertices - report.faces;
  if (twice < 0 || twice % 2 != 0)
    throw InternalInvariant("Euler characteristic gives a non-integral genus for n=" + std::to_string(n));
  report.genus_euler = twice / 2;
  return report;
}

namespace {

// Points along the standard cyclic order of {1..n}, measured from the first
// point of a chain.  A later point equal to the first one closes the loop.
class CyclicChain {
 public:
  explicit CyclicChain(int n) : n_(n) {}

  // `strict[i]` relates point i to point i+1: true for a strict step, false
  // when the two may coincide.
  bool holds(std::initializer_list<int> points, std::initializer_list<bool> strict) const {
    const int origin = *points.begin();
    int previous = 0;
    auto rel = strict.begin();
    bool first = true;
    for (int p : points) {
      int d = ((p - origin) % n_ + n_) % n_;
      if (!first && p == origin) d = n_;
      if (!first) {
        if (*rel ? d <= previous : d < previous) return false;
        ++rel;
      }
      previous = d;
      first = false;
    }
    return true;
  }

 private:
  int n_;
};

// Elements r with k < r < l in the standard cyclic order; everything but k when k = l.
std::vector<int> window(int k, int l, int n) {
  std::vector<int> out;
  for (int r = k % n + 1; r != l; r = r % n + 1) out.push_back(r);
  return out;
}

class OrbitOrder {
 public:
  explicit OrbitOrder(const Chart& c) : orbits_(orbit_partition(c)) {}

  int delta(int r1, int r2, int r3) const {
    if (r1 == r2 || r2 == r3 || r1 == r3) return 0;
    const int o = orbits_.orbit_of(r1);
    if (orbits_.orbit_of(r2) != o || orbits_.orbit_of(r3) != o) return 0;
    const int len = static_cast<int>(orbits_.orbits[static_cast<std::size_t>(o)].size());
    const int p1 = orbits_.position_of(r1);
    const int d2 = (orbits_.position_of(r2) - p1 + len) % len;
    const int d3 = (orbits_.position_of(r3) - p1 + len) % len;
    return d2 < d3 ? 1 : 0;
  }

  int bracket(int r1, int r2, int r3, int r4) const {
    return delta(r1, r3, r2) * delta(r2, r4, r1) - delta(r1, r4, r2) * delta(r2, r3, r1);
  }

  int successor(int k) const {
    const int n = orbits_.n;
    const int o = orbits_.orbit_of(k);
    for (int r = k % n + 1;; r = r % n + 1)
      if (orbits_.orbit_of(r) == o) return r;
  }

 private:
  OrbitPartition orbits_;
};

long long correction(const OrbitOrder& ord, const CyclicChain& chain, int k, int kp, int l, int lp) {
  if (k == l) return 0;
  constexpr bool lt = true;
  constexpr bool le = false;
  std::array<long long, 6> values{};
  std::array<bool, 6> fired{};
  fired[0] = chain.holds({k, kp, l, lp, k}, {lt, le, lt, le});
  values[0] = ord.bracket(-kp, k, -lp, l);
  fired[1] = chain.holds({k, l, lp, kp}, {lt, lt, lt});
  values[1] = -ord.bracket(-lp, l, -l, lp);
  fired[2] = chain.holds({l, k, kp, lp}, {lt, lt, lt});
  values[2] = ord.bracket(-kp, k, -k, kp);
  fired[3] = chain.holds({k, lp, l, kp, k}, {lt, le, lt, le});
  values[3] = ord.bracket(-kp, k, -k, kp) - ord.bracket(-lp, l, -l, lp);
  fired[4] = chain.holds({k, l, kp, lp, k}, {lt, lt, lt, lt});
  values[4] = ord.delta(l, -l, -lp) - ord.delta(k, -kp, kp);
  fired[5] = chain.holds({l, k, lp, kp, l}, {lt, lt, lt, lt});
  values[5] = ord.delta(l, -lp, lp) - ord.delta(k, -k, -kp);

  int count = 0;
  long long value = 0;
  for (std::size_t i = 0; i < fired.size(); ++i) {
    if (!fired[i]) continue;
    ++count;
    value = values[i];
  }
  if (count != 1)
    throw InternalInvariant(std::to_string(count) + " correction cases apply to (k,l)=(" +
                            std::to_string(k) + "," + std::to_string(l) + ")");
  return value;
}

template <class T>
int bareiss_rank(std::vector<std::vector<T>>& m, bool& overflow) {
  const std::size_t n = m.size();
  std::size_t rank = 0;
  T previous = 1;
  for (std::size_t col = 0; col < n && rank < n; ++col) {
    std::size_t pivot = rank;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t i = rank + 1; i < n; ++i) {
      for (std::size_t j = col + 1; j < n; ++j) {
        if constexpr (std::is_same_v<T, long long>) {
          long long a = 0;
          long long b = 0;
          if (__builtin_mul_overflow(m[i][j], m[rank][col], &a) ||
              __builtin_mul_overflow(m[i][col], m[rank][j], &b) || __builtin_sub_overflow(a, b, &a)) {
            overflow = true;
            return 0;
          }
          m[i][j] = a / previous;
        } else {
          m[i][j] = (m[i][j] * m[rank][col] - m[i][col] * m[rank][j]) / previous;
        }
      }
      m[i][col] = 0;
    }
    previous = m[rank][col];
    ++rank;
  }
  return static_cast<int>(rank);
}

}  // namespace

IntersectionMatrix intersection_matrix(const Chart& c) {
  const int n = c.size();
  if (n < 1) throw Error("the intersection matrix needs n >= 1");
  const OrbitOrder ord(c);
  const CyclicChain chain(n);
  std::vector<int> plus(static_cast<std::size_t>(n + 1));
  std::vector<std::vector<int>> windows(static_cast<std::size_t>(n + 1));
  for (int k = 1; k <= n; ++k) {
    plus[static_cast<std::size_t>(k)] = ord.successor(k);
    windows[static_cast<std::size_t>(k)] = window(k, plus[static_cast<std::size_t>(k)], n);
  }

  IntersectionMatrix b(n);
  for (int k = 1; k <= n; ++k) {
    const int kp = plus[static_cast<std::size_t>(k)];
    const auto& wk = windows[static_cast<std::size_t>(k)];
    for (int l = 1; l <= n; ++l) {
      const int lp = plus[static_cast<std::size_t>(l)];
      const auto& wl = windows[static_cast<std::size_t>(l)];
      long long sum = 0;
      for (int q : wk)
        for (int r : wl) sum += ord.bracket(-q, q, -r, r);
      for (int r : wl) sum += ord.bracket(-kp, k, -r, r);
      for (int q : wk) sum += ord.bracket(-q, q, -lp, l);
      b(k, l) = sum + correction(ord, chain, k, kp, l, lp);
    }
  }
  return b;
}

int integer_rank(const IntegerMatrix& m) {
  const int n = m.size();
  std::vector<std::vector<long long>> small(static_cast<std::size_t>(n), std::vector<long long>(static_cast<std::size_t>(n)));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) small[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = m(i, j);
  bool overflow = false;
  const int rank = bareiss_rank(small, overflow);
  if (!overflow) return rank;

  std::vector<std::vector<BigInt>> big(static_cast<std::size_t>(n), std::vector<BigInt>(static_cast<std::size_t>(n)));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) big[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = m(i, j);
  return bareiss_rank(big, overflow);
}

int genus_rank(const Chart& c) {
  const int rank = integer_rank(intersection_matrix(c));
  if (rank % 2 != 0) throw InternalInvariant("odd rank of the intersection matrix");
  return rank / 2;
}

bool BitMatrix::is_zero() const {
  for (auto w : rows_)
    if (w != 0) return false;
  return true;
}

int gf2_rank(BitMatrix m) {
  int rank = 0;
  const auto words = static_cast<std::size_t>(m.words_);
  auto row = [&](int r) { return m.rows_.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(r) * words); };
  for (int col = 0; col < m.n_ && rank < m.n_; ++col) {
    const std::size_t w = static_cast<std::size_t>(col / 64);
    const std::uint64_t bit = std::uint64_t{1} << (col % 64);
    int pivot = rank;
    while (pivot < m.n_ && !(row(pivot)[static_cast<std::ptrdiff_t>(w)] & bit)) ++pivot;
    if (pivot == m.n_) continue;
    std::swap_ranges(row(pivot), row(pivot) + static_cast<std::ptrdiff_t>(words), row(rank));
    for (int r = 0; r < m.n_; ++r) {
      if (r == rank || !(row(r)[static_cast<std::ptrdiff_t>(w)] & bit)) continue;
      for (std::size_t i = 0; i < words; ++i)
        row(r)[static_cast<std::ptrdiff_t>(i)] ^= row(rank)[static_cast<std::ptrdiff_t>(i)];
    }
    ++rank;
  }
  return rank;
}

WordMatrix word_matrix(const SignedWord& w) {
  if (!is_full(w)) throw NotFullWord();
  if (!is_odd(w)) throw NotOddWord();
  const int n = w.size();
  const std::vector<int> plus = coherent_successor(w);
  const CyclicChain chain(n);
  auto kplus = [&](int k) { return plus[static_cast<std::size_t>(k - 1)]; };
  auto d = [&](int k) { return w.in_s(k) ? 0 : 1; };
  auto eq = [&](int k, int l) { return k != l && w.letter(k) == w.letter(l) ? 1 : 0; };

  WordMatrix out(n);
  for (int k = 1; k <= n; ++k) {
    const int kp = kplus(k);
    const auto wk = window(k, kp, n);
    for (int l = 1; l <= n; ++l) {
      const int lp = kplus(l);
      const auto wl = window(l, lp, n);
      int sum = 0;
      for (int q : wk)
        for (int r : wl) sum += eq(q, r);
      if (d(k))
        for (int r : wl)
          if (r != kp) sum += eq(k, r);
      if (d(l))
        for (int q : wk)
          if (q != lp) sum += eq(q, l);
      const bool interleaved = chain.holds({k, l, kp, lp, k}, {true, true, true, true}) ||
                               chain.holds({l, k, lp, kp, l}, {true, true, true, true});
      sum += interleaved ? d(k) + d(l) + 1 : eq(k, l) * d(k) * d(l);
      out.set(k, l, sum % 2 != 0);
    }
  }
  return out;
}

int genus_word(const SignedWord& w) {
  const int rank = gf2_rank(word_matrix(w));
  if (rank % 2 != 0) throw InternalInvariant("odd GF(2) rank of the word matrix");
  return rank / 2;
}

bool is_planar(const SignedWord& w) { return word_matrix(w).is_zero(); }

GenusReport genus_report(const Chart& c) {
  GenusReport report = genus_euler(c);
  if (c.size() == 0) return report;
  report.genus_rank = genus_rank(c);
  if (is_straight(c)) {
    const Semichart s = chart_to_semichart(c);
    if (is_coherent(s)) report.genus_gf2 = genus_word(word_of_semichart(s));
  }
  return report;
}

}  // namespace chartlab
