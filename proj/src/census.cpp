#include "chartlab/census.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <map>
#include <cstdlib>
#include <mutex>
#include <numeric>
#include <string>
#include <thread>
#include <vector>

#include "chartlab/chart_ops.hpp"
#include "chartlab/errors.hpp"
#include "chartlab/symmetry.hpp"

namespace chartlab {

std::string_view to_string(CensusKind kind) { return kind == CensusKind::charts ? "charts" : "semicharts"; }

std::string_view to_string(CurveClass cls) {
  switch (cls) {
    case CurveClass::all: return "all";
    case CurveClass::straight: return "straight";
    case CurveClass::generic: return "generic";
    case CurveClass::alternating: return "alternating";
    case CurveClass::beaming: return "beaming";
    case CurveClass::coherent: return "coherent";
    case CurveClass::perfect: return "perfect";
  }
  return "all";
}

CensusKind parse_census_kind(std::string_view text) {
  if (text == "charts" || text == "chart") return CensusKind::charts;
  if (text == "semicharts" || text == "semichart") return CensusKind::semicharts;
  throw SyntaxError("unknown census kind '" + std::string(text) + "'", 0);
}

CurveClass parse_curve_class(std::string_view text) {
  for (auto cls : {CurveClass::all, CurveClass::straight, CurveClass::generic, CurveClass::alternating,
                   CurveClass::beaming, CurveClass::coherent, CurveClass::perfect})
    if (text == to_string(cls)) return cls;
  throw SyntaxError("unknown curve class '" + std::string(text) + "'", 0);
}

bool applies_to(CurveClass cls, CensusKind kind) {
  switch (cls) {
    case CurveClass::straight: return kind == CensusKind::charts;
    case CurveClass::coherent:
    case CurveClass::perfect: return kind == CensusKind::semicharts;
    default: return true;
  }
}

bool CensusResult::burnside_balanced() const {
  const long long n = profile.n();
  if (n == 0) return raw_count == 1 && class_count == 1;
  return Rational(BigInt(raw_count)) == weighted_sum * n;
}

bool CensusResult::verified() const {
  if (!conjugation_invariant()) return BigInt(raw_count) == predicted_raw;
  return burnside_balanced() && weighted_sum == predicted_weighted && BigInt(raw_count) == predicted_raw;
}

int census_bound(CensusKind kind, const CensusOptions& options) {
  if (options.max_n) return *options.max_n;
  if (const char* env = std::getenv("CHARTLAB_MAX_N"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != nullptr && *end == '\0' && value >= 0) return static_cast<int>(value);
  }
  return kind == CensusKind::charts ? 7 : 8;
}

namespace {

using Partition = std::vector<std::vector<int>>;

// Set partitions of {1..n} whose block sizes match the profile.  Blocks are
// listed by their least element.
void partitions_rec(std::vector<long long>& remaining, std::vector<bool>& used, int n, Partition& current,
                    std::vector<Partition>& out) {
  int first = 0;
  for (int k = 1; k <= n; ++k)
    if (!used[static_cast<std::size_t>(k)]) {
      first = k;
      break;
    }
  if (first == 0) {
    out.push_back(current);
    return;
  }
  used[static_cast<std::size_t>(first)] = true;
  for (std::size_t s = 0; s < remaining.size(); ++s) {
    if (remaining[s] == 0) continue;
    const int size = static_cast<int>(s) + 1;
    --remaining[s];
    std::vector<int> block{first};
    // choose size-1 further elements above `first`, in increasing order
    auto choose = [&](auto&& self, int from) -> void {
      if (static_cast<int>(block.size()) == size) {
        current.push_back(block);
        partitions_rec(remaining, used, n, current, out);
        current.pop_back();
        return;
      }
      for (int k = from; k <= n; ++k) {
        if (used[static_cast<std::size_t>(k)]) continue;
        used[static_cast<std::size_t>(k)] = true;
        block.push_back(k);
        self(self, k + 1);
        block.pop_back();
        used[static_cast<std::size_t>(k)] = false;
      }
    };
    choose(choose, first + 1);
    ++remaining[s];
  }
  used[static_cast<std::size_t>(first)] = false;
}

std::vector<Partition> set_partitions(const Profile& profile) {
  const int n = static_cast<int>(profile.n());
  std::vector<long long> remaining = profile.counts();
  std::vector<bool> used(static_cast<std::size_t>(n + 1), false);
  Partition current;
  std::vector<Partition> out;
  partitions_rec(remaining, used, n, current, out);
  return out;
}

constexpr int kMaxN = 16;

// Conjugation by sigma^j moves every "relative code" of an element (the sign
// flip and the cyclic offset from x to t(x)) to the element sigma^j(x).
// Reading the codes of +k and -k for k = 1..n gives a word on which
// conjugation acts by rotation, so conjugacy classes are necklaces and a
// chart is its class's representative iff its word is the least rotation.
inline int relative_code(int x, int y, int n) {
  const int flip = (x > 0) != (y > 0) ? n : 0;
  const int offset = ((std::abs(y) - std::abs(x)) % n + n) % n;
  return flip + offset;
}

struct KeyScan {
  bool minimal;
  int stabilizer;
};

// Symbols fit a byte for n <= 8; larger n falls back to a symbol array.
KeyScan scan_rotations(const int* codes, int n) {
  std::array<int, kMaxN> sym{};
  for (int k = 0; k < n; ++k) sym[static_cast<std::size_t>(k)] = codes[k] * 2 * n + codes[n + k];
  if (n <= 8) {
    std::uint64_t key = 0;
    for (int k = 0; k < n; ++k) key = (key << 8) | static_cast<std::uint64_t>(sym[static_cast<std::size_t>(k)]);
    const int width = 8 * n;
    const std::uint64_t mask = width == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << width) - 1);
    int stabilizer = 1;
    for (int j = 1; j < n; ++j) {
      const std::uint64_t rotated = ((key << (8 * j)) | (key >> (width - 8 * j))) & mask;
      if (rotated < key) return {false, 0};
      if (rotated == key) ++stabilizer;
    }
    return {true, stabilizer};
  }
  int stabilizer = 1;
  for (int j = 1; j < n; ++j) {
    int cmp = 0;
    for (int i = 0; i < n && cmp == 0; ++i) {
      const int a = sym[static_cast<std::size_t>((i + j) % n)];
      const int b = sym[static_cast<std::size_t>(i)];
      cmp = a < b ? -1 : (a > b ? 1 : 0);
    }
    if (cmp < 0) return {false, 0};
    if (cmp == 0) ++stabilizer;
  }
  return {true, stabilizer};
}

std::uint64_t factorial_u64(int k) {
  std::uint64_t r = 1;
  for (int i = 2; i <= k; ++i) r *= static_cast<std::uint64_t>(i);
  return r;
}

// Depth-first walk over one single cycle on +-A per block.  Each step fixes
// t(cur) and hence cur's relative code.  With pruning on, a branch where some
// positive element gets a smaller code than +1 is dropped (its charts are
// never least rotations) and only its size is recorded.
template <class Leaf>
class CycleWalker {
 public:
  CycleWalker(int n, const Partition& partition, bool prune, Leaf& leaf)
      : n_(n), prune_(prune), leaf_(leaf) {
    for (const auto& block : partition) {
      Block b;
      b.start = flat(block.front());
      for (int a : block) b.members |= bit(flat(a)) | bit(flat(-a));
      b.members &= ~bit(b.start);
      b.completions = factorial_u64(2 * static_cast<int>(block.size()) - 1);
      blocks_.push_back(b);
    }
    for (std::size_t b = blocks_.size(); b-- > 0;)
      blocks_[b].after = b + 1 < blocks_.size() ? blocks_[b + 1].after * blocks_[b + 1].completions : 1;
    for (int from = 0; from < 2 * n; ++from)
      for (int to = 0; to < 2 * n; ++to)
        table_[static_cast<std::size_t>(from * 2 * n + to)] =
            relative_code(SignedIndexMap::element_at(n, from), SignedIndexMap::element_at(n, to), n);
  }

  // Runs every chart, or only those with t(+first) = first_image when given.
  void run(int first_image = 0) {
    first_image_ = first_image == 0 ? -1 : flat(first_image);
    block(0);
  }

  int size() const { return n_; }
  const int* images() const { return images_.data(); }
  const int* codes() const { return codes_.data(); }
  std::uint64_t pruned() const { return pruned_; }

  // Candidate images of the first element of the first block (task split).
  std::vector<int> first_choices() const {
    std::vector<int> out;
    if (blocks_.empty()) return {0};
    for (std::uint32_t m = blocks_[0].members; m != 0; m &= m - 1)
      out.push_back(SignedIndexMap::element_at(n_, std::countr_zero(m)));
    return out;
  }

 private:
  struct Block {
    int start = 0;
    std::uint32_t members = 0;
    std::uint64_t completions = 1;  // single cycles on this block
    std::uint64_t after = 1;        // charts on the blocks behind this one
  };

  static std::uint32_t bit(int i) { return std::uint32_t{1} << i; }
  int flat(int x) const { return SignedIndexMap::index_of(n_, x); }

  void block(std::size_t b) {
    if (b == blocks_.size()) {
      leaf_(*this);
      return;
    }
    step(b, blocks_[b].start, blocks_[b].members);
  }

  // `cur` is a flat index whose image is chosen next; `left` the unused elements.
  void step(std::size_t b, int cur, std::uint32_t left) {
    const Block& blk = blocks_[b];
    if (left == 0) {
      if (assign(cur, blk.start)) block(b + 1);
      else pruned_ += blk.after;
      known_ &= ~bit(cur);
      return;
    }
    std::uint32_t candidates = left;
    if (b == 0 && cur == blk.start && first_image_ >= 0) candidates &= bit(first_image_);
    const int remaining = std::popcount(left) - 1;
    for (; candidates != 0; candidates &= candidates - 1) {
      const int next = std::countr_zero(candidates);
      if (assign(cur, next)) step(b, next, left & ~bit(next));
      else pruned_ += factorial_u64(remaining) * blk.after;
    }
    known_ &= ~bit(cur);
  }

  // Sets t(cur) = next; false when the partial chart cannot be a least rotation.
  bool assign(int cur, int next) {
    images_[static_cast<std::size_t>(cur)] = SignedIndexMap::element_at(n_, next);
    const int code = table_[static_cast<std::size_t>(cur * 2 * n_ + next)];
    codes_[static_cast<std::size_t>(cur)] = code;
    known_ |= bit(cur);
    if (!prune_) return true;
    const int p = cur < n_ ? cur : cur - n_;
    if (p != 0) return !undercuts(p);
    for (int q = 1; q < n_; ++q)
      if (undercuts(q)) return false;
    return true;
  }

  // Position q's symbol (code(+q), code(-q)) may not be below position 1's.
  bool undercuts(int q) const {
    const std::uint32_t plus_pair = bit(q) | bit(0);
    if ((known_ & plus_pair) != plus_pair) return false;
    const int mine = codes_[static_cast<std::size_t>(q)];
    if (mine != codes_[0]) return mine < codes_[0];
    const std::uint32_t minus_pair = bit(n_ + q) | bit(n_);
    if ((known_ & minus_pair) != minus_pair) return false;
    return codes_[static_cast<std::size_t>(n_ + q)] < codes_[static_cast<std::size_t>(n_)];
  }

  int n_;
  bool prune_;
  Leaf& leaf_;
  int first_image_ = -1;
  std::vector<Block> blocks_;
  std::array<int, 4 * kMaxN * kMaxN> table_{};
  std::array<int, 2 * kMaxN> images_{};
  std::array<int, 2 * kMaxN> codes_{};
  std::uint32_t known_ = 0;
  std::uint64_t pruned_ = 0;
};

template <class Visit>
void for_each_chart(const Profile& profile, Visit&& visit) {
  const int n = static_cast<int>(profile.n());
  if (n > kMaxN) throw BoundExceeded(n, kMaxN);
  Chart chart;
  auto& map = detail::ChartAccess::map(chart);
  detail::MapAccess::resize(map, n);
  auto& images = detail::MapAccess::images(map);
  auto leaf = [&](const auto& walker) {
    std::copy_n(walker.images(), 2 * n, images.begin());
    visit(static_cast<const Chart&>(chart));
  };
  if (n == 0) {
    visit(static_cast<const Chart&>(chart));
    return;
  }
  for (const auto& partition : set_partitions(profile)) {
    CycleWalker walker(n, partition, false, leaf);
    walker.run();
  }
}

template <class Visit>
void for_each_semichart(const Profile& profile, Visit&& visit) {
  const int n = static_cast<int>(profile.n());
  if (n > kMaxN) throw BoundExceeded(n, kMaxN);
  Semichart s;
  detail::ChartAccess::resize(s, n);
  if (n == 0) {
    visit(static_cast<const Semichart&>(s));
    return;
  }
  auto& v = detail::ChartAccess::v(s);
  auto& in_s = detail::ChartAccess::in_s(s);
  for (const auto& partition : set_partitions(profile)) {
    // cyclic orders: permutations of each block's tail behind its least element
    std::vector<std::vector<int>> orders = partition;
    auto subsets = [&](auto&& self, std::size_t b) -> void {
      if (b == orders.size()) {
        visit(static_cast<const Semichart&>(s));
        return;
      }
      const auto& block = orders[b];
      const std::size_t m = block.size();
      for (std::uint32_t mask = 0; mask < (1U << m); ++mask) {
        if (std::popcount(mask) % 2 == 0) continue;
        for (std::size_t i = 0; i < m; ++i) in_s[static_cast<std::size_t>(block[i] - 1)] = (mask >> i) & 1U;
        self(self, b + 1);
      }
    };
    auto cycles = [&](auto&& self, std::size_t b) -> void {
      if (b == orders.size()) {
        subsets(subsets, 0);
        return;
      }
      auto& block = orders[b];
      std::sort(block.begin() + 1, block.end());
      do {
        for (std::size_t i = 0; i < block.size(); ++i)
          v[static_cast<std::size_t>(block[i] - 1)] = block[(i + 1) % block.size()];
        self(self, b + 1);
      } while (std::next_permutation(block.begin() + 1, block.end()));
    };
    cycles(cycles, 0);
  }
}

bool chart_in_class(const Chart& c, CurveClass cls) {
  switch (cls) {
    case CurveClass::all: return true;
    case CurveClass::straight: return is_straight(c);
    case CurveClass::generic: return is_generic(c);
    case CurveClass::alternating: return is_alternating(c);
    case CurveClass::beaming: return is_beaming(c);
    default: throw Error("class '" + std::string(to_string(cls)) + "' does not apply to charts");
  }
}

bool semichart_in_class(const Semichart& s, CurveClass cls) {
  switch (cls) {
    case CurveClass::all: return true;
    case CurveClass::generic: return is_generic(s);
    case CurveClass::alternating: return is_alternating(s);
    case CurveClass::beaming: return is_beaming(s);
    case CurveClass::coherent: return is_coherent(s);
    case CurveClass::perfect: return is_perfect(s);
    default: throw Error("class '" + std::string(to_string(cls)) + "' does not apply to semicharts");
  }
}

struct Tally {
  std::uint64_t raw = 0;
  std::array<std::uint64_t, kMaxN + 1> by_order{};

  void add(const KeyScan& scan) {
    if (scan.minimal) ++by_order[static_cast<std::size_t>(scan.stabilizer)];
  }
  void merge(const Tally& other) {
    raw += other.raw;
    for (std::size_t i = 0; i < by_order.size(); ++i) by_order[i] += other.by_order[i];
  }
};

void codes_of(std::span<const int> images, int n, int* codes) {
  for (int i = 0; i < 2 * n; ++i)
    codes[i] = relative_code(SignedIndexMap::element_at(n, i), images[static_cast<std::size_t>(i)], n);
}

// The hot path: every chart of the profile, pruned to least rotations.
Tally chart_tally(const Profile& profile, int threads) {
  const int n = static_cast<int>(profile.n());
  struct Task {
    const Partition* partition;
    int first_image;
  };
  const std::vector<Partition> partitions = set_partitions(profile);
  std::vector<Task> tasks;
  for (const auto& partition : partitions) {
    auto noop = [](const auto&) {};
    CycleWalker probe(n, partition, true, noop);
    for (int image : probe.first_choices()) tasks.push_back({&partition, image});
  }

  std::atomic<std::size_t> next{0};
  std::mutex merge_lock;
  Tally total;
  auto worker = [&] {
    Tally local;
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      auto leaf = [&](const auto& walker) {
        ++local.raw;
        local.add(scan_rotations(walker.codes(), n));
      };
      CycleWalker walker(n, *tasks[i].partition, true, leaf);
      walker.run(tasks[i].first_image);
      local.raw += walker.pruned();
    }
    std::lock_guard lock(merge_lock);
    total.merge(local);
  };
  const int count = std::max(1, std::min<int>(threads, static_cast<int>(tasks.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < count; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return total;
}

BigInt block_choices(const Profile& profile) {
  BigInt ways = factorial(profile.n());
  for (int m = 1; m <= profile.max_multiplicity(); ++m) {
    const long long k = profile.k(m);
    BigInt denom = factorial(k);
    for (long long i = 0; i < k; ++i) denom *= factorial(m);
    ways /= denom;
  }
  return ways;
}

BigInt per_block_count(int m, CensusKind kind, CurveClass cls) {
  const BigInt two_pow = BigInt(1) << (m - 1);
  const BigInt straight = two_pow * factorial(m - 1);
  switch (cls) {
    case CurveClass::all: return kind == CensusKind::charts ? factorial(2 * m - 1) : straight;
    case CurveClass::straight: return straight;
    case CurveClass::generic: return m <= 2 ? straight : BigInt(0);
    case CurveClass::alternating:
      if (kind == CensusKind::charts) return factorial(m) * factorial(m - 1);
      return m % 2 == 1 ? factorial(m - 1) : BigInt(0);
    case CurveClass::beaming:
      if (kind == CensusKind::charts) return factorial(m) * factorial(m);
      return factorial(m);
    case CurveClass::coherent: return two_pow;
    case CurveClass::perfect: return 1;
  }
  return 0;
}

void check_bound(const Profile& profile, CensusKind kind, const CensusOptions& options) {
  const int bound = census_bound(kind, options);
  if (profile.n() > bound) throw BoundExceeded(static_cast<int>(profile.n()), bound);
}

void fill_from_tally(CensusResult& result, const Tally& tally) {
  result.raw_count = tally.raw;
  result.weighted_sum = 0;
  for (std::size_t d = 1; d < tally.by_order.size(); ++d) {
    if (tally.by_order[d] == 0) continue;
    result.class_count += tally.by_order[d];
    result.classes_by_aut_order[static_cast<int>(d)] = tally.by_order[d];
    result.weighted_sum += Rational(BigInt(tally.by_order[d]), BigInt(d));
  }
}

}  // namespace

void enumerate_charts(const Profile& profile, const std::function<void(const Chart&)>& visit) {
  for_each_chart(profile, visit);
}

void enumerate_semicharts(const Profile& profile, const std::function<void(const Semichart&)>& visit) {
  for_each_semichart(profile, visit);
}

BigInt predicted_raw_count(const Profile& profile, CensusKind kind, CurveClass cls) {
  if (!applies_to(cls, kind))
    throw Error("class '" + std::string(to_string(cls)) + "' does not apply to " + std::string(to_string(kind)));
  BigInt total = block_choices(profile);
  for (int m = 1; m <= profile.max_multiplicity(); ++m)
    for (long long i = 0; i < profile.k(m); ++i) total *= per_block_count(m, kind, cls);
  return total;
}

Rational predicted_weighted_sum(const Profile& profile, CensusKind kind) {
  const long long n = profile.n();
  if (n == 0) return 1;
  Rational total = Rational(factorial(n - 1));
  for (int m = 1; m <= profile.max_multiplicity(); ++m) {
    const long long k = profile.k(m);
    if (k == 0) continue;
    const Rational base = kind == CensusKind::charts
                              ? Rational(factorial(2 * m - 1), factorial(m))
                              : Rational(BigInt(1) << (m - 1), BigInt(m));
    Rational power = 1;
    for (long long i = 0; i < k; ++i) power *= base;
    total *= power / Rational(factorial(k));
  }
  return total;
}

CensusResult census(const Profile& profile, CensusKind kind, const CensusOptions& options) {
  return class_census(profile, kind, CurveClass::all, options);
}

CensusResult class_census(const Profile& profile, CensusKind kind, CurveClass cls, const CensusOptions& options) {
  if (!applies_to(cls, kind))
    throw Error("class '" + std::string(to_string(cls)) + "' does not apply to " + std::string(to_string(kind)));
  check_bound(profile, kind, options);
  const int n = static_cast<int>(profile.n());
  CensusResult result;
  result.profile = profile;
  result.kind = kind;
  result.curve_class = cls;
  result.predicted_raw = predicted_raw_count(profile, kind, cls);
  if (cls == CurveClass::all)
    result.predicted_weighted = predicted_weighted_sum(profile, kind);
  else
    result.predicted_weighted = n == 0 ? Rational(result.predicted_raw) : Rational(result.predicted_raw, BigInt(n));

  Tally tally;
  if (n == 0) {
    tally.raw = 1;
    tally.by_order[1] = 1;
  } else if (kind == CensusKind::charts && cls == CurveClass::all) {
    tally = chart_tally(profile, std::max(1, options.threads));
  } else if (kind == CensusKind::charts) {
    std::array<int, 2 * kMaxN> codes{};
    for_each_chart(profile, [&](const Chart& c) {
      if (!chart_in_class(c, cls)) return;
      ++tally.raw;
      codes_of(c.images(), n, codes.data());
      tally.add(scan_rotations(codes.data(), n));
    });
  } else if (!result.conjugation_invariant()) {
    // Perfection depends on where the curve is pointed, so a class is
    // counted once when any of its members qualifies.
    std::map<Chart, int> classes;
    for_each_semichart(profile, [&](const Semichart& s) {
      if (!semichart_in_class(s, cls)) return;
      ++tally.raw;
      const Chart c = semichart_to_chart(s);
      const Chart canon = canonical_form(c);
      if (!classes.contains(canon)) classes.emplace(canon, aut_chart(c).order);
    });
    for (const auto& [canon, order] : classes) ++tally.by_order[static_cast<std::size_t>(order)];
  } else {
    std::array<int, 2 * kMaxN> codes{};
    std::array<int, 2 * kMaxN> images{};
    for_each_semichart(profile, [&](const Semichart& s) {
      if (!semichart_in_class(s, cls)) return;
      ++tally.raw;
      for (int k = 1; k <= n; ++k) {
        const int image = s.in_s(k) ? -s.v(k) : s.v(k);
        images[static_cast<std::size_t>(k - 1)] = image;
        images[static_cast<std::size_t>(n + k - 1)] = -image;
      }
      codes_of(std::span<const int>(images.data(), static_cast<std::size_t>(2 * n)), n, codes.data());
      tally.add(scan_rotations(codes.data(), n));
    });
  }
  fill_from_tally(result, tally);
  return result;
}

bool gcd_corollary_applies(const Profile& profile, CensusKind kind) {
  long long g = 0;
  for (int m = 1; m <= profile.max_multiplicity(); ++m)
    if (profile.k(m) > 0) g = std::gcd(g, m * profile.k(m));
  if (g == 1) return true;
  if (kind == CensusKind::semicharts)
    for (int m = 1; m <= profile.max_multiplicity(); m *= 2)
      if (profile.k(m) == 1) return true;
  return false;
}

bool verify_gcd_corollaries(const Profile& profile, CensusKind kind, const CensusOptions& options) {
  const CensusResult result = census(profile, kind, options);
  if (!result.verified()) return false;
  if (!gcd_corollary_applies(profile, kind)) return true;
  const bool all_trivial = result.classes_by_aut_order.size() == 1 && result.classes_by_aut_order.begin()->first == 1;
  return all_trivial && Rational(BigInt(result.class_count)) == result.predicted_weighted;
}

}  // namespace chartlab
