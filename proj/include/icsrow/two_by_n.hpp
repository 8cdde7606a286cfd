#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "icsrow/convex.hpp"
#include "icsrow/poset.hpp"

namespace icsrow {

// Six-parameter encoding of an interval-closed set of [2]x[n]: on each chain,
// how many elements sit below, in, and above the set. Conventions pin a single
// representation: an empty lower chain is stored as (n,0,0) and an empty upper
// chain as (0,0,n), so equality is structural.
struct ChainTuple {
  int n = 0;
  int b1 = 0, i1 = 0, a1 = 0;
  int b2 = 0, i2 = 0, a2 = 0;

  bool operator==(const ChainTuple&) const = default;

  static ChainTuple of(int n, int b1, int i1, int a1, int b2, int i2, int a2) {
    if (i1 == 0) { b1 = n; a1 = 0; }
    if (i2 == 0) { b2 = 0; a2 = n; }
    ChainTuple t{n, b1, i1, a1, b2, i2, a2};
    if (!t.valid()) throw std::invalid_argument("invalid chain tuple " + t.str());
    return t;
  }

  static ChainTuple empty(int n) { return of(n, n, 0, 0, 0, 0, n); }
  static ChainTuple full(int n) { return of(n, 0, n, 0, 0, n, 0); }
  // Set living on the lower chain only, resp. the upper chain only.
  static ChainTuple lower(int n, int b, int i, int a) { return of(n, b, i, a, 0, 0, n); }
  static ChainTuple upper(int n, int b, int i, int a) { return of(n, n, 0, 0, b, i, a); }
  static ChainTuple lower_singleton(int n, int x) { return lower(n, x - 1, 1, n - x); }
  static ChainTuple upper_singleton(int n, int x) { return upper(n, x - 1, 1, n - x); }

  bool valid() const {
    if (n < 1) return false;
    if (b1 < 0 || i1 < 0 || a1 < 0 || b2 < 0 || i2 < 0 || a2 < 0) return false;
    if (b1 + i1 + a1 != n || b2 + i2 + a2 != n) return false;
    if (i1 == 0 && (b1 != n || a1 != 0)) return false;
    if (i2 == 0 && (b2 != 0 || a2 != n)) return false;
    if (i1 > 0 && i2 > 0 && (b1 < b2 || a2 < a1)) return false;
    return true;
  }

  bool is_lower_singleton() const { return i1 == 1 && i2 == 0; }
  bool is_upper_singleton() const { return i1 == 0 && i2 == 1; }
  bool single_chain() const { return i1 == 0 || i2 == 0; }

  std::string str() const {
    auto side = [](int b, int i, int a) {
      return std::to_string(b) + "," + std::to_string(i) + "," + std::to_string(a);
    };
    std::string lo = i1 == 0 ? "E" : side(b1, i1, a1);
    std::string hi = i2 == 0 ? "E" : side(b2, i2, a2);
    return "[" + lo + ":" + hi + "]";
  }
};

enum class IcsType {
  double_hook,
  disjoint,
  first_hook,
  stacked_or_second_hook,
  low,
  high,
  empty,
  full,
};

inline const char* to_string(IcsType t) {
  switch (t) {
    case IcsType::double_hook: return "double_hook";
    case IcsType::disjoint: return "disjoint";
    case IcsType::first_hook: return "first_hook";
    case IcsType::stacked_or_second_hook: return "stacked_or_second_hook";
    case IcsType::low: return "low";
    case IcsType::high: return "high";
    case IcsType::empty: return "empty";
    case IcsType::full: return "full";
  }
  return "?";
}

inline IcsType classify(const ChainTuple& t) {
  if (!t.valid()) throw std::invalid_argument("classify: invalid tuple");
  if (t.i1 == 0 && t.i2 == 0) return IcsType::empty;
  if (t.i1 == t.n && t.i2 == t.n) return IcsType::full;
  if (t.i2 == 0) return IcsType::low;
  if (t.i1 == 0) return IcsType::high;
  if (t.b1 == t.b2)
    return t.a1 < t.a2 ? IcsType::first_hook : IcsType::stacked_or_second_hook;
  if (t.a1 == t.a2) return IcsType::stacked_or_second_hook;
  return t.b1 >= t.b2 + t.i2 ? IcsType::disjoint : IcsType::double_hook;
}

// One rowmotion step, straight off the transition catalog. Empty and full
// swap with each other before type dispatch.
inline ChainTuple row_step(const ChainTuple& t) {
  const int n = t.n;
  switch (classify(t)) {
    case IcsType::empty:
      return ChainTuple::full(n);
    case IcsType::full:
      return ChainTuple::empty(n);
    case IcsType::double_hook:
      if (t.a1 != 0)  // 1a: shift up
        return ChainTuple::of(n, t.b1 + 1, t.i1, t.a1 - 1, t.b2 + 1, t.i2, t.a2 - 1);
      // 1b
      return ChainTuple::of(n, t.b1 + 1, t.i1 - t.a2, t.a2 - 1, t.b2 + 1, t.i2, t.a2 - 1);
    case IcsType::disjoint:
      if (t.a1 != 0)  // 2a: shift up
        return ChainTuple::of(n, t.b1 + 1, t.i1, t.a1 - 1, t.b2 + 1, t.i2, t.a2 - 1);
      if (t.i1 < t.a2)  // 2b
        return ChainTuple::of(n, t.b2 + 1, t.b1 - (t.b2 + 1), t.i1, t.b2 + 1, t.i2, t.a2 - 1);
      // 2c: i1 == a2
      return ChainTuple::of(n, n, 0, 0, t.b2 + 1, t.i2, t.a2 - 1);
    case IcsType::first_hook:
      if (t.a1 != 0)  // 3a
        return ChainTuple::of(n, t.b1 + 1, t.i1, t.a1 - 1, 0, t.i2 + t.b2 + 1, t.a2 - 1);
      // 3b
      return ChainTuple::of(n, t.b1 + 1, t.i2, t.a2 - 1, 0, t.i2 + t.b2 + 1, t.a2 - 1);
    case IcsType::stacked_or_second_hook:
      if (t.a1 != 0) {
        if (t.b2 != 0)  // 4a
          return ChainTuple::of(n, t.b1 + 1, t.i1, t.a1 - 1, 0, t.b2, n - t.b2);
        // 4b
        return ChainTuple::of(n, t.b1 + 1, t.i1, t.a1 - 1, 0, 0, n);
      }
      if (t.b2 != 0)  // 4c: complement
        return ChainTuple::of(n, 0, t.b1, t.i1, 0, t.b2, t.i2);
      // 4d: complement, b1 > b2 == 0
      return ChainTuple::of(n, 0, t.b1, t.i1, 0, 0, n);
    case IcsType::low:
      if (t.a1 != 0)  // 5a
        return ChainTuple::of(n, t.b1 + 1, t.i1, t.a1 - 1, 0, t.b1 + 1, n - t.b1 - 1);
      // 5b
      return ChainTuple::of(n, n, 0, 0, 0, t.b1 + 1, t.i1 - 1);
    case IcsType::high:
      if (t.a2 != 0)  // 6a (6b is its a2 == 1 instance)
        return ChainTuple::of(n, t.b2 + 1, t.i2 + t.a2 - 1, 0, t.b2 + 1, t.i2, t.a2 - 1);
      if (t.b2 != 0)  // 6c: complement
        return ChainTuple::of(n, 0, n, 0, 0, t.b2, t.i2);
      // 6d: complement of the full upper chain
      return ChainTuple::of(n, 0, n, 0, 0, 0, n);
  }
  throw std::logic_error("row_step: unreachable transition case");
}

// Signed cardinality from the parameters alone: the lower chain occupies
// ranks b1..b1+i1-1 and the upper chain ranks b2+1..b2+i2, and alternating
// sums telescope to parity indicators.
inline int sc_tuple(const ChainTuple& t) {
  const int d1 = t.i1 & 1, d2 = t.i2 & 1;
  return d1 * (t.b1 % 2 == 0 ? 1 : -1) + d2 * (t.b2 % 2 == 0 ? -1 : 1);
}

// Shift every element up one rank; requires no chain to touch its top.
inline ChainTuple shift_up(const ChainTuple& t) {
  if ((t.i1 > 0 && t.a1 == 0) || (t.i2 > 0 && t.a2 == 0))
    throw std::invalid_argument("shift_up: set touches the top of a chain");
  return ChainTuple::of(t.n, t.i1 > 0 ? t.b1 + 1 : t.n, t.i1, t.i1 > 0 ? t.a1 - 1 : 0,
                        t.i2 > 0 ? t.b2 + 1 : 0, t.i2, t.i2 > 0 ? t.a2 - 1 : t.n);
}

// Bijection with subsets of the row-major [2]x[n] poset: lower-chain element
// (1,j) is bit j-1, upper-chain (2,j) is bit n+j-1.
inline Bits embed(const ChainTuple& t) {
  Bits s;
  for (int j = t.b1 + 1; j <= t.b1 + t.i1; ++j) s.set(j - 1);
  for (int j = t.b2 + 1; j <= t.b2 + t.i2; ++j) s.set(t.n + j - 1);
  return s;
}

inline ChainTuple project(int n, const Bits& s) {
  int b1 = n, i1 = 0, a1 = 0, b2 = 0, i2 = 0, a2 = n;
  int lo_first = -1, lo_last = -1, hi_first = -1, hi_last = -1;
  s.for_each([&](int e) {
    if (e < n) {
      if (lo_first < 0) lo_first = e;
      lo_last = e;
    } else {
      if (hi_first < 0) hi_first = e - n;
      hi_last = e - n;
    }
  });
  if (lo_first >= 0) {
    b1 = lo_first;
    i1 = lo_last - lo_first + 1;
    a1 = n - 1 - lo_last;
  }
  if (hi_first >= 0) {
    b2 = hi_first;
    i2 = hi_last - hi_first + 1;
    a2 = n - 1 - hi_last;
  }
  return ChainTuple::of(n, b1, i1, a1, b2, i2, a2);
}

// ---- enumeration and perfect ranking -----------------------------------

// Enumeration order (the rank order): empty set, lower-chain sets by (b,i),
// upper-chain sets by (b,i), then two-chain sets by (b1,i1,b2,i2).
template <typename F>
void for_each_tuple(int n, F&& f) {
  f(ChainTuple::empty(n));
  for (int b = 0; b < n; ++b)
    for (int i = 1; i <= n - b; ++i) f(ChainTuple::lower(n, b, i, n - b - i));
  for (int b = 0; b < n; ++b)
    for (int i = 1; i <= n - b; ++i) f(ChainTuple::upper(n, b, i, n - b - i));
  for (int b1 = 0; b1 < n; ++b1)
    for (int i1 = 1; i1 <= n - b1; ++i1)
      for (int b2 = 0; b2 <= b1; ++b2)
        for (int i2 = 1; i2 <= b1 + i1 - b2; ++i2)
          f(ChainTuple{n, b1, i1, n - b1 - i1, b2, i2, n - b2 - i2});
}

inline uint64_t tuple_count(int n) {
  const uint64_t m = n;
  return (m * m * m * m + 4 * m * m * m + 17 * m * m + 14 * m + 12) / 12;
}

inline std::vector<ChainTuple> enumerate_tuples(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_tuples: n must be positive");
  std::vector<ChainTuple> out;
  out.reserve(tuple_count(n));
  for_each_tuple(n, [&](const ChainTuple& t) { out.push_back(t); });
  return out;
}

// Perfect ranking of the tuple polytope in enumeration order; gives the
// census O(1) visited-flag indexing without hashing.
class TupleIndexer {
public:
  explicit TupleIndexer(int n) : n_(n) {
    single_ = static_cast<uint64_t>(n) * (n + 1) / 2;
    both_base_.assign(static_cast<size_t>(n) * n, 0);
    uint64_t acc = 0;
    for (int b1 = 0; b1 < n; ++b1)
      for (int i1 = 1; i1 <= n - b1; ++i1) {
        both_base_[static_cast<size_t>(b1) * n + (i1 - 1)] = acc;
        // sum over b2 of the i2 range length b1+i1-b2
        const uint64_t w = b1 + i1;
        acc += w * (b1 + 1) - static_cast<uint64_t>(b1) * (b1 + 1) / 2;
      }
    total_ = 1 + 2 * single_ + acc;
  }

  uint64_t total() const { return total_; }

  uint64_t rank(const ChainTuple& t) const {
    if (t.i1 == 0 && t.i2 == 0) return 0;
    if (t.i2 == 0) return 1 + chain_offset(t.b1, t.i1);
    if (t.i1 == 0) return 1 + single_ + chain_offset(t.b2, t.i2);
    const uint64_t w = t.b1 + t.i1;
    const uint64_t inner = static_cast<uint64_t>(t.b2) * w -
                           static_cast<uint64_t>(t.b2) * (t.b2 - 1) / 2 +
                           (t.i2 - 1);
    return 1 + 2 * single_ + both_base_[static_cast<size_t>(t.b1) * n_ + (t.i1 - 1)] + inner;
  }

private:
  uint64_t chain_offset(int b, int i) const {
    return static_cast<uint64_t>(b) * n_ - static_cast<uint64_t>(b) * (b - 1) / 2 + (i - 1);
  }

  int n_;
  uint64_t single_ = 0, total_ = 0;
  std::vector<uint64_t> both_base_;
};

// ---- orbit census -------------------------------------------------------

struct CensusRow {
  uint64_t size = 0;
  uint64_t count = 0;
  ChainTuple representative;  // smallest-rank representative among orbits of this size
};

struct Census {
  int n = 0;
  uint64_t total = 0;
  std::vector<CensusRow> rows;  // ascending by size

  std::vector<std::pair<uint64_t, uint64_t>> size_multiset() const {
    std::vector<std::pair<uint64_t, uint64_t>> out;
    out.reserve(rows.size());
    for (const auto& r : rows) out.emplace_back(r.size, r.count);
    return out;
  }
};

// Orbit census of all tuples under row_step. Workers scan disjoint seed
// blocks; an orbit belongs to the worker whose seed is the orbit's minimal
// rank, so the result is independent of scheduling. Visited flags are only a
// skip optimization.
inline Census census(int n, unsigned workers = 1) {
  if (n < 1) throw std::invalid_argument("census: n must be positive");
  const TupleIndexer idx(n);
  const uint64_t total = idx.total();
  auto visited = std::make_unique<std::atomic<uint8_t>[]>(total);
  for (uint64_t i = 0; i < total; ++i) visited[i].store(0, std::memory_order_relaxed);

  struct Found {
    uint64_t rep_rank, size;
    ChainTuple rep;
  };
  workers = std::max(1u, workers);
  std::vector<std::vector<Found>> found(workers);

  auto scan = [&](unsigned wid, uint64_t lo, uint64_t hi) {
    std::vector<uint64_t> orbit_ranks;
    uint64_t counter = 0;
    for_each_tuple(n, [&](const ChainTuple& seed) {
      const uint64_t r = counter++;
      if (r < lo || r >= hi) return;
      if (visited[r].load(std::memory_order_relaxed)) return;
      orbit_ranks.clear();
      orbit_ranks.push_back(r);
      uint64_t min_rank = r;
      for (ChainTuple cur = row_step(seed); !(cur == seed); cur = row_step(cur)) {
        const uint64_t cr = idx.rank(cur);
        min_rank = std::min(min_rank, cr);
        orbit_ranks.push_back(cr);
      }
      if (min_rank != r) return;  // another worker's seed owns this orbit
      found[wid].push_back({r, orbit_ranks.size(), seed});
      for (uint64_t q : orbit_ranks) visited[q].store(1, std::memory_order_relaxed);
    });
  };

  if (workers == 1) {
    scan(0, 0, total);
  } else {
    std::vector<std::thread> pool;
    const uint64_t chunk = (total + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back(scan, w, w * chunk, std::min(total, (w + 1) * chunk));
    for (auto& t : pool) t.join();
  }

  std::vector<Found> all;
  for (auto& v : found) all.insert(all.end(), v.begin(), v.end());
  std::sort(all.begin(), all.end(),
            [](const Found& a, const Found& b) { return a.rep_rank < b.rep_rank; });

  Census out;
  out.n = n;
  out.total = total;
  for (const Found& f : all) {
    auto it = std::find_if(out.rows.begin(), out.rows.end(),
                           [&](const CensusRow& r) { return r.size == f.size; });
    if (it == out.rows.end())
      out.rows.push_back({f.size, 1, f.rep});
    else
      ++it->count;
  }
  std::sort(out.rows.begin(), out.rows.end(),
            [](const CensusRow& a, const CensusRow& b) { return a.size < b.size; });
  return out;
}

}  // namespace icsrow
