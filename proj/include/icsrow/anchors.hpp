#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "icsrow/census_tables.hpp"
#include "icsrow/two_by_n.hpp"
#include "icsrow/verification.hpp"

namespace icsrow {

// The quadratic orbits are stitched together by their lower-chain singleton
// anchors {(1,s)} for s in S = {2..7} and {n-5..n}. sigma maps each anchor to
// the next anchor in its orbit and w counts the rowmotion steps between them;
// the subcycles of sigma determine the quadratic orbit sizes as w-sums.
//
// S is kept as 12 positional slots (6 low, 6 high). For 10 <= n <= 12 some
// low and high slots carry the same value; the low slot then has w = 0 and
// sigma fixing it, so the composite bookkeeping still works.
class AnchorMap {
public:
  explicit AnchorMap(int n) : n_(n) {
    if (n < 10) throw std::invalid_argument("AnchorMap: n >= 10 required");
  }

  int n() const { return n_; }

  // 2 <= s <= 7: the unique value in [n-5, n] congruent to s mod 6.
  int sigma_low(int s) const { return n_ - ((n_ - s) % 6); }

  // s = n - y, 0 <= y <= 5: the unique value in [2, 7] congruent to
  // (10 - y) mod 6, twisted to (10 + y) mod 6 for y in {2,4} unless
  // n = 1 mod 3.
  int sigma_high(int y) const {
    const int target =
        (y == 2 || y == 4) && n_ % 3 != 1 ? (10 + y) % 6 : ((10 - y) % 6 + 6) % 6;
    for (int x = 2; x <= 7; ++x)
      if (x % 6 == target) return x;
    throw std::logic_error("sigma_high: no target in [2,7]");
  }

  long long w_low(int s) const {
    return static_cast<long long>((n_ - s) / 6) * (2 * n_ + 12);
  }

  long long w_high(int y) const {
    const long long n = n_;
    if (y == 0) return 6;
    if (y == 1 || y == 3 || y == 5)
      return ((y - 1) / 2) * n + 4 * (2 * y / 3) + 5;
    // y in {2, 4}
    switch (n_ % 3) {
      case 0:
        return y == 2 ? (n * n + 3 * n + 18) / 3 : (2 * n * n + 9 * n + 21) / 3;
      case 1:
        return y == 2 ? (n * n + 2 * n + 6) / 3 : (n * n + 8 * n + 42) / 3;
      default:
        return y == 2 ? (2 * n * n + 5 * n + 9) / 3 : (n * n + 7 * n + 30) / 3;
    }
  }

  struct Slot {
    bool high;
    int value;  // s itself for low slots, y = n - s for high slots
    bool operator==(const Slot&) const = default;
  };

  Slot next(Slot s) const {
    if (s.high) return {false, sigma_high(s.value)};
    return {true, n_ - sigma_low(s.value)};
  }

  long long weight(Slot s) const {
    return s.high ? w_high(s.value) : w_low(s.value);
  }

  int anchor_position(Slot s) const { return s.high ? n_ - s.value : s.value; }

  std::vector<std::vector<Slot>> cycles() const {
    std::vector<Slot> slots;
    for (int s = 2; s <= 7; ++s) slots.push_back({false, s});
    for (int y = 0; y <= 5; ++y) slots.push_back({true, y});
    std::vector<std::vector<Slot>> out;
    std::vector<Slot> seen;
    for (Slot s0 : slots) {
      if (std::find(seen.begin(), seen.end(), s0) != seen.end()) continue;
      std::vector<Slot> cyc;
      Slot cur = s0;
      do {
        cyc.push_back(cur);
        seen.push_back(cur);
        cur = next(cur);
      } while (!(cur == s0));
      out.push_back(std::move(cyc));
    }
    return out;
  }

  std::vector<long long> cycle_weight_sums() const {
    std::vector<long long> out;
    for (const auto& cyc : cycles()) {
      long long sum = 0;
      for (Slot s : cyc) sum += weight(s);
      out.push_back(sum);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

private:
  int n_;
};

// Runs the anchor machinery against the tuple engine, n >= 10:
//  - every anchor {(1,s)} reaches {(1,sigma(s))} in exactly w(s) steps with
//    no intermediate lower-chain singleton anchored in S;
//  - each 2n+12 block from {(1,x)}, 1 < x <= n-6, contains no intermediate
//    lower-chain singleton and exactly one upper-chain singleton, {(2,x+3)};
//  - the subcycle w-sums reproduce the quadratic orbit sizes;
//  - for n = 1 mod 3, the orbit of {(1,n-2),(1,n-1)} has size (n^2+2n-9)/3
//    and contains no singleton at all.
inline std::vector<VerificationCase> verify_singleton_dynamics(int n) {
  if (n < 10) throw std::invalid_argument("verify_singleton_dynamics: n >= 10");
  const AnchorMap am(n);
  std::vector<VerificationCase> out;
  const std::string pre = "singletons/n=" + std::to_string(n) + "/";

  std::vector<int> s_values;
  for (int s = 2; s <= 7; ++s) s_values.push_back(s);
  for (int y = 0; y <= 5; ++y) s_values.push_back(n - y);
  auto in_S = [&](int x) {
    return std::find(s_values.begin(), s_values.end(), x) != s_values.end();
  };

  std::vector<AnchorMap::Slot> slots;
  for (int s = 2; s <= 7; ++s) slots.push_back({false, s});
  for (int y = 0; y <= 5; ++y) slots.push_back({true, y});
  for (auto slot : slots) {
    const int s = am.anchor_position(slot);
    const int target = slot.high ? am.sigma_high(slot.value) : am.sigma_low(slot.value);
    const long long w = am.weight(slot);
    ChainTuple t = ChainTuple::lower_singleton(n, s);
    bool clean = true;
    for (long long k = 1; k <= w; ++k) {
      t = row_step(t);
      if (k < w && t.is_lower_singleton() && in_S(t.b1 + 1)) clean = false;
    }
    const bool arrived = t == ChainTuple::lower_singleton(n, target);
    out.push_back(make_case(
        pre + "anchor/s=" + std::to_string(s) + (slot.high ? "(high)" : "(low)"),
        "w(s)=" + std::to_string(w) + " steps from {(1," + std::to_string(s) +
            ")} land on {(1," + std::to_string(target) + ")}, no anchor inside",
        "arrived,clean", std::string(arrived ? "arrived" : "missed") + "," +
                             (clean ? "clean" : "anchor-inside")));
  }

  for (int x = 2; x <= n - 6; ++x) {
    ChainTuple t = ChainTuple::lower_singleton(n, x);
    std::vector<int> uppers;
    bool lowers_clean = true;
    for (int k = 1; k <= 2 * n + 12; ++k) {
      t = row_step(t);
      if (k < 2 * n + 12) {
        if (t.is_lower_singleton()) lowers_clean = false;
        if (t.is_upper_singleton()) uppers.push_back(t.b2 + 1);
      }
    }
    const bool arrived = t == ChainTuple::lower_singleton(n, x + 6);
    const bool upper_ok = uppers == std::vector<int>{x + 3};
    out.push_back(make_case(
        pre + "block/x=" + std::to_string(x),
        "2n+12 steps from {(1,x)} reach {(1,x+6)}; only {(2,x+3)} between",
        "ok", arrived && lowers_clean && upper_ok ? "ok" : "violated"));
  }

  std::vector<long long> expected_quads;
  for (uint64_t q : quadratic_orbit_sizes(n)) expected_quads.push_back(q);
  std::sort(expected_quads.begin(), expected_quads.end());
  if (n % 3 == 1) {
    // the orbit without singletons is not a subcycle of sigma
    const long long no_singleton = (static_cast<long long>(n) * n + 2 * n - 9) / 3;
    expected_quads.erase(
        std::find(expected_quads.begin(), expected_quads.end(), no_singleton));
  }
  out.push_back(make_case(pre + "cycle-sums",
                          "subcycle w-sums equal the quadratic orbit sizes",
                          show_vec(expected_quads), show_vec(am.cycle_weight_sums())));

  if (n % 3 == 1) {
    const ChainTuple start = ChainTuple::lower(n, n - 3, 2, 1);  // {(1,n-2),(1,n-1)}
    long long size = 1;
    bool no_singletons = true;
    for (ChainTuple t = row_step(start); !(t == start); t = row_step(t)) {
      ++size;
      if (t.is_lower_singleton() || t.is_upper_singleton()) no_singletons = false;
    }
    const long long expected = (static_cast<long long>(n) * n + 2 * n - 9) / 3;
    out.push_back(make_case(pre + "two-rank-orbit",
                            "{(1,n-2),(1,n-1)} orbit size (n^2+2n-9)/3, no singletons",
                            show(expected) + ",none",
                            show(size) + "," + (no_singletons ? "none" : "singleton")));
  }
  return out;
}

namespace detail {

inline long long tuple_orbit_size(const ChainTuple& start) {
  long long size = 1;
  for (ChainTuple t = row_step(start); !(t == start); t = row_step(t)) ++size;
  return size;
}

}  // namespace detail

// Checks the explicit orbit representatives of each linear-size family:
// stacked ranks, stacked diagonals, second hooks and double hooks (size n+3
// with their (n+3)/2 and (n+3)/3 exceptions), single-chain intervals with all
// three parameters >= 4 (size n+5, or (n+5)/3 on the diagonal), and the
// low->high / high->low transit rules.
inline std::vector<VerificationCase> representative_orbit_checks(int n) {
  if (n < 2) throw std::invalid_argument("representative_orbit_checks: n >= 2");
  std::vector<VerificationCase> out;
  const std::string pre = "representatives/n=" + std::to_string(n) + "/";
  using detail::tuple_orbit_size;

  {  // stacked ranks [0,r,n-r : 0,r-1,n+1-r]
    bool ok = true;
    for (int r = 1; 2 * r <= n; ++r)
      ok &= tuple_orbit_size(ChainTuple::of(n, 0, r, n - r, 0, r - 1, n + 1 - r)) == n + 3;
    if (n % 2 == 1) {
      const int r = (n + 1) / 2;
      ok &= tuple_orbit_size(ChainTuple::of(n, 0, r, n - r, 0, r - 1, n + 1 - r)) ==
            (n + 3) / 2;
    }
    out.push_back(make_case(pre + "stacked-ranks",
                            "r stacked ranks: orbit n+3; r=(n+1)/2 for odd n: (n+3)/2",
                            "ok", ok ? "ok" : "violated"));
  }

  {  // stacked diagonals [b,i,a : b,i,a], b,i,a > 0
    bool ok = true;
    for (int b = 1; b < n; ++b)
      for (int i = 1; b + i < n; ++i) {
        const int a = n - b - i;
        const long long expect =
            (n % 3 == 0 && b == i && i == a) ? (n + 3) / 3 : n + 3;
        ok &= tuple_orbit_size(ChainTuple::of(n, b, i, a, b, i, a)) == expect;
      }
    out.push_back(make_case(pre + "stacked-diagonals",
                            "[b,i,a:b,i,a]: orbit n+3; the equilateral case: (n+3)/3",
                            "ok", ok ? "ok" : "violated"));
  }

  {  // second hooks [b,i,0 : b-t,t+i,0], i >= 1, t >= 2, b-t >= 1
    bool ok = true;
    for (int i = 1; i < n; ++i) {
      const int b = n - i;
      for (int t = 2; t < b; ++t)
        ok &= tuple_orbit_size(ChainTuple::of(n, b, i, 0, b - t, t + i, 0)) == n + 3;
    }
    out.push_back(make_case(pre + "second-hooks", "tail >= 2 second hooks: orbit n+3",
                            "ok", ok ? "ok" : "violated"));
  }

  {  // double hooks [b,k+j,a : 0,b+k,a+j], j >= 2, b >= 2, k >= 1, a >= 0
    bool ok = true;
    for (int b = 2; b < n; ++b)
      for (int k = 1; b + k < n; ++k)
        for (int j = 2; b + k + j <= n; ++j) {
          const int a = n - b - k - j;
          const long long expect = (j == b && a + 1 == k) ? (n + 3) / 2 : n + 3;
          ok &= tuple_orbit_size(ChainTuple::of(n, b, k + j, a, 0, b + k, a + j)) == expect;
        }
    out.push_back(make_case(pre + "double-hooks",
                            "anchored double hooks: orbit n+3; self-paired case: (n+3)/2",
                            "ok", ok ? "ok" : "violated"));
  }

  {  // single-chain intervals [x-1, y, z-4 : E] with x, y, z >= 4, x+y+z = n+5
    bool ok = true;
    for (int x = 4; x <= n + 1; ++x)
      for (int y = 4; x + y <= n + 1; ++y) {
        const int z = n + 5 - x - y;
        if (z < 4) continue;
        const long long expect = (x == y && y == z) ? (n + 5) / 3 : n + 5;
        ok &= tuple_orbit_size(ChainTuple::lower(n, x - 1, y, z - 4)) == expect;
      }
    out.push_back(make_case(pre + "long-intervals",
                            "intervals with margins >= 4: orbit n+5; equilateral: (n+5)/3",
                            "ok", ok ? "ok" : "violated"));
  }

  {  // low -> high in a+1 steps, no low/high between
    bool ok = true;
    for (int b = 0; b < n; ++b)
      for (int i = 1; b + i <= n; ++i) {
        const int a = n - b - i;
        ChainTuple t = ChainTuple::lower(n, b, i, a);
        for (int k = 0; k <= a; ++k) {
          t = row_step(t);
          if (k < a) ok &= !t.single_chain();
        }
        ok &= t == ChainTuple::upper(n, a, b + 1, i - 1);
      }
    out.push_back(make_case(pre + "low-to-high",
                            "low [b,i,a:E] reaches high [E:a,b+1,i-1] in a+1 steps",
                            "ok", ok ? "ok" : "violated"));
  }

  {  // high -> low in 3 steps (i != n), no low/high between
    bool ok = true;
    for (int b = 0; b < n; ++b)
      for (int i = 1; b + i <= n && i < n; ++i) {
        const int a = n - b - i;
        ChainTuple t = ChainTuple::upper(n, b, i, a);
        for (int k = 0; k < 3; ++k) {
          t = row_step(t);
          if (k < 2) ok &= !t.single_chain();
        }
        ChainTuple expect =
            a >= 3   ? ChainTuple::lower(n, b + 3, i, a - 3)
            : a > 0  ? ChainTuple::lower(n, 2 - a, n - i, i - 2 + a)
            : i > 1  ? ChainTuple::lower(n, 2, n - i, i - 2)
                     : ChainTuple::lower(n, 0, 1, n - 1);
        ok &= t == expect;
      }
    out.push_back(make_case(pre + "high-to-low",
                            "high [E:b,i,a], i<n reaches the predicted low set in 3 steps",
                            "ok", ok ? "ok" : "violated"));
  }

  return out;
}

// Orbit-size placement of every single-chain ICS:
//   n+3 for the two extreme singletons, n+5 or (n+5)/3 for intervals of size
//   >= 4 clear of the three bottom/top positions, quadratic otherwise.
inline std::vector<VerificationCase> single_chain_placement_checks(int n) {
  if (n < 10) throw std::invalid_argument("single_chain_placement_checks: n >= 10");
  const auto quads = quadratic_orbit_sizes(n);
  auto quadratic = [&](long long sz) {
    return std::find(quads.begin(), quads.end(), static_cast<uint64_t>(sz)) != quads.end();
  };
  bool ok = true;
  for (int lower = 0; lower < 2; ++lower) {
    for (int b = 0; b < n; ++b)
      for (int i = 1; b + i <= n; ++i) {
        const ChainTuple t = lower ? ChainTuple::lower(n, b, i, n - b - i)
                                   : ChainTuple::upper(n, b, i, n - b - i);
        const long long sz = detail::tuple_orbit_size(t);
        const bool extreme_singleton =
            i == 1 && ((lower && b == 0) || (!lower && b == n - 1));
        const bool touches_edge = lower ? b <= 2 : b + i >= n - 2;
        if (extreme_singleton)
          ok &= sz == n + 3;
        else if (i >= 4 && !touches_edge)
          ok &= sz == n + 5 || sz == (n + 5) / 3;
        else
          ok &= quadratic(sz);
      }
  }
  return {make_case("placement/n=" + std::to_string(n),
                    "single-chain ICS land in the predicted orbit-size class", "ok",
                    ok ? "ok" : "violated")};
}

}  // namespace icsrow
