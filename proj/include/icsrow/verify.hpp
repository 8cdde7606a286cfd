#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "icsrow/anchors.hpp"
#include "icsrow/census_tables.hpp"
#include "icsrow/dynamics.hpp"
#include "icsrow/parallel.hpp"
#include "icsrow/rational.hpp"
#include "icsrow/two_by_n.hpp"
#include "icsrow/verification.hpp"

namespace icsrow {

// Orbit-size multiset of a family under the generic engine.
inline SizeMultiset generic_census(const Family& fam,
                                   RowImpl impl = RowImpl::simplified,
                                   int cap = kDefaultEnumerationCap) {
  std::map<uint64_t, uint64_t> sizes;
  for (const Orbit& o : orbit_decomposition(fam, impl, cap)) ++sizes[o.size()];
  return {sizes.begin(), sizes.end()};
}

// Per-orbit signed-cardinality sums on the tuple engine; zero-mesic iff every
// orbit sums to zero (averages are sums over positive sizes).
inline bool tuple_sc_zero_mesic(int n) {
  const TupleIndexer idx(n);
  std::vector<char> visited(idx.total(), 0);
  bool zero = true;
  for_each_tuple(n, [&](const ChainTuple& seed) {
    if (visited[idx.rank(seed)]) return;
    long long sum = sc_tuple(seed);
    visited[idx.rank(seed)] = 1;
    for (ChainTuple t = row_step(seed); !(t == seed); t = row_step(t)) {
      visited[idx.rank(t)] = 1;
      sum += sc_tuple(t);
    }
    if (sum != 0) zero = false;
  });
  return zero;
}

inline long long tuple_sc_total(int n) {
  long long total = 0;
  for_each_tuple(n, [&](const ChainTuple& t) { total += sc_tuple(t); });
  return total;
}

// ---- shipped suites -----------------------------------------------------

// Orbit censuses for n = 1..9: one case per n, checking both engines against
// the explicit table row.
inline std::vector<VerificationCase> run_table4_suite(unsigned workers = 1) {
  std::vector<std::function<VerificationCase()>> tasks;
  for (int n = 1; n <= kSmallCensusMax; ++n)
    tasks.push_back([n] {
      const Poset p = Poset::product({2, n});
      const SizeMultiset row = small_census(n);
      const SizeMultiset generic = generic_census(ics_family(p));
      const SizeMultiset tuple = census(n).size_multiset();
      const std::string computed =
          generic == row && tuple == row
              ? show_pairs(row)
              : "generic=" + show_pairs(generic) + " tuple=" + show_pairs(tuple);
      return make_case("table4/n=" + std::to_string(n),
                       "orbit census of both engines matches the table row",
                       show_pairs(row), computed);
    });
  return parallel_map(tasks, workers);
}

// Homomesy battery: signed cardinality 0-mesic for odd n; the stated all-ICS
// signed-cardinality total for even n; max-minus-min 0-mesic at small n;
// order-ideal cardinality mn/2-mesic with rowmotion order dividing m+n; and
// the known non-homomesic product posets.
inline std::vector<VerificationCase> run_homomesy_suite(unsigned workers = 1) {
  std::vector<std::function<VerificationCase()>> tasks;

  for (int n : {1, 3, 5, 7, 9, 11})
    tasks.push_back([n] {
      return make_case("homomesy/sc/n=" + std::to_string(n),
                       "signed cardinality is 0-mesic on IC([2]x[n])", "0-mesic",
                       tuple_sc_zero_mesic(n) ? "0-mesic" : "not homomesic");
    });

  for (int n : {2, 4, 6, 8})
    tasks.push_back([n] {
      const long long stated = -static_cast<long long>(n) * n * (n + 1) / 4;
      return make_case("homomesy/sc-total/n=" + std::to_string(n),
                       "all-ICS signed-cardinality total equals -n^2(n+1)/4",
                       show(stated), show(tuple_sc_total(n)));
    });

  for (int n = 1; n <= 9; ++n)
    tasks.push_back([n] {
      const Poset p = Poset::product({2, n});
      const auto rep = homomesy_check(ics_family(p), stat_max_minus_min());
      return make_case("homomesy/max-min/n=" + std::to_string(n),
                       "max minus min count is 0-mesic on IC([2]x[n])", "0-mesic",
                       rep.c_mesic(0) ? "0-mesic" : "not 0-mesic");
    });

  for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {2, 4}, {3, 3}}) {
    tasks.push_back([m, n] {
      const Poset p = Poset::product({m, n});
      const auto rep = homomesy_check(ideal_family(p), stat_cardinality());
      return make_case(
          "homomesy/ideal-cardinality/" + std::to_string(m) + "x" + std::to_string(n),
          "order-ideal cardinality is mn/2-mesic",
          rational_string(make_rational(m * n, 2)),
          rep.homomesic ? rational_string(rep.global_average) : "not homomesic");
    });
    tasks.push_back([m, n] {
      const Poset p = Poset::product({m, n});
      bool divides = true;
      for (const Orbit& o : orbit_decomposition(ideal_family(p)))
        divides &= (m + n) % o.size() == 0;
      return make_case(
          "homomesy/ideal-order/" + std::to_string(m) + "x" + std::to_string(n),
          "order-ideal rowmotion order divides m+n", "divides",
          divides ? "divides" : "does not divide");
    });
  }

  for (auto dims : std::vector<std::vector<int>>{{4, 4}, {2, 2, 3}})
    tasks.push_back([dims] {
      std::string name;
      for (size_t i = 0; i < dims.size(); ++i)
        name += (i ? "x" : "") + std::to_string(dims[i]);
      const Poset p = Poset::product(dims);
      const auto rep = homomesy_check(ics_family(p), stat_signed_cardinality());
      return make_case("homomesy/sc-counterexample/" + name,
                       "signed cardinality is not homomesic here", "not homomesic",
                       rep.homomesic ? "homomesic" : "not homomesic");
    });

  return parallel_map(tasks, workers);
}

// ---- conjecture exploration (non-assertive) -----------------------------

struct ConjectureSample {
  int m = 0, n = 0;
  uint64_t total_ics = 0;
  uint64_t in_target_orbits = 0;  // members of orbits of size exactly m+n+1
  Rational ratio;
  uint64_t good_ics_count = 0;
};

inline uint64_t binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  uint64_t r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline uint64_t catalan(int m) { return binomial(2 * m, m) / (m + 1); }

// Lower bound on well-separated union-of-intervals ICS: C_m * C(n-2m+1, 2m).
inline uint64_t good_ics_count(int m, int n) {
  return catalan(m) * binomial(n - 2 * m + 1, 2 * m);
}

// Fraction of ICS of [m]x[n] that sit in orbits of size exactly m+n+1.
// Reported, never asserted; the tuple engine serves m = 2, the generic
// engine everything else within the enumeration cap.
inline std::vector<ConjectureSample> explore_orbit_fraction(
    int m, const std::vector<int>& n_range, int cap = kDefaultEnumerationCap) {
  if (m != 2 && m != 3)
    throw std::invalid_argument("explore_orbit_fraction: m must be 2 or 3");
  std::vector<ConjectureSample> out;
  for (int n : n_range) {
    ConjectureSample s;
    s.m = m;
    s.n = n;
    const uint64_t target = m + n + 1;
    if (m == 2) {
      const Census c = census(n);
      s.total_ics = c.total;
      for (const auto& row : c.rows)
        if (row.size == target) s.in_target_orbits = row.size * row.count;
    } else {
      const Poset p = Poset::product({m, n});
      s.total_ics = 0;
      for (const auto& ms : generic_census(ics_family(p), RowImpl::simplified, cap)) {
        s.total_ics += ms.first * ms.second;
        if (ms.first == target) s.in_target_orbits = ms.first * ms.second;
      }
    }
    s.ratio = make_rational(s.in_target_orbits, s.total_ics);
    s.good_ics_count = good_ics_count(m, n);
    out.push_back(s);
  }
  return out;
}

// Max-minus-min exploration. m = 2 results are theorem-backed and asserted;
// anything larger is reported as computed. The [3]x[5] case also pins one
// concrete orbit whose statistic values are known.
inline std::vector<VerificationCase> explore_max_minus_min(
    int m, const std::vector<int>& n_range, int cap = kDefaultEnumerationCap) {
  std::vector<VerificationCase> out;
  for (int n : n_range) {
    const Poset p = Poset::product({m, n});
    const auto rep = homomesy_check(ics_family(p), stat_max_minus_min(),
                                    RowImpl::simplified, cap);
    const std::string verdict = rep.c_mesic(0) ? "0-mesic" : "not 0-mesic";
    const std::string id =
        "max-min/" + std::to_string(m) + "x" + std::to_string(n);
    if (m == 2)
      out.push_back(make_case(id, "max minus min is 0-mesic", "0-mesic", verdict));
    else
      out.push_back(make_case(id, "max minus min verdict (reported, not asserted)",
                              verdict, verdict));
  }
  if (m == 3) {
    // one known orbit of [3]x[5] with statistic values summing to zero
    const Poset p = Poset::product({3, 5});
    Bits start;
    for (auto [i, j] : std::vector<std::pair<int, int>>{
             {1, 5}, {2, 4}, {2, 5}, {3, 2}, {3, 3}, {3, 4}, {3, 5}})
      start.set(p.index_of({i, j}));
    const auto stat = stat_max_minus_min();
    std::vector<long long> values;
    Bits cur = start;
    do {
      values.push_back(stat.eval(p, cur));
      cur = rowmotion_simplified(p, cur);
    } while (!(cur == start));
    const std::vector<long long> expected{-2, 2, 1, -1, -2, 1, 1, 1, -1};
    out.push_back(make_case("max-min/3x5/orbit-trace",
                            "statistic values along the marked orbit sum to zero",
                            show_vec(expected) + " sum=0",
                            show_vec(values) + " sum=" +
                                show(std::accumulate(values.begin(), values.end(), 0LL))));
  }
  return out;
}

}  // namespace icsrow
