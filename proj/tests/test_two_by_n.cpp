#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>
#include <set>

#include "icsrow/census_tables.hpp"
#include "icsrow/dynamics.hpp"
#include "icsrow/two_by_n.hpp"

using namespace icsrow;

TEST_CASE("tuple conventions and validity") {
  CHECK(ChainTuple::of(5, 2, 0, 3, 1, 2, 2) == ChainTuple::of(5, 5, 0, 0, 1, 2, 2));
  CHECK(ChainTuple::empty(4) == ChainTuple::of(4, 4, 0, 0, 0, 0, 4));
  CHECK(ChainTuple::full(4) == ChainTuple::of(4, 0, 4, 0, 0, 4, 0));
  CHECK_THROWS_AS(ChainTuple::of(5, 1, 2, 2, 2, 2, 1), std::invalid_argument);  // b1 < b2
  CHECK_THROWS_AS(ChainTuple::of(5, 0, 2, 3, 0, 4, 1), std::invalid_argument);  // a2 < a1
  CHECK_THROWS_AS(ChainTuple::of(5, 3, 2, 1, 0, 3, 2), std::invalid_argument);  // bad sum
  CHECK(ChainTuple::lower_singleton(9, 4) == ChainTuple::of(9, 3, 1, 5, 0, 0, 9));
  CHECK(ChainTuple::of(7, 3, 4, 0, 1, 6, 0).str() == "[3,4,0:1,6,0]");
  CHECK(ChainTuple::lower(7, 3, 4, 0).str() == "[3,4,0:E]");
}

TEST_CASE("classification") {
  CHECK(classify(ChainTuple::of(11, 3, 6, 2, 2, 5, 4)) == IcsType::double_hook);
  CHECK(classify(ChainTuple::of(7, 5, 2, 0, 1, 3, 3)) == IcsType::disjoint);
  CHECK(classify(ChainTuple::of(7, 1, 2, 4, 1, 1, 5)) == IcsType::first_hook);
  CHECK(classify(ChainTuple::of(7, 2, 3, 2, 2, 3, 2)) == IcsType::stacked_or_second_hook);
  CHECK(classify(ChainTuple::of(7, 3, 4, 0, 1, 6, 0)) == IcsType::stacked_or_second_hook);
  CHECK(classify(ChainTuple::lower(7, 2, 3, 2)) == IcsType::low);
  CHECK(classify(ChainTuple::upper(7, 2, 3, 2)) == IcsType::high);
  CHECK(classify(ChainTuple::empty(7)) == IcsType::empty);
  CHECK(classify(ChainTuple::full(7)) == IcsType::full);

  // total and exclusive: every tuple gets exactly one type
  for (int n = 1; n <= 12; ++n) {
    size_t count = 0;
    for_each_tuple(n, [&](const ChainTuple& t) {
      ++count;
      CHECK_NOTHROW(classify(t));
    });
    CHECK(count == tuple_count(n));
  }
}

TEST_CASE("catalog spot transitions") {
  CHECK(row_step(ChainTuple::empty(6)) == ChainTuple::full(6));
  CHECK(row_step(ChainTuple::full(6)) == ChainTuple::empty(6));
  CHECK(row_step(ChainTuple::of(11, 3, 6, 2, 2, 5, 4)) ==
        ChainTuple::of(11, 4, 6, 1, 3, 5, 3));  // double hook shifts up
  CHECK(row_step(ChainTuple::of(7, 0, 3, 4, 0, 2, 5)) ==
        ChainTuple::of(7, 1, 3, 3, 0, 3, 4));
  // the top singleton goes to its complement
  for (int n : {5, 9})
    CHECK(row_step(ChainTuple::upper_singleton(n, n)) ==
          ChainTuple::of(n, 0, n, 0, 0, n - 1, 1));
}

TEST_CASE("embedding is a bijection with the interval-closed sets") {
  for (int n = 1; n <= 10; ++n) {
    const Poset p = Poset::product({2, n});
    std::set<Bits> images;
    size_t count = 0;
    for_each_tuple(n, [&](const ChainTuple& t) {
      ++count;
      const Bits s = embed(t);
      CHECK(is_interval_closed(p, s));
      CHECK(project(n, s) == t);
      images.insert(s);
    });
    CHECK(count == tuple_count(n));
    CHECK(images.size() == count);
    CHECK(count == enumerate_ics(p).size());
  }
}

TEST_CASE("transition fidelity against the generic engine") {
  for (int n = 1; n <= 8; ++n) {
    const Poset p = Poset::product({2, n});
    for_each_tuple(n, [&](const ChainTuple& t) {
      CHECK(embed(row_step(t)) == rowmotion_simplified(p, embed(t)));
    });
  }
}

TEST_CASE("signed cardinality closed form") {
  CHECK(sc_tuple(ChainTuple::of(7, 3, 3, 1, 3, 3, 1)) == 0);
  CHECK(sc_tuple(ChainTuple::of(7, 0, 3, 4, 0, 2, 5)) == 1);
  CHECK(sc_tuple(ChainTuple::of(7, 5, 2, 0, 1, 6, 0)) == 0);
  CHECK(sc_tuple(ChainTuple::empty(8)) == 0);
  CHECK(sc_tuple(ChainTuple::full(8)) == 0);

  for (int n = 1; n <= 10; ++n) {
    const Poset p = Poset::product({2, n});
    for_each_tuple(n, [&](const ChainTuple& t) {
      CHECK(sc_tuple(t) == signed_cardinality(p, embed(t)));
    });
  }
}

TEST_CASE("tuple counts match the closed form") {
  CHECK(tuple_count(2) == 13);
  CHECK(tuple_count(3) == 33);
  CHECK(tuple_count(6) == 239);
  CHECK(tuple_count(8) == 613);
  for (int n = 1; n <= 12; ++n)
    CHECK(enumerate_tuples(n).size() == tuple_count(n));
}

TEST_CASE("perfect ranking matches enumeration order") {
  for (int n : {1, 2, 3, 5, 8, 13}) {
    const TupleIndexer idx(n);
    CHECK(idx.total() == tuple_count(n));
    uint64_t expected = 0;
    for_each_tuple(n, [&](const ChainTuple& t) { CHECK(idx.rank(t) == expected++); });
  }
}

TEST_CASE("census matches the explicit small rows") {
  for (int n = 1; n <= 9; ++n) CHECK(census(n).size_multiset() == small_census(n));

  const Census c7 = census(7);
  const auto ms7 = c7.size_multiset();
  std::map<uint64_t, uint64_t> rows(ms7.begin(), ms7.end());
  CHECK(rows[10] == 22);
  CHECK(rows[5] == 3);
  const Census c9 = census(9);
  bool has194 = false;
  for (const auto& r : c9.rows) has194 |= r.size == 194 && r.count == 1;
  CHECK(has194);
}

TEST_CASE("census is identical across worker counts") {
  for (int n : {6, 9, 11}) {
    const Census serial = census(n, 1);
    for (unsigned workers : {2u, 4u}) {
      const Census par = census(n, workers);
      CHECK(par.size_multiset() == serial.size_multiset());
      REQUIRE(par.rows.size() == serial.rows.size());
      for (size_t i = 0; i < par.rows.size(); ++i)
        CHECK(par.rows[i].representative == serial.rows[i].representative);
    }
  }
}

TEST_CASE("predicted census") {
  CHECK_THROWS_AS(predicted_census(0), std::invalid_argument);
  CHECK(predicted_census(6) ==
        SizeMultiset{{2, 1}, {3, 1}, {9, 14}, {29, 1}, {30, 1}, {49, 1}});
  CHECK(predicted_census(8) == SizeMultiset{{2, 1}, {11, 36}, {13, 1}, {59, 2}, {84, 1}});

  // one quadratic orbit with no singleton representative when n = 1 mod 3
  for (int n : {7, 13}) {
    const auto quads = quadratic_orbit_sizes(n);
    const uint64_t no_singleton = (uint64_t(n) * n + 2 * n - 9) / 3;
    CHECK(std::count(quads.begin(), quads.end(), no_singleton) >= 1);
  }

  for (int n = 1; n <= 14; ++n)
    CHECK(census(n).size_multiset() == predicted_census(n));
}

TEST_CASE("orbit sizes divide n+3 or n+5, except 2 and the quadratic list") {
  for (int n = 2; n <= 12; ++n) {
    const auto quads = quadratic_orbit_sizes(n);
    for (const auto& [size, count] : census(n).size_multiset()) {
      const bool linear = (n + 3) % size == 0 || (n + 5) % size == 0;
      const bool quadratic =
          std::find(quads.begin(), quads.end(), size) != quads.end();
      CHECK((size == 2 || linear || quadratic));
    }
  }
}

TEST_CASE("example orbit traces") {
  auto trace = [](const ChainTuple& start) {
    std::vector<int> out{sc_tuple(start)};
    for (ChainTuple t = row_step(start); !(t == start); t = row_step(t))
      out.push_back(sc_tuple(t));
    return out;
  };
  using V = std::vector<int>;
  CHECK(trace(ChainTuple::of(7, 0, 3, 4, 0, 2, 5)) ==
        V{1, -2, 2, -2, 2, -1, 1, -2, 2, -1});
  CHECK(trace(ChainTuple::of(7, 3, 3, 1, 3, 3, 1)) == V(10, 0));
  CHECK(trace(ChainTuple::of(7, 5, 2, 0, 1, 6, 0)) ==
        V{0, 0, -1, 1, -1, 1, -1, 1, -1, 1});
  CHECK(trace(ChainTuple::of(7, 3, 3, 1, 0, 4, 3)) ==
        V{-1, 1, -1, 1, -1, 1, 0, -1, 1, 0});
}

TEST_CASE("randomized fidelity at larger n") {
  std::mt19937_64 rng(7);
  for (int n : {20, 50}) {
    const Poset p = Poset::product({2, n});
    const auto tuples = enumerate_tuples(n);
    std::uniform_int_distribution<size_t> pick(0, tuples.size() - 1);
    for (int k = 0; k < 2000; ++k) {
      const ChainTuple& t = tuples[pick(rng)];
      CHECK(embed(row_step(t)) == rowmotion_simplified(p, embed(t)));
      CHECK(project(n, embed(t)) == t);
    }
  }
}

TEST_CASE("shift_up") {
  CHECK(shift_up(ChainTuple::of(7, 1, 3, 3, 0, 3, 4)) ==
        ChainTuple::of(7, 2, 3, 2, 1, 3, 3));
  CHECK(shift_up(ChainTuple::lower(7, 0, 2, 5)) == ChainTuple::lower(7, 1, 2, 4));
  CHECK(shift_up(ChainTuple::empty(7)) == ChainTuple::empty(7));
  CHECK_THROWS_AS(shift_up(ChainTuple::lower(7, 5, 2, 0)), std::invalid_argument);
  CHECK_THROWS_AS(shift_up(ChainTuple::full(7)), std::invalid_argument);
}

TEST_CASE("signed cardinality sums over transit substructures") {
  for (int n : {11, 13}) {
    // high [E:b,i,a] with i != n: the first three steps sum to 0 / delta_i / -1
    for (int b = 0; b < n; ++b)
      for (int i = 1; b + i <= n && i < n; ++i) {
        const int a = n - b - i;
        ChainTuple t = ChainTuple::upper(n, b, i, a);
        long long sum = sc_tuple(t);
        t = row_step(t);
        sum += sc_tuple(t);
        t = row_step(t);
        sum += sc_tuple(t);
        const long long expect = a >= 2 ? 0 : (a == 1 ? i % 2 : -1);
        CHECK(sum == expect);
      }
    // low [b,i,a:E]: steps 0..a sum to delta_{a+i} (-1)^a
    for (int b = 0; b < n; ++b)
      for (int i = 1; b + i <= n; ++i) {
        const int a = n - b - i;
        ChainTuple t = ChainTuple::lower(n, b, i, a);
        long long sum = 0;
        for (int k = 0; k <= a; ++k) {
          sum += sc_tuple(t);
          t = row_step(t);
        }
        CHECK(sum == ((a + i) % 2) * (a % 2 == 0 ? 1 : -1));
      }
    // a full singleton-to-singleton block sums to (-1)^x
    for (int x = 2; x <= n - 6; ++x) {
      ChainTuple t = ChainTuple::lower_singleton(n, x);
      long long sum = 0;
      for (int k = 0; k < 2 * n + 12; ++k) {
        sum += sc_tuple(t);
        t = row_step(t);
      }
      CHECK(sum == (x % 2 == 0 ? 1 : -1));
    }
  }
}
