#include <catch2/catch_amalgamated.hpp>

#include <map>

#include "icsrow/anchors.hpp"

using namespace icsrow;

namespace {

// Cycle expressed as the anchor positions it visits, starting from `from`.
std::vector<int> cycle_through(const AnchorMap& am, AnchorMap::Slot from) {
  std::vector<int> out;
  AnchorMap::Slot cur = from;
  do {
    out.push_back(am.anchor_position(cur));
    cur = am.next(cur);
  } while (!(cur == from));
  return out;
}

}  // namespace

TEST_CASE("anchor permutation cycle forms") {
  CHECK_THROWS_AS(AnchorMap(9), std::invalid_argument);

  // n = 0 mod 6: (2,n-4)(3,n-3,7,n-5,5,n-1)(4,n-2,6,n)
  {
    const int n = 12;
    const AnchorMap am(n);
    CHECK(cycle_through(am, {false, 2}) == std::vector<int>{2, n - 4});
    CHECK(cycle_through(am, {false, 3}) ==
          std::vector<int>{3, n - 3, 7, n - 5, 5, n - 1});
    CHECK(cycle_through(am, {false, 4}) == std::vector<int>{4, n - 2, 6, n});
  }
  // n = 1 mod 6: (2,n-5,5,n-2)(3,n-4,6,n-1)(4,n-3,7,n)
  {
    const int n = 13;
    const AnchorMap am(n);
    CHECK(cycle_through(am, {false, 2}) == std::vector<int>{2, n - 5, 5, n - 2});
    CHECK(cycle_through(am, {false, 3}) == std::vector<int>{3, n - 4, 6, n - 1});
    CHECK(cycle_through(am, {false, 4}) == std::vector<int>{4, n - 3, 7, n});
  }
  // n = 3 mod 6: (6,n-3,7,n-2)(2,n-1,3,n,4,n-5,5,n-4)
  {
    const int n = 15;
    const AnchorMap am(n);
    CHECK(cycle_through(am, {false, 6}) == std::vector<int>{6, n - 3, 7, n - 2});
    CHECK(cycle_through(am, {false, 2}) ==
          std::vector<int>{2, n - 1, 3, n, 4, n - 5, 5, n - 4});
  }
  // n = 4 mod 6: six transpositions
  {
    const int n = 16;
    const AnchorMap am(n);
    CHECK(cycle_through(am, {false, 6}) == std::vector<int>{6, n - 4});
    CHECK(cycle_through(am, {false, 7}) == std::vector<int>{7, n - 3});
    CHECK(cycle_through(am, {false, 2}) == std::vector<int>{2, n - 2});
    CHECK(cycle_through(am, {false, 3}) == std::vector<int>{3, n - 1});
    CHECK(cycle_through(am, {false, 4}) == std::vector<int>{4, n});
    CHECK(cycle_through(am, {false, 5}) == std::vector<int>{5, n - 5});
  }
  // n = 5 mod 6: (6,n-5,5,n,4,n-1,3,n-2)(7,n-4,2,n-3)
  {
    const int n = 17;
    const AnchorMap am(n);
    CHECK(cycle_through(am, {false, 6}) ==
          std::vector<int>{6, n - 5, 5, n, 4, n - 1, 3, n - 2});
    CHECK(cycle_through(am, {false, 7}) == std::vector<int>{7, n - 4, 2, n - 3});
  }
}

TEST_CASE("anchor weights") {
  const AnchorMap am(12);
  CHECK(am.w_high(0) == 6);                 // from {(1,n)}
  CHECK(am.w_high(1) == 5);                 // from {(1,n-1)}
  CHECK(am.w_high(3) == 12 + 13);           // n + 13
  CHECK(am.w_high(5) == 2 * 12 + 17);       // 2n + 17
  CHECK(am.w_low(2) == 36);                 // floor((n-2)/6)(2n+12)
  CHECK(am.w_low(7) == 0);                  // already in the top window

  // subcycle w-sums reproduce the quadratic orbit sizes
  const AnchorMap am12(12);
  CHECK(am12.cycle_weight_sums() == std::vector<long long>{143, 144, 175});
  const AnchorMap am11(11);
  CHECK(am11.cycle_weight_sums() == std::vector<long long>{134, 254});
}

TEST_CASE("singleton dynamics verification") {
  for (int n : {10, 11, 13}) {
    const auto cases = verify_singleton_dynamics(n);
    for (const auto& c : cases) {
      INFO(c.id << " expected=" << c.expected << " computed=" << c.computed);
      CHECK(c.pass);
    }
  }
}

TEST_CASE("singleton spot values") {
  // 2n+12 = 34 steps take {(1,2)} to {(1,8)} at n = 11
  {
    ChainTuple t = ChainTuple::lower_singleton(11, 2);
    for (int k = 0; k < 34; ++k) t = row_step(t);
    CHECK(t == ChainTuple::lower_singleton(11, 8));
  }
  // six steps take {(1,n)} to {(1,4)} at n = 10
  {
    ChainTuple t = ChainTuple::lower_singleton(10, 10);
    for (int k = 0; k < 6; ++k) t = row_step(t);
    CHECK(t == ChainTuple::lower_singleton(10, 4));
  }
  // {(1,n-2),(1,n-1)} sits in an orbit of size (n^2+2n-9)/3 with no singletons
  for (int n : {13, 16}) {
    const ChainTuple start = ChainTuple::lower(n, n - 3, 2, 1);
    long long size = 1;
    bool singleton_free = true;
    for (ChainTuple t = row_step(start); !(t == start); t = row_step(t)) {
      ++size;
      singleton_free &= !t.is_lower_singleton() && !t.is_upper_singleton();
    }
    CHECK(size == (n * n + 2 * n - 9) / 3);
    CHECK(singleton_free);
  }
}

TEST_CASE("representative orbit families") {
  for (int n : {5, 7, 8, 9}) {
    for (const auto& c : representative_orbit_checks(n)) {
      INFO(c.id);
      CHECK(c.pass);
    }
  }
}

TEST_CASE("n+5 interval example") {
  // [3,4,1:E] with margins (4,4,5) comes back to the family after 5 steps
  ChainTuple t = ChainTuple::lower(8, 3, 4, 1);
  for (int k = 0; k < 5; ++k) t = row_step(t);
  CHECK(t == ChainTuple::lower(8, 4, 4, 0));
  CHECK(detail::tuple_orbit_size(ChainTuple::lower(8, 3, 4, 1)) == 13);
}

TEST_CASE("single-chain placement") {
  for (int n = 10; n <= 16; ++n) {
    const auto cases = single_chain_placement_checks(n);
    for (const auto& c : cases) {
      INFO(c.id);
      CHECK(c.pass);
    }
  }
}
