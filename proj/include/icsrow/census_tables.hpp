#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace icsrow {

// Expected orbit censuses of rowmotion on IC([2]x[n]). All expected values
// live in this one header so they can be audited in one place: the explicit
// small-n rows (n <= 9), the per-residue orbit-count polynomials (n >= 5),
// and the quadratic orbit sizes per residue class of n mod 6.

using SizeMultiset = std::vector<std::pair<uint64_t, uint64_t>>;  // (size, count), ascending

inline constexpr int kSmallCensusMax = 9;

// Explicit rows for 1 <= n <= 9.
inline SizeMultiset small_census(int n) {
  switch (n) {
    case 1: return {{2, 2}};
    case 2: return {{2, 1}, {5, 1}, {6, 1}};
    case 3: return {{2, 2}, {3, 1}, {6, 1}, {20, 1}};
    case 4: return {{2, 1}, {5, 3}, {6, 1}, {7, 4}, {10, 2}};
    case 5: return {{2, 1}, {4, 2}, {8, 7}, {26, 1}, {44, 1}};
    case 6: return {{2, 1}, {3, 1}, {9, 14}, {29, 1}, {30, 1}, {49, 1}};
    case 7: return {{2, 1}, {4, 1}, {5, 3}, {10, 22}, {18, 1}, {26, 1}, {54, 2}};
    case 8: return {{2, 1}, {11, 36}, {13, 1}, {59, 2}, {84, 1}};
    case 9: return {{2, 1}, {4, 1}, {6, 4}, {12, 50}, {14, 2}, {64, 1}, {194, 1}};
    default: throw std::invalid_argument("small_census: 1 <= n <= 9");
  }
}

// Orbits of quadratic size, one entry per orbit, by residue class of n mod 6.
inline std::vector<uint64_t> quadratic_orbit_sizes(int n) {
  const uint64_t m = n;
  switch (n % 6) {
    case 0:
      return {m * m + 3 * m - 5, m * m + m - 12, m * m + m - 13};
    case 1:
      return {m * m + 2 * m - 9, m * m + 2 * m - 9, (2 * m * m + m - 27) / 3,
              (m * m + 2 * m - 9) / 3};
    case 2:
      return {m * m + 3 * m - 4, m * m + m - 13, m * m + m - 13};
    case 3:
      return {2 * m * m + 5 * m - 13, m * m - 17};
    case 4:
      return {(2 * m * m + 4 * m - 18) / 3, (2 * m * m + 4 * m - 18) / 3,
              (m * m + 2 * m - 6) / 3, (m * m + 2 * m - 9) / 3,
              (m * m + 2 * m - 9) / 3, (m * m - m - 21) / 3,
              (m * m + 2 * m - 9) / 3};
    default:
      return {2 * m * m + 3 * m - 21, m * m + 2 * m - 9};
  }
}

// Orbit counts by size for n >= 5, from the per-residue closed forms.
inline SizeMultiset closed_form_census(int n) {
  if (n < 5) throw std::invalid_argument("closed_form_census: n >= 5");
  const uint64_t m = n;
  const int r = n % 6;
  uint64_t n_plus_3 = 0;
  switch (r) {
    case 0: n_plus_3 = (m * m * m - m * m - 4 * m + 12) / 12; break;
    case 1: n_plus_3 = (m * m * m - m * m - 7 * m + 19) / 12; break;
    case 2: n_plus_3 = (m * m * m - m * m - 4 * m + 16) / 12; break;
    case 3: n_plus_3 = (m * m * m - m * m - 7 * m + 15) / 12; break;
    case 4: n_plus_3 = (m * m * m - m * m - 4 * m + 16) / 12; break;
    case 5: n_plus_3 = (m * m * m - m * m - 7 * m + 19) / 12; break;
  }
  const uint64_t n_plus_5 =
      (m * m - 11 * m + (r == 1 || r == 4 ? 28 : 30)) / 6;

  auto add = [](SizeMultiset& ms, uint64_t size, uint64_t count) {
    if (count == 0) return;
    for (auto& [s, c] : ms)
      if (s == size) {
        c += count;
        return;
      }
    ms.emplace_back(size, count);
  };

  SizeMultiset ms;
  add(ms, 2, 1);
  add(ms, m + 3, n_plus_3);
  if (n % 2 == 1) add(ms, (m + 3) / 2, (m - 1) / 2);
  if (n % 3 == 0) add(ms, (m + 3) / 3, 1);
  add(ms, m + 5, n_plus_5);
  if (n % 3 == 1) add(ms, (m + 5) / 3, 1);
  for (uint64_t q : quadratic_orbit_sizes(n)) add(ms, q, 1);
  std::sort(ms.begin(), ms.end());
  return ms;
}

// The expected census for any n >= 1: the explicit rows below 5, the closed
// forms above 9, and on 5..9 both sources, which must agree.
inline SizeMultiset predicted_census(int n) {
  if (n < 1) throw std::invalid_argument("predicted_census: n must be positive");
  if (n < 5) return small_census(n);
  SizeMultiset closed = closed_form_census(n);
  if (n <= kSmallCensusMax && closed != small_census(n))
    throw std::logic_error("predicted_census: closed forms disagree with the explicit rows");
  return closed;
}

}  // namespace icsrow
