#pragma once

#include <stdexcept>
#include <vector>

#include "icsrow/poset.hpp"

namespace icsrow {

inline constexpr int kDefaultEnumerationCap = 40;

// Smallest order ideal containing s.
inline Bits ideal_closure(const Poset& p, const Bits& s) {
  Bits out;
  s.for_each([&](int x) { out |= p.down(x); });
  return out;
}

// Smallest order filter containing s.
inline Bits filter_closure(const Poset& p, const Bits& s) {
  Bits out;
  s.for_each([&](int x) { out |= p.up(x); });
  return out;
}

// A subset is interval-closed iff everything both above and below it is in it.
inline bool is_interval_closed(const Poset& p, const Bits& s) {
  return ((filter_closure(p, s) & ideal_closure(p, s)) - s).none();
}

inline bool is_order_ideal(const Poset& p, const Bits& s) {
  return ideal_closure(p, s) == s;
}

inline bool is_order_filter(const Poset& p, const Bits& s) {
  return filter_closure(p, s) == s;
}

inline Bits min_elements(const Poset& p, const Bits& s) {
  Bits out;
  s.for_each([&](int x) {
    if (((p.down(x) & s) - Bits::single(x)).none()) out.set(x);
  });
  return out;
}

inline Bits max_elements(const Poset& p, const Bits& s) {
  Bits out;
  s.for_each([&](int x) {
    if (((p.up(x) & s) - Bits::single(x)).none()) out.set(x);
  });
  return out;
}

// Elements comparable to (or in) s; Inc is its complement.
inline Bits incomparables(const Poset& p, const Bits& s) {
  Bits comparable;
  s.for_each([&](int x) { comparable |= p.up(x) | p.down(x); });
  return p.universe() - comparable;
}

// Inc_I(J): the restriction of Inc(J) to I.
inline Bits incomparables_restricted(const Poset& p, const Bits& i, const Bits& j) {
  return incomparables(p, j) & i;
}

// Ceiling: minimal elements of the strict up-set of s.
inline Bits ceiling(const Poset& p, const Bits& s) {
  return min_elements(p, filter_closure(p, s) - s);
}

inline Bits complement(const Poset& p, const Bits& s) {
  return p.universe() - s;
}

// All interval-closed sets, in ascending bit-vector order. Generation is a
// DFS that extends each set by elements later in the canonical extension:
// the extension-order prefixes of an ICS are themselves interval-closed, so
// pruning on convexity loses nothing and no 2^|P| scan happens.
inline std::vector<Bits> enumerate_ics(const Poset& p,
                                       int cap = kDefaultEnumerationCap) {
  if (p.size() > cap)
    throw std::invalid_argument("enumerate_ics: poset exceeds enumeration cap of " +
                                std::to_string(cap) + " elements");
  const auto& ext = p.canonical_extension();
  std::vector<Bits> out;
  // frame: (set, its ideal closure, its filter closure, last extension pos)
  struct Frame {
    Bits s, dn, up;
    int pos;
  };
  std::vector<Frame> stack{{Bits{}, Bits{}, Bits{}, -1}};
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    out.push_back(f.s);
    for (int q = f.pos + 1; q < p.size(); ++q) {
      const int e = ext[q];
      Bits s = f.s;
      s.set(e);
      Bits dn = f.dn | p.down(e);
      Bits up = f.up | p.up(e);
      if (((up & dn) - s).none()) stack.push_back({s, dn, up, q});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Bits> enumerate_order_ideals(const Poset& p,
                                                int cap = kDefaultEnumerationCap) {
  auto all = enumerate_ics(p, cap);
  std::erase_if(all, [&](const Bits& s) { return !is_order_ideal(p, s); });
  return all;
}

}  // namespace icsrow
