#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "icsrow/convex.hpp"
#include "icsrow/poset.hpp"
#include "icsrow/rational.hpp"

namespace icsrow {

enum class FamilyKind { interval_closed, order_ideals };

// A toggle family: a set of subsets of the poset closed under the toggles we
// apply. Only the two families the dynamics need are provided.
struct Family {
  const Poset* poset;
  FamilyKind kind;

  bool contains(const Bits& s) const {
    return kind == FamilyKind::interval_closed ? is_interval_closed(*poset, s)
                                               : is_order_ideal(*poset, s);
  }
  std::vector<Bits> members(int cap = kDefaultEnumerationCap) const {
    return kind == FamilyKind::interval_closed ? enumerate_ics(*poset, cap)
                                               : enumerate_order_ideals(*poset, cap);
  }
};

inline Family ics_family(const Poset& p) {
  return {&p, FamilyKind::interval_closed};
}
inline Family ideal_family(const Poset& p) {
  return {&p, FamilyKind::order_ideals};
}

// t_x: symmetric difference with {x} when the result stays in the family.
// The input must already be a family member.
inline Bits toggle(const Family& fam, int x, const Bits& s) {
  if (x < 0 || x >= fam.poset->size())
    throw std::out_of_range("toggle: element out of range");
  if (!fam.contains(s)) throw std::invalid_argument("toggle: set not in the family");
  Bits t = s;
  t.flip(x);
  return fam.contains(t) ? t : s;
}

// Rowmotion as a toggle composition: all toggles in the reverse order of a
// linear extension, i.e. the last extension element is toggled first.
inline Bits rowmotion_local(const Family& fam, Bits s,
                            const std::vector<int>& ext) {
  const Poset& p = *fam.poset;
  if (static_cast<int>(ext.size()) != p.size())
    throw std::invalid_argument("rowmotion_local: extension has wrong length");
  std::vector<int> pos(p.size(), -1);
  for (int k = 0; k < p.size(); ++k) {
    if (ext[k] < 0 || ext[k] >= p.size() || pos[ext[k]] >= 0)
      throw std::invalid_argument("rowmotion_local: not a permutation of elements");
    pos[ext[k]] = k;
  }
  for (auto [lo, hi] : p.covers())
    if (pos[lo] >= pos[hi])
      throw std::invalid_argument("rowmotion_local: order is not a linear extension");
  for (auto it = ext.rbegin(); it != ext.rend(); ++it) s = toggle(fam, *it, s);
  return s;
}

inline Bits rowmotion_local(const Family& fam, const Bits& s) {
  return rowmotion_local(fam, s, fam.poset->canonical_extension());
}

// Global two-set form of ICS rowmotion:
//   Row(I) = (Inc(ceil I) - I)  u  (D(ceil I) - D(Min I n D(ceil I))),
// writing D for ideal closure, u for union and n for intersection.
inline Bits rowmotion_simplified(const Poset& p, const Bits& s) {
  const Bits c = ceiling(p, s);
  const Bits dc = ideal_closure(p, c);
  const Bits a = incomparables(p, c) - s;
  const Bits b = dc - ideal_closure(p, min_elements(p, s) & dc);
  return a | b;
}

// The older three-set form, kept as an independent route:
//   Row(I) = Inc(I) u (D(Inc_I(ceil I)) - (I u D(ceil I))) u (D(ceil I) - D F),
// with F = Min I n D(ceil I).
inline Bits rowmotion_threeset(const Poset& p, const Bits& s) {
  const Bits c = ceiling(p, s);
  const Bits dc = ideal_closure(p, c);
  const Bits part1 = incomparables(p, s);
  const Bits part2 = ideal_closure(p, incomparables_restricted(p, s, c)) - (s | dc);
  const Bits part3 = dc - ideal_closure(p, min_elements(p, s) & dc);
  return part1 | part2 | part3;
}

// Order-ideal rowmotion D(ceil I). The empty ideal is the degenerate case of
// the ceiling formula; toggling fills the minimal rank, so return that.
inline Bits rowmotion_ideal(const Poset& p, const Bits& s) {
  if (s.none()) return p.minimal_elements();
  return ideal_closure(p, ceiling(p, s));
}

enum class RowImpl { local, threeset, simplified };

inline const char* to_string(RowImpl impl) {
  switch (impl) {
    case RowImpl::local: return "local";
    case RowImpl::threeset: return "threeset";
    case RowImpl::simplified: return "simplified";
  }
  return "?";
}

// One rowmotion step on a family, by the selected implementation. The global
// formulas only apply to interval-closed sets; order ideals always go through
// the ideal formula (they agree with toggling, tested).
inline Bits rowmotion_step(const Family& fam, const Bits& s,
                           RowImpl impl = RowImpl::simplified) {
  if (fam.kind == FamilyKind::order_ideals) {
    if (impl == RowImpl::local) return rowmotion_local(fam, s);
    return rowmotion_ideal(*fam.poset, s);
  }
  switch (impl) {
    case RowImpl::local: return rowmotion_local(fam, s);
    case RowImpl::threeset: return rowmotion_threeset(*fam.poset, s);
    case RowImpl::simplified: break;
  }
  return rowmotion_simplified(*fam.poset, s);
}

// Cyclic orbit, rotated so the numerically smallest state comes first.
struct Orbit {
  std::vector<Bits> states;
  size_t size() const { return states.size(); }
};

template <typename Step>
Orbit orbit_of(Step&& step, const Bits& start) {
  std::vector<Bits> states{start};
  size_t rep = 0;
  for (Bits cur = step(start); cur != start; cur = step(cur)) {
    if (cur < states[rep]) rep = states.size();
    states.push_back(cur);
  }
  std::rotate(states.begin(), states.begin() + rep, states.end());
  return {std::move(states)};
}

inline Orbit orbit_of(const Family& fam, const Bits& start,
                      RowImpl impl = RowImpl::simplified) {
  return orbit_of([&](const Bits& s) { return rowmotion_step(fam, s, impl); },
                  start);
}

// Orbits of the whole family, listed by ascending canonical representative.
// Seeds are scanned in ascending order, so an unvisited seed is its orbit's
// minimum.
inline std::vector<Orbit> orbit_decomposition(const Family& fam,
                                              RowImpl impl = RowImpl::simplified,
                                              int cap = kDefaultEnumerationCap) {
  const std::vector<Bits> members = fam.members(cap);
  std::vector<char> visited(members.size(), 0);
  auto index_of = [&](const Bits& s) {
    return std::lower_bound(members.begin(), members.end(), s) - members.begin();
  };
  std::vector<Orbit> out;
  for (size_t i = 0; i < members.size(); ++i) {
    if (visited[i]) continue;
    Orbit o = orbit_of(fam, members[i], impl);
    for (const Bits& s : o.states) visited[index_of(s)] = 1;
    out.push_back(std::move(o));
  }
  return out;
}

// ---- statistics -------------------------------------------------------

struct Statistic {
  std::string name;
  std::function<long long(const Poset&, const Bits&)> eval;
};

inline Statistic stat_cardinality() {
  return {"cardinality", [](const Poset&, const Bits& s) {
            return static_cast<long long>(s.count());
          }};
}

// Signed cardinality: +1 on even ranks, -1 on odd ranks.
inline long long signed_cardinality(const Poset& p, const Bits& s) {
  long long v = 0;
  s.for_each([&](int x) { v += p.rank(x) % 2 == 0 ? 1 : -1; });
  return v;
}

inline Statistic stat_signed_cardinality() {
  return {"signed_cardinality", signed_cardinality};
}

inline Statistic stat_max_minus_min() {
  return {"max_minus_min", [](const Poset& p, const Bits& s) {
            return static_cast<long long>(max_elements(p, s).count()) -
                   min_elements(p, s).count();
          }};
}

// ---- homomesy ---------------------------------------------------------

struct HomomesyReport {
  std::string statistic;
  // (orbit size, exact average) per orbit, in decomposition order.
  std::vector<std::pair<size_t, Rational>> per_orbit;
  Rational global_average;
  bool homomesic = false;
  long long counterexample_orbit = -1;  // first orbit whose average differs

  bool c_mesic(const Rational& c) const {
    return homomesic && global_average == c;
  }
};

inline HomomesyReport homomesy_check(const Family& fam, const Statistic& stat,
                                     RowImpl impl = RowImpl::simplified,
                                     int cap = kDefaultEnumerationCap) {
  HomomesyReport rep;
  rep.statistic = stat.name;
  Rational total = 0;
  size_t count = 0;
  const auto orbits = orbit_decomposition(fam, impl, cap);
  for (const Orbit& o : orbits) {
    long long sum = 0;
    for (const Bits& s : o.states) sum += stat.eval(*fam.poset, s);
    rep.per_orbit.emplace_back(o.size(), make_rational(sum, o.size()));
    total += Rational(static_cast<long>(sum));
    count += o.size();
  }
  rep.global_average = total / Rational(static_cast<long>(count));
  rep.homomesic = true;
  for (size_t i = 0; i < rep.per_orbit.size(); ++i) {
    if (rep.per_orbit[i].second != rep.global_average) {
      rep.homomesic = false;
      rep.counterexample_orbit = static_cast<long long>(i);
      break;
    }
  }
  return rep;
}

}  // namespace icsrow
