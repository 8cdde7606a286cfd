#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "icsrow/bits.hpp"

namespace icsrow {

// Immutable finite poset given by its cover relations. up(x)/down(x) are the
// reflexive up- and down-sets as bit masks, precomputed at construction, so
// leq is a single bit test. Products of chains are indexed row-major:
// (i1,...,ik) -> ((i1-1)*d2 + (i2-1))*d3 + ... which is itself a linear
// extension, so the canonical extension of a product is the identity.
class Poset {
public:
  static Poset chain(int n) { return product({n}); }

  static Poset product(std::vector<int> dims) {
    if (dims.empty()) throw std::invalid_argument("poset: empty dimension list");
    long long total = 1;
    for (int d : dims) {
      if (d < 1) throw std::invalid_argument("poset: zero dimension");
      total *= d;
      if (total > Bits::capacity)
        throw std::invalid_argument("poset: more than " +
                                    std::to_string(Bits::capacity) + " elements");
    }
    Poset p;
    p.dims_ = std::move(dims);
    p.n_ = static_cast<int>(total);
    const int k = static_cast<int>(p.dims_.size());
    std::vector<int> stride(k, 1);
    for (int a = k - 2; a >= 0; --a) stride[a] = stride[a + 1] * p.dims_[a + 1];
    std::vector<int> c(k, 0);
    for (int e = 0; e < p.n_; ++e) {
      for (int a = 0; a < k; ++a)
        if (c[a] + 1 < p.dims_[a]) p.covers_.emplace_back(e, e + stride[a]);
      for (int a = k - 1; a >= 0; --a) {
        if (++c[a] < p.dims_[a]) break;
        c[a] = 0;
      }
    }
    p.finish();
    return p;
  }

  int size() const { return n_; }
  const std::vector<int>& dims() const { return dims_; }
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }
  const Bits& universe() const { return universe_; }

  bool leq(int x, int y) const { return up_[x].test(y); }
  const Bits& up(int x) const { return up_[x]; }
  const Bits& down(int x) const { return down_[x]; }
  int rank(int x) const { return rank_[x]; }
  const Bits& minimal_elements() const { return minimal_; }
  const Bits& maximal_elements() const { return maximal_; }

  // Elements in topological order, smallest index first among candidates.
  const std::vector<int>& canonical_extension() const { return canonical_ext_; }

  // Coordinate conversions for product posets, 1-based per chain.
  int index_of(const std::vector<int>& coord) const {
    int e = 0;
    for (size_t a = 0; a < dims_.size(); ++a) {
      if (coord[a] < 1 || coord[a] > dims_[a])
        throw std::out_of_range("poset: coordinate out of range");
      e = e * dims_[a] + (coord[a] - 1);
    }
    return e;
  }
  std::vector<int> coords_of(int e) const {
    std::vector<int> c(dims_.size());
    for (int a = static_cast<int>(dims_.size()) - 1; a >= 0; --a) {
      c[a] = e % dims_[a] + 1;
      e /= dims_[a];
    }
    return c;
  }

private:
  void finish() {
    up_.assign(n_, Bits{});
    down_.assign(n_, Bits{});
    rank_.assign(n_, 0);
    universe_ = Bits::first_n(n_);

    std::vector<std::vector<int>> above(n_), below(n_);
    std::vector<int> indeg(n_, 0);
    for (auto [lo, hi] : covers_) {
      above[lo].push_back(hi);
      below[hi].push_back(lo);
      ++indeg[hi];
    }

    // canonical extension: repeatedly take the smallest available element
    std::vector<int> deg = indeg;
    std::vector<char> avail(n_, 0);
    canonical_ext_.reserve(n_);
    for (int e = 0; e < n_; ++e) avail[e] = deg[e] == 0;
    for (int step = 0; step < n_; ++step) {
      int pick = -1;
      for (int e = 0; e < n_; ++e)
        if (avail[e]) { pick = e; break; }
      if (pick < 0) throw std::logic_error("poset: covers contain a cycle");
      avail[pick] = 0;
      canonical_ext_.push_back(pick);
      for (int h : above[pick])
        if (--deg[h] == 0) avail[h] = 1;
    }

    // closures and ranks in extension order
    for (int e : canonical_ext_) {
      down_[e].set(e);
      for (int lo : below[e]) {
        down_[e] |= down_[lo];
        rank_[e] = std::max(rank_[e], rank_[lo] + 1);
      }
    }
    for (auto it = canonical_ext_.rbegin(); it != canonical_ext_.rend(); ++it) {
      up_[*it].set(*it);
      for (int hi : above[*it]) up_[*it] |= up_[hi];
    }
    for (int e = 0; e < n_; ++e) {
      if (below[e].empty()) minimal_.set(e);
      if (above[e].empty()) maximal_.set(e);
    }
  }

  int n_ = 0;
  std::vector<int> dims_;
  std::vector<std::pair<int, int>> covers_;
  std::vector<Bits> up_, down_;
  std::vector<int> rank_;
  std::vector<int> canonical_ext_;
  Bits universe_, minimal_, maximal_;
};

// A linear extension: canonical when no seed is given, otherwise a seeded
// pseudorandom topological order (deterministic per seed).
inline std::vector<int> linear_extension(const Poset& p,
                                         std::optional<uint64_t> seed = {}) {
  if (!seed) return p.canonical_extension();
  const int n = p.size();
  std::vector<std::vector<int>> above(n);
  std::vector<int> deg(n, 0);
  for (auto [lo, hi] : p.covers()) {
    above[lo].push_back(hi);
    ++deg[hi];
  }
  std::mt19937_64 rng(*seed);
  std::vector<int> avail, out;
  out.reserve(n);
  for (int e = 0; e < n; ++e)
    if (deg[e] == 0) avail.push_back(e);
  while (!avail.empty()) {
    size_t k = std::uniform_int_distribution<size_t>(0, avail.size() - 1)(rng);
    int e = avail[k];
    avail[k] = avail.back();
    avail.pop_back();
    out.push_back(e);
    for (int h : above[e])
      if (--deg[h] == 0) avail.push_back(h);
  }
  return out;
}

}  // namespace icsrow
