#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <functional>

namespace icsrow {

// Fixed-width element set. 256 bits covers every poset this library builds
// ([2]x[n] up to n = 128 for the generic engine; enumeration is capped far
// below that).
class Bits {
public:
  static constexpr int capacity = 256;
  static constexpr int nwords = 4;

  constexpr Bits() = default;

  static Bits single(int i) {
    Bits b;
    b.set(i);
    return b;
  }

  // Bits 0..n-1 set.
  static Bits first_n(int n) {
    Bits b;
    for (int w = 0; n > 0; ++w, n -= 64)
      b.w_[w] = n >= 64 ? ~0ull : ((1ull << n) - 1);
    return b;
  }

  void set(int i) { w_[i >> 6] |= 1ull << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(1ull << (i & 63)); }
  void flip(int i) { w_[i >> 6] ^= 1ull << (i & 63); }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

  int count() const {
    int c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
  }
  bool none() const { return !(w_[0] | w_[1] | w_[2] | w_[3]); }
  bool any() const { return !none(); }

  // Lowest set bit, -1 when empty.
  int lowest() const {
    for (int i = 0; i < nwords; ++i)
      if (w_[i]) return 64 * i + std::countr_zero(w_[i]);
    return -1;
  }

  // Next set bit > i, -1 when exhausted.
  int next(int i) const {
    ++i;
    if (i >= capacity) return -1;
    uint64_t w = w_[i >> 6] >> (i & 63);
    if (w) return i + std::countr_zero(w);
    for (int k = (i >> 6) + 1; k < nwords; ++k)
      if (w_[k]) return 64 * k + std::countr_zero(w_[k]);
    return -1;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (int i = lowest(); i >= 0; i = next(i)) f(i);
  }

  friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
  friend Bits operator|(Bits a, const Bits& b) { return a |= b; }
  friend Bits operator^(Bits a, const Bits& b) { return a ^= b; }
  // Set difference.
  friend Bits operator-(Bits a, const Bits& b) { return a -= b; }

  Bits& operator&=(const Bits& o) {
    for (int i = 0; i < nwords; ++i) w_[i] &= o.w_[i];
    return *this;
  }
  Bits& operator|=(const Bits& o) {
    for (int i = 0; i < nwords; ++i) w_[i] |= o.w_[i];
    return *this;
  }
  Bits& operator^=(const Bits& o) {
    for (int i = 0; i < nwords; ++i) w_[i] ^= o.w_[i];
    return *this;
  }
  Bits& operator-=(const Bits& o) {
    for (int i = 0; i < nwords; ++i) w_[i] &= ~o.w_[i];
    return *this;
  }

  bool subset_of(const Bits& o) const {
    for (int i = 0; i < nwords; ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }
  bool intersects(const Bits& o) const {
    for (int i = 0; i < nwords; ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  bool operator==(const Bits&) const = default;

  // Numeric order of the bit vector; the canonical order used everywhere.
  std::strong_ordering operator<=>(const Bits& o) const {
    for (int i = nwords - 1; i >= 0; --i)
      if (w_[i] != o.w_[i]) return w_[i] <=> o.w_[i];
    return std::strong_ordering::equal;
  }

  size_t hash() const {
    size_t h = 0;
    for (auto w : w_) h = h * 0x9e3779b97f4a7c15ull + std::hash<uint64_t>{}(w);
    return h;
  }

private:
  std::array<uint64_t, nwords> w_{};
};

struct BitsHash {
  size_t operator()(const Bits& b) const { return b.hash(); }
};

}  // namespace icsrow
