#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>

namespace wreath {

// Fixed-capacity bit set indexed by small non-negative integers.  Used both
// for faces (bits are vertex indices within one complex) and for facet-index
// sets during searches.  256 slots cover everything this library ever
// materializes; constructions with more vertices are handled by the
// counting/formula routines, which never build faces explicitly.
class FaceBits {
  std::array<std::uint64_t, 4> w_{};

 public:
  static constexpr int capacity = 256;

  constexpr FaceBits() = default;

  void set(int i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

  int count() const {
    int c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
  }
  bool empty() const { return w_[0] == 0 && w_[1] == 0 && w_[2] == 0 && w_[3] == 0; }

  bool is_subset_of(const FaceBits& o) const {
    for (int k = 0; k < 4; ++k)
      if (w_[k] & ~o.w_[k]) return false;
    return true;
  }
  bool intersects(const FaceBits& o) const {
    for (int k = 0; k < 4; ++k)
      if (w_[k] & o.w_[k]) return true;
    return false;
  }

  friend FaceBits operator&(FaceBits a, const FaceBits& b) {
    for (int k = 0; k < 4; ++k) a.w_[k] &= b.w_[k];
    return a;
  }
  friend FaceBits operator|(FaceBits a, const FaceBits& b) {
    for (int k = 0; k < 4; ++k) a.w_[k] |= b.w_[k];
    return a;
  }
  friend FaceBits operator-(FaceBits a, const FaceBits& b) {
    for (int k = 0; k < 4; ++k) a.w_[k] &= ~b.w_[k];
    return a;
  }

  bool operator==(const FaceBits&) const = default;

  /// First set bit at position >= from, or -1 if none.
  int next(int from = 0) const {
    for (int i = from; i < capacity;) {
      std::uint64_t word = w_[i >> 6] >> (i & 63);
      if (word) return i + std::countr_zero(word);
      i = ((i >> 6) + 1) << 6;
    }
    return -1;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (int i = next(0); i >= 0; i = next(i + 1)) f(i);
  }

  /// Order faces as ascending index sequences, shorter prefix first.
  /// This is the canonical facet order used everywhere for determinism.
  bool lex_less(const FaceBits& o) const {
    int a = next(0), b = o.next(0);
    while (a >= 0 && b >= 0) {
      if (a != b) return a < b;
      a = next(a + 1);
      b = o.next(b + 1);
    }
    return a < 0 && b >= 0;
  }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ull;
    for (auto w : w_) {
      h ^= static_cast<std::size_t>(w);
      h *= 1099511628211ull;
    }
    return h;
  }
};

struct FaceBitsHash {
  std::size_t operator()(const FaceBits& b) const { return b.hash(); }
};

}  // namespace wreath
