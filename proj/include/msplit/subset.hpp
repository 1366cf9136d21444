#pragma once

// Ground-set subsets as bitsets over the column order, plus the canonical
// (size, then lexicographic-by-index) ordering used for all enumerations.

#include <bit>
#include <cstdint>
#include <vector>

#include "msplit/errors.hpp"

namespace msplit {

class GroundSubset {
 public:
  GroundSubset() = default;
  GroundSubset(std::uint32_t bits, int universe) : bits_(bits), universe_(universe) {
    if (universe < 0 || universe > 32 || (universe < 32 && (bits >> universe) != 0))
      throw ForeignSubset();
  }
  static GroundSubset empty(int universe) { return GroundSubset(0, universe); }
  static GroundSubset full(int universe) {
    return GroundSubset(universe >= 32 ? ~0u : ((1u << universe) - 1u), universe);
  }
  static GroundSubset of(const std::vector<int>& indices, int universe) {
    std::uint32_t b = 0;
    for (int i : indices) b |= (1u << i);
    return GroundSubset(b, universe);
  }

  std::uint32_t bits() const { return bits_; }
  int universe() const { return universe_; }
  int size() const { return std::popcount(bits_); }
  bool is_empty() const { return bits_ == 0; }
  bool contains(int i) const { return (bits_ >> i) & 1u; }
  bool subset_of(const GroundSubset& o) const { return (bits_ & o.bits_) == bits_; }
  bool intersects(const GroundSubset& o) const { return (bits_ & o.bits_) != 0; }

  GroundSubset unite(const GroundSubset& o) const { return GroundSubset(bits_ | o.bits_, universe_); }
  GroundSubset intersect(const GroundSubset& o) const { return GroundSubset(bits_ & o.bits_, universe_); }
  GroundSubset minus(const GroundSubset& o) const { return GroundSubset(bits_ & ~o.bits_, universe_); }
  GroundSubset complement() const { return GroundSubset(full(universe_).bits() & ~bits_, universe_); }
  GroundSubset with(int i) const { return GroundSubset(bits_ | (1u << i), universe_); }
  GroundSubset without(int i) const { return GroundSubset(bits_ & ~(1u << i), universe_); }

  // Same bit pattern over a larger ground set (new elements absent).
  GroundSubset extended(int universe) const { return GroundSubset(bits_, universe); }

  std::vector<int> indices() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint32_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  friend bool operator==(const GroundSubset&, const GroundSubset&) = default;

 private:
  std::uint32_t bits_ = 0;
  int universe_ = 0;
};

// Orders by size, then lexicographically on the ascending index sequence.
// For equal sizes the first differing index decides, i.e. the lowest set bit
// of the symmetric difference.
inline bool canonical_mask_less(std::uint32_t a, std::uint32_t b) {
  const int pa = std::popcount(a), pb = std::popcount(b);
  if (pa != pb) return pa < pb;
  if (a == b) return false;
  const std::uint32_t d = a ^ b;
  return (d & (~d + 1u) & a) != 0;
}

inline bool canonical_less(const GroundSubset& a, const GroundSubset& b) {
  return canonical_mask_less(a.bits(), b.bits());
}

namespace detail {

// Lexicographic successor of an ascending k-combination of {0..n-1};
// returns false when idx was the last combination.
inline bool next_combination(std::vector<int>& idx, int n) {
  const int k = static_cast<int>(idx.size());
  for (int i = k - 1; i >= 0; --i) {
    if (idx[static_cast<std::size_t>(i)] < n - k + i) {
      ++idx[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j)
        idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
      return true;
    }
  }
  return false;
}

inline std::uint32_t mask_of(const std::vector<int>& idx) {
  std::uint32_t b = 0;
  for (int i : idx) b |= (1u << i);
  return b;
}

// Visits every size-k subset mask of {0..n-1} in lexicographic index order.
template <typename F>
void for_each_combination(int n, int k, F&& f) {
  if (k < 0 || k > n) return;
  if (k == 0) {
    f(0u);
    return;
  }
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  do {
    f(mask_of(idx));
  } while (next_combination(idx, n));
}

}  // namespace detail

}  // namespace msplit
