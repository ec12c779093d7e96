#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <string>
#include <string_view>

#include "holovec/common.hpp"

namespace holovec::ga {

// A basis blade of an n-dimensional Euclidean geometric algebra, identified
// with an n-bit mask: bit i (0-indexed) is set iff basis vector b_{i+1} is a
// factor. Mask 0 is the unit scalar blade. In string form the leftmost
// character is bit 0, so "1010" with n=4 is b1*b3.
struct BladeMask {
  std::uint64_t bits = 0;
  int dim = 0;

  friend bool operator==(const BladeMask&, const BladeMask&) = default;
};

constexpr int kMaxDim = 64;  // masks fit one machine word

inline void validate(const BladeMask& m) {
  if (m.dim < 1 || m.dim > kMaxDim)
    throw Error("blade dimension must be in [1, 64], got " +
                std::to_string(m.dim));
  if (m.dim < 64 && (m.bits >> m.dim) != 0)
    throw Error("blade mask has bits at or above dimension " +
                std::to_string(m.dim));
}

// A blade together with a +/-1 sign, the value of a projective product.
struct SignedBlade {
  int sign = +1;
  BladeMask mask;

  friend bool operator==(const SignedBlade&, const SignedBlade&) = default;
};

namespace detail {

// above_mask[k]: all bit positions strictly greater than k.
inline constexpr std::array<std::uint64_t, 64> above_masks = [] {
  std::array<std::uint64_t, 64> table{};
  for (int k = 0; k < 63; ++k) table[k] = ~std::uint64_t{0} << (k + 1);
  table[63] = 0;
  return table;
}();

// Reordering swaps for the product (left)*(right): each factor of the right
// operand jumps over every factor of the left operand with a strictly higher
// basis index.
inline int reorder_swaps(std::uint64_t left, std::uint64_t right) {
  int swaps = 0;
  while (right != 0) {
    const int k = std::countr_zero(right);
    swaps += std::popcount(left & above_masks[k]);
    right &= right - 1;
  }
  return swaps;
}

}  // namespace detail

// Geometric product of two basis blades: the result blade is the XOR of the
// masks and the sign counts factor reorderings, c_x c_y = (-1)^D c_{x XOR y}.
inline SignedBlade blade_mul(const BladeMask& x, const BladeMask& y) {
  if (x.dim != y.dim)
    throw DimensionMismatch("blade_mul: dimensions " + std::to_string(x.dim) +
                            " and " + std::to_string(y.dim));
  const int sign = (detail::reorder_swaps(x.bits, y.bits) & 1) ? -1 : +1;
  return {sign, BladeMask{x.bits ^ y.bits, x.dim}};
}

// Sign of the square of a blade with r factors: (-1)^(r(r-1)/2).
inline int blade_square_sign(const BladeMask& x) {
  const int r = std::popcount(x.bits);
  return ((r * (r - 1) / 2) & 1) ? -1 : +1;
}

// Every blade is invertible in Euclidean signature; the inverse is the blade
// itself times the sign of its square.
inline SignedBlade blade_inverse(const BladeMask& x) {
  return {blade_square_sign(x), x};
}

// Parses "x1 x2 ... xn" written leftmost-first, e.g. "1010" -> b1*b3, n=4.
inline BladeMask parse_blade(std::string_view text) {
  if (text.empty() || text.size() > kMaxDim)
    throw ParseError("blade string must have 1..64 characters");
  BladeMask m{0, static_cast<int>(text.size())};
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1')
      m.bits |= std::uint64_t{1} << i;
    else if (text[i] != '0')
      throw ParseError("blade string may contain only '0' and '1'");
  }
  return m;
}

inline std::string format_blade(const BladeMask& m) {
  std::string out(static_cast<std::size_t>(m.dim), '0');
  for (int i = 0; i < m.dim; ++i)
    if ((m.bits >> i) & 1) out[static_cast<std::size_t>(i)] = '1';
  return out;
}

}  // namespace holovec::ga
