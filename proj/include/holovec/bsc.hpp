#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "holovec/common.hpp"
#include "holovec/rng.hpp"

// Binary spatter codes: XOR binding, thresholded majority bundling, Hamming
// distance, and the exponential map onto +/-1 vectors.

namespace holovec::bsc {

// An n-bit string packed 64 bits per word. Unused tail bits of the last word
// are kept zero so word-wise popcount is exact. String form is written
// leftmost-first: character i is bit i.
class BitString {
 public:
  static constexpr int kWordBits = 64;

  explicit BitString(int n) : n_(check_size(n)), words_(word_count(n), 0) {}

  static BitString random(int n, rng::Engine& rng) {
    BitString out(n);
    for (auto& word : out.words_) word = rng();
    out.mask_tail();
    return out;
  }

  // Accepts "0101...", optionally prefixed "0b"; or "0x..." hex expanded
  // MSB-first, 4 bits per digit (hex requires n divisible by 4).
  static BitString parse(std::string_view text, int n) {
    if (text.substr(0, 2) == "0x" || text.substr(0, 2) == "0X")
      return parse_hex(text.substr(2), n);
    if (text.substr(0, 2) == "0b" || text.substr(0, 2) == "0B")
      text.remove_prefix(2);
    if (static_cast<int>(text.size()) != n)
      throw ParseError("bit string has " + std::to_string(text.size()) +
                       " characters, expected " + std::to_string(n));
    BitString out(n);
    for (int i = 0; i < n; ++i) {
      if (text[static_cast<std::size_t>(i)] == '1')
        out.set_bit(i, true);
      else if (text[static_cast<std::size_t>(i)] != '0')
        throw ParseError("bit string may contain only '0' and '1'");
    }
    return out;
  }

  int size() const { return n_; }

  bool bit(int i) const {
    return (words_[static_cast<std::size_t>(i / kWordBits)] >>
            (i % kWordBits)) &
           1;
  }

  void set_bit(int i, bool value) {
    const std::uint64_t mask = std::uint64_t{1} << (i % kWordBits);
    auto& word = words_[static_cast<std::size_t>(i / kWordBits)];
    if (value)
      word |= mask;
    else
      word &= ~mask;
  }

  const std::vector<std::uint64_t>& words() const { return words_; }

  std::string to_string() const {
    std::string out(static_cast<std::size_t>(n_), '0');
    for (int i = 0; i < n_; ++i)
      if (bit(i)) out[static_cast<std::size_t>(i)] = '1';
    return out;
  }

  friend bool operator==(const BitString&, const BitString&) = default;

 private:
  static int check_size(int n) {
    if (n < 1) throw Error("bit string length must be >= 1");
    return n;
  }

  static std::size_t word_count(int n) {
    return static_cast<std::size_t>((n + kWordBits - 1) / kWordBits);
  }

  static BitString parse_hex(std::string_view digits, int n) {
    if (n % 4 != 0 || static_cast<int>(digits.size()) * 4 != n)
      throw ParseError("hex literal must encode exactly n bits, n % 4 == 0");
    BitString out(n);
    for (std::size_t d = 0; d < digits.size(); ++d) {
      const char c = digits[d];
      int value;
      if (c >= '0' && c <= '9')
        value = c - '0';
      else if (c >= 'a' && c <= 'f')
        value = c - 'a' + 10;
      else if (c >= 'A' && c <= 'F')
        value = c - 'A' + 10;
      else
        throw ParseError("invalid hex digit in bit-string literal");
      for (int b = 0; b < 4; ++b)
        out.set_bit(static_cast<int>(d) * 4 + b, (value >> (3 - b)) & 1);
    }
    return out;
  }

  void mask_tail() {
    const int tail = n_ % kWordBits;
    if (tail != 0) words_.back() &= (std::uint64_t{1} << tail) - 1;
  }

  friend BitString xor_bind(const BitString&, const BitString&);

  int n_;
  std::vector<std::uint64_t> words_;
};

namespace detail {
inline void check_lengths(int a, int b, const char* op) {
  if (a != b)
    throw DimensionMismatch(std::string(op) + ": lengths " +
                            std::to_string(a) + " and " + std::to_string(b));
}
}  // namespace detail

// Componentwise sum mod 2. Self-inverse: x (+) (x (+) y) = y.
inline BitString xor_bind(const BitString& x, const BitString& y) {
  detail::check_lengths(x.size(), y.size(), "xor_bind");
  BitString out = x;
  for (std::size_t w = 0; w < out.words_.size(); ++w)
    out.words_[w] ^= y.words()[w];
  return out;
}

// Number of differing positions, popcount of the XOR.
inline int hamming(const BitString& x, const BitString& y) {
  detail::check_lengths(x.size(), y.size(), "hamming");
  int count = 0;
  for (std::size_t w = 0; w < x.words().size(); ++w)
    count += std::popcount(x.words()[w] ^ y.words()[w]);
  return count;
}

// Majority-rule bundling x_k = Theta(mean_j x_{j,k} - 1/2) with Theta(0) = 1,
// so a tie (exactly N/2 ones) yields 1.
inline BitString majority_bundle(std::span<const BitString> rows) {
  if (rows.empty()) throw Error("majority_bundle: empty list");
  const int n = rows[0].size();
  for (const auto& row : rows)
    detail::check_lengths(row.size(), n, "majority_bundle");
  const int total = static_cast<int>(rows.size());
  BitString out(n);
  for (int i = 0; i < n; ++i) {
    int ones = 0;
    for (const auto& row : rows) ones += row.bit(i);
    if (2 * ones >= total) out.set_bit(i, true);
  }
  return out;
}

// A +/-1 vector, image of a bit string under the exponential map.
struct BipolarVector {
  std::vector<std::int8_t> values;

  int size() const { return static_cast<int>(values.size()); }
  friend bool operator==(const BipolarVector&, const BipolarVector&) = default;
};

// x |-> (-1)^x componentwise; carries XOR to elementwise product.
inline BipolarVector exp_map(const BitString& x) {
  BipolarVector out;
  out.values.resize(static_cast<std::size_t>(x.size()));
  for (int i = 0; i < x.size(); ++i)
    out.values[static_cast<std::size_t>(i)] = x.bit(i) ? -1 : +1;
  return out;
}

inline BitString log_map(const BipolarVector& u) {
  BitString out(u.size());
  for (int i = 0; i < u.size(); ++i)
    out.set_bit(i, u.values[static_cast<std::size_t>(i)] < 0);
  return out;
}

inline BipolarVector elementwise_mul(const BipolarVector& a,
                                     const BipolarVector& b) {
  detail::check_lengths(a.size(), b.size(), "elementwise_mul");
  BipolarVector out = a;
  for (std::size_t i = 0; i < out.values.size(); ++i)
    out.values[i] = static_cast<std::int8_t>(out.values[i] * b.values[i]);
  return out;
}

// Componentwise sign of the sum with sign(0) = +1. Note the tie convention
// disagrees with majority_bundle under exp_map: Theta(0) = 1 maps to -1 while
// sign(0) = +1, so the two bundles correspond only for odd row counts.
inline BipolarVector sign_threshold(std::span<const BipolarVector> rows) {
  if (rows.empty()) throw Error("sign_threshold: empty list");
  const int n = rows[0].size();
  for (const auto& row : rows)
    detail::check_lengths(row.size(), n, "sign_threshold");
  BipolarVector out;
  out.values.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    int sum = 0;
    for (const auto& row : rows) sum += row.values[static_cast<std::size_t>(i)];
    out.values[static_cast<std::size_t>(i)] = (sum >= 0) ? +1 : -1;
  }
  return out;
}

}  // namespace holovec::bsc
