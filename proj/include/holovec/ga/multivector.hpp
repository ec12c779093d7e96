#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <map>
#include <span>
#include <string>
#include <utility>

#include "holovec/common.hpp"
#include "holovec/ga/blade.hpp"

namespace holovec::ga {

// Coefficients whose magnitude falls below this after an arithmetic step are
// dropped, so exact cancellations leave no stored term.
inline constexpr double kPruneTolerance = 1e-14;

// A sparse real linear combination of blades. Immutable value type: all
// arithmetic returns new objects, stored terms are kept pruned, and the map
// is ordered by mask so iteration (printing, serialization) is deterministic.
class Multivector {
 public:
  using TermMap = std::map<std::uint64_t, double>;

  explicit Multivector(int dim) : dim_(dim) { check_dim(dim); }

  static Multivector scalar(int dim, double value) {
    Multivector out(dim);
    out.insert(0, value);
    return out;
  }

  static Multivector blade(const BladeMask& b, double coeff = 1.0) {
    validate(b);
    Multivector out(b.dim);
    out.insert(b.bits, coeff);
    return out;
  }

  static Multivector blade(const SignedBlade& sb, double coeff = 1.0) {
    return blade(sb.mask, coeff * sb.sign);
  }

  // Grade-1 element with the given Euclidean components; dim = count.
  static Multivector vector(std::span<const double> components) {
    Multivector out(static_cast<int>(components.size()));
    for (std::size_t i = 0; i < components.size(); ++i)
      out.insert(std::uint64_t{1} << i, components[i]);
    return out;
  }

  static Multivector from_terms(int dim, TermMap terms) {
    Multivector out(dim);
    for (const auto& [mask, coeff] : terms) {
      validate(BladeMask{mask, dim});
      out.insert(mask, coeff);
    }
    return out;
  }

  int dim() const { return dim_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  double coeff(std::uint64_t mask) const {
    const auto it = terms_.find(mask);
    return it == terms_.end() ? 0.0 : it->second;
  }

  // True when every stored term has the given grade (true for zero).
  bool is_grade(int r) const {
    for (const auto& [mask, coeff] : terms_)
      if (std::popcount(mask) != r) return false;
    return true;
  }

  friend bool operator==(const Multivector&, const Multivector&) = default;

  friend Multivector operator+(const Multivector& a, const Multivector& b) {
    check_pair(a, b, "add");
    Multivector out(a.dim_);
    out.terms_ = a.terms_;
    for (const auto& [mask, coeff] : b.terms_) out.terms_[mask] += coeff;
    out.prune();
    return out;
  }

  friend Multivector operator-(const Multivector& a, const Multivector& b) {
    check_pair(a, b, "subtract");
    Multivector out(a.dim_);
    out.terms_ = a.terms_;
    for (const auto& [mask, coeff] : b.terms_) out.terms_[mask] -= coeff;
    out.prune();
    return out;
  }

  friend Multivector operator*(const Multivector& a, double s) {
    Multivector out(a.dim_);
    for (const auto& [mask, coeff] : a.terms_) out.terms_[mask] = coeff * s;
    out.prune();
    return out;
  }

  friend Multivector operator*(double s, const Multivector& a) { return a * s; }

  // Geometric product: bilinear extension of the blade product, coefficients
  // accumulated per output mask.
  friend Multivector gp(const Multivector& a, const Multivector& b) {
    check_pair(a, b, "gp");
    Multivector out(a.dim_);
    for (const auto& [pa, ca] : a.terms_) {
      const BladeMask left{pa, a.dim_};
      for (const auto& [pb, cb] : b.terms_) {
        const SignedBlade prod = blade_mul(left, BladeMask{pb, b.dim_});
        out.terms_[prod.mask.bits] += ca * cb * prod.sign;
      }
    }
    out.prune();
    return out;
  }

 private:
  static void check_dim(int dim) {
    if (dim < 1 || dim > kMaxDim)
      throw Error("multivector dimension must be in [1, 64], got " +
                  std::to_string(dim));
  }

  static void check_pair(const Multivector& a, const Multivector& b,
                         const char* op) {
    if (a.dim_ != b.dim_)
      throw DimensionMismatch(std::string(op) + ": dimensions " +
                              std::to_string(a.dim_) + " and " +
                              std::to_string(b.dim_));
  }

  void insert(std::uint64_t mask, double coeff) {
    if (std::abs(coeff) >= kPruneTolerance) terms_[mask] = coeff;
  }

  void prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
      if (std::abs(it->second) < kPruneTolerance)
        it = terms_.erase(it);
      else
        ++it;
    }
  }

  int dim_;
  TermMap terms_;
};

// Keeps exactly the terms of grade r.
inline Multivector grade_project(const Multivector& a, int r) {
  if (r < 0 || r > a.dim())
    throw Error("grade_project: grade " + std::to_string(r) +
                " out of range for dimension " + std::to_string(a.dim()));
  Multivector::TermMap kept;
  for (const auto& [mask, coeff] : a.terms())
    if (std::popcount(mask) == r) kept[mask] = coeff;
  return Multivector::from_terms(a.dim(), std::move(kept));
}

// Euclidean norm of the coefficient vector over all 2^n blades.
inline double coeff_norm(const Multivector& a) {
  double sum = 0.0;
  for (const auto& [mask, coeff] : a.terms()) sum += coeff * coeff;
  return std::sqrt(sum);
}

// Dot product of two coefficient vectors.
inline double coeff_dot(const Multivector& a, const Multivector& b) {
  double sum = 0.0;
  for (const auto& [mask, coeff] : a.terms()) sum += coeff * b.coeff(mask);
  return sum;
}

namespace detail {
inline void require_vector(const Multivector& x, const char* op) {
  if (!x.is_grade(1))
    throw Error(std::string(op) + ": operand is not a grade-1 multivector");
}
}  // namespace detail

// Inner (symmetric, scalar) and outer (antisymmetric, bivector) parts of the
// product of two vectors: x.y = (xy + yx)/2, x^y = (xy - yx)/2.
inline std::pair<double, Multivector> inner_outer(const Multivector& x,
                                                  const Multivector& y) {
  detail::require_vector(x, "inner_outer");
  detail::require_vector(y, "inner_outer");
  const Multivector xy = gp(x, y);
  const Multivector yx = gp(y, x);
  const double inner = 0.5 * (xy + yx).coeff(0);
  return {inner, 0.5 * (xy - yx)};
}

// x^{-1} = x / |x|^2 for grade-1 x with nonzero magnitude.
inline Multivector vector_inverse(const Multivector& x) {
  detail::require_vector(x, "vector_inverse");
  const double norm = coeff_norm(x);
  if (norm == 0.0)
    throw NotInvertible("vector_inverse: zero-magnitude vector");
  return x * (1.0 / (norm * norm));
}

// "+2*c0110 -1.5*c1111"; zero multivector prints "0".
inline std::string to_string(const Multivector& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& [mask, coeff] : a.terms()) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%+.6g", coeff);
    if (!out.empty()) out += ' ';
    out += buf;
    out += "*c";
    out += format_blade(BladeMask{mask, a.dim()});
  }
  return out;
}

}  // namespace holovec::ga
