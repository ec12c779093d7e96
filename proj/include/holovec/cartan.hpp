#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

#include "holovec/common.hpp"
#include "holovec/ga/blade.hpp"
#include "holovec/ga/multivector.hpp"
#include "holovec/rng.hpp"

// Matrix representation of the geometric algebra: Pauli matrices chained
// with Kronecker products into the Cartan generator families. Used only as
// an independent cross-check of the blade product, never as the production
// representation.

namespace holovec::cartan {

using ComplexMatrix = Eigen::MatrixXcd;

inline ComplexMatrix identity(int side) {
  return ComplexMatrix::Identity(side, side);
}

inline ComplexMatrix pauli(int i) {
  const std::complex<double> I{0.0, 1.0};
  ComplexMatrix out(2, 2);
  switch (i) {
    case 1:
      out << 0, 1, 1, 0;
      break;
    case 2:
      out << 0, -I, I, 0;
      break;
    case 3:
      out << 1, 0, 0, -1;
      break;
    default:
      throw Error("pauli: index must be 1, 2, or 3");
  }
  return out;
}

// Left-to-right Kronecker chain, matching the paper-order tensor notation.
inline ComplexMatrix kron(std::span<const ComplexMatrix> factors) {
  if (factors.empty()) throw Error("kron: empty factor list");
  ComplexMatrix acc = factors[0];
  for (std::size_t i = 1; i < factors.size(); ++i)
    acc = Eigen::kroneckerProduct(acc, factors[i]).eval();
  return acc;
}

// m tensor factors give matrices of side 2^m housing up to n = 2m
// anticommuting generators.
struct CartanConfig {
  int m = 1;
  int n = 2;

  int side() const { return 1 << m; }
};

inline void validate(const CartanConfig& cfg) {
  if (cfg.m < 1 || cfg.m > 7)
    throw Error("cartan: factor count m must be in [1, 7], got " +
                std::to_string(cfg.m));
  if (cfg.n < 1 || cfg.n > 2 * cfg.m)
    throw Error("cartan: generator count n must be in [1, 2m], got " +
                std::to_string(cfg.n));
}

// Generator j of the Cartan family: for j = 2k the chain has (m-k) leading
// sigma_1 factors, one sigma_2, and (k-1) trailing identities; for j = 2k-1
// the middle factor is sigma_3 instead.
inline ComplexMatrix generator(int j, const CartanConfig& cfg) {
  validate(cfg);
  if (j < 1 || j > 2 * cfg.m)
    throw Error("generator: index " + std::to_string(j) +
                " out of range for m = " + std::to_string(cfg.m));
  const int k = (j + 1) / 2;
  const ComplexMatrix middle = pauli(j % 2 == 0 ? 2 : 3);
  std::vector<ComplexMatrix> factors;
  factors.reserve(static_cast<std::size_t>(cfg.m));
  for (int i = 0; i < cfg.m - k; ++i) factors.push_back(pauli(1));
  factors.push_back(middle);
  for (int i = 0; i < k - 1; ++i) factors.push_back(identity(2));
  return kron(factors);
}

// Ordered product of generators over the set bits of the mask, ascending.
inline ComplexMatrix rep_blade(const ga::BladeMask& x,
                               const CartanConfig& cfg) {
  validate(cfg);
  if (x.dim > 2 * cfg.m)
    throw Error("rep_blade: blade dimension " + std::to_string(x.dim) +
                " exceeds 2m = " + std::to_string(2 * cfg.m));
  ComplexMatrix acc = identity(cfg.side());
  for (int i = 0; i < x.dim; ++i)
    if ((x.bits >> i) & 1) acc = (acc * generator(i + 1, cfg)).eval();
  return acc;
}

// Coefficient-weighted sum of blade representations; linear and
// multiplicative, rep(gp(a, b)) = rep(a) rep(b).
inline ComplexMatrix rep_mv(const ga::Multivector& a,
                            const CartanConfig& cfg) {
  validate(cfg);
  ComplexMatrix acc = ComplexMatrix::Zero(cfg.side(), cfg.side());
  for (const auto& [mask, coeff] : a.terms())
    acc += coeff * rep_blade(ga::BladeMask{mask, a.dim()}, cfg);
  return acc;
}

struct OracleReport {
  int n = 0;
  int m = 0;
  bool exhaustive = true;
  std::uint64_t pairs_checked = 0;
  std::uint64_t failures = 0;
  double worst_deviation = 0.0;

  bool passed() const { return failures == 0; }
};

struct OracleOptions {
  // 0 means automatic: exhaustive when 4^n <= 2^24, else sampled pairs.
  std::uint64_t samples = 0;
  std::uint64_t seed = 42;
  double tolerance = 1e-12;
};

// Cross-checks the closed-form blade product against matrices: for mask
// pairs (x, y), rep(x) rep(y) must equal sign * rep(x XOR y) entrywise.
inline OracleReport oracle_verify(int n, const CartanConfig& cfg,
                                  const OracleOptions& opts = {}) {
  validate(cfg);
  if (n < 1 || n > 2 * cfg.m)
    throw Error("oracle_verify: n must be in [1, 2m]");

  OracleReport report;
  report.n = n;
  report.m = cfg.m;
  const std::uint64_t mask_count = std::uint64_t{1} << n;
  report.exhaustive =
      opts.samples == 0 && mask_count * mask_count <= (std::uint64_t{1} << 24);

  // Blade matrices are memoized when they fit in a modest budget; otherwise
  // recomputed per pair.
  const std::uint64_t side = std::uint64_t{1} << cfg.m;
  const bool memoize =
      mask_count * side * side * sizeof(std::complex<double>) <= (64u << 20);
  std::vector<ComplexMatrix> memo;
  if (memoize) {
    memo.reserve(mask_count);
    for (std::uint64_t mask = 0; mask < mask_count; ++mask)
      memo.push_back(rep_blade(ga::BladeMask{mask, n}, cfg));
  }
  const auto rep_of = [&](std::uint64_t mask) -> ComplexMatrix {
    if (memoize) return memo[mask];
    return rep_blade(ga::BladeMask{mask, n}, cfg);
  };

  const auto check_pair = [&](std::uint64_t x, std::uint64_t y) {
    const ga::SignedBlade expected =
        ga::blade_mul(ga::BladeMask{x, n}, ga::BladeMask{y, n});
    const ComplexMatrix lhs = rep_of(x) * rep_of(y);
    const ComplexMatrix rhs =
        static_cast<double>(expected.sign) * rep_of(expected.mask.bits);
    const double deviation = (lhs - rhs).cwiseAbs().maxCoeff();
    report.worst_deviation = std::max(report.worst_deviation, deviation);
    if (deviation > opts.tolerance) ++report.failures;
    ++report.pairs_checked;
  };

  if (report.exhaustive) {
    for (std::uint64_t x = 0; x < mask_count; ++x)
      for (std::uint64_t y = 0; y < mask_count; ++y) check_pair(x, y);
  } else {
    const std::uint64_t samples = opts.samples == 0 ? 1024 : opts.samples;
    rng::Engine rng(opts.seed);
    for (std::uint64_t s = 0; s < samples; ++s)
      check_pair(rng::uniform_bits(rng, n), rng::uniform_bits(rng, n));
  }
  return report;
}

}  // namespace holovec::cartan
