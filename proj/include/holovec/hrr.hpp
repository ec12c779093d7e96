#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <string>
#include <vector>

#include "holovec/common.hpp"
#include "holovec/rng.hpp"

// Classical HRR algebra on real n-tuples: circular convolution binding,
// involution, Fourier transforms, exact and approximate inverses, unitarity.

namespace holovec::hrr {

using RealTuple = std::vector<double>;
using ComplexTuple = std::vector<std::complex<double>>;

// Components of the Fourier transform at or below this magnitude make a
// tuple non-invertible.
inline constexpr double kDefaultEps = 1e-10;

namespace detail {

inline void check_lengths(std::size_t a, std::size_t b, const char* op) {
  if (a != b)
    throw DimensionMismatch(std::string(op) + ": lengths " +
                            std::to_string(a) + " and " + std::to_string(b));
}

inline bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// Reference transform, the defining O(n^2) kernel sum.
inline ComplexTuple transform_direct(const ComplexTuple& x) {
  const std::size_t n = x.size();
  ComplexTuple out(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::complex<double> acc = 0.0;
    for (std::size_t l = 0; l < n; ++l) {
      const double angle = -2.0 * std::numbers::pi *
                           static_cast<double>(k * l % n) /
                           static_cast<double>(n);
      acc += x[l] * std::polar(1.0, angle);
    }
    out[k] = acc;
  }
  return out;
}

// Iterative radix-2 Cooley-Tukey, n a power of two.
inline ComplexTuple transform_radix2(ComplexTuple x) {
  const std::size_t n = x.size();
  const int levels = std::countr_zero(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t j = 0;
    for (int b = 0; b < levels; ++b) j |= ((i >> b) & 1) << (levels - 1 - b);
    if (j > i) std::swap(x[i], x[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double angle = -2.0 * std::numbers::pi / static_cast<double>(len);
    const std::complex<double> step = std::polar(1.0, angle);
    for (std::size_t base = 0; base < n; base += len) {
      std::complex<double> w = 1.0;
      for (std::size_t j = 0; j < len / 2; ++j) {
        const std::complex<double> even = x[base + j];
        const std::complex<double> odd = x[base + j + len / 2] * w;
        x[base + j] = even + odd;
        x[base + j + len / 2] = even - odd;
        w *= step;
      }
    }
  }
  return x;
}

inline ComplexTuple transform(const ComplexTuple& x) {
  if (x.size() > 1 && is_pow2(x.size())) return transform_radix2(x);
  return transform_direct(x);
}

inline ComplexTuple complexify(const RealTuple& x) {
  return ComplexTuple(x.begin(), x.end());
}

inline RealTuple real_parts(const ComplexTuple& x) {
  RealTuple out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i].real();
  return out;
}

}  // namespace detail

// Forward transform x_hat_k = sum_l x_l exp(-2 pi i k l / n). Radix-2 fast
// path for power-of-two lengths, direct sum otherwise.
inline ComplexTuple dft(const RealTuple& x) {
  return detail::transform(detail::complexify(x));
}

// Inverse transform with the 1/n factor; idft(dft(x)) = x.
inline ComplexTuple idft(const ComplexTuple& spectrum) {
  const std::size_t n = spectrum.size();
  ComplexTuple conj(n);
  for (std::size_t i = 0; i < n; ++i) conj[i] = std::conj(spectrum[i]);
  ComplexTuple out = detail::transform(conj);
  for (std::size_t i = 0; i < n; ++i)
    out[i] = std::conj(out[i]) / static_cast<double>(n);
  return out;
}

// Circular convolution (x (*) y)_j = sum_k x_k y_{j-k mod n}. Spectral route
// for long power-of-two tuples, defining sum otherwise.
inline RealTuple circ_conv(const RealTuple& x, const RealTuple& y) {
  detail::check_lengths(x.size(), y.size(), "circ_conv");
  const std::size_t n = x.size();
  if (n >= 64 && detail::is_pow2(n)) {
    ComplexTuple sx = dft(x);
    const ComplexTuple sy = dft(y);
    for (std::size_t k = 0; k < n; ++k) sx[k] *= sy[k];
    return detail::real_parts(idft(sx));
  }
  RealTuple out(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    double acc = 0.0;
    for (std::size_t k = 0; k < n; ++k) acc += x[k] * y[(j + n - k) % n];
    out[j] = acc;
  }
  return out;
}

// (x*)_j = x_{-j mod n}; applied twice it is the identity.
inline RealTuple involution(const RealTuple& x) {
  const std::size_t n = x.size();
  RealTuple out(n);
  for (std::size_t j = 0; j < n; ++j) out[j] = x[(n - j) % n];
  return out;
}

// Exact convolution inverse via the spectrum, 1/x_hat_k per component.
// Throws NotInvertible (with the offending component) when any Fourier
// magnitude is at or below eps.
inline RealTuple exact_inverse(const RealTuple& x, double eps = kDefaultEps) {
  ComplexTuple spectrum = dft(x);
  std::size_t argmin = 0;
  double min_mag = std::abs(spectrum[0]);
  for (std::size_t k = 1; k < spectrum.size(); ++k) {
    const double mag = std::abs(spectrum[k]);
    if (mag < min_mag) {
      min_mag = mag;
      argmin = k;
    }
  }
  if (min_mag <= eps)
    throw NotInvertible("exact_inverse: Fourier component " +
                            std::to_string(argmin) + " has magnitude " +
                            std::to_string(min_mag),
                        static_cast<int>(argmin), min_mag);
  for (auto& component : spectrum) component = 1.0 / component;
  // The spectrum of a real tuple is conjugate-symmetric, so the inverse
  // transform is real up to rounding; the imaginary residue is discarded.
  return detail::real_parts(idft(spectrum));
}

// Approximate unbinding: convolve the trace with the involution of the role.
// Exact when the role is unitary.
inline RealTuple approx_unbind(const RealTuple& role, const RealTuple& trace) {
  detail::check_lengths(role.size(), trace.size(), "approx_unbind");
  return circ_conv(involution(role), trace);
}

// Random real tuple with all Fourier magnitudes equal to 1: unit-modulus
// spectrum with conjugate-symmetric phases, transformed back.
inline RealTuple random_unitary(int n, rng::Engine& rng) {
  if (n < 1) throw Error("random_unitary: n must be >= 1");
  const std::size_t size = static_cast<std::size_t>(n);
  ComplexTuple spectrum(size);
  spectrum[0] = (rng() & 1) ? 1.0 : -1.0;
  for (std::size_t k = 1; 2 * k < size; ++k) {
    const double phase = 2.0 * std::numbers::pi * rng::uniform_double(rng);
    spectrum[k] = std::polar(1.0, phase);
    spectrum[size - k] = std::conj(spectrum[k]);
  }
  if (size % 2 == 0) spectrum[size / 2] = (rng() & 1) ? 1.0 : -1.0;
  return detail::real_parts(idft(spectrum));
}

// I.i.d. Gaussian tuple with variance 1/n, the standard HRR item
// distribution.
inline RealTuple random_gaussian(int n, rng::Engine& rng) {
  if (n < 1) throw Error("random_gaussian: n must be >= 1");
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  RealTuple out(static_cast<std::size_t>(n));
  for (auto& value : out) value = scale * rng::gaussian(rng);
  return out;
}

inline double dot(const RealTuple& x, const RealTuple& y) {
  detail::check_lengths(x.size(), y.size(), "dot");
  double acc = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * y[i];
  return acc;
}

inline double norm(const RealTuple& x) { return std::sqrt(dot(x, x)); }

inline double cosine(const RealTuple& x, const RealTuple& y) {
  const double nx = norm(x);
  const double ny = norm(y);
  if (nx == 0.0 || ny == 0.0) throw Error("cosine: zero vector");
  return std::clamp(dot(x, y) / (nx * ny), -1.0, 1.0);
}

}  // namespace holovec::hrr
