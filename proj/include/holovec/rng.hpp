#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

// Seeding and sampling helpers. std::mt19937_64 itself is fully specified by
// the standard, but the std::*_distribution classes are not, so every
// distribution used here is hand-rolled on top of raw engine output. Output
// is therefore bit-identical across standard libraries.

namespace holovec::rng {

using Engine = std::mt19937_64;

// One step of splitmix64 (Steele, Lea, Flood 2014).
constexpr std::uint64_t splitmix64(std::uint64_t state) {
  std::uint64_t z = state + 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Stable per-trial seed: trial counts can grow without reshuffling the
// streams of earlier trials.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64(splitmix64(master) ^ splitmix64(index + 1));
}

// Uniform double in [0, 1), 53 random bits.
inline double uniform_double(Engine& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform mask with the low `bits` bits random, bits <= 64.
inline std::uint64_t uniform_bits(Engine& rng, int bits) {
  const std::uint64_t word = rng();
  if (bits >= 64) return word;
  return word & ((std::uint64_t{1} << bits) - 1);
}

// Uniform index in [0, bound) by rejection; bound >= 1.
inline std::uint64_t uniform_index(Engine& rng, std::uint64_t bound) {
  const std::uint64_t limit = bound * (UINT64_MAX / bound);
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return draw % bound;
}

// Standard normal via Box-Muller.
inline double gaussian(Engine& rng) {
  const double u1 = 1.0 - uniform_double(rng);  // (0, 1]
  const double u2 = uniform_double(rng);
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace holovec::rng
