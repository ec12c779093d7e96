#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "holovec/ga/multivector.hpp"
#include "holovec/hrr.hpp"
#include "holovec/rng.hpp"
#include "holovec/vsa.hpp"

// Seeded Monte Carlo drivers behind the CLI experiment subcommands. Each
// trial runs on a seed derived from (master seed, trial index), so growing
// the trial count never reshuffles earlier trials.

namespace holovec::experiment {

struct CapacityConfig {
  vsa::Backend backend;
  int pairs = 3;         // role-filler pairs per record
  int memory_items = 100;  // fillers in the clean-up memory
  int trials = 100;
  std::uint64_t seed = 42;
};

struct CapacityStats {
  int trials = 0;
  int successes = 0;       // trials where every role decoded correctly
  double mean_margin = 0.0;  // mean of score(correct) - best wrong score
  // GA only: trials where every noise blade left the filler subspace, and
  // how many of those decoded perfectly.
  int ga_exit_trials = 0;
  int ga_exit_successes = 0;

  double accuracy() const {
    return trials == 0 ? 0.0 : static_cast<double>(successes) / trials;
  }
};

namespace detail {

// True when every cross term produced by unbinding role `target` carries a
// basis vector above k, i.e. projection removes all noise exactly.
inline bool ga_noise_exits(const vsa::Vocabulary& voc,
                           const std::vector<vsa::RecordPair>& pairs,
                           std::size_t target, int k) {
  const auto mask_of = [&](const vsa::Item& item) {
    return std::get<ga::BladeMask>(item).bits;
  };
  const std::uint64_t role_bits =
      mask_of(*voc.find_role(pairs[target].role));
  for (std::size_t j = 0; j < pairs.size(); ++j) {
    if (j == target) continue;
    const std::uint64_t noise = role_bits ^
                                mask_of(*voc.find_role(pairs[j].role)) ^
                                mask_of(*voc.find_filler(pairs[j].filler));
    const bool exits = k < 64 && (noise >> k) != 0;
    if (!exits) return false;
  }
  return true;
}

}  // namespace detail

inline CapacityStats run_capacity(const CapacityConfig& cfg) {
  vsa::validate(cfg.backend);
  if (cfg.pairs < 1 || cfg.trials < 1 || cfg.memory_items < cfg.pairs)
    throw Error("capacity experiment: need pairs >= 1, trials >= 1, "
                "memory >= pairs");

  CapacityStats stats;
  stats.trials = cfg.trials;

  std::vector<std::string> role_names;
  std::vector<std::string> filler_names;
  for (int i = 0; i < cfg.pairs; ++i)
    role_names.push_back("r" + std::to_string(i));
  for (int i = 0; i < cfg.memory_items; ++i)
    filler_names.push_back("f" + std::to_string(i));

  double margin_sum = 0.0;
  std::uint64_t margin_count = 0;

  for (int trial = 0; trial < cfg.trials; ++trial) {
    const std::uint64_t trial_seed = rng::derive_seed(cfg.seed, trial);
    const vsa::Vocabulary voc =
        vsa::gen_vocabulary(role_names, filler_names, cfg.backend, trial_seed);
    rng::Engine rng(rng::splitmix64(trial_seed));

    // Each role binds a distinct randomly chosen filler.
    std::vector<int> choice(filler_names.size());
    for (std::size_t i = 0; i < choice.size(); ++i)
      choice[i] = static_cast<int>(i);
    for (int i = 0; i < cfg.pairs; ++i) {
      const auto j = i + static_cast<int>(rng::uniform_index(
                             rng, choice.size() - static_cast<std::size_t>(i)));
      std::swap(choice[i], choice[j]);
    }

    vsa::Record record;
    for (int i = 0; i < cfg.pairs; ++i)
      record.pairs.push_back({role_names[static_cast<std::size_t>(i)],
                              filler_names[static_cast<std::size_t>(choice[i])],
                              1.0});

    const vsa::Trace trace = vsa::encode_record(record, voc);
    const vsa::CleanupMemory memory = vsa::filler_memory(voc);

    bool all_exit = cfg.backend.kind == vsa::BackendKind::ga;
    bool all_correct = true;
    for (std::size_t i = 0; i < record.pairs.size(); ++i) {
      vsa::Trace decoded = vsa::unbind(trace, record.pairs[i].role, voc);
      if (cfg.backend.kind == vsa::BackendKind::ga) {
        decoded = vsa::filler_subspace_project(
            std::get<ga::Multivector>(decoded), cfg.backend.k);
        if (!detail::ga_noise_exits(voc, record.pairs, i, cfg.backend.k))
          all_exit = false;
      }

      double correct_score = 0.0;
      double best_wrong = -1e300;
      std::string predicted;
      double best = -1e300;
      for (const auto& [name, item] : memory.items) {
        const double score =
            vsa::similarity(decoded, item, memory.kind).first;
        if (score > best) {
          best = score;
          predicted = name;
        }
        if (name == record.pairs[i].filler)
          correct_score = score;
        else
          best_wrong = std::max(best_wrong, score);
      }
      if (best_wrong > -1e300) {
        margin_sum += correct_score - best_wrong;
        ++margin_count;
      }
      if (predicted != record.pairs[i].filler) all_correct = false;
    }

    if (all_correct) ++stats.successes;
    if (cfg.backend.kind == vsa::BackendKind::ga && all_exit) {
      ++stats.ga_exit_trials;
      if (all_correct) ++stats.ga_exit_successes;
    }
  }

  stats.mean_margin =
      margin_count == 0 ? 0.0 : margin_sum / static_cast<double>(margin_count);
  return stats;
}

struct BasisConfig {
  int trials = 1000;
  std::uint64_t seed = 42;
};

// One drawn pair, kept for the transcript.
struct BasisSample {
  std::array<double, 2> x{}, y{};
  std::array<double, 2> conv{};         // x (*) y in the original components
  std::array<double, 2> conv_subst{};   // the pi/2 substitution of conv
  std::array<double, 2> conv_rotated{};  // convolution of the substituted pairs
  double inner = 0.0, inner_rotated = 0.0;
  double outer = 0.0, outer_rotated = 0.0;
};

struct BasisStats {
  int trials = 0;
  int conv_mismatch = 0;  // |conv_rotated - conv_subst| margin > 1e-6
  int gp_match = 0;       // scalar and bivector parts agree to 1e-12
  double min_margin = 1e300;
  double max_gp_deviation = 0.0;
  BasisSample first;
};

// The basis-dependence contrast: under the pi/2 rotation substitution
// x' = (x1, -x0), circular convolution changes while the geometric product
// does not.
inline BasisStats run_basis(const BasisConfig& cfg) {
  if (cfg.trials < 1) throw Error("basis experiment: trials must be >= 1");
  BasisStats stats;
  stats.trials = cfg.trials;
  rng::Engine rng(cfg.seed);

  const auto draw = [&rng]() -> std::array<double, 2> {
    // Degenerate (numerically zero) vectors are resampled.
    while (true) {
      const std::array<double, 2> v{rng::gaussian(rng), rng::gaussian(rng)};
      if (std::abs(v[0]) + std::abs(v[1]) > 1e-12) return v;
    }
  };

  for (int trial = 0; trial < cfg.trials; ++trial) {
    BasisSample s;
    s.x = draw();
    s.y = draw();
    const std::array<double, 2> xr{s.x[1], -s.x[0]};
    const std::array<double, 2> yr{s.y[1], -s.y[0]};

    const hrr::RealTuple conv =
        hrr::circ_conv({s.x[0], s.x[1]}, {s.y[0], s.y[1]});
    const hrr::RealTuple conv_rot =
        hrr::circ_conv({xr[0], xr[1]}, {yr[0], yr[1]});
    s.conv = {conv[0], conv[1]};
    s.conv_subst = {conv[1], -conv[0]};
    s.conv_rotated = {conv_rot[0], conv_rot[1]};
    const double margin =
        std::max(std::abs(s.conv_rotated[0] - s.conv_subst[0]),
                 std::abs(s.conv_rotated[1] - s.conv_subst[1]));
    stats.min_margin = std::min(stats.min_margin, margin);
    if (margin > 1e-6) ++stats.conv_mismatch;

    const auto parts = [](const std::array<double, 2>& a,
                          const std::array<double, 2>& b) {
      return ga::inner_outer(ga::Multivector::vector(a),
                             ga::Multivector::vector(b));
    };
    const auto [inner, outer] = parts(s.x, s.y);
    const auto [inner_rot, outer_rot] = parts(xr, yr);
    s.inner = inner;
    s.inner_rotated = inner_rot;
    s.outer = outer.coeff(0b11);
    s.outer_rotated = outer_rot.coeff(0b11);
    const double deviation = std::max(std::abs(s.inner - s.inner_rotated),
                                      std::abs(s.outer - s.outer_rotated));
    stats.max_gp_deviation = std::max(stats.max_gp_deviation, deviation);
    if (deviation <= 1e-12) ++stats.gp_match;

    if (trial == 0) stats.first = s;
  }
  return stats;
}

}  // namespace holovec::experiment
