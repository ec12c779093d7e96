#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "holovec/bsc.hpp"
#include "holovec/common.hpp"
#include "holovec/ga/blade.hpp"
#include "holovec/ga/multivector.hpp"
#include "holovec/hrr.hpp"
#include "holovec/rng.hpp"

// Role-filler record encoding and decoding over any of the three binding
// algebras, plus vocabulary generation and clean-up memory.

namespace holovec::vsa {

enum class BackendKind { ga, hrr, bsc };

inline std::string to_string(BackendKind kind) {
  switch (kind) {
    case BackendKind::ga: return "ga";
    case BackendKind::hrr: return "hrr";
    case BackendKind::bsc: return "bsc";
  }
  return "?";
}

inline BackendKind parse_backend(const std::string& name) {
  if (name == "ga") return BackendKind::ga;
  if (name == "hrr") return BackendKind::hrr;
  if (name == "bsc") return BackendKind::bsc;
  throw ParseError("unknown backend '" + name + "'");
}

struct Backend {
  BackendKind kind = BackendKind::ga;
  int n = 4;
  int k = 0;             // ga: filler masks use only the first k bits
  double eps = hrr::kDefaultEps;  // hrr: exact-inverse threshold
};

inline void validate(const Backend& backend) {
  if (backend.n < 1) throw Error("backend: n must be >= 1");
  if (backend.kind == BackendKind::ga) {
    if (backend.n > ga::kMaxDim)
      throw Error("backend: ga dimension capped at 64");
    if (backend.k < 1 || backend.k > backend.n)
      throw Error("backend: ga needs 1 <= k <= n");
  }
}

// Vocabulary items: blades for GA, real tuples for HRR, bit strings for BSC.
using Item = std::variant<ga::BladeMask, hrr::RealTuple, bsc::BitString>;

// Encoded traces: superposition lifts blades to a multivector.
using Trace = std::variant<ga::Multivector, hrr::RealTuple, bsc::BitString>;

struct Vocabulary {
  Backend backend;
  std::uint64_t seed = 0;
  std::vector<std::pair<std::string, Item>> roles;
  std::vector<std::pair<std::string, Item>> fillers;

  const Item* find_role(const std::string& name) const {
    for (const auto& [key, item] : roles)
      if (key == name) return &item;
    return nullptr;
  }
  const Item* find_filler(const std::string& name) const {
    for (const auto& [key, item] : fillers)
      if (key == name) return &item;
    return nullptr;
  }
};

struct RecordPair {
  std::string role;
  std::string filler;
  double weight = 1.0;
};

struct Record {
  std::vector<RecordPair> pairs;
};

enum class Similarity { abs_coeff_cosine, cosine, neg_hamming };

struct CleanupMemory {
  Similarity kind = Similarity::cosine;
  std::vector<std::pair<std::string, Item>> items;
};

struct CleanupResult {
  std::string name;
  double score = 0.0;
  int sign = +1;
  bool tie = false;  // best score shared with a later item (first wins)
};

// GA unbinding style: the inverse multiplies by blade_inverse(role) so a
// clean decode comes back with +1 on the filler; the paper style multiplies
// by the bare role blade, reproducing printed worked-example signs.
enum class GaUnbindStyle { inverse, paper };

// HRR unbinding: involution (approximate inverse, the stable default) or the
// exact spectral inverse.
enum class HrrUnbindMode { involution, exact };

struct UnbindOptions {
  GaUnbindStyle ga_style = GaUnbindStyle::inverse;
  HrrUnbindMode hrr_mode = HrrUnbindMode::involution;
};

namespace detail {

inline bool items_equal(const Item& a, const Item& b) { return a == b; }

inline Item random_item(const Backend& backend, bool filler,
                        rng::Engine& rng) {
  switch (backend.kind) {
    case BackendKind::ga: {
      const int width = filler ? backend.k : backend.n;
      return ga::BladeMask{rng::uniform_bits(rng, width), backend.n};
    }
    case BackendKind::hrr:
      return filler ? hrr::random_gaussian(backend.n, rng)
                    : hrr::random_unitary(backend.n, rng);
    case BackendKind::bsc:
      return bsc::BitString::random(backend.n, rng);
  }
  throw Error("unreachable backend kind");
}

inline void check_capacity(const Backend& backend, std::size_t role_count,
                           std::size_t filler_count) {
  if (backend.kind != BackendKind::ga) return;
  const auto space = [](int bits) -> std::uint64_t {
    return bits >= 64 ? UINT64_MAX : (std::uint64_t{1} << bits);
  };
  if (filler_count > space(backend.k))
    throw CapacityError("only " + std::to_string(space(backend.k)) +
                        " distinct filler blades exist for k = " +
                        std::to_string(backend.k));
  if (role_count + filler_count > space(backend.n))
    throw CapacityError("vocabulary exceeds the 2^n distinct blades");
}

}  // namespace detail

// Draws one distinct random item per name, roles first then fillers, in the
// given order. Deterministic for a fixed seed; collisions are resampled up
// to 100 times before giving up.
inline Vocabulary gen_vocabulary(const std::vector<std::string>& role_names,
                                 const std::vector<std::string>& filler_names,
                                 const Backend& backend, std::uint64_t seed) {
  validate(backend);
  if (role_names.empty() || filler_names.empty())
    throw Error("gen_vocabulary: role and filler name lists must be nonempty");
  std::set<std::string> unique(role_names.begin(), role_names.end());
  unique.insert(filler_names.begin(), filler_names.end());
  if (unique.size() != role_names.size() + filler_names.size())
    throw Error("gen_vocabulary: names must be unique");
  detail::check_capacity(backend, role_names.size(), filler_names.size());

  Vocabulary voc;
  voc.backend = backend;
  voc.seed = seed;
  rng::Engine rng(seed);

  std::vector<Item> taken;
  const auto draw_distinct = [&](bool filler) -> Item {
    for (int attempt = 0; attempt < 100; ++attempt) {
      Item candidate = detail::random_item(backend, filler, rng);
      const bool clash =
          std::any_of(taken.begin(), taken.end(), [&](const Item& seen) {
            return detail::items_equal(seen, candidate);
          });
      if (!clash) {
        taken.push_back(candidate);
        return candidate;
      }
    }
    throw CapacityError("gen_vocabulary: could not draw a distinct item "
                        "after 100 attempts");
  };

  for (const auto& name : role_names)
    voc.roles.emplace_back(name, draw_distinct(false));
  for (const auto& name : filler_names)
    voc.fillers.emplace_back(name, draw_distinct(true));
  return voc;
}

// The worked-example vocabulary: n = 4, k = 2, roles name/sex/age and
// fillers Pat/male/66 with their fixed blades.
inline Vocabulary patsmith_fixture() {
  Vocabulary voc;
  voc.backend = Backend{BackendKind::ga, 4, 2, hrr::kDefaultEps};
  voc.roles = {{"name", Item{ga::parse_blade("1010")}},
               {"sex", Item{ga::parse_blade("0111")}},
               {"age", Item{ga::parse_blade("1011")}}};
  voc.fillers = {{"Pat", Item{ga::parse_blade("1100")}},
                 {"male", Item{ga::parse_blade("1000")}},
                 {"66", Item{ga::parse_blade("0100")}}};
  return voc;
}

namespace detail {

inline const Item& resolve_role(const Vocabulary& voc,
                                const std::string& name) {
  const Item* item = voc.find_role(name);
  if (item == nullptr) throw Error("unknown role '" + name + "'");
  return *item;
}

inline const Item& resolve_filler(const Vocabulary& voc,
                                  const std::string& name) {
  const Item* item = voc.find_filler(name);
  if (item == nullptr) throw Error("unknown filler '" + name + "'");
  return *item;
}

inline bsc::BitString bsc_bind(const Vocabulary& voc, const RecordPair& pair) {
  return bsc::xor_bind(
      std::get<bsc::BitString>(resolve_role(voc, pair.role)),
      std::get<bsc::BitString>(resolve_filler(voc, pair.filler)));
}

}  // namespace detail

// Binds each role to its filler and superposes: geometric products summed
// with weights (GA), weighted circular convolutions summed (HRR), or
// majority bundling of XOR pairs (BSC, unit weights only).
inline Trace encode_record(const Record& rec, const Vocabulary& voc) {
  const Backend& backend = voc.backend;
  switch (backend.kind) {
    case BackendKind::ga: {
      ga::Multivector::TermMap terms;
      for (const auto& pair : rec.pairs) {
        const auto& role = std::get<ga::BladeMask>(
            detail::resolve_role(voc, pair.role));
        const auto& filler = std::get<ga::BladeMask>(
            detail::resolve_filler(voc, pair.filler));
        const ga::SignedBlade bound = ga::blade_mul(role, filler);
        terms[bound.mask.bits] += pair.weight * bound.sign;
      }
      return ga::Multivector::from_terms(backend.n, std::move(terms));
    }
    case BackendKind::hrr: {
      hrr::RealTuple acc(static_cast<std::size_t>(backend.n), 0.0);
      for (const auto& pair : rec.pairs) {
        const auto& role =
            std::get<hrr::RealTuple>(detail::resolve_role(voc, pair.role));
        const auto& filler =
            std::get<hrr::RealTuple>(detail::resolve_filler(voc, pair.filler));
        const hrr::RealTuple bound = hrr::circ_conv(role, filler);
        for (std::size_t i = 0; i < acc.size(); ++i)
          acc[i] += pair.weight * bound[i];
      }
      return acc;
    }
    case BackendKind::bsc: {
      if (rec.pairs.empty()) return bsc::BitString(backend.n);
      std::vector<bsc::BitString> bound;
      bound.reserve(rec.pairs.size());
      for (const auto& pair : rec.pairs) {
        if (pair.weight != 1.0)
          throw Error("bsc records support only unit weights");
        bound.push_back(detail::bsc_bind(voc, pair));
      }
      return bsc::majority_bundle(bound);
    }
  }
  throw Error("unreachable backend kind");
}

// Multiplies the trace by the (inverse of the) role to expose the filler
// plus noise.
inline Trace unbind(const Trace& trace, const std::string& role_name,
                    const Vocabulary& voc, const UnbindOptions& opts = {}) {
  const Backend& backend = voc.backend;
  switch (backend.kind) {
    case BackendKind::ga: {
      const auto& role =
          std::get<ga::BladeMask>(detail::resolve_role(voc, role_name));
      const ga::Multivector key =
          opts.ga_style == GaUnbindStyle::paper
              ? ga::Multivector::blade(role)
              : ga::Multivector::blade(ga::blade_inverse(role));
      return gp(key, std::get<ga::Multivector>(trace));
    }
    case BackendKind::hrr: {
      const auto& role =
          std::get<hrr::RealTuple>(detail::resolve_role(voc, role_name));
      const auto& mv = std::get<hrr::RealTuple>(trace);
      if (opts.hrr_mode == HrrUnbindMode::exact)
        return hrr::circ_conv(hrr::exact_inverse(role, backend.eps), mv);
      return hrr::approx_unbind(role, mv);
    }
    case BackendKind::bsc: {
      const auto& role =
          std::get<bsc::BitString>(detail::resolve_role(voc, role_name));
      return bsc::xor_bind(role, std::get<bsc::BitString>(trace));
    }
  }
  throw Error("unreachable backend kind");
}

// Keeps only the terms confined to the first k bit positions; noise blades
// carrying any higher basis vector are removed.
inline ga::Multivector filler_subspace_project(const ga::Multivector& a,
                                               int k) {
  if (k < 0 || k > a.dim())
    throw Error("filler_subspace_project: k out of range");
  ga::Multivector::TermMap kept;
  for (const auto& [mask, coeff] : a.terms())
    if (k >= 64 || (mask >> k) == 0) kept[mask] = coeff;
  return ga::Multivector::from_terms(a.dim(), std::move(kept));
}

inline Similarity default_similarity(BackendKind kind) {
  switch (kind) {
    case BackendKind::ga: return Similarity::abs_coeff_cosine;
    case BackendKind::hrr: return Similarity::cosine;
    case BackendKind::bsc: return Similarity::neg_hamming;
  }
  return Similarity::cosine;
}

// Item memory holding every filler of the vocabulary.
inline CleanupMemory filler_memory(const Vocabulary& voc) {
  CleanupMemory mem;
  mem.kind = default_similarity(voc.backend.kind);
  mem.items = voc.fillers;
  return mem;
}

// Similarity of a noisy trace to a stored item, with the recovered sign for
// the projective GA case. BSC scores are the bipolar correlation
// 1 - 2 h / n, a monotone transform of negated Hamming distance.
inline std::pair<double, int> similarity(const Trace& noisy, const Item& item,
                                         Similarity kind) {
  switch (kind) {
    case Similarity::abs_coeff_cosine: {
      const auto& mv = std::get<ga::Multivector>(noisy);
      const ga::Multivector candidate =
          ga::Multivector::blade(std::get<ga::BladeMask>(item));
      const double denom = ga::coeff_norm(mv) * ga::coeff_norm(candidate);
      if (denom == 0.0) return {0.0, +1};
      const double cos = ga::coeff_dot(mv, candidate) / denom;
      return {std::abs(cos), cos >= 0.0 ? +1 : -1};
    }
    case Similarity::cosine: {
      const auto& tuple = std::get<hrr::RealTuple>(noisy);
      return {hrr::cosine(tuple, std::get<hrr::RealTuple>(item)), +1};
    }
    case Similarity::neg_hamming: {
      const auto& bits = std::get<bsc::BitString>(noisy);
      const auto& candidate = std::get<bsc::BitString>(item);
      const int dist = bsc::hamming(bits, candidate);
      return {1.0 - 2.0 * dist / bits.size(), +1};
    }
  }
  throw Error("unreachable similarity kind");
}

namespace detail {
inline bool trace_is_zero(const Trace& noisy) {
  if (const auto* mv = std::get_if<ga::Multivector>(&noisy))
    return mv->is_zero();
  if (const auto* tuple = std::get_if<hrr::RealTuple>(&noisy))
    return hrr::norm(*tuple) == 0.0;
  return false;  // bit strings always admit Hamming comparison
}
}  // namespace detail

// Nearest stored item by the memory's similarity. Returns nothing (NoMatch)
// when the input has zero norm under a cosine similarity; exact score ties
// keep the earliest item and set the tie flag.
inline std::optional<CleanupResult> cleanup(const Trace& noisy,
                                            const CleanupMemory& mem) {
  if (mem.items.empty()) throw Error("cleanup: empty memory");
  if (mem.kind != Similarity::neg_hamming && detail::trace_is_zero(noisy))
    return std::nullopt;

  CleanupResult best;
  bool first = true;
  for (const auto& [name, item] : mem.items) {
    const auto [score, sign] = similarity(noisy, item, mem.kind);
    if (first || score > best.score) {
      best = CleanupResult{name, score, sign, false};
      first = false;
    } else if (score == best.score) {
      best.tie = true;
    }
  }
  return best;
}

}  // namespace holovec::vsa
