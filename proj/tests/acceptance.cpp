// Acceptance suite: each criterion runs at its stated tolerance and prints
// one PASS/FAIL line; the process exits nonzero if any line fails.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "holovec/holovec.hpp"
#include "oracles.hpp"

using namespace holovec;

namespace {

struct Criterion {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& why) {
    if (!ok && pass) {
      pass = false;
      detail = why;
    }
  }
};

double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

std::string fmt(double value) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.6g", value);
  return buf;
}

// --- 1. worked-example golden transcript --------------------------------

Criterion criterion_golden_transcript() {
  Criterion c;
  const vsa::Vocabulary voc = vsa::patsmith_fixture();
  const double alpha = 1.25, beta = 2.5, gamma = 0.75;
  vsa::Record rec;
  rec.pairs = {{"name", "Pat", alpha},
               {"sex", "male", beta},
               {"age", "66", gamma}};

  const auto start = std::chrono::steady_clock::now();
  const vsa::Trace trace = vsa::encode_record(rec, voc);
  vsa::UnbindOptions paper;
  paper.ga_style = vsa::GaUnbindStyle::paper;
  const vsa::Trace decoded = vsa::unbind(trace, "name", voc, paper);
  const double elapsed = ms_since(start);

  const auto& tr = std::get<ga::Multivector>(trace);
  c.require(tr.terms().size() == 2, "trace term count");
  c.require(std::abs(tr.coeff(ga::parse_blade("0110").bits) - alpha) <= 1e-12,
            "trace c0110 coefficient");
  c.require(std::abs(tr.coeff(ga::parse_blade("1111").bits) -
                     (gamma - beta)) <= 1e-12,
            "trace c1111 coefficient");

  const auto& dec = std::get<ga::Multivector>(decoded);
  c.require(dec.terms().size() == 2, "decode term count");
  c.require(std::abs(dec.coeff(ga::parse_blade("1100").bits) + alpha) <=
                1e-12,
            "decode c1100 coefficient");
  c.require(std::abs(dec.coeff(ga::parse_blade("0101").bits) +
                     (beta - gamma)) <= 1e-12,
            "decode c0101 coefficient");
  c.require(elapsed < 1.0, "runtime " + fmt(elapsed) + " ms >= 1 ms");
  c.detail = "encode+unbind in " + fmt(elapsed) + " ms";
  return c;
}

// --- 2. projective XOR law ----------------------------------------------

Criterion criterion_projective_xor() {
  Criterion c;
  const auto start = std::chrono::steady_clock::now();
  const int n = 6;
  for (std::uint64_t x = 0; x < (1u << n); ++x) {
    for (std::uint64_t y = 0; y < (1u << n); ++y) {
      const ga::SignedBlade got =
          ga::blade_mul(ga::BladeMask{x, n}, ga::BladeMask{y, n});
      if (got.mask.bits != (x ^ y)) {
        c.require(false, "mask mismatch");
        return c;
      }
      const auto [sign, mask] = testing::bubble_blade_product(x, y, n);
      if (got.sign != sign || mask != (x ^ y)) {
        c.require(false, "sign mismatch vs jump-count oracle");
        return c;
      }
    }
  }
  const double elapsed = ms_since(start);
  c.require(elapsed < 1000.0, "runtime over 1 s");
  c.detail = "4096 pairs in " + fmt(elapsed) + " ms";
  return c;
}

// --- 3. cartan oracle ----------------------------------------------------

Criterion criterion_cartan_oracle() {
  Criterion c;
  const auto start = std::chrono::steady_clock::now();
  const cartan::OracleReport report =
      cartan::oracle_verify(6, cartan::CartanConfig{3, 6});
  c.require(report.exhaustive && report.pairs_checked == 4096,
            "oracle did not run exhaustively");
  c.require(report.failures == 0,
            "oracle failures: " + std::to_string(report.failures));
  c.require(report.worst_deviation <= 1e-12,
            "worst deviation " + fmt(report.worst_deviation));

  // Printed four-factor blade displays, reproduced exactly at m = 4.
  const cartan::CartanConfig cfg{4, 4};
  const std::complex<double> I{0.0, 1.0};
  const cartan::ComplexMatrix one = cartan::identity(2);
  const auto rep = [&cfg](const char* blade) {
    return cartan::rep_blade(ga::parse_blade(blade), cfg);
  };
  const auto kron4 = [](const cartan::ComplexMatrix& a,
                        const cartan::ComplexMatrix& b,
                        const cartan::ComplexMatrix& c2,
                        const cartan::ComplexMatrix& d) {
    const std::array<cartan::ComplexMatrix, 4> factors{a, b, c2, d};
    return cartan::kron(factors);
  };
  const auto exact = [](const cartan::ComplexMatrix& a,
                        const cartan::ComplexMatrix& b) { return a == b; };
  c.require(exact(rep("1100"),
                  kron4(one, one, one,
                        cartan::ComplexMatrix(-I * cartan::pauli(1)))),
            "Pat factorization");
  c.require(exact(rep("1000"),
                  kron4(cartan::pauli(1), cartan::pauli(1), cartan::pauli(1),
                        cartan::pauli(3))),
            "male factorization");
  c.require(exact(rep("0100"),
                  kron4(cartan::pauli(1), cartan::pauli(1), cartan::pauli(1),
                        cartan::pauli(2))),
            "66 factorization");
  c.require(exact(rep("1010"),
                  kron4(one, one,
                        cartan::ComplexMatrix(-I * cartan::pauli(2)),
                        cartan::pauli(3))),
            "name factorization");
  c.require(exact(rep("0111"),
                  kron4(cartan::pauli(1), cartan::pauli(1),
                        cartan::ComplexMatrix(-I * one), cartan::pauli(2))),
            "sex factorization");
  c.require(exact(rep("1011"),
                  kron4(cartan::pauli(1), cartan::pauli(1),
                        cartan::ComplexMatrix(-I * one), cartan::pauli(3))),
            "age factorization");

  const double elapsed = ms_since(start);
  c.require(elapsed < 10000.0, "runtime over 10 s");
  if (c.pass)
    c.detail = "4096 pairs, worst deviation " + fmt(report.worst_deviation) +
               ", " + fmt(elapsed) + " ms";
  return c;
}

// --- 4. convolution algebra ---------------------------------------------

Criterion criterion_convolution_algebra() {
  Criterion c;
  const auto start = std::chrono::steady_clock::now();
  rng::Engine rng(2024);
  for (const int n : {2, 8, 257, 1024}) {
    hrr::RealTuple x, y;
    const auto conditioned = [&rng, n] {
      while (true) {
        hrr::RealTuple t(static_cast<std::size_t>(n));
        for (auto& v : t) v = rng::gaussian(rng);
        const hrr::ComplexTuple spectrum = hrr::dft(t);
        double min_mag = 1e300;
        for (const auto& s : spectrum)
          min_mag = std::min(min_mag, std::abs(s));
        if (min_mag > 0.1) return t;
      }
    };
    x = conditioned();
    y = conditioned();

    const hrr::ComplexTuple lhs = hrr::dft(hrr::circ_conv(x, y));
    const hrr::ComplexTuple fx = hrr::dft(x);
    const hrr::ComplexTuple fy = hrr::dft(y);
    for (std::size_t k = 0; k < lhs.size(); ++k)
      c.require(std::abs(lhs[k] - fx[k] * fy[k]) <= 1e-9,
                "convolution theorem at n=" + std::to_string(n));

    const hrr::RealTuple inv = hrr::exact_inverse(x);
    const hrr::RealTuple unit = hrr::circ_conv(inv, x);
    for (std::size_t j = 0; j < unit.size(); ++j) {
      const double expect = j == 0 ? 1.0 : 0.0;
      c.require(std::abs(unit[j] - expect) <= 1e-8,
                "inverse law at n=" + std::to_string(n));
    }
  }

  bool threw = false;
  try {
    hrr::exact_inverse({0.5, 0.5});
  } catch (const NotInvertible& e) {
    threw = true;
    c.require(e.index == 1, "NotInvertible index");
  }
  c.require(threw, "(1/2, 1/2) did not raise NotInvertible");

  const double elapsed = ms_since(start);
  c.require(elapsed < 5000.0, "runtime over 5 s");
  if (c.pass) c.detail = "n in {2, 8, 257, 1024}, " + fmt(elapsed) + " ms";
  return c;
}

// --- 5. basis-dependence demo -------------------------------------------

Criterion criterion_basis_dependence() {
  Criterion c;
  const auto start = std::chrono::steady_clock::now();
  const experiment::BasisStats stats = experiment::run_basis({1000, 42});
  c.require(stats.conv_mismatch >= 999,
            "convolution mismatched in only " +
                std::to_string(stats.conv_mismatch) + "/1000 draws");
  c.require(stats.gp_match == 1000,
            "geometric product disagreed in " +
                std::to_string(1000 - stats.gp_match) + " draws");
  c.require(stats.max_gp_deviation <= 1e-12,
            "gp deviation " + fmt(stats.max_gp_deviation));
  const double elapsed = ms_since(start);
  c.require(elapsed < 1000.0, "runtime over 1 s");
  if (c.pass)
    c.detail = "mismatch " + std::to_string(stats.conv_mismatch) +
               "/1000, gp equal 1000/1000, " + fmt(elapsed) + " ms";
  return c;
}

// --- 6. BSC laws ----------------------------------------------------------

Criterion criterion_bsc_laws() {
  Criterion c;
  const auto start = std::chrono::steady_clock::now();

  const auto from_mask = [](unsigned mask, int n) {
    bsc::BitString s(n);
    for (int i = 0; i < n; ++i) s.set_bit(i, (mask >> i) & 1);
    return s;
  };

  // Distributivity of XOR over majority. With the mandated Theta(0) = 1 an
  // X bit of 1 flips a tied even-N column, so the identity holds exactly on
  // untied columns (always, for odd N); the check asserts that boundary over
  // every input rather than only the clean cases.
  const auto check_distr = [&c](const std::vector<bsc::BitString>& bit_rows,
                                const bsc::BitString& x) {
    const int rows = static_cast<int>(bit_rows.size());
    const int n = bit_rows[0].size();
    std::vector<bsc::BitString> bound;
    for (const auto& row : bit_rows) bound.push_back(bsc::xor_bind(x, row));
    const bsc::BitString lhs =
        bsc::xor_bind(x, bsc::majority_bundle(bit_rows));
    const bsc::BitString rhs = bsc::majority_bundle(bound);
    for (int i = 0; i < n; ++i) {
      int ones = 0;
      for (const auto& row : bit_rows) ones += row.bit(i);
      const bool tied = rows % 2 == 0 && 2 * ones == rows;
      const bool equal_here = !(tied && x.bit(i));
      if ((lhs.bit(i) == rhs.bit(i)) != equal_here) {
        c.require(false, "distributivity boundary, N=" +
                             std::to_string(rows));
        return;
      }
    }
  };
  for (int rows = 1; rows <= 5 && c.pass; ++rows) {
    const int n = 1 << rows;
    std::vector<bsc::BitString> bit_rows(static_cast<std::size_t>(rows),
                                         bsc::BitString(n));
    for (int col = 0; col < n; ++col)
      for (int r = 0; r < rows; ++r)
        bit_rows[static_cast<std::size_t>(r)].set_bit(col, (col >> r) & 1);
    for (const bool x_bit : {false, true}) {
      bsc::BitString x(n);
      for (int i = 0; i < n; ++i) x.set_bit(i, x_bit);
      check_distr(bit_rows, x);
    }
  }
  rng::Engine rng(77);
  for (int n = 1; n <= 8 && c.pass; ++n) {
    for (int rows = 1; rows <= 5 && c.pass; ++rows) {
      std::vector<bsc::BitString> bit_rows;
      for (int r = 0; r < rows; ++r)
        bit_rows.push_back(bsc::BitString::random(n, rng));
      for (unsigned mask = 0; mask < (1u << n) && c.pass; ++mask)
        check_distr(bit_rows, from_mask(mask, n));
    }
  }

  // Exponential-map homomorphism, exhaustive n <= 10.
  for (int n = 1; n <= 10 && c.pass; ++n) {
    const unsigned count = 1u << n;
    for (unsigned a = 0; a < count && c.pass; ++a) {
      const bsc::BipolarVector ua = bsc::exp_map(from_mask(a, n));
      for (unsigned b = 0; b < count; ++b) {
        const bsc::BipolarVector ub = bsc::exp_map(from_mask(b, n));
        if (!(bsc::exp_map(from_mask(a ^ b, n)) ==
              bsc::elementwise_mul(ua, ub))) {
          c.require(false, "exp_map homomorphism at n=" + std::to_string(n));
          break;
        }
      }
    }
  }

  // Odd-N bridge between the two thresholding conventions; all column
  // patterns per N.
  for (const int rows : {1, 3, 5}) {
    const int n = 1 << rows;
    std::vector<bsc::BitString> bit_rows(static_cast<std::size_t>(rows),
                                         bsc::BitString(n));
    for (int col = 0; col < n; ++col)
      for (int r = 0; r < rows; ++r)
        bit_rows[static_cast<std::size_t>(r)].set_bit(col, (col >> r) & 1);
    std::vector<bsc::BipolarVector> bipolar;
    for (const auto& row : bit_rows) bipolar.push_back(bsc::exp_map(row));
    c.require(bsc::sign_threshold(bipolar) ==
                  bsc::exp_map(bsc::majority_bundle(bit_rows)),
              "odd-N bridge, N=" + std::to_string(rows));
  }

  const double elapsed = ms_since(start);
  c.require(elapsed < 10000.0, "runtime over 10 s");
  if (c.pass) c.detail = fmt(elapsed) + " ms";
  return c;
}

// --- 7. desk-scale retrieval ----------------------------------------------

Criterion criterion_retrieval() {
  Criterion c;
  const auto start = std::chrono::steady_clock::now();

  experiment::CapacityConfig bsc_cfg;
  bsc_cfg.backend = vsa::Backend{vsa::BackendKind::bsc, 10000, 0,
                                 hrr::kDefaultEps};
  bsc_cfg.pairs = 3;
  bsc_cfg.memory_items = 100;
  bsc_cfg.trials = 100;
  bsc_cfg.seed = 42;
  const experiment::CapacityStats bsc_stats =
      experiment::run_capacity(bsc_cfg);
  c.require(bsc_stats.successes >= 99,
            "bsc recovered all fillers in only " +
                std::to_string(bsc_stats.successes) + "/100 trials");

  experiment::CapacityConfig hrr_cfg = bsc_cfg;
  hrr_cfg.backend = vsa::Backend{vsa::BackendKind::hrr, 1024, 0,
                                 hrr::kDefaultEps};
  hrr_cfg.seed = 43;
  const experiment::CapacityStats hrr_stats =
      experiment::run_capacity(hrr_cfg);
  c.require(hrr_stats.successes >= 95,
            "hrr recovered all fillers in only " +
                std::to_string(hrr_stats.successes) + "/100 trials");

  experiment::CapacityConfig ga_cfg = bsc_cfg;
  ga_cfg.backend = vsa::Backend{vsa::BackendKind::ga, 64, 16,
                                hrr::kDefaultEps};
  ga_cfg.seed = 44;
  const experiment::CapacityStats ga_stats = experiment::run_capacity(ga_cfg);
  c.require(ga_stats.ga_exit_trials >= 95,
            "ga noise left the subspace in only " +
                std::to_string(ga_stats.ga_exit_trials) + "/100 trials");
  c.require(ga_stats.ga_exit_successes == ga_stats.ga_exit_trials,
            "ga decode failed despite full noise exit: " +
                std::to_string(ga_stats.ga_exit_successes) + "/" +
                std::to_string(ga_stats.ga_exit_trials));

  const double elapsed = ms_since(start);
  c.require(elapsed < 60000.0, "runtime over 60 s");
  if (c.pass)
    c.detail = "bsc " + std::to_string(bsc_stats.successes) + "/100, hrr " +
               std::to_string(hrr_stats.successes) + "/100, ga exits " +
               std::to_string(ga_stats.ga_exit_trials) + "/100 all exact, " +
               fmt(elapsed) + " ms";
  return c;
}

// --- 8. CLI determinism ----------------------------------------------------

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Criterion criterion_cli_determinism() {
  Criterion c;
  char pattern[] = "/tmp/holovec_accept_XXXXXX";
  const char* dir_cstr = mkdtemp(pattern);
  if (dir_cstr == nullptr) {
    c.require(false, "mkdtemp failed");
    return c;
  }
  const std::string dir(dir_cstr);
  {
    std::ofstream a(dir + "/a.json", std::ios::binary);
    a << "{\"n\":4,\"terms\":{\"1010\":1.0}}\n";
    std::ofstream b(dir + "/b.json", std::ios::binary);
    b << "{\"n\":4,\"terms\":{\"1100\":1.0}}\n";
  }

  const std::vector<std::string> commands{
      "demo patsmith --backend ga --paper-fixture --beta 2",
      "demo patsmith --backend hrr --n 128 --seed 5",
      "demo patsmith --backend bsc --n 10000 --seed 7",
      "experiment capacity --backend ga --n 16 --k 4 --pairs 2 --trials 5 "
      "--memory 6 --seed 9",
      "experiment basis --trials 100 --seed 11",
      "oracle --n 4 --m 4",
      "bind --lhs " + dir + "/a.json --rhs " + dir + "/b.json",
      "unbind --role " + dir + "/a.json --trace " + dir + "/b.json",
      "bundle --inputs " + dir + "/a.json " + dir + "/b.json",
  };
  int checked = 0;
  for (std::size_t i = 0; i < commands.size(); ++i) {
    const std::string first = dir + "/run" + std::to_string(i) + "_a.txt";
    const std::string second = dir + "/run" + std::to_string(i) + "_b.txt";
    const std::string base =
        std::string(HOLOVEC_CLI_PATH) + " " + commands[i];
    const int rc_a =
        std::system((base + " >" + first + " 2>&1").c_str());
    const int rc_b =
        std::system((base + " >" + second + " 2>&1").c_str());
    c.require(WIFEXITED(rc_a) && WIFEXITED(rc_b) &&
                  WEXITSTATUS(rc_a) == WEXITSTATUS(rc_b),
              "exit codes differ for: " + commands[i]);
    const std::string out_a = slurp(first);
    c.require(!out_a.empty(), "no output from: " + commands[i]);
    c.require(out_a == slurp(second),
              "outputs differ for: " + commands[i]);
    ++checked;
  }
  if (c.pass)
    c.detail = std::to_string(checked) + " commands byte-identical on rerun";
  return c;
}

}  // namespace

int main() {
  struct Entry {
    const char* name;
    std::function<Criterion()> run;
  };
  const std::vector<Entry> entries{
      {"1. worked-example golden transcript", criterion_golden_transcript},
      {"2. projective XOR law, exhaustive n=6", criterion_projective_xor},
      {"3. cartan matrix oracle", criterion_cartan_oracle},
      {"4. convolution algebra", criterion_convolution_algebra},
      {"5. basis-dependence demo", criterion_basis_dependence},
      {"6. binary spatter code laws", criterion_bsc_laws},
      {"7. desk-scale retrieval", criterion_retrieval},
      {"8. CLI determinism", criterion_cli_determinism},
  };

  int failures = 0;
  for (const auto& entry : entries) {
    Criterion result;
    try {
      result = entry.run();
    } catch (const std::exception& e) {
      result.pass = false;
      result.detail = std::string("exception: ") + e.what();
    }
    std::printf("[%s] %s%s%s\n", result.pass ? "PASS" : "FAIL", entry.name,
                result.detail.empty() ? "" : " - ",
                result.detail.c_str());
    if (!result.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
