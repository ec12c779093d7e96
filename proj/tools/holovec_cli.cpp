// Command-line surface of the holovec toolkit: worked-example demos, seeded
// experiments, the Cartan matrix oracle, and file-based bind/bundle/unbind.
//
// Exit codes: 0 success, 1 verification or recovery failure (including
// backend and dimension mismatches between inputs), 2 usage or parse errors.

#include <cstdio>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "holovec/holovec.hpp"

namespace {

using namespace holovec;

std::string fmt(double value) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.6g", value);
  return buf;
}

std::string fmt_tuple(const hrr::RealTuple& x) {
  std::string out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i != 0) out += ' ';
    out += fmt(x[i]);
  }
  return out;
}

std::string trace_text(const vsa::Trace& trace) {
  if (const auto* mv = std::get_if<ga::Multivector>(&trace))
    return ga::to_string(*mv);
  if (const auto* tuple = std::get_if<hrr::RealTuple>(&trace))
    return fmt_tuple(*tuple);
  return std::get<bsc::BitString>(trace).to_string();
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::fputs(text.c_str(), stdout);
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw Error("cannot write '" + out_path + "'");
  out << text;
}

// ---------------------------------------------------------------------------
// demo patsmith

struct DemoConfig {
  std::string backend = "ga";
  bool paper_fixture = false;
  int n = 0;  // 0: backend default
  int k = 0;
  double alpha = 1.0, beta = 1.0, gamma = 1.0;
  std::uint64_t seed = 42;
  double eps = hrr::kDefaultEps;
  std::string out;
};

int run_demo_patsmith(const DemoConfig& cfg) {
  const vsa::BackendKind kind = vsa::parse_backend(cfg.backend);
  if (cfg.paper_fixture && kind != vsa::BackendKind::ga)
    throw ParseError("--paper-fixture is only meaningful for --backend ga");
  if (kind == vsa::BackendKind::bsc &&
      (cfg.alpha != 1.0 || cfg.beta != 1.0 || cfg.gamma != 1.0))
    throw ParseError("bsc supports only unit weights");

  vsa::Vocabulary voc;
  if (cfg.paper_fixture) {
    voc = vsa::patsmith_fixture();
  } else {
    vsa::Backend backend;
    backend.kind = kind;
    backend.eps = cfg.eps;
    switch (kind) {
      case vsa::BackendKind::ga:
        backend.n = cfg.n == 0 ? 64 : cfg.n;
        backend.k = cfg.k == 0 ? std::max(1, backend.n / 4) : cfg.k;
        break;
      case vsa::BackendKind::hrr:
        backend.n = cfg.n == 0 ? 1024 : cfg.n;
        break;
      case vsa::BackendKind::bsc:
        backend.n = cfg.n == 0 ? 10000 : cfg.n;
        break;
    }
    voc = vsa::gen_vocabulary({"name", "sex", "age"}, {"Pat", "male", "66"},
                              backend, cfg.seed);
  }

  vsa::Record record;
  record.pairs = {{"name", "Pat", cfg.alpha},
                  {"sex", "male", cfg.beta},
                  {"age", "66", cfg.gamma}};

  std::string text;
  text += "demo: patsmith\n";
  text += "backend: " + vsa::to_string(kind) + "\n";
  if (cfg.paper_fixture)
    text += "fixture: paper (n=4, k=2)\n";
  else if (kind == vsa::BackendKind::ga)
    text += "n: " + std::to_string(voc.backend.n) +
            "  k: " + std::to_string(voc.backend.k) + "\n";
  else
    text += "n: " + std::to_string(voc.backend.n) + "\n";
  if (!cfg.paper_fixture) text += "seed: " + std::to_string(cfg.seed) + "\n";
  if (kind != vsa::BackendKind::bsc)
    text += "weights: alpha=" + fmt(cfg.alpha) + " beta=" + fmt(cfg.beta) +
            " gamma=" + fmt(cfg.gamma) + "\n";

  if (kind == vsa::BackendKind::ga) {
    const auto blade_of = [](const vsa::Item& item) {
      return "c" + ga::format_blade(std::get<ga::BladeMask>(item));
    };
    std::string roles, fillers;
    for (const auto& [name, item] : voc.roles)
      roles += " " + name + "=" + blade_of(item);
    for (const auto& [name, item] : voc.fillers)
      fillers += " " + name + "=" + blade_of(item);
    text += "roles:" + roles + "\n";
    text += "fillers:" + fillers + "\n";
  }

  const vsa::Trace trace = vsa::encode_record(record, voc);
  text += "trace: " + trace_text(trace) + "\n";
  if (cfg.paper_fixture && cfg.beta == cfg.gamma)
    text += "note: beta=gamma collapses the sex and age terms of the 4-bit "
            "fixture; only name is recoverable\n";

  // The paper fixture reproduces the printed transcript: bare left
  // multiplication by the role blade. Elsewhere the sign-corrected inverse
  // is used.
  vsa::UnbindOptions unbind_opts;
  unbind_opts.ga_style = cfg.paper_fixture ? vsa::GaUnbindStyle::paper
                                           : vsa::GaUnbindStyle::inverse;

  const vsa::CleanupMemory memory = vsa::filler_memory(voc);
  int recovered = 0;
  for (const auto& pair : record.pairs) {
    vsa::Trace decoded = vsa::unbind(trace, pair.role, voc, unbind_opts);
    text += "unbind " + pair.role + ": " + trace_text(decoded) + "\n";
    if (kind == vsa::BackendKind::ga) {
      decoded = vsa::filler_subspace_project(
          std::get<ga::Multivector>(decoded), voc.backend.k);
      text += "project " + pair.role + ": " + trace_text(decoded) + "\n";
    }
    const auto result = vsa::cleanup(decoded, memory);
    if (!result) {
      text += "cleanup " + pair.role + ": NoMatch (zero vector)\n";
      continue;
    }
    text += "cleanup " + pair.role + ": " + result->name +
            " score=" + fmt(result->score) +
            " sign=" + (result->sign > 0 ? std::string("+1")
                                         : std::string("-1")) +
            (result->tie ? " tie" : "") + "\n";
    if (result->name == pair.filler) ++recovered;
  }
  text += "recovered: " + std::to_string(recovered) + "/3\n";
  emit(text, cfg.out);
  return recovered == 3 ? 0 : 1;
}

// ---------------------------------------------------------------------------
// experiment capacity

struct CapacityCliConfig {
  std::string backend = "ga";
  std::vector<int> n_values;
  std::vector<int> pair_values;
  int k = 0;
  int trials = 100;
  int memory_items = 100;
  std::uint64_t seed = 42;
  std::string format = "csv";
  std::string out;
};

int run_capacity_cmd(const CapacityCliConfig& cfg) {
  const vsa::BackendKind kind = vsa::parse_backend(cfg.backend);
  std::vector<int> n_values = cfg.n_values;
  if (n_values.empty()) {
    switch (kind) {
      case vsa::BackendKind::ga: n_values = {64}; break;
      case vsa::BackendKind::hrr: n_values = {1024}; break;
      case vsa::BackendKind::bsc: n_values = {10000}; break;
    }
  }
  const std::vector<int> pair_values =
      cfg.pair_values.empty() ? std::vector<int>{3} : cfg.pair_values;

  io::json rows = io::json::array();
  std::string csv = "backend,n,N,trials,accuracy,margin,seed\n";
  for (const int n : n_values) {
    for (const int pairs : pair_values) {
      experiment::CapacityConfig run;
      run.backend.kind = kind;
      run.backend.n = n;
      run.backend.k = kind == vsa::BackendKind::ga
                          ? (cfg.k == 0 ? std::max(1, n / 4) : cfg.k)
                          : 0;
      run.pairs = pairs;
      run.trials = cfg.trials;
      run.memory_items = cfg.memory_items;
      run.seed = cfg.seed;
      const experiment::CapacityStats stats = experiment::run_capacity(run);

      csv += cfg.backend + "," + std::to_string(n) + "," +
             std::to_string(pairs) + "," + std::to_string(stats.trials) + "," +
             fmt(stats.accuracy()) + "," + fmt(stats.mean_margin) + "," +
             std::to_string(cfg.seed) + "\n";
      io::json row{{"backend", cfg.backend}, {"n", n},       {"N", pairs},
                   {"trials", stats.trials}, {"accuracy", stats.accuracy()},
                   {"margin", stats.mean_margin}, {"seed", cfg.seed}};
      if (kind == vsa::BackendKind::ga) {
        row["subspace_exit_trials"] = stats.ga_exit_trials;
        row["subspace_exit_successes"] = stats.ga_exit_successes;
      }
      rows.push_back(std::move(row));
    }
  }

  if (cfg.format == "json")
    emit(io::dump(io::json{{"rows", std::move(rows)}}), cfg.out);
  else
    emit(csv, cfg.out);
  return 0;
}

// ---------------------------------------------------------------------------
// experiment basis

int run_basis_cmd(int trials, std::uint64_t seed, const std::string& out) {
  const experiment::BasisStats stats = experiment::run_basis({trials, seed});
  const auto& s = stats.first;
  std::string text;
  text += "experiment: basis\n";
  text += "trials: " + std::to_string(stats.trials) + "\n";
  text += "seed: " + std::to_string(seed) + "\n";
  text += "sample x: (" + fmt(s.x[0]) + ", " + fmt(s.x[1]) + ")\n";
  text += "sample y: (" + fmt(s.y[0]) + ", " + fmt(s.y[1]) + ")\n";
  text += "sample conv: (" + fmt(s.conv[0]) + ", " + fmt(s.conv[1]) + ")\n";
  text += "sample conv substituted: (" + fmt(s.conv_subst[0]) + ", " +
          fmt(s.conv_subst[1]) + ")\n";
  text += "sample conv of rotated components: (" + fmt(s.conv_rotated[0]) +
          ", " + fmt(s.conv_rotated[1]) + ")\n";
  text += "sample gp scalar: " + fmt(s.inner) + " rotated: " +
          fmt(s.inner_rotated) + "\n";
  text += "sample gp bivector: " + fmt(s.outer) + " rotated: " +
          fmt(s.outer_rotated) + "\n";
  text += "convolution mismatch: " + std::to_string(stats.conv_mismatch) +
          "/" + std::to_string(stats.trials) +
          " (min margin " + fmt(stats.min_margin) + ")\n";
  text += "geometric product match: " + std::to_string(stats.gp_match) + "/" +
          std::to_string(stats.trials) + " (max deviation " +
          fmt(stats.max_gp_deviation) + ")\n";
  const bool pass = stats.conv_mismatch >= stats.trials - 1 &&
                    stats.gp_match == stats.trials;
  text += std::string("result: ") + (pass ? "PASS" : "FAIL") + "\n";
  emit(text, out);
  return pass ? 0 : 1;
}

// ---------------------------------------------------------------------------
// oracle

int run_oracle_cmd(int n, int m, std::uint64_t samples, std::uint64_t seed,
                   const std::string& out) {
  cartan::CartanConfig cfg{m, n};
  cartan::OracleOptions opts;
  opts.samples = samples;
  opts.seed = seed;
  const cartan::OracleReport report = cartan::oracle_verify(n, cfg, opts);
  std::string text;
  text += "oracle: cartan representation\n";
  text += "n: " + std::to_string(report.n) + "  m: " +
          std::to_string(report.m) + "\n";
  text += std::string("mode: ") +
          (report.exhaustive ? "exhaustive" : "sampled") + "\n";
  if (!report.exhaustive) text += "seed: " + std::to_string(seed) + "\n";
  text += "pairs: " + std::to_string(report.pairs_checked) + "\n";
  text += "failures: " + std::to_string(report.failures) + "\n";
  text += "worst deviation: " + fmt(report.worst_deviation) + "\n";
  text += std::string("result: ") + (report.passed() ? "PASS" : "FAIL") + "\n";
  emit(text, out);
  return report.passed() ? 0 : 1;
}

// ---------------------------------------------------------------------------
// bind / unbind / bundle

vsa::Trace load_trace(const std::string& path) {
  return io::trace_from_json(io::load_file(path));
}

void check_backend_flag(const std::string& flag, const vsa::Trace& trace,
                        const std::string& path) {
  if (flag.empty()) return;
  if (vsa::parse_backend(flag) != io::trace_kind(trace))
    throw Error("'" + path + "' does not hold a " + flag + " value");
}

int trace_length(const vsa::Trace& trace) {
  if (const auto* mv = std::get_if<ga::Multivector>(&trace))
    return mv->dim();
  if (const auto* tuple = std::get_if<hrr::RealTuple>(&trace))
    return static_cast<int>(tuple->size());
  return std::get<bsc::BitString>(trace).size();
}

void check_compatible(const vsa::Trace& a, const vsa::Trace& b) {
  if (io::trace_kind(a) != io::trace_kind(b))
    throw Error("inputs use different backends");
  if (trace_length(a) != trace_length(b))
    throw DimensionMismatch("inputs have different dimensions");
}

int run_bind_cmd(const std::string& backend, const std::string& lhs_path,
                 const std::string& rhs_path, const std::string& out) {
  const vsa::Trace lhs = load_trace(lhs_path);
  const vsa::Trace rhs = load_trace(rhs_path);
  check_backend_flag(backend, lhs, lhs_path);
  check_backend_flag(backend, rhs, rhs_path);
  check_compatible(lhs, rhs);
  const vsa::Trace result = [&]() -> vsa::Trace {
    switch (io::trace_kind(lhs)) {
      case vsa::BackendKind::ga:
        return gp(std::get<ga::Multivector>(lhs),
                  std::get<ga::Multivector>(rhs));
      case vsa::BackendKind::hrr:
        return hrr::circ_conv(std::get<hrr::RealTuple>(lhs),
                              std::get<hrr::RealTuple>(rhs));
      case vsa::BackendKind::bsc:
        return bsc::xor_bind(std::get<bsc::BitString>(lhs),
                             std::get<bsc::BitString>(rhs));
    }
    throw Error("unreachable backend kind");
  }();
  emit(io::dump(io::trace_to_json(result)), out);
  return 0;
}

int run_unbind_cmd(const std::string& backend, const std::string& role_path,
                   const std::string& trace_path, bool exact, double eps,
                   const std::string& out) {
  const vsa::Trace role = load_trace(role_path);
  const vsa::Trace trace = load_trace(trace_path);
  check_backend_flag(backend, role, role_path);
  check_backend_flag(backend, trace, trace_path);
  check_compatible(role, trace);
  const vsa::Trace result = [&]() -> vsa::Trace {
    switch (io::trace_kind(role)) {
      case vsa::BackendKind::ga: {
        const auto& mv = std::get<ga::Multivector>(role);
        if (mv.terms().size() != 1)
          throw Error("ga unbind requires the role file to hold one blade");
        const auto& [mask, coeff] = *mv.terms().begin();
        const ga::SignedBlade inv =
            ga::blade_inverse(ga::BladeMask{mask, mv.dim()});
        return gp(ga::Multivector::blade(inv, 1.0 / coeff),
                  std::get<ga::Multivector>(trace));
      }
      case vsa::BackendKind::hrr: {
        const auto& key = std::get<hrr::RealTuple>(role);
        const auto& value = std::get<hrr::RealTuple>(trace);
        return exact ? hrr::circ_conv(hrr::exact_inverse(key, eps), value)
                     : hrr::approx_unbind(key, value);
      }
      case vsa::BackendKind::bsc:
        return bsc::xor_bind(std::get<bsc::BitString>(role),
                             std::get<bsc::BitString>(trace));
    }
    throw Error("unreachable backend kind");
  }();
  emit(io::dump(io::trace_to_json(result)), out);
  return 0;
}

int run_bundle_cmd(const std::string& backend,
                   const std::vector<std::string>& paths,
                   const std::string& out) {
  std::vector<vsa::Trace> inputs;
  for (const auto& path : paths) {
    inputs.push_back(load_trace(path));
    check_backend_flag(backend, inputs.back(), path);
    if (inputs.size() > 1) check_compatible(inputs.front(), inputs.back());
  }
  const vsa::Trace result = [&]() -> vsa::Trace {
    switch (io::trace_kind(inputs.front())) {
      case vsa::BackendKind::ga: {
        ga::Multivector acc = std::get<ga::Multivector>(inputs[0]);
        for (std::size_t i = 1; i < inputs.size(); ++i)
          acc = acc + std::get<ga::Multivector>(inputs[i]);
        return acc;
      }
      case vsa::BackendKind::hrr: {
        hrr::RealTuple acc = std::get<hrr::RealTuple>(inputs[0]);
        for (std::size_t i = 1; i < inputs.size(); ++i) {
          const auto& next = std::get<hrr::RealTuple>(inputs[i]);
          for (std::size_t j = 0; j < acc.size(); ++j) acc[j] += next[j];
        }
        return acc;
      }
      case vsa::BackendKind::bsc: {
        std::vector<bsc::BitString> rows;
        for (const auto& input : inputs)
          rows.push_back(std::get<bsc::BitString>(input));
        return bsc::majority_bundle(rows);
      }
    }
    throw Error("unreachable backend kind");
  }();
  emit(io::dump(io::trace_to_json(result)), out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"holovec: blade, convolution, and spatter-code hypervector "
               "toolkit"};
  app.require_subcommand(1);
  int exit_code = 0;

  // demo patsmith
  auto* demo = app.add_subcommand("demo", "worked-example demos");
  demo->require_subcommand(1);
  auto* patsmith =
      demo->add_subcommand("patsmith", "encode and decode the Pat Smith "
                                       "record");
  auto demo_cfg = std::make_shared<DemoConfig>();
  patsmith->add_option("--backend", demo_cfg->backend, "ga | hrr | bsc")
      ->check(CLI::IsMember({"ga", "hrr", "bsc"}));
  patsmith->add_flag("--paper-fixture", demo_cfg->paper_fixture,
                     "force n=4 and the printed role/filler blades");
  patsmith->add_option("--n", demo_cfg->n, "dimension (0 = backend default)");
  patsmith->add_option("--k", demo_cfg->k, "ga filler prefix length");
  patsmith->add_option("--alpha", demo_cfg->alpha, "weight of name->Pat");
  patsmith->add_option("--beta", demo_cfg->beta, "weight of sex->male");
  patsmith->add_option("--gamma", demo_cfg->gamma, "weight of age->66");
  patsmith->add_option("--seed", demo_cfg->seed, "vocabulary seed")
      ->envname("HOLOVEC_SEED");
  patsmith->add_option("--eps", demo_cfg->eps, "hrr invertibility threshold");
  patsmith->add_option("--out", demo_cfg->out, "output path (default stdout)");
  patsmith->callback([demo_cfg, &exit_code] {
    exit_code = run_demo_patsmith(*demo_cfg);
  });

  // experiment capacity | basis
  auto* exper = app.add_subcommand("experiment", "seeded Monte Carlo runs");
  exper->require_subcommand(1);
  auto* capacity = exper->add_subcommand(
      "capacity", "record encode/decode accuracy over a (n, N) grid");
  auto cap_cfg = std::make_shared<CapacityCliConfig>();
  capacity->add_option("--backend", cap_cfg->backend, "ga | hrr | bsc")
      ->check(CLI::IsMember({"ga", "hrr", "bsc"}));
  capacity->add_option("--n", cap_cfg->n_values,
                       "dimension(s), repeatable")->expected(-1);
  capacity->add_option("--pairs", cap_cfg->pair_values,
                       "pairs per record, repeatable")->expected(-1);
  capacity->add_option("--k", cap_cfg->k, "ga filler prefix (0 = n/4)");
  capacity->add_option("--trials", cap_cfg->trials, "trials per cell")
      ->check(CLI::PositiveNumber);
  capacity->add_option("--memory", cap_cfg->memory_items,
                       "clean-up memory size");
  capacity->add_option("--seed", cap_cfg->seed, "master seed")
      ->envname("HOLOVEC_SEED");
  capacity->add_option("--format", cap_cfg->format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}));
  capacity->add_option("--out", cap_cfg->out, "output path (default stdout)");
  capacity->callback([cap_cfg, &exit_code] {
    exit_code = run_capacity_cmd(*cap_cfg);
  });

  auto* basis = exper->add_subcommand(
      "basis", "rotated-basis convolution vs geometric product");
  auto basis_trials = std::make_shared<int>(1000);
  auto basis_seed = std::make_shared<std::uint64_t>(42);
  auto basis_out = std::make_shared<std::string>();
  basis->add_option("--trials", *basis_trials, "random 2D pairs")
      ->check(CLI::PositiveNumber);
  basis->add_option("--seed", *basis_seed, "master seed")
      ->envname("HOLOVEC_SEED");
  basis->add_option("--out", *basis_out, "output path (default stdout)");
  basis->callback([basis_trials, basis_seed, basis_out, &exit_code] {
    exit_code = run_basis_cmd(*basis_trials, *basis_seed, *basis_out);
  });

  // oracle
  auto* oracle = app.add_subcommand(
      "oracle", "verify the blade product against Cartan matrices");
  auto oracle_n = std::make_shared<int>(4);
  auto oracle_m = std::make_shared<int>(0);
  auto oracle_samples = std::make_shared<std::uint64_t>(0);
  auto oracle_seed = std::make_shared<std::uint64_t>(42);
  auto oracle_out = std::make_shared<std::string>();
  oracle->add_option("--n", *oracle_n, "generators (1..14)")
      ->check(CLI::Range(1, 14));
  oracle->add_option("--m", *oracle_m,
                     "tensor factors (1..7, default ceil(n/2))")
      ->check(CLI::Range(1, 7));
  oracle->add_option("--sample", *oracle_samples,
                     "sampled pairs (0 = exhaustive when feasible)");
  oracle->add_option("--seed", *oracle_seed, "sampling seed")
      ->envname("HOLOVEC_SEED");
  oracle->add_option("--out", *oracle_out, "output path (default stdout)");
  oracle->callback(
      [oracle_n, oracle_m, oracle_samples, oracle_seed, oracle_out,
       &exit_code] {
        const int m = *oracle_m == 0 ? (*oracle_n + 1) / 2 : *oracle_m;
        if (*oracle_n > 2 * m)
          throw CLI::ValidationError("oracle", "--n must be <= 2m");
        exit_code = run_oracle_cmd(*oracle_n, m, *oracle_samples, *oracle_seed,
                                   *oracle_out);
      });

  // bind / unbind / bundle
  const auto add_backend_flag = [](CLI::App* cmd, std::shared_ptr<std::string> value) {
    cmd->add_option("--backend", *value,
                    "cross-check inputs against ga | hrr | bsc")
        ->check(CLI::IsMember({"ga", "hrr", "bsc"}));
  };

  auto* bind = app.add_subcommand("bind", "bind two hypervector files");
  auto bind_backend = std::make_shared<std::string>();
  auto bind_lhs = std::make_shared<std::string>();
  auto bind_rhs = std::make_shared<std::string>();
  auto bind_out = std::make_shared<std::string>();
  add_backend_flag(bind, bind_backend);
  bind->add_option("--lhs", *bind_lhs, "left input file")->required();
  bind->add_option("--rhs", *bind_rhs, "right input file")->required();
  bind->add_option("--out", *bind_out, "output path (default stdout)");
  bind->callback([bind_backend, bind_lhs, bind_rhs, bind_out, &exit_code] {
    exit_code = run_bind_cmd(*bind_backend, *bind_lhs, *bind_rhs, *bind_out);
  });

  auto* unbind = app.add_subcommand("unbind",
                                    "unbind a role from a trace file");
  auto un_backend = std::make_shared<std::string>();
  auto un_role = std::make_shared<std::string>();
  auto un_trace = std::make_shared<std::string>();
  auto un_out = std::make_shared<std::string>();
  auto un_exact = std::make_shared<bool>(false);
  auto un_eps = std::make_shared<double>(hrr::kDefaultEps);
  add_backend_flag(unbind, un_backend);
  unbind->add_option("--role", *un_role, "role file")->required();
  unbind->add_option("--trace", *un_trace, "trace file")->required();
  unbind->add_flag("--exact", *un_exact,
                   "hrr: exact spectral inverse instead of involution");
  unbind->add_option("--eps", *un_eps, "hrr invertibility threshold");
  unbind->add_option("--out", *un_out, "output path (default stdout)");
  unbind->callback(
      [un_backend, un_role, un_trace, un_exact, un_eps, un_out, &exit_code] {
        exit_code = run_unbind_cmd(*un_backend, *un_role, *un_trace, *un_exact,
                                   *un_eps, *un_out);
      });

  auto* bundle = app.add_subcommand("bundle",
                                    "superpose hypervector files");
  auto bu_backend = std::make_shared<std::string>();
  auto bu_inputs = std::make_shared<std::vector<std::string>>();
  auto bu_out = std::make_shared<std::string>();
  add_backend_flag(bundle, bu_backend);
  bundle->add_option("--inputs", *bu_inputs, "input files")
      ->required()
      ->expected(-1);
  bundle->add_option("--out", *bu_out, "output path (default stdout)");
  bundle->callback([bu_backend, bu_inputs, bu_out, &exit_code] {
    exit_code = run_bundle_cmd(*bu_backend, *bu_inputs, *bu_out);
  });

  try {
    app.parse(argc, argv);
    return exit_code;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const ParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
