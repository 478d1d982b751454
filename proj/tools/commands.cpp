/*
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *   http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing,
 * software distributed under the License is distributed on an
 * "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
 * KIND, either express or implied.  See the License for the
 * specific language governing permissions and limitations
 * under the License.
 */

#include "commands.hpp"

#include <cmath>
#include <filesystem>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bures/cumulants.hpp"
#include "bures/distribution.hpp"
#include "bures/errors.hpp"
#include "bures/identities.hpp"
#include "bures/quadrature.hpp"
#include "bures/sampler.hpp"
#include "output.hpp"

namespace bures::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

// Raised for argument combinations CLI11 cannot express.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

std::string format_double(double v) {
  std::ostringstream s;
  s.precision(12);
  s << v;
  return s.str();
}

EnsembleDims checked_dims(int m, int n) {
  if (m < 1 || n < 1) throw UsageError("--m and --n must be positive");
  if (m > n) throw UsageError("require m <= n (got m=" + std::to_string(m) + ", n=" + std::to_string(n) + ")");
  return EnsembleDims(m, n);
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& seed) {
  if (seed) return *seed;
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

fs::path report_path(const std::string& given, const std::string& default_name) {
  return given.empty() ? default_output_dir() / default_name : fs::path(given);
}

// ---- cumulants -------------------------------------------------------------

struct CumulantsArgs {
  int m = 0, n = 0;
  bool exact = false;
  std::string format = "text";
};

int cmd_cumulants(const CumulantsArgs& a, std::ostream& out) {
  const EnsembleDims dims = checked_dims(a.m, a.n);
  const CumulantSet c = cumulants(dims);
  if (a.format == "json") {
    json j{{"m", a.m}, {"n", a.n}};
    j["kappa1"] = c.kappa1_f;
    j["kappa2"] = c.kappa2_f;
    j["kappa3"] = c.kappa3_f;
    j["skewness"] = number_or_null(c.skewness);
    if (a.exact) {
      j["kappa1_exact"] = c.kappa1.to_string();
      j["kappa2_exact"] = c.kappa2.to_string();
      j["kappa3_exact"] = c.kappa3.to_string();
    }
    out << j.dump(2) << "\n";
    return kSuccess;
  }
  if (a.exact) {
    out << "kappa1 = " << c.kappa1.to_string() << "\n";
    out << "kappa2 = " << c.kappa2.to_string() << "\n";
    out << "kappa3 = " << c.kappa3.to_string() << "\n";
  } else {
    out << "kappa1 = " << format_double(c.kappa1_f) << "\n";
    out << "kappa2 = " << format_double(c.kappa2_f) << "\n";
    out << "kappa3 = " << format_double(c.kappa3_f) << "\n";
  }
  if (std::isfinite(c.skewness))
    out << "skewness = " << format_double(c.skewness) << "\n";
  else
    out << "skewness = undefined (zero variance at m = 1)\n";
  return kSuccess;
}

// ---- simulate --------------------------------------------------------------

struct SimulateArgs {
  int m = 0, n = 0;
  std::size_t samples = 100000;
  std::optional<std::uint64_t> seed;
  std::string backend = "mcmc";
  std::string out_path;
  unsigned chains = 1;
  std::optional<std::size_t> thinning, burn_in;
};

int cmd_simulate(const SimulateArgs& a, const std::vector<std::string>& argv, std::ostream& out) {
  const EnsembleDims dims = checked_dims(a.m, a.n);
  if (a.backend == "matrix" && a.m != a.n) throw UsageError("the matrix backend requires n = m");
  if (a.samples < 3) throw UsageError("--samples must be at least 3");
  const std::uint64_t seed = resolve_seed(a.seed);

  SampleBatch batch;
  if (a.backend == "matrix") {
    batch = matrix_model_batch(a.m, a.samples, seed);
  } else {
    ChainConfig cfg = recommended_chain_config(dims, a.samples, seed);
    cfg.chain_count = a.chains;
    if (a.thinning) cfg.thinning = *a.thinning;
    if (a.burn_in) cfg.burn_in = *a.burn_in;
    batch = mcmc_chain(dims, cfg);
  }

  const fs::path csv = a.out_path.empty()
                           ? default_output_dir() / ("samples_m" + std::to_string(a.m) + "_n" + std::to_string(a.n) +
                                                     "_" + a.backend + "_seed" + std::to_string(seed) + ".csv")
                           : fs::path(a.out_path);
  std::ostringstream body;
  write_samples_csv(batch, body);
  write_file_atomic(csv, body.str());
  const fs::path manifest =
      write_manifest(RunManifest{"simulate", argv, {seed}, {csv}}, csv.has_parent_path() ? csv.parent_path() : ".");

  out << "backend = " << a.backend << ", samples = " << batch.entropies.size() << ", seed = " << seed << "\n";
  if (a.backend == "mcmc") out << "acceptance = " << format_double(batch.acceptance_rate) << "\n";
  const KStatistics k = k_statistics(batch.entropies);
  const CumulantSet c = cumulants(dims);
  auto row = [&](const char* name, double est, double se, double formula) {
    out << name << " = " << format_double(est) << " +/- " << format_double(se) << "   formula " << format_double(formula)
        << "\n";
  };
  row("k1", k.k1, k.se1, c.kappa1_f);
  row("k2", k.k2, k.se2, c.kappa2_f);
  row("k3", k.k3, k.se3, c.kappa3_f);
  if (!batch.t_values.empty()) {
    const KStatistics kt = k_statistics(batch.t_values);
    row("k3(T)", kt.k3, kt.se3, poly_eval_double(kappa3_unconstrained(dims)));
  }
  out << "samples written to " << csv.string() << "\n";
  out << "manifest written to " << manifest.string() << "\n";
  return kSuccess;
}

// ---- verify ----------------------------------------------------------------

int finish_report(const json& report, const fs::path& path, bool pass, const std::vector<std::string>& argv,
                  std::vector<fs::path> extra_outputs, std::vector<std::uint64_t> seeds, std::ostream& out) {
  write_file_atomic(path, report.dump(2) + "\n");
  extra_outputs.insert(extra_outputs.begin(), path);
  write_manifest(RunManifest{"verify", argv, std::move(seeds), std::move(extra_outputs)}, path.parent_path());
  out << (pass ? "PASS" : "FAIL") << ": report written to " << path.string() << "\n";
  return pass ? kSuccess : kVerificationFailure;
}

struct VerifyIdentitiesArgs {
  int max_m = 8;
  unsigned threads = 0;
  std::string report;
};

int cmd_verify_identities(const VerifyIdentitiesArgs& a, const std::vector<std::string>& argv, std::ostream& out) {
  if (a.max_m < 1) throw UsageError("--max-m must be positive");
  const IdentityReport rep = run_identity_cases(identity_grid(a.max_m), a.threads);
  json cases = json::array();
  for (const auto& o : rep.outcomes) {
    json params = json::object();
    for (const auto& [k, v] : describe(o.identity.params)) params[k] = v;
    json c{{"identity_id", o.identity.identity_id}, {"params", params}};
    c["residual_is_zero"] = o.status == CaseStatus::Pass;
    c["residual_text_if_nonzero"] =
        (o.status == CaseStatus::Fail || o.status == CaseStatus::Error) ? json(o.residual_text) : json(nullptr);
    switch (o.status) {
      case CaseStatus::Pass: c["status"] = "pass"; break;
      case CaseStatus::Fail: c["status"] = "fail"; break;
      case CaseStatus::Error: c["status"] = "error"; break;
      case CaseStatus::Skipped:
        c["status"] = "skipped";
        c["skip_reason"] = o.skip_reason;
        c["residual_is_zero"] = nullptr;
        break;
    }
    cases.push_back(std::move(c));
  }

  bool pass = rep.all_pass();
  json degenerate = json::array();
  for (int m = 1; m <= std::max(20, a.max_m); ++m)
    for (const auto& r : degenerate_anomaly_check(m)) {
      degenerate.push_back({{"m", m}, {"relation", r.relation}, {"holds", r.holds}});
      pass = pass && r.holds;
    }
  json telescope = json::array();
  const std::vector<BigRational> bs = {BigRational(1), BigRational(2), BigRational(3), make_rational(1, 2),
                                       make_rational(5, 2)};
  for (const auto& f : resummation_fixtures())
    for (int m = 1; m <= a.max_m; ++m)
      for (const auto& b : bs) {
        SumParams p;
        p.m = m;
        p.b = b;
        const bool zero = resummation_telescope_check(f.id, p).is_zero();
        telescope.push_back({{"fixture_id", f.id}, {"m", m}, {"b", b.get_str()}, {"residual_is_zero", zero}});
        pass = pass && zero;
      }

  json report{{"target", "identities"},
              {"max_m", a.max_m},
              {"summary",
               {{"total", rep.outcomes.size()},
                {"passed", rep.passed},
                {"failed", rep.failed},
                {"skipped", rep.skipped},
                {"errors", rep.errors}}},
              {"cases", cases},
              {"degenerate_anomalies", degenerate},
              {"resummation_telescopes", telescope},
              {"all_pass", pass}};
  out << rep.passed << " identity cases passed, " << rep.failed << " failed, " << rep.errors << " errors, "
      << rep.skipped << " skipped\n";
  return finish_report(report, report_path(a.report, "verify_identities.json"), pass, argv, {}, {}, out);
}

int cmd_verify_oracles(const std::string& report_arg, const std::vector<std::string>& argv, std::ostream& out) {
  struct Case {
    int m, n;
  };
  const std::vector<Case> cases = {{2, 2}, {2, 3}, {2, 5}, {2, 10}, {3, 3}, {3, 4}, {3, 6}};
  json checks = json::array();
  bool pass = true;
  for (const auto& cs : cases) {
    const EnsembleDims dims(cs.m, cs.n);
    const double tol_k = cs.m == 2 ? 1e-8 : 1e-6;
    const double tol_z = cs.m == 2 ? 1e-10 : 1e-7;
    const QuadratureResult z = normalization_check(dims);
    const bool z_ok = std::abs(z.value - 1.0) <= tol_z;
    checks.push_back({{"m", cs.m},
                      {"n", cs.n},
                      {"quantity", "normalization"},
                      {"oracle", z.value},
                      {"formula", 1.0},
                      {"abs_diff", std::abs(z.value - 1.0)},
                      {"tolerance", tol_z},
                      {"error_estimate", z.error_estimate},
                      {"warning", z.warning},
                      {"pass", z_ok}});
    pass = pass && z_ok;
    const auto oracle = oracle_cumulants(dims, 3);
    const CumulantSet c = cumulants(dims);
    const double formula[3] = {c.kappa1_f, c.kappa2_f, c.kappa3_f};
    for (int k = 0; k < 3; ++k) {
      const double diff = std::abs(oracle[k].value - formula[k]);
      const bool ok = diff <= tol_k;
      checks.push_back({{"m", cs.m},
                        {"n", cs.n},
                        {"quantity", "kappa" + std::to_string(k + 1)},
                        {"oracle", oracle[k].value},
                        {"formula", formula[k]},
                        {"abs_diff", diff},
                        {"tolerance", tol_k},
                        {"error_estimate", oracle[k].error_estimate},
                        {"warning", oracle[k].warning},
                        {"pass", ok}});
      pass = pass && ok;
    }
  }
  json report{{"target", "oracles"}, {"checks", checks}, {"all_pass", pass}};
  return finish_report(report, report_path(report_arg, "verify_oracles.json"), pass, argv, {}, {}, out);
}

struct VerifyFiguresArgs {
  int fig = 1;
  std::size_t samples = 0;
  std::optional<std::uint64_t> seed;
  std::string report;
};

int cmd_verify_figures(const VerifyFiguresArgs& a, const std::vector<std::string>& argv, std::ostream& out) {
  if (a.fig != 1 && a.fig != 2) throw UsageError("--fig must be 1 or 2");
  const std::uint64_t seed = resolve_seed(a.seed);
  if (a.fig == 1) {
    const std::size_t samples = a.samples ? a.samples : 200000;
    if (samples < 10000) throw UsageError("--samples must be at least 10000 for figure 1");
    const EnsembleDims dims(4, 6);
    const SampleBatch batch = mcmc_chain(dims, recommended_chain_config(dims, samples, seed));
    const DensityComparison dc = density_comparison(batch.entropies, dims);
    const bool pass = dc.l1_edgeworth < dc.l1_gaussian;
    const fs::path report = report_path(a.report, "verify_figure1.json");
    fs::path grid = report;
    grid.replace_extension(".grid.csv");
    std::ostringstream csv;
    write_grid_csv(dc.grid, csv);
    write_file_atomic(grid, csv.str());
    json j{{"target", "figures"},   {"fig", 1},
           {"m", 4},                {"n", 6},
           {"samples", samples},    {"seed", seed},
           {"skewness", skewness(dims)},
           {"bins", dc.grid.xs.size()},
           {"l1_gaussian", dc.l1_gaussian},
           {"l1_edgeworth", dc.l1_edgeworth},
           {"sup_gaussian", dc.sup_gaussian},
           {"sup_edgeworth", dc.sup_edgeworth},
           {"grid_csv", grid.string()},
           {"all_pass", pass}};
    out << "L1(histogram, gaussian) = " << format_double(dc.l1_gaussian) << ", L1(histogram, edgeworth) = "
        << format_double(dc.l1_edgeworth) << "\n";
    return finish_report(j, report, pass, argv, {grid}, {seed}, out);
  }

  const std::size_t samples = a.samples ? a.samples : 100000;
  if (samples < 3000) throw UsageError("--samples must be at least 3000 for figure 2");
  json table = json::array();
  for (int m = 3; m <= 12; ++m)
    for (int mult = 1; mult <= 3; ++mult) {
      const EnsembleDims dims(m, mult * m);
      table.push_back({{"m", m},
                       {"n", mult * m},
                       {"kappa3", poly_eval_double(kappa3(dims))},
                       {"skewness", skewness(dims)}});
    }
  json mc = json::array();
  bool pass = true;
  const std::vector<std::pair<int, int>> points = {{3, 3}, {4, 8}, {5, 15}};
  for (std::size_t i = 0; i < points.size(); ++i) {
    const EnsembleDims dims(points[i].first, points[i].second);
    const SampleBatch batch = mcmc_chain(dims, recommended_chain_config(dims, samples, chain_seed(seed, i)));
    const KStatistics k = k_statistics(batch.entropies);
    const CumulantSet c = cumulants(dims);
    const double z1 = (k.k1 - c.kappa1_f) / k.se1, z2 = (k.k2 - c.kappa2_f) / k.se2,
                 z3 = (k.k3 - c.kappa3_f) / k.se3;
    const bool ok = std::abs(z1) < 4.0 && std::abs(z2) < 4.0 && std::abs(z3) < 4.0;
    pass = pass && ok;
    mc.push_back({{"m", dims.m},       {"n", dims.n},     {"k1", k.k1},   {"se1", k.se1}, {"kappa1", c.kappa1_f},
                  {"k2", k.k2},        {"se2", k.se2},    {"kappa2", c.kappa2_f},
                  {"k3", k.k3},        {"se3", k.se3},    {"kappa3", c.kappa3_f},
                  {"z", {z1, z2, z3}}, {"pass", ok}});
    out << "(" << dims.m << "," << dims.n << "): k3 = " << format_double(k.k3) << " +/- " << format_double(k.se3)
        << ", kappa3 = " << format_double(c.kappa3_f) << "\n";
  }
  json j{{"target", "figures"}, {"fig", 2},         {"samples", samples}, {"seed", seed},
         {"formula_table", table}, {"monte_carlo", mc}, {"all_pass", pass}};
  return finish_report(j, report_path(a.report, "verify_figure2.json"), pass, argv, {}, {seed}, out);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact cumulants of the Bures-Hall entanglement entropy, with oracles and samplers"};
  app.name("bures");
  app.require_subcommand(1);
  app.set_version_flag("--version", version_tag());

  CumulantsArgs ca;
  auto* cum = app.add_subcommand("cumulants", "Print kappa1..kappa3 and the skewness");
  cum->add_option("--m", ca.m, "Smaller subsystem dimension")->required();
  cum->add_option("--n", ca.n, "Larger subsystem dimension")->required();
  cum->add_flag("--exact", ca.exact, "Print exact polynomials in g, l2, z2, z3");
  cum->add_option("--format", ca.format, "Output format")->capture_default_str()->check(CLI::IsMember({"text", "json"}));

  SimulateArgs sa;
  std::uint64_t sim_seed = 0;
  std::size_t thinning = 0, burn_in = 0;
  auto* sim = app.add_subcommand("simulate", "Sample spectra, write CSV + manifest, print k-statistics");
  sim->add_option("--m", sa.m, "Smaller subsystem dimension")->required();
  sim->add_option("--n", sa.n, "Larger subsystem dimension")->required();
  sim->add_option("--samples", sa.samples, "Retained samples")->capture_default_str();
  auto* sim_seed_opt = sim->add_option("--seed", sim_seed, "64-bit seed (generated and recorded when absent)");
  sim->add_option("--backend", sa.backend, "Sampler (matrix requires n = m)")->capture_default_str()->check(CLI::IsMember({"mcmc", "matrix"}));
  sim->add_option("--out", sa.out_path, "CSV path (default: $BURES_OUT_DIR or cwd)");
  sim->add_option("--chains", sa.chains, "Independent MCMC chains")->capture_default_str()->check(CLI::PositiveNumber);
  auto* thin_opt = sim->add_option("--thinning", thinning, "MCMC steps between retained samples (default 10 m^2)")->check(CLI::PositiveNumber);
  auto* burn_opt = sim->add_option("--burn-in", burn_in, "MCMC burn-in steps (default 5000 + 1000 m^2)");

  auto* ver = app.add_subcommand("verify", "Run a verification suite and write a JSON report");
  ver->require_subcommand(1);
  VerifyIdentitiesArgs via;
  auto* vid = ver->add_subcommand("identities", "Exact identity, anomaly and re-summation checks");
  vid->add_option("--max-m", via.max_m, "Largest m on the identity grid")->capture_default_str();
  vid->add_option("--threads", via.threads, "Worker threads (0 = all cores)");
  vid->add_option("--report", via.report, "Report path");
  std::string oracle_report;
  auto* vor = ver->add_subcommand("oracles", "Quadrature oracles against the closed forms");
  vor->add_option("--report", oracle_report, "Report path");
  VerifyFiguresArgs vfa;
  std::uint64_t fig_seed = 0;
  auto* vfi = ver->add_subcommand("figures", "Monte Carlo reproduction of the density and kappa3 figures");
  vfi->add_option("--fig", vfa.fig, "Figure to reproduce")->capture_default_str()->check(CLI::IsMember({1, 2}));
  vfi->add_option("--samples", vfa.samples, "Samples per ensemble (default 200000 for fig 1, 100000 for fig 2)");
  auto* fig_seed_opt = vfi->add_option("--seed", fig_seed, "64-bit seed (generated and recorded when absent)");
  vfi->add_option("--report", vfa.report, "Report path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  const std::vector<std::string> args(argv, argv + argc);
  try {
    if (*cum) return cmd_cumulants(ca, out);
    if (*sim) {
      if (*sim_seed_opt) sa.seed = sim_seed;
      if (*thin_opt) sa.thinning = thinning;
      if (*burn_opt) sa.burn_in = burn_in;
      return cmd_simulate(sa, args, out);
    }
    if (*vid) return cmd_verify_identities(via, args, out);
    if (*vor) return cmd_verify_oracles(oracle_report, args, out);
    if (*vfi) {
      if (*fig_seed_opt) vfa.seed = fig_seed;
      return cmd_verify_figures(vfa, args, out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kVerificationFailure;
  }
  return kUsageError;
}

}  // namespace bures::cli
