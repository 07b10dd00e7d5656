// Command-line front end: solve one instance, tune (gamma0, lambda), or run a suite.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "gmvi/bench.hpp"
#include "gmvi/io.hpp"
#include "gmvi/solvers.hpp"

namespace {

using namespace gmvi;

constexpr int kExitNotConverged = 3;

struct SolveArgs {
  std::string instance;
  std::optional<Index> n;
  std::optional<std::uint64_t> seed;
  std::string geometry = "euclidean";
  std::string algo = "negls";
  std::optional<double> L, gamma0, lambda;
  double nu = 1.0;
  std::optional<std::int64_t> horizon;
  double tol = 1e-3;
  std::int64_t max_prox = 100000;
  std::string trace;
  bool certificate = false;
  bool with_x = false;
};

int run_solve(const SolveArgs& a) {
  // "--instance wat --n 3" is accepted as WAT3
  std::string name = a.instance;
  std::optional<Index> n = a.n;
  if ((name == "wat" || name == "WAT") && n) {
    name += std::to_string(*n);
    n.reset();
  }
  bench::BenchCell cell;
  cell.instance = bench::parse_instance_spec(name, n, a.seed);
  cell.geometry = parse_geometry_kind(a.geometry);
  cell.algorithm = bench::parse_algorithm(a.algo);
  cell.gamma0 = a.gamma0;
  cell.lambda = a.lambda;
  cell.L = a.L;
  cell.nu = a.nu;
  cell.horizon = a.horizon;
  cell.tol = a.tol;
  cell.max_prox = a.max_prox;

  const ProblemInstance inst = bench::make_instance(cell.instance);
  const Geometry g = Geometry::make(cell.geometry, inst.n);
  SolverConfig cfg = bench::make_solver_config(cell, inst, g);
  cfg.keep_trace = !a.trace.empty();
  cfg.compute_certificate = a.certificate;
  const RunResult r = solve(g, inst, cfg);

  if (!a.trace.empty()) {
    std::ofstream out(a.trace);
    if (!out) throw Error("cannot open trace file '" + a.trace + "'");
    write_trace_csv(out, r.trace);
  }
  json j = run_result_to_json(r);
  if (!a.with_x) j.erase("x_final");
  j["instance"] = inst.name;
  j["n"] = inst.n;
  j["geometry"] = std::string(g.name());
  j["algorithm"] = a.algo;
  if (const auto* ls = std::get_if<NegLS>(&cfg.algorithm)) {
    j["gamma0"] = ls->gamma0;
    j["lambda"] = ls->lambda;
  } else {
    j["L"] = std::get<NegFixed>(cfg.algorithm).L;
  }
  std::cout << j.dump(2) << '\n';
  return r.status == RunStatus::Converged ? 0 : kExitNotConverged;
}

struct TuneArgs {
  std::string family;
  std::string algo = "negls";
  std::string geometry = "euclidean";
  std::vector<Index> sizes;
  std::uint64_t seed = 1;
  double tol = 1e-1;
  std::int64_t max_prox = 100000;
};

int run_tune(const TuneArgs& a) {
  if (bench::parse_algorithm(a.algo) != bench::Algorithm::NegLS) {
    throw InvalidArgument("tune: only negls has (gamma0, lambda) to tune");
  }
  const Family family = parse_family(a.family);
  bench::TuningGrid grid;
  grid.coarse_tol = a.tol;
  grid.max_prox_calls = a.max_prox;
  grid.representatives = bench::default_representatives(family);
  if (!a.sizes.empty()) {
    require(family == Family::SUN || family == Family::MHPH || family == Family::RG,
            "tune: --n only applies to SUN, MHPH and RG");
    grid.representatives.clear();
    for (std::size_t i = 0; i < a.sizes.size(); ++i) {
      bench::InstanceSpec s{family, a.sizes[i], std::nullopt, 0};
      if (family != Family::SUN) s.seed = a.seed + i;
      grid.representatives.push_back(s);
    }
  }
  const GeometryKind geometry = parse_geometry_kind(a.geometry);
  const bench::TuningReport rep = bench::tune(grid, geometry);

  std::cout << "representatives:";
  for (const auto& s : grid.representatives) std::cout << ' ' << s.key();
  std::cout << "\ngamma0,lambda";
  for (std::size_t i = 0; i < grid.representatives.size(); ++i) std::cout << ",np" << i + 1;
  std::cout << ",total\n";
  for (const auto& row : rep.rows) {
    std::cout << row.params.gamma0 << ',' << row.params.lambda;
    for (const auto& v : row.np) std::cout << ',' << (v ? std::to_string(*v) : "diverged");
    std::cout << ',' << (row.total ? std::to_string(*row.total) : "-") << '\n';
  }
  if (rep.all_diverged()) {
    std::cout << "AllDiverged\n";
    return kExitNotConverged;
  }
  std::cout << "winner: (" << rep.winner->gamma0 << ", " << rep.winner->lambda << ")\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gmvi: extragradient solvers for variational inequalities on the simplex"};
  app.require_subcommand(1);

  SolveArgs sa;
  auto* solve_cmd = app.add_subcommand("solve", "Solve one instance");
  solve_cmd->add_option("--instance", sa.instance, "KS, WATi, SUN, MHPH or RG")->required();
  solve_cmd->add_option("--n", sa.n, "Dimension (Watson index for --instance wat)");
  solve_cmd->add_option("--seed", sa.seed, "Seed for MHPH and RG");
  solve_cmd->add_option("--geometry", sa.geometry, "euclidean|entropy|pnorm");
  solve_cmd->add_option("--algo", sa.algo, "neg|negls");
  solve_cmd->add_option("--L", sa.L, "Lipschitz/Hoelder constant for neg (estimated if absent)");
  solve_cmd->add_option("--nu", sa.nu, "Hoelder exponent for neg");
  solve_cmd->add_option("--horizon", sa.horizon, "Iteration horizon (needed when nu < 1)");
  solve_cmd->add_option("--gamma0", sa.gamma0, "Initial line-search stepsize");
  solve_cmd->add_option("--lambda", sa.lambda, "Line-search contraction factor");
  solve_cmd->add_option("--tol", sa.tol, "Gap tolerance");
  solve_cmd->add_option("--max-prox", sa.max_prox, "Prox-call budget");
  solve_cmd->add_option("--trace", sa.trace, "Write the per-iteration trace CSV here");
  solve_cmd->add_flag("--certificate", sa.certificate, "Attach a strong-solution certificate");
  solve_cmd->add_flag("--print-x", sa.with_x, "Include the final iterate in the output");

  TuneArgs ta;
  auto* tune_cmd = app.add_subcommand("tune", "Pick (gamma0, lambda) on representative instances");
  tune_cmd->add_option("--family", ta.family, "KS, WAT, SUN, MHPH or RG")->required();
  tune_cmd->add_option("--algo", ta.algo, "negls");
  tune_cmd->add_option("--geometry", ta.geometry, "euclidean|entropy|pnorm");
  tune_cmd->add_option("--n", ta.sizes, "Representative sizes (overrides the defaults)");
  tune_cmd->add_option("--seed", ta.seed, "First seed for random representatives");
  tune_cmd->add_option("--tol", ta.tol, "Coarse gap tolerance");
  tune_cmd->add_option("--max-prox", ta.max_prox, "Prox-call budget per run");

  std::string suite, out, markdown;
  auto* bench_cmd = app.add_subcommand("bench", "Run a suite file and write a report");
  bench_cmd->add_option("--suite", suite, "Suite config (key=value lines)")->required();
  bench_cmd->add_option("--out", out, "CSV report path")->required();
  bench_cmd->add_option("--markdown", markdown, "Also write a Markdown table here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve_cmd) return run_solve(sa);
    if (*tune_cmd) return run_tune(ta);
    if (*bench_cmd) {
      const auto cells = bench::read_suite_file(suite);
      require(!cells.empty(), "suite '" + suite + "' has no cells");
      const auto rows = bench::run_bench(cells);
      bench::write_report(rows, bench::ReportFormat::CSV, out);
      if (!markdown.empty()) bench::write_report(rows, bench::ReportFormat::Markdown, markdown);
      for (const auto& r : rows) {
        std::printf("%-6s n=%-5lld %-5s %-9s k=%-6lld np=%-7lld %8.3fs %s\n", r.instance.c_str(),
                    static_cast<long long>(r.n), r.algorithm.c_str(), r.geometry.c_str(),
                    static_cast<long long>(r.k), static_cast<long long>(r.np), r.wall_seconds,
                    r.status.c_str());
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "gmvi: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
