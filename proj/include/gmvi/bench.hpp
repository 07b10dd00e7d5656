#pragma once

// Benchmark harness: parameter tuning over the (gamma0, lambda) grid, suite
// execution on a worker pool, and CSV / Markdown reports.

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <future>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "gmvi/geometry.hpp"
#include "gmvi/problems.hpp"
#include "gmvi/solvers.hpp"

namespace gmvi::bench {

// ---------------------------------------------------------------------------
// Instance descriptors

/// Enough information to build an instance: family, size, seed, and the
/// Watson index for WAT.
struct InstanceSpec {
  Family family = Family::KS;
  Index n = 4;
  std::optional<std::uint64_t> seed;
  int index = 0;

  std::string key() const {
    std::ostringstream os;
    os << to_string(family) << '/' << n << '/' << (seed ? std::to_string(*seed) : "-") << '/'
       << index;
    return os.str();
  }
  friend bool operator==(const InstanceSpec&, const InstanceSpec&) = default;
};

inline ProblemInstance make_instance(const InstanceSpec& s) {
  switch (s.family) {
    case Family::KS: return make_kojima_shindo();
    case Family::WAT: return make_watson(s.index);
    case Family::SUN: return make_sun(s.n);
    case Family::MHPH:
      require(s.seed.has_value(), "MHPH instances need a seed");
      return make_mhph(s.n, *s.seed);
    case Family::RG:
      require(s.seed.has_value(), "RG instances need a seed");
      return make_rg(s.n, *s.seed);
    case Family::Custom: break;
  }
  throw InvalidArgument("make_instance: custom instances have no generator");
}

/// "KS", "WAT3", "SUN", "MHPH", "RG" (case-insensitive) plus n/seed.
inline InstanceSpec parse_instance_spec(std::string_view name, std::optional<Index> n,
                                        std::optional<std::uint64_t> seed) {
  std::string upper(name);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  InstanceSpec s;
  if (upper.rfind("WAT", 0) == 0) {
    s.family = Family::WAT;
    s.n = 10;
    require(upper.size() > 3, "WAT instance needs an index, e.g. WAT3 (or --n as the index)");
    s.index = std::stoi(upper.substr(3));
    require(s.index >= 1 && s.index <= 10, "WAT index must be in 1..10");
    return s;
  }
  s.family = parse_family(upper);
  switch (s.family) {
    case Family::KS:
      s.n = 4;
      break;
    case Family::SUN:
      require(n.has_value(), "SUN instances need n");
      s.n = *n;
      break;
    case Family::MHPH:
    case Family::RG:
      require(n.has_value() && seed.has_value(), std::string(to_string(s.family)) +
                                                      " instances need n and seed");
      s.n = *n;
      s.seed = seed;
      break;
    default:
      throw InvalidArgument("unsupported instance '" + std::string(name) + "'");
  }
  return s;
}

// ---------------------------------------------------------------------------
// Tuned parameters reported with the published tables

struct LsParams {
  double gamma0 = 0.2;
  double lambda = 0.4;
  friend bool operator==(const LsParams&, const LsParams&) = default;
};

/// Per-family, per-geometry (gamma0, lambda) used for the published runs.
inline std::optional<LsParams> paper_tuned_parameters(Family f, GeometryKind g) {
  using G = GeometryKind;
  switch (f) {
    case Family::KS:
      return g == G::Entropy ? LsParams{0.8, 0.2} : LsParams{0.2, 0.4};
    case Family::WAT:
      return g == G::Entropy ? LsParams{0.8, 0.8} : LsParams{0.2, 0.8};
    case Family::SUN:
      if (g == G::Euclidean) return LsParams{0.4, 0.4};
      return g == G::PNorm ? LsParams{0.2, 0.4} : LsParams{0.8, 0.8};
    case Family::MHPH:
      if (g == G::Euclidean) return LsParams{0.2, 0.4};
      return g == G::PNorm ? LsParams{0.2, 0.2} : LsParams{0.8, 0.2};
    case Family::RG:
      if (g == G::Euclidean) return LsParams{0.8, 0.2};
      return g == G::PNorm ? LsParams{0.2, 0.4} : LsParams{0.2, 0.2};
    case Family::Custom: break;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Worker pool

/// GMVI_THREADS if set and positive, otherwise the hardware concurrency.
inline unsigned worker_count(std::size_t jobs) {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("GMVI_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) n = static_cast<unsigned>(v);
  }
  return static_cast<unsigned>(std::max<std::size_t>(1, std::min<std::size_t>(n, jobs)));
}

/// Runs job(i) for i in [0, count) on a pool; results land at index i.
template <class Result, class Job>
std::vector<Result> parallel_map(std::size_t count, Job job) {
  std::vector<Result> out(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) out[i] = job(i);
  };
  const unsigned threads = worker_count(count);
  if (threads <= 1) {
    worker();
    return out;
  }
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return out;
}

/// Builds each distinct instance once and drops it after its last user.
class InstanceCache {
 public:
  explicit InstanceCache(const std::vector<InstanceSpec>& uses) {
    for (const auto& s : uses) ++entries_[s.key()].remaining;
  }

  std::shared_ptr<const ProblemInstance> acquire(const InstanceSpec& s) {
    std::shared_future<std::shared_ptr<const ProblemInstance>> fut;
    std::promise<std::shared_ptr<const ProblemInstance>> promise;
    bool builder = false;
    {
      std::lock_guard lock(mutex_);
      Entry& e = entries_[s.key()];
      if (!e.future.valid()) {
        e.future = promise.get_future().share();
        builder = true;
      }
      fut = e.future;
    }
    if (builder) {
      try {
        promise.set_value(std::make_shared<const ProblemInstance>(make_instance(s)));
      } catch (...) {
        promise.set_exception(std::current_exception());
      }
    }
    return fut.get();
  }

  void release(const InstanceSpec& s) {
    std::lock_guard lock(mutex_);
    auto it = entries_.find(s.key());
    if (it != entries_.end() && --it->second.remaining <= 0) entries_.erase(it);
  }

 private:
  struct Entry {
    std::shared_future<std::shared_ptr<const ProblemInstance>> future;
    int remaining = 0;
  };
  std::mutex mutex_;
  std::map<std::string, Entry> entries_;
};

// ---------------------------------------------------------------------------
// Suite cells and rows

enum class Algorithm { Neg, NegLS };

inline std::string_view to_string(Algorithm a) { return a == Algorithm::Neg ? "neg" : "negls"; }

inline Algorithm parse_algorithm(std::string_view s) {
  if (s == "neg") return Algorithm::Neg;
  if (s == "negls") return Algorithm::NegLS;
  throw InvalidArgument("unknown algorithm '" + std::string(s) + "' (expected neg|negls)");
}

struct BenchCell {
  InstanceSpec instance;
  GeometryKind geometry = GeometryKind::Euclidean;
  Algorithm algorithm = Algorithm::NegLS;
  std::optional<double> gamma0;
  std::optional<double> lambda;
  std::optional<double> L;
  double nu = 1.0;
  std::optional<std::int64_t> horizon;
  double tol = 1e-3;
  std::int64_t max_prox = 100000;
};

struct BenchRow {
  std::string instance;
  Index n = 0;
  std::optional<std::uint64_t> seed;
  std::string algorithm;
  std::string geometry;
  std::optional<double> gamma0;
  std::optional<double> lambda;
  std::int64_t k = 0;
  std::int64_t np = 0;
  double wall_seconds = 0.0;
  double final_gap = 0.0;
  std::string status;
  friend bool operator==(const BenchRow&, const BenchRow&) = default;
};

struct BenchRecord {
  BenchRow row;
  RunResult result;
};

/// Solver configuration for one cell; negls without explicit parameters
/// falls back to the published per-family values.
inline SolverConfig make_solver_config(const BenchCell& cell, const ProblemInstance& inst,
                                       const Geometry& g) {
  SolverConfig cfg;
  cfg.gap_tol = cell.tol;
  cfg.max_prox_calls = cell.max_prox;
  cfg.keep_trace = false;
  if (cell.algorithm == Algorithm::Neg) {
    NegFixed algo;
    algo.L = cell.L ? *cell.L : lipschitz_constant(inst, g.norms());
    algo.nu = cell.nu;
    algo.horizon_k = cell.horizon;
    cfg.algorithm = algo;
  } else {
    const auto fallback = paper_tuned_parameters(inst.family, g.kind());
    require(cell.gamma0.has_value() || fallback.has_value(),
            "negls cell for " + inst.name + " needs gamma0/lambda");
    cfg.algorithm = NegLS{cell.gamma0.value_or(fallback ? fallback->gamma0 : 0.0),
                          cell.lambda.value_or(fallback ? fallback->lambda : 0.0)};
  }
  return cfg;
}

inline BenchRecord run_cell(const BenchCell& cell, const ProblemInstance& inst) {
  const Geometry g = Geometry::make(cell.geometry, inst.n);
  BenchRecord rec;
  rec.row.instance = inst.name;
  rec.row.n = inst.n;
  rec.row.seed = inst.seed;
  rec.row.algorithm = std::string(to_string(cell.algorithm));
  rec.row.geometry = std::string(g.name());
  try {
    const SolverConfig cfg = make_solver_config(cell, inst, g);
    if (const auto* ls = std::get_if<NegLS>(&cfg.algorithm)) {
      rec.row.gamma0 = ls->gamma0;
      rec.row.lambda = ls->lambda;
    }
    rec.result = solve(g, inst, cfg);
  } catch (const Error& e) {
    rec.result.status = RunStatus::InternalError;
    rec.result.message = e.what();
  }
  rec.row.k = rec.result.k;
  rec.row.np = rec.result.np;
  rec.row.wall_seconds = rec.result.wall_seconds;
  rec.row.final_gap = rec.result.final_gap;
  rec.row.status = std::string(to_string(rec.result.status));
  return rec;
}

/// Runs every cell (in parallel when GMVI_THREADS allows); rows keep input
/// order. Divergence is a row status, never an exception.
inline std::vector<BenchRecord> run_bench_detailed(const std::vector<BenchCell>& suite) {
  std::vector<InstanceSpec> uses;
  for (const auto& c : suite) uses.push_back(c.instance);
  InstanceCache cache(uses);
  return parallel_map<BenchRecord>(suite.size(), [&](std::size_t i) {
    BenchRecord rec;
    try {
      auto inst = cache.acquire(suite[i].instance);
      rec = run_cell(suite[i], *inst);
    } catch (const Error& e) {
      rec.row.instance = std::string(to_string(suite[i].instance.family));
      rec.row.n = suite[i].instance.n;
      rec.row.seed = suite[i].instance.seed;
      rec.row.algorithm = std::string(to_string(suite[i].algorithm));
      rec.row.geometry = std::string(to_string(suite[i].geometry));
      rec.row.status = std::string(to_string(RunStatus::InternalError));
      rec.result.message = e.what();
    }
    cache.release(suite[i].instance);
    return rec;
  });
}

inline std::vector<BenchRow> run_bench(const std::vector<BenchCell>& suite) {
  std::vector<BenchRow> rows;
  for (auto& rec : run_bench_detailed(suite)) rows.push_back(std::move(rec.row));
  return rows;
}

// ---------------------------------------------------------------------------
// Tuning

struct TuningGrid {
  std::vector<double> values{0.2, 0.4, 0.8};
  double coarse_tol = 1e-1;
  std::int64_t max_prox_calls = 100000;
  std::vector<InstanceSpec> representatives;
};

struct TuningRow {
  LsParams params;
  std::vector<std::optional<std::int64_t>> np;  ///< nullopt: did not converge
  std::optional<std::int64_t> total;            ///< nullopt if any representative failed
};

struct TuningReport {
  std::vector<TuningRow> rows;
  std::optional<LsParams> winner;
  bool all_diverged() const { return !winner.has_value(); }
};

/// Default representative sets per family (smaller instances of the family).
inline std::vector<InstanceSpec> default_representatives(Family f) {
  switch (f) {
    case Family::KS: return {InstanceSpec{Family::KS, 4, std::nullopt, 0}};
    case Family::WAT:
      return {InstanceSpec{Family::WAT, 10, std::nullopt, 1},
              InstanceSpec{Family::WAT, 10, std::nullopt, 2},
              InstanceSpec{Family::WAT, 10, std::nullopt, 4}};
    case Family::SUN:
      return {InstanceSpec{Family::SUN, 1000, std::nullopt, 0},
              InstanceSpec{Family::SUN, 2000, std::nullopt, 0}};
    case Family::MHPH:
      return {InstanceSpec{Family::MHPH, 500, 101, 0}, InstanceSpec{Family::MHPH, 1000, 102, 0}};
    case Family::RG:
      return {InstanceSpec{Family::RG, 500, 201, 0}, InstanceSpec{Family::RG, 1000, 202, 0}};
    case Family::Custom: break;
  }
  throw InvalidArgument("no default representatives for custom instances");
}

/// Chooses (gamma0, lambda) from values x values minimising total np over the
/// representatives at the coarse tolerance. Pairs that fail on any
/// representative are out; ties go to the smaller gamma0, then smaller lambda.
inline TuningReport tune_instances(const TuningGrid& grid,
                                   const std::vector<std::shared_ptr<const ProblemInstance>>& reps,
                                   GeometryKind geometry) {
  require(!reps.empty(), "tune: representative set is empty");
  require(!grid.values.empty(), "tune: grid is empty");
  std::vector<double> values = grid.values;
  std::sort(values.begin(), values.end());

  std::vector<LsParams> pairs;
  for (double g0 : values)
    for (double lam : values) pairs.push_back({g0, lam});

  const std::size_t jobs = pairs.size() * reps.size();
  auto nps = parallel_map<std::optional<std::int64_t>>(jobs, [&](std::size_t j) {
    const LsParams& prm = pairs[j / reps.size()];
    const ProblemInstance& inst = *reps[j % reps.size()];
    const Geometry g = Geometry::make(geometry, inst.n);
    SolverConfig cfg;
    cfg.algorithm = NegLS{prm.gamma0, prm.lambda};
    cfg.gap_tol = grid.coarse_tol;
    cfg.max_prox_calls = grid.max_prox_calls;
    cfg.keep_trace = false;
    const RunResult r = run_neg_ls(g, inst, cfg);
    return r.status == RunStatus::Converged ? std::optional<std::int64_t>(r.np) : std::nullopt;
  });

  TuningReport report;
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    TuningRow row{pairs[p], {}, std::int64_t{0}};
    for (std::size_t r = 0; r < reps.size(); ++r) {
      const auto& v = nps[p * reps.size() + r];
      row.np.push_back(v);
      if (!v) row.total.reset();
      else if (row.total) *row.total += *v;
    }
    // Pairs are visited in (gamma0, lambda) ascending order, so strict
    // improvement keeps the tie-break.
    if (row.total) {
      const TuningRow* best = nullptr;
      for (const auto& prev : report.rows)
        if (report.winner && prev.params == *report.winner) best = &prev;
      if (!best || *row.total < *best->total) report.winner = row.params;
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

inline TuningReport tune(const TuningGrid& grid, GeometryKind geometry) {
  std::vector<std::shared_ptr<const ProblemInstance>> reps;
  for (const auto& s : grid.representatives)
    reps.push_back(std::make_shared<const ProblemInstance>(make_instance(s)));
  return tune_instances(grid, reps, geometry);
}

// ---------------------------------------------------------------------------
// Reports

inline constexpr std::string_view kCsvHeader =
    "instance,n,seed,algorithm,geometry,gamma0,lambda,k,np,wall_seconds,final_gap,status";

namespace detail {

inline std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

inline void check_field(const std::string& s) {
  if (s.find_first_of(",\n\r\"") != std::string::npos) {
    throw InvalidArgument("CSV field contains a reserved character: '" + s + "'");
  }
}

template <class T>
T parse_number(std::string_view s, const char* what) {
  T v{};
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw InvalidArgument(std::string("CSV: bad ") + what + " '" + std::string(s) + "'");
  }
  return v;
}

inline std::vector<std::string> split(std::string_view line, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(sep, start);
    out.emplace_back(line.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace detail

inline std::string rows_to_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream os;
  os << kCsvHeader << '\n';
  for (const auto& r : rows) {
    detail::check_field(r.instance);
    detail::check_field(r.algorithm);
    detail::check_field(r.geometry);
    detail::check_field(r.status);
    os << r.instance << ',' << r.n << ',' << (r.seed ? std::to_string(*r.seed) : "") << ','
       << r.algorithm << ',' << r.geometry << ','
       << (r.gamma0 ? detail::format_double(*r.gamma0) : "") << ','
       << (r.lambda ? detail::format_double(*r.lambda) : "") << ',' << r.k << ',' << r.np << ','
       << detail::format_double(r.wall_seconds) << ',' << detail::format_double(r.final_gap)
       << ',' << r.status << '\n';
  }
  return os.str();
}

inline std::vector<BenchRow> parse_csv(std::string_view text) {
  std::vector<BenchRow> rows;
  std::istringstream is{std::string(text)};
  std::string line;
  require(static_cast<bool>(std::getline(is, line)) && line == kCsvHeader,
          "CSV: missing or unexpected header");
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto f = detail::split(line, ',');
    require(f.size() == 12, "CSV: expected 12 fields, got " + std::to_string(f.size()));
    BenchRow r;
    r.instance = f[0];
    r.n = detail::parse_number<Index>(f[1], "n");
    if (!f[2].empty()) r.seed = detail::parse_number<std::uint64_t>(f[2], "seed");
    r.algorithm = f[3];
    r.geometry = f[4];
    if (!f[5].empty()) r.gamma0 = detail::parse_number<double>(f[5], "gamma0");
    if (!f[6].empty()) r.lambda = detail::parse_number<double>(f[6], "lambda");
    r.k = detail::parse_number<std::int64_t>(f[7], "k");
    r.np = detail::parse_number<std::int64_t>(f[8], "np");
    r.wall_seconds = detail::parse_number<double>(f[9], "wall_seconds");
    r.final_gap = detail::parse_number<double>(f[10], "final_gap");
    r.status = f[11];
    rows.push_back(std::move(r));
  }
  return rows;
}

/// One row group per (instance, n, seed, algorithm), one column group
/// (k | np | CPU time) per geometry; cells that did not converge show "-".
inline std::string rows_to_markdown(const std::vector<BenchRow>& rows) {
  std::vector<std::string> geometries;
  std::vector<std::string> groups;
  std::map<std::string, std::map<std::string, const BenchRow*>> table;
  for (const auto& r : rows) {
    if (std::find(geometries.begin(), geometries.end(), r.geometry) == geometries.end())
      geometries.push_back(r.geometry);
    std::string key = r.instance + " | " + std::to_string(r.n) + " | " +
                      (r.seed ? std::to_string(*r.seed) : "") + " | " + r.algorithm;
    if (!table.count(key)) groups.push_back(key);
    table[key][r.geometry] = &r;
  }
  std::ostringstream os;
  os << "| INST | n | seed | algorithm |";
  for (const auto& g : geometries) os << ' ' << g << " k | " << g << " np | " << g << " CPU time |";
  os << "\n|---|---|---|---|";
  for (std::size_t i = 0; i < geometries.size(); ++i) os << "---|---|---|";
  os << '\n';
  char buf[32];
  for (const auto& key : groups) {
    os << "| " << key << " |";
    for (const auto& g : geometries) {
      auto it = table[key].find(g);
      if (it == table[key].end()) {
        os << "  |  |  |";
      } else if (it->second->status != "Converged") {
        os << " - | - | - |";
      } else {
        std::snprintf(buf, sizeof buf, "%.4f", it->second->wall_seconds);
        os << ' ' << it->second->k << " | " << it->second->np << " | " << buf << " |";
      }
    }
    os << '\n';
  }
  return os.str();
}

enum class ReportFormat { CSV, Markdown };

inline void write_report(const std::vector<BenchRow>& rows, ReportFormat format,
                         const std::string& path) {
  require(!rows.empty(), "write_report: no rows");
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("write_report: cannot open '" + path + "' for writing");
  out << (format == ReportFormat::CSV ? rows_to_csv(rows) : rows_to_markdown(rows));
  out.flush();
  if (!out) throw Error("write_report: failed writing '" + path + "'");
}

inline std::vector<BenchRow> read_csv_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("read_csv_file: cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_csv(ss.str());
}

// ---------------------------------------------------------------------------
// Suite files
//
// Flat key=value text. Each non-blank line holds whitespace-separated
// key=value tokens; '#' starts a comment. A line with an `instance` key is a
// cell; any other line updates the defaults used by the cells below it.
// Keys: instance, n, seed, geometry, algo, gamma0, lambda, L, nu, horizon,
// tol, max_prox.

inline std::vector<BenchCell> parse_suite(std::string_view text) {
  std::map<std::string, std::string> defaults{{"geometry", "euclidean"},
                                              {"algo", "negls"},
                                              {"tol", "1e-3"},
                                              {"max_prox", "100000"},
                                              {"nu", "1"}};
  std::vector<BenchCell> cells;
  std::istringstream is{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::map<std::string, std::string> kv;
    for (std::string tok; tokens >> tok;) {
      const auto eq = tok.find('=');
      require(eq != std::string::npos && eq > 0,
              "suite line " + std::to_string(lineno) + ": expected key=value, got '" + tok + "'");
      kv[tok.substr(0, eq)] = tok.substr(eq + 1);
    }
    if (kv.empty()) continue;
    if (!kv.count("instance")) {
      for (auto& [k, v] : kv) defaults[k] = v;
      continue;
    }
    std::map<std::string, std::string> all = defaults;
    for (auto& [k, v] : kv) all[k] = v;
    static const std::vector<std::string> known{"instance", "n", "seed", "geometry", "algo",
                                                "gamma0", "lambda", "L", "nu", "horizon",
                                                "tol", "max_prox"};
    for (const auto& [k, v] : all) {
      require(std::find(known.begin(), known.end(), k) != known.end(),
              "suite line " + std::to_string(lineno) + ": unknown key '" + k + "'");
    }
    auto get = [&](const char* k) -> std::optional<std::string> {
      auto it = all.find(k);
      if (it == all.end() || it->second.empty()) return std::nullopt;
      return it->second;
    };
    try {
      BenchCell c;
      std::optional<Index> n;
      std::optional<std::uint64_t> seed;
      if (auto v = get("n")) n = std::stoll(*v);
      if (auto v = get("seed")) seed = std::stoull(*v);
      c.instance = parse_instance_spec(*get("instance"), n, seed);
      c.geometry = parse_geometry_kind(*get("geometry"));
      c.algorithm = parse_algorithm(*get("algo"));
      if (auto v = get("gamma0")) c.gamma0 = std::stod(*v);
      if (auto v = get("lambda")) c.lambda = std::stod(*v);
      if (auto v = get("L")) c.L = std::stod(*v);
      if (auto v = get("nu")) c.nu = std::stod(*v);
      if (auto v = get("horizon")) c.horizon = std::stoll(*v);
      if (auto v = get("tol")) c.tol = std::stod(*v);
      if (auto v = get("max_prox")) c.max_prox = std::stoll(*v);
      cells.push_back(c);
    } catch (const std::logic_error& e) {
      throw InvalidArgument("suite line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return cells;
}

inline std::vector<BenchCell> read_suite_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("read_suite_file: cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_suite(ss.str());
}

}  // namespace gmvi::bench
