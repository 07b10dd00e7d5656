#pragma once

// Non-Euclidean extragradient (N-EG) with fixed Lipschitz/Hoelder stepsizes
// and the backtracking variant N-EG-LS. Both report the number of
// iterations k and the number of prox_map calls np.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "gmvi/diagnostics.hpp"
#include "gmvi/geometry.hpp"
#include "gmvi/problems.hpp"

namespace gmvi {

/// Fixed stepsize. nu < 1 selects the Hoelder stepsize, which depends on the
/// iteration horizon fixed in advance.
struct NegFixed {
  double L = 1.0;
  double nu = 1.0;
  std::optional<std::int64_t> horizon_k;
};

/// Backtracking over gamma0, gamma0 lambda, gamma0 lambda^2, ...
struct NegLS {
  double gamma0 = 0.2;
  double lambda = 0.4;
};

enum class GapPoint { AtXk, AtYk };

struct IterationView;

struct SolverConfig {
  std::variant<NegFixed, NegLS> algorithm = NegLS{};
  double gap_tol = 1e-3;
  std::int64_t max_prox_calls = 100000;
  std::optional<Point> x1;  ///< defaults to the simplex center
  GapPoint gap_eval_point = GapPoint::AtXk;
  bool keep_trace = true;
  bool compute_certificate = false;
  /// N-EG-LS treats |R_gamma0(x)| <= residual_zero_tol (1 + |F(x)|_*) as zero.
  double residual_zero_tol = 1e-14;
  /// Called once per completed iteration; used by tests and trace streaming.
  std::function<void(const IterationView&)> observer;
};

struct IterationRecord {
  std::int64_t k = 0;
  double gamma = 0.0;
  int ls_trials = 1;
  double gap = 0.0;
  double residual_norm = 0.0;  ///< |R_gamma(x_k)|, at gamma0 for N-EG-LS
  std::int64_t np_so_far = 0;
};

struct IterationView {
  const IterationRecord& record;
  const Point& x_k;
  const Point& y_k;
  const Point& x_next;
};

enum class RunStatus { Converged, ProxBudgetExceeded, HorizonReached, InternalError };

inline std::string_view to_string(RunStatus s) {
  switch (s) {
    case RunStatus::Converged: return "Converged";
    case RunStatus::ProxBudgetExceeded: return "ProxBudgetExceeded";
    case RunStatus::HorizonReached: return "HorizonReached";
    case RunStatus::InternalError: return "InternalError";
  }
  return "?";
}

struct RunResult {
  RunStatus status = RunStatus::InternalError;
  std::string message;
  Point x_final = Point::uniform(1);
  std::int64_t k = 0;
  std::int64_t np = 0;
  double wall_seconds = 0.0;
  double final_gap = 0.0;
  std::vector<IterationRecord> trace;
  std::optional<Certificate> best_certificate;
};

// ---------------------------------------------------------------------------
// Stepsizes

/// gamma = alpha / (sqrt(2) L).
inline double stepsize_lipschitz(double alpha, double L) {
  require(alpha > 0.0 && L > 0.0, "stepsize_lipschitz: alpha and L must be positive");
  return alpha / (std::sqrt(2.0) * L);
}

/// gamma = alpha^{(1+nu)/2} / (L (2 nu)^{nu/2}) * (1/k)^{(1-nu)/2}, constant
/// over the k iterations.
inline double stepsize_holder(double alpha, double L, double nu, std::int64_t k) {
  require(alpha > 0.0 && L > 0.0, "stepsize_holder: alpha and L must be positive");
  require(nu > 0.0 && nu <= 1.0, "stepsize_holder: nu must be in (0, 1]");
  require(k >= 1, "stepsize_holder: horizon must be positive");
  const double head = std::pow(alpha, (1.0 + nu) / 2.0) / (std::pow(2.0 * nu, nu / 2.0) * L);
  return head * std::pow(1.0 / static_cast<double>(k), (1.0 - nu) / 2.0);
}

// ---------------------------------------------------------------------------
// Single steps

struct NegStep {
  Point y;
  Point x_next;
};

/// y = P_x(gamma F(x)), x_next = P_x(gamma F(y)); two prox calls, both anchored at x.
inline NegStep neg_iteration(const Geometry& g, const ProblemInstance& inst, const Point& x,
                             double gamma) {
  require(gamma > 0.0, "neg_iteration: gamma must be positive");
  Point y = prox_map(g, x, gamma * eval_operator(inst, x));
  Point x_next = prox_map(g, x, gamma * eval_operator(inst, y));
  return NegStep{std::move(y), std::move(x_next)};
}

inline constexpr int kMaxLineSearchTrials = 60;

struct LineSearchResult {
  enum class Outcome { Accepted, ResidualVanished, TrialCapExceeded };
  Outcome outcome = Outcome::Accepted;
  double gamma = 0.0;
  Point y = Point::uniform(1);
  Vector Fy;
  int trials = 0;              ///< prox calls spent, including the gamma0 one
  double residual_norm = 0.0;  ///< |R_gamma0(x)|
};

/// The gamma0 evaluation doubles as the residual test; a residual below
/// zero_tol (1 + |F(x)|_*) counts as zero.
inline LineSearchResult line_search(const Geometry& g, const ProblemInstance& inst,
                                    const Point& x, const Vector& Fx, double gamma0,
                                    double lambda, double zero_tol = 1e-14) {
  require(gamma0 > 0.0 && gamma0 < 1.0, "line_search: gamma0 must be in (0,1)");
  require(lambda > 0.0 && lambda < 1.0, "line_search: lambda must be in (0,1)");
  LineSearchResult res;
  double gamma = gamma0;
  for (int trial = 1; trial <= kMaxLineSearchTrials; ++trial) {
    Point y = prox_map(g, x, gamma * Fx);
    res.trials = trial;
    if (trial == 1) {
      res.residual_norm = g.primal_norm(x.coords() - y.coords()) / gamma0;
      if (res.residual_norm <= zero_tol * (1.0 + g.dual_norm(Fx))) {
        res.outcome = LineSearchResult::Outcome::ResidualVanished;
        res.gamma = gamma;
        res.Fy = Fx;
        res.y = std::move(y);
        return res;
      }
    }
    Vector Fy = eval_operator(inst, y);
    const double lhs = std::pow(g.dual_norm(Fx - Fy), 2);
    const double rhs = g.alpha() * bregman(g, x, y) / (gamma * gamma);
    if (lhs <= rhs) {
      res.outcome = LineSearchResult::Outcome::Accepted;
      res.gamma = gamma;
      res.y = std::move(y);
      res.Fy = std::move(Fy);
      return res;
    }
    gamma *= lambda;
  }
  res.outcome = LineSearchResult::Outcome::TrialCapExceeded;
  res.gamma = gamma;
  return res;
}

inline LineSearchResult line_search(const Geometry& g, const ProblemInstance& inst,
                                    const Point& x, double gamma0, double lambda) {
  return line_search(g, inst, x, eval_operator(inst, x), gamma0, lambda);
}

// ---------------------------------------------------------------------------
// Drivers

namespace detail {

inline void check_problem(const Geometry& g, const ProblemInstance& inst,
                          const SolverConfig& cfg) {
  require(g.n() == inst.n, "solver: geometry dimension " + std::to_string(g.n()) +
                               " does not match instance dimension " + std::to_string(inst.n));
  require(cfg.gap_tol > 0.0, "solver: gap_tol must be positive");
  require(cfg.max_prox_calls > 0, "solver: max_prox_calls must be positive");
  require(cfg.residual_zero_tol >= 0.0, "solver: residual_zero_tol must be nonnegative");
  if (cfg.x1) require(cfg.x1->size() == inst.n, "solver: x1 has the wrong dimension");
}

class RunTracker {
 public:
  RunTracker(const Geometry& g, const ProblemInstance& inst, const SolverConfig& cfg)
      : g_(g), inst_(inst), cfg_(cfg), start_(std::chrono::steady_clock::now()) {}

  void record(RunResult& out, const IterationRecord& rec, const Point& x_k, const Point& y_k,
              const Point& x_next) {
    if (cfg_.keep_trace) out.trace.push_back(rec);
    if (cfg_.observer) cfg_.observer(IterationView{rec, x_k, y_k, x_next});
    if (!best_ || rec.residual_norm < best_residual_) {
      best_residual_ = rec.residual_norm;
      best_.emplace(x_k);
      best_gamma_ = rec.gamma;
    }
  }

  void finish(RunResult& out) {
    out.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    // Post-run reporting only; these prox calls are not part of np.
    if (cfg_.compute_certificate && best_) {
      out.best_certificate = make_certificate(g_, inst_, *best_, best_gamma_);
    }
  }

 private:
  const Geometry& g_;
  const ProblemInstance& inst_;
  const SolverConfig& cfg_;
  std::chrono::steady_clock::time_point start_;
  std::optional<Point> best_;
  double best_residual_ = 0.0;
  double best_gamma_ = 0.0;
};

}  // namespace detail

/// N-EG with a constant stepsize: alpha/(sqrt 2 L) when nu = 1, the Hoelder
/// stepsize otherwise (which also stops after horizon_k iterations).
/// Exactly two prox calls per iteration; the residual |R_gamma(x_k)| is
/// (x_k - y_k)/gamma and costs nothing extra.
inline RunResult run_neg_fixed(const Geometry& g, const ProblemInstance& inst,
                               const SolverConfig& cfg) {
  detail::check_problem(g, inst, cfg);
  const auto* algo = std::get_if<NegFixed>(&cfg.algorithm);
  require(algo != nullptr, "run_neg_fixed: configuration is not NegFixed");
  require(algo->L > 0.0, "run_neg_fixed: L must be positive");
  require(algo->nu > 0.0 && algo->nu <= 1.0, "run_neg_fixed: nu must be in (0,1]");
  require(algo->nu == 1.0 || algo->horizon_k.has_value(),
          "run_neg_fixed: Hoelder stepsize (nu < 1) requires horizon_k");
  const double gamma = algo->nu == 1.0
                           ? stepsize_lipschitz(g.alpha(), algo->L)
                           : stepsize_holder(g.alpha(), algo->L, algo->nu, *algo->horizon_k);

  RunResult out;
  detail::RunTracker tracker(g, inst, cfg);
  Point x = cfg.x1.value_or(Point::uniform(inst.n));
  Vector Fx = eval_operator(inst, x);
  out.status = RunStatus::ProxBudgetExceeded;
  try {
    while (out.np < cfg.max_prox_calls) {
      Point y = prox_map(g, x, gamma * Fx);
      const Vector Fy = eval_operator(inst, y);
      Point x_next = prox_map(g, x, gamma * Fy);
      out.np += 2;
      ++out.k;
      Vector F_next = eval_operator(inst, x_next);

      IterationRecord rec;
      rec.k = out.k;
      rec.gamma = gamma;
      rec.ls_trials = 1;
      rec.residual_norm = g.primal_norm(x.coords() - y.coords()) / gamma;
      rec.np_so_far = out.np;
      const bool at_y = cfg.gap_eval_point == GapPoint::AtYk;
      rec.gap = at_y ? gap_from_value(Fy, y) : gap_from_value(F_next, x_next);
      tracker.record(out, rec, x, y, x_next);

      out.final_gap = rec.gap;
      if (rec.gap <= cfg.gap_tol) {
        out.status = RunStatus::Converged;
        x = at_y ? std::move(y) : std::move(x_next);
        break;
      }
      x = std::move(x_next);
      Fx = std::move(F_next);
      if (algo->horizon_k && out.k >= *algo->horizon_k) {
        out.status = RunStatus::HorizonReached;
        break;
      }
    }
  } catch (const NumericalError& e) {
    out.status = RunStatus::InternalError;
    out.message = e.what();
  }
  out.x_final = std::move(x);
  if (out.k == 0) out.final_gap = gap(inst, out.x_final);
  tracker.finish(out);
  return out;
}

/// N-EG-LS: line search (>= 1 prox), then x_{k+1} = P_{x_k}(gamma_k F(y_k)).
inline RunResult run_neg_ls(const Geometry& g, const ProblemInstance& inst,
                            const SolverConfig& cfg) {
  detail::check_problem(g, inst, cfg);
  const auto* algo = std::get_if<NegLS>(&cfg.algorithm);
  require(algo != nullptr, "run_neg_ls: configuration is not NegLS");

  RunResult out;
  detail::RunTracker tracker(g, inst, cfg);
  Point x = cfg.x1.value_or(Point::uniform(inst.n));
  Vector Fx = eval_operator(inst, x);
  out.final_gap = gap_from_value(Fx, x);
  out.status = RunStatus::ProxBudgetExceeded;
  try {
    while (out.np < cfg.max_prox_calls) {
      LineSearchResult ls = line_search(g, inst, x, Fx, algo->gamma0, algo->lambda, cfg.residual_zero_tol);
      out.np += ls.trials;
      if (ls.outcome == LineSearchResult::Outcome::ResidualVanished) {
        out.final_gap = gap_from_value(Fx, x);
        if (out.final_gap <= cfg.gap_tol) {
          out.status = RunStatus::Converged;
        } else {
          out.status = RunStatus::InternalError;
          out.message = "residual vanished but gap is above tolerance";
        }
        break;
      }
      if (ls.outcome == LineSearchResult::Outcome::TrialCapExceeded) {
        out.status = RunStatus::InternalError;
        out.message = "line search exceeded " + std::to_string(kMaxLineSearchTrials) + " trials";
        break;
      }
      Point x_next = prox_map(g, x, ls.gamma * ls.Fy);
      out.np += 1;
      ++out.k;
      Vector F_next = eval_operator(inst, x_next);

      IterationRecord rec;
      rec.k = out.k;
      rec.gamma = ls.gamma;
      rec.ls_trials = ls.trials;
      rec.residual_norm = ls.residual_norm;
      rec.np_so_far = out.np;
      const bool at_y = cfg.gap_eval_point == GapPoint::AtYk;
      rec.gap = at_y ? gap_from_value(ls.Fy, ls.y) : gap_from_value(F_next, x_next);
      tracker.record(out, rec, x, ls.y, x_next);

      out.final_gap = rec.gap;
      if (rec.gap <= cfg.gap_tol) {
        out.status = RunStatus::Converged;
        x = at_y ? std::move(ls.y) : std::move(x_next);
        break;
      }
      x = std::move(x_next);
      Fx = std::move(F_next);
    }
  } catch (const NumericalError& e) {
    out.status = RunStatus::InternalError;
    out.message = e.what();
  }
  out.x_final = std::move(x);
  tracker.finish(out);
  return out;
}

inline RunResult solve(const Geometry& g, const ProblemInstance& inst, const SolverConfig& cfg) {
  if (std::holds_alternative<NegFixed>(cfg.algorithm)) return run_neg_fixed(g, inst, cfg);
  return run_neg_ls(g, inst, cfg);
}

inline void write_trace_csv(std::ostream& os, const std::vector<IterationRecord>& trace) {
  os << "k,gamma,ls_trials,gap,residual_norm,np\n";
  os.precision(17);
  for (const auto& r : trace) {
    os << r.k << ',' << r.gamma << ',' << r.ls_trials << ',' << r.gap << ',' << r.residual_norm
       << ',' << r.np_so_far << '\n';
  }
}

}  // namespace gmvi
