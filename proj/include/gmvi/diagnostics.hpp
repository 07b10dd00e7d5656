#pragma once

// Termination measures: the prox residual R_gamma, the gap function g, the
// perturbed gap g~(x, phi) and (eps, delta)-strong-solution certificates.

#include <algorithm>
#include <cmath>
#include <optional>

#include "gmvi/geometry.hpp"
#include "gmvi/problems.hpp"

namespace gmvi {

struct Residual {
  Vector value;       ///< R_gamma(x) = (x - x_plus) / gamma
  double norm = 0.0;  ///< in the geometry's primal norm
  Point x_plus;       ///< P_x(gamma F(x))
};

/// One prox_map call; the caller accounts for it.
inline Residual residual(const Geometry& g, const ProblemInstance& inst, const Point& x,
                         double gamma) {
  require(gamma > 0.0, "residual: gamma must be positive");
  Point x_plus = prox_map(g, x, gamma * eval_operator(inst, x));
  Vector r = (x.coords() - x_plus.coords()) / gamma;
  const double nr = g.primal_norm(r);
  return Residual{std::move(r), nr, std::move(x_plus)};
}

/// g(x) = <F(x), x> - min_i F_i(x) given F(x); clamped at 0.
inline double gap_from_value(const Vector& Fx, const Point& x) {
  return std::max(0.0, Fx.dot(x.coords()) - Fx.minCoeff());
}

/// g(x) = sup_{z in simplex} <F(x), x - z>, attained at a vertex.
inline double gap(const ProblemInstance& inst, const Point& x) {
  return gap_from_value(eval_operator(inst, x), x);
}

/// g~(x, phi) = <F(x) + phi, x> - min_i (F(x) + phi)_i. Not clamped: it is
/// legitimately <= 0 at certificates.
inline double tilde_gap(const ProblemInstance& inst, const Point& x, const Vector& phi) {
  const Vector shifted = eval_operator(inst, x) + phi;
  return shifted.dot(x.coords()) - shifted.minCoeff();
}

struct Certificate {
  Point x_plus;
  Vector phi;
  double gamma = 0.0;
  double eps = 0.0;              ///< |phi|_*
  double tilde_gap_value = 0.0;  ///< g~(x_plus, phi)
  double residual_norm = 0.0;    ///< |R_gamma(x)|
  std::optional<double> eps_bound;
};

/// Builds the (eps, delta)-strong-solution witness at x_plus = P_x(gamma F(x)):
///   phi = F(x) - F(x_plus) + (grad omega(x_plus) - grad omega(x)) / gamma.
/// When L and nu are supplied, eps_bound = L (gamma |R|)^nu + Q |R|; this needs
/// the geometry to have a finite Q.
inline Certificate make_certificate(const Geometry& g, const ProblemInstance& inst,
                                    const Point& x, double gamma,
                                    std::optional<double> L = std::nullopt,
                                    std::optional<double> nu = std::nullopt) {
  require(gamma > 0.0, "make_certificate: gamma must be positive");
  const bool want_bound = L.has_value() || nu.has_value();
  if (want_bound) {
    require(L.has_value() && nu.has_value(), "make_certificate: eps bound needs both L and nu");
    require(g.Q().has_value(), "make_certificate: eps bound needs a geometry with finite Q");
  }
  const Vector Fx = eval_operator(inst, x);
  Point x_plus = prox_map(g, x, gamma * Fx);
  const Vector Fplus = eval_operator(inst, x_plus);
  Vector phi = Fx - Fplus + (grad_omega(g, x_plus) - grad_omega(g, x)) / gamma;
  const double rnorm = g.primal_norm((x.coords() - x_plus.coords()) / gamma);

  Certificate cert{x_plus, phi, gamma, g.dual_norm(phi), 0.0, rnorm, std::nullopt};
  const Vector shifted = Fplus + phi;
  cert.tilde_gap_value = shifted.dot(x_plus.coords()) - shifted.minCoeff();
  if (want_bound) {
    cert.eps_bound = *L * std::pow(gamma * rnorm, *nu) + *g.Q() * rnorm;
  }
  return cert;
}

/// |x - P_x(gamma F(x))| <= tol in the primal norm.
inline bool is_strong_solution(const Geometry& g, const ProblemInstance& inst, const Point& x,
                               double gamma, double tol) {
  require(gamma > 0.0 && tol > 0.0, "is_strong_solution: gamma and tol must be positive");
  const Point x_plus = prox_map(g, x, gamma * eval_operator(inst, x));
  return g.primal_norm(x.coords() - x_plus.coords()) <= tol;
}

}  // namespace gmvi
