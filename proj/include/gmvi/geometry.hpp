#pragma once

// Distance-generating functions, Bregman distances and prox-mappings
//   P_x(phi) = argmin_{z in simplex} <phi, z> + V(x, z)
// for the Euclidean, shifted-entropy and p-norm setups.

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gmvi/error.hpp"
#include "gmvi/problems.hpp"

namespace gmvi {

enum class GeometryKind { Euclidean, Entropy, PNorm };

inline std::string_view to_string(GeometryKind k) {
  switch (k) {
    case GeometryKind::Euclidean: return "euclidean";
    case GeometryKind::Entropy: return "entropy";
    case GeometryKind::PNorm: return "pnorm";
  }
  return "?";
}

inline GeometryKind parse_geometry_kind(std::string_view s) {
  if (s == "euclidean") return GeometryKind::Euclidean;
  if (s == "entropy") return GeometryKind::Entropy;
  if (s == "pnorm" || s == "p-norm") return GeometryKind::PNorm;
  throw InvalidArgument("unknown geometry '" + std::string(s) + "'");
}

/// A distance-generating function together with its norm pair, its strong
/// convexity modulus alpha and, when it exists, the Lipschitz constant Q of
/// its gradient.
///
///  - Euclidean: omega = |x|_2^2 / 2, alpha = Q = 1, norms (L2, L2).
///  - Entropy:   omega = sum (x_i + d/n) log(x_i + d/n), alpha = 1,
///               Q = 1 + n/d, norms (L1, LInf).
///  - PNorm:     omega = |x|_p^2 / 2 with p = 1 + 1/ln n (1.5 when n <= 2),
///               alpha = (p - 1)/e^2, no Q, norms (L1, LInf).
class Geometry {
 public:
  static Geometry euclidean(Index n) {
    require(n >= 1, "Geometry: n must be positive");
    Geometry g(GeometryKind::Euclidean, n);
    g.alpha_ = 1.0;
    g.Q_ = 1.0;
    g.norms_ = NormPair::l2();
    return g;
  }

  static Geometry entropy(Index n, double delta = 1e-16) {
    require(n >= 1, "Geometry: n must be positive");
    require(delta > 0.0 && std::isfinite(delta), "Geometry: entropy shift must be positive");
    Geometry g(GeometryKind::Entropy, n);
    g.delta_ = delta;
    g.alpha_ = 1.0;
    g.Q_ = 1.0 + static_cast<double>(n) / delta;
    g.norms_ = NormPair::l1();
    return g;
  }

  static Geometry pnorm(Index n) {
    require(n >= 1, "Geometry: n must be positive");
    Geometry g(GeometryKind::PNorm, n);
    g.p_ = n <= 2 ? 1.5 : 1.0 + 1.0 / std::log(static_cast<double>(n));
    g.alpha_ = (g.p_ - 1.0) / (std::numbers::e * std::numbers::e);
    g.norms_ = NormPair::l1();
    return g;
  }

  static Geometry make(GeometryKind kind, Index n) {
    switch (kind) {
      case GeometryKind::Euclidean: return euclidean(n);
      case GeometryKind::Entropy: return entropy(n);
      case GeometryKind::PNorm: return pnorm(n);
    }
    throw InvalidArgument("Geometry::make: bad kind");
  }

  GeometryKind kind() const { return kind_; }
  std::string_view name() const { return to_string(kind_); }
  Index n() const { return n_; }
  double alpha() const { return alpha_; }
  std::optional<double> Q() const { return Q_; }
  NormPair norms() const { return norms_; }
  double delta() const { return delta_; }
  double p() const { return p_; }

  /// 1 + Q^2 / alpha^2, the constant of the prox-ratio monotonicity bound.
  std::optional<double> q_ratio() const {
    if (!Q_) return std::nullopt;
    return 1.0 + (*Q_ * *Q_) / (alpha_ * alpha_);
  }

  double primal_norm(const Vector& v) const { return norm(v, norms_.primal); }
  double dual_norm(const Vector& v) const { return norm(v, norms_.dual); }

 private:
  Geometry(GeometryKind kind, Index n) : kind_(kind), n_(n) {}

  GeometryKind kind_;
  Index n_;
  double alpha_ = 1.0;
  std::optional<double> Q_;
  NormPair norms_;
  double delta_ = 0.0;
  double p_ = 2.0;
};

struct RadiusReport {
  double D = 0.0;
  double Omega = 0.0;
};

namespace detail {

inline void check_dim(const Geometry& g, Index size, const char* what) {
  if (size != g.n()) {
    throw InvalidArgument(std::string(what) + ": dimension " + std::to_string(size) +
                          " does not match geometry dimension " + std::to_string(g.n()));
  }
}

inline double lp_norm(const Vector& x, double p) {
  double s = 0.0;
  for (Index i = 0; i < x.size(); ++i) s += std::pow(std::abs(x[i]), p);
  return std::pow(s, 1.0 / p);
}

// r log r - r + 1 with r = (z + c)/(x + c) and u = r - 1 = (z - x)/(x + c).
// u is passed separately because r - 1 cancels badly when z is close to x.
inline double entropy_excess(double r, double u) {
  if (std::abs(u) < 1e-4) {
    const double u2 = u * u;
    return u2 * (0.5 - u / 6.0 + u2 / 12.0 - u2 * u / 20.0);
  }
  return r * std::log(r) - r + 1.0;
}

}  // namespace detail

inline double omega(const Geometry& g, const Vector& x) {
  detail::check_dim(g, x.size(), "omega");
  switch (g.kind()) {
    case GeometryKind::Euclidean: return 0.5 * x.squaredNorm();
    case GeometryKind::Entropy: {
      const double c = g.delta() / static_cast<double>(g.n());
      double s = 0.0;
      for (Index i = 0; i < x.size(); ++i) s += (x[i] + c) * std::log(x[i] + c);
      return s;
    }
    case GeometryKind::PNorm: {
      const double r = detail::lp_norm(x, g.p());
      return 0.5 * r * r;
    }
  }
  return 0.0;
}
inline double omega(const Geometry& g, const Point& x) { return omega(g, x.coords()); }

inline Vector grad_omega(const Geometry& g, const Vector& x) {
  detail::check_dim(g, x.size(), "grad_omega");
  switch (g.kind()) {
    case GeometryKind::Euclidean: return x;
    case GeometryKind::Entropy: {
      const double c = g.delta() / static_cast<double>(g.n());
      Vector out(x.size());
      for (Index i = 0; i < x.size(); ++i) out[i] = std::log(x[i] + c) + 1.0;
      return out;
    }
    case GeometryKind::PNorm: {
      const double p = g.p();
      const double scale = std::pow(detail::lp_norm(x, p), 2.0 - p);
      Vector out(x.size());
      for (Index i = 0; i < x.size(); ++i) {
        const double a = std::abs(x[i]);
        out[i] = a == 0.0 ? 0.0 : std::copysign(std::pow(a, p - 1.0), x[i]) * scale;
      }
      return out;
    }
  }
  return x;
}
inline Vector grad_omega(const Geometry& g, const Point& x) { return grad_omega(g, x.coords()); }

/// V(x, z) = omega(z) - omega(x) - <grad omega(x), z - x>, clamped at 0.
inline double bregman(const Geometry& g, const Point& x, const Point& z) {
  detail::check_dim(g, x.size(), "bregman");
  detail::check_dim(g, z.size(), "bregman");
  const Vector& xv = x.coords();
  const Vector& zv = z.coords();
  double v = 0.0;
  switch (g.kind()) {
    case GeometryKind::Euclidean:
      v = 0.5 * (zv - xv).squaredNorm();
      break;
    case GeometryKind::Entropy: {
      // Per coordinate: (x+c) * [r log r - r + 1] with r = (z+c)/(x+c).
      const double c = g.delta() / static_cast<double>(g.n());
      for (Index i = 0; i < xv.size(); ++i) {
        const double base = xv[i] + c;
        v += base * detail::entropy_excess((zv[i] + c) / base, (zv[i] - xv[i]) / base);
      }
      break;
    }
    case GeometryKind::PNorm:
      v = omega(g, zv) - omega(g, xv) - grad_omega(g, xv).dot(zv - xv);
      break;
  }
  return std::max(v, 0.0);
}

/// max over simplex vertices v of -<phi + grad omega(z) - grad omega(x), v - z>,
/// i.e. how badly z violates the prox-mapping's variational condition (0 at
/// the exact minimizer).
inline double prox_optimality_violation(const Geometry& g, const Point& x, const Vector& phi,
                                        const Point& z) {
  const Vector G = phi + grad_omega(g, z) - grad_omega(g, x);
  return std::max(0.0, G.dot(z.coords()) - G.minCoeff());
}

/// Euclidean projection onto the simplex (sort and threshold).
inline Point project_simplex_euclidean(const Vector& v) {
  require(v.size() > 0, "project_simplex_euclidean: empty vector");
  require(v.allFinite(), "project_simplex_euclidean: non-finite input");
  std::vector<double> sorted(v.data(), v.data() + v.size());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  double running = 0.0;
  double theta = 0.0;
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    running += sorted[k];
    const double t = (running - 1.0) / static_cast<double>(k + 1);
    if (sorted[k] - t > 0.0) theta = t;
  }
  Vector z = (v.array() - theta).max(0.0).matrix();
  const double s = z.sum();
  if (s > 0.0) z /= s;
  return Point(std::move(z));
}

/// Entropy prox with the delta/n shift: z_i = max(0, (x_i + c) e^{-phi_i - mu} - c),
/// with mu found by bisection so that sum z = 1.
inline Point prox_entropy(const Geometry& g, const Point& x, const Vector& phi) {
  require(g.kind() == GeometryKind::Entropy, "prox_entropy: geometry is not entropy");
  const Index n = x.size();
  const double c = g.delta() / static_cast<double>(n);
  const double phi_min = phi.minCoeff();
  Vector w(n);
  for (Index i = 0; i < n; ++i) w[i] = (x[i] + c) * std::exp(-(phi[i] - phi_min));
  const double W = w.sum();
  if (!(W > 0.0) || !std::isfinite(W)) {
    throw NumericalError("prox_entropy: degenerate weight sum " + std::to_string(W));
  }
  auto mass = [&](double t) {
    double s = 0.0;
    for (Index i = 0; i < n; ++i) s += std::max(0.0, w[i] * t - c);
    return s;
  };
  // mass(t) <= t W and mass(t) >= t W - delta, so the root lies in
  // [1/W, (1 + delta)/W].
  double lo = 1.0 / W;
  double hi = (1.0 + g.delta()) / W;
  double t = lo;
  double err = mass(t) - 1.0;
  if (mass(hi) < 1.0 - 1e-12 || err > 1e-12) {
    throw NumericalError("prox_entropy: bisection bracket failure");
  }
  for (int it = 0; it < 200 && std::abs(err) > 1e-12; ++it) {
    t = 0.5 * (lo + hi);
    err = mass(t) - 1.0;
    if (err < 0.0) lo = t; else hi = t;
    if (hi - lo <= 0.0) break;
  }
  Vector z(n);
  for (Index i = 0; i < n; ++i) z[i] = std::max(0.0, w[i] * t - c);
  z /= z.sum();
  return Point(std::move(z));
}

/// p-norm prox. With h = grad omega(x) - phi the minimizer has the form
/// z_i proportional to max(0, h_i - mu)^{1/(p-1)}. Writing D = max(h) - mu and
/// u_i = max(0, 1 - (max(h) - h_i)/D)^{1/(p-1)}, the KKT system reduces to the
/// scalar equation  log D + log(sum u) - (2 - p) log |u|_p = 0, whose unique root
/// lies in [1/n, 1]; it is found by bisection and z = u / sum u.
inline Point prox_pnorm(const Geometry& g, const Point& x, const Vector& phi) {
  require(g.kind() == GeometryKind::PNorm, "prox_pnorm: geometry is not pnorm");
  const Index n = x.size();
  const double p = g.p();
  const double r = 1.0 / (p - 1.0);
  const Vector h = grad_omega(g, x) - phi;
  const double h_max = h.maxCoeff();
  const Vector gap = (h_max - h.array()).matrix();

  Vector u(n);
  auto fill = [&](double D) {
    for (Index i = 0; i < n; ++i) {
      const double d = 1.0 - gap[i] / D;
      u[i] = d > 0.0 ? std::pow(d, r) : 0.0;
    }
  };
  auto residual = [&](double D) {
    fill(D);
    return std::log(D) + std::log(u.sum()) - (2.0 - p) * std::log(detail::lp_norm(u, p));
  };

  double lo = 0.5 / static_cast<double>(n);
  double hi = 2.0;
  if (!(residual(lo) < 0.0) || !(residual(hi) > 0.0)) {
    throw NumericalError("prox_pnorm: bisection bracket failure");
  }
  for (int it = 0; it < 500; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (residual(mid) < 0.0) lo = mid; else hi = mid;
  }
  fill(0.5 * (lo + hi));
  Vector z = u / u.sum();
  Point out(std::move(z));

  const double violation = prox_optimality_violation(g, x, phi, out);
  const double scale = 1.0 + phi.lpNorm<Eigen::Infinity>() + h.lpNorm<Eigen::Infinity>();
  if (!(violation <= 1e-8 * scale)) {
    throw NumericalError("prox_pnorm: optimality check failed (violation " +
                         std::to_string(violation) + ", p = " + std::to_string(p) +
                         ", n = " + std::to_string(n) + ")");
  }
  return out;
}

/// P_x(phi) for any of the three geometries.
inline Point prox_map(const Geometry& g, const Point& x, const Vector& phi) {
  detail::check_dim(g, x.size(), "prox_map");
  detail::check_dim(g, phi.size(), "prox_map");
  require(phi.allFinite(), "prox_map: non-finite phi");
  std::optional<Point> z;
  switch (g.kind()) {
    case GeometryKind::Euclidean:
      z.emplace(project_simplex_euclidean(x.coords() - phi));
      break;
    case GeometryKind::Entropy:
      z.emplace(prox_entropy(g, x, phi));
      break;
    case GeometryKind::PNorm:
      return prox_pnorm(g, x, phi);
  }
#ifndef NDEBUG
  const double violation = prox_optimality_violation(g, x, phi, *z);
  if (!(violation <= 1e-8 * (1.0 + phi.lpNorm<Eigen::Infinity>()))) {
    throw NumericalError("prox_map: optimality check failed for " + std::string(g.name()));
  }
#endif
  return std::move(*z);
}

/// D = sqrt(max omega - min omega) over the simplex (vertex and center for
/// all three geometries) and Omega = sqrt(2 / alpha) D.
inline RadiusReport omega_radius(const Geometry& g) {
  const double n = static_cast<double>(g.n());
  double d2 = 0.0;
  switch (g.kind()) {
    case GeometryKind::Euclidean:
      d2 = 0.5 - 0.5 / n;
      break;
    case GeometryKind::Entropy:
      d2 = omega(g, Point::vertex(g.n(), 0)) - omega(g, Point::uniform(g.n()));
      break;
    case GeometryKind::PNorm:
      d2 = 0.5 - 0.5 * std::pow(n, 2.0 / g.p() - 2.0);
      break;
  }
  RadiusReport rep;
  rep.D = std::sqrt(std::max(d2, 0.0));
  rep.Omega = std::sqrt(2.0 / g.alpha()) * rep.D;
  return rep;
}

}  // namespace gmvi
