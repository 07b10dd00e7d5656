#pragma once

// Operator model over the standard simplex and the benchmark instance
// families (Kojima-Shindo, Watson, Sun, modified HP-hard, random).

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

#include "gmvi/error.hpp"
#include "gmvi/random.hpp"

namespace gmvi {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Index = Eigen::Index;

inline constexpr double kClampTolerance = 1e-12;
inline constexpr double kSimplexSumTolerance = 1e-9;

/// A point of the standard simplex {x >= 0, sum x = 1}.
///
/// Coordinates in [-1e-12, 0) are clamped to zero; anything more negative,
/// non-finite, or a coordinate sum off by more than 1e-9 is rejected.
class Point {
 public:
  explicit Point(Vector coords) : coords_(std::move(coords)) {
    require(coords_.size() > 0, "Point: empty coordinate vector");
    for (Index i = 0; i < coords_.size(); ++i) {
      double& c = coords_[i];
      require(std::isfinite(c), "Point: non-finite coordinate");
      require(c >= -kClampTolerance, "Point: coordinate " + std::to_string(i) +
                                          " = " + std::to_string(c) + " is negative");
      if (c < 0.0) c = 0.0;
    }
    const double sum = coords_.sum();
    require(std::abs(sum - 1.0) <= kSimplexSumTolerance,
            "Point: coordinates sum to " + std::to_string(sum));
  }

  static Point uniform(Index n) {
    require(n > 0, "Point::uniform: n must be positive");
    return Point(Vector::Constant(n, 1.0 / static_cast<double>(n)));
  }

  static Point vertex(Index n, Index i) {
    require(i >= 0 && i < n, "Point::vertex: index out of range");
    Vector e = Vector::Zero(n);
    e[i] = 1.0;
    return Point(std::move(e));
  }

  const Vector& coords() const { return coords_; }
  Index size() const { return coords_.size(); }
  double operator[](Index i) const { return coords_[i]; }

 private:
  Vector coords_;
};

/// Uniform (flat Dirichlet) sample from the simplex.
inline Point random_simplex_point(Rng& rng, Index n) {
  Vector v(n);
  for (Index i = 0; i < n; ++i) v[i] = -std::log1p(-rng.unit());
  v /= v.sum();
  return Point(std::move(v));
}

// ---------------------------------------------------------------------------
// Norms

enum class Norm { L1, L2, LInf };

/// A primal norm and its conjugate.
struct NormPair {
  Norm primal = Norm::L2;
  Norm dual = Norm::L2;

  static constexpr NormPair l1() { return {Norm::L1, Norm::LInf}; }
  static constexpr NormPair l2() { return {Norm::L2, Norm::L2}; }

  constexpr bool consistent() const {
    return (primal == Norm::L1 && dual == Norm::LInf) ||
           (primal == Norm::L2 && dual == Norm::L2);
  }
  friend constexpr bool operator==(NormPair, NormPair) = default;
};

inline double norm(const Vector& v, Norm which) {
  switch (which) {
    case Norm::L1: return v.lpNorm<1>();
    case Norm::L2: return v.norm();
    case Norm::LInf: return v.lpNorm<Eigen::Infinity>();
  }
  return 0.0;
}

// ---------------------------------------------------------------------------
// Operators

/// F(x) = A x + b with shared, immutable storage (copies are cheap).
class AffineOperator {
 public:
  AffineOperator(Matrix A, Vector b) {
    require(A.rows() == A.cols(), "AffineOperator: matrix is not square");
    require(b.size() == A.rows(), "AffineOperator: offset length mismatch");
    require(A.allFinite() && b.allFinite(), "AffineOperator: non-finite entry");
    data_ = std::make_shared<const Data>(Data{std::move(A), std::move(b)});
  }

  const Matrix& matrix() const { return data_->A; }
  const Vector& offset() const { return data_->b; }
  Index dimension() const { return data_->b.size(); }

  Vector apply(const Vector& x) const {
    Vector out = data_->b;
    out.noalias() += data_->A * x;
    return out;
  }

 private:
  struct Data {
    Matrix A;
    Vector b;
  };
  std::shared_ptr<const Data> data_;
};

/// The four quadratic polynomials of the Kojima-Shindo problem (n = 4).
struct KojimaShindoOperator {
  static constexpr Index kDimension = 4;

  static Vector apply(const Vector& x) {
    const double x1 = x[0], x2 = x[1], x3 = x[2], x4 = x[3];
    Vector f(4);
    f[0] = 3 * x1 * x1 + 2 * x1 * x2 + 2 * x2 * x2 + x3 + 3 * x4 - 6;
    f[1] = 2 * x1 * x1 + x1 + x2 * x2 + 10 * x3 + 2 * x4 - 2;
    f[2] = 3 * x1 * x1 + x1 * x2 + 2 * x2 * x2 + 2 * x3 + 9 * x4 - 9;
    f[3] = x1 * x1 + 3 * x2 * x2 + 2 * x3 + 3 * x4 - 3;
    return f;
  }

  static Matrix jacobian(const Vector& x) {
    const double x1 = x[0], x2 = x[1];
    Matrix J(4, 4);
    J << 6 * x1 + 2 * x2, 2 * x1 + 4 * x2, 1, 3,
         4 * x1 + 1, 2 * x2, 10, 2,
         6 * x1 + x2, x1 + 4 * x2, 2, 9,
         2 * x1, 6 * x2, 2, 3;
    return J;
  }
};

using OperatorSpec = std::variant<AffineOperator, KojimaShindoOperator>;

// ---------------------------------------------------------------------------
// Instances

enum class Family { KS, WAT, SUN, MHPH, RG, Custom };
enum class Monotonicity { Monotone, GeneralizedMonotone, Unknown };

inline std::string_view to_string(Family f) {
  switch (f) {
    case Family::KS: return "KS";
    case Family::WAT: return "WAT";
    case Family::SUN: return "SUN";
    case Family::MHPH: return "MHPH";
    case Family::RG: return "RG";
    case Family::Custom: return "Custom";
  }
  return "?";
}

inline Family parse_family(std::string_view s) {
  for (Family f : {Family::KS, Family::WAT, Family::SUN, Family::MHPH, Family::RG,
                   Family::Custom}) {
    std::string lower(to_string(f));
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (s == to_string(f) || s == lower) return f;
  }
  throw InvalidArgument("unknown instance family '" + std::string(s) + "'");
}

inline std::string_view to_string(Monotonicity m) {
  switch (m) {
    case Monotonicity::Monotone: return "Monotone";
    case Monotonicity::GeneralizedMonotone: return "GeneralizedMonotone";
    case Monotonicity::Unknown: return "Unknown";
  }
  return "?";
}

struct ProblemInstance {
  std::string name;
  Index n = 0;
  OperatorSpec op;
  Family family = Family::Custom;
  std::optional<std::uint64_t> seed;
  Monotonicity monotonicity = Monotonicity::Unknown;

  bool is_affine() const { return std::holds_alternative<AffineOperator>(op); }
  const AffineOperator& affine() const {
    const auto* a = std::get_if<AffineOperator>(&op);
    if (a == nullptr) throw InvalidArgument(name + " is not an affine instance");
    return *a;
  }
};

inline Vector eval_operator(const ProblemInstance& inst, const Vector& x) {
  if (x.size() != inst.n) {
    throw InvalidArgument("eval_operator: point has dimension " + std::to_string(x.size()) +
                          ", instance " + inst.name + " has " + std::to_string(inst.n));
  }
  return std::visit([&](const auto& op) -> Vector { return op.apply(x); }, inst.op);
}

inline Vector eval_operator(const ProblemInstance& inst, const Point& x) {
  return eval_operator(inst, x.coords());
}

inline ProblemInstance make_affine(std::string name, Matrix A, Vector b,
                                   Monotonicity monotonicity = Monotonicity::Unknown) {
  AffineOperator op(std::move(A), std::move(b));
  const Index n = op.dimension();
  return ProblemInstance{std::move(name), n, std::move(op), Family::Custom, std::nullopt,
                         monotonicity};
}

inline ProblemInstance make_kojima_shindo() {
  return ProblemInstance{"KS", KojimaShindoOperator::kDimension, KojimaShindoOperator{},
                         Family::KS, std::nullopt, Monotonicity::Unknown};
}

inline const Matrix& watson_matrix() {
  static const Matrix A = [] {
    Matrix m(10, 10);
    m << 0, 0, -1, -1, -1, 1, 1, 0, 1, 1,
        -2, -1, 0, 1, 1, 2, 2, 0, -1, 0,
         1, 0, 1, -2, -1, -1, 0, 2, 0, 0,
         2, 1, -1, 0, 1, 0, -1, -1, -1, 1,
        -2, 0, 1, 1, 0, 2, 2, -1, 1, 0,
        -1, 0, 1, 1, 1, 0, -1, 2, 0, 1,
         0, -1, 1, 0, 2, -1, 0, 0, 1, -1,
         0, -2, 2, 0, 0, 1, 2, 2, -1, 0,
         0, -1, 0, 2, 2, 1, 1, 1, -1, 0,
         2, -1, -1, 0, 1, 0, 0, -1, 2, 2;
    return m;
  }();
  return A;
}

/// Sign of the Watson offset. The text prints b = e_i, but the published
/// iteration counts (E-EG, center start) are reproduced only with b = -e_i.
enum class WatsonOffset { Negative, Positive };

/// WATi: F(x) = A x -/+ e_i with the fixed 10x10 Watson matrix, 1 <= i <= 10.
inline ProblemInstance make_watson(int i, WatsonOffset sign = WatsonOffset::Negative) {
  require(i >= 1 && i <= 10, "make_watson: index must be in 1..10, got " + std::to_string(i));
  Vector b = Vector::Zero(10);
  b[i - 1] = sign == WatsonOffset::Negative ? -1.0 : 1.0;
  return ProblemInstance{"WAT" + std::to_string(i), 10, AffineOperator(watson_matrix(), b),
                         Family::WAT, std::nullopt, Monotonicity::Unknown};
}

inline Matrix sun_matrix(Index n) {
  Matrix A = Matrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) {
    A(i, i) = 1.0;
    for (Index j = i + 1; j < n; ++j) A(i, j) = 2.0;
  }
  return A;
}

/// Upper-triangular Sun matrix (1 on the diagonal, 2 above) with b = -1.
/// A + A^T is the all-twos matrix, so the operator is monotone.
inline ProblemInstance make_sun(Index n) {
  require(n >= 1, "make_sun: n must be positive");
  return ProblemInstance{"SUN", n, AffineOperator(sun_matrix(n), Vector::Constant(n, -1.0)),
                         Family::SUN, std::nullopt, Monotonicity::Monotone};
}

/// Modified HP-hard: A = M M^T, M_ij ~ U(-15,-12), b_i ~ U(-500,0).
/// Draw order: M row-major, then b.
inline ProblemInstance make_mhph(Index n, std::uint64_t seed) {
  require(n >= 1, "make_mhph: n must be positive");
  Rng rng(seed);
  Matrix M(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) M(i, j) = rng.uniform(-15.0, -12.0);
  Vector b(n);
  for (Index i = 0; i < n; ++i) b[i] = rng.uniform(-500.0, 0.0);
  Matrix A(n, n);
  A.noalias() = M * M.transpose();
  // Symmetrize exactly; the product can differ in the last bit across triangles.
  A = (0.5 * (A + A.transpose())).eval();
  return ProblemInstance{"MHPH", n, AffineOperator(std::move(A), std::move(b)), Family::MHPH,
                         seed, Monotonicity::Monotone};
}

/// Random affine instance: A_ij ~ U(-50,150), b_i ~ U(-200,300).
/// Draw order: A row-major, then b.
inline ProblemInstance make_rg(Index n, std::uint64_t seed) {
  require(n >= 1, "make_rg: n must be positive");
  Rng rng(seed);
  Matrix A(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) A(i, j) = rng.uniform(-50.0, 150.0);
  Vector b(n);
  for (Index i = 0; i < n; ++i) b[i] = rng.uniform(-200.0, 300.0);
  return ProblemInstance{"RG", n, AffineOperator(std::move(A), std::move(b)), Family::RG, seed,
                         Monotonicity::Unknown};
}

// ---------------------------------------------------------------------------
// Lipschitz constants

namespace detail {

/// Largest singular value by power iteration on A^T A.
inline double spectral_norm(const Matrix& A, double rel_tol = 1e-8,
                            int max_iterations = 100000) {
  if (A.size() == 0 || A.cwiseAbs().maxCoeff() == 0.0) return 0.0;
  Rng rng(0x9E3779B97F4A7C15ULL);
  Vector v(A.cols());
  for (Index i = 0; i < v.size(); ++i) v[i] = 1.0 + 0.1 * rng.unit();
  v.normalize();
  double sigma = 0.0;
  Vector Av(A.rows());
  for (int it = 0; it < max_iterations; ++it) {
    Av.noalias() = A * v;
    const double next = Av.norm();
    Vector w = A.transpose() * Av;
    const double wn = w.norm();
    if (wn == 0.0) return next;
    v = w / wn;
    if (it > 0 && std::abs(next - sigma) <= rel_tol * next) return next;
    sigma = next;
  }
  throw NumericalError("spectral_norm: power iteration did not converge");
}

}  // namespace detail

/// Lipschitz constant of F w.r.t. the norm pair, ||F(x)-F(y)||_* <= L ||x-y||.
///
/// Affine, (L2,L2): spectral norm of A. Affine, (L1,LInf): max |A_ij|, which is
/// the exact l1 -> linf operator norm. Kojima-Shindo: a sampled heuristic,
/// 1.1 times the largest induced Jacobian norm over 10,000 seeded simplex
/// points; it is an estimate, not a certified bound.
inline double lipschitz_constant(const ProblemInstance& inst, NormPair norms) {
  if (!norms.consistent()) {
    throw InvalidArgument("lipschitz_constant: unsupported norm pair (dual does not match primal)");
  }
  if (const auto* a = std::get_if<AffineOperator>(&inst.op)) {
    if (norms.primal == Norm::L2) return detail::spectral_norm(a->matrix());
    return a->matrix().cwiseAbs().maxCoeff();
  }
  Rng rng(0x4B53ULL);
  double best = 0.0;
  for (int s = 0; s < 10000; ++s) {
    const Point x = random_simplex_point(rng, 4);
    const Matrix J = KojimaShindoOperator::jacobian(x.coords());
    const double induced = norms.primal == Norm::L2
                               ? Eigen::JacobiSVD<Matrix>(J).singularValues()[0]
                               : J.cwiseAbs().maxCoeff();
    best = std::max(best, induced);
  }
  return 1.1 * best;
}

}  // namespace gmvi
