#include <gtest/gtest.h>

#include <cmath>

#include "gmvi/geometry.hpp"
#include "support.hpp"

using namespace gmvi;
using gmvi::testing::vec;

namespace {

double l1(const Point& a, const Point& b) { return (a.coords() - b.coords()).lpNorm<1>(); }

}  // namespace

TEST(GeometryConstants, PerKind) {
  const auto e = Geometry::euclidean(7);
  EXPECT_EQ(e.alpha(), 1.0);
  EXPECT_EQ(*e.Q(), 1.0);
  EXPECT_EQ(*e.q_ratio(), 2.0);
  EXPECT_EQ(e.norms().primal, Norm::L2);

  const auto h = Geometry::entropy(4);
  EXPECT_EQ(h.delta(), 1e-16);
  EXPECT_EQ(h.alpha(), 1.0);
  EXPECT_DOUBLE_EQ(*h.Q(), 1.0 + 4.0 / 1e-16);
  EXPECT_EQ(h.norms().primal, Norm::L1);
  EXPECT_EQ(h.norms().dual, Norm::LInf);

  const auto p = Geometry::pnorm(100);
  EXPECT_DOUBLE_EQ(p.p(), 1.0 + 1.0 / std::log(100.0));
  EXPECT_DOUBLE_EQ(p.alpha(), (p.p() - 1.0) / std::exp(2.0));
  EXPECT_FALSE(p.Q().has_value());
  EXPECT_FALSE(p.q_ratio().has_value());
  EXPECT_EQ(Geometry::pnorm(2).p(), 1.5);
  EXPECT_EQ(Geometry::pnorm(1).p(), 1.5);
  EXPECT_DOUBLE_EQ(Geometry::pnorm(3).p(), 1.0 + 1.0 / std::log(3.0));
}

TEST(GeometryConstants, ParseKind) {
  EXPECT_EQ(parse_geometry_kind("entropy"), GeometryKind::Entropy);
  EXPECT_EQ(parse_geometry_kind("pnorm"), GeometryKind::PNorm);
  EXPECT_THROW(parse_geometry_kind("l3"), InvalidArgument);
}

TEST(Omega, Examples) {
  EXPECT_DOUBLE_EQ(omega(Geometry::euclidean(3), Point::vertex(3, 0)), 0.5);
  EXPECT_DOUBLE_EQ(omega(Geometry::euclidean(2), Point::uniform(2)), 0.25);
  EXPECT_NEAR(omega(Geometry::entropy(2), Point::uniform(2)), -std::log(2.0), 1e-12);
  EXPECT_DOUBLE_EQ(omega(Geometry::pnorm(5), Point::vertex(5, 2)), 0.5);
}

TEST(GradOmega, Examples) {
  Rng rng(4);
  const Point x = random_simplex_point(rng, 6);
  EXPECT_EQ(grad_omega(Geometry::euclidean(6), x), x.coords());
  const Vector gp = grad_omega(Geometry::pnorm(6), Point::uniform(6));
  EXPECT_LT(gp.maxCoeff() - gp.minCoeff(), 1e-15);
  const Vector ge = grad_omega(Geometry::entropy(2), Point::vertex(2, 0));
  EXPECT_DOUBLE_EQ(ge[0], std::log1p(5e-17) + 1.0);
  EXPECT_DOUBLE_EQ(ge[1], std::log(5e-17) + 1.0);
  EXPECT_EQ(grad_omega(Geometry::pnorm(3), Point::vertex(3, 0))[1], 0.0);
}

TEST(GradOmega, MatchesFiniteDifferences) {
  Rng rng(8);
  for (const auto& g : gmvi::testing::all_geometries(5)) {
    const Point x = random_simplex_point(rng, 5);
    const Vector grad = grad_omega(g, x);
    for (Index i = 0; i < 5; ++i) {
      Vector a = x.coords(), b = x.coords();
      a[i] += 1e-7;
      b[i] -= 1e-7;
      EXPECT_NEAR((omega(g, a) - omega(g, b)) / 2e-7, grad[i], 1e-5) << g.name();
    }
  }
}

TEST(Bregman, Examples) {
  Rng rng(5);
  for (const auto& g : gmvi::testing::all_geometries(4)) {
    const Point x = random_simplex_point(rng, 4);
    EXPECT_EQ(bregman(g, x, x), 0.0);
  }
  EXPECT_DOUBLE_EQ(bregman(Geometry::euclidean(2), Point::vertex(2, 0), Point::vertex(2, 1)), 1.0);
  EXPECT_NEAR(bregman(Geometry::entropy(2), Point::uniform(2), Point::vertex(2, 0)), std::log(2.0),
              1e-12);
}

TEST(Bregman, EntropyMatchesDefinitionAwayFromZero) {
  const auto g = Geometry::entropy(4);
  Rng rng(6);
  for (int t = 0; t < 50; ++t) {
    const Point x = random_simplex_point(rng, 4), z = random_simplex_point(rng, 4);
    const double direct = omega(g, z) - omega(g, x) - grad_omega(g, x).dot(z.coords() - x.coords());
    EXPECT_NEAR(bregman(g, x, z), std::max(direct, 0.0), 1e-12);
  }
}

TEST(ProjectSimplex, Examples) {
  EXPECT_EQ(project_simplex_euclidean(vec({0.2, 0.3, 0.5})).coords(), vec({0.2, 0.3, 0.5}));
  EXPECT_EQ(project_simplex_euclidean(vec({2, 0})).coords(), vec({1, 0}));
  EXPECT_EQ(project_simplex_euclidean(vec({0.6, 0.6})).coords(), vec({0.5, 0.5}));
  EXPECT_EQ(project_simplex_euclidean(vec({-0.5, 0.5})).coords(), vec({0, 1}));
  EXPECT_THROW(project_simplex_euclidean(vec({NAN, 1})), InvalidArgument);
}

TEST(ProxMap, ZeroAndShift) {
  Rng rng(7);
  for (Index n : {2, 5, 20}) {
    for (const auto& g : gmvi::testing::all_geometries(n)) {
      const Point x = random_simplex_point(rng, n);
      EXPECT_LT(l1(prox_map(g, x, Vector::Zero(n)), x), 1e-10) << g.name();
      const Vector phi = gmvi::testing::random_vector(rng, n, -2, 2);
      const Point a = prox_map(g, x, phi);
      const Point b = prox_map(g, x, (phi.array() + 3.7).matrix());
      EXPECT_LT(l1(a, b), 1e-10) << g.name();
    }
  }
}

TEST(ProxMap, EuclideanExample) {
  const Point z = prox_map(Geometry::euclidean(2), Point::uniform(2), vec({1, 0}));
  EXPECT_EQ(z.coords(), vec({0, 1}));
}

TEST(ProxMap, EntropyMultiplicativeWeights) {
  const auto g = Geometry::entropy(2);
  const Point z = prox_entropy(g, Point::uniform(2), vec({std::log(2.0), 0}));
  EXPECT_NEAR(z[0], 1.0 / 3.0, 1e-12);
  EXPECT_NEAR(z[1], 2.0 / 3.0, 1e-12);
  const Point u = prox_entropy(Geometry::entropy(5), Point::uniform(5), Vector::Constant(5, 0.3));
  EXPECT_LT(l1(u, Point::uniform(5)), 1e-12);
}

TEST(ProxMap, EntropyLargePhiDoesNotOverflow) {
  const auto g = Geometry::entropy(3);
  const Point z = prox_entropy(g, Point::uniform(3), vec({-800, 0, 900}));
  EXPECT_NEAR(z[0], 1.0, 1e-12);
}

// Values minted with mpmath (50 digits) from the KKT conditions at p = 1.5.
TEST(ProxMap, PNormPinnedValues) {
  const auto g = Geometry::pnorm(2);
  const Point a = prox_pnorm(g, Point::uniform(2), vec({1, 0}));
  EXPECT_NEAR(a[0], 0.0, 1e-10);
  EXPECT_NEAR(a[1], 1.0, 1e-10);
  const Point b = prox_pnorm(g, Point::uniform(2), vec({0.3, 0}));
  EXPECT_NEAR(b[0], 0.2740983477985670764723216779425611534051, 1e-10);
  const Point c = prox_pnorm(g, Point(vec({0.2, 0.8})), vec({-0.1, 0.05}));
  EXPECT_NEAR(c[0], 0.2975425512417712930424425620904858341713, 1e-10);
}

TEST(ProxMap, PNormConstantPhiAndVertices) {
  const auto g = Geometry::pnorm(6);
  Rng rng(10);
  const Point x = random_simplex_point(rng, 6);
  EXPECT_LT(l1(prox_pnorm(g, x, Vector::Constant(6, -4.0)), x), 1e-10);
  // starting at a vertex with a strong pull elsewhere
  const Point z = prox_pnorm(g, Point::vertex(6, 0), vec({50, 0, 50, 50, 50, 50}));
  EXPECT_NEAR(z[1], 1.0, 1e-10);
}

TEST(ProxMap, OptimalityConditionHolds) {
  Rng rng(11);
  for (Index n : {2, 3, 10, 50, 500}) {
    for (const auto& g : gmvi::testing::all_geometries(n)) {
      for (int t = 0; t < 50; ++t) {
        const Point x = random_simplex_point(rng, n);
        const Vector phi = gmvi::testing::random_vector(rng, n, -5, 5);
        const Point z = prox_map(g, x, phi);
        EXPECT_LE(prox_optimality_violation(g, x, phi, z), 1e-8 * (1 + phi.lpNorm<Eigen::Infinity>()))
            << g.name() << " n=" << n;
      }
    }
  }
}

TEST(ProxMap, DimensionChecks) {
  const auto g = Geometry::euclidean(3);
  EXPECT_THROW(prox_map(g, Point::uniform(4), Vector::Zero(4)), InvalidArgument);
  EXPECT_THROW(prox_map(g, Point::uniform(3), Vector::Zero(2)), InvalidArgument);
  EXPECT_THROW(prox_map(g, Point::uniform(3), vec({INFINITY, 0, 0})), InvalidArgument);
}

TEST(OmegaRadius, Examples) {
  const auto r2 = omega_radius(Geometry::euclidean(2));
  EXPECT_DOUBLE_EQ(r2.D, 0.5);
  EXPECT_NEAR(r2.Omega, std::sqrt(2.0) * 0.5, 1e-15);
  EXPECT_NEAR(omega_radius(Geometry::euclidean(1000000)).D, std::sqrt(0.5), 1e-6);
  const auto r4 = omega_radius(Geometry::entropy(4));
  EXPECT_NEAR(r4.D * r4.D, std::log(4.0), 1e-12);
  const auto gp = Geometry::pnorm(10);
  const auto rp = omega_radius(gp);
  EXPECT_NEAR(rp.D * rp.D, omega(gp, Point::vertex(10, 0)) - omega(gp, Point::uniform(10)), 1e-14);
  EXPECT_DOUBLE_EQ(rp.Omega, std::sqrt(2.0 / gp.alpha()) * rp.D);
}
