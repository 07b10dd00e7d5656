#include <gtest/gtest.h>

#include <cmath>

#include "gmvi/diagnostics.hpp"
#include "support.hpp"

using namespace gmvi;
using gmvi::testing::constant_instance;
using gmvi::testing::vec;

TEST(Residual, HandProjection) {
  const auto inst = constant_instance(vec({1, 0}));
  const Residual r = residual(Geometry::euclidean(2), inst, Point::uniform(2), 0.5);
  EXPECT_EQ(r.x_plus.coords(), vec({0.25, 0.75}));
  EXPECT_EQ(r.value, vec({0.5, -0.5}));
  EXPECT_DOUBLE_EQ(r.norm, std::sqrt(0.5));
}

TEST(Residual, ConstantShiftOperatorIsZero) {
  const auto inst = constant_instance(Vector::Constant(4, 2.5));
  Rng rng(1);
  for (const auto& g : gmvi::testing::all_geometries(4)) {
    const Residual r = residual(g, inst, random_simplex_point(rng, 4), 0.3);
    EXPECT_LT(r.norm, 1e-10) << g.name();
  }
}

TEST(Residual, ZeroAtStrongSolution) {
  // F = (0,1,2) constant: e_1 is the solution
  const auto inst = constant_instance(vec({0, 1, 2}));
  for (const auto& g : gmvi::testing::all_geometries(3)) {
    EXPECT_LT(residual(g, inst, Point::vertex(3, 0), 0.7).norm, 1e-10) << g.name();
  }
  EXPECT_THROW(residual(Geometry::euclidean(3), inst, Point::uniform(3), 0.0), InvalidArgument);
}

TEST(Gap, Examples) {
  EXPECT_EQ(gap(constant_instance(vec({1, 2, 3})), Point::vertex(3, 0)), 0.0);
  EXPECT_DOUBLE_EQ(gap(make_kojima_shindo(), Point::vertex(4, 0)), 3.0);
  EXPECT_DOUBLE_EQ(gap(constant_instance(vec({1, 2, 3})), Point::uniform(3)), 1.0);
}

TEST(Gap, VertexFormulaDominatesSampling) {
  const auto inst = make_rg(6, 3);
  Rng rng(2);
  const Point x = random_simplex_point(rng, 6);
  const Vector F = eval_operator(inst, x);
  const double g = gap(inst, x);
  EXPECT_GE(g, 0.0);
  double sampled = 0.0;
  for (int t = 0; t < 10000; ++t) {
    const Point z = random_simplex_point(rng, 6);
    sampled = std::max(sampled, F.dot(x.coords() - z.coords()));
  }
  EXPECT_GE(g + 1e-9, sampled);
}

TEST(TildeGap, Examples) {
  const auto inst = make_sun(5);
  Rng rng(3);
  const Point x = random_simplex_point(rng, 5);
  EXPECT_NEAR(tilde_gap(inst, x, -eval_operator(inst, x)), 0.0, 1e-15);
  EXPECT_DOUBLE_EQ(tilde_gap(inst, x, Vector::Zero(5)), gap(inst, x));
}

TEST(Certificate, StrongSolutionIsExact) {
  const auto inst = constant_instance(vec({0, 1, 2}));
  const auto g = Geometry::euclidean(3);
  const Certificate c = make_certificate(g, inst, Point::vertex(3, 0), 0.5, 1.0, 1.0);
  EXPECT_LE(c.eps, 1e-10);
  EXPECT_EQ(c.tilde_gap_value, 0.0);
  ASSERT_TRUE(c.eps_bound.has_value());
}

TEST(Certificate, MissingConstants) {
  const auto inst = make_sun(4);
  const Point x = Point::uniform(4);
  EXPECT_THROW(make_certificate(Geometry::euclidean(4), inst, x, 0.1, 2.0, std::nullopt),
               InvalidArgument);
  EXPECT_THROW(make_certificate(Geometry::pnorm(4), inst, x, 0.1, 2.0, 1.0), InvalidArgument);
  EXPECT_NO_THROW(make_certificate(Geometry::pnorm(4), inst, x, 0.1));
  EXPECT_THROW(make_certificate(Geometry::euclidean(4), inst, x, -1.0), InvalidArgument);
}

TEST(Certificate, PropositionBoundsOnAffineInstances) {
  Rng rng(4);
  for (const auto& inst : {make_sun(8), make_watson(2), make_mhph(8, 5), make_rg(8, 6)}) {
    const auto g = Geometry::euclidean(inst.n);
    const double L = lipschitz_constant(inst, g.norms());
    for (int t = 0; t < 100; ++t) {
      const Point x = random_simplex_point(rng, inst.n);
      const Certificate c = make_certificate(g, inst, x, 0.1, L, 1.0);
      EXPECT_LE(c.tilde_gap_value, 1e-8) << inst.name;
      EXPECT_LE(c.eps, *c.eps_bound + 1e-8) << inst.name;
    }
  }
}

TEST(StrongSolution, Examples) {
  Rng rng(5);
  EXPECT_TRUE(is_strong_solution(Geometry::entropy(3), constant_instance(Vector::Zero(3)),
                                 random_simplex_point(rng, 3), 0.4, 1e-9));
  EXPECT_TRUE(is_strong_solution(Geometry::euclidean(3), constant_instance(vec({2, 0.5, 1})),
                                 Point::vertex(3, 1), 0.4, 1e-9));
  EXPECT_FALSE(is_strong_solution(Geometry::euclidean(4), make_sun(4), Point::uniform(4), 0.4, 1e-6));
  EXPECT_THROW(is_strong_solution(Geometry::euclidean(4), make_sun(4), Point::uniform(4), 0.4, 0.0),
               InvalidArgument);
}
