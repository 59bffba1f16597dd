#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "derived_values.hpp"
#include "pdcert/errors.hpp"
#include "pdcert/seedmap.hpp"
#include "support.hpp"

using namespace pdcert;
using testsupport::Rng;

namespace {

Interval pt(double x) { return Interval::point(x); }

GeneratingSeed seed() { return load_seed(builtin_table(), pt(1.75), parse_decimal("0.00405550003051758")); }

}  // namespace

TEST(Seedmap, BuiltinTableBasics) {
  const GeneratingSeed s = seed();
  EXPECT_EQ(s.table.c[0], pt(1.0));
  EXPECT_EQ(s.theta0, pt(1.0));
  EXPECT_TRUE(testsupport::encloses(s.a0, derived::kA0Dec));
  EXPECT_TRUE(testsupport::encloses(s.b0, derived::kB0Dec));
  EXPECT_TRUE(testsupport::encloses(s.cconst, derived::kCconstDec));
  EXPECT_NEAR(s.cconst.mid(), 3.5696, 1e-4);
  EXPECT_LT(s.cconst.width(), 1e-14);
  EXPECT_EQ(s.table_hash.size(), 64U);
}

TEST(Seedmap, TableHashIsStableAndSensitive) {
  YSlices t = builtin_table();
  const std::string h = table_hash(t);
  EXPECT_EQ(h, table_hash(builtin_table()));
  t.d[6] = pt(0.0);
  EXPECT_NE(h, table_hash(t));
}

TEST(Seedmap, QuadraticAtOne) {
  const Quadratic1 q = a1b1c1_at_1(seed());
  EXPECT_TRUE(testsupport::encloses(q.A1, derived::kA1Dec));
  EXPECT_TRUE(testsupport::encloses(q.B1, derived::kB1Dec));
  EXPECT_TRUE(testsupport::encloses(q.C1, derived::kC1Dec));
  EXPECT_NEAR(q.C1.mid(), -0.12208, 1e-5);
  EXPECT_NEAR(q.B1.mid(), -0.97395, 1e-5);
}

TEST(Seedmap, S1TruncationIsIdempotent) {
  const GeneratingSeed s = seed();
  const BiPoly s1 = make_s1(s);
  EXPECT_EQ(s1.deg_x(), 2);
  YSlices t = builtin_table();
  for (std::size_t i = 3; i < 7; ++i) t.c[i] = t.b[i] = t.a[i] = t.d[i] = pt(0.0);
  const GeneratingSeed s_low = load_seed(t, pt(1.75), pt(0.0));
  const BiPoly s1_low = make_s1(s_low);
  for (int i = 0; i <= 2; ++i)
    for (int j = 0; j <= 3; ++j) EXPECT_EQ(s1_low(i, j), s_low.s0.coeff(i, j));
  for (int i = 3; i <= s_low.s0.deg_x(); ++i)
    for (int j = 0; j <= 3; ++j) EXPECT_EQ(s_low.s0(i, j), pt(0.0));
}

TEST(Seedmap, NormOfTailEqualsRegroupedSum) {
  const GeneratingSeed s = seed();
  const Interval n = ell1_norm(psub(s.s0, s.s1), s.rho);
  EXPECT_TRUE(testsupport::tight_upper(n, derived::kNormS0S1Dec, 1e-13));
}

TEST(Seedmap, CtildeConstantCoefficient) {
  const GeneratingSeed s = seed();
  const UniPoly ct = ctilde(s);
  const Interval c0 = ct[0];
  EXPECT_TRUE(c0.contains(1.0 - derived::kCtildeHalfWidth * (1 - 1e-15)));
  EXPECT_TRUE(c0.contains(1.0 + derived::kCtildeHalfWidth * (1 - 1e-15)));
  EXPECT_NEAR(c0.hi() - 1.0, derived::kCtildeHalfWidth, 1e-15);
  EXPECT_EQ(std::pow(1.75, 3), 5.359375);
}

TEST(Seedmap, CtildeWithoutCubicColumnIsC) {
  YSlices t = builtin_table();
  for (std::size_t i = 0; i < 7; ++i) t.d[i] = pt(0.0);
  const GeneratingSeed s = load_seed(t, pt(1.75), pt(0.0));
  const UniPoly ct = ctilde(s);
  for (std::size_t i = 0; i < 7; ++i) EXPECT_EQ(ct[i], t.c[i]);
}

TEST(Seedmap, CtildeMembership) {
  const GeneratingSeed s = seed();
  const UniPoly ct = ctilde(s);
  Rng g(201);
  for (int k = 0; k < 100; ++k) {
    const double x = g.uniform(-1.75, 1.75);
    const double y = g.uniform(-1.75, 1.75);
    const Interval exact = s.table.c.eval(pt(x)) + pt(y) * pt(y) * pt(y) * s.table.d.eval(pt(x));
    ASSERT_TRUE(ct.eval(pt(x)).contains(exact));
  }
}

TEST(Seedmap, NuBranchAndRoundTrip) {
  const GeneratingSeed s = seed();
  const Interval nu0 = nu_inverse(s, pt(0.0));
  EXPECT_TRUE(nu0.contains(0.0));
  EXPECT_LT(mag(nu0), 1e-15);
  EXPECT_TRUE(nu_inverse(s, tau(s, pt(0.5))).contains(0.5));
  const Interval band = nu_inverse(s, tau(s, Interval(0.1, 0.2)));
  EXPECT_TRUE(band.contains(Interval(0.1, 0.2)));
  EXPECT_LT(band.width(), 0.2);
}

TEST(Seedmap, Reassembly) {
  const GeneratingSeed s = seed();
  const Interval y = Interval(-0.7, 0.9);
  const Interval x = Interval(0.3, 0.4);
  Rng g(202);
  for (int k = 0; k < 100; ++k) {
    const Interval px = pt(g.inside(x));
    const Interval py = pt(g.inside(y));
    const Interval lhs = eval_box(s.sigma0, px, py) - 0.5 * tau(s, py);
    const Interval rhs = eval_box(s.s0, px, py);
    ASSERT_FALSE((lhs - rhs).positive() || (lhs - rhs).negative());
  }
}

TEST(Seedmap, ThetaVanishesAtOrigin) {
  const GeneratingSeed s = seed();
  EXPECT_LE(mag(s.Theta0(0, 0)), 2 * std::numeric_limits<double>::denorm_min());
  EXPECT_TRUE(s.cconst.positive());
}

TEST(Seedmap, LoadErrors) {
  YSlices t = builtin_table();
  t.c[0] = pt(0.5);
  EXPECT_THROW(load_seed(t, pt(1.75), pt(0.0)), InvariantError);
  EXPECT_THROW(load_seed(builtin_table(), pt(0.0), pt(0.0)), ConfigError);
  EXPECT_THROW(load_seed(builtin_table(), pt(1.75), pt(-1.0)), ConfigError);
  EXPECT_THROW(load_seed(parse_coefficient_table_text("c 0 1\nb 0 1\na 0 1\nd 0 1\n"), pt(1.75), pt(0.0)),
               ParseError);
}

TEST(Seedmap, ShiftedSeedHasThetaAtShift) {
  const GeneratingSeed s = load_seed(builtin_table(), pt(1.75), pt(0.0), pt(0.125));
  const Interval direct = eval_box(s.sigma0, pt(0.125), pt(0.0));
  EXPECT_FALSE((direct - s.theta0).positive() || (direct - s.theta0).negative());
}
