#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "derived_values.hpp"
#include "pdcert/contraction.hpp"
#include "pdcert/errors.hpp"
#include "pdcert/midpoint.hpp"
#include "pdcert/seedmap.hpp"
#include "support.hpp"

using namespace pdcert;

namespace {

Interval pt(double x) { return Interval::point(x); }

const Interval kR = upper_point(parse_decimal("0.483119964599609"));
const Interval kDelta = upper_point(parse_decimal("0.00405550003051758"));
const Interval kEps = upper_point(parse_decimal("0.01465"));
const Interval kT = pt(derived::kTUp);
const Interval kM = pt(derived::kMbarUp);

GeneratingSeed seed() { return load_seed(builtin_table(), pt(1.75), kDelta); }

}  // namespace

TEST(Contraction, DerivativeAndNeumannBound) {
  const DcM dm = dc0_and_M(seed(), kR, kT);
  EXPECT_TRUE(testsupport::tight_upper(dm.dc0, derived::kDc0Dec, 1e-12));
  EXPECT_TRUE(testsupport::tight_upper(dm.Mbar, derived::kMbarDec, 1e-12));
  EXPECT_LE(dm.Mbar.hi(), 1.0430755615234375);
  EXPECT_LT(dm.dc0.hi(), 1.0);
}

TEST(Contraction, VanishingThetaGivesIdentity) {
  GeneratingSeed s = seed();
  s.Theta0 = BiPoly(s.Theta0.deg_x(), s.Theta0.deg_y());
  s.dTheta0 = BiPoly(s.dTheta0.deg_x(), s.dTheta0.deg_y());
  const DcM dm = dc0_and_M(s, kR, kT);
  EXPECT_EQ(dm.dc0, pt(0.0));
  EXPECT_EQ(dm.Mbar, pt(1.0));
}

TEST(Contraction, LargeTDegradesThenFails) {
  const GeneratingSeed s = seed();
  const DcM at3 = dc0_and_M(s, kR, pt(3.0));
  EXPECT_TRUE(testsupport::tight_upper(at3.dc0, derived::kDc0AtT3Dec, 1e-12));
  double prev = 0.0;
  for (double t = 1.0; t <= 5.0; t += 0.5) {
    const double d = dc0_and_M(s, kR, pt(t)).dc0.hi();
    ASSERT_GT(d, prev) << t;
    prev = d;
  }
  EXPECT_THROW(dc0_and_M(s, kR, pt(6.0)), DomainError);
}

TEST(Contraction, FirstStepBound) {
  const Interval e = epsN_bound(seed(), kDelta, kR, kT);
  EXPECT_TRUE(testsupport::tight_upper(e, derived::kEpsNDec, 1e-12));
  EXPECT_LT(e.hi(), 0.0137615203857422);
  const Interval e0 = epsN_bound(seed(), pt(0.0), kR, kT);
  EXPECT_EQ(e0.lo(), 0.0);
  EXPECT_LT(e0.hi(), 1e-300);
  const Interval e2 = epsN_bound(seed(), 2.0 * kDelta, kR, kT);
  EXPECT_GT(e2.lo(), 2.0 * e.hi());
}

TEST(Contraction, DerivativeOfNewtonMap) {
  const I123 terms = i123_bounds(seed(), kDelta, kR, kT, kEps, kM);
  EXPECT_TRUE(testsupport::tight_upper(terms.Dbar, derived::kDbarDec, 1e-11));
  EXPECT_LE(terms.Dbar.hi(), 0.0125999450683594);
  EXPECT_LT(terms.Dbar.hi(), 1.0);
}

TEST(Contraction, NoPerturbationGivesZeroDerivative) {
  const I123 terms = i123_bounds(seed(), pt(0.0), kR, kT, pt(0.0), kM);
  EXPECT_EQ(terms.I1.hi(), 0.0);
  EXPECT_EQ(terms.I2.hi(), 0.0);
  EXPECT_EQ(terms.I3.hi(), 0.0);
  EXPECT_EQ(terms.Dbar.hi(), 0.0);
}

TEST(Contraction, ThreeHalvesPowerPathsAgree) {
  const I123 terms = i123_bounds(seed(), kDelta, kR, kT, kEps, kM);
  const Interval x3 = terms.X / 3.0;
  const Interval via_pow = pow(x3, Interval::point(1.5));
  const Interval via_sqrt = terms.X * sqrt(terms.X) / pow(Interval::point(3.0), Interval::point(1.5));
  const double ulp = std::numeric_limits<double>::epsilon() * via_pow.mid();
  EXPECT_LE(std::fabs(via_pow.mid() - via_sqrt.mid()), 8 * ulp);
  EXPECT_FALSE((via_pow - x3 * sqrt(x3)).positive() || (via_pow - x3 * sqrt(x3)).negative());
}

TEST(Contraction, CmpAtDefaults) {
  const ContractionBounds b = contraction_bounds(seed(), kDelta, kR, kT, kEps);
  EXPECT_TRUE(b.cmp);
  EXPECT_TRUE(testsupport::tight_lower(b.cmpRhs, derived::kCmpRhsDec, 1e-11));
  ASSERT_TRUE(b.R && b.Rtilde && b.Rhat);
  EXPECT_GT(b.R->lo(), 1.0);
  EXPECT_GT(b.Rtilde->lo(), 1.0);
  EXPECT_GT(b.Rhat->lo(), 1.0);
  const Interval stay = b.Mbar * b.epsN / (1.0 - b.terms.Dbar);
  EXPECT_LE(stay.hi(), (b.Mbar * kEps).lo());
}

TEST(Contraction, CauchyRadiiAbsentWithoutPerturbation) {
  const ContractionBounds b = contraction_bounds(seed(), pt(0.0), kR, kT, pt(0.0));
  EXPECT_FALSE(b.R.has_value());
  EXPECT_FALSE(b.Rtilde.has_value());
  EXPECT_FALSE(b.Rhat.has_value());
}

TEST(Contraction, CmpRejectsLargeStep) {
  EXPECT_FALSE(verify_cmp(pt(0.02), pt(0.5), pt(2.0), pt(0.01465)));
}

TEST(Contraction, MaximalDeltaExceedsDefault) {
  const double flip = max_delta_for_cmp(seed(), kR, kT, kEps, 0.0, 0.05);
  EXPECT_GT(flip, kDelta.hi());
  EXPECT_LT(flip, 0.05);
}

TEST(ContractionProperty, MonotoneInDelta) {
  const GeneratingSeed s = seed();
  double prev[4] = {0, 0, 0, 0};
  for (int k = 0; k < 5; ++k) {
    const Interval d = pt(kDelta.hi() * (0.5 + 0.25 * k));
    const double eN = epsN_bound(s, d, kR, kT).hi();
    const I123 t = i123_bounds(s, d, kR, kT, kEps, kM);
    const double cur[4] = {eN, t.I1.hi(), t.I2.hi(), t.I3.hi()};
    for (int q = 0; q < 4; ++q) {
      ASSERT_GE(cur[q], prev[q]) << "term " << q << " step " << k;
      prev[q] = cur[q];
    }
  }
}

TEST(ContractionProperty, ContainmentUnderPerturbations) {
  const GeneratingSeed s = seed();
  for (const auto& p : derived::kPerturbations) {
    const DcM dm = dc0_and_M(s, pt(p.r), pt(p.t));
    ASSERT_TRUE(testsupport::tight_upper(dm.dc0, p.dc0, 1e-12)) << p.r;
    ASSERT_TRUE(testsupport::tight_upper(epsN_bound(s, pt(p.delta), pt(p.r), pt(p.t)), p.epsN, 1e-12)) << p.r;
    const I123 t = i123_bounds(s, pt(p.delta), pt(p.r), pt(p.t), pt(p.eps), pt(p.Mbar));
    ASSERT_TRUE(testsupport::tight_upper(t.Dbar, p.Dbar, 1e-11)) << p.r;
  }
}

TEST(ContractionProperty, MidpointFeedsContraction) {
  const GeneratingSeed s = seed();
  const MidpointBounds mb = z0_sup_bound(s, kR);
  EXPECT_NEAR(mb.t.hi(), derived::kTUp, 1e-14);
  const ContractionBounds b = contraction_bounds(s, kDelta, kR, mb.t, kEps);
  EXPECT_TRUE(b.cmp);
}
