#include "pdcert/contraction.hpp"

#include "pdcert/errors.hpp"
#include "pdcert/polyball.hpp"

namespace pdcert {

namespace {

Interval pt(double x) { return Interval::point(x); }

// c - 4|a0| |Theta0|_(r1,r2)
Interval theta_gap(const GeneratingSeed& seed, const Interval& r1, const Interval& r2) {
  return seed.cconst - 4.0 * abs(seed.a0) * polydisc_bound(seed.Theta0, r1, r2);
}

}  // namespace

DcM dc0_and_M(const GeneratingSeed& seed, const Interval& r, const Interval& t) {
  const Interval gap = theta_gap(seed, r, t);
  if (!gap.positive()) throw DomainError("c - 4|a0| |Theta0|_(r,t) is not positive");
  DcM out;
  out.dc0 = polydisc_bound(seed.dTheta0, r, t) / sqrt(gap);
  if (!(out.dc0.hi() < 1.0)) throw NotContractive("|DC0[Z0']| bound is not below 1");
  out.Mbar = 1.0 / (1.0 - out.dc0);
  return out;
}

Interval epsN_bound(const GeneratingSeed& seed, const Interval& delta, const Interval& r,
                    const Interval& t) {
  const Interval den = theta_gap(seed, r, t) - 4.0 * abs(seed.a0) * delta;
  if (!den.positive()) throw DenominatorError("epsN denominator is not positive");
  return 2.0 * delta * sqrt(2.0 * seed.cconst) / den;
}

I123 i123_bounds(const GeneratingSeed& seed, const Interval& delta, const Interval& r,
                 const Interval& t, const Interval& epsBall, const Interval& Mbar) {
  const Interval a0abs = abs(seed.a0);
  const Interval& rho = seed.rho;
  I123 o;
  o.s = t + Mbar * epsBall;
  if (!o.s.positive()) throw DomainError("I1: shadow radius s must be positive");
  if (!(rho - o.s).positive()) throw DomainError("I1: shadow radius s must be below rho");

  o.n = 1.0 / log(rho / o.s);
  o.m = o.n * pow(o.s, o.n - 1.0) / pow(rho, o.n);

  o.X = theta_gap(seed, r, o.s) - 4.0 * a0abs * delta;
  if (!o.X.positive()) throw DomainError("I1/I2: c - 4|a0| |Theta0|_(r,s) - 4|a0| delta is not positive");
  o.I1 = o.m * delta / sqrt(o.X);

  const Interval x3 = o.X / 3.0;
  o.I2 = 4.0 * a0abs * delta * polydisc_bound(seed.dTheta0, r, o.s) / (2.0 * (x3 * sqrt(x3)));

  const Interval gap_rho = theta_gap(seed, r, rho);
  if (!gap_rho.positive()) throw DomainError("I3: c - 4|a0| |Theta0|_(r,rho) is not positive");
  o.I3 = (Mbar * epsBall / (rho - o.s)) * polydisc_bound(seed.dTheta0, r, rho) / sqrt(gap_rho);

  o.Dbar = (o.I1 + o.I2 + o.I3) * Mbar;
  return o;
}

bool verify_cmp(const Interval& epsN, const Interval& Dbar, const Interval& Mbar,
                const Interval& epsBall) {
  if (!(Dbar.hi() < 1.0) || !(Mbar.lo() > 0.0)) return false;
  const Interval rhs = (1.0 - pt(Dbar.hi())) * pt(epsBall.lo()) / pt(Mbar.hi());
  return epsN.hi() < rhs.lo();
}

ContractionBounds contraction_bounds(const GeneratingSeed& seed, const Interval& delta,
                                     const Interval& r, const Interval& t, const Interval& epsBall) {
  ContractionBounds b;
  b.delta = delta;
  b.epsBall = epsBall;
  b.r = r;
  b.t = upper_point(t);
  const DcM dm = dc0_and_M(seed, r, b.t);
  b.dc0 = dm.dc0;
  b.Mbar = upper_point(dm.Mbar);
  b.epsN = epsN_bound(seed, delta, r, b.t);
  b.terms = i123_bounds(seed, delta, r, b.t, epsBall, b.Mbar);
  b.cmpRhs = (1.0 - pt(b.terms.Dbar.hi())) * pt(epsBall.lo()) / b.Mbar;
  b.cmp = verify_cmp(b.epsN, b.terms.Dbar, b.Mbar, epsBall);

  const Interval a4 = 4.0 * abs(seed.a0);
  if (delta.lo() > 0.0) {
    const Interval d4 = a4 * delta;
    b.R = theta_gap(seed, r, b.t) / d4;
    b.Rtilde = theta_gap(seed, r, b.terms.s) / d4 - (b.terms.X / 3.0) / d4;
  }
  if (epsBall.lo() > 0.0) b.Rhat = (seed.rho - b.t) / (b.Mbar * epsBall);
  return b;
}

double max_delta_for_cmp(const GeneratingSeed& seed, const Interval& r, const Interval& t,
                         const Interval& epsBall, double lo, double hi, int iterations) {
  auto holds = [&](double d) {
    try {
      return contraction_bounds(seed, pt(d), r, t, epsBall).cmp;
    } catch (const CertError&) {
      return false;
    }
  };
  if (!holds(lo)) return lo;
  if (holds(hi)) return hi;
  for (int k = 0; k < iterations; ++k) {
    const double mid = 0.5 * (lo + hi);
    if (holds(mid)) lo = mid; else hi = mid;
  }
  return lo;
}

}  // namespace pdcert
