#include "pdcert/midpoint.hpp"

#include <algorithm>

#include "pdcert/errors.hpp"

namespace pdcert {

namespace {

// P(x) + P(y) - 2 P(0)
BiPoly zero_at_origin_part(const UniPoly& p) {
  const int n = std::max(0, p.degree());
  BiPoly q(n, n);
  for (int i = 1; i <= p.degree(); ++i) {
    q(i, 0) = p[i];
    q(0, i) = p[i];
  }
  return q;
}

Interval up(double x) { return Interval::point(x); }

}  // namespace

AbcSplit split_abc(const GeneratingSeed& seed) {
  const UniPoly ct = ctilde(seed);
  AbcSplit s;
  s.upsilon0 = 2.0 * seed.table.a[0];
  s.beta0 = 2.0 * seed.table.b[0];
  s.gamma0 = 2.0 * ct[0];
  s.upsilon = zero_at_origin_part(seed.table.a);
  s.beta = zero_at_origin_part(seed.table.b);
  s.gamma = zero_at_origin_part(ct);
  return s;
}

F12Bounds f1f2_bounds(const AbcSplit& abc, const Interval& r) {
  F12Bounds f;
  const Interval beta0sq = sqr(abc.beta0);
  f.Q = 1.0 - 4.0 * abc.upsilon0 * abc.gamma0 / beta0sq;

  const BiPoly bb = padd(pscale(abc.beta, 2.0 * abc.beta0), pmul(abc.beta, abc.beta));
  const Interval norm_bb = polydisc_bound(bb, r, r);
  f.denom = beta0sq - norm_bb;
  if (!f.denom.positive()) {
    throw DenominatorError("beta0^2 - |2 beta0 beta + beta^2|_r is not positive at r = " + hex(r));
  }

  const BiPoly cross = padd(padd(pscale(abc.gamma, abc.upsilon0), pscale(abc.upsilon, abc.gamma0)),
                            pmul(abc.upsilon, abc.gamma));
  const Interval k = 4.0 * abc.upsilon0 * abc.gamma0 / beta0sq;

  f.F1bound = up(mag(k)) * norm_bb / f.denom;
  f.F2bound = 4.0 * polydisc_bound(cross, r, r) / f.denom;

  const BiPoly numer = psub(pscale(bb, k), pscale(cross, up(4.0)));
  f.combined = polydisc_bound(numer, r, r) / f.denom;

  const double split_hi = (f.F1bound + f.F2bound).hi();
  f.E = up(std::min(split_hi, f.combined.hi()));
  return f;
}

MidpointBounds z0_sup_bound(const GeneratingSeed& seed, const Interval& r) {
  if (r.lo() < 0.0) throw DomainError("negative radius");
  const AbcSplit abc = split_abc(seed);
  MidpointBounds mb;
  mb.r = r;
  mb.upsilon0 = abc.upsilon0;
  mb.beta0 = abc.beta0;
  mb.gamma0 = abc.gamma0;
  mb.normUpsilon = polydisc_bound(abc.upsilon, r, r);
  mb.normBeta = polydisc_bound(abc.beta, r, r);
  mb.normGamma = polydisc_bound(abc.gamma, r, r);
  mb.f12 = f1f2_bounds(abc, r);
  mb.z00 = z0_at_origin(abc);

  const Interval ups_gap = up(mig(abc.upsilon0)) - mb.normUpsilon;
  if (!ups_gap.positive()) throw DomainError("|upsilon0| > |upsilon|_r fails at r = " + hex(r));
  const Interval low = up(mb.f12.Q.lo()) - mb.f12.E;
  if (!low.positive()) throw DomainError("radicand not bounded away from zero at r = " + hex(r));

  const Interval prefactor = (up(mag(abc.beta0)) + mb.normBeta) / (2.0 * ups_gap);
  const Interval rad = (up(mb.f12.Q.hi()) + mb.f12.E + 1.0) - 2.0 * sqrt(low);
  // rad >= (sqrt(Q.lo - E) - 1)^2 >= 0 exactly; only its upper end matters.
  const Interval root = sqrt(Interval(std::max(0.0, rad.lo()), std::max(0.0, rad.hi())));
  mb.t = prefactor * root;
  return mb;
}

bool z0_analytic_check(const GeneratingSeed& seed, const Interval& r) {
  try {
    z0_sup_bound(seed, r);
    return true;
  } catch (const CertError&) {
    return false;
  }
}

bool z0_literal_split_check(const GeneratingSeed& seed, const Interval& r) {
  try {
    const AbcSplit abc = split_abc(seed);
    const F12Bounds f = f1f2_bounds(abc, r);
    const Interval ups_gap = up(mig(abc.upsilon0)) - polydisc_bound(abc.upsilon, r, r);
    return ups_gap.positive() && (up(f.Q.lo()) - (f.F1bound + f.F2bound)).positive();
  } catch (const CertError&) {
    return false;
  }
}

Interval z0_at_origin(const AbcSplit& abc) {
  const Interval Q = 1.0 - 4.0 * abc.upsilon0 * abc.gamma0 / sqr(abc.beta0);
  if (!Q.positive()) throw DomainError("radicand at the origin is not positive");
  return abc.beta0 / (2.0 * abc.upsilon0) * (sqrt(Q) - 1.0);
}

}  // namespace pdcert
