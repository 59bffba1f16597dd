#include "pdcert/compactness.hpp"

#include "pdcert/errors.hpp"
#include "pdcert/midpoint.hpp"
#include "pdcert/polyball.hpp"

namespace pdcert {

namespace {

Interval pt(double x) { return Interval::point(x); }

Interval k_of(const Interval& d, const Interval& C1, const Interval& C2, const Interval& rho,
              const Interval& sPrime, const Interval& Mbar) {
  const Interval den = rho - sPrime - Mbar * d;
  if (!den.positive()) throw DenominatorError("rho - s' - M |dz| is not positive");
  return C1 * d / den + C2;
}

}  // namespace

PrimedSetup primed_setup(const GeneratingSeed& seed, const Interval& r, const Interval& kappa) {
  PrimedSetup p;
  p.kappa = kappa;
  p.rPrime = upper_point(kappa * r);
  p.rhoPrime = kappa * seed.rho;
  p.tPrime = upper_point(z0_sup_bound(seed, p.rPrime).t);
  return p;
}

bool lambda_domain_check(const Interval& lambdaEnc, const Interval& rhoPrime, const Interval& rho) {
  return (pt(mag(lambdaEnc)) * pt(rhoPrime.hi())).hi() <= rho.lo();
}

DzConstants dz0_and_constants(const GeneratingSeed& seed, const Interval& delta,
                              const Interval& rPrime, const Interval& tPrime,
                              const Interval& epsPrime, const Interval& Mbar) {
  DzConstants d;
  d.dz0 = epsN_bound(seed, delta, rPrime, tPrime);
  d.terms = i123_bounds(seed, delta, rPrime, tPrime, epsPrime, Mbar);
  d.sPrime = d.terms.s;
  const Interval a0abs = abs(seed.a0);
  const Interval gap = seed.rho - d.sPrime;
  if (!gap.positive()) throw DomainError("C1: s' must be below rho");
  const Interval rad = seed.cconst + 4.0 * a0abs * (polydisc_bound(seed.Theta0, rPrime, d.sPrime) + delta);
  d.C1const = sqr(Mbar) * sqrt(rad) / (2.0 * a0abs * gap);
  d.C2const = d.terms.Dbar;
  return d;
}

KSigmaGamma k0_sigma_gamma(const Interval& dz0, const Interval& C1const, const Interval& C2const,
                           const Interval& rho, const Interval& sPrime, const Interval& Mbar) {
  KSigmaGamma k;
  k.K0 = k_of(dz0, C1const, C2const, rho, sPrime, Mbar);
  if (!(k.K0.hi() < 1.0)) throw NotContractive("K0 is not below 1");
  k.SigmaBound = dz0 / (1.0 - pt(k.K0.hi()));
  k.gammaPrime = Mbar * k.SigmaBound;
  return k;
}

bool verify_compactness(const Interval& tPrime, const Interval& gammaPrime, const Interval& rho,
                        const Interval& SigmaBound, const Interval& epsPrime, bool lambdaCheck) {
  const bool reach = (pt(tPrime.hi()) + pt(gammaPrime.hi())).hi() < rho.lo();
  const bool sigma = SigmaBound.hi() <= epsPrime.lo();
  return reach && sigma && lambdaCheck;
}

CompactnessBounds compactness_bounds(const GeneratingSeed& seed, const Interval& delta,
                                     const Interval& r, const Interval& kappa,
                                     const Interval& lambdaEnc,
                                     const std::optional<Interval>& epsPrime) {
  CompactnessBounds b;
  b.primed = primed_setup(seed, r, kappa);
  const DcM dm = dc0_and_M(seed, b.primed.rPrime, b.primed.tPrime);
  b.dc0Prime = dm.dc0;
  b.MPrime = upper_point(dm.Mbar);

  const Interval dz0 = epsN_bound(seed, delta, b.primed.rPrime, b.primed.tPrime);
  if (epsPrime) {
    b.epsPrimeAuto = false;
    b.epsPrime = *epsPrime;
  } else {
    b.C2pass0 = i123_bounds(seed, delta, b.primed.rPrime, b.primed.tPrime, upper_point(dz0), b.MPrime).Dbar;
    if (!(b.C2pass0.hi() < 1.0)) throw NotContractive("C2 at eps' = dz0 is not below 1");
    b.epsPrime = upper_point(1.5 * pt(dz0.hi()) / (1.0 - pt(b.C2pass0.hi())));
  }

  b.dz = dz0_and_constants(seed, delta, b.primed.rPrime, b.primed.tPrime, b.epsPrime, b.MPrime);
  b.ksg = k0_sigma_gamma(b.dz.dz0, b.dz.C1const, b.dz.C2const, seed.rho, b.dz.sPrime, b.MPrime);

  b.chainOk = true;
  Interval d = b.dz.dz0;
  for (auto& k : b.chainK) {
    d = pt(b.ksg.K0.hi()) * d;
    k = k_of(pt(d.hi()), b.dz.C1const, b.dz.C2const, seed.rho, b.dz.sPrime, b.MPrime);
    b.chainOk = b.chainOk && k.hi() <= b.ksg.K0.hi();
  }

  b.lambdaDomain = lambda_domain_check(lambdaEnc, b.primed.rhoPrime, seed.rho);
  b.finalOk = verify_compactness(b.primed.tPrime, b.ksg.gammaPrime, seed.rho, b.ksg.SigmaBound,
                                 b.epsPrime, b.lambdaDomain);
  return b;
}

double max_kappa(const GeneratingSeed& seed, const Interval& delta, const Interval& r,
                 const Interval& lambdaEnc, double lo, double hi, int iterations) {
  auto holds = [&](double k) {
    try {
      const auto b = compactness_bounds(seed, delta, r, pt(k), lambdaEnc);
      return b.finalOk && b.chainOk;
    } catch (const CertError&) {
      return false;
    }
  };
  if (!holds(lo)) return lo;
  if (holds(hi)) return hi;
  for (int i = 0; i < iterations; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (holds(mid)) lo = mid; else hi = mid;
  }
  return lo;
}

}  // namespace pdcert
