#pragma once

#include <array>
#include <optional>

#include "pdcert/contraction.hpp"
#include "pdcert/ivreal.hpp"
#include "pdcert/seedmap.hpp"

namespace pdcert {

struct PrimedSetup {
  Interval kappa;
  Interval rPrime;    ///< kappa r
  Interval rhoPrime;  ///< kappa rho
  Interval tPrime;    ///< bound on |Z0'|_{r'}
};

/// Throws the midpoint errors if Z0' is not certified analytic at r'.
PrimedSetup primed_setup(const GeneratingSeed& seed, const Interval& r, const Interval& kappa);

/// mag(lambda) rho'.hi <= rho.lo, with outward rounding.
bool lambda_domain_check(const Interval& lambdaEnc, const Interval& rhoPrime, const Interval& rho);

struct DzConstants {
  Interval sPrime;  ///< t' + M eps'
  Interval dz0;     ///< bound on the first Newton increment at (r', t')
  Interval C1const; ///< M^2 sqrt(c + 4|a0| (|Theta0|_(r',s') + delta)) / (2|a0| (rho - s'))
  Interval C2const; ///< Dbar recomputed at (r', t', eps', M)
  I123 terms;
};

DzConstants dz0_and_constants(const GeneratingSeed& seed, const Interval& delta,
                              const Interval& rPrime, const Interval& tPrime,
                              const Interval& epsPrime, const Interval& Mbar);

struct KSigmaGamma {
  Interval K0;          ///< C1 dz0 / (rho - s' - M dz0) + C2
  Interval SigmaBound;  ///< dz0 / (1 - K0)
  Interval gammaPrime;  ///< M Sigma
};

/// Throws DenominatorError if rho - s' - M dz0 <= 0, NotContractive if K0 >= 1.
KSigmaGamma k0_sigma_gamma(const Interval& dz0, const Interval& C1const, const Interval& C2const,
                           const Interval& rho, const Interval& sPrime, const Interval& Mbar);

/// t'.hi + gamma'.hi < rho.lo, Sigma.hi <= eps'.lo and the lambda check.
bool verify_compactness(const Interval& tPrime, const Interval& gammaPrime, const Interval& rho,
                        const Interval& SigmaBound, const Interval& epsPrime, bool lambdaCheck);

struct CompactnessBounds {
  PrimedSetup primed;
  Interval dc0Prime;
  Interval MPrime;
  Interval epsPrime;
  bool epsPrimeAuto = true;
  Interval C2pass0;  ///< C2 at eps' = dz0, used to seed eps' when automatic
  DzConstants dz;
  KSigmaGamma ksg;
  /// K_n bounds after n increments, K_n = C1 d_n/(rho - s' - M d_n) + C2 with
  /// d_n = K0^n dz0; each must not exceed K0.
  std::array<Interval, 3> chainK;
  bool chainOk = false;
  bool lambdaDomain = false;
  bool finalOk = false;
};

/**
 * Full compactness bound at inflation kappa.  eps' is taken from epsPrime
 * when given, otherwise 1.5 dz0 / (1 - C2(eps' = dz0)).  Errors from the
 * sub-bounds propagate.
 */
CompactnessBounds compactness_bounds(const GeneratingSeed& seed, const Interval& delta,
                                     const Interval& r, const Interval& kappa,
                                     const Interval& lambdaEnc,
                                     const std::optional<Interval>& epsPrime = std::nullopt);

/// Largest kappa in [lo, hi] (bisection) at which compactness still certifies.
double max_kappa(const GeneratingSeed& seed, const Interval& delta, const Interval& r,
                 const Interval& lambdaEnc, double lo, double hi, int iterations = 30);

}  // namespace pdcert
