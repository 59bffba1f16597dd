#pragma once

#include "pdcert/ivreal.hpp"
#include "pdcert/polyball.hpp"
#include "pdcert/seedmap.hpp"

namespace pdcert {

/**
 * Constant/zero-at-origin split of the midpoint quadratic coefficients:
 *   upsilon0 + upsilon(x,y) = A0(x) + A0(y)
 *   beta0    + beta(x,y)    = B0(x) + B0(y)
 *   gamma0   + gamma(x,y)   = Ct0(x) + Ct0(y),  Ct0 = ctilde(seed)
 */
struct AbcSplit {
  Interval upsilon0;
  Interval beta0;
  Interval gamma0;
  BiPoly upsilon;
  BiPoly beta;
  BiPoly gamma;
};

AbcSplit split_abc(const GeneratingSeed& seed);

/**
 * Bounds on the perturbation of the radicand
 *   1 - 4 (upsilon0+upsilon)(gamma0+gamma)/(beta0+beta)^2 = Q + F1 - F2,
 *   Q = 1 - 4 upsilon0 gamma0 / beta0^2,
 * on the bi-disk of radius r.  F1bound and F2bound bound |F1|_r and |F2|_r
 * separately; combined bounds |F1 - F2|_r through the single numerator
 *   N = (4 upsilon0 gamma0/beta0^2)(2 beta0 beta + beta^2)
 *       - 4 (upsilon0 gamma + upsilon gamma0 + upsilon gamma),
 * so E = min(F1bound + F2bound, combined) bounds the perturbation.
 */
struct F12Bounds {
  Interval Q;
  Interval denom;  ///< beta0^2 - |2 beta0 beta + beta^2|_r
  Interval F1bound;
  Interval F2bound;
  Interval combined;
  Interval E;
};

/// Throws DenominatorError if beta0^2 - |2 beta0 beta + beta^2|_r is not positive.
F12Bounds f1f2_bounds(const AbcSplit& abc, const Interval& r);

struct MidpointBounds {
  Interval r;
  Interval upsilon0;
  Interval beta0;
  Interval gamma0;
  Interval normUpsilon;
  Interval normBeta;
  Interval normGamma;
  F12Bounds f12;
  Interval t;    ///< upper bound on |Z0'|_r
  Interval z00;  ///< enclosure of Z0'(0,0)
};

/**
 * Upper bound t on |Z0'|_r:
 *   (|beta0| + |beta|_r) / (2 (|upsilon0| - |upsilon|_r)) * sup |sqrt(w) - 1|
 * over the complex disc |w - Q| <= E, using
 *   |sqrt(w) - 1|^2 <= |w| + 1 - 2 Re sqrt(w) <= (Q.hi + E) + 1 - 2 sqrt(Q.lo - E).
 * Throws DomainError when |upsilon0| > |upsilon|_r or Q.lo > E fails.
 */
MidpointBounds z0_sup_bound(const GeneratingSeed& seed, const Interval& r);

/// True iff |upsilon0| > |upsilon|_r and Q > E certify at radius r.
bool z0_analytic_check(const GeneratingSeed& seed, const Interval& r);

/// The separate-bound form of the analyticity test: Q > F1bound + F2bound.
bool z0_literal_split_check(const GeneratingSeed& seed, const Interval& r);

/// beta0 / (2 upsilon0) * (sqrt(Q) - 1).
Interval z0_at_origin(const AbcSplit& abc);

}  // namespace pdcert
