#pragma once

#include "pdcert/ivreal.hpp"
#include "pdcert/seedmap.hpp"

namespace pdcert {

/**
 * Root in (-1, 0) of A1 l^2 + B1 l + 2 C1 = 0, by the cancellation-free
 * quadratic formula.  Throws NoRealRoot when the discriminant is not
 * certified positive or no root meets (-1, 0), AmbiguousRoot when both roots
 * (or a root straddling an end point) meet it.
 */
Interval lambda_s1(const Quadratic1& q);
Interval lambda_s1(const GeneratingSeed& seed);

/**
 * Small root of A1 d^2 + Bhat d + C = 0 for all C in the interval,
 *   d = -2C / (Bhat + sgn(Bhat) sqrt(Bhat^2 - 4 A1 C)),
 * as the hull of the values at the end points of C (d is monotone in C).
 */
Interval delta_lambda(const Interval& A1, const Interval& Bhat, const Interval& C);

struct LambdaEnclosure {
  Interval lambdaS1;
  Interval normS0S1;    ///< |s0 - s1|_rho
  Interval deltaTilde;  ///< |s0 - s1|_rho + delta
  Interval Bhat;        ///< 2 A1 lambdaS1 + B1
  Interval coarse;      ///< lambdaS1 + delta_lambda(C in [-2 deltaTilde, 2 deltaTilde])
  Interval tail;        ///< (s0 - s1)(coarse, 1)
  Interval refined;     ///< lambdaS1 + delta_lambda(C in tail + [-2 delta, 2 delta])
  Interval lambda;      ///< coarse intersected with refined
};

/**
 * Enclosure of lambda[s] over the real-coefficient delta-ball about s0.
 * With h = s - s1, C = h(lambda, 1) + h(0, 1).  The coarse pass bounds |C|
 * by 2 |h|_rho; the refined pass uses (s0 - s1)(0, 1) = 0 and encloses the
 * known part (s0 - s1)(lambda, 1) over the coarse enclosure.
 */
LambdaEnclosure lambda_enclosure(const GeneratingSeed& seed, const Interval& delta);

/// C0(z00 + [-Mbar eps, Mbar eps]) + [-delta, delta].
Interval mu_enclosure(const GeneratingSeed& seed, const Interval& delta, const Interval& Mbar,
                      const Interval& epsBall, const Interval& z00);

}  // namespace pdcert
