#pragma once

#include <optional>

#include "pdcert/ivreal.hpp"
#include "pdcert/seedmap.hpp"

namespace pdcert {

struct DcM {
  Interval dc0;   ///< |d2 Theta0|_(r,t) / sqrt(c - 4|a0| |Theta0|_(r,t))
  Interval Mbar;  ///< 1 / (1 - dc0)
};

/// Throws DomainError if the radicand is not positive, NotContractive if dc0 >= 1.
DcM dc0_and_M(const GeneratingSeed& seed, const Interval& r, const Interval& t);

/// 2 delta sqrt(2c) / (c - 4|a0| |Theta0|_(r,t) - 4|a0| delta); DenominatorError.
Interval epsN_bound(const GeneratingSeed& seed, const Interval& delta, const Interval& r,
                    const Interval& t);

struct I123 {
  Interval s;  ///< shadow radius t + Mbar eps
  Interval n;  ///< 1 / ln(rho / s)
  Interval m;  ///< n s^(n-1) / rho^n
  Interval X;  ///< c - 4|a0| |Theta0|_(r,s) - 4|a0| delta
  Interval I1;
  Interval I2;
  Interval I3;
  Interval Dbar;  ///< (I1 + I2 + I3) Mbar
};

/**
 * I1 = m delta / sqrt(X)
 * I2 = 4|a0| delta |d2 Theta0|_(r,s) / (2 (X/3)^(3/2))
 * I3 = (Mbar eps / (rho - s)) |d2 Theta0|_(r,rho) / sqrt(c - 4|a0| |Theta0|_(r,rho))
 * Throws DomainError naming the failing term.
 */
I123 i123_bounds(const GeneratingSeed& seed, const Interval& delta, const Interval& r,
                 const Interval& t, const Interval& epsBall, const Interval& Mbar);

/// epsN.hi < (1 - Dbar.hi) epsBall.lo / Mbar.hi, evaluated with outward rounding.
bool verify_cmp(const Interval& epsN, const Interval& Dbar, const Interval& Mbar,
                const Interval& epsBall);

struct ContractionBounds {
  Interval delta;
  Interval epsBall;
  Interval r;
  Interval t;
  Interval dc0;
  Interval Mbar;
  Interval epsN;
  I123 terms;
  Interval cmpRhs;  ///< (1 - Dbar) epsBall / Mbar
  bool cmp = false;
  std::optional<Interval> R;       ///< (c - 4|a0| |Theta0|_(r,t)) / (4|a0| delta)
  std::optional<Interval> Rtilde;  ///< radius of the reduced disc for I2
  std::optional<Interval> Rhat;    ///< (rho - t) / (Mbar eps)
};

/// All bounds at (r, t); upper ends of t and Mbar are carried as point values.
ContractionBounds contraction_bounds(const GeneratingSeed& seed, const Interval& delta,
                                     const Interval& r, const Interval& t, const Interval& epsBall);

/**
 * Largest delta in [lo, hi] (to bisection resolution) for which the CMP
 * inequality still certifies; returns lo if it fails already at lo.
 */
double max_delta_for_cmp(const GeneratingSeed& seed, const Interval& r, const Interval& t,
                         const Interval& epsBall, double lo, double hi, int iterations = 40);

}  // namespace pdcert
