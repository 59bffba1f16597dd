#pragma once

#include <string>

#include "pdcert/ivreal.hpp"
#include "pdcert/polyball.hpp"

namespace pdcert {

/**
 * The seed generating function
 *   s0(x,y) = D0(x) y^3 + A0(x) y^2 + B0(x) y + C0(x)
 * and the objects derived from it:
 *   tau(y)    = -2 a0 y^2 - 2 b0 y           (a0 = A0(0), b0 = B0(0))
 *   sigma0    = s0 + tau/2
 *   Sigma0    = sigma0(x + p, y)
 *   theta0    = Sigma0(0, 0)
 *   Theta0    = Sigma0 - theta0
 *   c         = b0^2 - 4 a0 theta0
 */
struct GeneratingSeed {
  YSlices table;
  BiPoly s0;
  BiPoly s1;
  BiPoly sigma0;
  BiPoly Sigma0;
  BiPoly Theta0;
  BiPoly dTheta0;  ///< derivative of Theta0 in y
  Interval a0;
  Interval b0;
  Interval theta0;
  Interval cconst;
  Interval shift;
  Interval rho;
  Interval delta;
  std::string table_hash;
};

/// Text of the builtin coefficient table (coefficient-table format).
const std::string& builtin_table_text();
YSlices builtin_table();

/// SHA-256 (hex) of the canonical hex serialization of a table.
std::string table_hash(const YSlices& table);

/**
 * Assembles the seed.  Requires 7 entries (x-degree 0..6) in each column;
 * throws ParseError otherwise, InvariantError if s0(0,0) != 1 or c is not
 * certified positive.
 */
GeneratingSeed load_seed(const YSlices& table, const Interval& rho, const Interval& delta,
                         const Interval& shift = Interval::point(0.0));

/// x-degree <= 2 truncation of s0.
BiPoly make_s1(const GeneratingSeed& seed);

struct Quadratic1 {
  Interval A1;
  Interval B1;
  Interval C1;
};
/// A1(1), B1(1), C1(1) where s1(x, y) = A1(y) x^2 + B1(y) x + C1(y).
Quadratic1 a1b1c1_at_1(const GeneratingSeed& seed);

/// C0 + [-rho^3, rho^3] D0; contains C0(x) + y^3 D0(x) for all |y| <= rho.
UniPoly ctilde(const GeneratingSeed& seed);

/// tau(y) = -2 a0 y^2 - 2 b0 y.
Interval tau(const GeneratingSeed& seed, const Interval& y);

/**
 * Inverse branch of tau with nu(0) = 0:
 *   nu(u) = (-b0 - sqrt(b0^2 - 2 a0 u)) / (2 a0) = u / (sqrt(b0^2 - 2 a0 u) - b0).
 * Throws DomainError if the radicand may be negative.
 */
Interval nu_inverse(const GeneratingSeed& seed, const Interval& u);

/// Human-readable name of the branch chosen by nu_inverse.
inline constexpr const char* kNuBranch = "nu(u)=(-b0-sqrt(b0^2-2*a0*u))/(2*a0), nu(0)=0";

}  // namespace pdcert
