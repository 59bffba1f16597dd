#pragma once

#include <array>
#include <istream>
#include <string>
#include <vector>

#include "pdcert/ivreal.hpp"

namespace pdcert {

/// Univariate polynomial with interval coefficients, c[i] multiplies x^i.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Interval> coeffs) : c_(std::move(coeffs)) {}

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  std::size_t size() const { return c_.size(); }
  const Interval& operator[](std::size_t i) const { return c_[i]; }
  Interval& operator[](std::size_t i) { return c_[i]; }
  const std::vector<Interval>& coeffs() const { return c_; }

  /// Horner evaluation over an interval argument.
  Interval eval(const Interval& x) const;

 private:
  std::vector<Interval> c_;
};

/**
 * Dense bivariate polynomial sum c(i,j) (x-center)^i (y-center)^j with
 * interval coefficients, 0 <= i <= deg_x, 0 <= j <= deg_y.
 *
 * The weighted l1 norm sum |c(i,j)| r1^i r2^j bounds the modulus of the
 * polynomial on the complex polydisc of radii (r1, r2) about (center, center).
 */
class BiPoly {
 public:
  BiPoly() : BiPoly(0, 0) {}
  BiPoly(int deg_x, int deg_y, double center = 0.0);

  static BiPoly constant(const Interval& v, double center = 0.0);
  /// p(x) embedded as a function of x only.
  static BiPoly in_x(const UniPoly& p, double center = 0.0);
  /// p(y) embedded as a function of y only.
  static BiPoly in_y(const UniPoly& p, double center = 0.0);

  int deg_x() const { return dx_; }
  int deg_y() const { return dy_; }
  double center() const { return center_; }

  const Interval& operator()(int i, int j) const { return c_[idx(i, j)]; }
  Interval& operator()(int i, int j) { return c_[idx(i, j)]; }
  /// Zero outside the stored grid.
  Interval coeff(int i, int j) const;

  /// Exchange the roles of x and y.
  BiPoly swapped() const;

 private:
  std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * (dy_ + 1) + j; }

  int dx_;
  int dy_;
  double center_;
  std::vector<Interval> c_;
};

/// Upper bound for sum |c(i,j)| rho^(i+j); requires rho.lo > 0.
Interval ell1_norm(const BiPoly& p, const Interval& rho);
/// Upper bound for sum |c(i,j)| r1^i r2^j, the sup of |p| on the polydisc.
Interval polydisc_bound(const BiPoly& p, const Interval& r1, const Interval& r2);
/// Encloses {p(x, y) : x in X, y in Y} (nested Horner).
Interval eval_box(const BiPoly& p, const Interval& X, const Interval& Y);

BiPoly padd(const BiPoly& p, const BiPoly& q);
BiPoly psub(const BiPoly& p, const BiPoly& q);
BiPoly pmul(const BiPoly& p, const BiPoly& q);
BiPoly pscale(const BiPoly& p, const Interval& k);
/// Derivative in the second variable.
BiPoly pdiff2(const BiPoly& p);
/// q(x, y) = p(x + p0, y), by binomial expansion.
BiPoly shift_x(const BiPoly& p, const Interval& p0);
/// Copy with all coefficients of x-degree > max_deg_x dropped.
BiPoly truncate_x(const BiPoly& p, int max_deg_x);

/// Regrouping s = D y^3 + A y^2 + B y + C.
struct YSlices {
  UniPoly d;
  UniPoly a;
  UniPoly b;
  UniPoly c;
};

/// Throws DegreeError if deg_y(s) > 3 with a nonzero coefficient there.
YSlices y_slices(const BiPoly& s);
BiPoly from_slices(const YSlices& s, double center = 0.0);

/**
 * Coefficient table: one entry per line, "<c|b|a|d> <i> <decimal>".
 * Blank lines and lines starting with '#' are ignored.  Values are enclosed
 * by width <= 1 ulp intervals.  Every column must list each index from 0 up
 * to the largest index used.
 */
YSlices parse_coefficient_table(std::istream& in);
YSlices parse_coefficient_table_text(const std::string& text);

}  // namespace pdcert
