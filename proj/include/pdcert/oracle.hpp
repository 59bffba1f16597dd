#pragma once

#include <complex>
#include <string>
#include <vector>

#include "pdcert/certify.hpp"
#include "pdcert/polyball.hpp"

namespace pdcert::oracle {

/// Plain floating-point truncation sum c(i,j) x^i y^j, 0 <= i <= nx, 0 <= j <= ny.
struct TruncatedMap {
  int nx = 0;
  int ny = 0;
  std::vector<double> c;
  double lambda = 0.0;
  double mu = 0.0;

  TruncatedMap() = default;
  TruncatedMap(int nx_, int ny_) : nx(nx_), ny(ny_), c(static_cast<std::size_t>((nx_ + 1) * (ny_ + 1)), 0.0) {}

  double& operator()(int i, int j) { return c[static_cast<std::size_t>(i * (ny + 1) + j)]; }
  double operator()(int i, int j) const { return c[static_cast<std::size_t>(i * (ny + 1) + j)]; }

  std::complex<double> eval(std::complex<double> x, std::complex<double> y) const;
  /// Partial derivative in the second variable.
  std::complex<double> eval_d2(std::complex<double> x, std::complex<double> y) const;
  double eval(double x, double y) const { return eval(std::complex<double>(x), std::complex<double>(y)).real(); }
};

/// Midpoints of the table entries, zero-padded to (nx, ny).
TruncatedMap from_table(const YSlices& table, int nx, int ny);

/// sum |c(i,j)| rho^(i+j)
double ell1(const TruncatedMap& s, double rho);
/// ell1(a - b) with both padded to the larger grid.
double distance(const TruncatedMap& a, const TruncatedMap& b, double rho);

struct Options {
  int nx = 20;
  int ny = 10;
  int grid = 48;       ///< samples per circle of the torus |x| = |y| = rho
  double rho = 1.75;
  int max_newton = 8;
  double tol = 1e-11;  ///< on the scaled residual norm
  double fd_step = 1e-7;
};

/**
 * One application of the renormalization operator,
 *   R[s](x, y) = s(z(x, y), lambda y) / mu,
 * with s(lambda x, z) + s(lambda y, z) = 0, s(lambda, 1) + s(0, 1) = 0 and
 * mu = s(z(0, 0), 0).  z is solved by Newton at the torus nodes and R[s] is
 * refitted by a two-dimensional discrete Fourier transform.
 */
class Renormalizer {
 public:
  explicit Renormalizer(Options opt);

  /// Throws NewtonDivergence.
  TruncatedMap step(const TruncatedMap& s);

  /// max |z(x_k, y_l) - z(x_l, y_k)| over the nodes of the last step.
  double symmetry_defect() const;
  double last_z00() const { return z00_; }

 private:
  TruncatedMap apply(const TruncatedMap& s, std::vector<std::complex<double>>& Z, bool warm);

  Options opt_;
  std::vector<std::complex<double>> nodes_;
  std::vector<std::complex<double>> Z_;
  bool have_Z_ = false;
  double z00_ = 0.0;
};

struct FixedPoint {
  TruncatedMap s;
  double lambda = 0.0;
  double mu = 0.0;
  double residual = 0.0;  ///< ell1(R[s] - s) at the returned s
  double distance_to_seed = 0.0;
  double normalization_defect = 0.0;  ///< |R[s](0,0) - 1|
  double symmetry_defect = 0.0;
  int iterations = 0;
  std::vector<double> residual_history;
};

/// Newton iteration on R[s] - s with a finite-difference Jacobian.
FixedPoint solve_fixed_point(const TruncatedMap& start, const Options& opt);

struct CrosscheckReport {
  double distance = 0.0;
  double lambda = 0.0;
  double mu = 0.0;
  bool distance_in_ball = false;     ///< distance < delta
  bool lambda_in_window = false;     ///< lambda in the reference window
  bool lambda_in_certificate = false;
  bool mu_in_certificate = false;
};

inline constexpr const char* kLambdaWindowLo = "-0.248886108398438";
inline constexpr const char* kLambdaWindowHi = "-0.248875313689";

CrosscheckReport crosscheck(const Certificate& cert, const FixedPoint& fp);

/// Appends informational oracle records to the certificate.
void append_crosscheck(Certificate& cert, const CrosscheckReport& report, const FixedPoint& fp);

}  // namespace pdcert::oracle
