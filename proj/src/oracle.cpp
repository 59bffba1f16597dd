#include "pdcert/oracle.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "pdcert/errors.hpp"

namespace pdcert::oracle {

namespace {

using cplx = std::complex<double>;

constexpr int kMaxPointNewton = 60;

bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// Partial derivative in the first variable.
cplx eval_d1(const TruncatedMap& s, cplx x, cplx y) {
  cplx acc = 0.0;
  for (int i = s.nx; i >= 1; --i) {
    cplx row = s(i, s.ny);
    for (int j = s.ny - 1; j >= 0; --j) row = row * y + s(i, j);
    acc = acc * x + static_cast<double>(i) * row;
  }
  return acc;
}

cplx slice(const TruncatedMap& s, int j, cplx x) {
  cplx acc = 0.0;
  for (int i = s.nx; i >= 0; --i) acc = acc * x + s(i, j);
  return acc;
}

double scalar_newton(const char* what, double x, auto f, auto df) {
  for (int it = 0; it < kMaxPointNewton; ++it) {
    const double step = f(x) / df(x);
    if (!std::isfinite(step)) break;
    x -= step;
    if (std::fabs(step) < 1e-15) return x;
  }
  if (std::isfinite(x) && std::fabs(f(x)) < 1e-12) return x;
  throw NewtonDivergence(std::string("oracle: Newton iteration for ") + what + " did not converge");
}

std::vector<double> weights(int nx, int ny, double rho) {
  std::vector<double> w(static_cast<std::size_t>((nx + 1) * (ny + 1)));
  for (int i = 0; i <= nx; ++i)
    for (int j = 0; j <= ny; ++j) w[static_cast<std::size_t>(i * (ny + 1) + j)] = std::pow(rho, i + j);
  return w;
}

}  // namespace

cplx TruncatedMap::eval(cplx x, cplx y) const {
  cplx acc = 0.0;
  for (int i = nx; i >= 0; --i) {
    cplx row = (*this)(i, ny);
    for (int j = ny - 1; j >= 0; --j) row = row * y + (*this)(i, j);
    acc = acc * x + row;
  }
  return acc;
}

cplx TruncatedMap::eval_d2(cplx x, cplx y) const {
  cplx acc = 0.0;
  for (int i = nx; i >= 0; --i) {
    cplx row = 0.0;
    for (int j = ny; j >= 1; --j) row = row * y + static_cast<double>(j) * (*this)(i, j);
    acc = acc * x + row;
  }
  return acc;
}

TruncatedMap from_table(const YSlices& table, int nx, int ny) {
  if (ny < 3 || nx < table.c.degree()) throw DegreeError("oracle grid too small for the seed table");
  TruncatedMap s(nx, ny);
  const UniPoly* cols[4] = {&table.c, &table.b, &table.a, &table.d};
  for (int j = 0; j < 4; ++j)
    for (std::size_t i = 0; i < cols[j]->size(); ++i) s(static_cast<int>(i), j) = (*cols[j])[i].mid();
  return s;
}

double ell1(const TruncatedMap& s, double rho) {
  double sum = 0.0;
  for (int i = 0; i <= s.nx; ++i)
    for (int j = 0; j <= s.ny; ++j) sum += std::fabs(s(i, j)) * std::pow(rho, i + j);
  return sum;
}

double distance(const TruncatedMap& a, const TruncatedMap& b, double rho) {
  const int nx = std::max(a.nx, b.nx);
  const int ny = std::max(a.ny, b.ny);
  auto get = [](const TruncatedMap& m, int i, int j) { return (i <= m.nx && j <= m.ny) ? m(i, j) : 0.0; };
  double sum = 0.0;
  for (int i = 0; i <= nx; ++i)
    for (int j = 0; j <= ny; ++j) sum += std::fabs(get(a, i, j) - get(b, i, j)) * std::pow(rho, i + j);
  return sum;
}

Renormalizer::Renormalizer(Options opt) : opt_(opt) {
  if (opt_.grid <= 2 * std::max(opt_.nx, opt_.ny)) throw ConfigError("oracle grid too coarse for the truncation");
  nodes_.resize(static_cast<std::size_t>(opt_.grid));
  for (int k = 0; k < opt_.grid; ++k) {
    nodes_[k] = std::polar(opt_.rho, 2.0 * std::numbers::pi * k / opt_.grid);
  }
}

TruncatedMap Renormalizer::step(const TruncatedMap& s) {
  TruncatedMap out = apply(s, Z_, have_Z_);
  have_Z_ = true;
  return out;
}

double Renormalizer::symmetry_defect() const {
  const int G = opt_.grid;
  double worst = 0.0;
  if (!have_Z_) return worst;
  for (int k = 0; k < G; ++k)
    for (int l = 0; l < G; ++l) worst = std::max(worst, std::abs(Z_[k * G + l] - Z_[l * G + k]));
  return worst;
}

TruncatedMap Renormalizer::apply(const TruncatedMap& s, std::vector<cplx>& Z, bool warm) {
  const int G = opt_.grid;

  const double lambda = scalar_newton(
      "lambda", -0.249, [&](double l) { return s.eval(l, 1.0) + s.eval(0.0, 1.0); },
      [&](double l) { return eval_d1(s, l, 1.0).real(); });
  const double z00 = scalar_newton(
      "z(0,0)", 0.94, [&](double z) { return s.eval(0.0, z); },
      [&](double z) { return s.eval_d2(0.0, z).real(); });
  const double mu = s.eval(z00, 0.0);
  z00_ = z00;

  if (!warm || Z.size() != static_cast<std::size_t>(G * G)) {
    Z.assign(static_cast<std::size_t>(G * G), 0.0);
    for (int k = 0; k < G; ++k)
      for (int l = 0; l < G; ++l) {
        const cplx x = lambda * nodes_[k];
        const cplx y = lambda * nodes_[l];
        const cplx u = slice(s, 2, x) + slice(s, 2, y);
        const cplx b = slice(s, 1, x) + slice(s, 1, y);
        const cplx g = slice(s, 0, x) + slice(s, 0, y);
        Z[k * G + l] = b / (2.0 * u) * (std::sqrt(1.0 - 4.0 * u * g / (b * b)) - 1.0);
      }
  }

  std::vector<cplx> V(static_cast<std::size_t>(G * G));
  for (int k = 0; k < G; ++k)
    for (int l = 0; l < G; ++l) {
      const cplx x = lambda * nodes_[k];
      const cplx y = lambda * nodes_[l];
      cplx z = Z[k * G + l];
      bool done = false;
      for (int it = 0; it < kMaxPointNewton && !done; ++it) {
        const cplx st = (s.eval(x, z) + s.eval(y, z)) / (s.eval_d2(x, z) + s.eval_d2(y, z));
        z -= st;
        done = std::abs(st) < 1e-14;
        if (!finite(z)) break;
      }
      if (!done || !finite(z)) throw NewtonDivergence("oracle: midpoint Newton did not converge at a node");
      Z[k * G + l] = z;
      V[k * G + l] = s.eval(z, lambda * nodes_[l]) / mu;
    }

  // Two-dimensional DFT restricted to the truncation grid.
  const int nx = s.nx;
  const int ny = s.ny;
  std::vector<cplx> tw(static_cast<std::size_t>(G));
  for (int k = 0; k < G; ++k) tw[k] = std::polar(1.0, -2.0 * std::numbers::pi * k / G);
  std::vector<cplx> T(static_cast<std::size_t>(G * (ny + 1)));
  for (int k = 0; k < G; ++k)
    for (int j = 0; j <= ny; ++j) {
      cplx acc = 0.0;
      for (int l = 0; l < G; ++l) acc += V[k * G + l] * tw[(j * l) % G];
      T[k * (ny + 1) + j] = acc;
    }
  TruncatedMap out(nx, ny);
  for (int i = 0; i <= nx; ++i)
    for (int j = 0; j <= ny; ++j) {
      cplx acc = 0.0;
      for (int k = 0; k < G; ++k) acc += T[k * (ny + 1) + j] * tw[(i * k) % G];
      out(i, j) = acc.real() / (static_cast<double>(G) * G) / std::pow(opt_.rho, i + j);
    }
  out.lambda = lambda;
  out.mu = mu;
  return out;
}

FixedPoint solve_fixed_point(const TruncatedMap& start, const Options& opt) {
  Options o = opt;
  TruncatedMap S(o.nx, o.ny);
  for (int i = 0; i <= std::min(o.nx, start.nx); ++i)
    for (int j = 0; j <= std::min(o.ny, start.ny); ++j) S(i, j) = start(i, j);

  const int n = (o.nx + 1) * (o.ny + 1);
  const std::vector<double> W = weights(o.nx, o.ny, o.rho);
  Renormalizer ren(o);
  FixedPoint fp;

  for (int iter = 0;; ++iter) {
    const TruncatedMap R0 = ren.step(S);
    Eigen::VectorXd res(n);
    double norm = 0.0;
    for (int q = 0; q < n; ++q) {
      res[q] = (R0.c[q] - S.c[q]) * W[q];
      norm += std::fabs(res[q]);
    }
    fp.residual_history.push_back(norm);
    fp.s = S;
    fp.lambda = R0.lambda;
    fp.mu = R0.mu;
    fp.residual = norm;
    fp.iterations = iter;
    fp.normalization_defect = std::fabs(R0(0, 0) - 1.0);
    fp.symmetry_defect = ren.symmetry_defect();
    if (norm < o.tol || iter >= o.max_newton) break;

    Eigen::MatrixXd J(n, n);
    for (int q = 0; q < n; ++q) {
      TruncatedMap Sp = S;
      const double e = o.fd_step / W[q];
      Sp.c[q] += e;
      Renormalizer probe = ren;
      const TruncatedMap Rp = probe.step(Sp);
      for (int p = 0; p < n; ++p) {
        const double dres = (Rp.c[p] - R0.c[p]) - (p == q ? e : 0.0);
        J(p, q) = dres / o.fd_step * W[p];
      }
    }
    const Eigen::VectorXd dv = J.completeOrthogonalDecomposition().solve(-res);
    for (int q = 0; q < n; ++q) S.c[q] += dv[q] / W[q];
  }
  fp.distance_to_seed = distance(fp.s, start, o.rho);
  return fp;
}

CrosscheckReport crosscheck(const Certificate& cert, const FixedPoint& fp) {
  CrosscheckReport r;
  r.distance = fp.distance_to_seed;
  r.lambda = fp.lambda;
  r.mu = fp.mu;
  const double delta = cert.seed ? cert.seed->delta.hi() : 0.0;
  r.distance_in_ball = r.distance < delta;
  const double lo = parse_decimal(kLambdaWindowLo).lo();
  const double hi = parse_decimal(kLambdaWindowHi).hi();
  r.lambda_in_window = lo <= r.lambda && r.lambda <= hi;
  r.lambda_in_certificate = cert.lambda && cert.lambda->lambda.contains(r.lambda);
  r.mu_in_certificate = cert.mu && cert.mu->contains(r.mu);
  return r;
}

void append_crosscheck(Certificate& cert, const CrosscheckReport& report, const FixedPoint& fp) {
  auto add = [&](std::string name, double value, std::string target, std::string anchor, bool pass) {
    CheckRecord c;
    c.name = std::move(name);
    c.kind = CheckKind::informational;
    c.computed = Interval::point(value);
    c.target = std::move(target);
    c.anchor = std::move(anchor);
    c.strictPass = c.softPass = pass;
    c.status = pass ? CheckStatus::pass : CheckStatus::fail;
    cert.checks.push_back(std::move(c));
  };
  const std::string delta = cert.seed ? hex(cert.seed->delta.hi()) : std::string("none");
  add("oracle_residual", fp.residual, "<1e-8", "numerical fixed-point residual, weighted l1 at rho",
      fp.residual < 1e-8);
  add("oracle_distance", report.distance, "<" + delta, "numerical fixed point lies in the delta-ball about s0",
      report.distance_in_ball);
  add("oracle_lambda_window", report.lambda,
      std::string("in[") + kLambdaWindowLo + "," + kLambdaWindowHi + "]",
      "numerical spatial scaling against the reference window", report.lambda_in_window);
  add("oracle_lambda_certified", report.lambda, "in lambda_in_range",
      "numerical spatial scaling inside the certified enclosure", report.lambda_in_certificate);
  add("oracle_mu_certified", report.mu, "in mu_in_range",
      "numerical normalization scaling inside the certified enclosure", report.mu_in_certificate);
}

}  // namespace pdcert::oracle
