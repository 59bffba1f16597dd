#include "pdcert/scalings.hpp"

#include <algorithm>
#include <vector>

#include "pdcert/errors.hpp"
#include "pdcert/polyball.hpp"

namespace pdcert {

namespace {

Interval pt(double x) { return Interval::point(x); }

bool inside_open(const Interval& x, double lo, double hi) { return x.lo() > lo && x.hi() < hi; }
bool meets_open(const Interval& x, double lo, double hi) { return x.hi() > lo && x.lo() < hi; }

Interval intersect(const Interval& a, const Interval& b) {
  const double lo = std::max(a.lo(), b.lo());
  const double hi = std::min(a.hi(), b.hi());
  if (lo > hi) throw InvariantError("valid enclosures are disjoint");
  return Interval(lo, hi);
}

Interval small_root(const Interval& A1, const Interval& Bhat, double C) {
  const Interval c = pt(C);
  const Interval disc = sqr(Bhat) - 4.0 * A1 * c;
  if (!disc.positive()) throw NoRealRoot("Delta-lambda discriminant is not positive");
  const Interval root = sqrt(disc);
  const Interval den = Bhat.positive() ? Bhat + root : Bhat - root;
  return -2.0 * c / den;
}

}  // namespace

Interval lambda_s1(const Quadratic1& q) {
  const Interval two_c = 2.0 * q.C1;
  const Interval disc = sqr(q.B1) - 4.0 * q.A1 * two_c;
  if (!disc.positive()) throw NoRealRoot("discriminant of the lambda quadratic is not positive");
  if (q.A1.contains_zero()) throw NoRealRoot("leading coefficient A1(1) may vanish");
  const Interval root = sqrt(disc);

  std::vector<Interval> roots;
  if (q.B1.positive() || q.B1.negative()) {
    const Interval qq = -0.5 * (q.B1.positive() ? q.B1 + root : q.B1 - root);
    roots.push_back(qq / q.A1);
    roots.push_back(two_c / qq);
  } else {
    roots.push_back((-q.B1 - root) / (2.0 * q.A1));
    roots.push_back((-q.B1 + root) / (2.0 * q.A1));
  }

  int meeting = 0;
  const Interval* chosen = nullptr;
  for (const auto& r : roots) {
    if (meets_open(r, -1.0, 0.0)) {
      ++meeting;
      chosen = &r;
    }
  }
  if (meeting == 0) throw NoRealRoot("no root of the lambda quadratic in (-1, 0)");
  if (meeting > 1 || !inside_open(*chosen, -1.0, 0.0)) {
    throw AmbiguousRoot("root selection in (-1, 0) is ambiguous");
  }
  return *chosen;
}

Interval lambda_s1(const GeneratingSeed& seed) { return lambda_s1(a1b1c1_at_1(seed)); }

Interval delta_lambda(const Interval& A1, const Interval& Bhat, const Interval& C) {
  if (Bhat.contains_zero()) throw NoRealRoot("linear coefficient of the Delta-lambda equation may vanish");
  return hull(small_root(A1, Bhat, C.lo()), small_root(A1, Bhat, C.hi()));
}

LambdaEnclosure lambda_enclosure(const GeneratingSeed& seed, const Interval& delta) {
  const Quadratic1 q = a1b1c1_at_1(seed);
  LambdaEnclosure e;
  e.lambdaS1 = lambda_s1(q);
  const BiPoly tail_poly = psub(seed.s0, seed.s1);
  e.normS0S1 = ell1_norm(tail_poly, seed.rho);
  e.deltaTilde = e.normS0S1 + delta;
  e.Bhat = 2.0 * q.A1 * e.lambdaS1 + q.B1;

  const double c1 = (2.0 * e.deltaTilde).hi();
  e.coarse = e.lambdaS1 + delta_lambda(q.A1, e.Bhat, Interval(-c1, c1));
  if (!(mag(e.coarse) < seed.rho.lo())) throw DomainError("coarse lambda enclosure leaves the disc of radius rho");

  e.tail = eval_box(tail_poly, e.coarse, pt(1.0));
  const double c2 = (2.0 * delta).hi();
  e.refined = e.lambdaS1 + delta_lambda(q.A1, e.Bhat, e.tail + Interval(-c2, c2));
  e.lambda = intersect(e.coarse, e.refined);
  return e;
}

Interval mu_enclosure(const GeneratingSeed& seed, const Interval& delta, const Interval& Mbar,
                      const Interval& epsBall, const Interval& z00) {
  const double w = (Mbar * epsBall).hi();
  const Interval z = z00 + Interval(-w, w);
  if (!(mag(z) < seed.rho.lo())) throw DomainError("midpoint enclosure leaves the disc of radius rho");
  const double d = delta.hi();
  return seed.table.c.eval(z) + Interval(-d, d);
}

}  // namespace pdcert
