#include "pdcert/ivreal.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>

#include "pdcert/errors.hpp"

namespace pdcert {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Below this magnitude the residual of a product or quotient may itself
// underflow, so the error-free transforms are no longer exact.
constexpr double kTiny = 0x1p-900;

void check_finite(double x, const char* what) {
  if (!std::isfinite(x)) {
    throw Overflow(std::string("binary64 overflow in ") + what);
  }
}

rounding::Bracket widen_both(double x) {
  return {rounding::next_down(x), rounding::next_up(x)};
}

// Pick the bracket from the sign of (exact - rounded).
rounding::Bracket from_residual(double rounded, double residual_sign) {
  if (residual_sign > 0) return {rounded, rounding::next_up(rounded)};
  if (residual_sign < 0) return {rounding::next_down(rounded), rounded};
  return {rounded, rounded};
}

}  // namespace

namespace rounding {

double next_up(double x) { return std::nextafter(x, kInf); }
double next_down(double x) { return std::nextafter(x, -kInf); }

Bracket add(double a, double b) {
  const double s = a + b;
  check_finite(s, "addition");
  // TwoSum: err = (a + b) - s exactly.
  const double bb = s - a;
  const double err = (a - (s - bb)) + (b - bb);
  return from_residual(s, err);
}

Bracket mul(double a, double b) {
  const double p = a * b;
  check_finite(p, "multiplication");
  if (a == 0.0 || b == 0.0) return {0.0, 0.0};
  if (std::fabs(p) < kTiny) return widen_both(p);
  const double err = std::fma(a, b, -p);
  return from_residual(p, err);
}

Bracket div(double a, double b) {
  const double q = a / b;
  check_finite(q, "division");
  if (a == 0.0) return {0.0, 0.0};
  if (std::fabs(q) < kTiny || std::fabs(a) < kTiny) return widen_both(q);
  // a - q*b is exact; a/b - q has the sign of (a - q*b) / b.
  const double r = std::fma(-q, b, a);
  const double sign = (r == 0.0) ? 0.0 : ((r > 0.0) == (b > 0.0) ? 1.0 : -1.0);
  return from_residual(q, sign);
}

Bracket sqrt(double a) {
  if (a == 0.0) return {0.0, 0.0};
  const double r = std::sqrt(a);
  if (a < kTiny) return widen_both(r);
  const double rem = std::fma(-r, r, a);
  return from_residual(r, rem);
}

}  // namespace rounding

Interval::Interval(double lo, double hi) : lo_(lo), hi_(hi) {
  if (std::isnan(lo) || std::isnan(hi)) throw DomainError("interval endpoint is NaN");
  if (std::isinf(lo) || std::isinf(hi)) throw Overflow("interval endpoint is infinite");
  if (lo > hi) throw DomainError("interval with lo > hi");
  if (lo_ == 0.0) lo_ = 0.0;  // canonical +0
  if (hi_ == 0.0) hi_ = 0.0;
}

double Interval::mid() const { return lo_ * 0.5 + hi_ * 0.5; }

double Interval::width() const { return rounding::add(hi_, -lo_).up; }

Interval& Interval::operator+=(const Interval& b) { return *this = *this + b; }
Interval& Interval::operator-=(const Interval& b) { return *this = *this - b; }
Interval& Interval::operator*=(const Interval& b) { return *this = *this * b; }
Interval& Interval::operator/=(const Interval& b) { return *this = *this / b; }

Interval operator+(const Interval& a, const Interval& b) {
  return Interval(rounding::add(a.lo(), b.lo()).down, rounding::add(a.hi(), b.hi()).up);
}

Interval operator-(const Interval& a, const Interval& b) { return a + neg(b); }

Interval operator*(const Interval& a, const Interval& b) {
  const std::array<rounding::Bracket, 4> p = {
      rounding::mul(a.lo(), b.lo()), rounding::mul(a.lo(), b.hi()),
      rounding::mul(a.hi(), b.lo()), rounding::mul(a.hi(), b.hi())};
  double lo = p[0].down;
  double hi = p[0].up;
  for (const auto& q : p) {
    lo = std::min(lo, q.down);
    hi = std::max(hi, q.up);
  }
  return Interval(lo, hi);
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw DivisionByZeroInterval("divisor interval contains zero");
  const std::array<rounding::Bracket, 4> q = {
      rounding::div(a.lo(), b.lo()), rounding::div(a.lo(), b.hi()),
      rounding::div(a.hi(), b.lo()), rounding::div(a.hi(), b.hi())};
  double lo = q[0].down;
  double hi = q[0].up;
  for (const auto& r : q) {
    lo = std::min(lo, r.down);
    hi = std::max(hi, r.up);
  }
  return Interval(lo, hi);
}

Interval arith(const Interval& a, const Interval& b, ArithOp op) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
  }
  throw DomainError("unknown arithmetic operation");
}

Interval neg(const Interval& a) { return -a; }

Interval abs(const Interval& a) {
  if (a.lo() >= 0.0) return a;
  if (a.hi() <= 0.0) return -a;
  return Interval(0.0, std::max(-a.lo(), a.hi()));
}

Interval inv(const Interval& a) {
  if (!(a.positive() || a.negative())) {
    throw DivisionByZeroInterval("inverse of an interval containing zero");
  }
  return Interval(rounding::div(1.0, a.hi()).down, rounding::div(1.0, a.lo()).up);
}

Interval sqrt(const Interval& a) {
  if (a.lo() < 0.0) throw DomainError("sqrt of an interval with negative part");
  return Interval(rounding::sqrt(a.lo()).down, rounding::sqrt(a.hi()).up);
}

Interval sqr(const Interval& a) { return pow(a, 2); }

Interval symmetric(double r) {
  const double m = std::fabs(r);
  return Interval(-m, m);
}

Interval ln2() {
  return Interval(0x1.62e42fefa39efp-1, 0x1.62e42fefa39f0p-1);
}

namespace {

// ln 2 = kLn2Hi + [kLn2LoDown, kLn2LoUp]; kLn2Hi has 32 significant bits so
// k * kLn2Hi is exact for |k| < 2^21.
constexpr double kLn2Hi = 0x1.62e42fee00000p-1;
constexpr double kLn2LoDown = 0x1.a39ef35793c76p-33;
constexpr double kLn2LoUp = 0x1.a39ef35793c77p-33;

constexpr int kExpTerms = 20;
constexpr int kLogTerms = 19;

const std::array<Interval, kExpTerms + 2>& inverse_factorials() {
  static const auto table = [] {
    std::array<Interval, kExpTerms + 2> t{};
    t[0] = Interval::point(1.0);
    for (int j = 1; j < static_cast<int>(t.size()); ++j) {
      t[j] = t[j - 1] / static_cast<double>(j);
    }
    return t;
  }();
  return table;
}

Interval scale_by_power_of_two(const Interval& p, int k) {
  double lo = std::ldexp(p.lo(), k);
  double hi = std::ldexp(p.hi(), k);
  check_finite(hi, "exp");
  // ldexp may round once the result is subnormal.
  if (lo < 0x1p-1000) lo = std::max(0.0, rounding::next_down(lo));
  if (hi < 0x1p-1000) hi = rounding::next_up(hi);
  return Interval(lo, hi);
}

// Enclosure of exp(x) for a single binary64 x.
Interval exp_point(double x) {
  if (x == 0.0) return Interval::point(1.0);
  if (x > 710.0) throw Overflow("exp argument too large");
  if (x < -746.0) return Interval(0.0, std::numeric_limits<double>::denorm_min());

  const double k = std::nearbyint(x * 1.4426950408889634);
  const Interval kk = Interval::point(k);
  const Interval r = Interval::point(x) - kk * Interval::point(kLn2Hi) -
                     kk * Interval(kLn2LoDown, kLn2LoUp);

  // exp(r) = sum_{j<=N} r^j / j! + R,  |R| <= |r|^{N+1}/(N+1)! * e^{|r|},
  // and e^{|r|} < 2 for |r| < 0.36.
  const auto& f = inverse_factorials();
  Interval p = f[kExpTerms];
  for (int j = kExpTerms - 1; j >= 0; --j) p = p * r + f[j];
  const Interval tail = pow(Interval::point(mag(r)), kExpTerms + 1) * f[kExpTerms + 1] * 2.0;
  p = p + symmetric(tail.hi());
  if (p.lo() < 0.0) p = Interval(0.0, p.hi());
  return scale_by_power_of_two(p, static_cast<int>(k));
}

// Enclosure of ln(x) for a single positive binary64 x.
Interval log_point(double x) {
  if (x == 1.0) return Interval::point(0.0);
  int e = 0;
  double m = std::frexp(x, &e);  // m in [0.5, 1)
  if (e == 1 || (e != 0 && m < 0.70710678118654752)) {
    m *= 2.0;
    e -= 1;
  }
  // ln m = 2 atanh(u) = 2 sum_k u^{2k+1}/(2k+1),  u = (m-1)/(m+1),  |u| < 1/3;
  // x in [0.5, 2) is not split so ln2 does not cancel against ln m.
  // Remainder after K terms: <= 2|u|^{2K+1} / ((2K+1)(1-u^2)).
  const Interval mm = Interval::point(m);
  const Interval u = (mm - 1.0) / (mm + 1.0);
  const Interval v = sqr(u);
  Interval p = 1.0 / Interval::point(2.0 * (kLogTerms - 1) + 1.0);
  for (int k = kLogTerms - 2; k >= 1; --k) p = p * v + 1.0 / Interval::point(2.0 * k + 1.0);
  const Interval au = Interval::point(mag(u));
  const Interval tail = 2.0 * pow(au, 2 * kLogTerms + 1) /
                        (Interval::point(2.0 * kLogTerms + 1.0) * (1.0 - sqr(au)));
  const Interval ln_m = 2.0 * u + (2.0 * u * v * p + symmetric(tail.hi()));
  return Interval::point(static_cast<double>(e)) * ln2() + ln_m;
}

Interval pow_point(double x, int n) {
  Interval r = Interval::point(1.0);
  const Interval b = Interval::point(x);
  for (int i = 0; i < n; ++i) r = r * b;
  return r;
}

}  // namespace

Interval exp(const Interval& a) {
  return Interval(exp_point(a.lo()).lo(), exp_point(a.hi()).hi());
}

Interval log(const Interval& a) {
  if (!(a.lo() > 0.0)) throw DomainError("log of an interval with nonpositive part");
  return Interval(log_point(a.lo()).lo(), log_point(a.hi()).hi());
}

Interval pow(const Interval& a, const Interval& b) {
  if (!(a.lo() > 0.0)) throw DomainError("pow with nonpositive base");
  return exp(b * log(a));
}

Interval pow(const Interval& a, int n) {
  if (n < 0) return inv(pow(a, -n));
  if (n == 0) return Interval::point(1.0);
  if (n % 2 == 0) {
    const Interval m = abs(a);
    return Interval(pow_point(m.lo(), n).lo(), pow_point(m.hi(), n).hi());
  }
  return Interval(pow_point(a.lo(), n).lo(), pow_point(a.hi(), n).hi());
}

double mag(const Interval& a) { return std::max(std::fabs(a.lo()), std::fabs(a.hi())); }

double mig(const Interval& a) { return a.contains_zero() ? 0.0 : std::min(std::fabs(a.lo()), std::fabs(a.hi())); }

Interval hull(const Interval& a, const Interval& b) {
  return Interval(std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi()));
}

bool contains(const Interval& a, double x) { return a.contains(x); }

std::string hex(double x) {
  if (x == 0.0) x = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%a", x);
  return buf;
}

std::string hex(const Interval& a) { return "[" + hex(a.lo()) + "," + hex(a.hi()) + "]"; }

}  // namespace pdcert
