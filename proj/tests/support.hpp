#pragma once

#include <mpfr.h>

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "pdcert/errors.hpp"
#include "pdcert/ivreal.hpp"

namespace testsupport {

/// splitmix64
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : s_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (s_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
  int integer(int lo, int hi) { return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }
  bool coin() { return (next() & 1U) != 0; }

  /// Random full-precision double with |x| in [2^emin, 2^emax).
  double wide(int emin, int emax, bool allow_negative = true) {
    const double m = 1.0 + unit();
    double x = std::ldexp(m, integer(emin, emax - 1));
    return (allow_negative && coin()) ? -x : x;
  }

  /// Interval with endpoints drawn by draw(); sometimes a point.
  pdcert::Interval interval(const std::function<double()>& draw) {
    const double a = draw();
    if (integer(0, 4) == 0) return pdcert::Interval::point(a);
    const double b = draw();
    return pdcert::Interval(std::min(a, b), std::max(a, b));
  }

  /// A double inside x, endpoints included with positive probability.
  double inside(const pdcert::Interval& x) {
    switch (integer(0, 5)) {
      case 0: return x.lo();
      case 1: return x.hi();
      default: {
        const double v = x.lo() + (x.hi() - x.lo()) * unit();
        return std::min(std::max(v, x.lo()), x.hi());
      }
    }
  }

 private:
  std::uint64_t s_;
};

/// Multiple-precision reference value, 256-bit mantissa.
class Mp {
 public:
  static constexpr mpfr_prec_t kPrec = 256;
  Mp() { mpfr_init2(v_, kPrec); mpfr_set_zero(v_, 1); }
  explicit Mp(double x) { mpfr_init2(v_, kPrec); mpfr_set_d(v_, x, MPFR_RNDN); }
  explicit Mp(const char* dec) { mpfr_init2(v_, kPrec); mpfr_set_str(v_, dec, 10, MPFR_RNDN); }
  Mp(const Mp& o) { mpfr_init2(v_, kPrec); mpfr_set(v_, o.v_, MPFR_RNDN); }
  Mp& operator=(const Mp& o) { mpfr_set(v_, o.v_, MPFR_RNDN); return *this; }
  ~Mp() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  friend Mp operator+(const Mp& a, const Mp& b) { Mp r; mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
  friend Mp operator-(const Mp& a, const Mp& b) { Mp r; mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
  friend Mp operator*(const Mp& a, const Mp& b) { Mp r; mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
  friend Mp operator/(const Mp& a, const Mp& b) { Mp r; mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }

 private:
  mpfr_t v_;
};

inline Mp mp_unary(const Mp& a, int (*f)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t)) {
  Mp r;
  f(r.get(), a.get(), MPFR_RNDN);
  return r;
}
inline Mp mp_sqrt(const Mp& a) { return mp_unary(a, mpfr_sqrt); }
inline Mp mp_exp(const Mp& a) { return mp_unary(a, mpfr_exp); }
inline Mp mp_log(const Mp& a) { return mp_unary(a, mpfr_log); }
inline Mp mp_abs(const Mp& a) { return mp_unary(a, mpfr_abs); }
inline Mp mp_pow(const Mp& a, const Mp& b) { Mp r; mpfr_pow(r.get(), a.get(), b.get(), MPFR_RNDN); return r; }
inline Mp mp_pow_si(const Mp& a, long n) { Mp r; mpfr_pow_si(r.get(), a.get(), n, MPFR_RNDN); return r; }

/// lo <= v <= hi compared exactly.
inline bool encloses(const pdcert::Interval& x, const Mp& v) {
  return mpfr_cmp_d(v.get(), x.lo()) >= 0 && mpfr_cmp_d(v.get(), x.hi()) <= 0;
}

/// x.hi >= v and (x.hi - v) <= rel |v|.
inline bool tight_upper(const pdcert::Interval& x, const char* v_dec, double rel) {
  const Mp v(v_dec);
  if (mpfr_cmp_d(v.get(), x.hi()) > 0) return false;
  const Mp gap = Mp(x.hi()) - v;
  return mpfr_cmp_d(gap.get(), rel * std::fabs(v.to_double())) <= 0;
}

/// x.lo <= v and (v - x.lo) <= rel |v|.
inline bool tight_lower(const pdcert::Interval& x, const char* v_dec, double rel) {
  const Mp v(v_dec);
  if (mpfr_cmp_d(v.get(), x.lo()) < 0) return false;
  const Mp gap = v - Mp(x.lo());
  return mpfr_cmp_d(gap.get(), rel * std::fabs(v.to_double())) <= 0;
}

inline bool encloses(const pdcert::Interval& x, const char* v_dec) { return encloses(x, Mp(v_dec)); }

struct KernelOp {
  std::string name;
  /// Draws operands, evaluates the interval operation and compares a random
  /// member of the operand boxes against the reference.  Returns false on a
  /// containment violation; operand draws outside the domain are redrawn.
  std::function<bool(Rng&)> trial;
};

inline std::vector<KernelOp> kernel_ops() {
  using pdcert::Interval;
  auto gen = [](Rng& g, int emin, int emax, bool neg) {
    return g.interval([&] { return g.wide(emin, emax, neg); });
  };
  auto binary = [gen](pdcert::ArithOp op, int emin, int emax) {
    return [=](Rng& g) {
      for (;;) {
        const Interval a = gen(g, emin, emax, true);
        const Interval b = gen(g, emin, emax, true);
        if (op == pdcert::ArithOp::div && b.contains_zero()) continue;
        const Interval z = pdcert::arith(a, b, op);
        const Mp x(g.inside(a));
        const Mp y(g.inside(b));
        Mp ref;
        switch (op) {
          case pdcert::ArithOp::add: ref = x + y; break;
          case pdcert::ArithOp::sub: ref = x - y; break;
          case pdcert::ArithOp::mul: ref = x * y; break;
          case pdcert::ArithOp::div: ref = x / y; break;
        }
        return encloses(z, ref);
      }
    };
  };
  std::vector<KernelOp> ops;
  ops.push_back({"add", binary(pdcert::ArithOp::add, -60, 60)});
  ops.push_back({"sub", binary(pdcert::ArithOp::sub, -60, 60)});
  ops.push_back({"mul", binary(pdcert::ArithOp::mul, -60, 60)});
  ops.push_back({"div", binary(pdcert::ArithOp::div, -60, 60)});
  ops.push_back({"add_tiny", binary(pdcert::ArithOp::add, -1060, -900)});
  ops.push_back({"mul_tiny", binary(pdcert::ArithOp::mul, -560, -440)});
  ops.push_back({"div_tiny", binary(pdcert::ArithOp::div, -560, 440)});
  ops.push_back({"sqrt", [gen](Rng& g) {
                   const Interval a = gen(g, -80, 80, false);
                   return encloses(pdcert::sqrt(a), mp_sqrt(Mp(g.inside(a))));
                 }});
  ops.push_back({"exp", [](Rng& g) {
                   const Interval a = g.interval([&] { return g.uniform(-740.0, 705.0); });
                   return encloses(pdcert::exp(a), mp_exp(Mp(g.inside(a))));
                 }});
  ops.push_back({"exp_small", [](Rng& g) {
                   const Interval a = g.interval([&] { return g.wide(-60, 2, true); });
                   return encloses(pdcert::exp(a), mp_exp(Mp(g.inside(a))));
                 }});
  ops.push_back({"log", [gen](Rng& g) {
                   const Interval a = gen(g, -1000, 1000, false);
                   return encloses(pdcert::log(a), mp_log(Mp(g.inside(a))));
                 }});
  ops.push_back({"log_near_one", [](Rng& g) {
                   const Interval a = g.interval([&] { return 1.0 + g.wide(-50, -1, true); });
                   return encloses(pdcert::log(a), mp_log(Mp(g.inside(a))));
                 }});
  ops.push_back({"pow", [](Rng& g) {
                   const Interval a = g.interval([&] { return std::ldexp(1.0 + g.unit(), g.integer(-20, 20)); });
                   const Interval b = g.interval([&] { return g.uniform(-20.0, 20.0); });
                   return encloses(pdcert::pow(a, b), mp_pow(Mp(g.inside(a)), Mp(g.inside(b))));
                 }});
  ops.push_back({"pow_int", [gen](Rng& g) {
                   for (;;) {
                     const int n = g.integer(-9, 9);
                     const Interval a = gen(g, -30, 30, true);
                     if (n < 0 && a.contains_zero()) continue;
                     return encloses(pdcert::pow(a, n), mp_pow_si(Mp(g.inside(a)), n));
                   }
                 }});
  ops.push_back({"sqr", [gen](Rng& g) {
                   const Interval a = gen(g, -200, 200, true);
                   const Mp x(g.inside(a));
                   return encloses(pdcert::sqr(a), x * x);
                 }});
  ops.push_back({"inv", [gen](Rng& g) {
                   for (;;) {
                     const Interval a = gen(g, -300, 300, true);
                     if (a.contains_zero()) continue;
                     return encloses(pdcert::inv(a), Mp(1.0) / Mp(g.inside(a)));
                   }
                 }});
  ops.push_back({"abs", [gen](Rng& g) {
                   const Interval a = gen(g, -60, 60, true);
                   return encloses(pdcert::abs(a), mp_abs(Mp(g.inside(a))));
                 }});
  ops.push_back({"parse_decimal", [](Rng& g) {
                   char buf[64];
                   const int digits = g.integer(1, 25);
                   std::string s = g.coin() ? "-" : "";
                   for (int i = 0; i < digits; ++i) s += static_cast<char>('0' + g.integer(0, 9));
                   s.insert(s.size() - static_cast<std::size_t>(g.integer(0, digits - 1)), ".");
                   std::snprintf(buf, sizeof buf, "e%d", g.integer(-300, 280));
                   s += buf;
                   return encloses(pdcert::parse_decimal(s), Mp(s.c_str()));
                 }});
  return ops;
}

}  // namespace testsupport
