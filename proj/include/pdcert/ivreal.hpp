#pragma once

#include <string>
#include <string_view>

namespace pdcert {

/**
 * Closed real interval [lo, hi] with finite binary64 endpoints.
 *
 * Every operation returns an interval that contains the exact real result
 * for all operands drawn from the inputs.  Rounding is realized in the
 * default round-to-nearest mode: error-free transforms (TwoSum, FMA
 * residuals) decide the exact rounding direction of each endpoint, so point
 * operations are widened by at most one ulp and exact results stay exact.
 * No floating-point environment state is touched; values are immutable and
 * safe to share between threads.
 *
 * Results outside the finite binary64 range raise pdcert::Overflow.
 * Underflow into subnormals is accepted (the bound stays valid).
 */
class Interval {
 public:
  constexpr Interval() = default;

  /// Throws DomainError on NaN, infinite endpoints or lo > hi.
  Interval(double lo, double hi);

  static Interval point(double x) { return Interval(x, x); }

  double lo() const { return lo_; }
  double hi() const { return hi_; }

  /// Midpoint rounded to nearest; not an enclosure.
  double mid() const;
  /// Upper bound on hi - lo.
  double width() const;

  bool is_point() const { return lo_ == hi_; }
  bool contains(double x) const { return lo_ <= x && x <= hi_; }
  /// Subset test: other ⊆ *this.
  bool contains(const Interval& other) const {
    return lo_ <= other.lo_ && other.hi_ <= hi_;
  }
  bool contains_zero() const { return lo_ <= 0.0 && 0.0 <= hi_; }
  bool positive() const { return lo_ > 0.0; }
  bool negative() const { return hi_ < 0.0; }

  Interval operator-() const { return Interval(-hi_, -lo_); }

  Interval& operator+=(const Interval& b);
  Interval& operator-=(const Interval& b);
  Interval& operator*=(const Interval& b);
  Interval& operator/=(const Interval& b);

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  double lo_ = 0.0;
  double hi_ = 0.0;
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);
/// Throws DivisionByZeroInterval when b contains zero.
Interval operator/(const Interval& a, const Interval& b);

inline Interval operator+(const Interval& a, double b) { return a + Interval::point(b); }
inline Interval operator-(const Interval& a, double b) { return a - Interval::point(b); }
inline Interval operator*(const Interval& a, double b) { return a * Interval::point(b); }
inline Interval operator/(const Interval& a, double b) { return a / Interval::point(b); }
inline Interval operator+(double a, const Interval& b) { return Interval::point(a) + b; }
inline Interval operator-(double a, const Interval& b) { return Interval::point(a) - b; }
inline Interval operator*(double a, const Interval& b) { return Interval::point(a) * b; }
inline Interval operator/(double a, const Interval& b) { return Interval::point(a) / b; }

enum class ArithOp { add, sub, mul, div };

Interval arith(const Interval& a, const Interval& b, ArithOp op);

/// [-hi, -lo]; exact.
Interval neg(const Interval& a);
/// [max{0, lo, -hi}, -min{0, lo, -hi}]; exact.
Interval abs(const Interval& a);
/// Requires lo * hi > 0, otherwise DivisionByZeroInterval.
Interval inv(const Interval& a);
/// Requires lo >= 0, otherwise DomainError.
Interval sqrt(const Interval& a);
Interval exp(const Interval& a);
/// Requires lo > 0, otherwise DomainError.
Interval log(const Interval& a);
/// a^b = exp(b * log(a)); requires a.lo > 0.
Interval pow(const Interval& a, const Interval& b);
/// Integer power with the exact range for even exponents.
Interval pow(const Interval& a, int n);
Interval sqr(const Interval& a);

/// max |x| over a.
double mag(const Interval& a);
/// min |x| over a.
double mig(const Interval& a);
Interval hull(const Interval& a, const Interval& b);
bool contains(const Interval& a, double x);

/// The degenerate interval [a.hi, a.hi]; used to carry a certified upper
/// bound forward as a representable constant.
inline Interval upper_point(const Interval& a) { return Interval::point(a.hi()); }

/// Symmetric interval [-r, r] for r >= 0.
Interval symmetric(double r);

/// Enclosure of the constant ln 2.
Interval ln2();

/// Outward-rounded enclosure of a decimal literal (width <= 1 ulp; exact
/// when the literal is representable).  Throws ParseError.
Interval parse_decimal(std::string_view text);

/// C99 hexadecimal float literal, e.g. 0x1.8p+0.
std::string hex(double x);
/// "[<hexlo>,<hexhi>]".
std::string hex(const Interval& a);

namespace rounding {

/// Directed-rounding primitives; each returns the pair (round-down, round-up)
/// of the exact result.
struct Bracket {
  double down;
  double up;
};

Bracket add(double a, double b);
Bracket mul(double a, double b);
Bracket div(double a, double b);
Bracket sqrt(double a);

double next_up(double x);
double next_down(double x);

}  // namespace rounding

}  // namespace pdcert
