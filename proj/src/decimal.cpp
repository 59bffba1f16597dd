#include <mpfr.h>

#include <cctype>
#include <cmath>
#include <string>

#include "pdcert/errors.hpp"
#include "pdcert/ivreal.hpp"

namespace pdcert {

namespace {

double parse_directed(const std::string& s, mpfr_rnd_t rnd) {
  mpfr_t x;
  mpfr_init2(x, 64);
  char* end = nullptr;
  mpfr_strtofr(x, s.c_str(), &end, 10, rnd);
  const bool consumed = end != nullptr && *end == '\0' && end != s.c_str();
  const double d = mpfr_get_d(x, rnd);
  const bool finite = mpfr_number_p(x) != 0;
  mpfr_clear(x);
  if (!consumed) throw ParseError("malformed decimal literal: '" + s + "'");
  if (!finite || !std::isfinite(d)) throw ParseError("decimal literal out of range: '" + s + "'");
  return d;
}

}  // namespace

Interval parse_decimal(std::string_view text) {
  std::size_t b = 0;
  std::size_t e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  const std::string s(text.substr(b, e - b));
  if (s.empty()) throw ParseError("empty decimal literal");
  for (char c : s) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '-' || c == '+' ||
          c == 'e' || c == 'E')) {
      throw ParseError("malformed decimal literal: '" + s + "'");
    }
  }
  return Interval(parse_directed(s, MPFR_RNDD), parse_directed(s, MPFR_RNDU));
}

}  // namespace pdcert
