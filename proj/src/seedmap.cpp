#include "pdcert/seedmap.hpp"

#include <openssl/evp.h>

#include <cstdio>

#include "pdcert/errors.hpp"

namespace pdcert {

namespace {

constexpr int kSeedDegX = 6;

const char* const kBuiltinTable = R"(# s0(x,y) = D0(x) y^3 + A0(x) y^2 + B0(x) y + C0(x), coefficient of x^i
c 0  1.00000000000000000
c 1 -1.02761956458970711
c 2  2.93663720023727808e-2
c 3 -1.87658664952086400e-3
c 4  1.40668294317213841e-4
c 5 -1.18664608613747513e-5
c 6  1.06935654680404746e-6
b 0 -2.42962369607899157e-1
b 1  5.87327440047455615e-2
b 2 -5.93710236103475834e-3
b 3  6.09332694202817819e-4
b 4 -6.46957663100331420e-5
b 5  7.02844653606969302e-6
b 6 -7.75814237637266867e-7
a 0 -8.77647505670140721e-1
a 1 -5.62975994856259201e-3
a 2  9.13999041304226728e-4
a 3 -1.33251463600020727e-4
a 4  1.84028385489487478e-5
a 5 -2.46417657757601024e-6
a 6  3.23459112039180563e-7
d 0 -1.46791670728014469e-3
d 1  5.62673177268855366e-4
d 2 -1.29391532620066284e-4
d 3  2.45371180652649971e-5
d 4 -4.18641657324405651e-6
d 5  6.68319468409332288e-7
d 6 -1.01939399249366523e-7
)";

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw CertError("SHA-256 computation failed");
  }
  std::string out;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    out += buf;
  }
  return out;
}

}  // namespace

const std::string& builtin_table_text() {
  static const std::string text = kBuiltinTable;
  return text;
}

YSlices builtin_table() { return parse_coefficient_table_text(builtin_table_text()); }

std::string table_hash(const YSlices& t) {
  std::string canon;
  const std::pair<char, const UniPoly*> cols[] = {{'c', &t.c}, {'b', &t.b}, {'a', &t.a}, {'d', &t.d}};
  for (const auto& [name, col] : cols) {
    for (std::size_t i = 0; i < col->size(); ++i) {
      canon += name;
      canon += ' ' + std::to_string(i) + ' ' + hex((*col)[i]) + '\n';
    }
  }
  return sha256_hex(canon);
}

GeneratingSeed load_seed(const YSlices& table, const Interval& rho, const Interval& delta,
                         const Interval& shift) {
  for (const UniPoly* col : {&table.c, &table.b, &table.a, &table.d}) {
    if (col->degree() != kSeedDegX) {
      throw ParseError("seed table must have entries for x-degrees 0.." + std::to_string(kSeedDegX) +
                       " in every column");
    }
  }
  if (!(table.c[0] == Interval::point(1.0))) throw InvariantError("s0(0,0) must equal 1");
  if (!(rho.lo() > 0.0)) throw ConfigError("rho must be positive");
  if (delta.lo() < 0.0) throw ConfigError("delta must be nonnegative");

  GeneratingSeed s;
  s.table = table;
  s.rho = rho;
  s.delta = delta;
  s.shift = shift;
  s.s0 = from_slices(table);
  s.s1 = truncate_x(s.s0, 2);
  s.a0 = table.a[0];
  s.b0 = table.b[0];

  // sigma0 = s0 + tau/2 = s0 - a0 y^2 - b0 y
  s.sigma0 = s.s0;
  s.sigma0(0, 2) = s.sigma0(0, 2) - s.a0;
  s.sigma0(0, 1) = s.sigma0(0, 1) - s.b0;

  s.Sigma0 = shift_x(s.sigma0, shift);
  s.theta0 = s.Sigma0(0, 0);
  s.Theta0 = s.Sigma0;
  s.Theta0(0, 0) = s.Theta0(0, 0) - s.theta0;
  s.dTheta0 = pdiff2(s.Theta0);
  s.cconst = sqr(s.b0) - 4.0 * s.a0 * s.theta0;
  if (!s.cconst.positive()) throw InvariantError("b0^2 - 4 a0 theta0 is not certified positive");
  s.table_hash = table_hash(table);
  return s;
}

BiPoly make_s1(const GeneratingSeed& seed) { return truncate_x(seed.s0, 2); }

Quadratic1 a1b1c1_at_1(const GeneratingSeed& seed) {
  const auto& t = seed.table;
  auto col_sum = [&](std::size_t i) { return t.c[i] + t.b[i] + t.a[i] + t.d[i]; };
  return {col_sum(2), col_sum(1), col_sum(0)};
}

UniPoly ctilde(const GeneratingSeed& seed) {
  const Interval rho3 = pow(seed.rho, 3);
  const Interval C = Interval(-rho3.hi(), rho3.hi());
  std::vector<Interval> out(seed.table.c.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = seed.table.c[i] + C * seed.table.d[i];
  return UniPoly(out);
}

Interval tau(const GeneratingSeed& seed, const Interval& y) {
  return -2.0 * seed.a0 * sqr(y) - 2.0 * seed.b0 * y;
}

Interval nu_inverse(const GeneratingSeed& seed, const Interval& u) {
  const Interval disc = sqr(seed.b0) - 2.0 * seed.a0 * u;
  if (disc.lo() < 0.0) throw DomainError("nu: radicand b0^2 - 2 a0 u may be negative");
  if (seed.b0.contains_zero()) throw DomainError("nu: b0 must have a definite sign");
  // Root of 2 a0 y^2 + 2 b0 y + u = 0 that vanishes with u, in cancellation-free form.
  const Interval root = sqrt(disc);
  const Interval den = seed.b0.negative() ? seed.b0 - root : seed.b0 + root;
  return -u / den;
}

}  // namespace pdcert
