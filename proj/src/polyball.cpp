#include "pdcert/polyball.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "pdcert/errors.hpp"

namespace pdcert {

namespace {

Interval zero() { return Interval::point(0.0); }

void check_center(const BiPoly& p, const BiPoly& q) {
  if (p.center() != q.center()) throw DomainError("polynomials expanded about different centers");
}

// Powers r^0 .. r^n of a nonnegative radius.
std::vector<Interval> powers(const Interval& r, int n) {
  if (r.lo() < 0.0) throw DomainError("negative radius");
  std::vector<Interval> out(static_cast<std::size_t>(n) + 1);
  out[0] = Interval::point(1.0);
  for (int k = 1; k <= n; ++k) out[k] = out[k - 1] * r;
  return out;
}

}  // namespace

Interval UniPoly::eval(const Interval& x) const {
  if (c_.empty()) return zero();
  Interval acc = c_.back();
  for (int i = degree() - 1; i >= 0; --i) acc = acc * x + c_[i];
  return acc;
}

BiPoly::BiPoly(int deg_x, int deg_y, double center)
    : dx_(deg_x), dy_(deg_y), center_(center) {
  if (deg_x < 0 || deg_y < 0) throw DegreeError("negative polynomial degree");
  c_.assign(static_cast<std::size_t>(deg_x + 1) * (deg_y + 1), zero());
}

BiPoly BiPoly::constant(const Interval& v, double center) {
  BiPoly p(0, 0, center);
  p(0, 0) = v;
  return p;
}

BiPoly BiPoly::in_x(const UniPoly& u, double center) {
  BiPoly p(std::max(0, u.degree()), 0, center);
  for (int i = 0; i <= u.degree(); ++i) p(i, 0) = u[i];
  return p;
}

BiPoly BiPoly::in_y(const UniPoly& u, double center) {
  BiPoly p(0, std::max(0, u.degree()), center);
  for (int j = 0; j <= u.degree(); ++j) p(0, j) = u[j];
  return p;
}

Interval BiPoly::coeff(int i, int j) const {
  if (i < 0 || j < 0 || i > dx_ || j > dy_) return zero();
  return (*this)(i, j);
}

BiPoly BiPoly::swapped() const {
  BiPoly q(dy_, dx_, center_);
  for (int i = 0; i <= dx_; ++i)
    for (int j = 0; j <= dy_; ++j) q(j, i) = (*this)(i, j);
  return q;
}

Interval polydisc_bound(const BiPoly& p, const Interval& r1, const Interval& r2) {
  const auto px = powers(r1, p.deg_x());
  const auto py = powers(r2, p.deg_y());
  Interval sum = zero();
  for (int i = 0; i <= p.deg_x(); ++i) {
    for (int j = 0; j <= p.deg_y(); ++j) {
      const double m = mag(p(i, j));
      if (m == 0.0) continue;
      sum = sum + Interval::point(m) * px[i] * py[j];
    }
  }
  return sum;
}

Interval ell1_norm(const BiPoly& p, const Interval& rho) {
  if (!(rho.lo() > 0.0)) throw DomainError("ell1_norm requires a positive radius");
  return polydisc_bound(p, rho, rho);
}

Interval eval_box(const BiPoly& p, const Interval& X, const Interval& Y) {
  const Interval x = X - p.center();
  const Interval y = Y - p.center();
  Interval acc = zero();
  for (int i = p.deg_x(); i >= 0; --i) {
    Interval row = p(i, p.deg_y());
    for (int j = p.deg_y() - 1; j >= 0; --j) row = row * y + p(i, j);
    acc = (i == p.deg_x()) ? row : acc * x + row;
  }
  return acc;
}

BiPoly padd(const BiPoly& p, const BiPoly& q) {
  check_center(p, q);
  BiPoly r(std::max(p.deg_x(), q.deg_x()), std::max(p.deg_y(), q.deg_y()), p.center());
  for (int i = 0; i <= r.deg_x(); ++i)
    for (int j = 0; j <= r.deg_y(); ++j) r(i, j) = p.coeff(i, j) + q.coeff(i, j);
  return r;
}

BiPoly psub(const BiPoly& p, const BiPoly& q) {
  check_center(p, q);
  BiPoly r(std::max(p.deg_x(), q.deg_x()), std::max(p.deg_y(), q.deg_y()), p.center());
  for (int i = 0; i <= r.deg_x(); ++i)
    for (int j = 0; j <= r.deg_y(); ++j) r(i, j) = p.coeff(i, j) - q.coeff(i, j);
  return r;
}

BiPoly pmul(const BiPoly& p, const BiPoly& q) {
  check_center(p, q);
  BiPoly r(p.deg_x() + q.deg_x(), p.deg_y() + q.deg_y(), p.center());
  for (int i = 0; i <= p.deg_x(); ++i)
    for (int j = 0; j <= p.deg_y(); ++j) {
      const Interval& a = p(i, j);
      if (a == zero()) continue;
      for (int k = 0; k <= q.deg_x(); ++k)
        for (int l = 0; l <= q.deg_y(); ++l) r(i + k, j + l) = r(i + k, j + l) + a * q(k, l);
    }
  return r;
}

BiPoly pscale(const BiPoly& p, const Interval& k) {
  BiPoly r = p;
  for (int i = 0; i <= p.deg_x(); ++i)
    for (int j = 0; j <= p.deg_y(); ++j) r(i, j) = p(i, j) * k;
  return r;
}

BiPoly pdiff2(const BiPoly& p) {
  BiPoly r(p.deg_x(), std::max(0, p.deg_y() - 1), p.center());
  for (int i = 0; i <= p.deg_x(); ++i)
    for (int j = 1; j <= p.deg_y(); ++j) r(i, j - 1) = p(i, j) * static_cast<double>(j);
  return r;
}

BiPoly shift_x(const BiPoly& p, const Interval& p0) {
  const int n = p.deg_x();
  // binom[i][k] exact for the small degrees used here.
  std::vector<std::vector<double>> binom(n + 1, std::vector<double>(n + 1, 0.0));
  for (int i = 0; i <= n; ++i) {
    binom[i][0] = 1.0;
    for (int k = 1; k <= i; ++k) binom[i][k] = binom[i - 1][k - 1] + (k <= i - 1 ? binom[i - 1][k] : 0.0);
  }
  std::vector<Interval> pw(n + 1);
  pw[0] = Interval::point(1.0);
  for (int k = 1; k <= n; ++k) pw[k] = pw[k - 1] * p0;

  BiPoly r(n, p.deg_y(), p.center());
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= p.deg_y(); ++j) {
      const Interval& a = p(i, j);
      for (int k = 0; k <= i; ++k) r(k, j) = r(k, j) + a * binom[i][k] * pw[i - k];
    }
  return r;
}

BiPoly truncate_x(const BiPoly& p, int max_deg_x) {
  const int dx = std::min(p.deg_x(), std::max(0, max_deg_x));
  BiPoly r(dx, p.deg_y(), p.center());
  if (max_deg_x < 0) return r;
  for (int i = 0; i <= dx; ++i)
    for (int j = 0; j <= p.deg_y(); ++j) r(i, j) = p(i, j);
  return r;
}

YSlices y_slices(const BiPoly& s) {
  for (int j = 4; j <= s.deg_y(); ++j)
    for (int i = 0; i <= s.deg_x(); ++i)
      if (!(s(i, j) == zero())) throw DegreeError("y-degree exceeds 3");
  const std::size_t n = static_cast<std::size_t>(s.deg_x()) + 1;
  std::array<std::vector<Interval>, 4> cols;
  for (auto& col : cols) col.assign(n, zero());
  for (int i = 0; i <= s.deg_x(); ++i)
    for (int j = 0; j <= 3; ++j) cols[j][i] = s.coeff(i, j);
  return {UniPoly(cols[3]), UniPoly(cols[2]), UniPoly(cols[1]), UniPoly(cols[0])};
}

BiPoly from_slices(const YSlices& s, double center) {
  const int dx = static_cast<int>(std::max({s.d.size(), s.a.size(), s.b.size(), s.c.size(),
                                            std::size_t{1}})) - 1;
  BiPoly r(dx, 3, center);
  const UniPoly* cols[4] = {&s.c, &s.b, &s.a, &s.d};
  for (int j = 0; j <= 3; ++j)
    for (std::size_t i = 0; i < cols[j]->size(); ++i) r(static_cast<int>(i), j) = (*cols[j])[i];
  return r;
}

YSlices parse_coefficient_table(std::istream& in) {
  std::map<std::pair<char, int>, Interval> entries;
  int max_index = 0;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::string col;
    std::string index_text;
    std::string value;
    std::string extra;
    if (!(ls >> col >> index_text >> value) || (ls >> extra)) {
      throw ParseError("coefficient table line " + std::to_string(lineno) + ": expected '<c|b|a|d> <i> <value>'");
    }
    if (col.size() != 1 || std::string("cbad").find(col[0]) == std::string::npos) {
      throw ParseError("coefficient table line " + std::to_string(lineno) + ": unknown column '" + col + "'");
    }
    int index = -1;
    try {
      std::size_t used = 0;
      index = std::stoi(index_text, &used);
      if (used != index_text.size()) index = -1;
    } catch (const std::exception&) {
      index = -1;
    }
    if (index < 0 || index > 64) {
      throw ParseError("coefficient table line " + std::to_string(lineno) + ": bad index '" + index_text + "'");
    }
    const auto key = std::make_pair(col[0], index);
    if (entries.count(key)) {
      throw ParseError("coefficient table line " + std::to_string(lineno) + ": duplicate entry");
    }
    entries.emplace(key, parse_decimal(value));
    max_index = std::max(max_index, index);
  }
  for (char col : std::string("cbad"))
    for (int i = 0; i <= max_index; ++i)
      if (!entries.count({col, i})) {
        throw ParseError(std::string("coefficient table is missing entry ") + col + " " + std::to_string(i));
      }
  std::vector<Interval> zeros(static_cast<std::size_t>(max_index) + 1, zero());
  YSlices out{UniPoly(zeros), UniPoly(zeros), UniPoly(zeros), UniPoly(zeros)};
  for (const auto& [key, v] : entries) {
    UniPoly* target = key.first == 'c' ? &out.c : key.first == 'b' ? &out.b : key.first == 'a' ? &out.a : &out.d;
    (*target)[static_cast<std::size_t>(key.second)] = v;
  }
  return out;
}

YSlices parse_coefficient_table_text(const std::string& text) {
  std::istringstream in(text);
  return parse_coefficient_table(in);
}

}  // namespace pdcert
