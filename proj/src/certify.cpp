#include "pdcert/certify.hpp"

#include <algorithm>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "pdcert/errors.hpp"

namespace pdcert {

namespace {

using ordered_json = nlohmann::ordered_json;

Interval pt(double x) { return Interval::point(x); }

// Decimal configuration value, enclosed and rounded up to a representable.
Interval config_value(const std::string& text, const char* name) {
  try {
    return pt(parse_decimal(text).hi());
  } catch (const ParseError&) {
    throw ConfigError(std::string("invalid value for ") + name + ": '" + text + "'");
  }
}

// Strict upper target T: compare against the largest representable <= T.
double upper_target(const char* t) { return parse_decimal(t).lo(); }
// Strict lower target T: compare against the smallest representable >= T.
double lower_target(const char* t) { return parse_decimal(t).hi(); }

double inflate_up(double x, double slack) { return (pt(x) * (1.0 + pt(slack))).hi(); }

std::string decimal(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

YSlices read_table(const std::string& which) {
  if (which == "builtin") return builtin_table();
  std::ifstream in(which);
  if (!in) throw ConfigError("cannot open coefficient table '" + which + "'");
  try {
    return parse_coefficient_table(in);
  } catch (const ParseError& e) {
    throw ConfigError(std::string("coefficient table: ") + e.what());
  }
}

class Recorder {
 public:
  explicit Recorder(Certificate& c) : cert_(c) {}

  std::size_t add(std::string name, CheckKind kind, std::string target, std::string anchor) {
    CheckRecord r;
    r.name = std::move(name);
    r.kind = kind;
    r.target = std::move(target);
    r.anchor = std::move(anchor);
    r.note = "not evaluated";
    cert_.checks.push_back(std::move(r));
    return cert_.checks.size() - 1;
  }

  void result(std::size_t i, const Interval& computed, bool strict, bool soft) {
    auto& r = cert_.checks[i];
    r.computed = computed;
    r.strictPass = strict;
    r.softPass = strict || soft;
    r.status = r.softPass ? CheckStatus::pass : CheckStatus::fail;
    r.note.clear();
  }

  void result(std::size_t i, const Interval& computed, bool pass) { result(i, computed, pass, pass); }

  void error(std::size_t i, const std::exception& e) {
    auto& r = cert_.checks[i];
    r.status = CheckStatus::fail;
    r.strictPass = r.softPass = false;
    r.note = e.what();
  }

  void skip(std::size_t i, const std::string& why) {
    auto& r = cert_.checks[i];
    r.status = CheckStatus::skip;
    r.strictPass = r.softPass = false;
    r.note = why;
  }

  bool passed(std::size_t i) const { return cert_.checks[i].status == CheckStatus::pass; }

 private:
  Certificate& cert_;
};

void run_compactness(Certificate& cert, Recorder& rec, const Interval& delta, const Interval& r,
                     const Interval& kappa, const std::optional<Interval>& epsPrime,
                     const std::string& suffix, std::size_t slot, bool upstream_ok) {
  const std::size_t i_k0 = rec.add("k0_lt_1" + suffix, CheckKind::mandatory, "<1",
                                   "contraction factor of the Newton increments at kappa=" + hex(kappa.hi()));
  const std::size_t i_eps = rec.add("epsPrime_consistent" + suffix, CheckKind::mandatory, "Sigma<=eps'",
                                    "a-posteriori bound on the increments sum does not exceed eps'");
  const std::size_t i_lam = rec.add("lambda_domain" + suffix, CheckKind::mandatory, "|lambda|*rho'<=rho",
                                    "rescaled second variable stays in the disc of radius rho");
  const std::size_t i_fin = rec.add("compactness_final" + suffix, CheckKind::mandatory, "t'+gamma'<rho",
                                    "midpoint of renormalized maps stays in the disc of radius rho");
  const std::size_t i_chain = rec.add("k_chain" + suffix, CheckKind::informational, "K1,K2,K3<=K0",
                                      "contraction factors of the first increments do not exceed K0");

  if (!upstream_ok || !cert.lambda) {
    for (auto i : {i_k0, i_eps, i_lam, i_fin, i_chain}) rec.skip(i, "upstream check failed");
    return;
  }
  const PrimedSetup primed = [&]() -> PrimedSetup {
    try {
      return primed_setup(*cert.seed, r, kappa);
    } catch (const CertError&) {
      return PrimedSetup{kappa, upper_point(kappa * r), kappa * cert.seed->rho, pt(0.0)};
    }
  }();
  const bool lam_ok = lambda_domain_check(cert.lambda->lambda, primed.rhoPrime, cert.seed->rho);
  rec.result(i_lam, pt(mag(cert.lambda->lambda)) * pt(primed.rhoPrime.hi()), lam_ok);

  try {
    const CompactnessBounds b = compactness_bounds(*cert.seed, delta, r, kappa, cert.lambda->lambda, epsPrime);
    cert.compactness[slot] = b;
    rec.result(i_k0, b.ksg.K0, b.ksg.K0.hi() < 1.0);
    rec.result(i_eps, b.ksg.SigmaBound, b.ksg.SigmaBound.hi() <= b.epsPrime.lo());
    cert.checks[i_eps].target = "<=" + hex(b.epsPrime.lo());
    const Interval reach = pt(b.primed.tPrime.hi()) + pt(b.ksg.gammaPrime.hi());
    rec.result(i_fin, reach, reach.hi() < cert.seed->rho.lo());
    rec.result(i_chain, hull(hull(b.chainK[0], b.chainK[1]), b.chainK[2]), b.chainOk);
  } catch (const CertError& e) {
    rec.error(i_k0, e);
    for (auto i : {i_eps, i_fin, i_chain}) rec.skip(i, "k0_lt_1" + suffix + " not established");
  }
}

}  // namespace

const CheckRecord* Certificate::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

const std::vector<std::string>& mandatory_checks() {
  static const std::vector<std::string> names = {
      "z0_analytic",         "z0_sup",        "dc0_lt_1",          "cmp_holds",
      "lambda_in_range",     "mu_in_range",   "k0_lt_1",           "epsPrime_consistent",
      "lambda_domain",       "compactness_final",
      "k0_lt_1_kappa2",      "epsPrime_consistent_kappa2",
      "lambda_domain_kappa2", "compactness_final_kappa2"};
  return names;
}

Certificate run_pipeline(const Config& config) {
  const Interval rho = config_value(config.rho, "rho");
  const Interval r = config_value(config.r, "r");
  const Interval delta = config_value(config.delta, "delta");
  const Interval eps = config_value(config.eps_ball, "eps-ball");
  const Interval kappa = config_value(config.kappa, "kappa");
  const Interval kappa2 = config_value(config.kappa2, "kappa2");
  const Interval shift = config_value(config.shift_p, "shift-p");
  std::optional<Interval> epsPrime;
  if (config.eps_prime != "auto") epsPrime = config_value(config.eps_prime, "eps-prime");
  if (!rho.positive()) throw ConfigError("rho must be positive");
  if (r.lo() < 0.0 || delta.lo() < 0.0 || eps.lo() < 0.0) throw ConfigError("r, delta and eps-ball must be nonnegative");
  if (kappa.lo() < 1.0 || kappa2.lo() < 1.0) throw ConfigError("kappa must be at least 1");
  if (epsPrime && !epsPrime->positive()) throw ConfigError("eps-prime must be positive");
  if (!(config.soft_slack >= 0.0)) throw ConfigError("soft-slack must be nonnegative");

  Certificate cert;
  if (config.timestamp) {
    char buf[32];
    const std::time_t now = std::time(nullptr);
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    cert.timestamp = buf;
  }
  const YSlices table = read_table(config.table);
  cert.config_echo = {{"rho", hex(rho.hi())},
                      {"r", hex(r.hi())},
                      {"delta", hex(delta.hi())},
                      {"eps_ball", hex(eps.hi())},
                      {"eps_prime", epsPrime ? hex(epsPrime->hi()) : std::string("auto")},
                      {"kappa", hex(kappa.hi())},
                      {"kappa2", hex(kappa2.hi())},
                      {"shift_p", hex(shift.hi())},
                      {"table", config.table},
                      {"table_sha256", table_hash(table)},
                      {"soft_slack", decimal(config.soft_slack)},
                      {"nu_branch", kNuBranch}};

  Recorder rec(cert);
  const double slack = config.soft_slack;

  const std::size_t i_seed = rec.add("seed_valid", CheckKind::informational, "s0(0,0)=1,c>0",
                                     "seed normalization and positivity of b0^2-4a0theta0");
  const std::size_t i_an = rec.add("z0_analytic", CheckKind::mandatory, ">0",
                                   "radicand of the midpoint quadratic bounded away from 0 on the bi-disk of radius r");
  const std::size_t i_lit = rec.add("z0_literal_split", CheckKind::informational, ">0",
                                    "radicand margin with the two perturbation terms bounded separately");
  const std::size_t i_sup = rec.add("z0_sup", CheckKind::mandatory, std::string("<") + targets::z0_sup,
                                    "sup norm of the midpoint solution on the bi-disk of radius r");
  const std::size_t i_dc0 = rec.add("dc0_lt_1", CheckKind::mandatory, "<1",
                                    "derivative of the midpoint operator at the approximate solution");
  const std::size_t i_M = rec.add("M_bound", CheckKind::soft_target, std::string("<=") + targets::M,
                                  "norm of the inverse of I-DC0 by Neumann series");
  const std::size_t i_eN = rec.add("epsN_bound", CheckKind::soft_target, std::string("<") + targets::epsN,
                                   "size of the first Newton step over the delta-ball");
  const std::size_t i_D = rec.add("Dbar_bound", CheckKind::soft_target, std::string("<=") + targets::Dbar,
                                  "derivative of the Newton map on the eps-ball");
  const std::size_t i_cmp = rec.add("cmp_holds", CheckKind::mandatory, "<(1-Dbar)*eps/M",
                                    "contraction mapping hypothesis for the midpoint Newton map");
  const std::size_t i_R = rec.add("cauchy_radii", CheckKind::informational, ">1",
                                  "smallest of the Cauchy-estimate radii R, Rtilde, Rhat");
  const std::size_t i_lam = rec.add("lambda_in_range", CheckKind::mandatory,
                                    std::string("in[") + targets::lambda_lo + "," + targets::lambda_hi + "]",
                                    "spatial scaling over the delta-ball of real maps");
  const std::size_t i_mu = rec.add("mu_in_range", CheckKind::mandatory,
                                   std::string("in[") + targets::mu_lo + "," + targets::mu_hi + "]",
                                   "normalization scaling over the delta-ball of real maps");

  // Seed.
  try {
    cert.seed = load_seed(table, rho, delta, shift);
    rec.result(i_seed, cert.seed->cconst, true);
  } catch (const InvariantError& e) {
    rec.error(i_seed, e);
  } catch (const ParseError& e) {
    throw ConfigError(std::string("coefficient table: ") + e.what());
  }
  if (!cert.seed) {
    for (std::size_t i = i_an; i < cert.checks.size(); ++i) rec.skip(i, "seed not available");
    run_compactness(cert, rec, delta, r, kappa, epsPrime, "", 0, false);
    run_compactness(cert, rec, delta, r, kappa2, epsPrime, "_kappa2", 1, false);
    return cert;
  }
  const GeneratingSeed& seed = *cert.seed;

  // Midpoint.
  try {
    const AbcSplit abc = split_abc(seed);
    const F12Bounds f = f1f2_bounds(abc, r);
    rec.result(i_lit, pt(f.Q.lo()) - (f.F1bound + f.F2bound), z0_literal_split_check(seed, r));
  } catch (const CertError& e) {
    rec.error(i_lit, e);
  }
  try {
    cert.midpoint = z0_sup_bound(seed, r);
    const auto& mb = *cert.midpoint;
    rec.result(i_an, pt(mb.f12.Q.lo()) - mb.f12.E, true);
    const double T = upper_target(targets::z0_sup);
    rec.result(i_sup, mb.t, mb.t.hi() < T, mb.t.hi() <= inflate_up(T, slack));
  } catch (const CertError& e) {
    rec.error(i_an, e);
    rec.skip(i_sup, "z0_analytic not established");
  }

  // Contraction.
  bool cmp_ok = false;
  if (!cert.midpoint) {
    for (auto i : {i_dc0, i_M, i_eN, i_D, i_cmp, i_R}) rec.skip(i, "z0_sup not established");
  } else {
    try {
      const DcM dm = dc0_and_M(seed, r, upper_point(cert.midpoint->t));
      rec.result(i_dc0, dm.dc0, dm.dc0.hi() < 1.0);
    } catch (const NotContractive&) {
      rec.result(i_dc0, polydisc_bound(seed.dTheta0, r, upper_point(cert.midpoint->t)) /
                            sqrt(seed.cconst - 4.0 * abs(seed.a0) *
                                                   polydisc_bound(seed.Theta0, r, upper_point(cert.midpoint->t))),
                 false);
    } catch (const CertError& e) {
      rec.error(i_dc0, e);
    }
    if (!rec.passed(i_dc0)) {
      for (auto i : {i_M, i_eN, i_D, i_cmp, i_R}) rec.skip(i, "dc0_lt_1 not established");
    } else {
      try {
        cert.contraction = contraction_bounds(seed, delta, r, cert.midpoint->t, eps);
        const auto& cb = *cert.contraction;
        const double TM = upper_target(targets::M);
        rec.result(i_M, cb.Mbar, cb.Mbar.hi() <= TM, cb.Mbar.hi() <= inflate_up(TM, slack));
        const double TE = upper_target(targets::epsN);
        rec.result(i_eN, cb.epsN, cb.epsN.hi() < TE, cb.epsN.hi() <= inflate_up(TE, slack));
        const double TD = upper_target(targets::Dbar);
        rec.result(i_D, cb.terms.Dbar, cb.terms.Dbar.hi() <= TD, cb.terms.Dbar.hi() <= inflate_up(TD, slack));
        rec.result(i_cmp, cb.epsN, cb.cmp);
        cert.checks[i_cmp].target = "<" + hex(cb.cmpRhs.lo());
        cmp_ok = cb.cmp;
        if (cb.R && cb.Rtilde && cb.Rhat) {
          const double lo = std::min({cb.R->lo(), cb.Rtilde->lo(), cb.Rhat->lo()});
          const double hi = std::min({cb.R->hi(), cb.Rtilde->hi(), cb.Rhat->hi()});
          rec.result(i_R, Interval(lo, hi), lo > 1.0);
        } else {
          rec.skip(i_R, "delta or eps is zero");
        }
      } catch (const CertError& e) {
        for (auto i : {i_M, i_eN, i_D, i_R}) rec.skip(i, "contraction bounds unavailable");
        rec.error(i_cmp, e);
      }
    }
  }

  // Scalings.
  try {
    cert.lambda = lambda_enclosure(seed, delta);
    const Interval& L = cert.lambda->lambda;
    const double lo = lower_target(targets::lambda_lo);
    const double hi = upper_target(targets::lambda_hi);
    const bool unit = L.lo() > -1.0 && L.hi() < 0.0;
    const bool strict = unit && L.lo() >= lo && L.hi() <= hi;
    const bool soft = unit && L.lo() >= (pt(lo) - 1e-4).lo() && L.hi() <= (pt(hi) + 1e-4).hi();
    rec.result(i_lam, L, strict, soft);
  } catch (const CertError& e) {
    rec.error(i_lam, e);
  }
  if (!cmp_ok) {
    rec.skip(i_mu, "cmp_holds not established");
  } else {
    try {
      cert.mu = mu_enclosure(seed, delta, cert.contraction->Mbar, eps, cert.midpoint->z00);
      const Interval& m = *cert.mu;
      const double lo = lower_target(targets::mu_lo);
      const double hi = upper_target(targets::mu_hi);
      const bool pos = m.lo() > 0.0;
      const bool strict = pos && m.lo() >= lo && m.hi() <= hi;
      const bool soft = pos && m.lo() >= (pt(lo) - 1e-4).lo() && m.hi() <= (pt(hi) + 1e-4).hi();
      rec.result(i_mu, m, strict, soft);
    } catch (const CertError& e) {
      rec.error(i_mu, e);
    }
  }

  // Compactness at both inflation factors.
  const bool upstream = cmp_ok && rec.passed(i_lam);
  run_compactness(cert, rec, delta, r, kappa, epsPrime, "", 0, upstream);
  run_compactness(cert, rec, delta, r, kappa2, epsPrime, "_kappa2", 1, upstream);
  return cert;
}

int exit_code(const Certificate& cert) {
  const auto& mand = mandatory_checks();
  bool all_strict = true;
  for (const auto& name : mand) {
    const CheckRecord* c = cert.find(name);
    if (!c || !c->softPass) return 2;
    all_strict = all_strict && c->strictPass;
  }
  for (const auto& c : cert.checks)
    if (c.kind == CheckKind::soft_target && !c.strictPass) all_strict = false;
  return all_strict ? 0 : 1;
}

const char* overall_label(int code) {
  switch (code) {
    case 0: return "PASS";
    case 1: return "SOFT-PASS";
    case 2: return "FAIL";
    default: return "ERROR";
  }
}

namespace {

const char* status_label(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "PASS";
    case CheckStatus::fail: return "FAIL";
    case CheckStatus::skip: return "SKIP";
  }
  return "SKIP";
}

const char* kind_label(CheckKind k) {
  switch (k) {
    case CheckKind::mandatory: return "mandatory";
    case CheckKind::soft_target: return "soft_target";
    case CheckKind::informational: return "informational";
  }
  return "informational";
}

std::string emit_text(const Certificate& cert) {
  std::ostringstream out;
  out << "# pdcert " << cert.tool_version << " backend=" << cert.backend << "\n";
  if (cert.timestamp) out << "# timestamp " << *cert.timestamp << "\n";
  out << "# config";
  for (const auto& [k, v] : cert.config_echo) {
    out << ' ' << k << '=' << (v.find(' ') == std::string::npos ? v : "\"" + v + "\"");
  }
  out << "\n";
  for (const auto& c : cert.checks) {
    out << c.name << ' ' << status_label(c.status) << " computed=";
    out << (c.computed ? hex(*c.computed) : std::string("none"));
    out << " target=" << c.target << " anchor=\"" << c.anchor << "\"";
    if (c.status == CheckStatus::pass && !c.strictPass) out << " slack=soft";
    if (!c.note.empty()) out << " note=\"" << c.note << "\"";
    out << "\n";
  }
  const int code = exit_code(cert);
  out << "overall " << overall_label(code) << " exit=" << code << "\n";
  return out.str();
}

std::string emit_structured(const Certificate& cert) {
  ordered_json j;
  j["meta"]["tool_version"] = cert.tool_version;
  j["meta"]["backend"] = cert.backend;
  if (cert.timestamp) j["meta"]["timestamp"] = *cert.timestamp;
  for (const auto& [k, v] : cert.config_echo) j["config"][k] = v;
  j["checks"] = ordered_json::array();
  for (const auto& c : cert.checks) {
    ordered_json r;
    r["name"] = c.name;
    r["status"] = status_label(c.status);
    r["kind"] = kind_label(c.kind);
    r["strict_pass"] = c.strictPass;
    r["soft_pass"] = c.softPass;
    if (c.computed) {
      r["computed"] = {{"lo", hex(c.computed->lo())}, {"hi", hex(c.computed->hi())}};
      r["computed_decimal"] = {{"lo", decimal(c.computed->lo())}, {"hi", decimal(c.computed->hi())}};
    } else {
      r["computed"] = nullptr;
    }
    r["target"] = c.target;
    r["anchor"] = c.anchor;
    if (!c.note.empty()) r["note"] = c.note;
    j["checks"].push_back(r);
  }
  const int code = exit_code(cert);
  j["overall"] = overall_label(code);
  j["exit_code"] = code;
  return j.dump(2) + "\n";
}

}  // namespace

std::string emit(const Certificate& cert, Format format) {
  return format == Format::text ? emit_text(cert) : emit_structured(cert);
}

}  // namespace pdcert
