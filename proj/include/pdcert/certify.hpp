#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pdcert/compactness.hpp"
#include "pdcert/contraction.hpp"
#include "pdcert/ivreal.hpp"
#include "pdcert/midpoint.hpp"
#include "pdcert/scalings.hpp"
#include "pdcert/seedmap.hpp"

namespace pdcert {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr const char* kBackend = "binary64/round-to-nearest+error-free-transforms/outward";

/// Decimal inputs are kept as text and enclosed when the pipeline starts.
struct Config {
  std::string rho = "1.75";
  std::string r = "0.483119964599609";
  std::string delta = "0.00405550003051758";
  std::string eps_ball = "0.01465";
  std::string kappa = "1.0699996948242188";
  std::string kappa2 = "1.0699462890625";
  std::string eps_prime = "auto";
  std::string shift_p = "0";
  std::string table = "builtin";  ///< "builtin" or a path
  double soft_slack = 1e-3;
  bool timestamp = false;
};

/// Reference constants the certified bounds are compared against.
namespace targets {
inline constexpr const char* z0_sup = "1.562789916992188";
inline constexpr const char* M = "1.0430755615234375";
inline constexpr const char* epsN = "0.0137615203857422";
inline constexpr const char* Dbar = "0.0125999450683594";
inline constexpr const char* lambda_lo = "-0.276069164276123";
inline constexpr const char* lambda_hi = "-0.222213745117188";
inline constexpr const char* mu_lo = "0.000406771898269653";
inline constexpr const char* mu_hi = "0.120654106140137";
}  // namespace targets

enum class CheckKind { mandatory, soft_target, informational };
enum class CheckStatus { pass, fail, skip };

struct CheckRecord {
  std::string name;
  std::string anchor;
  std::optional<Interval> computed;
  std::string target;
  CheckKind kind = CheckKind::mandatory;
  CheckStatus status = CheckStatus::skip;
  bool strictPass = false;
  bool softPass = false;
  std::string note;
};

struct Certificate {
  std::string tool_version = kToolVersion;
  std::string backend = kBackend;
  std::optional<std::string> timestamp;
  std::vector<std::pair<std::string, std::string>> config_echo;
  std::vector<CheckRecord> checks;

  // Numerical results of the stages that completed.
  std::optional<GeneratingSeed> seed;
  std::optional<MidpointBounds> midpoint;
  std::optional<ContractionBounds> contraction;
  std::optional<LambdaEnclosure> lambda;
  std::optional<Interval> mu;
  std::array<std::optional<CompactnessBounds>, 2> compactness;

  const CheckRecord* find(const std::string& name) const;
};

/// Names of the checks whose strict pass decides the overall result.
const std::vector<std::string>& mandatory_checks();

/**
 * Runs seed -> midpoint -> contraction -> scalings -> compactness.  Module
 * failures are recorded in the checks; dependent checks are marked SKIP.
 * Throws ConfigError on malformed configuration or unreadable table.
 */
Certificate run_pipeline(const Config& config);

enum class Format { text, structured };

/// Deterministic for a fixed certificate.
std::string emit(const Certificate& cert, Format format);

/// 0 strict pass, 1 pass only within the soft slack, 2 fail.
int exit_code(const Certificate& cert);
const char* overall_label(int code);

}  // namespace pdcert
