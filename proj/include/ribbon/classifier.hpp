#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ribbon/alex_module.hpp"
#include "ribbon/lt_signature.hpp"

namespace ribbon {

enum class DerivativeKind { Unknot, Braid, Unknown };

struct Derivative {
  DerivativeKind kind = DerivativeKind::Unknown;
  BraidWord braid;  // for kind Braid
  friend bool operator==(const Derivative&, const Derivative&) = default;
  static Derivative unknot() { return {DerivativeKind::Unknot, {}}; }
  static Derivative unknown() { return {DerivativeKind::Unknown, {}}; }
  static Derivative from_braid(BraidWord w) { return {DerivativeKind::Braid, std::move(w)}; }
  std::string str() const;
};

/// "unknot", "unknown" or "braid:<letters>".
Derivative parse_derivative(const std::string& text, std::optional<int> strands = std::nullopt);

/// Derivative curve data keyed by lagrangian (P1 = t-2 side, P2 = 2t-1 side).
struct DerivativeSpec {
  Derivative p1 = Derivative::unknown();
  Derivative p2 = Derivative::unknown();
  const Derivative& for_factor(LagFactor f) const { return f == LagFactor::TMinus2 ? p1 : p2; }
  Derivative& for_factor(LagFactor f) { return f == LagFactor::TMinus2 ? p1 : p2; }
};

/// Known derivative data for the K_n family: the t-2 side always has an
/// unknotted derivative; for n = 3k the other side is the unknot for
/// k in {0, -1}, gamma_k for k > 0 and gamma_{-k-1} for k < -1; n in {-1, -2}
/// has unknotted derivatives on both sides. Anything else is Unknown.
DerivativeSpec kn_derivatives(long n);

enum class VerdictStatus { DiscExists, Obstructed, Unknown };
std::string status_name(VerdictStatus s);
VerdictStatus status_from_name(const std::string& s);

struct LagrangianVerdict {
  Lagrangian lagrangian;
  Metabolizer metabolizer;
  Derivative derivative;
  VerdictStatus status = VerdictStatus::Unknown;
  /// Witness for DiscExists, reason for Unknown, summary for Obstructed.
  std::string note;
  std::optional<LaurentPoly> derivative_delta;
  std::optional<Rho0Result> rho0;
  friend bool operator==(const LagrangianVerdict&, const LagrangianVerdict&) = default;
};

struct ClassificationReport {
  std::string input;
  IntMatrix seifert;
  LaurentPoly delta;
  ModuleKind kind = ModuleKind::Other;
  std::vector<LagrangianVerdict> verdicts;
  int disc_count_min = 0;
  int disc_count_max = 0;
  std::string summary;
  friend bool operator==(const ClassificationReport&, const ClassificationReport&) = default;
};

ClassificationReport classify_knot(const SeifertMatrix& V, const DerivativeSpec& derivs,
                                   const std::string& input_description = "", PrecisionBudget budget = {});

enum class ReportFormat { Json, Text };
std::string report_render(const ClassificationReport& r, ReportFormat format);
nlohmann::ordered_json report_json(const ClassificationReport& r);
/// Inverse of the JSON rendering.
ClassificationReport report_parse(const std::string& json_text);

}  // namespace ribbon
