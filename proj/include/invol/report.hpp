#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "invol/errors.hpp"
#include "invol/foliation.hpp"
#include "invol/involution.hpp"
#include "invol/linearize.hpp"
#include "invol/planar_map.hpp"
#include "invol/region.hpp"
#include "invol/spectral.hpp"

namespace invol {

/// Error raised by one stage of the analysis pipeline; `phase` names it
/// ("parse", "verify", "orientation", ...).
class PhaseError : public Error {
 public:
  PhaseError(std::string phase, const std::string& message);
  const std::string& phase() const noexcept { return phase_; }

 private:
  std::string phase_;
};

struct AnalyzeOptions {
  /// Map text "(f1, f2)" or "gallery:NAME[:n]".
  std::string map_spec;
  Region window;
  double epsilon = kDefaultEpsilon;
  double tol = 1e-9;
  double im_tol = kDefaultImagTol;
  int scan_n = kDefaultScanN;
  double collision_tol = kDefaultCollisionTol;
  /// Defaults to 1e-3 * window diameter.
  std::optional<double> separation_min;
  /// Leaves traced during analyze (0 = none); foliate picks its own default.
  int leaves = 0;
  double step = 1e-2;

  friend bool operator==(const AnalyzeOptions&, const AnalyzeOptions&) = default;
};

/// Map and a label for where it came from.
struct ResolvedMap {
  PlanarMap map;
  std::string source;
};

/// Throws PhaseError("parse", ...) on bad text or unknown gallery names.
ResolvedMap resolve_map(const std::string& map_spec);

struct LeafSummary {
  double parameter = 0.0;
  std::size_t points = 0;
  double residual = 0.0;
  double invariance_residual = 0.0;
  bool truncated = false;
};

struct AnalysisReport {
  AnalyzeOptions options;
  std::string map_source;
  std::optional<InvolutionVerdict> involution;
  std::optional<OrientationClass> orientation;
  std::optional<FixedPointSet> fixed_points;
  std::optional<BasePoint> base_point;
  std::size_t spectrum_samples = 0;
  std::optional<TheoremVerdict> verdict;
  std::optional<InjectivityCertificate> injectivity;
  std::optional<double> spectrum_shift_deviation;
  std::optional<JacobianBounds> jacobian_bounds;
  std::optional<FoliationKind> foliation_kind;
  std::vector<LeafSummary> leaves;
  std::map<std::string, double> timings_ms;
  /// Set when a phase failed; the fields of later phases stay empty.
  std::optional<std::string> failed_phase;
  std::optional<std::string> error;
};

/// verify -> orientation -> fixed points -> spectrum -> conditions ->
/// verdict -> injectivity scan -> spectrum shift (when Dphi(0) = -I) ->
/// foliation kind (and leaves when requested). Stops at the first failing
/// phase and records it in the report instead of throwing.
AnalysisReport run_analysis(const AnalyzeOptions& options);

nlohmann::json report_to_json(const AnalysisReport& report);
nlohmann::json options_to_json(const AnalyzeOptions& options);
/// Inverse of options_to_json; reads a report's "header".
AnalyzeOptions options_from_json(const nlohmann::json& header);

/// Report keys whose values may legitimately differ between identical runs.
const std::vector<std::string>& nondeterministic_fields();

struct FoliationRun {
  Region window;
  CanonicalFoliation foliation;
  std::vector<Leaf> leaves;
  std::vector<double> invariance;
  std::vector<FixedPoint> fixed_points;
  bool certified = false;
  std::string verdict_text;
};

/// Checks the hypotheses, then traces `options.leaves` leaves (or the
/// default count for the foliation kind when 0). Without `force`, an
/// unverified hypothesis is a PhaseError("foliate", ...).
FoliationRun run_foliation(const AnalyzeOptions& options, bool force);

}  // namespace invol
