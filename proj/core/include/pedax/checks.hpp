#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pedax/rng.hpp"
#include "pedax/scene.hpp"

namespace pedax {

/// Configuration for a randomized verification run. Every draw inside a
/// check is a pure function of (seed, check id, trial index), so repeated
/// runs produce byte-identical reports.
struct TrialConfig {
  std::uint64_t seed = 42;
  int trials = 200;
  Tolerance tol{};
  /// Offsets used by the grid checks, as fractions of the base inradius.
  std::vector<Scalar> x_grid{0.1, 0.25, 0.5};
  /// Parameter range for points P = I + t (O - I).
  std::pair<Scalar, Scalar> t_range{0.5, 3.0};
};

struct Failure {
  int index;
  Scalar residual;
  std::string detail;
};

struct CheckReport {
  std::string id;
  int trials;
  Scalar max_residual;
  Scalar tolerance;
  bool passed;
  std::vector<Failure> failures;
};

// Each check replays one statement of the configuration over seeded random
// trials and reports the worst dimensionless residual.
CheckReport check_equidistant_arc_midpoint(const TrialConfig& cfg);
CheckReport check_metric_identity(const TrialConfig& cfg);
CheckReport check_orthology_lemmas(const TrialConfig& cfg);
CheckReport check_fixed_point(const TrialConfig& cfg);
CheckReport check_steiner_euler(const TrialConfig& cfg);
CheckReport check_isogonal_parallel(const TrialConfig& cfg);
CheckReport check_polarity(const TrialConfig& cfg);
CheckReport check_fixed_line(const TrialConfig& cfg);
CheckReport check_section4(const TrialConfig& cfg);
CheckReport check_open_problem(const TrialConfig& cfg);

struct CheckInfo {
  const char* id;
  const char* title;
  /// Multiplier on tol.abs_tol for this check's pass threshold.
  Scalar tol_factor;
  CheckReport (*fn)(const TrialConfig&);
};

/// Registered checks in canonical order.
std::span<const CheckInfo> check_catalog();
const CheckInfo* find_check(std::string_view id);

CheckReport run_check(std::string_view id, const TrialConfig& cfg);
/// One report per id, in the given order. Unknown ids raise UnknownCheckId.
std::vector<CheckReport> run_suite(std::span<const std::string> ids, const TrialConfig& cfg);

}  // namespace pedax
