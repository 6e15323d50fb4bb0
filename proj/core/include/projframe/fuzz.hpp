#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "projframe/scene.hpp"

namespace projframe {

enum class FuzzMode {
  /// Strict perspective pairs with any nonzero h.
  StrictPerspective,
  /// Strict perspective pairs with h = 1; every theorem predicate must hold.
  HOne,
  /// A random H-element applied to a random frame.
  InH,
  /// Strict pairs with h != 1 (every predicate must fail), plus the group
  /// and transition algebra on independent random frames and elements.
  General,
};

std::string_view to_string(FuzzMode mode);
/// Accepts strict-perspective, h-one, in-H, general. Throws Error{Parse}.
FuzzMode parse_mode(std::string_view text);

struct FuzzConfig {
  std::vector<std::size_t> dims{2, 3, 4, 5};
  std::size_t trials_per_dim = 500;
  std::uint64_t seed = 0;
  std::int64_t coeff_bound = 9;
  FuzzMode mode = FuzzMode::StrictPerspective;
  /// Worker threads. Never affects the report.
  unsigned jobs = 1;

  /// Throws Error{InvalidArgument}.
  void validate() const;
};

struct CheckResult {
  std::string invariant;
  bool passed = false;
  std::string detail;
};

struct TheoremFlags {
  bool is_hyperplane = false;
  bool passes_through_center = false;
  bool h_equals_one = false;
  bool equivalent = false;
};

/// Everything one trial produced.
struct TrialOutcome {
  std::size_t dim = 0;
  std::size_t trial = 0;
  std::uint64_t stream_seed = 0;
  std::vector<CheckResult> checks;
  std::optional<Rational> h;
  std::optional<TheoremFlags> flags;
  Scene scene;

  bool ok() const;
};

struct InvariantTally {
  std::size_t passed = 0;
  std::size_t failed = 0;
};

struct FailureRecord {
  std::size_t dim = 0;
  std::size_t trial = 0;
  std::uint64_t stream_seed = 0;
  std::string invariant;
  std::string detail;
  Scene scene;
};

struct TrialSummary {
  std::size_t dim = 0;
  std::size_t trial = 0;
  bool ok = true;
  std::vector<std::string> failed;
  std::optional<Rational> h;
  std::optional<TheoremFlags> flags;
};

struct FuzzReport {
  FuzzConfig config;
  std::vector<TrialSummary> trials;
  std::map<std::string, InvariantTally> invariants;
  std::optional<FailureRecord> first_failure;
  double elapsed_seconds = 0.0;

  std::size_t failed_trials() const;
  std::size_t failures(const std::string& invariant) const;
  std::size_t passes(const std::string& invariant) const;
};

/// Checks that depend only on a perspective pair (r, r2) and the mode's
/// expectation on the theorem predicates. Used by the runner and to replay
/// scenes loaded from a report.
std::vector<CheckResult> check_pair(FuzzMode mode, const AdaptedFrame& r, const AdaptedFrame& r2);

/// Replays the first pair of a scene under the given mode.
std::vector<CheckResult> replay_scene(FuzzMode mode, const Scene& scene);

/// One trial, fully determined by (mode, seed, dim, trial, coeff_bound).
TrialOutcome run_trial(FuzzMode mode, std::uint64_t seed, std::size_t dim, std::size_t trial, std::int64_t coeff_bound);

FuzzReport fuzz(const FuzzConfig& cfg);

Json to_json(const FuzzReport& report);

}  // namespace projframe
