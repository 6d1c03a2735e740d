#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "regmod/catalog.hpp"

namespace regmod {

inline constexpr int kSchemaVersion = 1;
inline constexpr std::uint64_t kDefaultSeed = 20240601;

struct RunConfig {
  std::optional<int> grid_density;  ///< per-entry default when unset
  SamplingScheme scheme = SamplingScheme::UniformLattice;
  std::uint64_t seed = kDefaultSeed;
  RadiusLadder ladder;
  Tolerances tol;
  Params params;  ///< entry parameters and operation arguments
};

/// REGMOD_SEED when set and valid, the default seed otherwise.
std::uint64_t seed_from_env();

struct ExpectationOutcome {
  std::string expected;
  Provenance provenance = Provenance::Derived;
  std::string citation;
  bool passed = false;
};

struct RunReport {
  std::string entry;
  std::string operation;
  Json config;
  Json result;
  std::optional<std::string> error;
  std::vector<ExpectationOutcome> expectations;
  bool passed = true;
  double wall_seconds = 0.0;
  ModulusEstimate estimate;  ///< filled for estimate-valued operations (CSV export)
  bool has_estimate = false;

  Json to_json(bool with_timing) const;
};

/// Runs an operation on a catalog entry and checks the expectations recorded
/// for the same effective parameters. Estimator errors are embedded in the
/// report; unknown names throw UnknownEntry / UnknownOperation.
RunReport run_entry(const std::string& name, const std::string& operation,
                    const RunConfig& config);

struct VerifyAllReport {
  std::vector<RunReport> runs;
  bool passed = true;

  Json to_json(bool with_timing) const;
};

/// Every (entry, operation, parameters) combination that carries an expectation.
VerifyAllReport verify_all(const RunConfig& base, bool parallel);

}  // namespace regmod
