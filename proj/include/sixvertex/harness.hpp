#pragma once

// Orchestration of the full verification run and the file-producing
// subcommands. Every check runs on the configured regime and lattice;
// random draws come from per-check streams of the run seed, so identical
// configurations give identical reports apart from wall-time fields.

#include <string>
#include <vector>

#include "sixvertex/bethe.hpp"
#include "sixvertex/config.hpp"
#include "sixvertex/coordinate_wf.hpp"

namespace sixvertex {

struct CheckRecord {
  std::string name;
  std::string parameters;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  double wall_time_ms = 0.0;
  std::string error;  // non-empty when the check threw
};

struct CheckReport {
  RunConfig config;
  LatticeSpec lattice;
  std::vector<CheckRecord> checks;

  bool all_passed() const;
};

/// Names of the registered checks, in execution order.
const std::vector<std::string>& registered_checks();

/// Runs every registered check once, in order. Check failures and errors
/// are recorded; the run always completes.
CheckReport run_verify(const RunConfig& config);

/// Machine-readable report. With include_timing = false the wall-time
/// fields are omitted, which makes the document a pure function of the
/// configuration.
std::string report_json(const CheckReport& report, bool include_timing = true);
/// Human-readable table.
std::string report_table(const CheckReport& report);

/// Writes report.json and report.txt into config.output_dir.
void write_report(const CheckReport& report);

/// Solves the Bethe equations for the configured problem.
BetheRoots run_solve(const RunConfig& config);

struct WavefunctionResult {
  WaveTable formula;
  WaveTable oracle;
  RatioStatistic ratio;
};

/// Reads roots, refuses them unless they were solved for the configured
/// lattice and regime, and writes the formula and oracle tables to out_path.
WavefunctionResult run_wavefunction(const RunConfig& config, const std::string& roots_path,
                                    const std::string& out_path);

struct DwbcResult {
  int M = 0;
  cplx sum = 0.0;
  cplx recurrence = 0.0;
  double relative_difference = 0.0;
  double sum_ms = 0.0;
  double recurrence_ms = 0.0;
  /// |Phi(mu sigma, q) - Phi(mu, q)| / |Phi(mu, q)| for a random row
  /// permutation sigma; measured only.
  double row_symmetry_defect = 0.0;
};

/// One DWBC evaluation with seeded random row/column parameters.
DwbcResult run_dwbc(const RunConfig& config);

}  // namespace sixvertex
