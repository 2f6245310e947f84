#pragma once

#include <optional>
#include <string>
#include <vector>

#include "diskres/analysis.hpp"
#include "diskres/cavity.hpp"

/// Parameter sweeps over m or n producing one flat row per resonance.
namespace diskres::sweep {

struct SweepRow {
  int m = 0;
  int ell = 1;
  double n = 0.0;
  double closed_kR = 0.0;
  double open_kR_re = 0.0;
  double open_kR_im = 0.0;
  double L = 0.0;
  double gamma = 0.0;
  double q = 0.0;
  double k_T = 0.0;
  double k_B = 0.0;
  analysis::BarrierClass cls = analysis::BarrierClass::above_barrier;
  std::string error;  ///< empty when the row is valid

  bool ok() const { return error.empty(); }
};

SweepRow make_row(const cavity::Resonance& res);
SweepRow failed_row(const ModeIndex& mode, double n, std::string error);

/// Inclusive grid lo, lo + step, ..., hi.
struct NRange {
  double lo = 3.3;
  double hi = 6.0;
  double step = 0.02;

  void validate() const;
  std::vector<double> values() const;
};

inline constexpr double kMaxThresholdStep = 0.05;

/// One row per m, fresh seeding per mode, rows evaluated concurrently.
/// Solver failures land in the row's error field.
std::vector<SweepRow> run_sweep_m(int ell, int m_lo, int m_hi, double n);

/// Continuation along n for each ell (branches run concurrently); rows
/// grouped by ell in the given order, sorted by n. The radial rank is
/// re-checked every 10 steps; a jump is recorded as a branch-loss error and
/// the branch is reseeded.
std::vector<SweepRow> run_sweep_n(int m, const std::vector<int>& ells, const NRange& range);

struct ThresholdResult {
  int m = 0;
  int ell = 1;
  double T = 0.0;                 ///< n where dL/dn turns from + to -
  std::optional<double> n_cross;  ///< n where Re kR crosses k_T = m
};

/// Throws NoThresholdError when dL/dn never turns from positive to negative.
ThresholdResult find_threshold(int m, int ell, const NRange& range);

/// Number of rows with a non-empty error.
int error_count(const std::vector<SweepRow>& rows);

}  // namespace diskres::sweep
