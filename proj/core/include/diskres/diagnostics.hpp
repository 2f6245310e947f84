#pragma once

#include <string>
#include <vector>

#include "diskres/types.hpp"

/// Residuals of special-function identities over a fixed sample grid.
namespace diskres::diagnostics {

struct Residual {
  std::string check;  ///< "wronskian", "recurrence_j" or "recurrence_h"
  int m = 0;
  Complex z;
  double absolute = 0.0;
  /// Absolute residual divided by the sum of the magnitudes of the terms.
  double relative = 0.0;
};

/// Orders {0, 1, 2, 5, 10, 20, 40, 60}; |z| in [0.1, 100] (log spaced),
/// arg z in [-0.3, 0.3], points with |Im z| > 20 skipped. Output order is
/// fixed.
std::vector<Residual> specfun_residuals();

/// "check,m,z_re,z_im,absolute,relative" with "%.12e" numbers.
std::string residuals_csv(const std::vector<Residual>& rows);

}  // namespace diskres::diagnostics
