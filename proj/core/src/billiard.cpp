#include "diskres/billiard.hpp"

#include <cmath>

#include "diskres/errors.hpp"
#include "diskres/specfun.hpp"

namespace diskres::billiard {

BilliardEigenvalue billiard_eigenvalue(const ModeIndex& mode, double n) {
  validate(mode);
  if (!(n >= 1.0) || !std::isfinite(n)) {
    throw InvalidArgument("refractive index must be >= 1, got " + std::to_string(n));
  }
  return {mode, n, specfun::bessel_j_zero(mode.m, mode.ell) / n};
}

fieldgrid::FieldGrid normal_mode_field(const ModeIndex& mode, double n,
                                       const fieldgrid::GridSpec& window) {
  const auto ev = billiard_eigenvalue(mode, n);
  auto grid = fieldgrid::sample_radial_mode(fieldgrid::RadialKind::interior_j, mode, n,
                                            Complex{ev.kR, 0.0}, window);
  grid.label = "billiard " + to_string(mode);
  return grid;
}

}  // namespace diskres::billiard
