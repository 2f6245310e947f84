#pragma once

#include "diskres/fieldgrid.hpp"
#include "diskres/types.hpp"

/// Closed dielectric-filled disk with Dirichlet boundary: J_m(n kR) = 0.
namespace diskres::billiard {

struct BilliardEigenvalue {
  ModeIndex mode;
  double n = 1.0;
  double kR = 0.0;  ///< j_{m,ell} / n
};

/// Throws InvalidArgument for n < 1 (n = 1 is the empty billiard).
BilliardEigenvalue billiard_eigenvalue(const ModeIndex& mode, double n);

/// |J_m(n kR r)|^2 inside the disk, exactly 0 on and outside it; max = 1.
fieldgrid::FieldGrid normal_mode_field(const ModeIndex& mode, double n,
                                       const fieldgrid::GridSpec& window);

}  // namespace diskres::billiard
