#pragma once

#include <string_view>

#include "diskres/cavity.hpp"
#include "diskres/types.hpp"

/// Quantities derived from a closed/open spectrum pair. All spectral values
/// are in kR units; the energy E = k^2 appears only in the effective
/// potential.
namespace diskres::analysis {

struct LambShiftRecord {
  ModeIndex mode;
  double n = 1.0;
  double closed_kR = 0.0;
  double open_kR_re = 0.0;
  double L = 0.0;  ///< closed_kR - open_kR_re
};

LambShiftRecord lamb_shift(const ModeIndex& mode, double n);
/// Uses an already converged resonance for the open side.
LambShiftRecord lamb_shift(const cavity::Resonance& res);

struct DecayWidth {
  double gamma = 0.0;  ///< -2 Im kR
  double q = 0.0;      ///< Re kR / (2 gamma)
};

/// Throws InvalidArgument when Im kR == 0 (no decay), including growing modes.
DecayWidth decay_width_and_q(const cavity::Resonance& res);

/// V_eff(r) = k2 (1 - n(r)^2) + m^2 / r^2 with n(r) = n inside the unit
/// disk and 1 outside. Throws SingularityError at r = 0 for m >= 1.
double effective_potential(double r, int m, double n, double k2);

enum class BarrierClass {
  below_barrier,  ///< m/n < Re kR < m: trapped
  above_barrier,  ///< Re kR >= m
  sub_bottom,     ///< Re kR <= m/n: below the bottom of the well
};

std::string_view to_string(BarrierClass c);

struct BarrierData {
  double k_T = 0.0;       ///< m / R (R = 1)
  double k_B = 0.0;       ///< m / (n R)
  double v_bottom = 0.0;  ///< V_eff just inside r = 1 at E = (Re kR)^2
  BarrierClass cls = BarrierClass::above_barrier;
};

/// k_T and k_B only. Throws NoBarrierError for m = 0.
BarrierData barrier_bounds(int m, double n);

/// m = 0 resonances have no barrier and are reported above_barrier.
BarrierData classify_resonance(const cavity::Resonance& res);

}  // namespace diskres::analysis
