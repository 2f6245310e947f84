#pragma once

#include <optional>
#include <vector>

#include "diskres/fieldgrid.hpp"
#include "diskres/types.hpp"

/// Open dielectric disk (index n inside, 1 outside), TE polarization.
///
/// Resonances are the zeros of the matching determinant
///   F(kR) = n J_m'(n kR) H_m(kR) - n^2 J_m(n kR) H_m'(kR)
/// in the lower half of the complex kR plane, H_m = H_m^(1).
namespace diskres::cavity {

struct Resonance {
  ModeIndex mode;
  double n = 1.0;
  Complex kR;
  /// |F(kR)| relative to the magnitude of its two terms.
  double residual = 0.0;
};

/// Rectangle in the complex kR plane.
struct SearchRegion {
  double re_min = 0.0;
  double re_max = 0.0;
  double im_min = 0.0;
  double im_max = 0.0;

  /// Throws InvalidArgument unless re_min > 0 and the rectangle is nonempty.
  void validate() const;
  bool contains(Complex z) const {
    return z.real() > re_min && z.real() < re_max && z.imag() > im_min && z.imag() < im_max;
  }
};

Complex resonance_determinant(int m, double n, Complex kR);

struct DeterminantEval {
  Complex value;
  Complex deriv;   ///< dF/dkR
  double scale;    ///< |n J' H| + |n^2 J H'|
};

DeterminantEval evaluate_determinant(int m, double n, Complex kR);

struct FindOptions {
  std::optional<Complex> guess;
  /// Confirm by root counting that the root is the ell-th of its family.
  bool verify_rank = true;
  int max_iterations = 100;
};

/// Newton refinement of one resonance. Unseeded calls start from the
/// billiard value shifted by -0.1 - 0.05i.
///
/// Throws ConvergenceError when Newton stalls or lands outside the lower
/// half plane, WrongBranchError when the converged root is not the ell-th
/// member of the family.
Resonance find_resonance(const ModeIndex& mode, double n, const FindOptions& options = {});

/// Number of zeros of F inside the rectangle, by tracking arg F along the
/// boundary. Throws BoundaryTooCloseError if the contour passes through a
/// zero.
int count_roots_in_region(int m, double n, const SearchRegion& region);

/// All zeros in the region, sorted by real part, deduplicated at 1e-8.
std::vector<Complex> enumerate_roots(int m, double n, const SearchRegion& region);

/// Strip holding the radial (Fabry-Perot-like) family up to Re kR = re_max.
/// Exterior-type zeros with |Im kR| of order one lie below it.
SearchRegion family_region(int m, double n, double re_max);

/// 1-based rank of kR among the family's zeros ordered by real part.
int radial_rank(int m, double n, Complex kR);

/// The ell-th family member found by enumeration rather than seeding.
Resonance resonance_by_rank(const ModeIndex& mode, double n);

struct QnmFields {
  fieldgrid::FieldGrid interior;
  fieldgrid::FieldGrid tail;
  fieldgrid::FieldGrid full;
};

/// Interior part, exterior tail and their sum on a shared intensity scale:
/// continuous across r = 1, largest interior sample = 1. The tail may exceed
/// 1 far outside the disk since it grows with r for Im kR < 0.
QnmFields qnm_fields(const Resonance& res, const fieldgrid::GridSpec& window);

}  // namespace diskres::cavity
