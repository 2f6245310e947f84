#pragma once

#include <complex>
#include <string>

namespace diskres {

using Complex = std::complex<double>;

/// Angular (m) and radial (ell) quantum numbers of a mode family.
struct ModeIndex {
  int m = 0;
  int ell = 1;

  friend bool operator==(const ModeIndex&, const ModeIndex&) = default;
};

/// Throws InvalidArgument unless 0 <= m <= 60 and 1 <= ell <= 40.
void validate(const ModeIndex& mode);

std::string to_string(const ModeIndex& mode);

}  // namespace diskres
