#include "diskres/types.hpp"

#include "diskres/errors.hpp"
#include "diskres/specfun.hpp"

namespace diskres {

void validate(const ModeIndex& mode) {
  if (mode.m < 0 || mode.m > specfun::kMaxOrder) {
    throw InvalidArgument("angular number m=" + std::to_string(mode.m) + " outside [0, 60]");
  }
  if (mode.ell < 1 || mode.ell > specfun::kMaxZeroIndex) {
    throw InvalidArgument("radial number ell=" + std::to_string(mode.ell) + " outside [1, 40]");
  }
}

std::string to_string(const ModeIndex& mode) {
  return "(m=" + std::to_string(mode.m) + ", ell=" + std::to_string(mode.ell) + ")";
}

}  // namespace diskres
