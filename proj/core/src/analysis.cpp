#include "diskres/analysis.hpp"

#include <cmath>

#include "diskres/billiard.hpp"
#include "diskres/errors.hpp"

namespace diskres::analysis {

LambShiftRecord lamb_shift(const ModeIndex& mode, double n) {
  return lamb_shift(cavity::find_resonance(mode, n));
}

LambShiftRecord lamb_shift(const cavity::Resonance& res) {
  const double closed = billiard::billiard_eigenvalue(res.mode, res.n).kR;
  const double open = res.kR.real();
  return {res.mode, res.n, closed, open, closed - open};
}

DecayWidth decay_width_and_q(const cavity::Resonance& res) {
  const double im = res.kR.imag();
  if (!(im < 0.0)) throw InvalidArgument("decay width needs Im kR < 0");
  const double gamma = -2.0 * im;
  return {gamma, res.kR.real() / (2.0 * gamma)};
}

double effective_potential(double r, int m, double n, double k2) {
  if (!(r >= 0.0)) throw InvalidArgument("radius must be non-negative");
  if (r == 0.0) {
    if (m != 0) throw SingularityError("centrifugal term diverges at r = 0");
    return k2 * (1.0 - n * n);
  }
  const double index = r < 1.0 ? n : 1.0;
  return k2 * (1.0 - index * index) + double(m) * m / (r * r);
}

std::string_view to_string(BarrierClass c) {
  switch (c) {
    case BarrierClass::below_barrier:
      return "below_barrier";
    case BarrierClass::above_barrier:
      return "above_barrier";
    case BarrierClass::sub_bottom:
      return "sub_bottom";
  }
  return "unknown";
}

BarrierData barrier_bounds(int m, double n) {
  if (m == 0) throw NoBarrierError("m = 0 has no centrifugal barrier");
  if (m < 0) throw InvalidArgument("m must be non-negative");
  if (!(n > 1.0)) throw InvalidArgument("barrier needs n > 1");
  BarrierData b;
  b.k_T = double(m);
  b.k_B = double(m) / n;
  return b;
}

BarrierData classify_resonance(const cavity::Resonance& res) {
  const int m = res.mode.m;
  const double re = res.kR.real();
  BarrierData b;
  b.k_T = double(m);
  b.k_B = double(m) / res.n;
  b.v_bottom = effective_potential(std::nextafter(1.0, 0.0), m, res.n, re * re);
  if (re >= b.k_T) {
    b.cls = BarrierClass::above_barrier;
  } else if (re > b.k_B) {
    b.cls = BarrierClass::below_barrier;
  } else {
    b.cls = BarrierClass::sub_bottom;
  }
  return b;
}

}  // namespace diskres::analysis
