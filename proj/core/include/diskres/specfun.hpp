#pragma once

#include <span>

#include "diskres/types.hpp"

/// Cylindrical Bessel and Hankel functions of integer order and complex
/// argument, plus real zeros of J_m.
///
/// Supported domain: 0 <= m <= 60, |z| <= 200, |Im z| <= 20. Outside it the
/// functions throw DomainError. The Hankel function uses the principal
/// branch (cut along the negative real axis).
namespace diskres::specfun {

inline constexpr int kMaxOrder = 60;
inline constexpr double kMaxAbsArg = 200.0;
inline constexpr double kMaxAbsImag = 20.0;
inline constexpr int kMaxZeroIndex = 40;
/// Real-axis limit of bessel_j_real; covers every zero j_{m,ell} in range.
inline constexpr double kMaxRealArg = 250.0;

Complex bessel_j(int m, Complex z);
Complex bessel_j_deriv(int m, Complex z);
Complex bessel_y(int m, Complex z);
Complex hankel1(int m, Complex z);
Complex hankel1_deriv(int m, Complex z);

/// J_m(z) and J_m'(z) from a single evaluation.
struct BesselPair {
  Complex value;
  Complex deriv;
};

BesselPair bessel_j_pair(int m, Complex z);
BesselPair hankel1_pair(int m, Complex z);

/// J_0(z) .. J_{out.size()-1}(z), all from one recurrence run.
void bessel_j_sequence(Complex z, std::span<Complex> out);

/// ell-th positive zero j_{m,ell} of J_m (ell >= 1).
double bessel_j_zero(int m, int ell);

/// J_m on the real axis for |x| <= kMaxRealArg.
double bessel_j_real(int m, double x);

}  // namespace diskres::specfun
