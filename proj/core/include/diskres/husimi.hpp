#pragma once

#include <span>
#include <string>
#include <vector>

#include "diskres/cavity.hpp"
#include "diskres/types.hpp"

/// Boundary phase-space (Husimi) distributions over arc length s and
/// tangential momentum p = sin(chi) on the unit circle.
namespace diskres::husimi {

struct Resolution {
  int ns = 256;  ///< s samples on [0, 2 pi)
  int np = 256;  ///< p samples on [-1, 1], both ends included
};

/// Values are stored p-major: values[ip * ns + is].
struct HusimiMap {
  std::vector<double> s_grid;
  std::vector<double> p_grid;
  std::vector<double> values;
  double p_crit = 0.0;

  int ns() const { return int(s_grid.size()); }
  int np() const { return int(p_grid.size()); }
  double at(int ip, int is) const { return values[std::size_t(ip) * s_grid.size() + is]; }
};

/// Critical momentum of total internal reflection, 1/n. Requires n > 1.
double critical_momentum(double n);

/// Minimum number of boundary samples accepted for wavenumber n * kR_re.
int min_boundary_samples(double n, double kR_re);

/// Interior trace J_m(n kR) e^{i m s} at s_j = 2 pi j / samples.
std::vector<Complex> boundary_trace(int m, double n, Complex kR, int samples);
std::vector<Complex> boundary_trace(const cavity::Resonance& res, int samples);

/// H(s0, p0) = |sum_j psi(s_j) conj(xi(s_j)) ds|^2 with the coherent state
///   xi(s) = sum_{w=-1,0,1} exp(-(s - s0 + 2 pi w)^2 / (2 sigma^2)
///                               + i k p0 (s - s0 + 2 pi w)),
/// k = n kR_re, sigma = k^{-1/2}. psi holds uniform samples over [0, 2 pi).
/// The result is scaled to max = 1.
///
/// Throws UndersampledError when psi is shorter than min_boundary_samples,
/// InvalidArgument for n <= 1, kR_re <= 0, ns < 1 or np < 2.
HusimiMap boundary_husimi(std::span<const Complex> psi, double n, double kR_re,
                          const Resolution& res = {});

/// Index of the largest value in column is.
int column_argmax(const HusimiMap& map, int is);

/// Sum over s for every p.
std::vector<double> p_marginal(const HusimiMap& map);

/// p at the maximum of the marginal, refined by a parabola through the
/// neighbouring samples.
double ridge_momentum(const HusimiMap& map);

/// Matrix with one p row per line, top line p = +1, "%.9e".
std::string write_csv_matrix(const HusimiMap& map);

}  // namespace diskres::husimi
