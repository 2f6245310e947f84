#include "diskres/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <tuple>
#include <vector>

#include "diskres/errors.hpp"

namespace diskres::specfun {
namespace {

using std::numbers::pi;
constexpr double kEps = 1e-17;
constexpr double kEulerGamma = std::numbers::egamma;
constexpr Complex kI{0.0, 1.0};

void check_domain(int m, Complex z, const char* fn) {
  if (m < 0 || m > kMaxOrder) {
    throw DomainError(std::string(fn) + ": order " + std::to_string(m) +
                      " outside [0, " + std::to_string(kMaxOrder) + "]");
  }
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError(std::string(fn) + ": non-finite argument");
  }
  // A hair of slack so that grid endpoints computed in floating point pass.
  if (std::abs(z) > kMaxAbsArg * (1 + 1e-12) || std::abs(z.imag()) > kMaxAbsImag * (1 + 1e-12)) {
    throw DomainError(std::string(fn) + ": argument outside |z| <= 200, |Im z| <= 20");
  }
}

bool in_series_region(int m, Complex z) {
  const double a = std::abs(z);
  return a <= 5.0 || a * a <= 2.0 * (m + 1);
}

bool in_asymptotic_region(int m, Complex z) {
  return z.real() > 0 && std::abs(z) >= 25.0 + 0.5 * m * m;
}

// Ascending series (z/2)^m sum (-z^2/4)^k / (k! (m+k)!).
Complex series_j(int m, Complex z) {
  const Complex half = 0.5 * z;
  Complex lead = 1.0;
  for (int j = 1; j <= m; ++j) lead *= half / double(j);
  const Complex q = -half * half;
  Complex term = lead;
  Complex sum = lead;
  for (int k = 1; k < 500; ++k) {
    term *= q / (double(k) * double(m + k));
    sum += term;
    if (std::abs(term) <= kEps * std::abs(sum)) break;
  }
  return sum;
}

// Hankel's large-argument expansion for H^(1)_m and H^(2)_m.
struct HankelPair {
  Complex h1;
  Complex h2;
};

HankelPair asymptotic_hankel(int m, Complex z) {
  const double mu = 4.0 * m * m;
  const Complex omega = z - (0.5 * m + 0.25) * pi;
  Complex s1 = 1.0;
  Complex s2 = 1.0;
  Complex ak = 1.0;  // a_k(m) / z^k
  double last = 1.0;
  for (int k = 1; k < 200; ++k) {
    const double odd = 2.0 * k - 1.0;
    ak *= (mu - odd * odd) / (8.0 * k) / z;
    const double mag = std::abs(ak);
    if (mag > last) break;  // expansion started to diverge
    Complex ik = std::pow(kI, k);
    s1 += ik * ak;
    s2 += std::conj(ik) * ak;
    last = mag;
    if (mag < kEps) break;
  }
  const Complex amp = std::sqrt(2.0 / (pi * z));
  return {amp * std::exp(kI * omega) * s1, amp * std::exp(-kI * omega) * s2};
}

int miller_start(int top, Complex z) {
  const double scale = std::max<double>(top, std::abs(z));
  return static_cast<int>(scale + 25.0 + 5.0 * std::cbrt(scale)) + 1;
}

// Backward recurrence for J_0..J_top, normalized with
// e^{+-iz} = J_0 + 2 sum (+-i)^k J_k. Returns J_0..J_start so that
// Neumann series can use the high-order tail.
std::vector<Complex> miller_sequence(int top, Complex z) {
  const int start = miller_start(top, z);
  std::vector<Complex> f(static_cast<std::size_t>(start) + 2, Complex{0.0});
  constexpr double kBig = 1e250;
  f[start + 1] = 0.0;
  f[start] = 1e-300;
  for (int k = start; k >= 1; --k) {
    f[k - 1] = (2.0 * k / z) * f[k] - f[k + 1];
    if (std::abs(f[k - 1]) > kBig) {
      for (int j = k - 1; j <= start; ++j) f[j] /= kBig;
    }
  }
  const bool lower = z.imag() <= 0.0;
  const Complex unit = lower ? kI : -kI;
  Complex sum = 0.0;
  Complex phase = 1.0;
  for (int k = 1; k <= start; ++k) phase *= unit;
  for (int k = start; k >= 1; --k) {
    sum += phase * f[k];
    phase /= unit;
  }
  sum = f[0] + 2.0 * sum;
  const Complex norm = std::exp(lower ? kI * z : -kI * z) / sum;
  f.pop_back();
  for (auto& v : f) v *= norm;
  return f;
}

Complex j_single(int m, Complex z) {
  if (z == Complex{0.0}) return m == 0 ? 1.0 : 0.0;
  if (in_series_region(m, z)) return series_j(m, z);
  if (in_asymptotic_region(m, z)) {
    const auto h = asymptotic_hankel(m, z);
    return 0.5 * (h.h1 + h.h2);
  }
  return miller_sequence(m, z)[m];
}

// J_{m-1}, J_m, J_{m+1} with J_{-1} = -J_1.
struct Triplet {
  Complex lo, mid, hi;
};

Triplet j_triplet(int m, Complex z) {
  if (z == Complex{0.0}) {
    auto at0 = [](int k) -> Complex { return k == 0 ? 1.0 : 0.0; };
    return {m == 0 ? Complex{0.0} : at0(m - 1), at0(m), at0(m + 1)};
  }
  if (!in_series_region(m, z) && !in_asymptotic_region(m, z) &&
      !in_series_region(m + 1, z) && !in_asymptotic_region(m + 1, z)) {
    const auto seq = miller_sequence(m + 1, z);
    return {m == 0 ? -seq[1] : seq[m - 1], seq[m], seq[m + 1]};
  }
  const Complex mid = j_single(m, z);
  const Complex hi = j_single(m + 1, z);
  const Complex lo = m == 0 ? -hi : j_single(m - 1, z);
  return {lo, mid, hi};
}

// Y_0 and Y_1 from the Neumann series over a Miller sequence.
std::pair<Complex, Complex> neumann_y01(Complex z, const std::vector<Complex>& j) {
  const Complex log_term = std::log(0.5 * z) + kEulerGamma;
  const int top = static_cast<int>(j.size()) - 1;
  Complex s0 = 0.0;
  Complex s1 = 0.0;
  for (int k = 1; 2 * k + 1 <= top; ++k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    s0 += sign * j[2 * k] / double(k);
    s1 -= sign * (2.0 * k + 1.0) / (double(k) * (k + 1.0)) * j[2 * k + 1];
  }
  const Complex y0 = (2.0 / pi) * log_term * j[0] - (4.0 / pi) * s0;
  const Complex y1 =
      -(2.0 / pi) * j[0] / z + (2.0 / pi) * (log_term - 1.0) * j[1] + (2.0 / pi) * s1;
  return {y0, y1};
}

// K_0 and K_1 by Steed's method on the second continued fraction; Re x > 0
// and |x| >= 2.
std::pair<Complex, Complex> steed_k01(Complex x) {
  Complex b = 2.0 * (1.0 + x);
  Complex d = 1.0 / b;
  Complex h = d;
  Complex delh = d;
  Complex q1 = 0.0;
  Complex q2 = 1.0;
  const double a1 = 0.25;
  Complex q = a1;
  Complex c = a1;
  double a = -a1;
  Complex s = 1.0 + q * delh;
  bool converged = false;
  for (int i = 2; i <= 100000; ++i) {
    a -= 2.0 * (i - 1);
    c = -a * c / double(i);
    const Complex qnew = (q1 - b * q2) / a;
    q1 = q2;
    q2 = qnew;
    q += c * qnew;
    b += 2.0;
    d = 1.0 / (b + a * d);
    delh = (b * d - 1.0) * delh;
    h += delh;
    const Complex dels = q * delh;
    s += dels;
    if (std::abs(dels) < kEps * std::abs(s)) {
      converged = true;
      break;
    }
  }
  if (!converged) throw ConvergenceError("steed_k01: continued fraction did not converge");
  h = a1 * h;
  const Complex k0 = std::sqrt(pi / (2.0 * x)) * std::exp(-x) / s;
  const Complex k1 = k0 * (x + 0.5 - h) / x;
  return {k0, k1};
}

// H^(1)_0 and H^(1)_1 plus, when they are computed anyway, J_0 and J_1.
std::pair<Complex, Complex> hankel01(Complex z) {
  if (in_asymptotic_region(1, z)) {
    return {asymptotic_hankel(0, z).h1, asymptotic_hankel(1, z).h1};
  }
  if (z.imag() > 4.0) {
    // H^(1)_k(z) = (2 / (pi i)) (-i)^k K_k(-iz); J + iY would cancel here.
    const auto [k0, k1] = steed_k01(-kI * z);
    return {-(2.0 * kI / pi) * k0, -(2.0 / pi) * k1};
  }
  const auto j = miller_sequence(1, z);
  const auto [y0, y1] = neumann_y01(z, j);
  return {j[0] + kI * y0, j[1] + kI * y1};
}

// H^(1)_{m-1}, H^(1)_m, H^(1)_{m+1} by forward recurrence. Stable for
// Im z >= -4; below that H^(1) shrinks with order and the recurrence loses
// digits.
Triplet h1_forward(int m, Complex z) {
  const auto [h0, h1] = hankel01(z);
  Complex prev = h0;
  Complex cur = h1;
  for (int k = 1; k <= m; ++k) {
    const Complex next = (2.0 * k / z) * cur - prev;
    prev = cur;
    cur = next;
  }
  // After the loop: prev = H_m, cur = H_{m+1}.
  Complex lo;
  if (m == 0) {
    lo = -h1;
  } else if (m == 1) {
    lo = h0;
  } else {
    lo = (2.0 * m / z) * prev - cur;
  }
  return {lo, prev, cur};
}

Triplet conj(const Triplet& t) {
  return {std::conj(t.lo), std::conj(t.mid), std::conj(t.hi)};
}

// H^(2) via the mirror identity H^(2)(z) = conj(H^(1)(conj z)).
Triplet h2_triplet(int m, Complex z) {
  return conj(h1_forward(m, std::conj(z)));
}

constexpr double kFarFromAxis = 4.0;

Triplet h_triplet(int m, Complex z) {
  Triplet t;
  if (z.imag() < -kFarFromAxis) {
    // H^(1) = 2 J - H^(2); H^(2) grows with order here.
    const auto j = j_triplet(m, z);
    const auto h2 = h2_triplet(m, z);
    t = {2.0 * j.lo - h2.lo, 2.0 * j.mid - h2.mid, 2.0 * j.hi - h2.hi};
  } else {
    t = h1_forward(m, z);
  }
  if (!std::isfinite(std::abs(t.lo)) || !std::isfinite(std::abs(t.mid)) ||
      !std::isfinite(std::abs(t.hi))) {
    throw DomainError("hankel1: value overflows for order " + std::to_string(m) +
                      " at |z| = " + std::to_string(std::abs(z)));
  }
  return t;
}

void check_hankel_arg(int m, Complex z, const char* fn) {
  check_domain(m, z, fn);
  if (z == Complex{0.0}) throw SingularityError(std::string(fn) + ": singular at z = 0");
}

}  // namespace

Complex bessel_j(int m, Complex z) {
  check_domain(m, z, "bessel_j");
  return j_single(m, z);
}

Complex bessel_j_deriv(int m, Complex z) {
  return bessel_j_pair(m, z).deriv;
}

BesselPair bessel_j_pair(int m, Complex z) {
  check_domain(m, z, "bessel_j");
  const auto t = j_triplet(m, z);
  return {t.mid, 0.5 * (t.lo - t.hi)};
}

void bessel_j_sequence(Complex z, std::span<Complex> out) {
  if (out.empty()) return;
  const int top = static_cast<int>(out.size()) - 1;
  check_domain(top, z, "bessel_j_sequence");
  if (z == Complex{0.0}) {
    std::fill(out.begin(), out.end(), Complex{0.0});
    out[0] = 1.0;
    return;
  }
  const auto seq = miller_sequence(top, z);
  std::copy_n(seq.begin(), out.size(), out.begin());
}

Complex bessel_y(int m, Complex z) {
  check_hankel_arg(m, z, "bessel_y");
  if (z.imag() > kFarFromAxis) return -kI * (h1_forward(m, z).mid - j_single(m, z));
  if (z.imag() < -kFarFromAxis) return kI * (h2_triplet(m, z).mid - j_single(m, z));
  Complex prev;
  Complex cur;
  if (in_asymptotic_region(1, z)) {
    const auto a0 = asymptotic_hankel(0, z);
    const auto a1 = asymptotic_hankel(1, z);
    prev = (a0.h1 - a0.h2) / (2.0 * kI);
    cur = (a1.h1 - a1.h2) / (2.0 * kI);
  } else {
    std::tie(prev, cur) = neumann_y01(z, miller_sequence(1, z));
  }
  if (m == 0) return prev;
  for (int k = 1; k < m; ++k) {
    const Complex next = (2.0 * k / z) * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

Complex hankel1(int m, Complex z) {
  check_hankel_arg(m, z, "hankel1");
  return h_triplet(m, z).mid;
}

Complex hankel1_deriv(int m, Complex z) {
  return hankel1_pair(m, z).deriv;
}

BesselPair hankel1_pair(int m, Complex z) {
  check_hankel_arg(m, z, "hankel1");
  const auto t = h_triplet(m, z);
  return {t.mid, 0.5 * (t.lo - t.hi)};
}

double bessel_j_real(int m, double x) {
  if (std::abs(x) > kMaxRealArg) {
    throw DomainError("bessel_j_real: argument outside |x| <= " + std::to_string(int(kMaxRealArg)));
  }
  check_domain(m, Complex{0.0, 0.0}, "bessel_j_real");
  if (!std::isfinite(x)) throw DomainError("bessel_j_real: non-finite argument");
  return j_single(m, Complex{x, 0.0}).real();
}

double bessel_j_zero(int m, int ell) {
  if (m < 0 || m > kMaxOrder) throw DomainError("bessel_j_zero: order out of range");
  if (ell < 1 || ell > kMaxZeroIndex) throw DomainError("bessel_j_zero: zero index out of range");

  // Bracket the ell-th sign change by scanning; consecutive zeros are more
  // than 2.4 apart, so a 0.25 step cannot step over a pair.
  constexpr double kStep = 0.25;
  double a = (m == 0) ? 0.5 : double(m);
  // Real-axis evaluation is not subject to the |z| <= 200 cap: j_{60,40} ~ 219.
  auto j_at = [m](double x) { return j_single(m, Complex{x, 0.0}).real(); };
  double fa = j_at(a);
  int found = 0;
  double b = a;
  double fb = fa;
  while (true) {
    b = a + kStep;
    fb = j_at(b);
    if (fa == 0.0 || (fa < 0) != (fb < 0)) {
      if (++found == ell) break;
    }
    a = b;
    fa = fb;
  }
  if (fa == 0.0) return a;

  // McMahon expansion as the Newton seed, clamped into the bracket.
  const double beta = (ell + 0.5 * m - 0.25) * pi;
  const double mu = 4.0 * m * m;
  double x = beta - (mu - 1) / (8 * beta) - 4 * (mu - 1) * (7 * mu - 31) / (3 * std::pow(8 * beta, 3));
  if (!(x > a && x < b)) x = 0.5 * (a + b);

  for (int it = 0; it < 200; ++it) {
    const auto t = j_triplet(m, Complex{x, 0.0});
    const double f = t.mid.real();
    const double df = 0.5 * (t.lo - t.hi).real();
    if (f == 0.0) return x;
    if ((f < 0) == (fa < 0)) {
      a = x;
      fa = f;
    } else {
      b = x;
    }
    double next = x - f / df;
    if (!(next > a && next < b)) next = 0.5 * (a + b);
    const double step = std::abs(next - x);
    x = next;
    if (step < 4e-16 * x || b - a < 4e-16 * x) break;
  }
  return x;
}

}  // namespace diskres::specfun
