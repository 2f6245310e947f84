#include "diskres/diagnostics.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "diskres/specfun.hpp"

namespace diskres::diagnostics {
namespace {

Complex y_deriv(int m, Complex z) {
  using specfun::bessel_y;
  if (m == 0) return -bessel_y(1, z);
  return bessel_y(m - 1, z) - double(m) / z * bessel_y(m, z);
}

}  // namespace

std::vector<Residual> specfun_residuals() {
  using namespace specfun;
  constexpr int kOrders[] = {0, 1, 2, 5, 10, 20, 40, 60};
  constexpr int kRadii = 13;
  constexpr int kAngles = 5;
  std::vector<Residual> out;
  for (int m : kOrders) {
    for (int ir = 0; ir < kRadii; ++ir) {
      const double rho = 0.1 * std::pow(1000.0, double(ir) / (kRadii - 1));
      for (int ia = 0; ia < kAngles; ++ia) {
        const double arg = -0.3 + 0.6 * ia / (kAngles - 1);
        const Complex z = std::polar(rho, arg);
        if (std::abs(z.imag()) > kMaxAbsImag) continue;

        const Complex j = bessel_j(m, z);
        const Complex jd = bessel_j_deriv(m, z);
        const Complex y = bessel_y(m, z);
        const Complex yd = y_deriv(m, z);
        const Complex w = 2.0 / (std::numbers::pi * z);
        const double wabs = std::abs(j * yd - jd * y - w);
        out.push_back({"wronskian", m, z, wabs, wabs / (std::abs(j * yd) + std::abs(jd * y) + std::abs(w))});

        if (m >= 1 && m < kMaxOrder) {
          const Complex jl = bessel_j(m - 1, z);
          const Complex jh = bessel_j(m + 1, z);
          const Complex t = 2.0 * m / z * j;
          const double ja = std::abs(jl + jh - t);
          out.push_back({"recurrence_j", m, z, ja, ja / (std::abs(jl) + std::abs(jh) + std::abs(t))});

          const Complex hl = hankel1(m - 1, z);
          const Complex hh = hankel1(m + 1, z);
          const Complex th = 2.0 * m / z * hankel1(m, z);
          const double ha = std::abs(hl + hh - th);
          out.push_back({"recurrence_h", m, z, ha, ha / (std::abs(hl) + std::abs(hh) + std::abs(th))});
        }
      }
    }
  }
  return out;
}

std::string residuals_csv(const std::vector<Residual>& rows) {
  std::string out = "check,m,z_re,z_im,absolute,relative\n";
  char buf[160];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%s,%d,%.12e,%.12e,%.12e,%.12e\n", r.check.c_str(), r.m,
                  r.z.real(), r.z.imag(), r.absolute, r.relative);
    out += buf;
  }
  return out;
}

}  // namespace diskres::diagnostics
