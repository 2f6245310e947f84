#include "diskres/husimi.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <thread>

#include "diskres/errors.hpp"
#include "diskres/specfun.hpp"

namespace diskres::husimi {

using std::numbers::pi;

double critical_momentum(double n) {
  if (!(n > 1.0)) throw InvalidArgument("critical momentum needs n > 1");
  return 1.0 / n;
}

int min_boundary_samples(double n, double kR_re) {
  return std::max(16, 8 * int(std::ceil(n * kR_re)));
}

std::vector<Complex> boundary_trace(int m, double n, Complex kR, int samples) {
  if (samples < 1) throw InvalidArgument("boundary trace needs at least one sample");
  const Complex amp = specfun::bessel_j(m, n * kR);
  std::vector<Complex> psi(static_cast<std::size_t>(samples));
  for (int j = 0; j < samples; ++j) {
    psi[j] = amp * std::polar(1.0, double(m) * 2.0 * pi * j / samples);
  }
  return psi;
}

std::vector<Complex> boundary_trace(const cavity::Resonance& res, int samples) {
  return boundary_trace(res.mode.m, res.n, res.kR, samples);
}

HusimiMap boundary_husimi(std::span<const Complex> psi, double n, double kR_re,
                          const Resolution& res) {
  if (!(n > 1.0)) throw InvalidArgument("Husimi map needs n > 1");
  if (!(kR_re > 0.0)) throw InvalidArgument("Husimi map needs Re kR > 0");
  if (res.ns < 1 || res.np < 2) throw InvalidArgument("Husimi grid needs ns >= 1 and np >= 2");
  const int need = min_boundary_samples(n, kR_re);
  if (int(psi.size()) < need) {
    throw UndersampledError("boundary trace has " + std::to_string(psi.size()) +
                            " samples, at least " + std::to_string(need) + " required");
  }

  const double k = n * kR_re;
  const double sigma = 1.0 / std::sqrt(k);
  const int count = int(psi.size());
  const double ds = 2.0 * pi / count;

  HusimiMap map;
  map.p_crit = critical_momentum(n);
  map.s_grid.resize(std::size_t(res.ns));
  map.p_grid.resize(std::size_t(res.np));
  for (int i = 0; i < res.ns; ++i) map.s_grid[i] = 2.0 * pi * i / res.ns;
  for (int i = 0; i < res.np; ++i) map.p_grid[i] = -1.0 + 2.0 * i / (res.np - 1);
  map.values.assign(std::size_t(res.ns) * res.np, 0.0);
  const double dp = map.p_grid[1] - map.p_grid[0];

  auto fill_columns = [&](int begin, int end) {
    std::vector<Complex> amp;
    std::vector<Complex> rot;
    std::vector<Complex> step;
    for (int is = begin; is < end; ++is) {
      const double s0 = map.s_grid[is];
      amp.clear();
      rot.clear();
      step.clear();
      for (int j = 0; j < count; ++j) {
        for (int w = -1; w <= 1; ++w) {
          const double d = j * ds - s0 + 2.0 * pi * w;
          const double g = std::exp(-d * d / (2.0 * sigma * sigma));
          if (g < 1e-18) continue;
          amp.push_back(psi[j] * g * ds);
          rot.push_back(std::polar(1.0, -k * map.p_grid[0] * d));
          step.push_back(std::polar(1.0, -k * dp * d));
        }
      }
      for (int ip = 0; ip < res.np; ++ip) {
        Complex acc = 0.0;
        for (std::size_t t = 0; t < amp.size(); ++t) {
          acc += amp[t] * rot[t];
          rot[t] *= step[t];
        }
        map.values[std::size_t(ip) * res.ns + is] = std::norm(acc);
      }
    }
  };

  const int workers = std::clamp<int>(int(std::thread::hardware_concurrency()), 1, 16);
  const int chunk = (res.ns + workers - 1) / workers;
  {
    std::vector<std::jthread> pool;
    for (int b = 0; b < res.ns; b += chunk) pool.emplace_back(fill_columns, b, std::min(res.ns, b + chunk));
  }

  const double peak = *std::max_element(map.values.begin(), map.values.end());
  if (peak > 0.0) {
    for (double& v : map.values) v /= peak;
  }
  return map;
}

int column_argmax(const HusimiMap& map, int is) {
  int best = 0;
  for (int ip = 1; ip < map.np(); ++ip) {
    if (map.at(ip, is) > map.at(best, is)) best = ip;
  }
  return best;
}

std::vector<double> p_marginal(const HusimiMap& map) {
  std::vector<double> out(std::size_t(map.np()), 0.0);
  for (int ip = 0; ip < map.np(); ++ip) {
    for (int is = 0; is < map.ns(); ++is) out[ip] += map.at(ip, is);
  }
  return out;
}

double ridge_momentum(const HusimiMap& map) {
  const auto marg = p_marginal(map);
  const int i = int(std::max_element(marg.begin(), marg.end()) - marg.begin());
  if (i == 0 || i + 1 == int(marg.size())) return map.p_grid[i];
  const double a = marg[i - 1];
  const double b = marg[i];
  const double c = marg[i + 1];
  const double denom = a - 2.0 * b + c;
  const double shift = denom != 0.0 ? 0.5 * (a - c) / denom : 0.0;
  return map.p_grid[i] + shift * (map.p_grid[1] - map.p_grid[0]);
}

std::string write_csv_matrix(const HusimiMap& map) {
  std::string out;
  char buf[32];
  for (int ip = map.np() - 1; ip >= 0; --ip) {
    for (int is = 0; is < map.ns(); ++is) {
      std::snprintf(buf, sizeof buf, "%.9e", map.at(ip, is));
      if (is) out.push_back(',');
      out += buf;
    }
    out.push_back('\n');
  }
  return out;
}

}  // namespace diskres::husimi
