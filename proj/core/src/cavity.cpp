#include "diskres/cavity.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "diskres/billiard.hpp"
#include "diskres/errors.hpp"
#include "diskres/specfun.hpp"

namespace diskres::cavity {
namespace {

using std::numbers::pi;

void check_index(double n) {
  if (!(n > 1.0) || !std::isfinite(n)) {
    throw InvalidArgument("open cavity needs refractive index n > 1, got " + std::to_string(n));
  }
}

// Bessel's equation: f'' = -f'/z - (1 - m^2/z^2) f.
Complex second_deriv(int m, Complex z, Complex f, Complex fp) {
  const double mm = double(m) * m;
  return -fp / z - (1.0 - mm / (z * z)) * f;
}

double second_deriv(int m, double x, double f, double fp) {
  const double mm = double(m) * m;
  return -fp / x - (1.0 - mm / (x * x)) * f;
}

std::string describe(int m, double n) {
  return "m=" + std::to_string(m) + ", n=" + std::to_string(n);
}

std::optional<Complex> newton(int m, double n, Complex z, int max_iterations) {
  Complex prev_z;
  Complex prev_f;
  bool have_prev = false;
  for (int it = 0; it < max_iterations; ++it) {
    DeterminantEval e;
    try {
      e = evaluate_determinant(m, n, z);
    } catch (const DomainError&) {
      return std::nullopt;
    } catch (const SingularityError&) {
      return std::nullopt;
    }
    if (e.value == Complex{0.0}) return z;
    Complex step;
    if (std::abs(e.deriv) < 1e-14 * e.scale && have_prev && e.value != prev_f) {
      step = e.value * (z - prev_z) / (e.value - prev_f);
    } else {
      step = e.value / e.deriv;
    }
    if (!std::isfinite(std::abs(step))) return std::nullopt;
    if (std::abs(step) > 0.5) step *= 0.5 / std::abs(step);
    prev_z = z;
    prev_f = e.value;
    have_prev = true;
    z -= step;
    if (std::abs(step) < 1e-12 * std::max(1.0, std::abs(z))) return z;
  }
  return std::nullopt;
}

// For |Im kR| far below double resolution of Re kR, split F on the real
// axis as a + i b (a from J terms, b from Y terms) and solve the first-order
// system a - y b' = 0, b + y a' = 0. Keeps full relative accuracy in Im kR.
Complex refine_high_q(int m, double n, Complex z) {
  double x = z.real();
  double y = z.imag();
  for (int it = 0; it < 30; ++it) {
    const double u = n * x;
    const auto jn = specfun::bessel_j_pair(m, Complex{u, 0.0});
    const auto jx = specfun::bessel_j_pair(m, Complex{x, 0.0});
    const auto hx = specfun::hankel1_pair(m, Complex{x, 0.0});
    const double jn0 = jn.value.real();
    const double jn1 = jn.deriv.real();
    const double jn2 = second_deriv(m, u, jn0, jn1);
    const double j0 = jx.value.real();
    const double j1 = jx.deriv.real();
    const double j2 = second_deriv(m, x, j0, j1);
    const double y0 = hx.value.imag();
    const double y1 = hx.deriv.imag();
    const double y2 = second_deriv(m, x, y0, y1);

    const double a = n * jn1 * j0 - n * n * jn0 * j1;
    const double b = n * jn1 * y0 - n * n * jn0 * y1;
    const double ap = n * n * jn2 * j0 + n * (1 - n * n) * jn1 * j1 - n * n * jn0 * j2;
    const double bp = n * n * jn2 * y0 + n * (1 - n * n) * jn1 * y1 - n * n * jn0 * y2;

    y = a / bp;
    const double dx = (b + y * ap) / bp;
    x -= dx;
    if (std::abs(dx) <= 1e-15 * x) break;
  }
  return {x, y};
}

class ArgumentTracker {
 public:
  ArgumentTracker(int m, double n) : m_(m), n_(n) {}

  Complex eval(Complex z) const {
    const auto e = evaluate_determinant(m_, n_, z);
    if (!(std::abs(e.value) >= 1e-13 * e.scale)) {
      throw BoundaryTooCloseError("contour passes within roundoff of a zero near kR = (" +
                                  std::to_string(z.real()) + ", " + std::to_string(z.imag()) +
                                  ")");
    }
    return e.value;
  }

  // Total change of arg F along the straight segment a -> b.
  double segment(Complex a, Complex b, Complex fa, Complex fb, int depth) const {
    const Complex mid = 0.5 * (a + b);
    const Complex fm = eval(mid);
    const double d1 = std::arg(fm / fa);
    const double d2 = std::arg(fb / fm);
    const double direct = std::arg(fb / fa);
    if (std::abs(d1) < pi / 4 && std::abs(d2) < pi / 4 && std::abs(d1 + d2 - direct) < 1e-9) {
      return d1 + d2;
    }
    if (depth > 60) throw BoundaryTooCloseError("argument tracking failed to resolve the phase");
    return segment(a, mid, fa, fm, depth + 1) + segment(mid, b, fm, fb, depth + 1);
  }

  double edge(Complex a, Complex b) const {
    const int pieces = std::max(4, int(std::ceil(std::abs(b - a) / 0.05)));
    double total = 0.0;
    Complex za = a;
    Complex fa = eval(za);
    for (int i = 1; i <= pieces; ++i) {
      const Complex zb = a + (b - a) * (double(i) / pieces);
      const Complex fb = eval(zb);
      total += segment(za, zb, fa, fb, 0);
      za = zb;
      fa = fb;
    }
    return total;
  }

 private:
  int m_;
  double n_;
};

int winding(int m, double n, const SearchRegion& r) {
  ArgumentTracker t(m, n);
  const Complex c00{r.re_min, r.im_min};
  const Complex c10{r.re_max, r.im_min};
  const Complex c11{r.re_max, r.im_max};
  const Complex c01{r.re_min, r.im_max};
  const double total = t.edge(c00, c10) + t.edge(c10, c11) + t.edge(c11, c01) + t.edge(c01, c00);
  return int(std::lround(total / (2 * pi)));
}

// Counts with the given cut, nudging it off any zero that sits on it.
int count_nudged(int m, double n, SearchRegion r, double* cut, double nudge) {
  for (int attempt = 0; attempt < 6; ++attempt) {
    try {
      return count_roots_in_region(m, n, r);
    } catch (const BoundaryTooCloseError&) {
      if (cut == nullptr) throw;
      *cut += nudge * (attempt + 1);
      r.re_max = *cut;
    }
  }
  throw BoundaryTooCloseError("could not place a contour edge away from zeros");
}

void collect(int m, double n, const SearchRegion& cell, int count, int depth,
             std::vector<Complex>& out) {
  if (count <= 0) return;
  if (count == 1) {
    const Complex center{0.5 * (cell.re_min + cell.re_max), 0.5 * (cell.im_min + cell.im_max)};
    const double w = cell.re_max - cell.re_min;
    const double h = cell.im_max - cell.im_min;
    const Complex seeds[] = {center, center + Complex{0.25 * w, 0.25 * h},
                             center - Complex{0.25 * w, 0.25 * h},
                             center + Complex{-0.25 * w, 0.25 * h},
                             center + Complex{0.25 * w, -0.25 * h}};
    for (const Complex& s : seeds) {
      if (auto z = newton(m, n, s, 100); z && cell.contains(*z)) {
        out.push_back(*z);
        return;
      }
    }
  }
  if (depth > 40) throw ConvergenceError("root isolation did not converge for " + describe(m, n));
  // Split along the longer side, slightly off-center so that symmetric
  // configurations do not put a zero on the cut.
  SearchRegion a = cell;
  SearchRegion b = cell;
  const bool split_re = (cell.re_max - cell.re_min) >= (cell.im_max - cell.im_min);
  for (int attempt = 0; attempt < 6; ++attempt) {
    const double frac = 0.5 + 0.0137 * (attempt + 1);
    if (split_re) {
      const double cut = cell.re_min + frac * (cell.re_max - cell.re_min);
      a.re_max = cut;
      b.re_min = cut;
    } else {
      const double cut = cell.im_min + frac * (cell.im_max - cell.im_min);
      a.im_max = cut;
      b.im_min = cut;
    }
    try {
      const int ca = count_roots_in_region(m, n, a);
      collect(m, n, a, ca, depth + 1, out);
      collect(m, n, b, count - ca, depth + 1, out);
      return;
    } catch (const BoundaryTooCloseError&) {
    }
  }
  throw BoundaryTooCloseError("could not split region away from zeros for " + describe(m, n));
}

double family_band(double n) {
  // Fabry-Perot decay rate of the radial family, ln((n+1)/(n-1)) / (2n);
  // exterior-type zeros sit near Im kR ~ -1.
  const double fp = std::log((n + 1) / (n - 1)) / (2 * n);
  return std::clamp(2.5 * fp, 0.5, 1.9);
}

}  // namespace

void SearchRegion::validate() const {
  if (!(re_min > 0.0)) throw InvalidArgument("search region needs re_min > 0");
  if (!(re_max > re_min) || !(im_max > im_min)) throw InvalidArgument("search region is empty");
}

DeterminantEval evaluate_determinant(int m, double n, Complex kR) {
  const Complex u = n * kR;
  const auto j = specfun::bessel_j_pair(m, u);
  const auto h = specfun::hankel1_pair(m, kR);
  const Complex j2 = second_deriv(m, u, j.value, j.deriv);
  const Complex h2 = second_deriv(m, kR, h.value, h.deriv);
  const Complex t1 = n * j.deriv * h.value;
  const Complex t2 = n * n * j.value * h.deriv;
  const Complex d = n * n * j2 * h.value + n * (1 - n * n) * j.deriv * h.deriv - n * n * j.value * h2;
  return {t1 - t2, d, std::abs(t1) + std::abs(t2)};
}

Complex resonance_determinant(int m, double n, Complex kR) {
  if (kR == Complex{0.0}) throw SingularityError("resonance_determinant: kR = 0");
  const Complex u = n * kR;
  return n * specfun::bessel_j_deriv(m, u) * specfun::hankel1(m, kR) -
         n * n * specfun::bessel_j(m, u) * specfun::hankel1_deriv(m, kR);
}

Resonance find_resonance(const ModeIndex& mode, double n, const FindOptions& options) {
  validate(mode);
  check_index(n);
  const Complex seed = options.guess.value_or(
      Complex{billiard::billiard_eigenvalue(mode, n).kR, 0.0} + Complex{-0.1, -0.05});

  auto root = newton(mode.m, n, seed, options.max_iterations);
  if (!root) {
    throw ConvergenceError("Newton iteration did not converge for " + to_string(mode) + ", n=" +
                           std::to_string(n));
  }
  Complex z = *root;
  if (std::abs(z.imag()) < 1e-8 * std::abs(z.real()) && z.real() > 0) {
    z = refine_high_q(mode.m, n, z);
  }
  if (!(z.imag() < 0.0) || !(z.real() > 0.0)) {
    throw ConvergenceError("Newton converged outside the fourth quadrant for " + to_string(mode));
  }
  const auto e = evaluate_determinant(mode.m, n, z);
  Resonance res{mode, n, z, std::abs(e.value) / e.scale};
  if (!(res.residual < 1e-10)) {
    throw ConvergenceError("determinant residual too large for " + to_string(mode));
  }
  if (options.verify_rank) {
    const int rank = radial_rank(mode.m, n, z);
    if (rank != mode.ell) {
      throw WrongBranchError("converged to radial rank " + std::to_string(rank) + " instead of " +
                                 std::to_string(mode.ell) + " for m=" + std::to_string(mode.m),
                             mode.ell, rank);
    }
  }
  return res;
}

int count_roots_in_region(int m, double n, const SearchRegion& region) {
  region.validate();
  return winding(m, n, region);
}

std::vector<Complex> enumerate_roots(int m, double n, const SearchRegion& region) {
  region.validate();
  std::vector<Complex> roots;
  // Columns no wider than 0.5 keep the per-cell count small.
  const int columns = std::max(1, int(std::ceil((region.re_max - region.re_min) / 0.5)));
  const double width = (region.re_max - region.re_min) / columns;
  double left = region.re_min;
  for (int c = 0; c < columns; ++c) {
    SearchRegion cell = region;
    cell.re_min = left;
    double cut = (c + 1 == columns) ? region.re_max : region.re_min + (c + 1) * width;
    cell.re_max = cut;
    const int count = count_nudged(m, n, cell, c + 1 == columns ? nullptr : &cut, 1e-3 * width);
    cell.re_max = cut;
    collect(m, n, cell, count, 0, roots);
    left = cut;
  }
  std::sort(roots.begin(), roots.end(),
            [](Complex a, Complex b) { return a.real() < b.real(); });
  std::vector<Complex> unique;
  for (const Complex& z : roots) {
    if (unique.empty() || std::abs(z - unique.back()) > 1e-8) unique.push_back(z);
  }
  return unique;
}

SearchRegion family_region(int m, double n, double re_max) {
  (void)m;
  check_index(n);
  return {0.02, re_max, -family_band(n), 0.25};
}

int radial_rank(int m, double n, Complex kR) {
  const auto strip = family_region(m, n, kR.real());
  if (!(kR.imag() > strip.im_min && kR.imag() < strip.im_max)) return 0;
  double delta = 1e-3;
  for (int attempt = 0; attempt < 4; ++attempt, delta *= 1.7) {
    try {
      const int below = count_roots_in_region(m, n, family_region(m, n, kR.real() - delta));
      const int through = count_roots_in_region(m, n, family_region(m, n, kR.real() + delta));
      if (through != below + 1) {
        throw InvalidArgument("kR is not an isolated zero of the determinant");
      }
      return through;
    } catch (const BoundaryTooCloseError&) {
    }
  }
  throw BoundaryTooCloseError("could not rank root; neighbouring zeros too close");
}

Resonance resonance_by_rank(const ModeIndex& mode, double n) {
  validate(mode);
  check_index(n);
  double re_max = billiard::billiard_eigenvalue(mode, n).kR + 1.0;
  const double limit = specfun::kMaxAbsArg / n;
  while (true) {
    re_max = std::min(re_max, limit);
    const auto roots = enumerate_roots(mode.m, n, family_region(mode.m, n, re_max));
    if (int(roots.size()) >= mode.ell) {
      FindOptions opts;
      opts.guess = roots[mode.ell - 1];
      opts.verify_rank = false;
      auto res = find_resonance(mode, n, opts);
      return res;
    }
    if (re_max >= limit) {
      throw ConvergenceError("fewer than ell family roots below the evaluation limit for " +
                             to_string(mode));
    }
    re_max += 2.0;
  }
}

QnmFields qnm_fields(const Resonance& res, const fieldgrid::GridSpec& window) {
  using fieldgrid::RadialKind;
  if (!(res.kR.imag() < 0.0)) throw InvalidArgument("qnm_fields needs a decaying resonance");
  QnmFields f{fieldgrid::sample_raw(RadialKind::interior_j, res.mode.m, res.n, res.kR, window),
              fieldgrid::sample_raw(RadialKind::tail_h, res.mode.m, res.n, res.kR, window),
              {}};
  f.full = f.interior;
  for (std::size_t i = 0; i < f.full.values.size(); ++i) f.full.values[i] += f.tail.values[i];
  const double peak = f.interior.max();
  if (peak > 0.0) {
    for (auto* g : {&f.interior, &f.tail, &f.full}) fieldgrid::scale(*g, 1.0 / peak);
  }
  f.interior.label = "qnm interior " + to_string(res.mode);
  f.tail.label = "qnm tail " + to_string(res.mode);
  f.full.label = "qnm full " + to_string(res.mode);
  return f;
}

}  // namespace diskres::cavity
