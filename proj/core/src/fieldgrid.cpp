#include "diskres/fieldgrid.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <thread>

#include "diskres/errors.hpp"
#include "diskres/specfun.hpp"

namespace diskres::fieldgrid {

void GridSpec::validate() const {
  if (!(half_width > 1.0) || !std::isfinite(half_width)) {
    throw GridError("grid half width must exceed the cavity radius 1");
  }
  if (samples_per_axis < 2) throw GridError("grid needs at least 2 samples per axis");
}

double GridSpec::coord(int i) const {
  return -half_width + 2.0 * half_width * double(i) / double(samples_per_axis - 1);
}

double FieldGrid::max() const {
  return values.empty() ? 0.0 : *std::max_element(values.begin(), values.end());
}

double radial_intensity(RadialKind kind, int m, double n, Complex kR, double r) {
  if (r < 1.0) {
    if (kind == RadialKind::tail_h) return 0.0;
    return std::norm(specfun::bessel_j(m, n * kR * r));
  }
  if (kind == RadialKind::interior_j) return 0.0;
  const Complex b = specfun::bessel_j(m, n * kR) / specfun::hankel1(m, kR);
  return std::norm(b * specfun::hankel1(m, kR * r));
}

FieldGrid sample_raw(RadialKind kind, int m, double n, Complex kR, const GridSpec& spec) {
  spec.validate();
  const int size = spec.samples_per_axis;
  FieldGrid grid{spec, std::vector<double>(std::size_t(size) * size, 0.0), {}};

  Complex tail_coeff = 0.0;
  if (kind != RadialKind::interior_j) {
    tail_coeff = specfun::bessel_j(m, n * kR) / specfun::hankel1(m, kR);
  }
  auto fill_rows = [&](int row_begin, int row_end) {
    for (int row = row_begin; row < row_end; ++row) {
      const double y = grid.y(row);
      for (int col = 0; col < size; ++col) {
        const double r = std::hypot(grid.x(col), y);
        double v = 0.0;
        if (r < 1.0) {
          if (kind != RadialKind::tail_h) v = std::norm(specfun::bessel_j(m, n * kR * r));
        } else if (kind != RadialKind::interior_j) {
          v = std::norm(tail_coeff * specfun::hankel1(m, kR * r));
        }
        grid.values[std::size_t(row) * size + col] = v;
      }
    }
  };

  const int workers = std::clamp<int>(int(std::thread::hardware_concurrency()), 1, 16);
  const int chunk = (size + workers - 1) / workers;
  std::vector<std::jthread> pool;
  for (int begin = 0; begin < size; begin += chunk) {
    pool.emplace_back(fill_rows, begin, std::min(size, begin + chunk));
  }
  pool.clear();
  return grid;
}

void scale(FieldGrid& grid, double factor) {
  for (auto& v : grid.values) v *= factor;
}

void normalize(FieldGrid& grid) {
  const double peak = grid.max();
  if (peak > 0.0) scale(grid, 1.0 / peak);
}

FieldGrid sample_radial_mode(RadialKind kind, const ModeIndex& mode, double n, Complex kR,
                             const GridSpec& spec) {
  auto grid = sample_raw(kind, mode.m, n, kR, spec);
  normalize(grid);
  static constexpr const char* kNames[] = {"interior", "tail", "full"};
  grid.label = std::string(kNames[int(kind)]) + " " + to_string(mode);
  return grid;
}

std::string write_pgm(const FieldGrid& grid, int depth) {
  if (depth != 8 && depth != 16) throw InvalidArgument("PGM depth must be 8 or 16");
  const int maxval = depth == 8 ? 255 : 65535;
  const int size = grid.size();
  std::string out = "P5\n" + std::to_string(size) + " " + std::to_string(size) + "\n" +
                    std::to_string(maxval) + "\n";
  out.reserve(out.size() + grid.values.size() * (depth / 8));
  for (double v : grid.values) {
    const long q = std::clamp(std::lround(v * maxval), 0L, long(maxval));
    if (depth == 16) out.push_back(char((q >> 8) & 0xff));
    out.push_back(char(q & 0xff));
  }
  return out;
}

Graymap read_pgm(const std::string& bytes) {
  std::istringstream in(bytes);
  std::string magic;
  Graymap g;
  in >> magic >> g.width >> g.height >> g.maxval;
  if (magic != "P5" || !in || g.width <= 0 || g.height <= 0 || g.maxval <= 0 ||
      g.maxval > 65535) {
    throw InvalidArgument("not a P5 graymap");
  }
  in.get();  // single whitespace byte after maxval
  const bool wide = g.maxval > 255;
  const std::size_t count = std::size_t(g.width) * g.height;
  std::size_t pos = std::size_t(in.tellg());
  if (bytes.size() - pos != count * (wide ? 2 : 1)) throw InvalidArgument("PGM payload size mismatch");
  g.samples.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (wide) {
      g.samples[i] = std::uint16_t((std::uint8_t(bytes[pos]) << 8) | std::uint8_t(bytes[pos + 1]));
      pos += 2;
    } else {
      g.samples[i] = std::uint8_t(bytes[pos++]);
    }
  }
  return g;
}

std::string write_csv_matrix(const FieldGrid& grid) {
  std::string out;
  char buf[32];
  const int size = grid.size();
  for (int row = 0; row < size; ++row) {
    for (int col = 0; col < size; ++col) {
      std::snprintf(buf, sizeof buf, "%.9e", grid.at(row, col));
      if (col) out.push_back(',');
      out += buf;
    }
    out.push_back('\n');
  }
  return out;
}

}  // namespace diskres::fieldgrid
