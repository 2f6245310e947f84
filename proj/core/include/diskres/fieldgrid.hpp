#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "diskres/types.hpp"

/// Square-window sampling of mode intensities and their serialization.
namespace diskres::fieldgrid {

/// Window [-half_width, half_width]^2 sampled on an N x N lattice that
/// includes both edges.
struct GridSpec {
  double half_width = 1.5;
  int samples_per_axis = 512;

  /// Throws GridError unless half_width > 1 and samples_per_axis >= 2.
  void validate() const;
  double coord(int i) const;
};

/// Row-major intensities; row 0 is the top edge (y = +half_width), column 0
/// the left edge (x = -half_width).
struct FieldGrid {
  GridSpec spec;
  std::vector<double> values;
  std::string label;

  int size() const { return spec.samples_per_axis; }
  double at(int row, int col) const { return values[std::size_t(row) * size() + col]; }
  double x(int col) const { return spec.coord(col); }
  double y(int row) const { return -spec.coord(row); }
  double max() const;
};

enum class RadialKind { interior_j, tail_h, full };

/// Unnormalized intensity of the piecewise radial mode at radius r:
/// |J_m(n kR r)|^2 inside, |B H_m(kR r)|^2 outside with B = J_m(n kR) / H_m(kR).
double radial_intensity(RadialKind kind, int m, double n, Complex kR, double r);

/// Unnormalized grid; pixels are filled in parallel.
FieldGrid sample_raw(RadialKind kind, int m, double n, Complex kR, const GridSpec& spec);

/// Scales so the maximum is 1 (no-op on an all-zero grid).
void normalize(FieldGrid& grid);
void scale(FieldGrid& grid, double factor);

/// Sampled and normalized to max = 1.
FieldGrid sample_radial_mode(RadialKind kind, const ModeIndex& mode, double n, Complex kR,
                             const GridSpec& spec);

/// Binary portable graymap ("P5"), 8 or 16 bits per sample, big-endian.
std::string write_pgm(const FieldGrid& grid, int depth);

struct Graymap {
  int width = 0;
  int height = 0;
  int maxval = 0;
  std::vector<std::uint16_t> samples;
};

/// Parses the P5 subset emitted by write_pgm.
Graymap read_pgm(const std::string& bytes);

/// One row per line, comma separated, "%.9e".
std::string write_csv_matrix(const FieldGrid& grid);

}  // namespace diskres::fieldgrid
