#include <doctest.h>

#include <cmath>
#include <numbers>

#include "diskres/cavity.hpp"
#include "diskres/errors.hpp"
#include "diskres/fieldgrid.hpp"

using namespace diskres;
using namespace diskres::fieldgrid;

namespace {
const Complex kRes(1.4622902447731747, -0.04638271975281993);  // (m=2, ell=1, n=3.3)
}

TEST_SUITE("fieldgrid") {
  TEST_CASE("grid spec validation") {
    CHECK_THROWS_AS(GridSpec({1.0, 64}).validate(), GridError);
    CHECK_THROWS_AS(GridSpec({1.5, 1}).validate(), GridError);
    CHECK_NOTHROW(GridSpec({1.2, 2}).validate());
    const GridSpec s{1.5, 7};
    CHECK(s.coord(0) == -1.5);
    CHECK(s.coord(6) == 1.5);
  }

  TEST_CASE("interior and tail supports") {
    const GridSpec spec{1.5, 101};
    const auto in = sample_radial_mode(RadialKind::interior_j, {2, 1}, 3.3, kRes, spec);
    const auto tail = sample_radial_mode(RadialKind::tail_h, {2, 1}, 3.3, kRes, spec);
    const auto full = sample_radial_mode(RadialKind::full, {2, 1}, 3.3, kRes, spec);
    for (const auto* g : {&in, &tail, &full}) CHECK(g->max() == doctest::Approx(1.0));
    for (int row = 0; row < spec.samples_per_axis; ++row) {
      for (int col = 0; col < spec.samples_per_axis; ++col) {
        const double r = std::hypot(in.x(col), in.y(row));
        if (r >= 1.0) REQUIRE(in.at(row, col) == 0.0);
        if (r < 1.0) REQUIRE(tail.at(row, col) == 0.0);
        REQUIRE(full.at(row, col) >= 0.0);
      }
    }
  }

  TEST_CASE("intensity depends on radius only") {
    const GridSpec spec{1.5, 64};
    for (auto kind : {RadialKind::interior_j, RadialKind::tail_h, RadialKind::full}) {
      const auto g = sample_raw(kind, 3, 3.3, Complex(1.85, -0.014), spec);
      for (int row = 0; row < spec.samples_per_axis; ++row) {
        for (int col = 0; col < spec.samples_per_axis; ++col) {
          const double r = std::hypot(g.x(col), g.y(row));
          CHECK(g.at(row, col) == doctest::Approx(radial_intensity(kind, 3, 3.3, Complex(1.85, -0.014), r)));
        }
      }
      // Rotation by a quarter turn maps the lattice onto itself.
      for (int row = 0; row < spec.samples_per_axis; ++row) {
        for (int col = 0; col < spec.samples_per_axis; ++col) {
          CHECK(g.at(row, col) == doctest::Approx(g.at(col, spec.samples_per_axis - 1 - row)).epsilon(1e-12));
        }
      }
    }
  }

  TEST_CASE("radial profile is continuous at the boundary") {
    const double in = radial_intensity(RadialKind::full, 2, 3.3, kRes, std::nextafter(1.0, 0.0));
    const double out = radial_intensity(RadialKind::full, 2, 3.3, kRes, 1.0);
    CHECK(in == doctest::Approx(out).epsilon(1e-10));
  }

  TEST_CASE("PGM encoding") {
    FieldGrid zero{{1.5, 2}, {0.0, 0.0, 0.0, 0.0}, {}};
    CHECK(write_pgm(zero, 8) == std::string("P5\n2 2\n255\n\0\0\0\0", 15));
    FieldGrid g{{1.5, 2}, {1.0, 0.5, 0.25, 0.0}, {}};
    const auto b8 = write_pgm(g, 8);
    CHECK(b8.substr(0, 11) == "P5\n2 2\n255\n");
    CHECK(std::uint8_t(b8[11]) == 255);
    CHECK(std::uint8_t(b8[12]) == 128);
    const auto b16 = write_pgm(g, 16);
    CHECK(b16.substr(0, 13) == "P5\n2 2\n65535\n");
    CHECK(std::uint8_t(b16[13]) == 0xff);
    CHECK(std::uint8_t(b16[14]) == 0xff);
    CHECK_THROWS_AS(write_pgm(g, 12), InvalidArgument);
  }

  TEST_CASE("PGM round trip and quantization bound") {
    const auto grid = sample_radial_mode(RadialKind::full, {2, 1}, 3.3, kRes, {1.5, 96});
    for (int depth : {8, 16}) {
      const auto bytes = write_pgm(grid, depth);
      CHECK(bytes == write_pgm(grid, depth));
      const auto back = read_pgm(bytes);
      CHECK(back.width == 96);
      CHECK(back.height == 96);
      CHECK(back.maxval == (depth == 8 ? 255 : 65535));
      bool has_max = false;
      for (std::size_t i = 0; i < grid.values.size(); ++i) {
        const double q = double(back.samples[i]) / back.maxval;
        REQUIRE(std::abs(q - grid.values[i]) <= 0.5 / back.maxval + 1e-15);
        has_max = has_max || back.samples[i] == back.maxval;
      }
      CHECK(has_max);
    }
  }

  TEST_CASE("CSV matrix") {
    FieldGrid g{{1.5, 2}, {1.0, 0.5, 0.25, 0.0}, {}};
    CHECK(write_csv_matrix(g) ==
          "1.000000000e+00,5.000000000e-01\n2.500000000e-01,0.000000000e+00\n");
  }

  TEST_CASE("QNM decomposition shares one scale") {
    cavity::Resonance res{{2, 1}, 3.3, kRes, 0.0};
    const auto f = cavity::qnm_fields(res, {1.5, 81});
    CHECK(f.interior.max() == doctest::Approx(1.0));
    for (std::size_t i = 0; i < f.full.values.size(); ++i) {
      REQUIRE(f.full.values[i] == doctest::Approx(f.interior.values[i] + f.tail.values[i]));
      REQUIRE((f.interior.values[i] == 0.0 || f.tail.values[i] == 0.0));
    }
  }
}
