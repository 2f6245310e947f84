#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "diskres/billiard.hpp"
#include "diskres/cavity.hpp"
#include "diskres/errors.hpp"

using namespace diskres;
using namespace diskres::cavity;

TEST_SUITE("cavity") {
  TEST_CASE("determinant near the (2,1) resonance") {
    const Complex z(1.462, -0.046);
    const double off = std::abs(resonance_determinant(2, 3.3, Complex(1.3, -0.046)));
    const auto r = find_resonance({2, 1}, 3.3);
    CHECK(std::abs(resonance_determinant(2, 3.3, r.kR)) < 1e-4 * off);
    CHECK(std::abs(resonance_determinant(2, 3.3, z)) < 0.05 * off);
    CHECK_THROWS_AS(resonance_determinant(2, 3.3, 0.0), SingularityError);
  }

  TEST_CASE("uniform medium reduces to the Wronskian") {
    for (Complex z : {Complex(5.13562, 0.0), Complex(1.7, -0.2), Complex(9.0, 1.0)}) {
      const Complex w = Complex(0.0, -2.0) / (std::numbers::pi * z);
      CHECK(std::abs(resonance_determinant(2, 1.0, z) - w) < 1e-12 * std::abs(w));
    }
  }

  TEST_CASE("reflection symmetry in the upper half plane") {
    for (int m : {0, 1, 3, 8}) {
      for (Complex z : {Complex(0.5, 0.3), Complex(2.0, 0.1), Complex(6.5, 1.5)}) {
        const Complex a = resonance_determinant(m, 3.3, z);
        const Complex b = resonance_determinant(m, 3.3, -std::conj(z));
        CHECK(std::abs(b - std::conj(a)) < 1e-12 * std::abs(a));
      }
    }
  }

  TEST_CASE("analytic derivative matches finite differences") {
    for (Complex z : {Complex(1.46, -0.05), Complex(3.1, -0.3), Complex(7.7, -0.01)}) {
      const auto e = evaluate_determinant(4, 2.5, z);
      const double h = 1e-6;
      const Complex fd = (resonance_determinant(4, 2.5, z + h) - resonance_determinant(4, 2.5, z - h)) / (2 * h);
      CHECK(std::abs(e.deriv - fd) < 1e-6 * std::abs(e.deriv));
    }
  }

  TEST_CASE("reference resonances") {
    const auto r2 = find_resonance({2, 1}, 3.3);
    CHECK(std::abs(r2.kR.real() - 1.462) < 0.005);
    CHECK(std::abs(r2.kR.imag() + 0.046) < 0.002);
    CHECK(r2.residual < 1e-10);
    // Frozen from an independent high-precision root of the same determinant.
    CHECK(std::abs(r2.kR - Complex(1.4622902448, -0.0463827198)) < 1e-9);
    const auto r3 = find_resonance({3, 1}, 3.3);
    CHECK(std::abs(r3.kR.real() * r3.kR.real() - 3.42) < 0.03);
  }

  TEST_CASE("perturbed guesses converge to the same root") {
    const auto ref = find_resonance({2, 1}, 3.3);
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> radius(0.0, 0.05);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    for (int i = 0; i < 10; ++i) {
      FindOptions opts;
      opts.guess = ref.kR + std::polar(radius(rng), angle(rng));
      CHECK(std::abs(find_resonance({2, 1}, 3.3, opts).kR - ref.kR) < 1e-10);
    }
  }

  TEST_CASE("wrong branch is reported") {
    const auto second = resonance_by_rank({2, 2}, 3.3);
    CHECK(radial_rank(2, 3.3, second.kR) == 2);
    FindOptions opts;
    opts.guess = second.kR;
    try {
      (void)find_resonance({2, 1}, 3.3, opts);
      FAIL("expected WrongBranchError");
    } catch (const WrongBranchError& e) {
      CHECK(e.expected_ell() == 1);
      CHECK(e.found_ell() == 2);
    }
  }

  TEST_CASE("invalid input") {
    CHECK_THROWS_AS(find_resonance({2, 1}, 1.0), InvalidArgument);
    CHECK_THROWS_AS(find_resonance({61, 1}, 3.3), InvalidArgument);
    CHECK_THROWS_AS(SearchRegion({0.0, 1.0, -1.0, 0.0}).validate(), InvalidArgument);
    CHECK_THROWS_AS(SearchRegion({1.0, 1.0, -1.0, 0.0}).validate(), InvalidArgument);
    CHECK_THROWS_AS(qnm_fields(Resonance{{2, 1}, 3.3, Complex(1.4, 0.0), 0.0}, {}), InvalidArgument);
  }

  TEST_CASE("argument-principle counts") {
    const auto r = find_resonance({2, 1}, 3.3);
    CHECK(count_roots_in_region(2, 3.3, {1.3, 1.6, -0.1, -0.01}) == 1);
    CHECK(count_roots_in_region(2, 3.3, {0.1, 8.0, 0.01, 2.0}) == 0);
    const SearchRegion left{0.1, 2.05, -0.5, -0.001};
    const SearchRegion right{2.05, 4.0, -0.5, -0.001};
    const SearchRegion both{0.1, 4.0, -0.5, -0.001};
    CHECK(count_roots_in_region(2, 3.3, left) + count_roots_in_region(2, 3.3, right) ==
          count_roots_in_region(2, 3.3, both));
    CHECK(count_roots_in_region(2, 3.3, both) >= 2);
    CHECK(left.contains(r.kR));
  }

  TEST_CASE("count agrees with deduplicated roots") {
    for (int m : {0, 2, 5}) {
      const auto region = family_region(m, 3.3, double(m) + 4.0);
      const auto roots = enumerate_roots(m, 3.3, region);
      CHECK(int(roots.size()) == count_roots_in_region(m, 3.3, region));
      for (std::size_t i = 0; i < roots.size(); ++i) {
        CHECK(region.contains(roots[i]));
        CHECK(std::abs(resonance_determinant(m, 3.3, roots[i])) <
              1e-10 * evaluate_determinant(m, 3.3, roots[i]).scale);
        if (i) CHECK(roots[i].real() > roots[i - 1].real());
      }
      for (int ell = 1; ell <= int(roots.size()); ++ell) {
        const auto r = resonance_by_rank({m, ell}, 3.3);
        CHECK(std::abs(r.kR - roots[ell - 1]) < 1e-8);
      }
    }
  }

  TEST_CASE("whispering-gallery family trends") {
    double prev_im = 1.0;
    for (int m = 2; m <= 10; ++m) {
      const auto r = find_resonance({m, 1}, 3.3);
      CHECK(r.kR.imag() < 0.0);
      CHECK(r.residual < 1e-10);
      CHECK(r.kR.real() < billiard::billiard_eigenvalue({m, 1}, 3.3).kR);
      CHECK(std::abs(r.kR.imag()) < prev_im);
      prev_im = std::abs(r.kR.imag());
    }
  }

  TEST_CASE("higher radial orders keep their rank") {
    for (int ell = 1; ell <= 5; ++ell) {
      const auto r = find_resonance({4, ell}, 3.3);
      CHECK(radial_rank(4, 3.3, r.kR) == ell);
    }
  }
}
