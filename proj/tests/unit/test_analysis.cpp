#include <doctest.h>

#include <cmath>

#include "diskres/analysis.hpp"
#include "diskres/errors.hpp"
#include "diskres/sweep.hpp"

using namespace diskres;
using namespace diskres::analysis;

TEST_SUITE("analysis") {
  TEST_CASE("Lamb shift values") {
    CHECK(std::abs(lamb_shift({2, 1}, 3.3).L - 0.094) < 0.003);
    CHECK(std::abs(lamb_shift({3, 1}, 3.3).L - 0.085) < 0.005);
    CHECK(std::abs(lamb_shift({4, 1}, 3.3).L - 0.07) < 0.005);
    CHECK(std::abs(lamb_shift({5, 1}, 3.3).L - 0.06) < 0.005);
    const auto rec = lamb_shift({2, 1}, 3.3);
    CHECK(rec.L == rec.closed_kR - rec.open_kR_re);
    CHECK(rec.L > 0.0);
  }

  TEST_CASE("decay width and Q") {
    const auto r = cavity::find_resonance({2, 1}, 3.3);
    const auto w = decay_width_and_q(r);
    CHECK(std::abs(w.gamma - 0.092) < 0.002);
    CHECK(w.gamma == -2.0 * r.kR.imag());
    CHECK(w.q == r.kR.real() / (2.0 * w.gamma));
    cavity::Resonance flat{{2, 1}, 3.3, Complex(1.4, 0.0), 0.0};
    CHECK_THROWS_AS(decay_width_and_q(flat), InvalidArgument);
    for (int m = 2; m <= 10; ++m) {
      const auto q = decay_width_and_q(cavity::find_resonance({m, 1}, 3.3)).q;
      CHECK(q > 0.0);
      CHECK(std::isfinite(q));
    }
  }

  TEST_CASE("effective potential") {
    CHECK(effective_potential(std::nextafter(1.0, 0.0), 3, 3.3, 3.42) == doctest::Approx(-24.8238).epsilon(1e-4));
    CHECK(std::abs(effective_potential(std::nextafter(1.0, 0.0), 3, 3.3, 3.42) + 24.82) < 0.01);
    for (double r : {1.0, 1.5, 3.0, 10.0}) CHECK(effective_potential(r, 3, 3.3, 3.42) == 9.0 / (r * r));
    double prev = effective_potential(1.0, 4, 2.0, 5.0);
    for (double r = 1.5; r < 100.0; r *= 1.5) {
      const double v = effective_potential(r, 4, 2.0, 5.0);
      CHECK(v < prev);
      CHECK(v > 0.0);
      prev = v;
    }
    CHECK_THROWS_AS(effective_potential(0.0, 2, 3.3, 1.0), SingularityError);
    CHECK(effective_potential(0.0, 0, 3.3, 1.0) == doctest::Approx(1.0 - 3.3 * 3.3));
    // The well bottom just inside r = 1 meets the energy line at E = k_B^2.
    const double kb = 3.0 / 3.3;
    CHECK(effective_potential(std::nextafter(1.0, 0.0), 3, 3.3, kb * kb) == doctest::Approx(kb * kb).epsilon(1e-12));
    CHECK(kb * kb == doctest::Approx(0.826).epsilon(1e-3));
  }

  TEST_CASE("barrier bounds") {
    const auto b = barrier_bounds(3, 3.3);
    CHECK(b.k_T * b.k_T == 9.0);
    CHECK(std::abs(b.k_B * b.k_B - 0.826) < 0.001);
    CHECK(barrier_bounds(4, 5.7).k_T == 4.0);
    CHECK(b.k_B * 3.3 == doctest::Approx(b.k_T).epsilon(1e-15));
    CHECK_THROWS_AS(barrier_bounds(0, 3.3), NoBarrierError);
    CHECK_THROWS_AS(barrier_bounds(3, 1.0), InvalidArgument);
  }

  TEST_CASE("classification") {
    const auto c3 = classify_resonance(cavity::find_resonance({3, 1}, 3.3));
    CHECK(c3.cls == BarrierClass::below_barrier);
    CHECK(classify_resonance(cavity::find_resonance({4, 5}, 3.3)).cls == BarrierClass::above_barrier);
    CHECK(classify_resonance({{4, 1}, 3.3, Complex(4.0, -0.1), 0.0}).cls == BarrierClass::above_barrier);
    CHECK(classify_resonance({{4, 1}, 3.3, Complex(1.0, -0.1), 0.0}).cls == BarrierClass::sub_bottom);
    CHECK(classify_resonance({{0, 1}, 3.3, Complex(1.0, -0.1), 0.0}).cls == BarrierClass::above_barrier);
    CHECK(to_string(BarrierClass::below_barrier) == "below_barrier");
  }

  TEST_CASE("well bottom deepens with n at fixed energy") {
    double prev = 0.0;
    for (double n = 3.3; n <= 6.0; n += 0.3) {
      const double v = effective_potential(std::nextafter(1.0, 0.0), 4, n, 4.0);
      if (n > 3.3) CHECK(v < prev);
      prev = v;
    }
  }

  TEST_CASE("sweeps over n for m = 4") {
    const auto rows = sweep::run_sweep_n(4, {1, 2}, {3.3, 6.0, 0.02});
    REQUIRE(sweep::error_count(rows) == 0);
    REQUIRE(rows.size() == 2 * 136);
    for (int b = 0; b < 2; ++b) {
      for (int i = 1; i < 136; ++i) {
        const auto& cur = rows[b * 136 + i];
        const auto& prev = rows[b * 136 + i - 1];
        CHECK(cur.ell == b + 1);
        CHECK(cur.n > prev.n);
        CHECK(cur.L < prev.L);
        CHECK(1.0 / cur.q < 1.0 / prev.q);
      }
    }
  }

  TEST_CASE("threshold search") {
    const sweep::NRange range{3.3, 6.0, 0.02};
    CHECK_THROWS_AS(sweep::find_threshold(4, 1, range), NoThresholdError);
    const auto t3 = sweep::find_threshold(4, 3, range);
    CHECK(t3.T > 3.3);
    CHECK(t3.T < 6.0);
    // Continuation oracle: dense sweep maximum of L.
    const auto rows = sweep::run_sweep_n(4, {3}, {3.3, 6.0, 0.005});
    std::size_t best = 0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
      if (rows[i].L > rows[best].L) best = i;
    }
    CHECK(std::abs(rows[best].n - t3.T) < 0.01);
    REQUIRE(t3.n_cross.has_value());
    CHECK(*t3.n_cross < t3.T + 0.5);
    CHECK_THROWS_AS(sweep::find_threshold(4, 3, {3.3, 6.0, 0.1}), InvalidArgument);
  }
}
