#include "fracsum/root_locus.hpp"

#include <cmath>
#include <random>

#include "doctest.h"
#include "fracsum/asymptotic.hpp"
#include "test_util.hpp"

using fracsum::DerivEvaluator;
using fracsum::FractionSumParams;
using fracsum::make_params;

namespace {

// Grid-scan oracle: argmin of eval_f over [0, x_max] with `points` samples.
struct GridMin {
  double x;
  double f;
  double step;
};

GridMin grid_argmin(const FractionSumParams& p, double x_max, int points) {
  GridMin best{0.0, fracsum::eval_f(p, 0.0), x_max / (points - 1)};
  for (int i = 1; i < points; ++i) {
    const double x = x_max * static_cast<double>(i) / (points - 1);
    const double f = fracsum::eval_f(p, x);
    if (f < best.f) {
      best.x = x;
      best.f = f;
    }
  }
  return best;
}

// Grid-scan oracle for the sign crossing of the scaled k-th derivative.
double grid_crossing(const FractionSumParams& p, int k, double x_max,
                     int points) {
  const DerivEvaluator ev(p, k);
  int last = 0;
  double last_x = 0.0;
  for (int i = 0; i < points; ++i) {
    const double x = x_max * static_cast<double>(i) / (points - 1);
    const int s = ev.sign(x);
    if (s == 0) {
      continue;
    }
    if (last != 0 && s != last) {
      return 0.5 * (last_x + x);
    }
    last = s;
    last_x = x;
  }
  return -1.0;
}

}  // namespace

TEST_CASE("zero_bracket closed forms") {
  const FractionSumParams p1 = make_params({1.0}, {1.0});
  const auto b1 = fracsum::zero_bracket(p1, 1);
  CHECK(b1.lo == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(b1.hi == doctest::Approx(1.5).epsilon(1e-15));

  const auto b5 = fracsum::zero_bracket(p1, 5);
  CHECK(b5.lo == doctest::Approx(2.5).epsilon(1e-15));
  CHECK(b5.hi == doctest::Approx(7.5).epsilon(1e-15));

  const FractionSumParams p2 = make_params({1.0, 4.0}, {2.0, 1.0});
  const auto b2 = fracsum::zero_bracket(p2, 1);
  CHECK(b2.lo == doctest::Approx(0.125).epsilon(1e-15));
  CHECK(b2.hi == doctest::Approx(2.25).epsilon(1e-15));
}

TEST_CASE("derivative keeps one sign outside the bracket") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const FractionSumParams p = testutil::random_params(rng);
    for (int k = 1; k <= 10; ++k) {
      const auto br = fracsum::zero_bracket(p, k);
      const DerivEvaluator ev(p, k);
      const int below = ev.sign(0.5 * br.lo);
      const int above = ev.sign(2.0 * br.hi);
      REQUIRE(below != 0);
      REQUIRE(above != 0);
      CHECK(below == -above);
      for (int j = 1; j <= 25; ++j) {
        const double x_lo = br.lo * j / 26.0;
        CHECK(ev.sign(x_lo) == below);
        const double x_hi = br.hi + (3.0 * br.hi) * j / 25.0;
        CHECK(ev.sign(x_hi) == above);
      }
    }
  }
}

TEST_CASE("count_sign_changes sees exactly one flip") {
  const FractionSumParams p1 = make_params({1.0}, {1.0});
  CHECK(fracsum::count_sign_changes(p1, 1, 100000) == 1);
  CHECK(fracsum::count_sign_changes(p1, 2, 100000) == 1);

  const FractionSumParams p3 = make_params({3.0, 1.0, 2.0}, {1.0, 5.0, 2.0});
  for (int k = 1; k <= 5; ++k) {
    CHECK(fracsum::count_sign_changes(p3, k, 100000) == 1);
  }
}

TEST_CASE("sign-change counts never decrease with the order") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 20; ++trial) {
    const FractionSumParams p = testutil::random_params(rng);
    int prev = fracsum::count_sign_changes(p, 1, 20000);
    for (int k = 2; k <= 5; ++k) {
      const int cur = fracsum::count_sign_changes(p, k, 20000);
      CHECK(cur >= prev);
      prev = cur;
    }
  }
}

TEST_CASE("find_unique_zero closed forms") {
  const double tol = 1e-12;
  CHECK(fracsum::find_unique_zero(make_params({1.0}, {1.0}), 1, tol) ==
        doctest::Approx(1.0).epsilon(1e-10));
  CHECK(fracsum::find_unique_zero(make_params({1.0}, {2.0}), 1, tol) ==
        doctest::Approx(2.0).epsilon(1e-10));
  // single term: the k-th derivative vanishes at a_hat/b_hat = k for c=d=1
  CHECK(fracsum::find_unique_zero(make_params({1.0}, {1.0}), 3, tol) ==
        doctest::Approx(3.0).epsilon(1e-10));
}

TEST_CASE("find_unique_zero agrees with the grid-scan oracle") {
  const FractionSumParams p = make_params({1.0, 4.0}, {2.0, 1.0});
  const auto br = fracsum::zero_bracket(p, 1);
  const int points = 1000000;
  const double x_max = 2.0 * br.hi;
  const double crossing = grid_crossing(p, 1, x_max, points);
  REQUIRE(crossing > 0.0);
  const double zero = fracsum::find_unique_zero(p, 1, 1e-10);
  CHECK(std::abs(zero - crossing) <= 2.0 * x_max / (points - 1));
}

TEST_CASE("certify_unimodal fixed instances") {
  const auto c1 = fracsum::certify_unimodal(make_params({1.0}, {1.0}), 1e-10,
                                            100000);
  CHECK(c1.pass);
  CHECK(c1.x_z == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(c1.f_at_xz == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(c1.second_deriv_scaled == doctest::Approx(0.0625).epsilon(1e-6));
  CHECK(c1.sign_changes_k1 == 1);
  CHECK(c1.sign_changes_k2 == 1);
  CHECK(c1.bracket_width_final <= 1e-10 * std::max(1.0, c1.x_z));

  const auto c2 = fracsum::certify_unimodal(make_params({1.0}, {2.0}), 1e-10,
                                            100000);
  CHECK(c2.pass);
  CHECK(c2.x_z == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(c2.f_at_xz == doctest::Approx(0.2).epsilon(1e-9));
}

TEST_CASE("certify_unimodal passes on random instances") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    const FractionSumParams p = testutil::random_params(rng);
    const auto cert = fracsum::certify_unimodal(p, 1e-10, 10000);
    CHECK(cert.pass);
    // the scaled first derivative nearly vanishes at the certified zero
    const DerivEvaluator d1(p, 1);
    const double slack =
        1e-6 * (1.0 + std::abs(cert.second_deriv_scaled) *
                          std::max(1.0, cert.x_z));
    CHECK(std::abs(d1(cert.x_z)) <= slack);
  }
}

TEST_CASE("minimize fixed instances") {
  const auto m1 = fracsum::minimize(make_params({1.0}, {2.0}), 1e-12);
  CHECK(m1.x_star == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(m1.f_star == doctest::Approx(0.2).epsilon(1e-12));

  const auto m2 = fracsum::minimize(make_params({1.0}, {1.0}), 1e-12);
  CHECK(m2.x_star == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(m2.f_star == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("minimize agrees with the grid-scan oracle") {
  const FractionSumParams p = make_params({1.0, 4.0}, {2.0, 1.0});
  const auto [tau_min, tau_max] = fracsum::tau_bounds(p);
  const int points = 1000000;
  const GridMin oracle = grid_argmin(p, 10.0 * tau_max, points);
  const auto m = fracsum::minimize(p, 1e-10);
  CHECK(std::abs(m.x_star - oracle.x) <= 2.0 * oracle.step);
  CHECK(m.f_star <= oracle.f + 1e-10 * (1.0 + std::abs(oracle.f)));
}

TEST_CASE("minimizer is locally optimal") {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 50; ++trial) {
    const FractionSumParams p = testutil::random_params(rng);
    const auto m = fracsum::minimize(p, 1e-10);
    for (double rel : {1e-3, 1e-2, 1e-1}) {
      const double delta = rel * std::max(1.0, m.x_star);
      CHECK(m.f_star <= fracsum::eval_f(p, m.x_star + delta));
      CHECK(m.f_star <= fracsum::eval_f(p, std::max(0.0, m.x_star - delta)));
    }
  }
}

TEST_CASE("scaling (c, d) -> (c/s^2, d/s) rescales the minimizer by s") {
  std::mt19937_64 rng(25);
  const double s = 2.0;
  for (int trial = 0; trial < 30; ++trial) {
    const FractionSumParams p = testutil::random_params(rng);
    std::vector<double> c2(p.c), d2(p.d);
    for (std::size_t i = 0; i < p.size(); ++i) {
      c2[i] /= s * s;
      d2[i] /= s;
    }
    const auto base = fracsum::minimize(p, 1e-12);
    const auto scaled = fracsum::minimize(make_params(c2, d2), 1e-12);
    CHECK(scaled.x_star == doctest::Approx(s * base.x_star).epsilon(1e-10));
    CHECK(scaled.f_star == doctest::Approx(base.f_star).epsilon(1e-10));
  }
}

TEST_CASE("grid preconditions are enforced") {
  const FractionSumParams p = make_params({1.0}, {1.0});
  CHECK_THROWS_AS(fracsum::count_sign_changes(p, 1, 999), fracsum::Error);
  CHECK_THROWS_AS(fracsum::find_unique_zero(p, 1, 0.0), fracsum::Error);
}
