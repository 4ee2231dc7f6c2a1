#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "padfs/quadrature.hpp"
#include "padfs/special.hpp"

using namespace padfs;

TEST_CASE("log_factorial basics") {
  CHECK(log_factorial(0) == 0.0);
  CHECK(log_factorial(1) == 0.0);
  CHECK(log_factorial(10) == doctest::Approx(std::log(3628800.0)).epsilon(1e-14));
  // exact to double rounding for n <= 20
  double f = 1.0;
  for (int n = 1; n <= 20; ++n) {
    f *= n;
    CHECK(log_factorial(n) == doctest::Approx(std::log(f)).epsilon(1e-15));
  }
  for (int n = 1; n < 300; ++n) CHECK(log_factorial(n) >= log_factorial(n - 1));
  CHECK_THROWS_AS(log_factorial(-1), std::invalid_argument);
}

TEST_CASE("laguerre degenerate cases") {
  for (int a : {-3, 0, 2, 7})
    for (double x : {-1.5, 0.0, 4.0}) CHECK(laguerre_general(0, a, x) == 1.0);
  CHECK(laguerre_general(1, 0, 2.0) == doctest::Approx(-1.0));
  CHECK_THROWS_AS(laguerre_general(-1, 0, 1.0), std::invalid_argument);
}

TEST_CASE("negative superscript identity value") {
  // L_2^{-1}(2) = (-2) (1!/2!) L_1^1(2) = (-2)(1/2)(2-2) = 0
  CHECK(laguerre_general(2, -1, 2.0) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(laguerre_series(2, -1, 2.0) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("three-term recurrence holds for random parameters") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> nd(1, 20), ad(-10, 10);
  std::uniform_real_distribution<double> xd(-25.0, 25.0);
  for (int trial = 0; trial < 1000; ++trial) {
    int n = nd(rng), a = ad(rng);
    double x = xd(rng);
    double lm1 = laguerre_general(n - 1, a, x);
    double l0 = laguerre_general(n, a, x);
    double lp1 = laguerre_general(n + 1, a, x);
    double lhs = (n + 1.0) * lp1;
    double rhs = (2.0 * n + 1.0 + a - x) * l0 - (n + a) * lm1;
    double scale = std::max({std::abs(lhs), std::abs(rhs), 1.0});
    CHECK(std::abs(lhs - rhs) / scale < 1e-10);
  }
}

TEST_CASE("negative superscript identity vs direct series") {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> xd(0.0, 16.0);
  for (int n = 1; n <= 12; ++n)
    for (int j = 1; j <= n; ++j) {
      double x = xd(rng);
      double via_identity = laguerre_general(n, -j, x);
      double via_series = laguerre_series(n, -j, x);
      double scale = std::max({std::abs(via_identity), std::abs(via_series), 1.0});
      CHECK(std::abs(via_identity - via_series) / scale < 1e-12);
    }
}

TEST_CASE("quadrature: normalized Gaussian integrates to 1") {
  QuadratureSpec spec;
  spec.radius = 6.0;
  spec.rel_tolerance = 1e-7;
  auto f = [](std::complex<double> g) {
    return 2.0 / M_PI * std::exp(-2.0 * std::norm(g));
  };
  auto q = integrate_phase_space(f, spec);
  CHECK(q.converged);
  CHECK(q.value == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("quadrature: unit disk area") {
  QuadratureSpec spec;
  spec.radius = 1.0;
  spec.rel_tolerance = 1e-4;
  auto one = [](std::complex<double>) { return 1.0; };
  auto q = integrate_phase_space(one, spec);
  CHECK(q.value == doctest::Approx(M_PI).epsilon(2e-4));
}

TEST_CASE("quadrature: serial and parallel kernels agree bitwise") {
  QuadratureSpec spec;
  spec.radius = 4.0;
  spec.rel_tolerance = 1e-8;
  auto f = [](std::complex<double> g) {
    return std::cos(3.0 * g.real()) * std::exp(-std::norm(g));
  };
  auto qs = integrate_phase_space(f, spec, Exec::serial);
  auto qp = integrate_phase_space(f, spec, Exec::parallel);
  CHECK(qs.value == qp.value);
  CHECK(qs.error_estimate == qp.error_estimate);
}

TEST_CASE("quadrature: non-convergence is flagged, value still returned") {
  QuadratureSpec spec;
  spec.radius = 3.0;
  spec.refinement_levels = 2;
  spec.rel_tolerance = 1e-14;
  auto f = [](std::complex<double> g) { return std::exp(-std::norm(g)); };
  auto q = integrate_phase_space(f, spec);
  CHECK_FALSE(q.converged);
  CHECK(q.value > 0.0);
}

TEST_CASE("quadrature spec validation") {
  QuadratureSpec spec;
  spec.radius = -1.0;
  auto one = [](std::complex<double>) { return 1.0; };
  CHECK_THROWS_AS(integrate_phase_space(one, spec), std::invalid_argument);
}
