#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>

#include "padfs/loss.hpp"
#include "padfs/measures.hpp"
#include "padfs/state.hpp"
#include "padfs/wigner.hpp"

using namespace padfs;

namespace {
PadfsParams make(double alpha, int n, int k) {
  PadfsParams p;
  p.alpha = alpha;
  p.n = n;
  p.k = k;
  return p;
}

DensityMatrix pure_density(const PadfsParams& p) {
  FockVector v = padfs_coefficients(p);
  return to_density_matrix(v, v.offset + static_cast<int>(v.amps.size()));
}
} // namespace

TEST_CASE("loss parameters") {
  LossParams id(0.0);
  CHECK(id.transmissivity_loss() == 0.0);
  LossParams l(0.25);
  CHECK(l.transmissivity_loss() ==
        doctest::Approx(1.0 - std::exp(-0.5)).epsilon(1e-15));
  CHECK_THROWS_AS(LossParams(-0.1), std::invalid_argument);
}

TEST_CASE("kappa_t = 0 is the identity channel") {
  auto rho = pure_density(make(0.5, 1, 1));
  auto out = evolve_loss(rho, LossParams(0.0));
  CHECK((out.elements - rho.elements).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("single photon decays to the exact two-level mixture") {
  auto rho = pure_density(make(0.0, 1, 0));
  const double kt = 0.3;
  auto out = evolve_loss(rho, LossParams(kt));
  const double eta = std::exp(-2.0 * kt);
  CHECK(out.elements(1, 1).real() == doctest::Approx(eta).epsilon(1e-14));
  CHECK(out.elements(0, 0).real() == doctest::Approx(1.0 - eta).epsilon(1e-14));
}

TEST_CASE("long-time limit is the vacuum projector") {
  auto out = evolve_loss(pure_density(make(0.5, 1, 1)), LossParams(20.0));
  CHECK(std::abs(out.elements(0, 0) - Complex{1.0, 0.0}) < 1e-8);
  for (int i = 1; i < out.dim(); ++i)
    CHECK(std::abs(out.elements(i, i)) < 1e-8);
}

TEST_CASE("channel preserves trace, hermiticity and positivity") {
  for (double kt : {0.05, 0.25, 1.0}) {
    auto out = evolve_loss(pure_density(make(0.8, 2, 1)), LossParams(kt));
    CHECK(out.trace_real() == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(out.hermiticity_defect() < 1e-12);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(out.elements);
    CHECK(es.eigenvalues().minCoeff() > -1e-10);
  }
}

TEST_CASE("semigroup composition") {
  auto rho = pure_density(make(0.5, 1, 2));
  auto two_step = evolve_loss(evolve_loss(rho, LossParams(0.15)), LossParams(0.35));
  auto one_step = evolve_loss(rho, LossParams(0.5));
  CHECK((two_step.elements - one_step.elements).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("mean photon number decays exactly exponentially") {
  auto p = make(0.7, 1, 1);
  FockVector v = padfs_coefficients(p);
  const double n0 = v.mean_photon();
  for (double kt : {0.1, 0.4}) {
    auto out = evolve_loss(pure_density(p), LossParams(kt));
    double n_t = 0.0;
    for (int i = 0; i < out.dim(); ++i) n_t += i * out.elements(i, i).real();
    CHECK(n_t == doctest::Approx(std::exp(-2.0 * kt) * n0).epsilon(1e-8));
  }
}

TEST_CASE("noisy Wigner short-circuits at kappa_t = 0") {
  auto p = make(0.5, 1, 1);
  for (Complex g : {Complex{0.0, 0.0}, Complex{0.4, -0.3}})
    CHECK(noisy_wigner(p, LossParams(0.0), g) ==
          doctest::Approx(wigner_padfs(p, g)).epsilon(1e-14));
}

TEST_CASE("Kraus and convolution routes agree") {
  auto p = make(0.5, 1, 1);
  QuadratureSpec spec = default_quadrature(p);
  spec.rel_tolerance = 1e-7;
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> coord(-2.0, 2.0);
  for (double kt : {0.1, 0.25}) {
    LossParams loss(kt);
    for (int trial = 0; trial < 5; ++trial) {
      Complex g{coord(rng), coord(rng)};
      CHECK(noisy_wigner(p, loss, g) ==
            doctest::Approx(noisy_wigner_convolution(p, loss, g, spec))
                .epsilon(1e-4));
    }
  }
}

TEST_CASE("long-time noisy Wigner approaches the vacuum Gaussian") {
  auto p = make(0.5, 1, 1);
  LossParams loss(20.0);
  for (Complex g : {Complex{0.0, 0.0}, Complex{0.5, 0.5}, Complex{-1.0, 0.3}})
    CHECK(std::abs(noisy_wigner(p, loss, g) -
                   2.0 / M_PI * std::exp(-2.0 * std::norm(g))) < 1e-6);
}

TEST_CASE("negative lobe shrinks with kappa_t") {
  auto p = make(0.5, 1, 1);
  auto area = [&](double kt) {
    FockVector v = padfs_coefficients(p);
    auto rho = evolve_loss(
        to_density_matrix(v, v.offset + static_cast<int>(v.amps.size())),
        LossParams(kt));
    auto g = wigner_grid(rho, GridWindow{-3, 3, -3, 3}, 101);
    int negative_cells = 0;
    for (double w : g.values)
      if (w < 0.0) ++negative_cells;
    return negative_cells;
  };
  CHECK(area(0.25) < area(0.1));
}

TEST_CASE("decay curve starts at the noiseless WLN and has a threshold") {
  auto p = make(0.5, 1, 1);
  QuadratureSpec spec = default_quadrature(p);
  auto curve = wln_decay_curve(p, {0.0, 0.1, 0.2, 0.4, 0.8, 1.5}, spec);
  CHECK(curve.front().wln.value ==
        doctest::Approx(wigner_log_negativity(p, spec).value).epsilon(1e-6));
  // nonincreasing within tolerance, and eventually zero
  for (size_t i = 1; i < curve.size(); ++i)
    CHECK(curve[i].wln.value <=
          curve[i - 1].wln.value + 3.0 * (curve[i].wln.quad_error +
                                          curve[i - 1].wln.quad_error) + 1e-9);
  CHECK(curve.back().wln.value == 0.0);
}

TEST_CASE("decay curve rejects an unsorted grid") {
  auto p = make(0.5, 1, 1);
  CHECK_THROWS_AS(wln_decay_curve(p, {0.2, 0.1}, default_quadrature(p)),
                  std::invalid_argument);
}

TEST_CASE("single-photon threshold is ln(2)/2") {
  auto p = make(0.0, 1, 0);
  double kt_star = wln_threshold(p, default_quadrature(p));
  CHECK(kt_star == doctest::Approx(0.5 * std::log(2.0)).epsilon(3e-3));
}

TEST_CASE("padfs(0.5,1,1) threshold regression") {
  auto p = make(0.5, 1, 1);
  double kt_star = wln_threshold(p, default_quadrature(p));
  CHECK(kt_star > 0.0);
  CHECK(std::abs(kt_star - 0.496582) < 2e-3);  // frozen regression value
}

TEST_CASE("threshold rejects classical states") {
  CHECK_THROWS_AS(wln_threshold(make(0.7, 0, 0), default_quadrature(make(0.7, 0, 0))),
                  std::invalid_argument);
}

TEST_CASE("Wigner at the origin as a witness") {
  CHECK(wigner_at_origin_witness(pure_density(make(0.0, 0, 0))) ==
        doctest::Approx(2.0 / M_PI).epsilon(1e-12));
  CHECK(wigner_at_origin_witness(pure_density(make(0.0, 1, 0))) ==
        doctest::Approx(-2.0 / M_PI).epsilon(1e-12));
  // evolved single photon: W(0) = (2/pi)(1 - 2 e^{-2 kt}), exact
  auto rho1 = pure_density(make(0.0, 1, 0));
  for (double kt : {0.1, 0.3, 0.5 * std::log(2.0), 1.0})
    CHECK(wigner_at_origin_witness(evolve_loss(rho1, LossParams(kt))) ==
          doctest::Approx(2.0 / M_PI * (1.0 - 2.0 * std::exp(-2.0 * kt)))
              .epsilon(1e-12));
}
