#include "padfs/loss.hpp"

#include <cmath>
#include <stdexcept>

#include "padfs/special.hpp"
#include "padfs/wigner.hpp"

namespace padfs {

LossParams::LossParams(double kappa_t) : kappa_t_(kappa_t) {
  if (!(kappa_t >= 0.0) || !std::isfinite(kappa_t))
    throw std::invalid_argument("LossParams: kappa_t must be finite and >= 0");
  big_t_ = 1.0 - std::exp(-2.0 * kappa_t);
}

DensityMatrix evolve_loss(const DensityMatrix& rho, const LossParams& loss) {
  const int dim = rho.dim();
  if (loss.kappa_t() == 0.0) return rho;  // identity channel
  const double kt = loss.kappa_t();
  const double big_t = loss.transmissivity_loss();
  DensityMatrix out;
  out.elements = Eigen::MatrixXcd::Zero(dim, dim);
  // rho'_{pq} = e^{-kt(p+q)} sum_j sqrt(C(p+j,j) C(q+j,j)) T^j rho_{p+j,q+j}
  for (int p = 0; p < dim; ++p)
    for (int q = 0; q < dim; ++q) {
      Complex s{};
      double tpow = 1.0;
      for (int j = 0; p + j < dim && q + j < dim; ++j) {
        s += std::sqrt(binom(p + j, j) * binom(q + j, j)) * tpow *
             rho.elements(p + j, q + j);
        tpow *= big_t;
      }
      out.elements(p, q) = std::exp(-kt * (p + q)) * s;
    }
  return out;
}

double noisy_wigner(const PadfsParams& params, const LossParams& loss,
                    PhasePoint point) {
  if (loss.transmissivity_loss() == 0.0)
    return wigner_padfs(params, point);  // delta kernel
  FockVector v = padfs_coefficients(params);
  DensityMatrix rho = to_density_matrix(v, v.offset + static_cast<int>(v.amps.size()));
  return wigner_generic(evolve_loss(rho, loss), point);
}

double noisy_wigner_convolution(const PadfsParams& params,
                                const LossParams& loss, PhasePoint point,
                                const QuadratureSpec& spec) {
  const double big_t = loss.transmissivity_loss();
  if (big_t == 0.0) return wigner_padfs(params, point);
  const double decay = std::exp(-loss.kappa_t());
  PadfsWigner w0(params);
  auto integrand = [&](Complex g) {
    return std::exp(-2.0 / big_t * std::norm(point - g * decay)) * w0(g);
  };
  QuadratureResult q = integrate_phase_space(integrand, spec);
  constexpr double kPi = 3.14159265358979323846;
  return 2.0 / (big_t * kPi) * q.value;
}

namespace {

// Global minimum of the Wigner function over the given window, via a
// coarse scan followed by repeated local zooms.  The sign of this minimum
// decides whether any negativity is left, and it crosses zero linearly in
// kappa_t -- much better conditioned near the threshold than the integrated
// negative volume, which vanishes quadratically.
double min_wigner(const DensityMatrix& rho, Complex center, double radius) {
  FockWigner w(rho);
  FockWigner::Workspace ws;
  Complex at = center;
  double best = w.eval(at, ws);
  double half = radius;
  int npts = 81;
  for (int zoom = 0; zoom < 8; ++zoom) {
    const Complex c = at;
    const double step = 2.0 * half / (npts - 1);
    for (int iy = 0; iy < npts; ++iy)
      for (int ix = 0; ix < npts; ++ix) {
        const Complex g = c + Complex{-half + ix * step, -half + iy * step};
        const double v = w.eval(g, ws);
        if (v < best) {
          best = v;
          at = g;
        }
      }
    half = 2.0 * step;
    npts = 17;
  }
  return best;
}

} // namespace

std::vector<DecayPoint> wln_decay_curve(const PadfsParams& params,
                                        const std::vector<double>& kt_grid,
                                        const QuadratureSpec& spec) {
  for (size_t i = 1; i < kt_grid.size(); ++i)
    if (kt_grid[i] < kt_grid[i - 1])
      throw std::invalid_argument("wln_decay_curve: kt_grid must be sorted ascending");
  FockVector v = padfs_coefficients(params);
  DensityMatrix rho0 =
      to_density_matrix(v, v.offset + static_cast<int>(v.amps.size()));
  std::vector<DecayPoint> curve;
  curve.reserve(kt_grid.size());
  for (double kt : kt_grid) {
    DecayPoint pt;
    pt.kappa_t = kt;
    pt.wln = wigner_log_negativity(evolve_loss(rho0, LossParams(kt)), spec);
    curve.push_back(pt);
  }
  return curve;
}

double wln_threshold(const PadfsParams& params, const QuadratureSpec& spec) {
  FockVector v = padfs_coefficients(params);
  DensityMatrix rho0 =
      to_density_matrix(v, v.offset + static_cast<int>(v.amps.size()));
  auto min_w = [&](double kt) {
    return min_wigner(evolve_loss(rho0, LossParams(kt)), spec.center, spec.radius);
  };
  if (min_w(0.0) >= -1e-12)
    throw std::invalid_argument("wln_threshold: state has no Wigner negativity at kappa_t = 0");
  double lo = 0.0, hi = 0.25;
  while (min_w(hi) < 0.0) {
    lo = hi;
    hi *= 2.0;
    if (hi > 64.0)
      throw std::runtime_error("wln_threshold: no vanishing point found");
  }
  while (hi - lo > 1e-3) {
    double mid = 0.5 * (lo + hi);
    (min_w(mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double wigner_at_origin_witness(const DensityMatrix& rho) {
  return wigner_generic(rho, PhasePoint{});
}

} // namespace padfs
