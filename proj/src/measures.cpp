#include "padfs/measures.hpp"

#include <cmath>

#include "padfs/special.hpp"
#include "padfs/wigner.hpp"

namespace padfs {

namespace {
const Complex kI{0.0, 1.0};

Complex ipow(int p) {
  switch (((p % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}
} // namespace

double TwoModeState::norm_sq() const {
  double s = 0.0;
  for (const auto& row : by_total)
    for (const auto& a : row) s += std::norm(a);
  return s;
}

Eigen::MatrixXcd TwoModeState::reduced_b() const {
  const int dim = static_cast<int>(by_total.size());
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dim, dim);
  // (rho_B)_{j j'} = sum_{k1} A_{k1+j, k1} conj(A_{k1+j', k1})
  for (int j = 0; j < dim; ++j)
    for (int jp = 0; jp < dim; ++jp) {
      Complex s{};
      for (int k1 = 0; k1 + std::max(j, jp) < dim; ++k1)
        s += by_total[k1 + j][k1] * std::conj(by_total[k1 + jp][k1]);
      rho(j, jp) = s;
    }
  return rho;
}

TwoModeState beamsplitter_output(const FockVector& v) {
  const int m_max = v.truncation();
  TwoModeState out;
  out.by_total.resize(m_max + 1);
  for (int total = 0; total <= m_max; ++total)
    out.by_total[total].assign(total + 1, Complex{});
  for (size_t j = 0; j < v.amps.size(); ++j) {
    const int total = v.offset + static_cast<int>(j);
    const Complex a = v.amps[j] * std::pow(0.5, 0.5 * total);
    for (int k1 = 0; k1 <= total; ++k1)
      out.by_total[total][k1] =
          a * std::sqrt(binom(total, k1)) * ipow(total - k1);
  }
  return out;
}

double linear_entropy_potential(const FockVector& v) {
  TwoModeState two = beamsplitter_output(v);
  Eigen::MatrixXcd rho_b = two.reduced_b();
  double purity = (rho_b * rho_b).trace().real();
  return 1.0 - purity;
}

double linear_entropy_closed_form(const FockVector& v) {
  // quadruple sum over the coefficient table, out-of-range binomials zero
  const int k = v.offset;
  const int count = static_cast<int>(v.amps.size());
  auto c = [&](int m) -> Complex {
    return (m >= 0 && m < count) ? v.amps[m] : Complex{};
  };
  double purity = 0.0;
  for (int m = 0; m < count; ++m)
    for (int mp = 0; mp < count; ++mp)
      for (int r = 0; r < count; ++r) {
        const Complex coeff =
            c(m) * std::conj(c(mp)) * c(r) * std::conj(c(m + r - mp));
        if (coeff == Complex{}) continue;
        double inner = 0.0;
        for (int k1 = 0; k1 <= m + k; ++k1) {
          double b = std::sqrt(binom(m + k, k1)) *
                     std::sqrt(binom(mp + k, k1) * binom(r + k, r - mp + k1) *
                               binom(m - mp + r + k, r - mp + k1));
          inner += b;
        }
        purity += (coeff * inner * std::pow(0.5, m + r + 2 * k)).real();
      }
  return 1.0 - purity;
}

double skew_info_measure(const FockVector& v) {
  return 0.5 + v.mean_photon() - std::norm(v.mean_a());
}

CovarianceMatrix covariance_matrix(const FockVector& v) {
  const Complex a = v.mean_a();
  const Complex a2 = v.mean_a2();
  const double nbar = v.mean_photon();
  CovarianceMatrix s;
  s.sqq = 2.0 * a2.real() + 2.0 * nbar + 1.0 - 4.0 * a.real() * a.real();
  s.spp = -2.0 * a2.real() + 2.0 * nbar + 1.0 - 4.0 * a.imag() * a.imag();
  s.sqp = 2.0 * a2.imag() - 4.0 * a.real() * a.imag();
  return s;
}

CovarianceMatrix covariance_matrix_printed_form(const FockVector& v) {
  const int k = v.offset;
  const int count = static_cast<int>(v.amps.size());
  auto c = [&](int m) -> Complex {
    return (m >= 0 && m < count) ? v.amps[m] : Complex{};
  };
  double first = 0.0, second = 0.0, third_qq = 0.0, third_pp = 0.0;
  double qp1 = 0.0, qp2 = 0.0;
  for (int m = 0; m < count; ++m) {
    const int mk = m + k;
    first += (c(m + 2) * std::conj(c(m))).real() *
             std::sqrt((mk + 1.0) * (mk + 2.0));
    second += 2.0 * std::norm(c(m)) * mk * (mk - 1.0) - 1.0;
    const Complex pair = c(m + 1) * std::conj(c(m));
    // (pair + c.c.)^2 resp. (pair - c.c.)^2, both real
    third_qq += 4.0 * pair.real() * pair.real() * (mk + 1.0);
    third_pp += -4.0 * pair.imag() * pair.imag() * (mk + 1.0);
    qp1 += (c(m + 2) * std::conj(c(m))).imag() *
           std::sqrt((mk + 1.0) * (mk + 2.0));
    qp2 += (c(m + 1) * c(m + 1) * std::conj(c(m)) * std::conj(c(m))).imag() *
           (mk + 1.0);
  }
  CovarianceMatrix s;
  s.sqq = first + second + third_qq;
  s.spp = first - second - third_pp;
  s.sqp = qp1 - qp2;
  return s;
}

double covariance_printed_discrepancy(const FockVector& v) {
  CovarianceMatrix a = covariance_matrix(v);
  CovarianceMatrix b = covariance_matrix_printed_form(v);
  return std::max({std::abs(a.sqq - b.sqq), std::abs(a.spp - b.spp),
                   std::abs(a.sqp - b.sqp)});
}

double entropy_h(double z) {
  if (z <= 1.0) return 0.0;  // 0 log 0 := 0 and clamping at the vacuum floor
  const double p = 0.5 * (z + 1.0);
  const double q = 0.5 * (z - 1.0);
  double r = p * std::log2(p);
  if (q > 0.0) r -= q * std::log2(q);
  return r;
}

double rel_entropy_non_gaussianity(const FockVector& v) {
  CovarianceMatrix s = covariance_matrix(v);
  const double det = s.det();
  if (det < 1.0 - 1e-6)
    throw std::invalid_argument("rel_entropy_non_gaussianity: unphysical covariance");
  return entropy_h(std::sqrt(std::max(det, 1.0)));
}

namespace {

template <class W>
WlnResult wln_from_eval(const W& w, const QuadratureSpec& spec, Exec exec) {
  auto abs_w = [&w](Complex g) { return std::abs(w(g)); };
  QuadratureResult q = integrate_phase_space(abs_w, spec, exec);
  WlnResult res;
  res.quad_error = q.error_estimate;
  res.converged = q.converged;
  double wln = (q.value > 0.0) ? std::log2(q.value) : 0.0;
  // noise below the quadrature error must not masquerade as negativity
  if (wln < std::max(q.error_estimate, 1e-12)) wln = 0.0;
  res.value = std::max(0.0, wln);
  return res;
}

} // namespace

WlnResult wigner_log_negativity(const PadfsParams& params,
                                const QuadratureSpec& spec, Exec exec) {
  PadfsWigner w(params);
  return wln_from_eval(w, spec, exec);
}

WlnResult wigner_log_negativity(const DensityMatrix& rho,
                                const QuadratureSpec& spec, Exec exec) {
  FockWigner w(rho);
  auto eval = [&w](Complex g) {
    thread_local FockWigner::Workspace ws;
    return w.eval(g, ws);
  };
  return wln_from_eval(eval, spec, exec);
}

QuadratureSpec default_quadrature(const PadfsParams& params) {
  QuadratureSpec spec;
  spec.center = params.alpha;
  spec.radius = default_radius(params, params.alpha);
  return spec;
}

MeasureReport measure_report(const PadfsParams& params,
                             const QuadratureSpec& spec) {
  FockVector v = padfs_coefficients(params);
  MeasureReport rep;
  rep.linear_entropy = linear_entropy_potential(v);
  rep.skew_info = skew_info_measure(v);
  rep.rel_entropy_ng = rel_entropy_non_gaussianity(v);
  WlnResult wln = wigner_log_negativity(params, spec);
  rep.wln = wln.value;
  rep.quadrature_error = wln.quad_error;
  rep.quad_converged = wln.converged;
  return rep;
}

MeasureReport measure_report(const PadfsParams& params) {
  return measure_report(params, default_quadrature(params));
}

} // namespace padfs
