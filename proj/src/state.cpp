#include "padfs/state.hpp"

#include <cmath>
#include <stdexcept>

#include "padfs/special.hpp"

namespace padfs {

void PadfsParams::validate() const {
  if (n < 0) throw std::invalid_argument("PadfsParams: n must be >= 0");
  if (k < 0) throw std::invalid_argument("PadfsParams: k must be >= 0");
  if (!(tail_tolerance > 0.0) || tail_tolerance > 1e-6)
    throw std::invalid_argument("PadfsParams: tail_tolerance must be in (0, 1e-6]");
  if (!std::isfinite(alpha.real()) || !std::isfinite(alpha.imag()))
    throw std::invalid_argument("PadfsParams: alpha must be finite");
}

Complex FockVector::amp_at(int photon) const {
  int j = photon - offset;
  if (j < 0 || j >= static_cast<int>(amps.size())) return {};
  return amps[j];
}

double FockVector::norm_sq() const {
  double s = 0.0;
  for (const auto& a : amps) s += std::norm(a);
  return s;
}

Complex FockVector::mean_a() const {
  // <a> = sum_m conj(c_m) c_{m+1} sqrt(m+1), m = photon number
  Complex s{};
  for (size_t j = 0; j + 1 < amps.size(); ++j) {
    int m = offset + static_cast<int>(j);
    s += std::conj(amps[j]) * amps[j + 1] * std::sqrt(m + 1.0);
  }
  return s;
}

Complex FockVector::mean_a2() const {
  Complex s{};
  for (size_t j = 0; j + 2 < amps.size(); ++j) {
    int m = offset + static_cast<int>(j);
    s += std::conj(amps[j]) * amps[j + 2] * std::sqrt((m + 1.0) * (m + 2.0));
  }
  return s;
}

double FockVector::mean_photon() const {
  double s = 0.0;
  for (size_t j = 0; j < amps.size(); ++j)
    s += (offset + static_cast<int>(j)) * std::norm(amps[j]);
  return s;
}

int truncation_start(const PadfsParams& params) {
  double a = std::abs(params.alpha);
  return params.k + params.n + static_cast<int>(std::ceil(a * a + 10.0 * a + 30.0));
}

namespace {

// Unnormalized C_m body: sqrt(n!(m+k)!)/m! alpha^{m-n} L_n^{m-n}(|alpha|^2),
// with the m < n branch rewritten through the negative-superscript identity
// so only nonnegative powers of alpha appear.
Complex unnormalized_amp(int m, const PadfsParams& p, double x /* |alpha|^2 */) {
  const int n = p.n, k = p.k;
  if (m >= n) {
    double logf = 0.5 * (log_factorial(n) + log_factorial(m + k)) - log_factorial(m);
    return std::exp(logf) * std::pow(p.alpha, m - n) *
           laguerre_general(n, m - n, x);
  }
  // alpha^{m-n} L_n^{m-n}(x) = (-conj(alpha))^{n-m} (m!/n!) L_m^{n-m}(x)
  double logf = 0.5 * (log_factorial(m + k) - log_factorial(n));
  return std::exp(logf) * std::pow(-std::conj(p.alpha), n - m) *
         laguerre_general(m, n - m, x);
}

} // namespace

FockVector padfs_coefficients(const PadfsParams& params) {
  params.validate();
  FockVector v;
  if (params.alpha == Complex{}) {  // exact |n+k>
    v.offset = params.k + params.n;
    v.amps.assign(1, Complex{1.0, 0.0});
    return v;
  }
  v.offset = params.k;
  const double x = std::norm(params.alpha);
  const int m0 = truncation_start(params) - params.k;
  std::vector<Complex> u;
  u.reserve(m0 + 8);
  double sum = 0.0;
  for (int m = 0; m <= m0; ++m) {
    u.push_back(unnormalized_amp(m, params, x));
    sum += std::norm(u.back());
  }
  // extend until the next squared amplitude is below tail_tolerance
  for (int m = m0 + 1;; ++m) {
    Complex next = unnormalized_amp(m, params, x);
    if (std::norm(next) < params.tail_tolerance * sum) break;
    u.push_back(next);
    sum += std::norm(next);
  }
  const double inv_norm = 1.0 / std::sqrt(sum);
  v.amps.resize(u.size());
  for (size_t i = 0; i < u.size(); ++i) v.amps[i] = u[i] * inv_norm;
  return v;
}

double padfs_norm_factor_sq(const PadfsParams& params) {
  params.validate();
  const double x = std::norm(params.alpha);
  if (params.alpha == Complex{})
    return std::exp(log_factorial(params.n) - log_factorial(params.n + params.k));
  const int m0 = truncation_start(params) - params.k;
  double sum = 0.0;
  for (int m = 0; m <= m0; ++m)
    sum += std::norm(unnormalized_amp(m, params, x));
  for (int m = m0 + 1;; ++m) {
    double t = std::norm(unnormalized_amp(m, params, x));
    if (t < params.tail_tolerance * sum) break;
    sum += t;
  }
  return std::exp(x) / sum;  // the e^{-|a|^2} weight pulled out of the sum
}

StateFamily parse_family(const std::string& name) {
  if (name == "vacuum") return StateFamily::vacuum;
  if (name == "fock") return StateFamily::fock;
  if (name == "coherent") return StateFamily::coherent;
  if (name == "dfs") return StateFamily::dfs;
  if (name == "pacs") return StateFamily::pacs;
  throw std::invalid_argument("unknown state family: " + name);
}

FockVector limiting_state(StateFamily family, Complex alpha, int n, int k,
                          double tail_tolerance) {
  PadfsParams p;
  p.tail_tolerance = tail_tolerance;
  switch (family) {
    case StateFamily::vacuum:
      break;
    case StateFamily::fock:
      p.n = n;
      break;
    case StateFamily::coherent:
      p.alpha = alpha;
      break;
    case StateFamily::dfs:
      p.alpha = alpha;
      p.n = n;
      break;
    case StateFamily::pacs:
      p.alpha = alpha;
      p.k = k;
      break;
  }
  return padfs_coefficients(p);
}

DensityMatrix to_density_matrix(const FockVector& v, int dim) {
  if (dim < v.offset + static_cast<int>(v.amps.size()))
    throw std::invalid_argument("to_density_matrix: dim too small for state support");
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(dim);
  for (size_t j = 0; j < v.amps.size(); ++j)
    psi(v.offset + static_cast<int>(j)) = v.amps[j];
  DensityMatrix rho;
  rho.elements = psi * psi.adjoint();
  return rho;
}

} // namespace padfs
