#include "padfs/wigner.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "padfs/special.hpp"

namespace padfs {

namespace {
constexpr double kPi = 3.14159265358979323846;

Complex cpow_int(Complex z, int p) {
  Complex r{1.0, 0.0};
  for (int i = 0; i < p; ++i) r *= z;  // 0^0 := 1
  return r;
}
} // namespace

// ---------------------------------------------------------------------------
// analytic path

PadfsWigner::PadfsWigner(const PadfsParams& params) {
  params.validate();
  n_ = params.n;
  k_ = params.k;
  alpha_ = params.alpha;
  prefactor_ = 2.0 * padfs_norm_factor_sq(params) /
               (std::exp(log_factorial(n_)) * kPi);
  s_.resize(static_cast<size_t>(n_ + 1) * (n_ + 1));
  for (int tp = 0; tp <= n_; ++tp)
    for (int t = 0; t <= n_; ++t)
      s_[static_cast<size_t>(tp) * (n_ + 1) + t] =
          binom(n_, tp) * binom(n_, t) * cpow_int(std::conj(alpha_), n_ - tp) *
          cpow_int(alpha_, n_ - t);
  kt_log_factorial_.resize(n_ + 1);
  for (int t = 0; t <= n_; ++t) kt_log_factorial_[t] = log_factorial(k_ + t);
}

double PadfsWigner::operator()(PhasePoint gamma) const {
  const Complex eta = 2.0 * gamma - alpha_;
  const double x = std::norm(eta);
  // diagonal: S_tt and P_tt are both real
  double sum = 0.0;
  for (int t = 0; t <= n_; ++t) {
    double p = ((k_ + t) % 2 == 0 ? 1.0 : -1.0) * std::exp(kt_log_factorial_[t]) *
               laguerre_general(k_ + t, 0, x);
    sum += s_[static_cast<size_t>(t) * (n_ + 1) + t].real() * p;
  }
  // off-diagonal pairs enter through 2 Re
  Complex off{};
  for (int t = 1; t <= n_; ++t)
    for (int tp = 0; tp < t; ++tp) {
      Complex p = ((k_ + t) % 2 == 0 ? 1.0 : -1.0) *
                  std::exp(kt_log_factorial_[tp]) * cpow_int(eta, t - tp) *
                  laguerre_general(k_ + tp, t - tp, x);
      off += s_[static_cast<size_t>(tp) * (n_ + 1) + t] * p;
    }
  sum += 2.0 * off.real();
  return prefactor_ * std::exp(-2.0 * std::norm(gamma - alpha_)) * sum;
}

double wigner_padfs(const PadfsParams& params, PhasePoint point) {
  return PadfsWigner(params)(point);
}

// ---------------------------------------------------------------------------
// generic Fock-basis path

FockWigner::FockWigner(const DensityMatrix& rho, double trim_tol) {
  const int full = rho.dim();
  if (full < 1) throw std::invalid_argument("FockWigner: empty density matrix");
  int d = 1;
  for (int i = 0; i < full; ++i)
    if (std::abs(rho.elements(i, i)) > trim_tol) d = i + 1;
  dim_ = d;
  weighted_.resize(static_cast<size_t>(d) * d);
  for (int mp = 0; mp < d; ++mp)
    for (int m = 0; m < d; ++m)
      weighted_[static_cast<size_t>(mp) * d + m] =
          (mp % 2 == 0 ? 1.0 : -1.0) * rho.elements(mp, m);
  fact_ratio_.resize(static_cast<size_t>(d) * (d + 1) / 2);
  for (int m = 0; m < d; ++m)
    for (int mp = 0; mp <= m; ++mp)
      fact_ratio_[static_cast<size_t>(m) * (m + 1) / 2 + mp] =
          std::exp(0.5 * (log_factorial(mp) - log_factorial(m)));
}

double FockWigner::eval(PhasePoint gamma, Workspace& ws) const {
  const int d = dim_;
  const Complex beta = 2.0 * gamma;
  const double x = std::norm(beta);
  if (x == 0.0) {
    double s = 0.0;
    for (int m = 0; m < d; ++m)
      s += weighted_[static_cast<size_t>(m) * d + m].real();
    return 2.0 / kPi * s;
  }
  const double ab = std::abs(beta);
  const Complex u = beta / ab;
  ws.mag.resize(d);
  ws.phase.resize(d);
  ws.lag.resize(static_cast<size_t>(d) * d);
  ws.mag[0] = 1.0;
  ws.phase[0] = Complex{1.0, 0.0};
  for (int j = 1; j < d; ++j) {
    ws.mag[j] = ws.mag[j - 1] * ab;
    ws.phase[j] = ws.phase[j - 1] * u;
  }
  // lag[delta * d + mp] = L_mp^delta(x)
  for (int delta = 0; delta < d; ++delta)
    laguerre_row(delta, x, ws.lag.data() + static_cast<size_t>(delta) * d,
                 d - delta);
  const double expf = std::exp(-0.5 * x);
  double acc = 0.0;
  for (int m = 0; m < d; ++m) {
    const double* tri = fact_ratio_.data() + static_cast<size_t>(m) * (m + 1) / 2;
    // diagonal term (delta = 0)
    acc += weighted_[static_cast<size_t>(m) * d + m].real() * tri[m] * expf *
           ws.lag[m];
    for (int mp = 0; mp < m; ++mp) {
      const int delta = m - mp;
      const double s =
          tri[mp] * ws.mag[delta] * expf * ws.lag[static_cast<size_t>(delta) * d + mp];
      const Complex& b = weighted_[static_cast<size_t>(mp) * d + m];
      const Complex& ph = ws.phase[delta];
      acc += 2.0 * s * (b.real() * ph.real() - b.imag() * ph.imag());
    }
  }
  return 2.0 / kPi * acc;
}

double FockWigner::operator()(PhasePoint gamma) const {
  Workspace ws;
  return eval(gamma, ws);
}

double wigner_generic(const DensityMatrix& rho, PhasePoint point) {
  return FockWigner(rho)(point);
}

// ---------------------------------------------------------------------------
// grids

namespace {

template <class Eval>
WignerGrid fill_grid(const Eval& w, const GridWindow& window, int resolution,
                     Exec exec) {
  if (resolution < 2)
    throw std::invalid_argument("wigner_grid: resolution must be >= 2 per axis");
  WignerGrid g;
  g.x_axis.resize(resolution);
  g.y_axis.resize(resolution);
  const double dx = (window.x_max - window.x_min) / (resolution - 1);
  const double dy = (window.y_max - window.y_min) / (resolution - 1);
  for (int i = 0; i < resolution; ++i) {
    g.x_axis[i] = window.x_min + i * dx;
    g.y_axis[i] = window.y_min + i * dy;
  }
  g.values.assign(static_cast<size_t>(resolution) * resolution, 0.0);
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
    for (int iy = 0; iy < resolution; ++iy)
      for (int ix = 0; ix < resolution; ++ix)
        g.values[static_cast<size_t>(iy) * resolution + ix] =
            w(Complex(g.x_axis[ix], g.y_axis[iy]));
  } else {
    for (int iy = 0; iy < resolution; ++iy)
      for (int ix = 0; ix < resolution; ++ix)
        g.values[static_cast<size_t>(iy) * resolution + ix] =
            w(Complex(g.x_axis[ix], g.y_axis[iy]));
  }
  g.min_value = g.values[0];
  g.min_x = g.x_axis[0];
  g.min_y = g.y_axis[0];
  for (int iy = 0; iy < resolution; ++iy)
    for (int ix = 0; ix < resolution; ++ix)
      if (g.at(ix, iy) < g.min_value) {
        g.min_value = g.at(ix, iy);
        g.min_x = g.x_axis[ix];
        g.min_y = g.y_axis[iy];
      }
  return g;
}

} // namespace

double WignerGrid::integral() const {
  const double dx = x_axis[1] - x_axis[0];
  const double dy = y_axis[1] - y_axis[0];
  double s = 0.0;
  for (double v : values) s += v;
  return s * dx * dy;
}

WignerGrid wigner_grid(const PadfsParams& params, const GridWindow& window,
                       int resolution, Exec exec) {
  PadfsWigner w(params);
  return fill_grid(w, window, resolution, exec);
}

WignerGrid wigner_grid(const DensityMatrix& rho, const GridWindow& window,
                       int resolution, Exec exec) {
  FockWigner w(rho);
  auto eval = [&w](Complex gamma) {
    thread_local FockWigner::Workspace ws;
    return w.eval(gamma, ws);
  };
  return fill_grid(eval, window, resolution, exec);
}

void write_csv(const WignerGrid& grid, std::ostream& out,
               const std::vector<std::string>& comment_lines) {
  char buf[192];
  for (const auto& line : comment_lines) out << "# " << line << "\n";
  out << "x,y,w\n";
  const int nx = static_cast<int>(grid.x_axis.size());
  const int ny = static_cast<int>(grid.y_axis.size());
  for (int iy = 0; iy < ny; ++iy)
    for (int ix = 0; ix < nx; ++ix) {
      std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g\n", grid.x_axis[ix],
                    grid.y_axis[iy], grid.at(ix, iy));
      out << buf;
    }
}

double default_radius(const PadfsParams& params, Complex center) {
  return 5.0 + std::abs(center - params.alpha) +
         std::sqrt(2.0 * (params.k + params.n + std::norm(params.alpha)));
}

} // namespace padfs
