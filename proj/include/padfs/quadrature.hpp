#pragma once

// 2-D phase-space quadrature over a disk: tensor midpoint rule on the
// bounding square with grid-doubling refinement.  The parallel kernel
// accumulates one partial sum per grid row and combines them serially,
// so serial and OpenMP runs produce bit-identical results.

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace padfs {

enum class Exec { serial, parallel };

struct QuadratureSpec {
  std::complex<double> center{0.0, 0.0};
  double radius = 6.0;          // integration cutoff R
  int refinement_levels = 7;    // grid doublings attempted
  double rel_tolerance = 1e-5;  // convergence threshold between levels
  int initial_cells = 48;       // cells per axis at the first level

  void validate() const;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;  // |last - previous| refinement difference
  bool converged = false;
  int cells = 0;  // cells per axis at the final level
};

namespace detail {

template <class F>
double midpoint_level_serial(F& f, const QuadratureSpec& spec, int cells) {
  const double r2 = spec.radius * spec.radius;
  const double h = 2.0 * spec.radius / cells;
  const double x0 = spec.center.real() - spec.radius;
  const double y0 = spec.center.imag() - spec.radius;
  double total = 0.0;
  for (int i = 0; i < cells; ++i) {
    const double y = y0 + (i + 0.5) * h;
    const double dy = y - spec.center.imag();
    double row = 0.0;
    for (int j = 0; j < cells; ++j) {
      const double x = x0 + (j + 0.5) * h;
      const double dx = x - spec.center.real();
      if (dx * dx + dy * dy > r2) continue;
      row += f(std::complex<double>(x, y));
    }
    total += row;
  }
  return total * h * h;
}

template <class F>
double midpoint_level_parallel(F& f, const QuadratureSpec& spec, int cells) {
  const double r2 = spec.radius * spec.radius;
  const double h = 2.0 * spec.radius / cells;
  const double x0 = spec.center.real() - spec.radius;
  const double y0 = spec.center.imag() - spec.radius;
  std::vector<double> row_sums(cells, 0.0);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < cells; ++i) {
    const double y = y0 + (i + 0.5) * h;
    const double dy = y - spec.center.imag();
    double row = 0.0;
    for (int j = 0; j < cells; ++j) {
      const double x = x0 + (j + 0.5) * h;
      const double dx = x - spec.center.real();
      if (dx * dx + dy * dy > r2) continue;
      row += f(std::complex<double>(x, y));
    }
    row_sums[i] = row;
  }
  double total = 0.0;
  for (int i = 0; i < cells; ++i) total += row_sums[i];
  return total * h * h;
}

} // namespace detail

// Integral of f over the disk |gamma - center| <= radius with
// d^2 gamma = d(Re gamma) d(Im gamma).  f must be side-effect-free: the
// parallel path evaluates it concurrently.
template <class F>
QuadratureResult integrate_phase_space(F&& f, const QuadratureSpec& spec,
                                       Exec exec = Exec::parallel) {
  spec.validate();
  QuadratureResult res;
  double prev = 0.0;
  int cells = spec.initial_cells;
  for (int level = 0; level < spec.refinement_levels; ++level, cells *= 2) {
    double cur = (exec == Exec::parallel)
                     ? detail::midpoint_level_parallel(f, spec, cells)
                     : detail::midpoint_level_serial(f, spec, cells);
    res.value = cur;
    res.cells = cells;
    if (level > 0) {
      res.error_estimate = std::abs(cur - prev);
      double scale = std::max(std::abs(cur), 1.0);
      if (res.error_estimate < spec.rel_tolerance * scale) {
        res.converged = true;
        return res;
      }
    }
    prev = cur;
  }
  return res;  // unconverged: value still meaningful, flagged by caller
}

inline void QuadratureSpec::validate() const {
  if (!(radius > 0.0)) throw std::invalid_argument("QuadratureSpec: radius must be > 0");
  if (!(rel_tolerance > 0.0))
    throw std::invalid_argument("QuadratureSpec: rel_tolerance must be > 0");
  if (refinement_levels < 1)
    throw std::invalid_argument("QuadratureSpec: refinement_levels must be >= 1");
  if (initial_cells < 2)
    throw std::invalid_argument("QuadratureSpec: initial_cells must be >= 2");
}

} // namespace padfs
