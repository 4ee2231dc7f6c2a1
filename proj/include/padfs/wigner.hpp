#pragma once

// Wigner function evaluation: a fast analytic path for pure PADFS and a
// generic Fock-basis path (parity-operator form) that also covers mixed
// states after loss evolution.  Grid fills run row-parallel; the serial
// kernel is the reference and produces bit-identical values.

#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

#include "padfs/quadrature.hpp"
#include "padfs/state.hpp"

namespace padfs {

using PhasePoint = Complex;  // Re = position-like, Im = momentum-like

// Analytic PADFS Wigner function with precomputed displacement polynomial
// table; cheap per-point evaluation, thread-safe.
class PadfsWigner {
 public:
  explicit PadfsWigner(const PadfsParams& params);
  double operator()(PhasePoint gamma) const;

 private:
  int n_, k_;
  Complex alpha_;
  double prefactor_;                     // 2|N|^2 / (n! pi)
  std::vector<Complex> s_;               // S_{t',t}, (n+1)x(n+1) row-major
  std::vector<double> kt_log_factorial_;  // ln (k+t)!
};

// Generic evaluator for a density matrix via W = (2/pi) Tr[rho D(2g) P],
// the parity-sum form of the Fock-basis definition.  Basis states with
// negligible weight are trimmed before evaluation.
class FockWigner {
 public:
  explicit FockWigner(const DensityMatrix& rho, double trim_tol = 1e-30);

  double operator()(PhasePoint gamma) const;

  struct Workspace {
    std::vector<double> lag;   // Laguerre table, dim*dim
    std::vector<double> mag;   // |2 gamma|^j
    std::vector<Complex> phase;  // unit-phase powers of 2 gamma
  };
  double eval(PhasePoint gamma, Workspace& ws) const;
  int effective_dim() const { return dim_; }

 private:
  int dim_;
  std::vector<Complex> weighted_;    // rho_{m',m} (-1)^{m'}, lower triangle use
  std::vector<double> fact_ratio_;   // exp(0.5 (ln m'! - ln m!)) for m >= m'
};

double wigner_padfs(const PadfsParams& params, PhasePoint point);
double wigner_generic(const DensityMatrix& rho, PhasePoint point);

struct GridWindow {
  double x_min = -3.0, x_max = 3.0;
  double y_min = -3.0, y_max = 3.0;
};

struct WignerGrid {
  std::vector<double> x_axis, y_axis;
  std::vector<double> values;  // row-major, values[iy * nx + ix]
  double min_value = 0.0;
  double min_x = 0.0, min_y = 0.0;

  double at(int ix, int iy) const {
    return values[static_cast<size_t>(iy) * x_axis.size() + ix];
  }
  // grid-summed value times cell area
  double integral() const;
};

WignerGrid wigner_grid(const PadfsParams& params, const GridWindow& window,
                       int resolution, Exec exec = Exec::parallel);
WignerGrid wigner_grid(const DensityMatrix& rho, const GridWindow& window,
                       int resolution, Exec exec = Exec::parallel);

// CSV with header `x,y,w`, 17 significant digits; comment_lines are
// emitted first, each prefixed with "# ".
void write_csv(const WignerGrid& grid, std::ostream& out,
               const std::vector<std::string>& comment_lines = {});

// Default quadrature cutoff: R = 5 + |center - alpha| + sqrt(2(k+n+|alpha|^2)).
double default_radius(const PadfsParams& params, Complex center);

} // namespace padfs
