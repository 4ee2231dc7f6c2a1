#pragma once

// Nonclassicality and non-Gaussianity quantifiers for truncated pure
// states: linear entropy potential (beamsplitter entanglement), skew
// information measure, Wigner logarithmic negativity and relative
// entropy of non-Gaussianity.

#include <complex>
#include <vector>

#include "padfs/quadrature.hpp"
#include "padfs/state.hpp"

namespace padfs {

// Two-mode state after the symmetric 50:50 beamsplitter with vacuum on
// the second port.  Amplitudes are grouped by total photon number M:
// by_total[M][k1] multiplies |k1, M - k1>.
struct TwoModeState {
  std::vector<std::vector<Complex>> by_total;

  double norm_sq() const;
  // reduced state of the second output mode
  Eigen::MatrixXcd reduced_b() const;
};

TwoModeState beamsplitter_output(const FockVector& v);

// L_E = 1 - Tr(rho_B^2) via explicit two-mode construction + partial trace.
double linear_entropy_potential(const FockVector& v);

// Independent closed-form cross-check (quadruple sum with out-of-range
// binomials zeroed); agrees with the partial-trace path to 1e-10.
double linear_entropy_closed_form(const FockVector& v);

// N(rho) = 1/2 + <a^dag a> - <a^dag><a>, pure states only.
double skew_info_measure(const FockVector& v);

struct CovarianceMatrix {
  double sqq = 1.0, spp = 1.0, sqp = 0.0;
  double det() const { return sqq * spp - sqp * sqp; }
};

// Quadrature covariance in the convention where vacuum gives
// sqq = spp = 1, computed from the moments <a>, <a^2>, <a^dag a>.
CovarianceMatrix covariance_matrix(const FockVector& v);

// An alternative printed summation form of sigma_qq / sigma_pp / sigma_qp,
// kept as a logged cross-check only (its coefficient structure does not
// match a direct moment expansion; see covariance_printed_discrepancy).
CovarianceMatrix covariance_matrix_printed_form(const FockVector& v);

// max elementwise |moment route - printed route|, for logging.
double covariance_printed_discrepancy(const FockVector& v);

// delta = h(sqrt(det sigma)) with
// h(z) = ((z+1)/2) log2((z+1)/2) - ((z-1)/2) log2((z-1)/2), h(1) = 0.
// Rejects det sigma < 1 - 1e-6 as unphysical.
double rel_entropy_non_gaussianity(const FockVector& v);
double entropy_h(double z);

struct WlnResult {
  double value = 0.0;       // clamped at 0 from below
  double quad_error = 0.0;  // quadrature error estimate
  bool converged = true;
};

// log2 of the integrated |W|; values below the quadrature error estimate
// are reported as 0.
WlnResult wigner_log_negativity(const PadfsParams& params,
                                const QuadratureSpec& spec,
                                Exec exec = Exec::parallel);
WlnResult wigner_log_negativity(const DensityMatrix& rho,
                                const QuadratureSpec& spec,
                                Exec exec = Exec::parallel);

// Quadrature spec centered on the state with the default radius rule.
QuadratureSpec default_quadrature(const PadfsParams& params);

struct MeasureReport {
  double linear_entropy = 0.0;
  double skew_info = 0.5;
  double wln = 0.0;
  double rel_entropy_ng = 0.0;
  double quadrature_error = 0.0;
  bool quad_converged = true;
};

MeasureReport measure_report(const PadfsParams& params,
                             const QuadratureSpec& spec);
MeasureReport measure_report(const PadfsParams& params);  // default spec

} // namespace padfs
