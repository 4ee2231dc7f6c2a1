#pragma once

// Construction of photon-added displaced Fock states (PADFS) and their
// limiting-case family in a truncated Fock basis, plus density-matrix
// embedding for mixed-state evolution.

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace padfs {

using Complex = std::complex<double>;

struct PadfsParams {
  Complex alpha{0.0, 0.0};  // displacement
  int n = 0;                // Fock parameter
  int k = 0;                // photons added
  double tail_tolerance = 1e-14;

  void validate() const;
};

// Truncated pure-state amplitude vector.  amps[j] is the amplitude of
// photon number offset + j; offset = k for a PADFS.
struct FockVector {
  int offset = 0;
  std::vector<Complex> amps;

  int truncation() const { return offset + static_cast<int>(amps.size()) - 1; }
  Complex amp_at(int photon) const;
  double norm_sq() const;

  // first and second moments of the mode operator
  Complex mean_a() const;
  Complex mean_a2() const;
  double mean_photon() const;
};

struct DensityMatrix {
  Eigen::MatrixXcd elements;

  int dim() const { return static_cast<int>(elements.rows()); }
  double trace_real() const { return elements.trace().real(); }
  double purity() const { return (elements * elements).trace().real(); }
  double hermiticity_defect() const {
    return (elements - elements.adjoint()).cwiseAbs().maxCoeff();
  }
};

// Amplitudes per C_m(n,k,alpha) = N e^{-|a|^2/2} sqrt(n!(m+k)!)/m!
// a^{m-n} L_n^{m-n}(|a|^2), normalized by direct summation.  Truncation
// starts at M0 = k + n + ceil(|a|^2 + 10|a| + 30) and extends until the
// next squared amplitude drops below tail_tolerance.  alpha = 0 is an
// exact special case (|n+k>).
FockVector padfs_coefficients(const PadfsParams& params);

enum class StateFamily { vacuum, fock, coherent, dfs, pacs };

StateFamily parse_family(const std::string& name);  // rejects unknown names

// vacuum=(0,0,0), fock(n)=(0,n,0), coherent(a)=(a,0,0), dfs(a,n)=(a,n,0),
// pacs(a,k)=(a,0,k); exact Fock/vacuum cases set a single unit amplitude.
FockVector limiting_state(StateFamily family, Complex alpha = {}, int n = 0,
                          int k = 0, double tail_tolerance = 1e-14);

// |psi><psi| embedded in a dim-dimensional Fock basis; requires
// dim >= offset + amps.size().
DensityMatrix to_density_matrix(const FockVector& v, int dim);

// Default truncation start used by the tail rule.
int truncation_start(const PadfsParams& params);

// |N|^2, the squared normalization factor of the PADFS coefficient sum.
double padfs_norm_factor_sq(const PadfsParams& params);

} // namespace padfs
