#pragma once

// Photon-loss (amplitude damping) channel: Kraus evolution in the Fock
// basis, noisy Wigner functions, WLN decay curves and the negativity
// vanishing threshold.

#include <utility>
#include <vector>

#include "padfs/measures.hpp"
#include "padfs/state.hpp"
#include "padfs/wigner.hpp"

namespace padfs {

class LossParams {
 public:
  explicit LossParams(double kappa_t);

  double kappa_t() const { return kappa_t_; }
  double transmissivity_loss() const { return big_t_; }  // T = 1 - e^{-2 kt}

 private:
  double kappa_t_;
  double big_t_;  // derived, never set independently
};

// rho(t) = sum_j A_j rho A_j^dag with
// <m-j|A_j|m> = sqrt(C(m,j)) e^{-kt(m-j)} T^{j/2}.
DensityMatrix evolve_loss(const DensityMatrix& rho, const LossParams& loss);

// Kraus route: evolve then evaluate the generic Wigner function.
// kappa_t = 0 short-circuits to the noiseless analytic Wigner.
double noisy_wigner(const PadfsParams& params, const LossParams& loss,
                    PhasePoint point);

// Verification route: Gaussian convolution of the initial Wigner function,
// W(z,t) = (2/T) int (d^2 g / pi) exp(-(2/T)|z - g e^{-kt}|^2) W(g,0).
double noisy_wigner_convolution(const PadfsParams& params,
                                const LossParams& loss, PhasePoint point,
                                const QuadratureSpec& spec);

struct DecayPoint {
  double kappa_t = 0.0;
  WlnResult wln;
};

// WLN of the loss-evolved state at each grid time; kt_grid must be sorted
// ascending.
std::vector<DecayPoint> wln_decay_curve(const PadfsParams& params,
                                        const std::vector<double>& kt_grid,
                                        const QuadratureSpec& spec);

// Bisection (to 1e-3 in kappa_t) for the time at which the global minimum
// of the Wigner function crosses zero, i.e. the last negativity dies out.
// Rejects states that are already negativity-free at kappa_t = 0.
double wln_threshold(const PadfsParams& params, const QuadratureSpec& spec);

// W(0,0) of the given (possibly evolved) state.
double wigner_at_origin_witness(const DensityMatrix& rho);

} // namespace padfs
