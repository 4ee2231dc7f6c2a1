// Serial vs OpenMP timing for the two parallel kernels: phase-space
// quadrature and Wigner grid fills.  Prints wall time and speedup; also
// verifies the two execution paths agree bit for bit.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "padfs/loss.hpp"
#include "padfs/measures.hpp"
#include "padfs/state.hpp"
#include "padfs/wigner.hpp"

using namespace padfs;
using Clock = std::chrono::steady_clock;

namespace {

double time_of(const char* label, double& result,
               const std::function<double()>& fn, int reps) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    auto t0 = Clock::now();
    result = fn();
    best = std::min(best,
                    std::chrono::duration<double>(Clock::now() - t0).count());
  }
  std::printf("  %-28s %8.1f ms\n", label, best * 1e3);
  return best;
}

} // namespace

int main(int argc, char** argv) {
  const int reps = argc > 1 ? std::atoi(argv[1]) : 3;
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads = %d, reps = %d\n",
              omp_get_max_threads(), reps);
#else
  std::printf("OpenMP disabled (serial build), reps = %d\n", reps);
#endif

  PadfsParams p;
  p.alpha = 0.5;
  p.n = 1;
  p.k = 1;

  std::printf("WLN quadrature, padfs(0.5,1,1):\n");
  QuadratureSpec spec = default_quadrature(p);
  spec.rel_tolerance = 1e-7;
  double vs = 0.0, vp = 0.0;
  double ts = time_of("serial", vs, [&] {
    return wigner_log_negativity(p, spec, Exec::serial).value;
  }, reps);
  double tp = time_of("parallel", vp, [&] {
    return wigner_log_negativity(p, spec, Exec::parallel).value;
  }, reps);
  std::printf("  speedup %.2fx, bitwise match: %s\n", ts / tp,
              vs == vp ? "yes" : "NO");

  std::printf("analytic Wigner grid, 301x301:\n");
  GridWindow win{-4.0, 4.0, -4.0, 4.0};
  double gs = 0.0, gp = 0.0;
  ts = time_of("serial", gs, [&] {
    return wigner_grid(p, win, 301, Exec::serial).min_value;
  }, reps);
  tp = time_of("parallel", gp, [&] {
    return wigner_grid(p, win, 301, Exec::parallel).min_value;
  }, reps);
  std::printf("  speedup %.2fx, bitwise match: %s\n", ts / tp,
              gs == gp ? "yes" : "NO");

  std::printf("evolved-state grid (kappa_t = 0.2), 201x201:\n");
  FockVector v = padfs_coefficients(p);
  DensityMatrix rho = evolve_loss(to_density_matrix(v, v.truncation() + 1),
                                  LossParams(0.2));
  double ms = 0.0, mp = 0.0;
  ts = time_of("serial", ms, [&] {
    return wigner_grid(rho, win, 201, Exec::serial).min_value;
  }, reps);
  tp = time_of("parallel", mp, [&] {
    return wigner_grid(rho, win, 201, Exec::parallel).min_value;
  }, reps);
  std::printf("  speedup %.2fx, bitwise match: %s\n", ts / tp,
              ms == mp ? "yes" : "NO");
  return 0;
}
