#pragma once

#include <memory>

#include "roughpot/grid.hpp"
#include "roughpot/potentials.hpp"

namespace rpot {

struct SolverConfig {
  double dt = 1e-3;
  enum class method { strang, dense_expm } scheme = method::strang;
};

// Strang splitting for i u_t + Delta u + eta u = 0: half potential phase
// e^{i eta dt/2} (pointwise, complex eta allowed), full kinetic step,
// half potential phase. Trajectory sampled every step.
Trajectory split_step_solve(const Potential& eta, const Field& u0, double T,
                            const SolverConfig& cfg);

// Exact flow of the Galerkin-projected system u' = i(Delta u + P(eta u)),
// materialized in the spectral basis and exponentiated by scaling-and-
// squaring (diagonal Pade). P is the lattice truncation of the exact
// convolution, i.e. the same product the padded pointwise_multiply
// computes, so the propagator is consistent with the rest of the library.
class DensePropagator {
 public:
  DensePropagator(const Potential& eta, const Grid& g, double t);
  Field apply(const Field& f) const;
  Trajectory trajectory(const Field& u0, const TimeGrid& tg) const;
  double time() const { return t_; }

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
  double t_ = 0.0;
};

DensePropagator dense_propagator(const Potential& eta, const Grid& g, double t);

// v0 = i(Delta u0 + eta u0)
Field time_derivative_data(const Potential& eta, const Field& u0);

// High/low reconstruction of u from v = du/dt:
//   u <- P_{<N0} u_low + (-Delta)^{-1} P_{>=N0} (i v + eta u),
// iterated per node until the relative update falls below tol. Throws
// no_convergence_error when the map fails to contract within max_iter.
struct ReconstructionReport {
  Trajectory u;
  int max_iterations_used = 0;
  double contraction_estimate = 0.0;  // median update ratio
};

ReconstructionReport reconstruct_from_v(const Potential& eta, const Trajectory& v_traj,
                                        const Trajectory& u_low_traj, double N0,
                                        double tol, int max_iter);

}  // namespace rpot
