#pragma once

#include "roughpot/duhamel.hpp"
#include "roughpot/grid.hpp"
#include "roughpot/potentials.hpp"

namespace rpot {

// Normal-form multiplier
//   m(xi1, xi2) = <xi>^alpha <xi1>^{2-alpha} / (|xi|^2 - |xi2|^2)
//                 * phi_{>=N0}(|xi|) * phi_{<<1}(|xi2|/|xi|),   xi = xi1+xi2.
// On its support |xi2| <= 2^-4 |xi|, so the phase never vanishes.
struct MultiplierSpec {
  double alpha = 0.0;
  double N0 = 1.0;
};

double nf_multiplier(const double* xi1, const double* xi2, int d, const MultiplierSpec& spec);

// Non-resonant cutoff n(|xi|, |xi2|) = phi_{>=N0}(|xi|) phi_{<=1}(2^5 |xi2|/|xi|).
double nf_cutoff(double xi_norm, double xi2_norm, double N0);

// B(f,g): bilinear transform with multiplier m, direct summation over the
// occupied spectra.
Field bilinear_transform(const Field& f, const Field& g, const MultiplierSpec& spec);

// Bilinear part of eta*u carrying the non-resonant cutoff n (the piece the
// time integration-by-parts removes), and its exact complement, the
// resonance-and-remainder term R(eta, u) = eta u - NR(eta, u).
Field nonresonant_part(const Potential& eta, const Field& u, double N0);
Field resonance_term(const Potential& eta, const Field& u, double N0);

// Dyadic display form of Definition 4.1(2):
//   P_{<=N0}(eta u) + P_{>=N0} sum_{M >~ N} P_N(eta P_M u),
// with the complementary remainder P_{>=N0} sum_{M << N} P_N(eta P_M u).
Field resonance_term_dyadic(const Potential& eta, const Field& u, double N0);
Field nonresonant_remainder_dyadic(const Potential& eta, const Field& u, double N0);

// Relative H^0 residual at final time of the five-term normal-form
// identity for <nabla>^alpha u(T); u_traj must solve the equation on tg.
double decomposition_residual(const Potential& eta, const Trajectory& u_traj,
                              const Field& u0, double alpha, double N0);

// Cascade operator T_N f = eta sum_{M >> N, M >= N0} |nabla|^{-2} P_M f.
struct CascadeSpec {
  double N0 = 1.0;
  double M0 = 1.0;   // critical-case secondary threshold (M0 <= N0)
  int k = 1;         // iteration depth
  double r = 2.0;    // potential exponent
};

Field cascade_step(const Potential& eta, const Field& f, double N, double N0);
Field cascade_apply(const Potential& eta, const Field& f, double N, int k, double N0);

// max over random fields and iteration depths 1..spec.k of
// ||T_1^k f|| / ||T_1^{k-1} f|| in L^p; deterministic in the seed.
double cascade_contraction_ratio(const Potential& eta, const CascadeSpec& spec,
                                 const Grid& g, int samples, std::uint64_t seed,
                                 double p_norm = 2.0);

enum class recurrence_id { A1, A2, A3 };

// Relative residual of the cascade recurrences at final time:
//   A1: I_n = I_{n,0} (roundoff only),
//   A2: I_{n,k} = J_{n,k} + I_{n,k+1}, 0 <= k <= n-2,
//   A3: I_{n,n-1} = J_{n,n-1} + sum_N P_N T_N^n v0.
// Quadrature-limited: O(K^-2).
double recurrence_residual(const Potential& eta, const Field& v0, const TimeGrid& tg,
                           int n, int k, const CascadeSpec& spec, recurrence_id which,
                           double s_norm = 0.0);

}  // namespace rpot
