#pragma once

#include <vector>

#include "roughpot/grid.hpp"

namespace rpot {

// Smooth cutoffs underlying every projector. smooth_cutoff is the radial
// bump phi: 1 on [0,1], 0 on [2,inf), C^inf monotone in between
// (exp(-1/t) partition form). annular_cutoff is chi_{a<=|.|<=b} with the
// 1/4-wide margins.
double smooth_cutoff(double r);
double smooth_step(double t);  // 0 -> 1 over [0,1], C^inf
double annular_cutoff(double a, double b, double r);

enum class proj : int { at, le, lt, ll, lesssim, ge, gg, gtrsim };

struct ProjectorSpec {
  double N = 1.0;  // dyadic scale >= 1
  proj kind = proj::at;
};

// Radial projector profile at radius r. Complements are exact arithmetic
// complements of their smooth partners (ge=1-le, gg=1-lesssim, gtrsim=1-ll).
double projector_profile(const ProjectorSpec& spec, double r);

// Smallest dyadic N with phi_{<=N} identically 1 on the grid.
double lp_nmax(const Grid& g);
std::vector<double> dyadic_scales(const Grid& g);  // 1, 2, ..., Nmax

Field project_dyadic(const Field& f, const ProjectorSpec& spec);
Field project(const Field& f, proj kind, double N);

// max_xi | sum_{N <= Nmax} phi_N(|xi|) - 1 | ; telescoping makes this
// roundoff-level.
double partition_residual(const Grid& g);

// || |nabla|^s P_N f || / ( N^s || P_N f || ) in L^2.
double bernstein_ratio(const Field& f, double N, double s);

// sum_{N >= N1} (N1/N)^alpha a_N b_{N1} over dyadic indices; a[j], b[j]
// correspond to N = 2^j.
double schur_bilinear_sum(const std::vector<double>& a, const std::vector<double>& b, double alpha);

// Discrete Triebel-Lizorkin norm: ||u||_p + || (sum_N |N^alpha P_N u|^q)^(1/q) ||_p.
double triebel_lizorkin_norm(const Field& f, double alpha, double p, double q);

// Dyadic-sum comparison predicates (2^5 separation, boundary goes to the
// "much greater" side so the two classes partition exactly).
inline bool dyadic_much_greater(double M, double N) { return M >= 32.0 * N; }
inline bool dyadic_lesssim(double M, double N) { return M < 32.0 * N; }
inline bool dyadic_gtrsim(double M, double N) { return M >= N / 32.0; }
inline bool dyadic_much_less(double M, double N) { return M < N / 32.0; }

}  // namespace rpot
