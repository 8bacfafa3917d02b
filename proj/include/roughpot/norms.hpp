#pragma once

#include <optional>
#include <vector>

#include "roughpot/grid.hpp"

namespace rpot {

// ||<xi>^s uhat||_{L^2} with the L^-d lattice weight.
double sobolev_norm(const Field& f, double s);

// Uniform-grid L^p quadrature; p = inf takes the sample max.
double lp_norm(const Field& f, double p);

// L^q in time of the spatial L^p norm (trapezoid in t; sup for q = inf).
double mixed_norm(const Trajectory& traj, double q, double p);

// Schrodinger-admissible pair: 2 <= q,p <= inf, 2/q + d/p = d/2,
// (q,p,d) != (2,inf,2).
bool is_admissible_pair(double q, double p, int d);

struct MixedSpec {
  double q = 2.0;
  double p = 2.0;
};

// Composite space-time norms (the X(I)/Y(I) auxiliary spaces): sum of the
// component mixed norms, optionally plus a Sobolev-weighted L^inf L^2 head.
struct NormSpec {
  enum class kind { sobolev, lebesgue, mixed, composite } variant = kind::sobolev;
  double s = 0.0;                 // sobolev index
  double p = 2.0;                 // lebesgue exponent
  MixedSpec mixed{};              // mixed variant
  std::vector<MixedSpec> parts;   // composite variant
};

double evaluate_norm(const NormSpec& spec, const Field& f);
double evaluate_norm(const NormSpec& spec, const Trajectory& traj);

struct FitResult {
  double slope = 0.0;
  double intercept = 0.0;   // in log space
  double r2 = 0.0;
  int samples = 0;
  double expected_slope = 0.0;
  double abs_error = 0.0;
};

// Least-squares line through (log x, log y); inputs must be positive.
FitResult fit_power_law(const std::vector<std::pair<double, double>>& samples);

}  // namespace rpot
