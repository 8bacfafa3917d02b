#pragma once

#include <array>
#include <optional>

#include "roughpot/bandfield.hpp"
#include "roughpot/grid.hpp"
#include "roughpot/potentials.hpp"

namespace rpot {

// Oscillatory Duhamel kernel K_t(Phi) = (e^{i t Phi} - 1)/(i Phi),
// evaluated as t e^{i t Phi/2} sinc(t Phi/2); K_t(0) = t exactly and
// |K_t| <= min(t, 2/|Phi|).
cplx duhamel_kernel(double t, double phi);
// real part sin(t Phi)/Phi in the same stable form
double duhamel_kernel_re(double t, double phi);

// Frequency region: either the radial shell sqrt(pi/3) M <= |xi| <=
// sqrt(pi/2) M or a per-axis coordinate box (signed intervals, as in the
// anisotropic construction).
struct RegionSpec {
  enum class kind { radial_shell, aniso_box } shape = kind::radial_shell;
  double rlo = 0.0, rhi = 0.0;
  int d = 0;
  std::array<std::pair<double, double>, 5> box{};

  static RegionSpec radial(double lo, double hi);
  static RegionSpec omega_shell(double M);  // [sqrt(pi/3) M, sqrt(pi/2) M]
  static RegionSpec coordinate_box(int d, const std::array<std::pair<double, double>, 5>& b);
  bool contains(const double* xi, int dim) const;
};

// ---- dense-path operators (Fields on a Grid) ----

// A(u0)(t) = int_0^t e^{-i rho Delta} (eta e^{i rho Delta} u0) d rho via the
// closed-form kernel; direct summation over the occupied spectra. Throws
// if a frequency sum leaves the lattice.
Field duhamel_kernel_apply(const Potential& eta, const Field& u0, double t);

// Interaction-picture integral operator: out(t_k) = cumulative trapezoid
// over j <= k of e^{-i rho_j Delta}(eta e^{i rho_j Delta} source(t_j)).
Trajectory duhamel_quadrature(const Potential& eta, const Trajectory& source,
                              const TimeGrid& tg);

struct PicardSeries {
  std::vector<Trajectory> terms;      // I_0 .. I_N (interaction picture)
  std::vector<double> term_norms;     // ||I_n(T)||_{H^s}
  Trajectory partial_sum;             // S_N(t_k) = sum_n e^{i t_k Delta} I_n(t_k)
  double contraction_q = 0.0;         // max_n ||I_{n+1}(T)|| / ||I_n(T)||
};

PicardSeries picard_series(const Potential& eta, const Field& v0, const TimeGrid& tg,
                           int nmax_terms, double N0, double s_norm);

// subcritical lifespan cap T <= N0^{-2}
double picard_time_cap(double N0);

struct RealPartBound {
  double min_re = 0.0;
  double norm_on_omega = 0.0;
  std::size_t points = 0;
};

// Re Ahat on the lattice points of Omega via the sin kernel, plus the
// restricted weighted norm (L^-d sum <xi>^{2 gamma} (Re Ahat)^2)^{1/2}.
RealPartBound realpart_lower_bound(const Potential& eta, const Field& u0, double t,
                                   const RegionSpec& omega, double gamma);

// min over lattice xi in Omega, xi2 in the data region of sin(t(|xi|^2-|xi2|^2)).
double phase_min_check(const Grid& g, const RegionSpec& omega, const RegionSpec& data,
                       double t);

// ---- sparse sweep engines (virtual lattice h Z^d, no dense storage) ----

struct InflationStats {
  double full_norm = 0.0;   // H^gamma of A over the whole output support
  double omega_norm = 0.0;  // restricted to Omega
  double min_re = 0.0;      // min of Re Ahat over Omega lattice points
  double sin_min = 0.0;     // min of sin(t Phi) over Omega x data support
  double data_norm = 0.0;   // H^gamma of the data (diagnostic)
  std::size_t omega_points = 0;
  std::size_t output_points = 0;
};

// Radial construction (bump potential shell + radial data profile).
InflationStats radial_inflation_stats(int d, double h, const RadialFreqProfile& eta_prof,
                                      const RadialFreqProfile& data_prof, double t,
                                      double gamma, const RegionSpec& omega);

// Anisotropic construction: per-axis product supports for eta and data.
InflationStats box_inflation_stats(int d, double h, const std::vector<AxisSupport>& eta_axes,
                                   double eta_amp, const std::vector<AxisSupport>& data_axes,
                                   double data_amp, double t, double gamma,
                                   const RegionSpec& omega, double* sep_norm_out = nullptr);

// Separable per-time-node path (phase factors split across axes); the
// norm uses the separable surrogate weight 1 + sum_i |xi_i|^{2 gamma}.
// Feasible at d = 5 where the direct product enumeration is not.
InflationStats separable_inflation_stats(int d, double h,
                                         const std::vector<AxisSupport>& eta_axes,
                                         double eta_amp,
                                         const std::vector<AxisSupport>& data_axes,
                                         double data_amp, double t, double gamma,
                                         int time_nodes, const RegionSpec& omega);

}  // namespace rpot
