#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <vector>

#include "roughpot/common.hpp"

namespace rpot {

// Periodic torus discretization: d axes, n samples per axis, period L.
// Physical nodes x = j L/n; frequency lattice xi = (2pi/L) k with signed
// k in {-n/2, ..., n/2-1} stored in DFT order (0..n-1, wrap at n/2).
struct Grid {
  int d = 1;
  int n = 4;
  double L = two_pi;

  double freq_step() const { return two_pi / L; }
  double dx() const { return L / n; }
  std::size_t size() const {
    std::size_t s = 1;
    for (int i = 0; i < d; ++i) s *= static_cast<std::size_t>(n);
    return s;
  }
  int ksigned(int idx) const { return idx < n / 2 ? idx : idx - n; }
  // largest |xi| on the lattice (corner mode)
  double max_xi() const { return freq_step() * (n / 2) * std::sqrt(static_cast<double>(d)); }
  double max_xi_axis() const { return freq_step() * (n / 2); }
  bool operator==(const Grid&) const = default;
};

Grid make_grid(int d, int n, double L);

// Iterate modes in flat row-major order; k holds signed indices per axis.
void for_each_mode(const Grid& g, const std::function<void(std::size_t flat, const int* k)>& fn);

// |xi|^2 per mode, cached layout helpers
std::vector<double> xi_norm2_table(const Grid& g);
// <xi>^(2s) = (1+|xi|^2)^s per mode
std::vector<double> japanese_weight_table(const Grid& g, double s);

// Complex function on the torus, canonically stored as spectral coefficients
// in DFT mode order. analyze/synthesize fix the convention
//   uhat(xi) = (L/n)^d sum_x e^{-i x.xi} u(x),   u(x) = L^-d sum_xi e^{i x.xi} uhat(xi).
struct Field {
  Grid grid;
  std::vector<cplx> coeffs;

  Field() = default;
  explicit Field(const Grid& g) : grid(g), coeffs(g.size(), cplx(0.0, 0.0)) {}

  Field& operator+=(const Field& o);
  Field& operator-=(const Field& o);
  Field& operator*=(cplx a);
  bool all_finite() const;
};

Field operator+(Field a, const Field& b);
Field operator-(Field a, const Field& b);
Field operator*(cplx a, Field f);

Field analyze(const Grid& g, const std::vector<cplx>& samples);
std::vector<cplx> synthesize(const Field& f);

// Load a continuum inverse-transform profile g(xi): uhat = (2pi)^d g(xi),
// which makes F^-1 formulas from the continuum translate literally.
Field from_spectral_profile(const Grid& g, const std::function<cplx(const double* xi)>& profile);
Field from_radial_profile(const Grid& g, const std::function<double(double r)>& profile);

// Coefficient-wise multiplication by a frequency symbol.
Field apply_symbol(const Field& f, const std::function<cplx(const double* xi)>& symbol);
Field apply_radial_symbol(const Field& f, const std::function<cplx(double r)>& symbol);
// |nabla|^s; the zero mode maps to 0 (negative powers need this, positive
// powers vanish there anyway).
Field fractional_laplacian(const Field& f, double s);
// <nabla>^s
Field bessel_potential(const Field& f, double s);

// e^{it Delta}: coefficients times e^{-it |xi|^2}
Field propagate_free(const Field& f, double t);

// Pointwise product; padded=true evaluates on a 2n-per-axis grid and
// truncates, which is alias-free for band-limited factors.
Field pointwise_multiply(const Field& f, const Field& g, bool padded = true);

// Uniform time grid on [0,T] with K steps (K+1 nodes) and trapezoid weights.
struct TimeGrid {
  double T = 1.0;
  int K = 1;
  double dt() const { return T / K; }
  int node_count() const { return K + 1; }
  double node(int k) const { return T * k / K; }
  std::vector<double> weights() const;  // sum to T
};

TimeGrid make_time_grid(double T, int K);

struct Trajectory {
  TimeGrid tg;
  std::vector<Field> states;  // one per node, shared Grid

  const Grid& grid() const { return states.at(0).grid; }
};

// Free evolution sampled on tg (semigroup stepping, one phase table).
Trajectory free_trajectory(const Field& u0, const TimeGrid& tg);

}  // namespace rpot
