#pragma once

#include <string>

#include "roughpot/grid.hpp"

namespace rpot {

enum class potential_family { bump, aniso_box, power_law, custom };
enum class bump_band { half_to_two, one_to_two };

// Radial frequency profile with compact support [rmin, rmax]; value(r) is
// the coefficient BEFORE the (2pi)^d loading convention. Shared by the
// dense constructors and the sparse sweep engine.
struct RadialFreqProfile {
  std::function<double(double)> value;
  double rmin = 0.0;
  double rmax = 0.0;
  // largest interval on which value is exactly the constant plateau_value
  double plateau_lo = 0.0;
  double plateau_hi = 0.0;
  double plateau_value = 1.0;
};

// One-dimensional per-axis band in |coordinate| with the 1/4 margins.
struct AxisBand {
  double a = 1.0;
  double b = 2.0;
  double eval(double coord) const;  // chi_{a<=|.|<=b}(|coord|)
  double support_lo() const { return a - 0.25; }
  double support_hi() const { return b + 0.25; }
};

RadialFreqProfile bump_profile(double M, double r_exp, bump_band band, int d);
RadialFreqProfile shell_profile(double N, double gamma, int d);
RadialFreqProfile log_shell_profile(double M, int d);

struct Potential {
  Field field;
  potential_family family = potential_family::custom;
  double r = 1.0;       // integrability exponent
  double M = 0.0;
  double N = 0.0;
  double a = 0.0;       // power-law exponent
  double delta = 0.0;   // power-law cap radius
};

Potential bump_potential(const Grid& g, double M, double r_exp, bump_band band);
Potential aniso_box_potential(const Grid& g, double M, double N, double r_exp);
Potential power_law_potential(const Grid& g, double a, double delta);

Field shell_data(const Grid& g, double N, double gamma);
Field log_shell_data(const Grid& g, double M);
Field box_data(const Grid& g, double Lp, double gamma);

// lambda^2 eta(lambda x) with centered coordinates, resampled on the grid
// by exact band-limited evaluation. Throws if too much mass sits near the
// torus boundary (the dilation stops being a faithful R^d surrogate).
Potential rescale_potential(const Potential& eta, double lambda);

// Load a custom potential from lines "k_1 ... k_d re im".
Potential load_custom_potential(const Grid& g, const std::string& path);

}  // namespace rpot
