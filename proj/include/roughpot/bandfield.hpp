#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "roughpot/potentials.hpp"

namespace rpot {

// Sparse frequency-lattice machinery for the inflation sweeps. The lattice
// is h Z^d (d <= 3 here), never materialized as a dense grid; supports are
// enumerated as integer points. Radial data are grouped by squared integer
// radius ("shells"), and symmetric sums are reduced to the fundamental
// wedge k_0 >= k_1 >= ... >= 0 of the signed-permutation group, which is
// exact because every profile involved is radial.

// Lattice points of a radial support, grouped by squared radius.
struct ShellSet {
  int d = 3;
  double h = 1.0;
  struct Shell {
    std::int64_t q2 = 0;   // squared radius in lattice steps
    double count = 0.0;    // number of lattice points on the shell
    double value = 0.0;    // radial profile at h*sqrt(q2)
    std::size_t begin = 0; // range into points (d int32 coords per point)
    std::size_t end = 0;
  };
  std::vector<Shell> shells;
  std::vector<std::int32_t> points;
  std::size_t total_points() const { return points.size() / static_cast<std::size_t>(d); }
};

ShellSet build_shell_set(int d, double h, const RadialFreqProfile& prof);

// Radial profile tabulated by squared integer distance: table[q2] =
// prof.value(h*sqrt(q2)); zero outside the support. Feeds the SIMD
// shell_profile_sum kernel.
std::vector<double> squared_radius_table(double h, const RadialFreqProfile& prof,
                                         std::int64_t q2_max);

// Enumerate fundamental-wedge representatives of lattice points with
// |k| h in [rlo, rhi]; weight is the orbit size. Runs on the calling
// thread in deterministic order.
void for_each_wedge_rep(int d, double h, double rlo, double rhi,
                        const std::function<void(const std::int32_t* k, std::int64_t q2,
                                                 double weight)>& fn);

// Same enumeration split into deterministic slabs for parallel reduction:
// slab index = first coordinate value.
struct WedgeSlabs {
  int d;
  double h;
  double rlo, rhi;
  int x_min, x_max;  // inclusive first-coordinate range
  std::size_t slab_count() const { return static_cast<std::size_t>(x_max - x_min + 1); }
  void enumerate_slab(std::size_t slab,
                      const std::function<void(const std::int32_t* k, std::int64_t q2,
                                               double weight)>& fn) const;
};

WedgeSlabs make_wedge_slabs(int d, double h, double rlo, double rhi);

// Per-axis integer support of a product (box) profile: coordinates k with
// value(h k) != 0, stored with their values.
struct AxisSupport {
  std::vector<std::int32_t> coords;
  std::vector<double> values;
  std::int32_t lo = 0, hi = 0;          // coordinate bounds
  std::vector<double> dense;            // value lookup by (k - lo); zeros where unsupported
  double value_at(std::int32_t k) const {
    return (k < lo || k > hi) ? 0.0 : dense[static_cast<std::size_t>(k - lo)];
  }
};

AxisSupport build_axis_support(double h, const std::function<double(double)>& profile,
                               double support_lo, double support_hi);

// All lattice points of a d-axis product support, grouped by squared
// radius; each point carries its product value.
struct BoxPointSet {
  int d = 2;
  double h = 1.0;
  struct Shell {
    std::int64_t q2 = 0;
    std::size_t begin = 0, end = 0;
  };
  std::vector<Shell> shells;
  std::vector<std::int32_t> points;  // d coords per point
  std::vector<double> values;        // one per point
};

BoxPointSet build_box_point_set(int d, double h, const std::vector<AxisSupport>& axes,
                                double amplitude);

}  // namespace rpot
