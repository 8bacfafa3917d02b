#include "roughpot/bandfield.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace rpot {

namespace {

// orbit size of a sorted nonnegative tuple under signed permutations
double orbit_weight(const std::int32_t* k, int d) {
  int perms = 1;
  for (int i = 1; i <= d; ++i) perms *= i;  // d!
  int run = 1;
  int runfac = 1;
  for (int i = 1; i < d; ++i) {
    if (k[i] == k[i - 1]) {
      ++run;
      runfac *= run;
    } else {
      run = 1;
    }
    if (run > 1 && (i + 1 == d || k[i + 1] != k[i])) perms /= runfac, runfac = 1;
  }
  int signs = 1;
  for (int i = 0; i < d; ++i)
    if (k[i] != 0) signs *= 2;
  return static_cast<double>(perms * signs);
}

}  // namespace

ShellSet build_shell_set(int d, double h, const RadialFreqProfile& prof) {
  require(d >= 1 && d <= 3, "shell sets support d in {1,2,3}");
  require(h > 0.0, "lattice step must be positive");
  ShellSet out;
  out.d = d;
  out.h = h;
  const std::int64_t kmax = static_cast<std::int64_t>(std::floor(prof.rmax / h));
  const double q2_lo = (prof.rmin > 0.0) ? (prof.rmin / h) * (prof.rmin / h) : 0.0;
  const double q2_hi = (prof.rmax / h) * (prof.rmax / h);

  std::map<std::int64_t, std::vector<std::int32_t>> by_q2;
  std::int32_t k[3] = {0, 0, 0};
  const std::int32_t lim = static_cast<std::int32_t>(kmax);
  auto visit = [&](std::int32_t x, std::int32_t y, std::int32_t z) {
    const std::int64_t q2 = static_cast<std::int64_t>(x) * x +
                            static_cast<std::int64_t>(y) * y +
                            static_cast<std::int64_t>(z) * z;
    if (q2 < q2_lo - 1e-9 || q2 > q2_hi + 1e-9) return;
    if (prof.value(h * std::sqrt(static_cast<double>(q2))) == 0.0 && q2 != 0) {
      // keep zero-valued margin shells out of the set
      return;
    }
    auto& pts = by_q2[q2];
    pts.push_back(x);
    if (d >= 2) pts.push_back(y);
    if (d >= 3) pts.push_back(z);
  };
  if (d == 1) {
    for (k[0] = -lim; k[0] <= lim; ++k[0]) visit(k[0], 0, 0);
  } else if (d == 2) {
    for (k[0] = -lim; k[0] <= lim; ++k[0])
      for (k[1] = -lim; k[1] <= lim; ++k[1]) visit(k[0], k[1], 0);
  } else {
    for (k[0] = -lim; k[0] <= lim; ++k[0])
      for (k[1] = -lim; k[1] <= lim; ++k[1])
        for (k[2] = -lim; k[2] <= lim; ++k[2]) visit(k[0], k[1], k[2]);
  }

  for (auto& [q2, pts] : by_q2) {
    const double r = h * std::sqrt(static_cast<double>(q2));
    ShellSet::Shell sh;
    sh.q2 = q2;
    sh.count = static_cast<double>(pts.size() / static_cast<std::size_t>(d));
    sh.value = prof.value(r);
    sh.begin = out.points.size() / static_cast<std::size_t>(d);
    out.points.insert(out.points.end(), pts.begin(), pts.end());
    sh.end = out.points.size() / static_cast<std::size_t>(d);
    if (sh.value != 0.0) out.shells.push_back(sh);
  }
  return out;
}

std::vector<double> squared_radius_table(double h, const RadialFreqProfile& prof,
                                         std::int64_t q2_max) {
  std::vector<double> table(static_cast<std::size_t>(q2_max) + 1, 0.0);
  for (std::int64_t q2 = 0; q2 <= q2_max; ++q2) {
    const double r = h * std::sqrt(static_cast<double>(q2));
    if (r < prof.rmin || r > prof.rmax) continue;
    table[static_cast<std::size_t>(q2)] = prof.value(r);
  }
  return table;
}

WedgeSlabs make_wedge_slabs(int d, double h, double rlo, double rhi) {
  require(d >= 1 && d <= 3, "wedge enumeration supports d in {1,2,3}");
  require(rhi >= 0.0 && rhi >= rlo, "bad radial range");
  WedgeSlabs w;
  w.d = d;
  w.h = h;
  w.rlo = rlo;
  w.rhi = rhi;
  w.x_min = 0;
  w.x_max = static_cast<int>(std::floor(rhi / h));
  return w;
}

void WedgeSlabs::enumerate_slab(std::size_t slab,
                                const std::function<void(const std::int32_t*, std::int64_t,
                                                         double)>& fn) const {
  const std::int32_t x = static_cast<std::int32_t>(x_min + static_cast<int>(slab));
  const double q2_lo = (rlo > 0.0) ? (rlo / h) * (rlo / h) : -0.5;
  const double q2_hi = (rhi / h) * (rhi / h);
  std::int32_t k[3] = {x, 0, 0};
  if (d == 1) {
    const std::int64_t q2 = static_cast<std::int64_t>(x) * x;
    if (q2 >= q2_lo && q2 <= q2_hi + 1e-9) fn(k, q2, orbit_weight(k, 1));
    return;
  }
  for (std::int32_t y = 0; y <= x; ++y) {
    k[1] = y;
    if (d == 2) {
      const std::int64_t q2 = static_cast<std::int64_t>(x) * x + static_cast<std::int64_t>(y) * y;
      if (q2 >= q2_lo && q2 <= q2_hi + 1e-9) fn(k, q2, orbit_weight(k, 2));
      continue;
    }
    for (std::int32_t z = 0; z <= y; ++z) {
      k[2] = z;
      const std::int64_t q2 = static_cast<std::int64_t>(x) * x +
                              static_cast<std::int64_t>(y) * y +
                              static_cast<std::int64_t>(z) * z;
      if (q2 >= q2_lo && q2 <= q2_hi + 1e-9) fn(k, q2, orbit_weight(k, 3));
    }
  }
}

void for_each_wedge_rep(int d, double h, double rlo, double rhi,
                        const std::function<void(const std::int32_t*, std::int64_t,
                                                 double)>& fn) {
  const WedgeSlabs w = make_wedge_slabs(d, h, rlo, rhi);
  for (std::size_t s = 0; s < w.slab_count(); ++s) w.enumerate_slab(s, fn);
}

AxisSupport build_axis_support(double h, const std::function<double(double)>& profile,
                               double support_lo, double support_hi) {
  AxisSupport out;
  const std::int32_t khi = static_cast<std::int32_t>(std::floor(support_hi / h));
  for (std::int32_t k = -khi; k <= khi; ++k) {
    const double coord = h * k;
    if (std::abs(coord) < support_lo - 1e-12 || std::abs(coord) > support_hi + 1e-12) continue;
    const double v = profile(coord);
    if (v == 0.0) continue;
    out.coords.push_back(k);
    out.values.push_back(v);
  }
  require(!out.coords.empty(), "axis band contains no lattice points");
  out.lo = out.coords.front();
  out.hi = out.coords.back();
  out.dense.assign(static_cast<std::size_t>(out.hi - out.lo) + 1, 0.0);
  for (std::size_t i = 0; i < out.coords.size(); ++i)
    out.dense[static_cast<std::size_t>(out.coords[i] - out.lo)] = out.values[i];
  return out;
}

BoxPointSet build_box_point_set(int d, double h, const std::vector<AxisSupport>& axes,
                                double amplitude) {
  require(static_cast<int>(axes.size()) == d, "need one axis support per dimension");
  BoxPointSet out;
  out.d = d;
  out.h = h;
  std::map<std::int64_t, std::pair<std::vector<std::int32_t>, std::vector<double>>> by_q2;
  std::vector<std::size_t> idx(static_cast<std::size_t>(d), 0);
  for (;;) {
    std::int64_t q2 = 0;
    double val = amplitude;
    std::int32_t pt[5];
    for (int a = 0; a < d; ++a) {
      const std::int32_t c = axes[a].coords[idx[a]];
      pt[a] = c;
      q2 += static_cast<std::int64_t>(c) * c;
      val *= axes[a].values[idx[a]];
    }
    if (val != 0.0) {
      auto& bucket = by_q2[q2];
      for (int a = 0; a < d; ++a) bucket.first.push_back(pt[a]);
      bucket.second.push_back(val);
    }
    int a = d - 1;
    for (; a >= 0; --a) {
      if (++idx[a] < axes[a].coords.size()) break;
      idx[a] = 0;
    }
    if (a < 0) break;
  }
  for (auto& [q2, bucket] : by_q2) {
    BoxPointSet::Shell sh;
    sh.q2 = q2;
    sh.begin = out.values.size();
    out.points.insert(out.points.end(), bucket.first.begin(), bucket.first.end());
    out.values.insert(out.values.end(), bucket.second.begin(), bucket.second.end());
    sh.end = out.values.size();
    out.shells.push_back(sh);
  }
  return out;
}

}  // namespace rpot
