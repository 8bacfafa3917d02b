#include "roughpot/duhamel.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_set>

#include "roughpot/kernels.hpp"
#include "roughpot/norms.hpp"

namespace rpot {

namespace {
inline double sinc(double x) {
  if (std::abs(x) < 1e-8) return 1.0 - x * x / 6.0;
  return std::sin(x) / x;
}
}  // namespace

cplx duhamel_kernel(double t, double phi) {
  const double half = 0.5 * t * phi;
  return t * sinc(half) * std::polar(1.0, half);
}

double duhamel_kernel_re(double t, double phi) { return t * sinc(t * phi); }

RegionSpec RegionSpec::radial(double lo, double hi) {
  RegionSpec r;
  r.shape = kind::radial_shell;
  r.rlo = lo;
  r.rhi = hi;
  return r;
}

RegionSpec RegionSpec::omega_shell(double M) {
  return radial(std::sqrt(pi / 3.0) * M, std::sqrt(pi / 2.0) * M);
}

RegionSpec RegionSpec::coordinate_box(int d, const std::array<std::pair<double, double>, 5>& b) {
  RegionSpec r;
  r.shape = kind::aniso_box;
  r.d = d;
  r.box = b;
  return r;
}

bool RegionSpec::contains(const double* xi, int dim) const {
  if (shape == kind::radial_shell) {
    double s = 0.0;
    for (int a = 0; a < dim; ++a) s += xi[a] * xi[a];
    const double r = std::sqrt(s);
    return r >= rlo && r <= rhi;
  }
  for (int a = 0; a < dim; ++a)
    if (xi[a] < box[a].first || xi[a] > box[a].second) return false;
  return true;
}

namespace {

struct SparseMode {
  std::array<int, 5> k;
  cplx c;
  double q2;
};

std::vector<SparseMode> occupied_modes(const Field& f) {
  std::vector<SparseMode> out;
  for_each_mode(f.grid, [&](std::size_t flat, const int* k) {
    const cplx c = f.coeffs[flat];
    if (c == cplx(0.0, 0.0)) return;
    SparseMode m;
    double q2 = 0.0;
    for (int a = 0; a < f.grid.d; ++a) {
      m.k[a] = k[a];
      q2 += static_cast<double>(k[a]) * k[a];
    }
    m.c = c;
    m.q2 = q2;
    out.push_back(m);
  });
  return out;
}

}  // namespace

Field duhamel_kernel_apply(const Potential& eta, const Field& u0, double t) {
  require(eta.field.grid == u0.grid, "grid mismatch");
  const Grid& g = u0.grid;
  Field out(g);
  if (t == 0.0) return out;
  const auto eta_modes = occupied_modes(eta.field);
  const auto data_modes = occupied_modes(u0);
  const double h = g.freq_step();
  const double conv = std::pow(g.L, -g.d);
  for (const auto& dm : data_modes) {
    const double phi_base = -h * h * dm.q2;
    for (const auto& em : eta_modes) {
      std::size_t flat = 0;
      double q2 = 0.0;
      for (int a = 0; a < g.d; ++a) {
        const int kk = em.k[a] + dm.k[a];
        require(kk >= -g.n / 2 && kk < g.n / 2,
                "support overflow: frequency sum leaves the lattice");
        q2 += static_cast<double>(kk) * kk;
        flat = flat * static_cast<std::size_t>(g.n) +
               static_cast<std::size_t>(kk < 0 ? kk + g.n : kk);
      }
      const double phi = h * h * q2 + phi_base;
      out.coeffs[flat] += conv * duhamel_kernel(t, phi) * em.c * dm.c;
    }
  }
  return out;
}

Trajectory duhamel_quadrature(const Potential& eta, const Trajectory& source,
                              const TimeGrid& tg) {
  require(source.tg.K == tg.K && source.tg.T == tg.T, "time grid mismatch");
  require(eta.field.grid == source.grid(), "grid mismatch");
  const int nodes = tg.node_count();
  const double dt = tg.dt();

  std::vector<Field> integrand;
  integrand.reserve(nodes);
  for (int j = 0; j < nodes; ++j) {
    const double rho = tg.node(j);
    Field inner = propagate_free(source.states[j], rho);
    Field prod = pointwise_multiply(eta.field, inner, true);
    integrand.push_back(propagate_free(prod, -rho));
  }

  Trajectory out;
  out.tg = tg;
  out.states.reserve(nodes);
  Field acc(source.grid());
  out.states.push_back(acc);
  for (int k = 1; k < nodes; ++k) {
    kernels::caxpy(0.5 * dt, integrand[k - 1].coeffs.data(), acc.coeffs.data(), acc.coeffs.size());
    kernels::caxpy(0.5 * dt, integrand[k].coeffs.data(), acc.coeffs.data(), acc.coeffs.size());
    out.states.push_back(acc);
  }
  return out;
}

PicardSeries picard_series(const Potential& eta, const Field& v0, const TimeGrid& tg,
                           int nmax_terms, double N0, double s_norm) {
  require(nmax_terms >= 1, "need at least one Picard term");
  (void)N0;  // enters through the caller's time cap
  PicardSeries out;

  Trajectory current;
  current.tg = tg;
  current.states.assign(tg.node_count(), v0);  // I_0 constant in time
  out.terms.push_back(current);
  out.term_norms.push_back(sobolev_norm(v0, s_norm));

  for (int n = 1; n <= nmax_terms; ++n) {
    Trajectory next = duhamel_quadrature(eta, out.terms.back(), tg);
    for (auto& st : next.states) st *= cplx(0.0, 1.0);
    out.term_norms.push_back(sobolev_norm(next.states.back(), s_norm));
    out.terms.push_back(std::move(next));
  }

  // S_N(t_k) = sum_n e^{i t_k Delta} I_n(t_k)
  Trajectory sum;
  sum.tg = tg;
  for (int k = 0; k < tg.node_count(); ++k) {
    Field acc(v0.grid);
    for (const auto& term : out.terms) acc += term.states[k];
    sum.states.push_back(propagate_free(acc, tg.node(k)));
  }
  out.partial_sum = std::move(sum);

  double q = 0.0;
  for (std::size_t n = 0; n + 1 < out.term_norms.size(); ++n)
    if (out.term_norms[n] > 0.0)
      q = std::max(q, out.term_norms[n + 1] / out.term_norms[n]);
  out.contraction_q = q;
  return out;
}

double picard_time_cap(double N0) { return 1.0 / (N0 * N0); }

RealPartBound realpart_lower_bound(const Potential& eta, const Field& u0, double t,
                                   const RegionSpec& omega, double gamma) {
  const Grid& g = u0.grid;
  require(eta.field.grid == g, "grid mismatch");
  const auto data_modes = occupied_modes(u0);
  const double h = g.freq_step();
  const double conv = std::pow(g.L, -g.d);

  RealPartBound out;
  out.min_re = std::numeric_limits<double>::infinity();
  double acc_norm = 0.0;
  std::size_t count = 0;
  for_each_mode(g, [&](std::size_t, const int* k) {
    double xi[5];
    double q2 = 0.0;
    for (int a = 0; a < g.d; ++a) {
      xi[a] = h * k[a];
      q2 += static_cast<double>(k[a]) * k[a];
    }
    if (!omega.contains(xi, g.d)) return;
    ++count;
    double re = 0.0;
    for (const auto& dm : data_modes) {
      std::size_t flat = 0;
      bool ok = true;
      for (int a = 0; a < g.d; ++a) {
        const int kk = k[a] - dm.k[a];
        if (kk < -g.n / 2 || kk >= g.n / 2) { ok = false; break; }
        flat = flat * static_cast<std::size_t>(g.n) +
               static_cast<std::size_t>(kk < 0 ? kk + g.n : kk);
      }
      if (!ok) continue;
      const cplx ec = eta.field.coeffs[flat];
      if (ec == cplx(0.0, 0.0)) continue;
      const double phi = h * h * (q2 - dm.q2);
      // sin-kernel form; the constructions have real nonnegative spectra
      const cplx prod = ec * dm.c;
      re += duhamel_kernel_re(t, phi) * prod.real() +
            (duhamel_kernel(t, phi).imag()) * (-prod.imag());
    }
    re *= conv;
    out.min_re = std::min(out.min_re, re);
    const double w = std::pow(1.0 + h * h * q2, gamma);
    acc_norm += w * re * re;
  });
  require(count > 0, "region does not intersect the lattice");
  out.points = count;
  out.norm_on_omega = std::sqrt(conv * acc_norm);
  if (!std::isfinite(out.min_re)) out.min_re = 0.0;
  return out;
}

double phase_min_check(const Grid& g, const RegionSpec& omega, const RegionSpec& data,
                       double t) {
  const double h = g.freq_step();
  std::set<double> omega_q2, data_q2;
  for_each_mode(g, [&](std::size_t, const int* k) {
    double xi[5];
    double q2 = 0.0;
    for (int a = 0; a < g.d; ++a) {
      xi[a] = h * k[a];
      q2 += static_cast<double>(k[a]) * k[a];
    }
    if (omega.contains(xi, g.d)) omega_q2.insert(q2);
    if (data.contains(xi, g.d)) data_q2.insert(q2);
  });
  require(!omega_q2.empty() && !data_q2.empty(), "empty region on the lattice");
  double best = std::numeric_limits<double>::infinity();
  for (double qa : omega_q2)
    for (double qb : data_q2)
      best = std::min(best, std::sin(t * h * h * (qa - qb)));
  return best;
}

// ---------- sparse radial engine ----------

InflationStats radial_inflation_stats(int d, double h, const RadialFreqProfile& eta_prof,
                                      const RadialFreqProfile& data_prof, double t,
                                      double gamma, const RegionSpec& omega) {
  require(omega.shape == RegionSpec::kind::radial_shell,
          "radial engine expects a radial shell Omega");
  const ShellSet data = build_shell_set(d, h, data_prof);
  require(!data.shells.empty(), "data band contains no lattice points");

  const double out_hi = eta_prof.rmax + data_prof.rmax;
  const double out_lo = std::max(0.0, eta_prof.rmin - data_prof.rmax - h);
  const std::int64_t kspan = static_cast<std::int64_t>(std::ceil(out_hi / h)) +
                             static_cast<std::int64_t>(std::ceil(data_prof.rmax / h)) + 2;
  const std::int64_t q2max = kspan * kspan;
  const std::vector<double> eta_table = squared_radius_table(h, eta_prof, q2max);

  // kernel values depend only on q2_out - q2_data; tabulate over that range
  const std::int64_t out_q2max =
      static_cast<std::int64_t>(std::ceil(out_hi / h) + 1) *
      static_cast<std::int64_t>(std::ceil(out_hi / h) + 1) * d;
  const std::int64_t data_q2max = data.shells.back().q2;
  std::vector<cplx> ktab(static_cast<std::size_t>(out_q2max + data_q2max + 1));
  for (std::int64_t diff = -data_q2max; diff <= out_q2max; ++diff)
    ktab[static_cast<std::size_t>(diff + data_q2max)] =
        duhamel_kernel(t, h * h * static_cast<double>(diff));

  const double ldinv = std::pow(h / two_pi, d);  // L^-d
  const WedgeSlabs slabs = make_wedge_slabs(d, h, out_lo, out_hi + h);

  struct Partial {
    double full = 0.0;
    double omega = 0.0;
    double min_re = std::numeric_limits<double>::infinity();
    std::size_t omega_pts = 0;
    std::size_t out_pts = 0;
    std::vector<std::int64_t> omega_q2;
  };
  std::vector<Partial> partials(slabs.slab_count());

  parallel_items(slabs.slab_count(), [&](std::size_t s) {
    Partial& P = partials[s];
    slabs.enumerate_slab(s, [&](const std::int32_t* k, std::int64_t q2, double w) {
      const double r = h * std::sqrt(static_cast<double>(q2));
      cplx ahat(0.0, 0.0);
      for (const auto& sh : data.shells) {
        const double r2 = h * std::sqrt(static_cast<double>(sh.q2));
        if (r - r2 > eta_prof.rmax || r + r2 < eta_prof.rmin) continue;
        double ssum;
        if (std::abs(r - r2) >= eta_prof.plateau_lo && r + r2 <= eta_prof.plateau_hi) {
          ssum = sh.count * eta_prof.plateau_value;  // exact: whole shell sees the plateau
        } else {
          ssum = kernels::shell_profile_sum(
              data.points.data() + sh.begin * static_cast<std::size_t>(d),
              sh.end - sh.begin, d, k, eta_table.data(), eta_table.size());
        }
        if (ssum == 0.0) continue;
        ahat += ktab[static_cast<std::size_t>(q2 - sh.q2 + data_q2max)] * (ssum * sh.value);
      }
      ahat *= ldinv;
      if (ahat == cplx(0.0, 0.0)) return;
      P.out_pts += static_cast<std::size_t>(w);
      const double wH = std::pow(1.0 + r * r, gamma);
      const double mag2 = ahat.real() * ahat.real() + ahat.imag() * ahat.imag();
      P.full += w * wH * mag2;
      if (r >= omega.rlo && r <= omega.rhi) {
        P.omega_pts += static_cast<std::size_t>(w);
        P.omega += w * wH * mag2;
        P.min_re = std::min(P.min_re, ahat.real());
        P.omega_q2.push_back(q2);
      }
    });
  });

  InflationStats out;
  double full = 0.0, om = 0.0;
  double min_re = std::numeric_limits<double>::infinity();
  std::unordered_set<std::int64_t> omega_radii;
  for (const auto& P : partials) {
    full += P.full;
    om += P.omega;
    min_re = std::min(min_re, P.min_re);
    out.omega_points += P.omega_pts;
    out.output_points += P.out_pts;
    omega_radii.insert(P.omega_q2.begin(), P.omega_q2.end());
  }
  require(out.omega_points > 0, "Omega does not intersect the lattice");
  out.full_norm = std::sqrt(ldinv * full);
  out.omega_norm = std::sqrt(ldinv * om);
  out.min_re = std::isfinite(min_re) ? min_re : 0.0;

  double smin = std::numeric_limits<double>::infinity();
  for (std::int64_t qa : omega_radii)
    for (const auto& sh : data.shells)
      smin = std::min(smin, std::sin(t * h * h * static_cast<double>(qa - sh.q2)));
  out.sin_min = std::isfinite(smin) ? smin : 0.0;

  double dn = 0.0;
  for (const auto& sh : data.shells) {
    const double r2 = h * h * static_cast<double>(sh.q2);
    dn += sh.count * std::pow(1.0 + r2, gamma) * sh.value * sh.value;
  }
  out.data_norm = std::sqrt(ldinv * dn) * std::pow(two_pi, d);
  return out;
}

// ---------- box (anisotropic) engines ----------

namespace {

// union of integer intervals from a sorted coordinate list
std::vector<std::pair<std::int32_t, std::int32_t>> runs_of(const std::vector<std::int32_t>& v) {
  std::vector<std::pair<std::int32_t, std::int32_t>> out;
  for (std::size_t i = 0; i < v.size();) {
    std::size_t j = i;
    while (j + 1 < v.size() && v[j + 1] == v[j] + 1) ++j;
    out.emplace_back(v[i], v[j]);
    i = j + 1;
  }
  return out;
}

std::vector<std::int32_t> minkowski_axis(const AxisSupport& a, const AxisSupport& b) {
  auto ra = runs_of(a.coords);
  auto rb = runs_of(b.coords);
  std::vector<std::pair<std::int32_t, std::int32_t>> sums;
  for (const auto& [alo, ahi] : ra)
    for (const auto& [blo, bhi] : rb) sums.emplace_back(alo + blo, ahi + bhi);
  std::sort(sums.begin(), sums.end());
  std::vector<std::int32_t> coords;
  for (const auto& [lo, hi] : sums) {
    std::int32_t k = coords.empty() ? lo : std::max(lo, coords.back() + 1);
    for (; k <= hi; ++k) coords.push_back(k);
  }
  return coords;
}

}  // namespace

InflationStats box_inflation_stats(int d, double h, const std::vector<AxisSupport>& eta_axes,
                                   double eta_amp, const std::vector<AxisSupport>& data_axes,
                                   double data_amp, double t, double gamma,
                                   const RegionSpec& omega, double* sep_norm_out) {
  require(static_cast<int>(eta_axes.size()) == d && static_cast<int>(data_axes.size()) == d,
          "need one axis support per dimension");
  const BoxPointSet data = build_box_point_set(d, h, data_axes, data_amp);
  require(!data.shells.empty(), "data box contains no lattice points");

  // output coordinates per axis
  std::vector<std::vector<std::int32_t>> out_axes(static_cast<std::size_t>(d));
  std::size_t total = 1;
  for (int a = 0; a < d; ++a) {
    out_axes[a] = minkowski_axis(eta_axes[a], data_axes[a]);
    total *= out_axes[a].size();
  }

  const double ldinv = std::pow(h / two_pi, d);

  struct Partial {
    double full = 0.0, omega = 0.0, sep = 0.0;
    double min_re = std::numeric_limits<double>::infinity();
    std::size_t omega_pts = 0, out_pts = 0;
    std::vector<std::int64_t> omega_q2;
  };
  const std::size_t nchunks = chunk_count(total);
  std::vector<Partial> partials(nchunks);

  parallel_chunks(total, [&](std::size_t chunk, std::size_t begin, std::size_t end) {
    Partial& P = partials[chunk];
    for (std::size_t flat = begin; flat < end; ++flat) {
      std::int32_t kv[5];
      std::size_t rem = flat;
      for (int a = d - 1; a >= 0; --a) {
        kv[a] = out_axes[a][rem % out_axes[a].size()];
        rem /= out_axes[a].size();
      }
      std::int64_t q2 = 0;
      for (int a = 0; a < d; ++a) q2 += static_cast<std::int64_t>(kv[a]) * kv[a];
      cplx ahat(0.0, 0.0);
      for (const auto& sh : data.shells) {
        double ssum = 0.0;
        for (std::size_t p = sh.begin; p < sh.end; ++p) {
          double v = data.values[p];
          const std::int32_t* pt = data.points.data() + p * static_cast<std::size_t>(d);
          for (int a = 0; a < d; ++a) v *= eta_axes[a].value_at(kv[a] - pt[a]);
          ssum += v;
        }
        if (ssum == 0.0) continue;
        const double phi = h * h * static_cast<double>(q2 - sh.q2);
        ahat += duhamel_kernel(t, phi) * ssum;
      }
      ahat *= ldinv * eta_amp;
      if (ahat == cplx(0.0, 0.0)) continue;
      ++P.out_pts;
      const double mag2 = ahat.real() * ahat.real() + ahat.imag() * ahat.imag();
      const double r2 = h * h * static_cast<double>(q2);
      P.full += std::pow(1.0 + r2, gamma) * mag2;
      double sepw = 1.0;
      double xi[5];
      for (int a = 0; a < d; ++a) {
        xi[a] = h * kv[a];
        sepw += std::pow(std::abs(xi[a]), 2.0 * gamma);
      }
      P.sep += sepw * mag2;
      if (omega.contains(xi, d)) {
        ++P.omega_pts;
        P.omega += std::pow(1.0 + r2, gamma) * mag2;
        P.min_re = std::min(P.min_re, ahat.real());
        P.omega_q2.push_back(q2);
      }
    }
  });

  InflationStats out;
  double full = 0.0, om = 0.0, sep = 0.0;
  double min_re = std::numeric_limits<double>::infinity();
  std::unordered_set<std::int64_t> omega_radii;
  for (const auto& P : partials) {
    full += P.full;
    om += P.omega;
    sep += P.sep;
    min_re = std::min(min_re, P.min_re);
    out.omega_points += P.omega_pts;
    out.output_points += P.out_pts;
    omega_radii.insert(P.omega_q2.begin(), P.omega_q2.end());
  }
  require(out.omega_points > 0, "Omega does not intersect the lattice");
  out.full_norm = std::sqrt(ldinv * full);
  out.omega_norm = std::sqrt(ldinv * om);
  out.min_re = std::isfinite(min_re) ? min_re : 0.0;
  if (sep_norm_out) *sep_norm_out = std::sqrt(ldinv * sep);

  double smin = std::numeric_limits<double>::infinity();
  for (std::int64_t qa : omega_radii)
    for (const auto& sh : data.shells)
      smin = std::min(smin, std::sin(t * h * h * static_cast<double>(qa - sh.q2)));
  out.sin_min = std::isfinite(smin) ? smin : 0.0;

  double dn = 0.0;
  for (std::size_t p = 0; p < data.values.size(); ++p) dn += data.values[p] * data.values[p];
  out.data_norm = std::sqrt(ldinv * dn) * std::pow(two_pi, d);
  return out;
}

InflationStats separable_inflation_stats(int d, double h,
                                         const std::vector<AxisSupport>& eta_axes,
                                         double eta_amp,
                                         const std::vector<AxisSupport>& data_axes,
                                         double data_amp, double t, double gamma,
                                         int time_nodes, const RegionSpec& omega) {
  require(time_nodes >= 2, "separable path needs at least 2 time nodes");
  const int J = time_nodes;
  const double dt = t / (J - 1);

  std::vector<std::vector<std::int32_t>> out_axes(static_cast<std::size_t>(d));
  for (int a = 0; a < d; ++a) out_axes[a] = minkowski_axis(eta_axes[a], data_axes[a]);

  // f_tilde[j][a][i]: e^{i rho_j |h k|^2} * sum_p eta_a(k - p) data_a(p) e^{-i rho_j |h p|^2}
  std::vector<std::vector<std::vector<cplx>>> ft(
      static_cast<std::size_t>(J),
      std::vector<std::vector<cplx>>(static_cast<std::size_t>(d)));
  for (int j = 0; j < J; ++j) {
    const double rho = j * dt;
    for (int a = 0; a < d; ++a) {
      auto& row = ft[j][a];
      row.assign(out_axes[a].size(), cplx(0.0, 0.0));
      for (std::size_t i = 0; i < out_axes[a].size(); ++i) {
        const std::int32_t k = out_axes[a][i];
        cplx acc(0.0, 0.0);
        for (std::size_t p = 0; p < data_axes[a].coords.size(); ++p) {
          const std::int32_t pc = data_axes[a].coords[p];
          const double ev = eta_axes[a].value_at(k - pc);
          if (ev == 0.0) continue;
          const double ph = -rho * h * h * static_cast<double>(pc) * pc;
          acc += ev * data_axes[a].values[p] * std::polar(1.0, ph);
        }
        const double ph = rho * h * h * static_cast<double>(k) * k;
        row[i] = acc * std::polar(1.0, ph);
      }
    }
  }

  std::vector<double> w(static_cast<std::size_t>(J), dt);
  w.front() *= 0.5;
  w.back() *= 0.5;

  // axis inner products S0 and the |xi_a|^{2 gamma}-weighted variant
  std::vector<std::vector<cplx>> S0(static_cast<std::size_t>(d)), Sg(static_cast<std::size_t>(d));
  for (int a = 0; a < d; ++a) {
    S0[a].assign(static_cast<std::size_t>(J) * J, cplx(0.0, 0.0));
    Sg[a].assign(static_cast<std::size_t>(J) * J, cplx(0.0, 0.0));
    for (int j = 0; j < J; ++j)
      for (int jp = 0; jp < J; ++jp) {
        cplx s0(0.0, 0.0), sg(0.0, 0.0);
        for (std::size_t i = 0; i < out_axes[a].size(); ++i) {
          const cplx v = ft[j][a][i] * std::conj(ft[jp][a][i]);
          s0 += v;
          sg += std::pow(std::abs(h * out_axes[a][i]), 2.0 * gamma) * v;
        }
        S0[a][static_cast<std::size_t>(j) * J + jp] = s0;
        Sg[a][static_cast<std::size_t>(j) * J + jp] = sg;
      }
  }

  const double ldinv = std::pow(h / two_pi, d);
  const double amp = eta_amp * data_amp;
  cplx norm2(0.0, 0.0);
  for (int j = 0; j < J; ++j)
    for (int jp = 0; jp < J; ++jp) {
      cplx prod0(1.0, 0.0);
      for (int a = 0; a < d; ++a) prod0 *= S0[a][static_cast<std::size_t>(j) * J + jp];
      cplx weighted = prod0;  // the "1 +" term
      for (int a = 0; a < d; ++a) {
        cplx p(1.0, 0.0);
        for (int b = 0; b < d; ++b)
          p *= (b == a) ? Sg[b][static_cast<std::size_t>(j) * J + jp]
                        : S0[b][static_cast<std::size_t>(j) * J + jp];
        weighted += p;
      }
      norm2 += w[static_cast<std::size_t>(j)] * w[static_cast<std::size_t>(jp)] * weighted;
    }

  InflationStats out;
  out.full_norm = std::sqrt(std::max(0.0, norm2.real()) * ldinv) * ldinv * amp;

  // Omega stats by direct evaluation of the J-term separable sum
  double min_re = std::numeric_limits<double>::infinity();
  double om = 0.0;
  std::size_t om_pts = 0;
  std::vector<std::size_t> axis_idx(static_cast<std::size_t>(d), 0);
  std::vector<std::vector<std::size_t>> omega_axis_idx(static_cast<std::size_t>(d));
  for (int a = 0; a < d; ++a) {
    for (std::size_t i = 0; i < out_axes[a].size(); ++i) {
      const double xi = h * out_axes[a][i];
      if (xi >= omega.box[a].first - 1e-12 && xi <= omega.box[a].second + 1e-12)
        omega_axis_idx[a].push_back(i);
    }
    require(!omega_axis_idx[a].empty(), "Omega does not intersect the lattice");
  }
  std::size_t om_total = 1;
  for (int a = 0; a < d; ++a) om_total *= omega_axis_idx[a].size();
  for (std::size_t flat = 0; flat < om_total; ++flat) {
    std::size_t rem = flat;
    std::int64_t q2 = 0;
    for (int a = d - 1; a >= 0; --a) {
      axis_idx[a] = omega_axis_idx[a][rem % omega_axis_idx[a].size()];
      rem /= omega_axis_idx[a].size();
      const std::int32_t k = out_axes[a][axis_idx[a]];
      q2 += static_cast<std::int64_t>(k) * k;
    }
    cplx ahat(0.0, 0.0);
    for (int j = 0; j < J; ++j) {
      cplx p(1.0, 0.0);
      for (int a = 0; a < d; ++a) p *= ft[j][a][axis_idx[a]];
      ahat += w[static_cast<std::size_t>(j)] * p;
    }
    ahat *= ldinv * amp;
    ++om_pts;
    min_re = std::min(min_re, ahat.real());
    const double mag2 = ahat.real() * ahat.real() + ahat.imag() * ahat.imag();
    om += std::pow(1.0 + h * h * static_cast<double>(q2), gamma) * mag2;
  }
  out.omega_points = om_pts;
  out.omega_norm = std::sqrt(ldinv * om);
  out.min_re = std::isfinite(min_re) ? min_re : 0.0;
  out.sin_min = 0.0;  // not tracked on the separable path
  return out;
}

}  // namespace rpot
