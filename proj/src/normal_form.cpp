#include "roughpot/normal_form.hpp"

#include <cmath>
#include <random>

#include "roughpot/kernels.hpp"
#include "roughpot/lp.hpp"
#include "roughpot/norms.hpp"

namespace rpot {

double nf_cutoff(double xi_norm, double xi2_norm, double N0) {
  if (xi_norm <= 0.0) return 0.0;
  const double high = 1.0 - smooth_cutoff(xi_norm / N0);
  if (high == 0.0) return 0.0;
  return high * smooth_cutoff(32.0 * xi2_norm / xi_norm);
}

double nf_multiplier(const double* xi1, const double* xi2, int d, const MultiplierSpec& spec) {
  double s1 = 0.0, s2 = 0.0, s = 0.0;
  for (int a = 0; a < d; ++a) {
    s1 += xi1[a] * xi1[a];
    s2 += xi2[a] * xi2[a];
    const double x = xi1[a] + xi2[a];
    s += x * x;
  }
  const double cut = nf_cutoff(std::sqrt(s), std::sqrt(s2), spec.N0);
  if (cut == 0.0) return 0.0;
  const double phase = s - s2;
  return std::pow(1.0 + s, 0.5 * spec.alpha) * std::pow(1.0 + s1, 0.5 * (2.0 - spec.alpha)) /
         phase * cut;
}

namespace {

struct SpectralList {
  std::vector<std::array<int, 5>> k;
  std::vector<cplx> c;
  std::vector<double> q2;
};

SpectralList occupied(const Field& f) {
  SpectralList out;
  for_each_mode(f.grid, [&](std::size_t flat, const int* k) {
    const cplx c = f.coeffs[flat];
    if (c == cplx(0.0, 0.0)) return;
    std::array<int, 5> kk{};
    double q2 = 0.0;
    for (int a = 0; a < f.grid.d; ++a) {
      kk[a] = k[a];
      q2 += static_cast<double>(k[a]) * k[a];
    }
    out.k.push_back(kk);
    out.c.push_back(c);
    out.q2.push_back(q2);
  });
  return out;
}

// generic bilinear sum with a (xi1, xi2) multiplier; frequency sums that
// leave the lattice are dropped (band-limited callers never hit this).
Field bilinear_sum(const Field& f, const Field& g,
                   const std::function<double(const double*, const double*)>& mult) {
  require(f.grid == g.grid, "grid mismatch");
  const Grid& gr = f.grid;
  const auto fl = occupied(f);
  const auto glist = occupied(g);
  const double h = gr.freq_step();
  const double conv = std::pow(gr.L, -gr.d);
  Field out(gr);
  for (std::size_t j = 0; j < glist.c.size(); ++j) {
    double xi2[5];
    for (int a = 0; a < gr.d; ++a) xi2[a] = h * glist.k[j][a];
    for (std::size_t i = 0; i < fl.c.size(); ++i) {
      double xi1[5];
      std::size_t flat = 0;
      bool ok = true;
      for (int a = 0; a < gr.d; ++a) {
        xi1[a] = h * fl.k[i][a];
        const int kk = fl.k[i][a] + glist.k[j][a];
        if (kk < -gr.n / 2 || kk >= gr.n / 2) { ok = false; break; }
        flat = flat * static_cast<std::size_t>(gr.n) +
               static_cast<std::size_t>(kk < 0 ? kk + gr.n : kk);
      }
      if (!ok) continue;
      const double m = mult(xi1, xi2);
      if (m == 0.0) continue;
      out.coeffs[flat] += conv * m * fl.c[i] * glist.c[j];
    }
  }
  return out;
}

}  // namespace

Field bilinear_transform(const Field& f, const Field& g, const MultiplierSpec& spec) {
  const int d = f.grid.d;
  return bilinear_sum(f, g, [&](const double* xi1, const double* xi2) {
    return nf_multiplier(xi1, xi2, d, spec);
  });
}

Field nonresonant_part(const Potential& eta, const Field& u, double N0) {
  const int d = u.grid.d;
  return bilinear_sum(eta.field, u, [&](const double* xi1, const double* xi2) {
    double s = 0.0, s2 = 0.0;
    for (int a = 0; a < d; ++a) {
      const double x = xi1[a] + xi2[a];
      s += x * x;
      s2 += xi2[a] * xi2[a];
    }
    return nf_cutoff(std::sqrt(s), std::sqrt(s2), N0);
  });
}

Field resonance_term(const Potential& eta, const Field& u, double N0) {
  Field full = pointwise_multiply(eta.field, u, true);
  full -= nonresonant_part(eta, u, N0);
  return full;
}

Field resonance_term_dyadic(const Potential& eta, const Field& u, double N0) {
  const Grid& g = u.grid;
  require(eta.field.grid == g, "grid mismatch");
  Field prod = pointwise_multiply(eta.field, u, true);
  Field out = project(prod, proj::le, N0);
  const auto scales = dyadic_scales(g);
  for (double M : scales) {
    Field uM = project(u, proj::at, M);
    if (kernels::norm2(uM.coeffs.data(), uM.coeffs.size()) == 0.0) continue;
    Field etauM = pointwise_multiply(eta.field, uM, true);
    Field acc(g);
    for (double N : scales)
      if (dyadic_gtrsim(M, N)) acc += project(etauM, proj::at, N);
    out += project(acc, proj::ge, N0);
  }
  return out;
}

Field nonresonant_remainder_dyadic(const Potential& eta, const Field& u, double N0) {
  const Grid& g = u.grid;
  const auto scales = dyadic_scales(g);
  Field out(g);
  for (double M : scales) {
    Field uM = project(u, proj::at, M);
    if (kernels::norm2(uM.coeffs.data(), uM.coeffs.size()) == 0.0) continue;
    Field etauM = pointwise_multiply(eta.field, uM, true);
    Field acc(g);
    for (double N : scales)
      if (dyadic_much_less(M, N)) acc += project(etauM, proj::at, N);
    out += project(acc, proj::ge, N0);
  }
  return out;
}

namespace {

double h0_norm(const Field& f) {
  return std::sqrt(std::pow(f.grid.L, -f.grid.d) *
                   kernels::norm2(f.coeffs.data(), f.coeffs.size()));
}

// trapezoid of e^{i(T-rho_j)Delta} F_j over the nodes
Field propagated_trapezoid(const std::vector<Field>& nodes, const TimeGrid& tg) {
  const auto w = tg.weights();
  Field acc(nodes.front().grid);
  for (int j = 0; j < tg.node_count(); ++j) {
    Field piece = propagate_free(nodes[j], tg.T - tg.node(j));
    kernels::caxpy(w[j], piece.coeffs.data(), acc.coeffs.data(), acc.coeffs.size());
  }
  return acc;
}

}  // namespace

double decomposition_residual(const Potential& eta, const Trajectory& u_traj,
                              const Field& u0, double alpha, double N0) {
  const TimeGrid& tg = u_traj.tg;
  const Field& uT = u_traj.states.back();
  const MultiplierSpec spec{alpha, N0};
  Field eta_w = bessel_potential(eta.field, alpha - 2.0);
  Potential eta_wp = eta;
  eta_wp.field = eta_w;

  Field lhs = bessel_potential(uT, alpha);

  Field rhs = bessel_potential(propagate_free(u0, tg.T), alpha);
  rhs -= propagate_free(bilinear_transform(eta_w, u0, spec), tg.T);
  rhs += bilinear_transform(eta_w, uT, spec);

  std::vector<Field> res_nodes, high_nodes;
  res_nodes.reserve(tg.node_count());
  high_nodes.reserve(tg.node_count());
  for (int j = 0; j < tg.node_count(); ++j) {
    const Field& uj = u_traj.states[j];
    res_nodes.push_back(bessel_potential(resonance_term(eta, uj, N0), alpha));
    high_nodes.push_back(
        bilinear_transform(eta_w, pointwise_multiply(eta.field, uj, true), spec));
  }
  rhs += cplx(0.0, 1.0) * propagated_trapezoid(res_nodes, tg);
  rhs -= cplx(0.0, 1.0) * propagated_trapezoid(high_nodes, tg);

  Field diff = lhs - rhs;
  const double base = h0_norm(lhs);
  return base > 0.0 ? h0_norm(diff) / base : h0_norm(diff);
}

namespace {

// combined symbol sum_{M in set} phi_M(r) / r^2 for the cascade step
std::function<cplx(double)> cascade_symbol(const Grid& g, double N, double N0) {
  const auto scales = dyadic_scales(g);
  std::vector<double> mset;
  for (double M : scales)
    if (dyadic_much_greater(M, N) && M >= N0) mset.push_back(M);
  return [mset](double r) -> cplx {
    if (r == 0.0 || mset.empty()) return 0.0;
    double acc = 0.0;
    for (double M : mset) acc += projector_profile(ProjectorSpec{M, proj::at}, r);
    return acc / (r * r);
  };
}

}  // namespace

Field cascade_step(const Potential& eta, const Field& f, double N, double N0) {
  Field inner = apply_radial_symbol(f, cascade_symbol(f.grid, N, N0));
  return pointwise_multiply(eta.field, inner, true);
}

Field cascade_apply(const Potential& eta, const Field& f, double N, int k, double N0) {
  require(k >= 0, "iteration depth must be >= 0");
  Field out = f;
  for (int i = 0; i < k; ++i) out = cascade_step(eta, out, N, N0);
  return out;
}

double cascade_contraction_ratio(const Potential& eta, const CascadeSpec& spec,
                                 const Grid& g, int samples, std::uint64_t seed,
                                 double p_norm) {
  require(samples >= 1, "need at least one sample field");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    Field f(g);
    for (auto& c : f.coeffs) c = cplx(gauss(rng), gauss(rng));
    Field cur = f;
    double prev = lp_norm(cur, p_norm);
    for (int k = 1; k <= spec.k; ++k) {
      cur = cascade_step(eta, cur, 1.0, spec.N0);
      const double now = lp_norm(cur, p_norm);
      if (prev > 0.0) worst = std::max(worst, now / prev);
      prev = now;
      if (now == 0.0) break;
    }
  }
  return worst;
}

namespace {

// sum_N P_N T_N^k ( eta . X_N ) where X_N is built per dyadic N
Field sum_pn_tnk(const Potential& eta, const Grid& g, int k, double N0,
                 const std::function<Field(double N)>& inner) {
  const auto scales = dyadic_scales(g);
  Field acc(g);
  for (double N : scales) {
    Field x = inner(N);
    if (kernels::norm2(x.coeffs.data(), x.coeffs.size()) == 0.0) continue;
    Field t = cascade_apply(eta, x, N, k, N0);
    acc += project(t, proj::at, N);
  }
  return acc;
}

// M-restricted projector sums used by the J terms
Field sum_pm(const Field& f, double N, double N0, bool much_greater) {
  const auto scales = dyadic_scales(f.grid);
  Field acc(f.grid);
  for (double M : scales) {
    if (M < N0) continue;
    if (dyadic_much_greater(M, N) != much_greater) continue;
    acc += project(f, proj::at, M);
  }
  return acc;
}

}  // namespace

double recurrence_residual(const Potential& eta, const Field& v0, const TimeGrid& tg,
                           int n, int k, const CascadeSpec& spec, recurrence_id which,
                           double s_norm) {
  require(n >= 1, "term index must be >= 1");
  if (which == recurrence_id::A1) require(k == 0, "A1 compares I_n with I_{n,0}");
  if (which == recurrence_id::A2) require(n >= 2 && k >= 0 && k <= n - 2, "A2 needs 0 <= k <= n-2");
  if (which == recurrence_id::A3) require(k == n - 1, "A3 needs k = n-1");
  const Grid& g = v0.grid;
  const double N0 = spec.N0;

  // Picard terms I_0..I_n on the node grid
  PicardSeries ps = picard_series(eta, v0, tg, n, N0, s_norm);
  const auto& terms = ps.terms;

  const auto weights = tg.weights();
  auto quad_nodes = [&](const std::function<Field(int node)>& fn) {
    Field acc(g);
    for (int j = 0; j < tg.node_count(); ++j) {
      Field piece = fn(j);
      kernels::caxpy(weights[j], piece.coeffs.data(), acc.coeffs.data(), acc.coeffs.size());
    }
    return acc;
  };

  // I_{n,kk}(T) = i int e^{-i rho Delta} sum_N P_N T_N^kk (eta e^{i rho Delta} I_{n-kk-1}) d rho
  auto nested_term = [&](int kk) {
    Field integral = quad_nodes([&](int j) {
      const double rho = tg.node(j);
      const Field& base = terms[static_cast<std::size_t>(n - kk - 1)].states[j];
      Field prod = pointwise_multiply(eta.field, propagate_free(base, rho), true);
      Field summed = sum_pn_tnk(eta, g, kk, N0, [&](double) { return prod; });
      return propagate_free(summed, -rho);
    });
    integral *= cplx(0.0, 1.0);
    return integral;
  };

  Field lhs = nested_term(k);

  if (which == recurrence_id::A1) {
    const Field& in = terms[static_cast<std::size_t>(n)].states.back();
    Field diff = lhs - in;
    const double base = h0_norm(in);
    return base > 0.0 ? h0_norm(diff) / base : h0_norm(diff);
  }

  const int idx = n - 1 - k;
  const Trajectory& src = terms[static_cast<std::size_t>(idx)];

  // J_{n,k}(T)
  Field piece1 = quad_nodes([&](int j) {
    const double rho = tg.node(j);
    Field low = propagate_free(project(src.states[j], proj::le, N0), rho);
    Field prod = pointwise_multiply(eta.field, low, true);
    Field summed = sum_pn_tnk(eta, g, k, N0, [&](double) { return prod; });
    return propagate_free(summed, -rho);
  });
  piece1 *= cplx(0.0, 1.0);

  Field piece2 = quad_nodes([&](int j) {
    const double rho = tg.node(j);
    Field summed = sum_pn_tnk(eta, g, k, N0, [&](double N) {
      Field mid = propagate_free(sum_pm(src.states[j], N, N0, false), rho);
      return pointwise_multiply(eta.field, mid, true);
    });
    return propagate_free(summed, -rho);
  });
  piece2 *= cplx(0.0, 1.0);

  Field piece3 = quad_nodes([&](int j) {
    const double rho = tg.node(j);
    Field summed = sum_pn_tnk(eta, g, k, N0, [&](double N) {
      Field high = propagate_free(sum_pm(src.states[j], N, N0, true), rho);
      return pointwise_multiply(eta.field, fractional_laplacian(high, -2.0), true);
    });
    return propagate_free(summed, -rho);
  });
  piece3 = fractional_laplacian(piece3, 2.0);
  piece3 *= cplx(0.0, 1.0);

  Field boundary = sum_pn_tnk(eta, g, k, N0, [&](double N) {
    Field high = propagate_free(sum_pm(src.states.back(), N, N0, true), tg.T);
    return pointwise_multiply(eta.field, fractional_laplacian(high, -2.0), true);
  });
  Field piece4 = cplx(-1.0, 0.0) * propagate_free(boundary, -tg.T);

  Field rhs = piece1 + piece2 + piece3 + piece4;

  if (which == recurrence_id::A2) {
    rhs += nested_term(k + 1);
  } else {
    rhs += sum_pn_tnk(eta, g, n, N0, [&](double) { return v0; });  // sum_N P_N T_N^n v0
  }

  Field diff = lhs - rhs;
  const double base = h0_norm(lhs);
  return base > 0.0 ? h0_norm(diff) / base : h0_norm(diff);
}

}  // namespace rpot
