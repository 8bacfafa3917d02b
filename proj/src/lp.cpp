#include "roughpot/lp.hpp"

#include <algorithm>
#include <cmath>

#include "roughpot/kernels.hpp"

namespace rpot {

namespace {
inline double psi(double t) { return t > 0.0 ? std::exp(-1.0 / t) : 0.0; }

double l2norm(const Field& f) {
  return std::sqrt(std::pow(f.grid.L, -f.grid.d) *
                   kernels::norm2(f.coeffs.data(), f.coeffs.size()));
}
}  // namespace

double smooth_step(double t) {
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  const double a = psi(t);
  const double b = psi(1.0 - t);
  return a / (a + b);
}

double smooth_cutoff(double r) {
  if (r <= 1.0) return 1.0;
  if (r >= 2.0) return 0.0;
  return smooth_step(2.0 - r);
}

double annular_cutoff(double a, double b, double r) {
  require(b > a && a > 0.25, "annular cutoff needs b > a > 1/4");
  const double rise = smooth_step(4.0 * (r - a) + 1.0);
  const double fall = smooth_step(4.0 * (b - r) + 1.0);
  return rise * fall;
}

namespace {
double phi_le(double N, double r) { return smooth_cutoff(r / N); }

double phi_at(double N, double r) {
  if (N <= 1.0) return smooth_cutoff(r);
  return phi_le(N, r) - phi_le(N / 2.0, r);
}
}  // namespace

double projector_profile(const ProjectorSpec& spec, double r) {
  const double N = spec.N;
  switch (spec.kind) {
    case proj::at:      return phi_at(N, r);
    case proj::le:      return phi_le(N, r);
    case proj::lt:      return phi_le(N, r);  // exact complement of ge
    case proj::ll:      return phi_le(N, 32.0 * r);
    case proj::lesssim: return phi_le(N, r / 32.0);
    case proj::ge:      return 1.0 - phi_le(N, r);
    case proj::gg:      return 1.0 - phi_le(N, r / 32.0);
    case proj::gtrsim:  return 1.0 - phi_le(N, 32.0 * r);
  }
  return 0.0;
}

double lp_nmax(const Grid& g) {
  double N = 1.0;
  while (N < g.max_xi()) N *= 2.0;
  return N;
}

std::vector<double> dyadic_scales(const Grid& g) {
  std::vector<double> out;
  const double nmax = lp_nmax(g);
  for (double N = 1.0; N <= nmax; N *= 2.0) out.push_back(N);
  return out;
}

Field project_dyadic(const Field& f, const ProjectorSpec& spec) {
  require(spec.N >= 1.0 && is_pow2(static_cast<long>(spec.N)) &&
              spec.N == std::floor(spec.N),
          "projector scale must be a dyadic integer >= 1");
  return apply_radial_symbol(f, [&](double r) -> cplx { return projector_profile(spec, r); });
}

Field project(const Field& f, proj kind, double N) {
  return project_dyadic(f, ProjectorSpec{N, kind});
}

double partition_residual(const Grid& g) {
  const auto scales = dyadic_scales(g);
  double worst = 0.0;
  const double h = g.freq_step();
  for_each_mode(g, [&](std::size_t, const int* k) {
    double s = 0.0;
    for (int a = 0; a < g.d; ++a) s += static_cast<double>(k[a]) * k[a];
    const double r = h * std::sqrt(s);
    double acc = 0.0;
    for (double N : scales) acc += phi_at(N, r);
    worst = std::max(worst, std::abs(acc - 1.0));
  });
  return worst;
}

double bernstein_ratio(const Field& f, double N, double s) {
  Field loc = project(f, proj::at, N);
  const double base = l2norm(loc);
  require(base > 0.0, "bernstein_ratio needs a nonzero P_N-localized input");
  const double num = l2norm(fractional_laplacian(loc, s));
  return num / (std::pow(N, s) * base);
}

double schur_bilinear_sum(const std::vector<double>& a, const std::vector<double>& b,
                          double alpha) {
  require(alpha > 0.0, "alpha must be positive");
  double acc = 0.0;
  for (std::size_t j1 = 0; j1 < b.size(); ++j1) {
    const double N1 = std::pow(2.0, static_cast<double>(j1));
    for (std::size_t j = j1; j < a.size(); ++j) {
      const double N = std::pow(2.0, static_cast<double>(j));
      acc += std::pow(N1 / N, alpha) * a[j] * b[j1];
    }
  }
  return acc;
}

double triebel_lizorkin_norm(const Field& f, double alpha, double p, double q) {
  require(p > 1.0 && std::isfinite(p), "p must lie in (1, inf)");
  require(q >= 1.0, "q must lie in [1, inf]");
  const Grid& g = f.grid;
  const auto scales = dyadic_scales(g);
  const std::size_t npts = g.size();

  std::vector<double> lq(npts, 0.0);
  const bool qinf = std::isinf(q);
  for (double N : scales) {
    Field block = project(f, proj::at, N);
    auto phys = synthesize(block);
    const double w = std::pow(N, alpha);
    for (std::size_t i = 0; i < npts; ++i) {
      const double v = w * std::abs(phys[i]);
      if (qinf)
        lq[i] = std::max(lq[i], v);
      else
        lq[i] += std::pow(v, q);
    }
  }
  const double cell = std::pow(g.dx(), g.d);
  double lp_of_lq = 0.0;
  double lp_of_u = 0.0;
  auto phys = synthesize(f);
  for (std::size_t i = 0; i < npts; ++i) {
    const double inner = qinf ? lq[i] : std::pow(lq[i], 1.0 / q);
    lp_of_lq += cell * std::pow(inner, p);
    lp_of_u += cell * std::pow(std::abs(phys[i]), p);
  }
  return std::pow(lp_of_u, 1.0 / p) + std::pow(lp_of_lq, 1.0 / p);
}

}  // namespace rpot
