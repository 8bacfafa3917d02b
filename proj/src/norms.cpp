#include "roughpot/norms.hpp"

#include <cmath>

#include "roughpot/kernels.hpp"

namespace rpot {

double sobolev_norm(const Field& f, double s) {
  const auto w = japanese_weight_table(f.grid, s);
  const double sum = kernels::wnorm2(w.data(), f.coeffs.data(), f.coeffs.size());
  return std::sqrt(std::pow(f.grid.L, -f.grid.d) * sum);
}

double lp_norm(const Field& f, double p) {
  require(p >= 1.0, "p must be >= 1");
  const auto phys = synthesize(f);
  if (std::isinf(p)) {
    double m = 0.0;
    for (const auto& v : phys) m = std::max(m, std::abs(v));
    return m;
  }
  if (p == 2.0) {
    const double cell = std::pow(f.grid.dx(), f.grid.d);
    return std::sqrt(cell * kernels::norm2(phys.data(), phys.size()));
  }
  const double cell = std::pow(f.grid.dx(), f.grid.d);
  double acc = 0.0;
  for (const auto& v : phys) acc += cell * std::pow(std::abs(v), p);
  return std::pow(acc, 1.0 / p);
}

double mixed_norm(const Trajectory& traj, double q, double p) {
  require(q >= 1.0 && p >= 1.0, "exponents must be >= 1");
  if (std::isinf(q)) {
    double m = 0.0;
    for (const auto& st : traj.states) m = std::max(m, lp_norm(st, p));
    return m;
  }
  const auto w = traj.tg.weights();
  double acc = 0.0;
  for (int k = 0; k < traj.tg.node_count(); ++k)
    acc += w[k] * std::pow(lp_norm(traj.states[k], p), q);
  return std::pow(acc, 1.0 / q);
}

bool is_admissible_pair(double q, double p, int d) {
  if (q < 2.0 || p < 2.0) return false;
  double lhs;
  if (std::isinf(q))
    lhs = (std::isinf(p) ? 0.0 : d / p);
  else if (std::isinf(p))
    lhs = 2.0 / q;
  else
    lhs = 2.0 / q + d / p;
  if (std::abs(lhs - d / 2.0) > 1e-12) return false;
  if (q == 2.0 && std::isinf(p) && d == 2) return false;
  return true;
}

double evaluate_norm(const NormSpec& spec, const Field& f) {
  switch (spec.variant) {
    case NormSpec::kind::sobolev:  return sobolev_norm(f, spec.s);
    case NormSpec::kind::lebesgue: return lp_norm(f, spec.p);
    default:
      throw domain_error("space-time norm applied to a single field");
  }
}

double evaluate_norm(const NormSpec& spec, const Trajectory& traj) {
  switch (spec.variant) {
    case NormSpec::kind::mixed:
      return mixed_norm(traj, spec.mixed.q, spec.mixed.p);
    case NormSpec::kind::composite: {
      double acc = 0.0;
      for (const auto& part : spec.parts) acc += mixed_norm(traj, part.q, part.p);
      return acc;
    }
    case NormSpec::kind::sobolev: {
      // L^inf_t H^s head of the auxiliary spaces
      double m = 0.0;
      for (const auto& st : traj.states) m = std::max(m, sobolev_norm(st, spec.s));
      return m;
    }
    default:
      throw domain_error("unsupported trajectory norm");
  }
}

FitResult fit_power_law(const std::vector<std::pair<double, double>>& samples) {
  require(samples.size() >= 3, "need at least 3 samples to fit");
  double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  const double n = static_cast<double>(samples.size());
  for (const auto& [x, y] : samples) {
    require(x > 0.0 && y > 0.0, "power-law fit needs positive samples");
    const double lx = std::log(x), ly = std::log(y);
    sx += lx; sy += ly;
    sxx += lx * lx; sxy += lx * ly; syy += ly * ly;
  }
  const double denom = n * sxx - sx * sx;
  require(denom > 0.0, "degenerate abscissae in power-law fit");
  FitResult out;
  out.samples = static_cast<int>(samples.size());
  out.slope = (n * sxy - sx * sy) / denom;
  out.intercept = (sy - out.slope * sx) / n;
  const double sst = syy - sy * sy / n;
  double ssr = 0.0;
  for (const auto& [x, y] : samples) {
    const double pred = out.intercept + out.slope * std::log(x);
    const double res = std::log(y) - pred;
    ssr += res * res;
  }
  out.r2 = sst > 0.0 ? std::max(0.0, 1.0 - ssr / sst) : 1.0;
  return out;
}

}  // namespace rpot
