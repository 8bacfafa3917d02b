#include "roughpot/critical.hpp"

#include <cmath>

#include "roughpot/duhamel.hpp"
#include "roughpot/lp.hpp"
#include "roughpot/norms.hpp"

namespace rpot {

double critical_smallness(const Potential& eta, double M0, double N0, double beta) {
  require(M0 <= N0, "critical smallness needs M0 <= N0");
  const int d = eta.field.grid.d;
  const double p = 0.5 * d;
  const double high = lp_norm(project(eta.field, proj::ge, M0), p);
  const double full = lp_norm(eta.field, p);
  return high + std::pow(M0 / N0, beta) * full;
}

double critical_time_cap(double N0, int d, double eps) {
  // (q~, r~) = (2/(d/2-1-eps), d/(1+eps)): 1/q~' - 1/2 = (2 - d/2 + eps)/2
  const double e1 = 0.5 * (2.0 - 0.5 * d + eps);
  const double s = 0.5 * d - 2.0 - eps;
  require(e1 > 0.0, "critical exponent bookkeeping needs d < 4 + 2 eps");
  auto lhs = [&](double T) {
    return std::pow(T, e1) * std::pow(N0, 1.0 - s) + std::sqrt(T) * N0;
  };
  double lo = 0.0, hi = 1.0;
  while (lhs(hi) < 1.0) hi *= 2.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (lhs(mid) <= 1.0 ? lo : hi) = mid;
  }
  return lo;
}

CriticalDecay critical_picard_decay(const Potential& eta, const Field& v0, double M0,
                                    double N0, int terms, int time_steps, double eps) {
  const int d = eta.field.grid.d;
  require(d == 3 || d == 4, "critical case runs in d = 3 or 4");
  require(std::abs(eta.r - 0.5 * d) < 1e-9, "configuration not critical (needs r = d/2)");
  require(M0 <= N0, "critical smallness needs M0 <= N0");

  CriticalDecay out;
  out.s = 0.5 * d - 2.0 - eps;
  out.T = critical_time_cap(N0, d, eps);
  out.eps0 = critical_smallness(eta, M0, N0, 0.25);

  const TimeGrid tg = make_time_grid(out.T, time_steps);
  PicardSeries ps = picard_series(eta, v0, tg, terms, N0, out.s);
  out.term_norms = ps.term_norms;
  out.max_ratio = ps.contraction_q;
  return out;
}

}  // namespace rpot
