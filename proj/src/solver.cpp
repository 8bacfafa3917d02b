#include "roughpot/solver.hpp"

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>

#include "roughpot/kernels.hpp"
#include "roughpot/lp.hpp"
#include "roughpot/norms.hpp"

namespace rpot {

Trajectory split_step_solve(const Potential& eta, const Field& u0, double T,
                            const SolverConfig& cfg) {
  require(T > 0.0, "final time must be positive");
  require(cfg.dt > 0.0, "step size must be positive");
  const Grid& g = u0.grid;
  require(eta.field.grid == g, "grid mismatch");
  const int steps = std::max(1, static_cast<int>(std::llround(T / cfg.dt)));
  const double dt = T / steps;

  const auto eta_phys = synthesize(eta.field);
  std::vector<cplx> half_phase(eta_phys.size());
  for (std::size_t i = 0; i < eta_phys.size(); ++i)
    half_phase[i] = std::exp(cplx(0.0, 0.5 * dt) * eta_phys[i]);

  const auto xi2 = xi_norm2_table(g);
  std::vector<cplx> kin(xi2.size());
  for (std::size_t i = 0; i < xi2.size(); ++i) kin[i] = std::polar(1.0, -dt * xi2[i]);

  Trajectory out;
  out.tg = make_time_grid(T, steps);
  out.states.reserve(steps + 1);
  out.states.push_back(u0);

  auto phys = synthesize(u0);
  for (int s = 0; s < steps; ++s) {
    kernels::cmul(half_phase.data(), phys.data(), phys.data(), phys.size());
    Field spec = analyze(g, phys);
    kernels::cmul(kin.data(), spec.coeffs.data(), spec.coeffs.data(), spec.coeffs.size());
    phys = synthesize(spec);
    kernels::cmul(half_phase.data(), phys.data(), phys.data(), phys.size());
    out.states.push_back(analyze(g, phys));
  }
  return out;
}

struct DensePropagator::Impl {
  Grid grid;
  Eigen::MatrixXcd U;  // exp(i t (Delta + P eta .)) in the spectral basis
};

DensePropagator::DensePropagator(const Potential& eta, const Grid& g, double t) : t_(t) {
  require(g.size() <= 4096, "grid too large for the dense propagator (n^d <= 4096)");
  require(eta.field.grid == g, "grid mismatch");
  const auto n = static_cast<Eigen::Index>(g.size());

  // mode bookkeeping: flat index <-> signed k
  std::vector<std::array<int, 5>> kv(g.size());
  for_each_mode(g, [&](std::size_t flat, const int* k) {
    for (int a = 0; a < g.d; ++a) kv[flat][a] = k[a];
  });
  const auto xi2 = xi_norm2_table(g);
  const double conv = std::pow(g.L, -g.d);

  Eigen::MatrixXcd H(n, n);
  for (Eigen::Index col = 0; col < n; ++col) {
    for (Eigen::Index row = 0; row < n; ++row) {
      std::size_t flat = 0;
      bool ok = true;
      for (int a = 0; a < g.d; ++a) {
        const int diff = kv[static_cast<std::size_t>(row)][a] - kv[static_cast<std::size_t>(col)][a];
        if (diff < -g.n / 2 || diff >= g.n / 2) { ok = false; break; }
        flat = flat * static_cast<std::size_t>(g.n) +
               static_cast<std::size_t>(diff < 0 ? diff + g.n : diff);
      }
      H(row, col) = ok ? conv * eta.field.coeffs[flat] : cplx(0.0, 0.0);
    }
    H(col, col) += -xi2[static_cast<std::size_t>(col)];
  }
  H *= cplx(0.0, t);

  auto impl = std::make_shared<Impl>();
  impl->grid = g;
  impl->U = H.exp();
  impl_ = std::move(impl);
}

Field DensePropagator::apply(const Field& f) const {
  require(f.grid == impl_->grid, "grid mismatch");
  const auto n = static_cast<Eigen::Index>(f.grid.size());
  Eigen::Map<const Eigen::VectorXcd> v(f.coeffs.data(), n);
  Field out(f.grid);
  Eigen::Map<Eigen::VectorXcd>(out.coeffs.data(), n) = impl_->U * v;
  return out;
}

Trajectory DensePropagator::trajectory(const Field& u0, const TimeGrid& tg) const {
  require(std::abs(t_ - tg.dt()) <= 1e-12 * std::max(1.0, std::abs(t_)),
          "propagator step does not match the node spacing");
  Trajectory out;
  out.tg = tg;
  out.states.reserve(tg.node_count());
  out.states.push_back(u0);
  const auto n = static_cast<Eigen::Index>(u0.grid.size());
  Eigen::VectorXcd v = Eigen::Map<const Eigen::VectorXcd>(u0.coeffs.data(), n);
  for (int k = 1; k < tg.node_count(); ++k) {
    v = impl_->U * v;
    Field f(u0.grid);
    Eigen::Map<Eigen::VectorXcd>(f.coeffs.data(), n) = v;
    out.states.push_back(std::move(f));
  }
  return out;
}

DensePropagator dense_propagator(const Potential& eta, const Grid& g, double t) {
  return DensePropagator(eta, g, t);
}

Field time_derivative_data(const Potential& eta, const Field& u0) {
  Field lap = apply_radial_symbol(u0, [](double r) -> cplx { return -r * r; });
  Field out = lap + pointwise_multiply(eta.field, u0, true);
  out *= cplx(0.0, 1.0);
  return out;
}

ReconstructionReport reconstruct_from_v(const Potential& eta, const Trajectory& v_traj,
                                        const Trajectory& u_low_traj, double N0,
                                        double tol, int max_iter) {
  require(v_traj.grid() == u_low_traj.grid(), "grid mismatch");
  require(v_traj.tg.node_count() == u_low_traj.tg.node_count(), "time grid mismatch");
  const Grid& g = v_traj.grid();

  ReconstructionReport rep;
  rep.u.tg = v_traj.tg;
  std::vector<double> ratios;

  for (int node = 0; node < v_traj.tg.node_count(); ++node) {
    const Field low = project(u_low_traj.states[node], proj::le, N0);
    const Field& v = v_traj.states[node];
    Field u = u_low_traj.states[node];

    double prev_update = -1.0;
    bool converged = false;
    for (int it = 0; it < max_iter; ++it) {
      Field rhs = cplx(0.0, 1.0) * v + pointwise_multiply(eta.field, u, true);
      Field high = fractional_laplacian(project(rhs, proj::ge, N0), -2.0);
      Field next = low + high;
      Field diff = next - u;
      const double upd = sobolev_norm(diff, 0.0);
      const double base = std::max(sobolev_norm(next, 0.0), 1e-300);
      if (prev_update > 0.0 && upd > 0.0) ratios.push_back(upd / prev_update);
      prev_update = upd;
      u = std::move(next);
      rep.max_iterations_used = std::max(rep.max_iterations_used, it + 1);
      if (upd / base < tol) { converged = true; break; }
    }
    if (!ratios.empty()) {
      std::vector<double> tmp = ratios;
      std::nth_element(tmp.begin(), tmp.begin() + tmp.size() / 2, tmp.end());
      rep.contraction_estimate = tmp[tmp.size() / 2];
    }
    if (!converged)
      throw no_convergence_error(
          "reconstruct_from_v failed to converge: N0 too small for this potential "
          "(measured contraction " + std::to_string(rep.contraction_estimate) + ")");
    rep.u.states.push_back(std::move(u));
  }
  return rep;
}

}  // namespace rpot
