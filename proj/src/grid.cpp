#include "roughpot/grid.hpp"

#include <algorithm>
#include <cmath>

#include "roughpot/fft.hpp"
#include "roughpot/kernels.hpp"

namespace rpot {

Grid make_grid(int d, int n, double L) {
  require(d >= 1 && d <= 5, "dimension out of range (1..5)");
  require(is_pow2(n) && n >= 4, "n must be a power of two >= 4");
  require(L > 0.0, "period must be positive");
  double modes = std::pow(static_cast<double>(n), d);
  require(modes <= 4194304.0 + 0.5, "grid size cap exceeded (n^d <= 2^22)");
  return Grid{d, n, L};
}

void for_each_mode(const Grid& g, const std::function<void(std::size_t, const int*)>& fn) {
  int idx[5] = {0, 0, 0, 0, 0};
  int k[5] = {0, 0, 0, 0, 0};
  const std::size_t total = g.size();
  for (int a = 0; a < g.d; ++a) k[a] = 0;
  for (std::size_t flat = 0; flat < total; ++flat) {
    fn(flat, k);
    for (int a = g.d - 1; a >= 0; --a) {
      if (++idx[a] < g.n) {
        k[a] = g.ksigned(idx[a]);
        break;
      }
      idx[a] = 0;
      k[a] = 0;
    }
  }
}

std::vector<double> xi_norm2_table(const Grid& g) {
  std::vector<double> out(g.size());
  const double h = g.freq_step();
  for_each_mode(g, [&](std::size_t flat, const int* k) {
    double s = 0.0;
    for (int a = 0; a < g.d; ++a) s += static_cast<double>(k[a]) * k[a];
    out[flat] = h * h * s;
  });
  return out;
}

std::vector<double> japanese_weight_table(const Grid& g, double s) {
  std::vector<double> out = xi_norm2_table(g);
  for (double& v : out) v = std::pow(1.0 + v, s);
  return out;
}

Field& Field::operator+=(const Field& o) {
  require(grid == o.grid, "grid mismatch");
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
  return *this;
}

Field& Field::operator-=(const Field& o) {
  require(grid == o.grid, "grid mismatch");
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] -= o.coeffs[i];
  return *this;
}

Field& Field::operator*=(cplx a) {
  for (auto& c : coeffs) c *= a;
  return *this;
}

bool Field::all_finite() const {
  for (const auto& c : coeffs)
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
  return true;
}

Field operator+(Field a, const Field& b) { a += b; return a; }
Field operator-(Field a, const Field& b) { a -= b; return a; }
Field operator*(cplx a, Field f) { f *= a; return f; }

namespace {
std::vector<int> dims_of(const Grid& g) { return std::vector<int>(g.d, g.n); }
}  // namespace

Field analyze(const Grid& g, const std::vector<cplx>& samples) {
  require(samples.size() == g.size(), "sample count mismatch");
  Field f(g);
  f.coeffs = samples;
  fft::forward(dims_of(g), f.coeffs.data());
  const double w = std::pow(g.dx(), g.d);
  for (auto& c : f.coeffs) c *= w;
  return f;
}

std::vector<cplx> synthesize(const Field& f) {
  std::vector<cplx> out = f.coeffs;
  fft::backward(dims_of(f.grid), out.data());
  const double w = std::pow(f.grid.L, -f.grid.d);
  for (auto& c : out) c *= w;
  return out;
}

Field from_spectral_profile(const Grid& g, const std::function<cplx(const double*)>& profile) {
  Field f(g);
  const double h = g.freq_step();
  const double amp = std::pow(two_pi, g.d);
  for_each_mode(g, [&](std::size_t flat, const int* k) {
    double xi[5];
    for (int a = 0; a < g.d; ++a) xi[a] = h * k[a];
    f.coeffs[flat] = amp * profile(xi);
  });
  return f;
}

Field from_radial_profile(const Grid& g, const std::function<double(double)>& profile) {
  Field f(g);
  const double h = g.freq_step();
  const double amp = std::pow(two_pi, g.d);
  for_each_mode(g, [&](std::size_t flat, const int* k) {
    double s = 0.0;
    for (int a = 0; a < g.d; ++a) s += static_cast<double>(k[a]) * k[a];
    f.coeffs[flat] = amp * profile(h * std::sqrt(s));
  });
  return f;
}

Field apply_symbol(const Field& f, const std::function<cplx(const double*)>& symbol) {
  Field out(f.grid);
  const double h = f.grid.freq_step();
  for_each_mode(f.grid, [&](std::size_t flat, const int* k) {
    double xi[5];
    for (int a = 0; a < f.grid.d; ++a) xi[a] = h * k[a];
    const cplx s = symbol(xi);
    if (f.coeffs[flat] != cplx(0.0, 0.0))
      require(std::isfinite(s.real()) && std::isfinite(s.imag()),
              "non-finite symbol value at occupied mode");
    out.coeffs[flat] = s * f.coeffs[flat];
  });
  return out;
}

Field apply_radial_symbol(const Field& f, const std::function<cplx(double)>& symbol) {
  Field out(f.grid);
  const double h = f.grid.freq_step();
  for_each_mode(f.grid, [&](std::size_t flat, const int* k) {
    double s = 0.0;
    for (int a = 0; a < f.grid.d; ++a) s += static_cast<double>(k[a]) * k[a];
    const cplx v = symbol(h * std::sqrt(s));
    if (f.coeffs[flat] != cplx(0.0, 0.0))
      require(std::isfinite(v.real()) && std::isfinite(v.imag()),
              "non-finite symbol value at occupied mode");
    out.coeffs[flat] = v * f.coeffs[flat];
  });
  return out;
}

Field fractional_laplacian(const Field& f, double s) {
  return apply_radial_symbol(f, [s](double r) -> cplx {
    if (r == 0.0) return 0.0;
    return std::pow(r, s);
  });
}

Field bessel_potential(const Field& f, double s) {
  return apply_radial_symbol(f, [s](double r) -> cplx {
    return std::pow(1.0 + r * r, 0.5 * s);
  });
}

Field propagate_free(const Field& f, double t) {
  require(std::isfinite(t), "time must be finite");
  Field out(f.grid);
  const std::vector<double> xi2 = xi_norm2_table(f.grid);
  std::vector<cplx> phase(xi2.size());
  for (std::size_t i = 0; i < xi2.size(); ++i)
    phase[i] = std::polar(1.0, -t * xi2[i]);
  kernels::cmul(phase.data(), f.coeffs.data(), out.coeffs.data(), phase.size());
  return out;
}

Field pointwise_multiply(const Field& f, const Field& g, bool padded) {
  require(f.grid == g.grid, "grid mismatch");
  if (!padded) {
    auto a = synthesize(f);
    auto b = synthesize(g);
    kernels::cmul(a.data(), b.data(), a.data(), a.size());
    return analyze(f.grid, a);
  }
  const Grid& gr = f.grid;
  const Grid pg{gr.d, 2 * gr.n, gr.L};

  auto embed = [&](const Field& src) {
    Field dst(pg);
    for_each_mode(gr, [&](std::size_t flat, const int* k) {
      // same signed mode on the padded lattice
      std::size_t pf = 0;
      for (int a = 0; a < gr.d; ++a) {
        int kk = k[a] < 0 ? k[a] + pg.n : k[a];
        pf = pf * static_cast<std::size_t>(pg.n) + static_cast<std::size_t>(kk);
      }
      dst.coeffs[pf] = src.coeffs[flat];
    });
    return dst;
  };

  Field pa = embed(f);
  Field pb = embed(g);
  auto sa = synthesize(pa);
  auto sb = synthesize(pb);
  kernels::cmul(sa.data(), sb.data(), sa.data(), sa.size());
  Field prod = analyze(pg, sa);

  Field out(gr);
  for_each_mode(gr, [&](std::size_t flat, const int* k) {
    std::size_t pf = 0;
    for (int a = 0; a < gr.d; ++a) {
      int kk = k[a] < 0 ? k[a] + pg.n : k[a];
      pf = pf * static_cast<std::size_t>(pg.n) + static_cast<std::size_t>(kk);
    }
    out.coeffs[flat] = prod.coeffs[pf];
  });
  return out;
}

std::vector<double> TimeGrid::weights() const {
  std::vector<double> w(node_count(), dt());
  w.front() *= 0.5;
  w.back() *= 0.5;
  return w;
}

TimeGrid make_time_grid(double T, int K) {
  require(T > 0.0, "final time must be positive");
  require(K >= 1, "node count must be >= 1");
  return TimeGrid{T, K};
}

Trajectory free_trajectory(const Field& u0, const TimeGrid& tg) {
  Trajectory tr;
  tr.tg = tg;
  tr.states.reserve(tg.node_count());
  tr.states.push_back(u0);
  const std::vector<double> xi2 = xi_norm2_table(u0.grid);
  std::vector<cplx> step(xi2.size());
  for (std::size_t i = 0; i < xi2.size(); ++i)
    step[i] = std::polar(1.0, -tg.dt() * xi2[i]);
  for (int k = 1; k < tg.node_count(); ++k) {
    Field next(u0.grid);
    kernels::cmul(step.data(), tr.states.back().coeffs.data(), next.coeffs.data(), step.size());
    tr.states.push_back(std::move(next));
  }
  return tr;
}

}  // namespace rpot
