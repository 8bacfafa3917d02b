#include "roughpot/potentials.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "roughpot/lp.hpp"

namespace rpot {

double AxisBand::eval(double coord) const { return annular_cutoff(a, b, std::abs(coord)); }

RadialFreqProfile bump_profile(double M, double r_exp, bump_band band, int d) {
  const double a = band == bump_band::half_to_two ? 0.5 : 1.0;
  const double amp = std::pow(M, d / r_exp - d);
  RadialFreqProfile p;
  p.value = [M, a, amp](double rr) { return amp * annular_cutoff(a, 2.0, rr / M); };
  p.rmin = (a - 0.25) * M;
  p.rmax = 2.25 * M;
  p.plateau_lo = a * M;
  p.plateau_hi = 2.0 * M;
  p.plateau_value = amp;
  return p;
}

RadialFreqProfile shell_profile(double N, double gamma, int d) {
  const double amp = std::pow(N, -0.5 * d - gamma);
  RadialFreqProfile p;
  p.value = [N, amp](double rr) { return amp * annular_cutoff(N, 2.0 * N, rr); };
  p.rmin = N - 0.25;
  p.rmax = 2.0 * N + 0.25;
  p.plateau_lo = N;
  p.plateau_hi = 2.0 * N;
  p.plateau_value = amp;
  return p;
}

RadialFreqProfile log_shell_profile(double M, int d) {
  RadialFreqProfile p;
  p.value = [M, d](double rr) {
    const double cut = annular_cutoff(2.0, M, rr);
    if (cut == 0.0) return 0.0;
    return cut * std::pow(rr, -static_cast<double>(d)) / std::log(rr);
  };
  p.rmin = 1.75;
  p.rmax = M + 0.25;
  // profile is never constant; leave the plateau empty
  p.plateau_lo = 1.0;
  p.plateau_hi = 0.0;
  p.plateau_value = 0.0;
  return p;
}

namespace {

void require_radial_support_fits(const Grid& g, double rmax) {
  require(rmax < g.max_xi_axis(), "frequency band exceeds the lattice");
}

Field field_from_profile(const Grid& g, const RadialFreqProfile& p) {
  require_radial_support_fits(g, p.rmax);
  return from_radial_profile(g, p.value);
}

}  // namespace

Potential bump_potential(const Grid& g, double M, double r_exp, bump_band band) {
  require(M > 0.0 && r_exp >= 1.0, "bump potential needs M > 0 and r >= 1");
  Potential out;
  out.field = field_from_profile(g, bump_profile(M, r_exp, band, g.d));
  out.family = potential_family::bump;
  out.r = r_exp;
  out.M = M;
  return out;
}

Potential aniso_box_potential(const Grid& g, double M, double N, double r_exp) {
  require(N > 0.0, "box width must be positive");
  const double c = std::sqrt(pi / 3.0);
  AxisBand first{c * M, c * M + N};
  AxisBand cross{0.5 * N, 2.0 * N};
  require(first.support_hi() < g.max_xi_axis(), "first-axis band exceeds the lattice");
  require(cross.support_hi() < g.max_xi_axis(), "cross-axis band exceeds the lattice");
  const double amp = std::pow(N, -g.d + g.d / r_exp);
  Field f = from_spectral_profile(g, [&](const double* xi) -> cplx {
    double v = amp * first.eval(xi[0]);
    for (int a = 1; a < g.d; ++a) v *= cross.eval(xi[a]);
    return v;
  });
  Potential out;
  out.field = std::move(f);
  out.family = potential_family::aniso_box;
  out.r = r_exp;
  out.M = M;
  out.N = N;
  return out;
}

Potential power_law_potential(const Grid& g, double a, double delta) {
  require(a >= 0.0 && a < g.d, "power-law exponent out of range [0, d)");
  require(delta >= 0.5 * g.dx(), "cap radius below grid scale");
  std::vector<cplx> samples(g.size());
  // periodic distance to the origin via centered coordinates
  int idx[5] = {0, 0, 0, 0, 0};
  const double dx = g.dx();
  for (std::size_t flat = 0; flat < g.size(); ++flat) {
    double r2 = 0.0;
    for (int ax = 0; ax < g.d; ++ax) {
      double x = idx[ax] * dx;
      if (x > 0.5 * g.L) x -= g.L;
      r2 += x * x;
    }
    const double r = std::max(std::sqrt(r2), delta);
    samples[flat] = std::pow(r, -a);
    for (int ax = g.d - 1; ax >= 0; --ax) {
      if (++idx[ax] < g.n) break;
      idx[ax] = 0;
    }
  }
  Potential out;
  out.field = analyze(g, samples);
  out.family = potential_family::power_law;
  out.r = a > 0.0 ? g.d / a : std::numeric_limits<double>::infinity();
  out.a = a;
  out.delta = delta;
  return out;
}

Field shell_data(const Grid& g, double N, double gamma) {
  return field_from_profile(g, shell_profile(N, gamma, g.d));
}

Field log_shell_data(const Grid& g, double M) {
  require(M >= 4.0, "log shell needs M >= 4");
  return field_from_profile(g, log_shell_profile(M, g.d));
}

Field box_data(const Grid& g, double Lp, double gamma) {
  AxisBand band{0.5 * Lp, 2.0 * Lp};
  require(band.support_hi() < g.max_xi_axis(), "data band exceeds the lattice");
  const double amp = std::pow(Lp, -0.5 * g.d - gamma);
  return from_spectral_profile(g, [&](const double* xi) -> cplx {
    double v = amp;
    for (int a = 0; a < g.d; ++a) v *= band.eval(xi[a]);
    return v;
  });
}

namespace {

// l1 mass fraction in the outer 1/8-per-axis boundary band
double boundary_mass_fraction(const Field& f) {
  const auto phys = synthesize(f);
  const Grid& g = f.grid;
  double total = 0.0, band = 0.0;
  int idx[5] = {0, 0, 0, 0, 0};
  for (std::size_t flat = 0; flat < g.size(); ++flat) {
    bool near = false;
    for (int ax = 0; ax < g.d; ++ax) {
      double x = idx[ax] * g.dx();
      if (x > 0.5 * g.L) x -= g.L;
      if (std::abs(x) >= 0.375 * g.L) near = true;
    }
    const double m = std::abs(phys[flat]);
    total += m;
    if (near) band += m;
    for (int ax = g.d - 1; ax >= 0; --ax) {
      if (++idx[ax] < g.n) break;
      idx[ax] = 0;
    }
  }
  return total > 0.0 ? band / total : 0.0;
}

}  // namespace

Potential rescale_potential(const Potential& eta, double lambda) {
  require(lambda > 0.0, "lambda must be positive");
  const Grid& g = eta.field.grid;
  if (lambda == 1.0) return eta;
  require(boundary_mass_fraction(eta.field) <= 0.01,
          "support overflow: potential mass near the torus boundary");

  // Collect the occupied spectrum once; evaluation below is exact for
  // band-limited eta and needs no wrapping (lattice exponentials are
  // L-periodic already).
  struct Mode { double xi[5]; cplx c; };
  std::vector<Mode> modes;
  const double h = g.freq_step();
  for_each_mode(g, [&](std::size_t flat, const int* k) {
    const cplx c = eta.field.coeffs[flat];
    if (c == cplx(0.0, 0.0)) return;
    Mode m;
    for (int a = 0; a < g.d; ++a) m.xi[a] = h * k[a];
    m.c = c;
    modes.push_back(m);
  });

  const double amp = lambda * lambda * std::pow(g.L, -g.d);
  std::vector<cplx> samples(g.size());
  std::vector<double> xpts(static_cast<std::size_t>(g.n));
  for (int j = 0; j < g.n; ++j) {
    double x = j * g.dx();
    if (x > 0.5 * g.L) x -= g.L;
    xpts[static_cast<std::size_t>(j)] = lambda * x;
  }
  parallel_chunks(g.size(), [&](std::size_t, std::size_t begin, std::size_t end) {
    int idx[5];
    for (std::size_t flat = begin; flat < end; ++flat) {
      std::size_t rem = flat;
      for (int ax = g.d - 1; ax >= 0; --ax) {
        idx[ax] = static_cast<int>(rem % g.n);
        rem /= g.n;
      }
      cplx acc(0.0, 0.0);
      for (const auto& m : modes) {
        double phase = 0.0;
        for (int ax = 0; ax < g.d; ++ax) phase += xpts[idx[ax]] * m.xi[ax];
        acc += m.c * std::polar(1.0, phase);
      }
      samples[flat] = amp * acc;
    }
  });

  Potential out = eta;
  out.field = analyze(g, samples);
  require(boundary_mass_fraction(out.field) <= 0.01,
          "support overflow: rescaled potential leaks to the torus boundary");
  return out;
}

Potential load_custom_potential(const Grid& g, const std::string& path) {
  std::ifstream in(path);
  require(in.good(), "cannot open potential file: " + path);
  Field f(g);
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    int k[5];
    double re, im;
    for (int a = 0; a < g.d; ++a)
      require(static_cast<bool>(ss >> k[a]), "bad frequency tuple at line " + std::to_string(lineno));
    require(static_cast<bool>(ss >> re >> im), "bad coefficient at line " + std::to_string(lineno));
    std::size_t flat = 0;
    for (int a = 0; a < g.d; ++a) {
      require(k[a] >= -g.n / 2 && k[a] < g.n / 2, "frequency index outside lattice");
      const int kk = k[a] < 0 ? k[a] + g.n : k[a];
      flat = flat * static_cast<std::size_t>(g.n) + static_cast<std::size_t>(kk);
    }
    f.coeffs[flat] = cplx(re, im);
  }
  Potential out;
  out.field = std::move(f);
  out.family = potential_family::custom;
  return out;
}

}  // namespace rpot
