#pragma once

#include <map>
#include <string>
#include <vector>

#include "roughpot/duhamel.hpp"
#include "roughpot/norms.hpp"

namespace rpot {

enum class experiment_tag {
  supercritical,
  subcritical,
  critical_log,
  aniso_h2plus,
  conjecture_d2r1,   // exploratory d=2, r=1 sweep; never asserted
  series_convergence,
  identity_suite,
  regularity_probe,
  strichartz,
};

std::string tag_name(experiment_tag t);

struct SweepConfig {
  experiment_tag tag = experiment_tag::supercritical;
  int d = 3;
  double r = 1.0;
  double gamma = 1.0;
  double K0 = 128.0;        // potential/data scale coupling M = K0 N
  std::vector<double> sweep;
  double data_scale = 4.0;  // fixed N (subcritical) or L (aniso box data)
  double bandwidth = 2.0;   // aniso box width N
  double h = 1.0;           // virtual lattice step
  double h_over_N = 2.0;    // supercritical: h scales with the data shell
  double eta_scale = 1.0;   // scalar multiple applied to the potential
  // dense-instance parameters
  int n = 16;
  double L = two_pi;
  double T = 0.0;           // 0 = derive from N0
  int K = 512;
  double N0 = 8.0;
  double M0 = 4.0;
  int terms = 8;
  double alpha = 1.0;
  double s = 0.0;
  double eps0 = 0.05;
  int count = 100;          // strichartz samples
  double q_exp = 2.0, p_exp = 6.0;
  int time_nodes = 129;     // separable path quadrature nodes
  bool separable = false;
  double eta_M = 2.0;       // dense bump potential scale
  double a_pow = 1.0;       // power-law exponent (probe)
  std::uint64_t seed = 1;
  double expected_slope = 0.0;
  bool has_expected = false;
};

// Strict parse: unknown keys are rejected; "experiment" must match `tag`
// when present. Fills tag-dependent defaults and the expected exponent.
SweepConfig parse_config(experiment_tag tag, const std::string& json_text);
SweepConfig default_config(experiment_tag tag);

struct InflateRow {
  double sweep_value = 0.0;
  double t = 0.0;
  double full_norm = 0.0;
  double omega_norm = 0.0;
  double min_re = 0.0;
  double sin_min = 0.0;
};

struct InflateReport {
  SweepConfig cfg;
  std::vector<InflateRow> rows;
  FitResult fit;           // on (sweep_value, full_norm); skipped for critical_log
  bool fitted = false;
  bool monotone = false;   // critical_log: full_norm strictly increasing
  bool positivity = false; // min_re > 0 at every sweep point
  bool pass = true;
  std::vector<std::string> failures;
};

InflateReport run_inflation_sweep(const SweepConfig& cfg);

struct ConvergeReport {
  SweepConfig cfg;
  std::vector<double> term_norms;
  double q = 0.0;                 // measured contraction
  double log2_slope = 0.0;        // fit of log2 ||I_n|| vs n
  double oracle_error = 0.0;      // ||S_N - v(T)||_{H^s}
  bool oracle_used = false;       // dense oracle vs doubled-term fallback
  double T = 0.0;
  bool pass = true;
  std::vector<std::string> failures;
};

ConvergeReport run_series_convergence(const SweepConfig& cfg);

struct IdentityRow {
  std::string name;   // lemma43, a1, a2_n2k0, a3_n1, ...
  int K = 0;
  double residual = 0.0;
  bool eta_zero = false;
};

struct IdentityReport {
  SweepConfig cfg;
  std::vector<IdentityRow> rows;
  std::map<std::string, double> orders;  // fitted refinement order per identity
  bool pass = true;
  std::vector<std::string> failures;
};

IdentityReport run_identity_suite(const SweepConfig& cfg);

struct ProbeRow {
  double N = 0.0;
  double tail = 0.0;   // ||P_{>=N} u(T)||_{L^2}
};

struct ProbeReport {
  SweepConfig cfg;
  std::vector<ProbeRow> rows;
  double tail_slope = 0.0;
  bool tail_fitted = false;
  double h_gamma_star = 0.0, h_gamma_star_fine = 0.0;
  double h_above = 0.0, h_above_fine = 0.0;
  double gamma_star = 0.0;
};

ProbeReport run_regularity_probe(const SweepConfig& cfg);

// || e^{it Delta} f ||_{L^q L^p([0,T])} / || f ||_{L^2}
double strichartz_ratio(const Field& f, double q, double p, double T, int K);

struct StrichartzReport {
  SweepConfig cfg;
  std::vector<double> band_mean;   // mean ratio per frequency band
  double max_ratio = 0.0;
  double band_spread = 0.0;        // max band mean / min band mean
  bool pass = true;
  std::vector<std::string> failures;
};

StrichartzReport run_strichartz(const SweepConfig& cfg);

// shortest round-trip decimal
std::string format_double(double v);

// results.csv + summary.json; returns the process exit code (0 pass,
// 2 tolerance failure).
int write_outputs(const InflateReport& rep, const std::string& out_dir);
int write_outputs(const ConvergeReport& rep, const std::string& out_dir);
int write_outputs(const IdentityReport& rep, const std::string& out_dir);
int write_outputs(const ProbeReport& rep, const std::string& out_dir);
int write_outputs(const StrichartzReport& rep, const std::string& out_dir);

}  // namespace rpot
