#pragma once

#include <vector>

#include "roughpot/grid.hpp"
#include "roughpot/potentials.hpp"

namespace rpot {

// Two-parameter smallness of the critical case:
//   eps0(M0, N0) = ||P_{>=M0} eta||_{L^{d/2}} + (M0/N0)^beta ||eta||_{L^{d/2}},
// beta = 1/4 for the Strichartz-side bound, beta = 1 for the L^{d/2-} one.
double critical_smallness(const Potential& eta, double M0, double N0, double beta);

// Lifespan cap from the critical bookkeeping: largest T with
//   T^{1/q'-1/2} N0^{1-s} + T^{1/2} N0 <= 1,
// where (q,r) is the admissible pair of the critical argument and
// s = d/2 - 2 - eps. Solved by bisection.
double critical_time_cap(double N0, int d, double eps);

struct CriticalDecay {
  std::vector<double> term_norms;  // ||I_n(T)||_{H^s}
  double s = 0.0;
  double T = 0.0;
  double eps0 = 0.0;               // measured smallness at (M0, N0)
  double max_ratio = 0.0;          // max_n ||I_{n+1}|| / ||I_n||
};

// Picard decay measurement at the critical exponent r = d/2 with
// s = d/2 - 2 - eps (default eps = 0.05); T is capped by critical_time_cap.
CriticalDecay critical_picard_decay(const Potential& eta, const Field& v0, double M0,
                                    double N0, int terms, int time_steps,
                                    double eps = 0.05);

}  // namespace rpot
