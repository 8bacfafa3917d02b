#include "roughpot/kernels.hpp"

namespace rpot::kernels::detail {

void cmul_scalar(const cplx* a, const cplx* b, cplx* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] * b[i];
}

void caxpy_scalar(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

double wnorm2_scalar(const double* w, const cplx* z, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    acc += w[i] * (z[i].real() * z[i].real() + z[i].imag() * z[i].imag());
  return acc;
}

double norm2_scalar(const cplx* z, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    acc += z[i].real() * z[i].real() + z[i].imag() * z[i].imag();
  return acc;
}

double shell_profile_sum_scalar(const std::int32_t* pts, std::size_t npts, int d,
                                const std::int32_t* c, const double* table,
                                std::size_t table_len) {
  double acc = 0.0;
  for (std::size_t i = 0; i < npts; ++i) {
    std::int64_t q2 = 0;
    for (int a = 0; a < d; ++a) {
      const std::int64_t diff = static_cast<std::int64_t>(c[a]) - pts[i * d + a];
      q2 += diff * diff;
    }
    if (q2 < static_cast<std::int64_t>(table_len)) acc += table[q2];
  }
  return acc;
}

}  // namespace rpot::kernels::detail
