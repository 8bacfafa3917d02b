#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "roughpot/common.hpp"

// Flat-array arithmetic kernels behind the spectral operators and the
// bilinear sweep engine. Each kernel has a scalar reference implementation
// and an AVX2+FMA variant; the backend is picked once at startup from
// cpuid and can be forced (tests compare the two for equivalence).

namespace rpot::kernels {

enum class backend { scalar, avx2 };

backend active_backend();
void force_backend(backend b);   // throws if unavailable
void reset_backend();            // back to auto-detected
std::string backend_name();

// out[i] = a[i] * b[i] (complex)
void cmul(const cplx* a, const cplx* b, cplx* out, std::size_t n);

// y[i] += alpha * x[i] (complex)
void caxpy(cplx alpha, const cplx* x, cplx* y, std::size_t n);

// sum_i w[i] * |z[i]|^2
double wnorm2(const double* w, const cplx* z, std::size_t n);

// sum_i |z[i]|^2
double norm2(const cplx* z, std::size_t n);

// Inner loop of the radial bilinear engine: given lattice points p (d
// int32 coordinates each, d in {1,2,3}) on a data shell and an output
// point c, accumulate sum_i table[ |c - p_i|^2 ], where table is a radial
// profile indexed by squared integer distance. Points whose squared
// distance falls outside [0, table_len) contribute zero.
double shell_profile_sum(const std::int32_t* pts, std::size_t npts, int d,
                         const std::int32_t* c, const double* table,
                         std::size_t table_len);

namespace detail {
void cmul_scalar(const cplx*, const cplx*, cplx*, std::size_t);
void caxpy_scalar(cplx, const cplx*, cplx*, std::size_t);
double wnorm2_scalar(const double*, const cplx*, std::size_t);
double norm2_scalar(const cplx*, std::size_t);
double shell_profile_sum_scalar(const std::int32_t*, std::size_t, int,
                                const std::int32_t*, const double*, std::size_t);
#ifdef RP_BUILD_AVX2
void cmul_avx2(const cplx*, const cplx*, cplx*, std::size_t);
void caxpy_avx2(cplx, const cplx*, cplx*, std::size_t);
double wnorm2_avx2(const double*, const cplx*, std::size_t);
double norm2_avx2(const cplx*, std::size_t);
double shell_profile_sum_avx2(const std::int32_t*, std::size_t, int,
                              const std::int32_t*, const double*, std::size_t);
#endif
}  // namespace detail

}  // namespace rpot::kernels
