#include "roughpot/kernels.hpp"

#ifdef RP_BUILD_AVX2
#include <immintrin.h>

namespace rpot::kernels::detail {

// Complex arrays are interleaved (re, im). One __m256d holds two complex
// doubles; the multiply uses the addsub/shuffle idiom.
static inline __m256d cmul2(__m256d a, __m256d b) {
  __m256d a_re = _mm256_unpacklo_pd(a, a);            // (ar0 ar0 ar1 ar1)
  __m256d a_im = _mm256_unpackhi_pd(a, a);            // (ai0 ai0 ai1 ai1)
  __m256d b_sw = _mm256_shuffle_pd(b, b, 0x5);        // (bi0 br0 bi1 br1)
  return _mm256_fmaddsub_pd(a_re, b, _mm256_mul_pd(a_im, b_sw));
}

void cmul_avx2(const cplx* a, const cplx* b, cplx* out, std::size_t n) {
  const double* pa = reinterpret_cast<const double*>(a);
  const double* pb = reinterpret_cast<const double*>(b);
  double* po = reinterpret_cast<double*>(out);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d va = _mm256_loadu_pd(pa + 2 * i);
    __m256d vb = _mm256_loadu_pd(pb + 2 * i);
    _mm256_storeu_pd(po + 2 * i, cmul2(va, vb));
  }
  for (; i < n; ++i) out[i] = a[i] * b[i];
}

void caxpy_avx2(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
  const __m256d va = _mm256_setr_pd(alpha.real(), alpha.imag(), alpha.real(), alpha.imag());
  const double* px = reinterpret_cast<const double*>(x);
  double* py = reinterpret_cast<double*>(y);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d vx = _mm256_loadu_pd(px + 2 * i);
    __m256d vy = _mm256_loadu_pd(py + 2 * i);
    _mm256_storeu_pd(py + 2 * i, _mm256_add_pd(vy, cmul2(va, vx)));
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

double wnorm2_avx2(const double* w, const cplx* z, std::size_t n) {
  const double* pz = reinterpret_cast<const double*>(z);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d z0 = _mm256_loadu_pd(pz + 2 * i);      // re0 im0 re1 im1
    __m256d z1 = _mm256_loadu_pd(pz + 2 * i + 4);  // re2 im2 re3 im3
    __m256d m0 = _mm256_mul_pd(z0, z0);
    __m256d m1 = _mm256_mul_pd(z1, z1);
    // |z|^2 per element: hadd pairs within 128-bit lanes, then fix lane order.
    __m256d h = _mm256_hadd_pd(m0, m1);            // (n0 n2 n1 n3)
    __m256d mag = _mm256_permute4x64_pd(h, 0xD8);  // (n0 n1 n2 n3)
    __m256d vw = _mm256_loadu_pd(w + i);
    acc = _mm256_fmadd_pd(vw, mag, acc);
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double out = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; i < n; ++i)
    out += w[i] * (z[i].real() * z[i].real() + z[i].imag() * z[i].imag());
  return out;
}

double norm2_avx2(const cplx* z, std::size_t n) {
  const double* pz = reinterpret_cast<const double*>(z);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d v = _mm256_loadu_pd(pz + 2 * i);
    acc = _mm256_fmadd_pd(v, v, acc);
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double out = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; i < n; ++i)
    out += z[i].real() * z[i].real() + z[i].imag() * z[i].imag();
  return out;
}

double shell_profile_sum_avx2(const std::int32_t* pts, std::size_t npts, int d,
                              const std::int32_t* c, const double* table,
                              std::size_t table_len) {
  // 4 points per iteration: gather-free squared distances in int32, then a
  // masked gather from the radial table.
  const __m128i limit = _mm_set1_epi32(static_cast<int>(table_len));
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  if (d == 3) {
    const __m128i cx = _mm_set1_epi32(c[0]);
    const __m128i cy = _mm_set1_epi32(c[1]);
    const __m128i cz = _mm_set1_epi32(c[2]);
    for (; i + 4 <= npts; i += 4) {
      const std::int32_t* p = pts + 3 * i;
      __m128i x = _mm_setr_epi32(p[0], p[3], p[6], p[9]);
      __m128i y = _mm_setr_epi32(p[1], p[4], p[7], p[10]);
      __m128i z = _mm_setr_epi32(p[2], p[5], p[8], p[11]);
      __m128i dx = _mm_sub_epi32(cx, x);
      __m128i dy = _mm_sub_epi32(cy, y);
      __m128i dz = _mm_sub_epi32(cz, z);
      __m128i q2 = _mm_add_epi32(_mm_mullo_epi32(dx, dx),
                    _mm_add_epi32(_mm_mullo_epi32(dy, dy), _mm_mullo_epi32(dz, dz)));
      __m128i inside = _mm_cmplt_epi32(q2, limit);
      __m128i idx = _mm_and_si128(q2, inside);  // out-of-range lanes read table[0], masked out below
      __m256d mask = _mm256_castsi256_pd(_mm256_cvtepi32_epi64(inside));
      __m256d vals = _mm256_mask_i32gather_pd(_mm256_setzero_pd(), table, idx, mask, 8);
      acc = _mm256_add_pd(acc, vals);
    }
  } else if (d == 2) {
    const __m128i cx = _mm_set1_epi32(c[0]);
    const __m128i cy = _mm_set1_epi32(c[1]);
    for (; i + 4 <= npts; i += 4) {
      const std::int32_t* p = pts + 2 * i;
      __m128i x = _mm_setr_epi32(p[0], p[2], p[4], p[6]);
      __m128i y = _mm_setr_epi32(p[1], p[3], p[5], p[7]);
      __m128i dx = _mm_sub_epi32(cx, x);
      __m128i dy = _mm_sub_epi32(cy, y);
      __m128i q2 = _mm_add_epi32(_mm_mullo_epi32(dx, dx), _mm_mullo_epi32(dy, dy));
      __m128i inside = _mm_cmplt_epi32(q2, limit);
      __m128i idx = _mm_and_si128(q2, inside);
      __m256d mask = _mm256_castsi256_pd(_mm256_cvtepi32_epi64(inside));
      __m256d vals = _mm256_mask_i32gather_pd(_mm256_setzero_pd(), table, idx, mask, 8);
      acc = _mm256_add_pd(acc, vals);
    }
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double out = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  if (i < npts)
    out += shell_profile_sum_scalar(pts + i * d, npts - i, d, c, table, table_len);
  return out;
}

}  // namespace rpot::kernels::detail
#endif  // RP_BUILD_AVX2
