#include "roughpot/kernels.hpp"

#include <atomic>
#include <thread>

namespace rpot {

namespace {
std::atomic<int> g_threads{0};
}

int thread_count() {
  int t = g_threads.load();
  if (t > 0) return t;
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

void set_thread_count(int n) { g_threads.store(n > 0 ? n : 0); }

std::size_t chunk_count(std::size_t n) {
  // Fixed chunk size keeps reductions independent of the worker count.
  constexpr std::size_t chunk = 16384;
  return n == 0 ? 0 : (n + chunk - 1) / chunk;
}

void parallel_chunks(std::size_t n,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& fn) {
  if (n == 0) return;
  constexpr std::size_t chunk = 16384;
  const std::size_t nchunks = chunk_count(n);
  const int workers = std::min<int>(thread_count(), static_cast<int>(nchunks));
  if (workers <= 1) {
    for (std::size_t ci = 0; ci < nchunks; ++ci)
      fn(ci, ci * chunk, std::min(n, (ci + 1) * chunk));
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t ci = next.fetch_add(1);
      if (ci >= nchunks) break;
      fn(ci, ci * chunk, std::min(n, (ci + 1) * chunk));
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (int i = 1; i < workers; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
}

void parallel_items(std::size_t n, const std::function<void(std::size_t)>& fn) {
  if (n == 0) return;
  const int workers = std::min<int>(thread_count(), static_cast<int>(n));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) break;
      fn(i);
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (int i = 1; i < workers; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
}

}  // namespace rpot

namespace rpot::kernels {

namespace {

backend detect() {
#ifdef RP_BUILD_AVX2
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma"))
    return backend::avx2;
#endif
  return backend::scalar;
}

std::atomic<backend> g_backend{detect()};

}  // namespace

backend active_backend() { return g_backend.load(); }

void force_backend(backend b) {
#ifndef RP_BUILD_AVX2
  require(b == backend::scalar, "avx2 backend not built");
#else
  if (b == backend::avx2)
    require(__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma"),
            "avx2 not supported on this cpu");
#endif
  g_backend.store(b);
}

void reset_backend() { g_backend.store(detect()); }

std::string backend_name() {
  return active_backend() == backend::avx2 ? "avx2" : "scalar";
}

void cmul(const cplx* a, const cplx* b, cplx* out, std::size_t n) {
#ifdef RP_BUILD_AVX2
  if (active_backend() == backend::avx2) return detail::cmul_avx2(a, b, out, n);
#endif
  detail::cmul_scalar(a, b, out, n);
}

void caxpy(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
#ifdef RP_BUILD_AVX2
  if (active_backend() == backend::avx2) return detail::caxpy_avx2(alpha, x, y, n);
#endif
  detail::caxpy_scalar(alpha, x, y, n);
}

double wnorm2(const double* w, const cplx* z, std::size_t n) {
#ifdef RP_BUILD_AVX2
  if (active_backend() == backend::avx2) return detail::wnorm2_avx2(w, z, n);
#endif
  return detail::wnorm2_scalar(w, z, n);
}

double norm2(const cplx* z, std::size_t n) {
#ifdef RP_BUILD_AVX2
  if (active_backend() == backend::avx2) return detail::norm2_avx2(z, n);
#endif
  return detail::norm2_scalar(z, n);
}

double shell_profile_sum(const std::int32_t* pts, std::size_t npts, int d,
                         const std::int32_t* c, const double* table,
                         std::size_t table_len) {
#ifdef RP_BUILD_AVX2
  if (active_backend() == backend::avx2 && (d == 2 || d == 3))
    return detail::shell_profile_sum_avx2(pts, npts, d, c, table, table_len);
#endif
  return detail::shell_profile_sum_scalar(pts, npts, d, c, table, table_len);
}

}  // namespace rpot::kernels
