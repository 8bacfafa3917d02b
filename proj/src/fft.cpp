#include "roughpot/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>

namespace rpot::fft {

namespace {

// FFTW planning is not thread-safe; execution through fftw_execute_dft is.
// Plans are created FFTW_UNALIGNED so they can run on any caller buffer.
std::mutex g_planner_mutex;

fftw_plan get_plan(const std::vector<int>& dims, int sign) {
  static std::map<std::pair<std::vector<int>, int>, fftw_plan> cache;
  std::lock_guard<std::mutex> lock(g_planner_mutex);
  auto key = std::make_pair(dims, sign);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::size_t total = 1;
  for (int n : dims) total *= static_cast<std::size_t>(n);
  std::vector<cplx> scratch(total);
  auto* ptr = reinterpret_cast<fftw_complex*>(scratch.data());
  fftw_plan plan = fftw_plan_dft(static_cast<int>(dims.size()),
                                 const_cast<int*>(dims.data()), ptr, ptr, sign,
                                 FFTW_ESTIMATE | FFTW_UNALIGNED);
  require(plan != nullptr, "fftw plan creation failed");
  cache.emplace(std::move(key), plan);
  return plan;
}

}  // namespace

void forward(const std::vector<int>& dims, cplx* data) {
  fftw_plan plan = get_plan(dims, FFTW_FORWARD);
  auto* ptr = reinterpret_cast<fftw_complex*>(data);
  fftw_execute_dft(plan, ptr, ptr);
}

void backward(const std::vector<int>& dims, cplx* data) {
  fftw_plan plan = get_plan(dims, FFTW_BACKWARD);
  auto* ptr = reinterpret_cast<fftw_complex*>(data);
  fftw_execute_dft(plan, ptr, ptr);
}

}  // namespace rpot::fft
