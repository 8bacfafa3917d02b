#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rpot {

using cplx = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double two_pi = 2.0 * pi;

// Error category for contract violations (bad arguments, unsupported grids).
struct domain_error : std::runtime_error {
  explicit domain_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised when a fixed-point iteration fails to contract (see reconstruct_from_v).
struct no_convergence_error : std::runtime_error {
  explicit no_convergence_error(const std::string& msg) : std::runtime_error(msg) {}
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw domain_error(msg);
}

inline bool is_pow2(long v) { return v > 0 && (v & (v - 1)) == 0; }

// Global worker count for parallel loops; set once from the CLI --threads flag.
int thread_count();
void set_thread_count(int n);

// Chunked parallel loop. Chunk boundaries depend only on `n`, never on the
// worker count, so per-chunk partial results can be reduced in index order
// and every run produces bit-identical sums.
void parallel_chunks(std::size_t n, const std::function<void(std::size_t chunk, std::size_t begin, std::size_t end)>& fn);
std::size_t chunk_count(std::size_t n);

// One task per item, for coarse-grained work (e.g. lattice slabs). Callers
// keep one partial per item, so reduction order stays deterministic.
void parallel_items(std::size_t n, const std::function<void(std::size_t item)>& fn);

// splitmix64: cheap deterministic stream derivation for per-task seeds.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace rpot
