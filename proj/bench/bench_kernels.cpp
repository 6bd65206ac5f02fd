// Timing harness for the scan kernels: serial reference vs the OpenMP
// variants. Build with -DORIENT_OPENMP=OFF to force the fallback.

#include <chrono>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "orient/enumeration.hpp"
#include "orient/forbidden.hpp"

using namespace orient;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

template <class Fn>
double time_best_of(int reps, Fn&& fn) {
  double best = 1e18;
  for (int r = 0; r < reps; ++r) {
    auto t0 = Clock::now();
    fn();
    best = std::min(best, ms_since(t0));
  }
  return best;
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads: %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP disabled; parallel kernels run their serial bodies\n");
#endif
  std::printf("%-34s %12s %12s %8s\n", "kernel", "serial ms", "parallel ms", "speedup");

  // triangle member keeps the subset checks busy; the 7-vertex member
  // raises m_F so the full mask spaces at n = 6, 7 get scanned
  ForbiddenSet family({directed_triangle(), transitive_tournament(7)});
  for (int n : {6, 7}) {
    std::vector<std::uint32_t> serial_out, parallel_out;
    double s = time_best_of(3, [&] { serial_out = scan_free_masks_serial(family, n); });
    double p = time_best_of(3, [&] { parallel_out = scan_free_masks_parallel(family, n); });
    if (serial_out != parallel_out) {
      std::printf("kernel mismatch at n=%d\n", n);
      return 1;
    }
    std::printf("scan_free_masks {C3,T7} n=%d       %12.2f %12.2f %7.2fx\n", n, s, p, s / p);
  }

  {
    auto classes6 = enumerate_up_to_iso(6);
    std::vector<std::uint64_t> masks;
    for (const Tournament& t : classes6)
      for (std::uint64_t e = 0; e < 64; ++e) masks.push_back((t.bits << 6 | e) & low_mask(21));
    std::vector<std::uint64_t> a, b;
    double s = time_best_of(3, [&] { a = canonical_batch_serial(7, masks); });
    double p = time_best_of(3, [&] { b = canonical_batch_parallel(7, masks); });
    if (a != b) {
      std::printf("canonical kernel mismatch\n");
      return 1;
    }
    std::printf("canonical_batch n=7 (%5zu masks)  %12.2f %12.2f %7.2fx\n", masks.size(), s, p,
                s / p);
  }

  {
    auto classes = enumerate_up_to_iso(7);
    std::uint64_t a = 0, b = 0;
    double s = time_best_of(3, [&] { a = labeled_count_from_classes_serial(classes); });
    double p = time_best_of(3, [&] { b = labeled_count_from_classes_parallel(classes); });
    if (a != b || a != (std::uint64_t{1} << 21)) {
      std::printf("orbit count mismatch\n");
      return 1;
    }
    std::printf("orbit_count n=7 (456 classes)      %12.2f %12.2f %7.2fx\n", s, p, s / p);
  }
  return 0;
}
