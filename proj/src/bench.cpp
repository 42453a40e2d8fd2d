#include "foldsafe/bench.hpp"

#include <chrono>
#include <cstdio>

#ifdef __GLIBC__
#include <malloc.h>
#endif

#include "foldsafe/error.hpp"
#include "foldsafe/generate.hpp"
#include "foldsafe/safe_region.hpp"

namespace foldsafe {

const char* to_string(BenchAlgorithm algorithm) {
  return algorithm == BenchAlgorithm::Scan ? "scan" : "naive";
}

BenchAlgorithm parse_bench_algorithm(const std::string& name) {
  if (name == "scan") return BenchAlgorithm::Scan;
  if (name == "naive") return BenchAlgorithm::Naive;
  throw Error(ErrorCode::InvalidArgument, "unknown algorithm '" + name + "' (scan|naive)");
}

namespace {

// Keep freed blocks inside the process. Otherwise glibc hands large result
// buffers back to the kernel after every trial and the timings pick up
// fresh page faults whose cost depends on allocator thresholds, not on n.
void retain_freed_memory() {
#ifdef __GLIBC__
  static const bool once = [] {
    mallopt(M_MMAP_THRESHOLD, 1 << 30);
    mallopt(M_TRIM_THRESHOLD, 1 << 30);
    return true;
  }();
  (void)once;
#endif
}

SafeRegion run_once(const ConvexPolygon& poly, Point focus, BenchAlgorithm algorithm) {
  return algorithm == BenchAlgorithm::Scan ? compute_safe_region(poly, focus)
                                           : compute_safe_region_naive(poly, focus);
}

}  // namespace

std::vector<BenchRecord> run_bench(const std::vector<int>& sizes, int trials, BenchAlgorithm algorithm) {
  if (trials < 1) throw Error(ErrorCode::InvalidArgument, "trials must be positive");
  for (int n : sizes)
    if (n < 3) throw Error(ErrorCode::InvalidArgument, "bench sizes must be at least 3");
  retain_freed_memory();
  std::vector<BenchRecord> records;
  for (int n : sizes) {
    const ConvexPolygon poly = regular_polygon(n);
    const Point focus{0.25, 0.1};
    // Untimed warm-up for the scan; one naive run at large n is already long.
    std::size_t sink = algorithm == BenchAlgorithm::Scan ? run_once(poly, focus, algorithm).size() : 0;
    const auto start = std::chrono::steady_clock::now();
    for (int t = 0; t < trials; ++t) sink += run_once(poly, focus, algorithm).size();
    const auto elapsed = std::chrono::steady_clock::now() - start;
    if (sink == 0) throw Error(ErrorCode::InternalInvariantViolation, "empty benchmark result");
    const double ns = std::chrono::duration<double, std::nano>(elapsed).count();
    records.push_back({n, trials, ns / trials, algorithm});
  }
  return records;
}

std::string bench_to_csv(const std::vector<BenchRecord>& records) {
  std::string out = "algorithm,n,trials,mean_ns\n";
  char line[128];
  for (const BenchRecord& r : records) {
    std::snprintf(line, sizeof line, "%s,%d,%d,%.1f\n", to_string(r.algorithm), r.n, r.trials, r.mean_ns);
    out += line;
  }
  return out;
}

}  // namespace foldsafe
