#pragma once

#include <string>
#include <vector>

namespace foldsafe {

enum class BenchAlgorithm { Scan, Naive };

struct BenchRecord {
  int n = 0;
  int trials = 0;
  double mean_ns = 0.0;
  BenchAlgorithm algorithm = BenchAlgorithm::Scan;
};

const char* to_string(BenchAlgorithm algorithm);
BenchAlgorithm parse_bench_algorithm(const std::string& name);

// Times safe-region construction on regular n-gons (circumradius 1, focus
// off-centre at (0.25, 0.1)). Polygon validation and one warm-up run are
// outside the timed span.
std::vector<BenchRecord> run_bench(const std::vector<int>& sizes, int trials, BenchAlgorithm algorithm);

// "algorithm,n,trials,mean_ns" header plus one row per record.
std::string bench_to_csv(const std::vector<BenchRecord>& records);

}  // namespace foldsafe
