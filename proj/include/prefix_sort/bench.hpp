#pragma once
/**
 * @file bench.hpp
 * @brief Seeded random permutations, the benchmark harness, exhaustive
 *        ratio verification, and CSV output.
 */

#include <cstdint>
#include <string>
#include <vector>

#include "prefix_sort/exact.hpp"
#include "prefix_sort/sorters.hpp"

namespace prefix_sort {

// xorshift64*: x ^= x >> 12; x ^= x << 25; x ^= x >> 27; return x * M.
// A zero seed is replaced by 0x9E3779B97F4A7C15.
struct Rng {
  uint64_t state;

  explicit Rng(uint64_t seed);
  uint64_t next();
};

// splitmix64 finalizer, used to derive per-trial seeds.
uint64_t mix64(uint64_t x);
// master ^ mix64(size * 0x9E3779B97F4A7C15 + trial)
uint64_t trial_seed(uint64_t master_seed, int size, int trial);

// Fisher-Yates over 1..n driven by the given generator.
Permutation random_permutation(int n, Rng& rng);

struct BenchConfig {
  std::vector<int> sizes = {64, 256, 1024};
  int samples = 50;
  uint64_t seed = 1;
  std::vector<Algo> algos = {Algo::RT3, Algo::RT2, Algo::FM3};
};

struct BenchRow {
  int size = 0;
  int trial = 0;
  uint64_t seed = 0;  // the derived per-trial seed
  Algo algo = Algo::RT3;
  int ops = 0;
  int breakpoints = 0;  // under the algorithm's own convention
  int lower_bound = 0;
  double ratio = 0.0;   // ops / lower_bound; 1.0 when ops = 0
};

struct BenchSummary {
  int size = 0;
  Algo algo = Algo::RT3;
  int count = 0;
  double mean_ratio = 0.0;
  double min_ratio = 0.0;
  double max_ratio = 0.0;
};

struct ExperimentReport {
  BenchConfig config;
  std::vector<BenchRow> rows;        // ordered by (size, trial, algo)
  std::vector<BenchSummary> summary;  // ordered by (size, algo)
};

// Deterministic for a fixed config regardless of thread count: each row is
// derived only from its own trial seed and written to a pre-assigned slot.
ExperimentReport run_bench(const BenchConfig& config, int threads = 1);

// Header "size,trial,seed,algo,ops,breakpoints,lower_bound,ratio", LF line
// endings, ratios with 6 decimal digits.
std::string csv_string(const ExperimentReport& report);
void write_csv(const ExperimentReport& report, const std::string& path);
// Rebuilds a report (rows + summary) from CSV produced by csv_string.
ExperimentReport parse_csv_file(const std::string& path);

struct VerifyReport {
  int n_max = 0;
  OpSet opset;
  Algo algo = Algo::RT3;
  long states_checked = 0;
  double max_ratio = 0.0;
  double mean_ratio = 0.0;
  std::vector<std::string> violations;  // states whose ratio exceeds the cap
};

// Compares the algorithm against exact distances for every state with
// positive distance at each n <= n_max (n_max <= 8, SizeTooLarge above).
// The cap is 3 for RT3/FM3 and 2 for RT2.
VerifyReport run_verify(int n_max, OpSet opset, Algo algo);

}  // namespace prefix_sort
