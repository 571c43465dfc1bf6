#include "prefix_sort/bench.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

#include "prefix_sort/bounds.hpp"

namespace prefix_sort {

Rng::Rng(uint64_t seed) : state(seed ? seed : 0x9E3779B97F4A7C15ULL) {}

uint64_t Rng::next() {
  state ^= state >> 12;
  state ^= state << 25;
  state ^= state >> 27;
  return state * 2685821657736338717ULL;
}

uint64_t mix64(uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

uint64_t trial_seed(uint64_t master_seed, int size, int trial) {
  return master_seed ^ mix64(static_cast<uint64_t>(size) *
                                 0x9E3779B97F4A7C15ULL +
                             static_cast<uint64_t>(trial));
}

Permutation random_permutation(int n, Rng& rng) {
  if (n < 0) {
    raise(ErrorCode::PreconditionViolated, "negative size");
  }
  std::vector<int> middle(static_cast<size_t>(n));
  for (int v = 1; v <= n; ++v) middle[static_cast<size_t>(v - 1)] = v;
  for (int i = n; i >= 2; --i) {
    const uint64_t j = rng.next() % static_cast<uint64_t>(i);
    std::swap(middle[static_cast<size_t>(i - 1)], middle[j]);
  }
  return make_permutation(middle);
}

namespace {

int breakpoints_for(Algo algo, const Permutation& p) {
  return algo == Algo::FM3 ? breakpoints_fm(p, 0) : breakpoints_std(p);
}

int lower_bound_for(Algo algo, int b) {
  return algo == Algo::FM3 ? lower_bound_fm(b) : lower_bound_std(b);
}

std::vector<BenchSummary> summarize(const std::vector<BenchRow>& rows,
                                    const std::vector<int>& sizes,
                                    const std::vector<Algo>& algos) {
  std::vector<BenchSummary> summary;
  for (const int size : sizes) {
    for (const Algo algo : algos) {
      BenchSummary s;
      s.size = size;
      s.algo = algo;
      double sum = 0.0;
      for (const BenchRow& row : rows) {
        if (row.size != size || row.algo != algo) continue;
        if (s.count == 0) {
          s.min_ratio = s.max_ratio = row.ratio;
        } else {
          s.min_ratio = std::min(s.min_ratio, row.ratio);
          s.max_ratio = std::max(s.max_ratio, row.ratio);
        }
        sum += row.ratio;
        ++s.count;
      }
      if (s.count == 0) continue;
      s.mean_ratio = sum / s.count;
      summary.push_back(s);
    }
  }
  return summary;
}

}  // namespace

ExperimentReport run_bench(const BenchConfig& config, int threads) {
  if (config.samples < 1) {
    raise(ErrorCode::PreconditionViolated, "need at least one sample");
  }
  for (const int size : config.sizes) {
    if (size < 2) {
      raise(ErrorCode::PreconditionViolated,
            "benchmark sizes must be at least 2");
    }
  }
  if (threads < 1) threads = 1;
  ExperimentReport report;
  report.config = config;
  const size_t n_sizes = config.sizes.size();
  const size_t n_algos = config.algos.size();
  const size_t samples = static_cast<size_t>(config.samples);
  const size_t tasks = n_sizes * samples;
  report.rows.assign(tasks * n_algos, BenchRow{});

  std::atomic<size_t> next_task{0};
  auto worker = [&]() {
    for (size_t task = next_task.fetch_add(1); task < tasks;
         task = next_task.fetch_add(1)) {
      const size_t size_idx = task / samples;
      const int trial = static_cast<int>(task % samples);
      const int size = config.sizes[size_idx];
      const uint64_t seed = trial_seed(config.seed, size, trial);
      Rng rng(seed);
      const Permutation perm = random_permutation(size, rng);
      for (size_t ai = 0; ai < n_algos; ++ai) {
        const Algo algo = config.algos[ai];
        BenchRow row;
        row.size = size;
        row.trial = trial;
        row.seed = seed;
        row.algo = algo;
        row.ops = sort_with(algo, perm).total_ops();
        row.breakpoints = breakpoints_for(algo, perm);
        row.lower_bound = lower_bound_for(algo, row.breakpoints);
        row.ratio = row.ops != 0
                        ? static_cast<double>(row.ops) / row.lower_bound
                        : 1.0;
        report.rows[task * n_algos + ai] = row;
      }
    }
  };

  if (threads == 1 || tasks <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    const size_t count = std::min(static_cast<size_t>(threads), tasks);
    pool.reserve(count);
    for (size_t t = 0; t < count; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  report.summary = summarize(report.rows, config.sizes, config.algos);
  return report;
}

std::string csv_string(const ExperimentReport& report) {
  std::string out = "size,trial,seed,algo,ops,breakpoints,lower_bound,ratio\n";
  char ratio_buf[32];
  for (const BenchRow& row : report.rows) {
    std::snprintf(ratio_buf, sizeof ratio_buf, "%.6f", row.ratio);
    out += std::to_string(row.size) + "," + std::to_string(row.trial) + "," +
           std::to_string(row.seed) + "," + algo_name(row.algo) + "," +
           std::to_string(row.ops) + "," + std::to_string(row.breakpoints) +
           "," + std::to_string(row.lower_bound) + "," + ratio_buf + "\n";
  }
  return out;
}

void write_csv(const ExperimentReport& report, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    raise(ErrorCode::IoError, "cannot open '" + path + "' for writing");
  }
  out << csv_string(report);
  if (!out) {
    raise(ErrorCode::IoError, "short write to '" + path + "'");
  }
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  size_t start = 0;
  while (true) {
    const size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

template <typename T>
T parse_number(const std::string& field, int line_no) {
  T value{};
  const char* first = field.data();
  const char* last = first + field.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    raise(ErrorCode::IoError, "line " + std::to_string(line_no) +
                                  ": bad number '" + field + "'");
  }
  return value;
}

}  // namespace

ExperimentReport parse_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    raise(ErrorCode::IoError, "cannot open '" + path + "'");
  }
  std::string line;
  if (!std::getline(in, line) ||
      line != "size,trial,seed,algo,ops,breakpoints,lower_bound,ratio") {
    raise(ErrorCode::IoError, "'" + path + "' has no benchmark header");
  }
  ExperimentReport report;
  report.config.sizes.clear();
  report.config.algos.clear();
  report.config.samples = 0;
  report.config.seed = 0;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const std::vector<std::string> fields = split_csv_line(line);
    if (fields.size() != 8) {
      raise(ErrorCode::IoError, "line " + std::to_string(line_no) +
                                    ": expected 8 fields, got " +
                                    std::to_string(fields.size()));
    }
    BenchRow row;
    row.size = parse_number<int>(fields[0], line_no);
    row.trial = parse_number<int>(fields[1], line_no);
    row.seed = parse_number<uint64_t>(fields[2], line_no);
    row.algo = algo_from_name(fields[3]);
    row.ops = parse_number<int>(fields[4], line_no);
    row.breakpoints = parse_number<int>(fields[5], line_no);
    row.lower_bound = parse_number<int>(fields[6], line_no);
    try {
      row.ratio = std::stod(fields[7]);
    } catch (const std::exception&) {
      raise(ErrorCode::IoError, "line " + std::to_string(line_no) +
                                    ": bad ratio '" + fields[7] + "'");
    }
    report.rows.push_back(row);
    if (std::find(report.config.sizes.begin(), report.config.sizes.end(),
                  row.size) == report.config.sizes.end()) {
      report.config.sizes.push_back(row.size);
    }
    if (std::find(report.config.algos.begin(), report.config.algos.end(),
                  row.algo) == report.config.algos.end()) {
      report.config.algos.push_back(row.algo);
    }
    report.config.samples = std::max(report.config.samples, row.trial + 1);
  }
  report.summary =
      summarize(report.rows, report.config.sizes, report.config.algos);
  return report;
}

VerifyReport run_verify(int n_max, OpSet opset, Algo algo) {
  if (n_max > 8) {
    raise(ErrorCode::SizeTooLarge,
          "exhaustive verification supports n up to 8, got " +
              std::to_string(n_max));
  }
  VerifyReport report;
  report.n_max = n_max;
  report.opset = opset;
  report.algo = algo;
  const int cap = algo == Algo::RT2 ? 2 : 3;
  double sum = 0.0;
  for (int n = 2; n <= n_max; ++n) {
    const DistanceTable table = distance_table(n, opset);
    const uint64_t states = static_cast<uint64_t>(table.dist.size());
    for (uint64_t rank = 0; rank < states; ++rank) {
      const int d = table.dist[static_cast<size_t>(rank)];
      if (d == 0) continue;
      const Permutation perm = permutation_of_rank(n, rank);
      const int ops = sort_with(algo, perm).total_ops();
      const double ratio = static_cast<double>(ops) / d;
      sum += ratio;
      report.max_ratio = std::max(report.max_ratio, ratio);
      ++report.states_checked;
      if (ops > cap * d) {
        report.violations.push_back("n=" + std::to_string(n) + " perm=" +
                                    to_text(perm) + " ops=" +
                                    std::to_string(ops) + " dist=" +
                                    std::to_string(d));
      }
    }
  }
  report.mean_ratio =
      report.states_checked > 0 ? sum / report.states_checked : 0.0;
  return report;
}

}  // namespace prefix_sort
