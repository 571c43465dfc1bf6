#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "prefix_sort/bench.hpp"
#include "prefix_sort/bounds.hpp"
#include "prefix_sort/exact.hpp"
#include "prefix_sort/sorters.hpp"
#include "prefix_sort/svg.hpp"
#include "prefix_sort/trace_io.hpp"

namespace ps = prefix_sort;

namespace {

std::string fmt6(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  size_t start = 0;
  while (start <= text.size()) {
    const size_t comma = text.find(',', start);
    if (comma == std::string::npos) {
      out.push_back(text.substr(start));
      break;
    }
    out.push_back(text.substr(start, comma - start));
    start = comma + 1;
  }
  return out;
}

int parse_int_arg(const std::string& text, const std::string& flag) {
  try {
    size_t used = 0;
    const int v = std::stoi(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  ps::raise(ps::ErrorCode::UsageError,
            flag + " expects an integer, got '" + text + "'");
}

// "A..B" or a single "A".
std::pair<int, int> parse_range(const std::string& text,
                                const std::string& flag) {
  const size_t dots = text.find("..");
  if (dots == std::string::npos) {
    const int v = parse_int_arg(text, flag);
    return {v, v};
  }
  return {parse_int_arg(text.substr(0, dots), flag),
          parse_int_arg(text.substr(dots + 2), flag)};
}

ps::Permutation perm_from_text(const std::string& text) {
  return ps::make_permutation(ps::parse_values(text));
}

ps::Permutation perm_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    ps::raise(ps::ErrorCode::IoError, "cannot open '" + path + "'");
  }
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r\n") != std::string::npos) {
      return perm_from_text(line);
    }
  }
  ps::raise(ps::ErrorCode::IoError, "'" + path + "' has no values");
}

struct SortArgs {
  std::string algo;
  std::string perm_text;
  std::string input_path;
  std::string trace_path;
  bool dump_graph = false;
};

int cmd_sort(const SortArgs& args) {
  if (args.perm_text.empty() && args.input_path.empty()) {
    ps::raise(ps::ErrorCode::UsageError, "provide --perm or --input");
  }
  const ps::Permutation perm = args.perm_text.empty()
                                   ? perm_from_file(args.input_path)
                                   : perm_from_text(args.perm_text);
  const ps::Algo algo = ps::algo_from_name(args.algo);
  const ps::SortTrace trace = ps::sort_with(algo, perm);
  const int ops = trace.total_ops();
  const int b = algo == ps::Algo::FM3 ? ps::breakpoints_fm(perm, 0)
                                      : ps::breakpoints_std(perm);
  const int lb = algo == ps::Algo::FM3 ? ps::lower_bound_fm(b)
                                       : ps::lower_bound_std(b);
  const double ratio = ops != 0 ? static_cast<double>(ops) / lb : 1.0;
  std::cout << "ops=" << ops << " b=" << b << " lb=" << lb
            << " ratio=" << fmt6(ratio) << "\n";
  if (!args.trace_path.empty()) {
    std::ofstream out(args.trace_path);
    if (!out) {
      ps::raise(ps::ErrorCode::IoError,
                "cannot open '" + args.trace_path + "' for writing");
    }
    ps::write_trace_text(out, perm, trace.ops);
  }
  if (args.dump_graph) {
    if (algo == ps::Algo::FM3) {
      const ps::SorterState state =
          ps::make_sorter_state(perm, ps::Convention::ForwardMarch);
      std::cout << ps::dump_graph(ps::build_graph(
          state.perm, ps::Convention::ForwardMarch, state.cursor));
    } else {
      std::cout << ps::dump_graph(
          ps::build_graph(perm, ps::Convention::Standard, 0));
    }
  }
  return 0;
}

struct ReplayArgs {
  std::string trace_path;
  std::string perm_text;
};

int cmd_replay(const ReplayArgs& args) {
  const ps::ParsedTrace parsed = ps::parse_trace_file(args.trace_path);
  ps::Permutation perm;
  if (!args.perm_text.empty()) {
    perm = perm_from_text(args.perm_text);
  } else if (parsed.perm.has_value()) {
    perm = *parsed.perm;
  } else {
    ps::raise(ps::ErrorCode::UsageError,
              "trace has no permutation header, provide --perm");
  }
  const ps::Permutation result = ps::apply_ops(perm, parsed.ops);
  std::cout << "sorted=" << (ps::is_sorted(result) ? "true" : "false")
            << " ops=" << parsed.ops.size() << "\n";
  return 0;
}

struct ExactArgs {
  std::string perm_text;
  std::string opset = "rt";
  int table_n = -1;
  std::string out_path;
};

int cmd_exact(const ExactArgs& args) {
  const ps::OpSet opset = ps::OpSet::from_name(args.opset);
  if (args.perm_text.empty() == (args.table_n < 0)) {
    ps::raise(ps::ErrorCode::UsageError, "provide --perm or --table");
  }
  if (!args.perm_text.empty()) {
    const ps::Permutation perm = perm_from_text(args.perm_text);
    std::cout << "dist=" << ps::exact_distance(perm, opset)
              << " n=" << perm.n() << " opset=" << opset.name() << "\n";
    return 0;
  }
  const ps::DistanceTable table = ps::distance_table(args.table_n, opset);
  std::cout << "n=" << table.n << " opset=" << table.opset.name()
            << " states=" << table.dist.size()
            << " diameter=" << table.diameter();
  if (!args.out_path.empty()) {
    ps::write_table(table, args.out_path);
    std::cout << " out=" << args.out_path;
  }
  std::cout << "\n";
  return 0;
}

struct BoundsArgs {
  std::string algo;
  int b = 0;
  std::string r_range = "0..0";
};

int cmd_bounds(const BoundsArgs& args) {
  const ps::Algo algo = ps::algo_from_name(args.algo);
  const auto [r_from, r_to] = parse_range(args.r_range, "--r");
  const int r_cap = algo == ps::Algo::FM3 ? args.b / 2 : args.b;
  if (r_from < 0 || r_from > r_to || r_to > r_cap) {
    ps::raise(ps::ErrorCode::UsageError,
              "--r range " + args.r_range + " outside 0.." +
                  std::to_string(r_cap) + " for b = " +
                  std::to_string(args.b));
  }
  const ps::AdaptiveCurve curve = ps::adaptive_curve(algo, args.b, r_from,
                                                     r_to);
  for (const auto& [r, bound] : curve.points) {
    std::cout << "r=" << r << " bound=" << fmt6(bound.to_double())
              << " exact=" << bound.to_string() << "\n";
  }
  return 0;
}

struct VerifyArgs {
  int n_max = 0;
  std::string opset = "rt";
  std::string algo;
};

int cmd_verify(const VerifyArgs& args) {
  const ps::VerifyReport report = ps::run_verify(
      args.n_max, ps::OpSet::from_name(args.opset),
      ps::algo_from_name(args.algo));
  std::cout << "n_max=" << report.n_max << " opset=" << report.opset.name()
            << " algo=" << ps::algo_name(report.algo)
            << " states=" << report.states_checked
            << " max_ratio=" << fmt6(report.max_ratio)
            << " mean_ratio=" << fmt6(report.mean_ratio)
            << " violations=" << report.violations.size() << "\n";
  for (const std::string& v : report.violations) {
    std::cout << "violation " << v << "\n";
  }
  return report.violations.empty() ? 0 : 1;
}

struct BenchArgs {
  std::string sizes = "64,256,1024";
  int samples = 50;
  uint64_t seed = 1;
  std::string algos = "rt3,rt2,fm3";
  std::string out_path = "bench.csv";
  int threads = 1;
};

int cmd_bench(const BenchArgs& args) {
  ps::BenchConfig config;
  config.sizes.clear();
  for (const std::string& s : split_list(args.sizes)) {
    config.sizes.push_back(parse_int_arg(s, "--sizes"));
  }
  config.samples = args.samples;
  config.seed = args.seed;
  config.algos.clear();
  for (const std::string& a : split_list(args.algos)) {
    config.algos.push_back(ps::algo_from_name(a));
  }
  const ps::ExperimentReport report = ps::run_bench(config, args.threads);
  ps::write_csv(report, args.out_path);
  std::cout << "rows=" << report.rows.size() << " out=" << args.out_path
            << "\n";
  for (const ps::BenchSummary& s : report.summary) {
    std::cout << "size=" << s.size << " algo=" << ps::algo_name(s.algo)
              << " mean_ratio=" << fmt6(s.mean_ratio)
              << " min_ratio=" << fmt6(s.min_ratio)
              << " max_ratio=" << fmt6(s.max_ratio) << "\n";
  }
  return 0;
}

struct PlotArgs {
  std::string in_path;
  std::string out_path;
  std::string mode = "ratio";
  int b = -1;
};

int cmd_plot(const PlotArgs& args) {
  if (args.mode == "ratio") {
    if (args.in_path.empty()) {
      ps::raise(ps::ErrorCode::UsageError, "ratio mode needs --in");
    }
    ps::render_svg(ps::parse_csv_file(args.in_path), args.out_path);
    std::cout << "mode=ratio in=" << args.in_path << " out=" << args.out_path
              << "\n";
    return 0;
  }
  if (args.b < 0) {
    ps::raise(ps::ErrorCode::UsageError, "adaptive mode needs --b");
  }
  ps::render_adaptive_svg(args.b, args.out_path);
  std::cout << "mode=adaptive b=" << args.b << " out=" << args.out_path
            << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"prefix reversal / transposition sorting toolkit",
               "prefix-sort"};
  app.require_subcommand(1);

  SortArgs sort_args;
  CLI::App* sort_cmd =
      app.add_subcommand("sort", "sort a permutation and report the ratio");
  sort_cmd->add_option("--algo", sort_args.algo, "algorithm")
      ->required()
      ->check(CLI::IsMember({"rt3", "rt2", "fm3"}));
  CLI::Option* perm_opt =
      sort_cmd->add_option("--perm", sort_args.perm_text,
                           "space separated values, e.g. \"3 1 2\"");
  perm_opt->excludes(
      sort_cmd->add_option("--input", sort_args.input_path,
                           "file whose first non-empty line is the input"));
  CLI::Option* trace_opt =
      sort_cmd->add_option("--trace", sort_args.trace_path,
                           "write the op trace to this file");
  trace_opt->excludes(sort_cmd->add_flag(
      "--dump-graph", sort_args.dump_graph,
      "print the initial breakpoint graph after the metrics line"));

  ReplayArgs replay_args;
  CLI::App* replay_cmd =
      app.add_subcommand("replay", "re-apply a recorded trace");
  replay_cmd->add_option("--trace", replay_args.trace_path, "trace file")
      ->required();
  replay_cmd->add_option("--perm", replay_args.perm_text,
                         "start permutation (default: trace header)");

  ExactArgs exact_args;
  CLI::App* exact_cmd =
      app.add_subcommand("exact", "exhaustive distances and tables");
  exact_cmd->add_option("--perm", exact_args.perm_text,
                        "permutation to measure");
  exact_cmd->add_option("--opset", exact_args.opset, "r, rt, rtr, or all")
      ->capture_default_str();
  exact_cmd->add_option("--table", exact_args.table_n,
                        "build the full table for this size");
  exact_cmd->add_option("--out", exact_args.out_path,
                        "write the table to this file");

  BoundsArgs bounds_args;
  CLI::App* bounds_cmd =
      app.add_subcommand("bounds", "adaptive ratio bounds over a range of r");
  bounds_cmd->add_option("--algo", bounds_args.algo, "algorithm")
      ->required()
      ->check(CLI::IsMember({"rt3", "rt2", "fm3"}));
  bounds_cmd->add_option("--b", bounds_args.b, "breakpoint count")
      ->required();
  bounds_cmd->add_option("--r", bounds_args.r_range,
                         "reversal count or range, e.g. 3 or 0..5")
      ->required();

  VerifyArgs verify_args;
  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "compare an algorithm against exact distances");
  verify_cmd->add_option("--n-max", verify_args.n_max, "check all n up to this")
      ->required();
  verify_cmd->add_option("--opset", verify_args.opset, "r, rt, rtr, or all")
      ->capture_default_str();
  verify_cmd->add_option("--algo", verify_args.algo, "algorithm")
      ->required()
      ->check(CLI::IsMember({"rt3", "rt2", "fm3"}));

  BenchArgs bench_args;
  CLI::App* bench_cmd =
      app.add_subcommand("bench", "random benchmark, writes a CSV");
  bench_cmd->add_option("--sizes", bench_args.sizes, "comma separated sizes")
      ->capture_default_str();
  bench_cmd->add_option("--samples", bench_args.samples, "trials per size")
      ->capture_default_str();
  bench_cmd->add_option("--seed", bench_args.seed, "master seed")
      ->capture_default_str();
  bench_cmd->add_option("--algos", bench_args.algos,
                        "comma separated algorithms")
      ->capture_default_str();
  bench_cmd->add_option("--out", bench_args.out_path, "CSV output path")
      ->capture_default_str();
  bench_cmd->add_option("--threads", bench_args.threads, "worker threads")
      ->envname("PREFIX_SORT_THREADS")
      ->capture_default_str();

  PlotArgs plot_args;
  CLI::App* plot_cmd = app.add_subcommand("plot", "render an SVG chart");
  plot_cmd->add_option("--in", plot_args.in_path, "benchmark CSV to plot");
  plot_cmd->add_option("--out", plot_args.out_path, "SVG output path")
      ->required();
  plot_cmd->add_option("--mode", plot_args.mode, "ratio or adaptive")
      ->check(CLI::IsMember({"ratio", "adaptive"}))
      ->capture_default_str();
  plot_cmd->add_option("--b", plot_args.b,
                       "breakpoint count for adaptive mode");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (sort_cmd->parsed()) return cmd_sort(sort_args);
    if (replay_cmd->parsed()) return cmd_replay(replay_args);
    if (exact_cmd->parsed()) return cmd_exact(exact_args);
    if (bounds_cmd->parsed()) return cmd_bounds(bounds_args);
    if (verify_cmd->parsed()) return cmd_verify(verify_args);
    if (bench_cmd->parsed()) return cmd_bench(bench_args);
    if (plot_cmd->parsed()) return cmd_plot(plot_args);
  } catch (const ps::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == ps::ErrorCode::UsageError ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
