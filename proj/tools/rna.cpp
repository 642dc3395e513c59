// rna: command-line front end for the minimum-bisection-width toolkit.
//
// Exit codes: 0 success, 1 verification found a mismatch, 2 bad input
// (files, parameters, formats), 3 size-guard violation, 4 reduction
// precondition failure.

#include <atomic>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "rna/bounds.hpp"
#include "rna/coloring.hpp"
#include "rna/errors.hpp"
#include "rna/exact.hpp"
#include "rna/graph.hpp"
#include "rna/local_search.hpp"
#include "rna/solve_report.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int exit_ok = 0;
constexpr int exit_mismatch = 1;
constexpr int exit_input = 2;
constexpr int exit_guard = 3;
constexpr int exit_precondition = 4;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw rna::parse_error("cannot open input file: " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& data) {
  if (path.empty() || path == "-") {
    std::cout << data;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw rna::parse_error("cannot open output file: " + path);
  }
  out << data;
}

void print_json(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

// ---------------------------------------------------------------- gen ----

struct GenOptions {
  std::string family;
  int n = 0;
  int d = 0;
  std::string out_path;
};

int run_gen(const GenOptions& opts) {
  try {
    rna::Graph g;
    if (opts.family == "cycle-power") {
      if (opts.d == 0) {
        std::cerr << "error: gen cycle-power requires --d\n";
        return exit_input;
      }
      g = rna::cycle_power(opts.n, opts.d);
    } else if (opts.d != 0) {
      std::cerr << "error: --d only applies to cycle-power\n";
      return exit_input;
    } else if (opts.family == "path") {
      g = rna::path_graph(opts.n);
    } else if (opts.family == "cycle") {
      g = rna::cycle_graph(opts.n);
    } else if (opts.family == "star") {
      g = rna::star_graph(opts.n);
    } else if (opts.family == "wheel") {
      g = rna::wheel_graph(opts.n);
    } else if (opts.family == "complete") {
      g = rna::complete_graph(opts.n);
    } else {
      std::cerr << "error: unknown family '" << opts.family << "'\n";
      return exit_input;
    }
    write_output(opts.out_path, rna::serialize_edge_list(g));
    return exit_ok;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_input;
  } catch (const rna::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_input;
  }
}

// -------------------------------------------------------------- solve ----

struct SolveOptions {
  std::string input;
  std::string method = "brute";
  int guard_n = 0;
  int jobs = 1;
  std::uint64_t seed = 0;
  int restarts = 16;
  int max_passes = 0;
  std::uint64_t node_budget = 0;
};

int run_solve(const SolveOptions& opts) {
  rna::Graph g;
  try {
    g = rna::parse_edge_list(read_input(opts.input));
  } catch (const rna::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_input;
  }

  rna::SolveReport report;
  try {
    if (opts.method == "brute" || opts.method == "bnb") {
      rna::ExactOptions eo;
      eo.guard_n = opts.guard_n;
      eo.jobs = opts.jobs;
      eo.node_budget = opts.node_budget;
      report = opts.method == "brute" ? rna::brute_force_rna(g, eo)
                                      : rna::branch_and_bound_rna(g, eo);
    } else {
      rna::LocalSearchOptions lo;
      lo.seed = opts.seed;
      lo.restarts = opts.restarts;
      lo.max_passes = opts.max_passes;
      lo.jobs = opts.jobs;
      report = rna::local_search_rna(g, lo);
    }
  } catch (const rna::guard_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_guard;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_input;
  }

  ordered_json out{
      {"rna", report.rna_value},
      {"witness", report.witness.to_string()},
      {"method", std::string(rna::method_name(report.method))},
      {"nodes", report.nodes_explored},
      {"elapsed_ms", report.elapsed_ms},
      {"optimal", report.optimal},
  };
  print_json(out);
  return exit_ok;
}

// ------------------------------------------------------------- bounds ----

int run_bounds(const std::string& input) {
  rna::Graph g;
  try {
    g = rna::parse_edge_list(read_input(input));
  } catch (const rna::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_input;
  }
  ordered_json out{{"kang", rna::kang_bound(g)}};
  const rna::FamilyTag& tag = g.family();
  if (tag.is_cycle_power() && tag.d >= 2) {
    const rna::SkaBounds sandwich = rna::ska_bounds(tag.d);
    out["ska_lower"] = sandwich.lower;
    out["ska_upper"] = sandwich.upper;
  }
  print_json(out);
  return exit_ok;
}

// ------------------------------------------------------------- reduce ----

struct ReduceOptions {
  int n = 0;
  int d = 0;
  std::string coloring;
  int pivot = 0;
};

int run_reduce(const ReduceOptions& opts) {
  rna::Coloring f;
  try {
    f = rna::Coloring::from_string(opts.coloring);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_input;
  }
  try {
    const rna::ReductionResult res =
        rna::reduce_cycle_power(opts.n, opts.d, f, opts.pivot);
    ordered_json added = ordered_json::array();
    for (const rna::Edge& e : res.added_edges) {
      added.push_back({e.u, e.v});
    }
    ordered_json out{
        {"cut_before", res.cut_before},
        {"cut_after", res.cut_after},
        {"f_prime", res.f_prime.to_string()},
        {"added_edges", added},
        {"rotation", res.rotation},
        {"h", rna::serialize_edge_list(res.h)},
    };
    print_json(out);
    return exit_ok;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_precondition;
  }
}

// ------------------------------------------------------------- verify ----

struct VerifyOptions {
  std::string d_range = "2..3";
  int n_max = 0;
  int n_min = 0;
  int guard_n = 0;
  int jobs = 1;
  std::string out_path;
};

struct VerificationRecord {
  int d = 0;
  int n = 0;
  int exact = -1;  // -1 = skipped
  int formula = 0;
  std::int64_t kang = 0;
  int lower = 0;
  std::string witness;
  double elapsed_ms = 0.0;
  std::string status;
};

bool parse_d_range(const std::string& text, int& lo, int& hi) {
  const size_t dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      lo = hi = std::stoi(text);
    } else {
      lo = std::stoi(text.substr(0, dots));
      hi = std::stoi(text.substr(dots + 2));
    }
  } catch (const std::exception&) {
    return false;
  }
  return lo >= 2 && hi >= lo;
}

int run_verify(const VerifyOptions& opts) {
  int d_lo = 0, d_hi = 0;
  if (!parse_d_range(opts.d_range, d_lo, d_hi)) {
    std::cerr << "error: bad --d range '" << opts.d_range
              << "' (want A..B with 2 <= A <= B)\n";
    return exit_input;
  }
  if (opts.n_max <= 0) {
    std::cerr << "error: --n-max is required and must be positive\n";
    return exit_input;
  }

  std::vector<std::pair<int, int>> grid;
  for (int d = d_lo; d <= d_hi; ++d) {
    const int n_start = std::max(2 * d + 1, opts.n_min);
    for (int n = n_start; n <= opts.n_max; ++n) grid.emplace_back(d, n);
  }

  std::vector<VerificationRecord> records(grid.size());
  std::atomic<size_t> next{0};
  std::mutex io_mutex;

  auto work = [&]() {
    for (;;) {
      const size_t i = next.fetch_add(1);
      if (i >= grid.size()) break;
      const auto [d, n] = grid[i];
      VerificationRecord rec;
      rec.d = d;
      rec.n = n;
      rec.formula = rna::theorem_value(d);
      rec.lower = rna::ska_bounds(d).lower;
      const rna::Graph g = rna::cycle_power(n, d);
      rec.kang = rna::kang_bound(g);
      try {
        rna::ExactOptions eo;
        eo.guard_n = opts.guard_n;
        const rna::SolveReport report = rna::brute_force_rna(g, eo);
        rec.exact = report.rna_value;
        rec.witness = report.witness.to_string();
        rec.elapsed_ms = report.elapsed_ms;
        rec.status = rec.exact == rec.formula ? "Match" : "MISMATCH";
      } catch (const rna::guard_error&) {
        rec.status = "SKIPPED";
      }
      {
        std::lock_guard<std::mutex> lock(io_mutex);
        std::cerr << "verify d=" << d << " n=" << n << " " << rec.status;
        if (rec.exact >= 0) std::cerr << " exact=" << rec.exact;
        std::cerr << "\n";
      }
      records[i] = std::move(rec);
    }
  };

  const int jobs = std::max(1, opts.jobs);
  if (jobs == 1 || grid.size() <= 1) {
    work();
  } else {
    std::vector<std::thread> threads;
    const int workers = std::min<int>(jobs, static_cast<int>(grid.size()));
    threads.reserve(workers);
    for (int w = 0; w < workers; ++w) threads.emplace_back(work);
    for (auto& t : threads) t.join();
  }

  // grid was generated in (d, n) order and records are indexed by grid
  // position, so the CSV comes out sorted no matter who finished first.
  std::ostringstream csv;
  csv << "d,n,exact,formula,kang,lower,elapsed_ms,status\n";
  bool mismatch = false;
  for (const VerificationRecord& rec : records) {
    csv << rec.d << ',' << rec.n << ',';
    if (rec.exact >= 0) csv << rec.exact;
    csv << ',' << rec.formula << ',' << rec.kang << ',' << rec.lower << ','
        << std::fixed << std::setprecision(3) << rec.elapsed_ms << ','
        << rec.status << '\n';
    if (rec.status == "MISMATCH") mismatch = true;
  }
  try {
    write_output(opts.out_path, csv.str());
  } catch (const rna::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_input;
  }
  return mismatch ? exit_mismatch : exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rna number toolkit: minimum bisection width of graphs"};
  app.require_subcommand(1);

  GenOptions gen;
  CLI::App* gen_cmd = app.add_subcommand(
      "gen", "Generate a graph family as an edge-list file");
  gen_cmd
      ->add_option("family", gen.family,
                   "cycle-power | path | cycle | star | wheel | complete")
      ->required();
  gen_cmd->add_option("--n", gen.n, "vertex count")->required();
  gen_cmd->add_option("--d", gen.d, "power (cycle-power only)");
  gen_cmd->add_option("-o,--output", gen.out_path, "output file (default stdout)");

  SolveOptions solve;
  CLI::App* solve_cmd =
      app.add_subcommand("solve", "Compute the rna number of a graph");
  solve_cmd->add_option("input", solve.input, "edge-list file, or - for stdin")
      ->required();
  solve_cmd
      ->add_option("--method", solve.method, "brute | bnb | heuristic")
      ->check(CLI::IsMember({"brute", "bnb", "heuristic"}))
      ->capture_default_str();
  solve_cmd->add_option("--guard-n", solve.guard_n,
                        "override the solver size guard");
  solve_cmd->add_option("--jobs", solve.jobs, "worker threads")
      ->capture_default_str();
  solve_cmd->add_option("--seed", solve.seed, "heuristic RNG seed")
      ->capture_default_str();
  solve_cmd->add_option("--restarts", solve.restarts, "heuristic restarts")
      ->capture_default_str();
  solve_cmd->add_option("--max-passes", solve.max_passes,
                        "heuristic swap limit per start (0 = n^2)");
  solve_cmd->add_option("--node-budget", solve.node_budget,
                        "stop search after this many nodes (0 = unlimited)");

  std::string bounds_input;
  CLI::App* bounds_cmd = app.add_subcommand(
      "bounds", "Print closed-form bounds for a graph as JSON");
  bounds_cmd
      ->add_option("input", bounds_input, "edge-list file, or - for stdin")
      ->required();

  ReduceOptions reduce;
  CLI::App* reduce_cmd = app.add_subcommand(
      "reduce", "Delete a majority-class pivot from a cycle power");
  reduce_cmd->add_option("--n", reduce.n, "vertex count")->required();
  reduce_cmd->add_option("--d", reduce.d, "power")->required();
  reduce_cmd
      ->add_option("--coloring", reduce.coloring, "balanced coloring string")
      ->required();
  reduce_cmd->add_option("--pivot", reduce.pivot, "vertex to delete")
      ->capture_default_str();

  VerifyOptions verify;
  CLI::App* verify_cmd = app.add_subcommand(
      "verify",
      "Sweep cycle powers and check the exact value against d(d+1)");
  verify_cmd->add_option("--d", verify.d_range, "power range, e.g. 2..4")
      ->capture_default_str();
  verify_cmd->add_option("--n-max", verify.n_max, "largest n per power")
      ->required();
  verify_cmd->add_option("--n-min", verify.n_min,
                         "smallest n per power (default 2d+1)");
  verify_cmd->add_option("--guard-n", verify.guard_n,
                         "override the solver size guard");
  verify_cmd->add_option("--jobs", verify.jobs, "worker threads")
      ->capture_default_str();
  verify_cmd->add_option("-o,--output", verify.out_path,
                         "CSV output file (default stdout)");

  int rc = exit_ok;
  gen_cmd->callback([&]() { rc = run_gen(gen); });
  solve_cmd->callback([&]() { rc = run_solve(solve); });
  bounds_cmd->callback([&]() { rc = run_bounds(bounds_input); });
  reduce_cmd->callback([&]() { rc = run_reduce(reduce); });
  verify_cmd->callback([&]() { rc = run_verify(verify); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_input;
  }
  return rc;
}
