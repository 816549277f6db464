// Command-line front end for the cyclepow library.
//
// Exit codes: 0 success, 1 grid verification found a violation, 2 usage or
// range error, 3 enumeration budget exceeded.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cyclepow/bounds.hpp"
#include "cyclepow/cycle.hpp"
#include "cyclepow/extremal.hpp"
#include "cyclepow/report.hpp"
#include "cyclepow/search.hpp"

namespace {

constexpr const char* kBudgetEnvVar = "CYCLEPOW_BUDGET";

std::uint64_t resolve_budget(const std::optional<std::uint64_t>& flag,
                             std::uint64_t fallback) {
  if (flag) return *flag;
  if (const char* env = std::getenv(kBudgetEnvVar)) {
    std::uint64_t v = 0;
    std::istringstream in(env);
    if (!(in >> v) || !in.eof() || v == 0)
      throw std::invalid_argument(std::string(kBudgetEnvVar) +
                                  " must be a positive integer, got '" + env +
                                  "'");
    return v;
  }
  return fallback;
}

std::string format_members(const cyclepow::VertexSubset& subset) {
  std::string out = "{";
  bool first = true;
  for (int v : subset.members()) {
    if (!first) out += ", ";
    out += std::to_string(v);
    first = false;
  }
  out += "}";
  return out;
}

void run_exact(int n, int k, int s) {
  const cyclepow::GraphSpec spec(n, s);
  const cyclepow::ExactResult res = cyclepow::exact_max(spec, k);
  std::cout << res.value << "\n"
            << "method: " << cyclepow::to_string(res.method) << "\n";
}

void run_bounds(int n, int k, int s) {
  const cyclepow::GraphSpec spec(n, s);
  const cyclepow::BoundReport rep = cyclepow::make_bound_report(spec, k);
  std::cout << "n=" << rep.n << " k=" << rep.k << " s=" << rep.s
            << " exact=" << rep.exact << " turan="
            << (rep.turan ? std::to_string(*rep.turan) : std::string("NA"))
            << " spectral=" << rep.spectral_int << std::fixed
            << std::setprecision(6) << " spectral_raw=" << rep.spectral_raw
            << " lambda2=" << rep.lambda2 << "\n";
}

void run_table(const std::string& spec_file, const std::string& format_name) {
  const std::optional<cyclepow::TableFormat> format =
      cyclepow::parse_format(format_name);
  if (!format)
    throw std::invalid_argument("unknown format '" + format_name + "'");

  cyclepow::TableSpec ts;
  if (spec_file.empty()) {
    ts = cyclepow::builtin_table();
  } else {
    std::ifstream in(spec_file);
    if (!in) throw std::invalid_argument("cannot open '" + spec_file + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    ts = cyclepow::parse_table_spec_csv(buf.str());
  }
  std::cout << cyclepow::render(cyclepow::build_table(ts), *format);
}

void run_search(int n, int k, int s, bool all_maximizers, bool no_symmetry,
                int jobs, const std::optional<std::uint64_t>& budget_flag) {
  const cyclepow::GraphSpec spec(n, s);
  cyclepow::SearchOptions options;
  options.reduce_symmetry = !no_symmetry;
  options.count_maximizers = all_maximizers;
  options.jobs = jobs;
  options.budget = resolve_budget(
      budget_flag, all_maximizers ? cyclepow::kDefaultCountBudget
                                  : cyclepow::kDefaultSearchBudget);
  const cyclepow::SearchResult res = cyclepow::brute_force_max(spec, k, options);
  std::cout << "max_edges: " << res.max_edges << "\n"
            << "witness: " << format_members(res.witness) << "\n";
  if (res.maximizer_count)
    std::cout << "maximizers: " << *res.maximizer_count << "\n";
  std::cout << "subsets_examined: " << res.subsets_examined << "\n"
            << "used_symmetry: " << (res.used_symmetry ? "true" : "false")
            << "\n";
}

int run_verify(int max_n, int jobs,
               const std::optional<std::uint64_t>& budget_flag) {
  const std::uint64_t budget =
      resolve_budget(budget_flag, cyclepow::kDefaultSearchBudget);
  const cyclepow::GridReport rep = cyclepow::verify_grid(max_n, jobs, budget);
  std::cout << "grid max_n=" << rep.max_n << ": cases=" << rep.cases
            << " subsets=" << rep.subsets_examined
            << " violations=" << rep.violations.size() << "\n";
  for (const cyclepow::GridViolation& v : rep.violations)
    std::cout << "violation " << v.kind << " at n=" << v.n << " s=" << v.s
              << " k=" << v.k << ": oracle=" << v.oracle
              << " expected_bound_or_value=" << v.other << "\n";
  std::cout << (rep.ok() ? "ok" : "FAILED") << "\n";
  return rep.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cyclepow: exact maxima and bounds for the number of edges "
               "induced by k vertices of the cycle power C_n^s"};
  app.require_subcommand(1);

  int n = 0, k = 0, s = 0;
  int jobs = 0;
  int max_n = 14;
  bool all_maximizers = false;
  bool no_symmetry = false;
  std::string format_name = "plain";
  std::string spec_file;
  std::optional<std::uint64_t> budget_flag;

  auto add_nks = [&](CLI::App* cmd) {
    cmd->add_option("--n", n, "cycle length (>= 3)")
        ->required()
        ->check(CLI::Range(3, std::numeric_limits<int>::max()));
    cmd->add_option("--k", k, "subset size (1 <= k <= n)")
        ->required()
        ->check(CLI::Range(1, std::numeric_limits<int>::max()));
    cmd->add_option("--s", s, "power (>= 1)")
        ->required()
        ->check(CLI::Range(1, std::numeric_limits<int>::max()));
  };

  CLI::App* exact_cmd =
      app.add_subcommand("exact", "exact maximum induced edge count");
  add_nks(exact_cmd);

  CLI::App* bounds_cmd = app.add_subcommand(
      "bounds", "exact value with Turan and spectral bounds for one (n, k, s)");
  add_nks(bounds_cmd);

  CLI::App* table_cmd = app.add_subcommand(
      "table", "comparison table (built-in n=1000 table by default)");
  table_cmd->add_option("--spec", spec_file,
                        "CSV input: n on line 1, then k,s pairs");
  table_cmd
      ->add_option("--format", format_name, "plain, markdown, csv or json")
      ->check(CLI::IsMember({"plain", "markdown", "csv", "json"}));

  CLI::App* search_cmd = app.add_subcommand(
      "search", "exhaustive maximum over all k-subsets (independent of the "
                "closed form)");
  add_nks(search_cmd);
  search_cmd->add_flag("--all-maximizers", all_maximizers,
                       "count every maximizer over all C(n,k) subsets");
  search_cmd->add_flag("--no-symmetry", no_symmetry,
                       "do not pin vertex 0 (enumerate all C(n,k) subsets)");
  search_cmd->add_option("--jobs", jobs, "worker threads (0: hardware)")
      ->check(CLI::Range(0, 4096));
  search_cmd->add_option("--budget", budget_flag,
                         "max subsets to enumerate (overrides " +
                             std::string(kBudgetEnvVar) + ")");

  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "check interval optimality and bound soundness on the full "
                "(n, s, k) grid");
  verify_cmd->add_option("--max-n", max_n, "grid upper bound (default 14)")
      ->check(CLI::Range(3, 64));
  verify_cmd->add_option("--jobs", jobs, "worker threads (0: hardware)")
      ->check(CLI::Range(0, 4096));
  verify_cmd->add_option("--budget", budget_flag, "max subsets per search");

  try {
    app.parse(argc, argv);

    if (app.got_subcommand(exact_cmd)) {
      run_exact(n, k, s);
    } else if (app.got_subcommand(bounds_cmd)) {
      run_bounds(n, k, s);
    } else if (app.got_subcommand(table_cmd)) {
      run_table(spec_file, format_name);
    } else if (app.got_subcommand(search_cmd)) {
      run_search(n, k, s, all_maximizers, no_symmetry, jobs, budget_flag);
    } else if (app.got_subcommand(verify_cmd)) {
      return run_verify(max_n, jobs, budget_flag);
    }
    return 0;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const cyclepow::budget_exceeded_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
