// mzv_verify: run verification sweeps and print one report per case.
//
//   mzv_verify --suite second-main --max-weight 4 --t-order 2
//   mzv_verify --suite csf-mzsv --index 1,2 --json

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "mzv/suites.hpp"

namespace {

constexpr int exit_usage = 2;

void print_row(const mzv::Report& r) {
  char buf[256];
  std::string order = r.order < 0 ? "-" : std::to_string(r.order);
  std::snprintf(buf, sizeof buf, "%-18s %-14s %5s %12.3e %-4s %10.1f", r.identity.c_str(), r.index.c_str(),
                order.c_str(), r.max_residual(), r.pass ? "pass" : "FAIL", r.elapsed_ms);
  std::cout << buf << "\n";
  if (!r.pass && !r.detail.empty()) {
    std::istringstream lines(r.detail);
    for (std::string line; std::getline(lines, line);) std::cout << "    " << line << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and numeric verification of cyclic sum formulas for multiple zeta values"};
  mzv::SuiteSpec spec;
  std::string index_text;
  bool json = false;
  unsigned jobs = std::max(1U, std::thread::hardware_concurrency());
  long cutoff = 0;
  double tol = 0;

  std::string suites = "all";
  for (const auto& n : mzv::suite_names()) suites += ", " + n;
  app.add_option("--suite", spec.suite, "Suite to run: " + suites)->capture_default_str();
  app.add_option("--max-weight", spec.max_weight, "Largest index weight in the sweep")->capture_default_str();
  app.add_option("--t-order", spec.t_order, "Truncation order in t")->capture_default_str();
  auto* index_opt = app.add_option("--index", index_text, "Run a single index, e.g. 1,2 (key-prop uses its class)");
  auto* cutoff_opt = app.add_option("--cutoff-N", cutoff, "Cap on the outer summation variable (default 1000000)");
  auto* tol_opt = app.add_option("--tol", tol, "Tolerance for numeric checks (default 1e-6 or 1e-5 by suite)");
  app.add_flag("--json", json, "One JSON object per line instead of a table");
  app.add_option("--jobs", jobs, "Worker threads")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  std::vector<mzv::SuiteCase> cases;
  try {
    if (*index_opt) spec.index = mzv::Index::parse(index_text);
    if (*cutoff_opt) spec.cutoff_n = cutoff;
    if (*tol_opt) spec.tol = tol;
    cases = mzv::build_cases(spec);
  } catch (const std::exception& e) {
    std::cerr << "mzv_verify: " << e.what() << "\n";
    return exit_usage;
  }

  if (!json) {
    char head[256];
    std::snprintf(head, sizeof head, "%-18s %-14s %5s %12s %-4s %10s", "identity", "index", "order", "residual", "ok",
                  "ms");
    std::cout << head << "\n";
  }
  std::size_t failures = 0;
  auto emit = [&](const mzv::SuiteCase&, const std::vector<mzv::Report>& reports) {
    for (const auto& r : reports) {
      if (!r.pass) ++failures;
      if (json) {
        std::cout << nlohmann::json(r).dump() << "\n";
      } else {
        print_row(r);
      }
    }
    std::cout.flush();
  };
  bool ok = mzv::run_cases(cases, jobs, emit);
  if (!json) std::cout << (ok ? "all passed" : std::to_string(failures) + " failed") << "\n";
  return ok ? 0 : 1;
}
