#pragma once

// End-to-end pipeline drivers behind the command-line tool. Each returns a
// process exit status: 0 success, 2 input/usage errors, 3 degenerate time
// measure, 4 solver non-convergence. Output files are staged and committed
// together; a failing run leaves no partial outputs.

#include <iosfwd>
#include <optional>
#include <string>

#include "liqspec/basis.hpp"
#include "liqspec/ingest.hpp"

namespace liqspec {

struct RunConfig {
  std::string input;
  int d = 10;
  BasisFamily family = BasisFamily::kChebyshev;
  ParseOptions parse;
  int grid_points = 512;
  std::optional<double> grid_lo;
  std::optional<double> grid_hi;
  bool allow_extrapolation = false;
  std::string bin_width = "0.01";
  std::string out_dir = ".";
  std::optional<std::string> dump_gram;
  std::optional<std::string> dump_spectrum;
  int threads = 0;  // 0: LIQSPEC_THREADS env, else hardware concurrency
};

int run_analyze(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_simulate(const std::string& profile_path, const std::string& out_csv,
                 std::ostream& out, std::ostream& err);
int run_histogram(const RunConfig& config, const std::string& out_csv,
                  std::ostream& out, std::ostream& err);

}  // namespace liqspec
