// liqspec: matching-rate equilibrium analysis of executed-trade tick data.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "liqspec/cli.hpp"
#include "liqspec/decimal.hpp"

namespace {

// --from/--to accept "HH:MM" or "HH:MM:SS"
std::optional<std::int64_t> window_ns(const std::string& text, const char* flag) {
  if (text.empty()) return std::nullopt;
  auto ns = liqspec::parse_time_of_day_ns(text);
  if (!ns)
    throw CLI::ValidationError(flag, "expected HH:MM or HH:MM:SS, got '" + text + "'");
  return ns;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"matching-rate market equilibrium from executed-trade ticks"};
  app.require_subcommand(1);

  liqspec::RunConfig config;
  std::string from_text, to_text, basis_name = "chebyshev";

  auto add_parse_flags = [&](CLI::App* cmd) {
    cmd->add_option("input", config.input, "tick CSV file (t,p,v rows)")->required();
    cmd->add_option("--t-col", config.parse.t_col, "time column (default 0)");
    cmd->add_option("--p-col", config.parse.p_col, "price column (default 1)");
    cmd->add_option("--v-col", config.parse.v_col, "cumulative-volume column (default 2)");
    cmd->add_option("--delimiter", config.parse.delimiter, "field delimiter (default ,)");
    cmd->add_option("--from", from_text, "session window start, HH:MM[:SS]");
    cmd->add_option("--to", to_text, "session window end, HH:MM[:SS]");
    cmd->add_flag("--lenient", config.parse.lenient,
                  "skip malformed rows instead of failing");
  };

  CLI::App* analyze = app.add_subcommand(
      "analyze", "full pipeline: report.json, curves.csv, histogram.csv");
  add_parse_flags(analyze);
  analyze->add_option("--d", config.d, "basis dimension (default 10)");
  analyze->add_option("--basis", basis_name, "chebyshev|monomial");
  analyze->add_option("--grid", config.grid_points, "scan grid points (default 512)");
  analyze->add_option("--grid-lo", [&config](const std::vector<std::string>& v) {
    try { config.grid_lo = std::stod(v.back()); } catch (...) { return false; }
    return true;
  }, "scan grid lower price (default: observed window)");
  analyze->add_option("--grid-hi", [&config](const std::vector<std::string>& v) {
    try { config.grid_hi = std::stod(v.back()); } catch (...) { return false; }
    return true;
  }, "scan grid upper price (default: observed window)");
  analyze->add_flag("--extrapolate", config.allow_extrapolation,
                    "allow the scan grid outside the observed window");
  analyze->add_option("--bin-width", config.bin_width,
                      "histogram bin width (default 0.01)");
  analyze->add_option("--out-dir", config.out_dir, "output directory (default .)");
  std::string dump_gram, dump_spectrum;
  analyze->add_option("--dump-gram", dump_gram, "also write both Gram matrices as CSV");
  analyze->add_option("--dump-spectrum", dump_spectrum,
                      "also write eigenpairs as CSV");
  analyze->add_option("--threads", config.threads,
                      "accumulation threads (default: LIQSPEC_THREADS or auto)");

  CLI::App* simulate =
      app.add_subcommand("simulate", "generate a synthetic tick CSV from a profile");
  std::string profile_path, sim_out = "ticks.csv";
  simulate->add_option("--profile", profile_path, "rate profile JSON")->required();
  simulate->add_option("--out", sim_out, "output CSV path (default ticks.csv)");

  CLI::App* histogram =
      app.add_subcommand("histogram", "price-volume histogram only");
  std::string hist_out = "histogram.csv";
  // histogram shares the parse flags; register them against the same config
  {
    CLI::App* cmd = histogram;
    add_parse_flags(cmd);
    cmd->add_option("--bin-width", config.bin_width,
                    "histogram bin width (default 0.01)");
    cmd->add_option("--out", hist_out, "output CSV path (default histogram.csv)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    config.parse.from_ns = window_ns(from_text, "--from");
    config.parse.to_ns = window_ns(to_text, "--to");
    config.family = liqspec::basis_family_from_string(basis_name);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  if (!dump_gram.empty()) config.dump_gram = dump_gram;
  if (!dump_spectrum.empty()) config.dump_spectrum = dump_spectrum;

  if (analyze->parsed())
    return liqspec::run_analyze(config, std::cout, std::cerr);
  if (simulate->parsed())
    return liqspec::run_simulate(profile_path, sim_out, std::cout, std::cerr);
  return liqspec::run_histogram(config, hist_out, std::cout, std::cerr);
}
