#include "liqspec/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <vector>

#include "liqspec/analytics.hpp"
#include "liqspec/errors.hpp"
#include "liqspec/report_io.hpp"
#include "liqspec/synth.hpp"

namespace liqspec {

namespace {

namespace fs = std::filesystem;

// Staged output set: everything is written to temp siblings and renamed in
// one batch, so a failed run cannot leave partial files behind.
class OutputStage {
 public:
  void add(const std::string& path, std::string content) {
    files_.push_back({path, std::move(content)});
  }

  void commit() {
    std::vector<fs::path> temps;
    temps.reserve(files_.size());
    try {
      for (const auto& [path, content] : files_) {
        fs::path tmp = fs::path(path).concat(".tmp");
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        temps.push_back(tmp);
      }
      for (std::size_t i = 0; i < files_.size(); ++i)
        fs::rename(temps[i], files_[i].first);
    } catch (...) {
      std::error_code ec;
      for (const auto& tmp : temps) fs::remove(tmp, ec);
      throw;
    }
  }

 private:
  std::vector<std::pair<std::string, std::string>> files_;
};

int report_failure(const std::exception& e, std::ostream& err, int code) {
  err << "error: " << e.what() << "\n";
  return code;
}

template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const ParseError& e) {
    return report_failure(e, err, 2);
  } catch (const std::invalid_argument& e) {
    return report_failure(e, err, 2);
  } catch (const DegenerateMeasureError& e) {
    return report_failure(e, err, 3);
  } catch (const std::domain_error& e) {
    return report_failure(e, err, 3);
  } catch (const ConvergenceError& e) {
    return report_failure(e, err, 4);
  } catch (const std::exception& e) {
    return report_failure(e, err, 1);
  }
}

std::int64_t parse_bin_width(const std::string& text) {
  auto micro = parse_decimal_micro(text);
  if (!micro || *micro <= 0)
    throw std::invalid_argument("bad histogram bin width: " + text);
  return *micro;
}

}  // namespace

int run_analyze(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    ParseResult parsed = parse_ticks_file(config.input, config.parse);
    const TickSeries& series = parsed.series;

    Basis basis = make_basis(config.d, series, config.family);
    AccumulateOptions acc_opts;
    acc_opts.threads = config.threads;
    GramPair gram = accumulate(series, basis, acc_opts);
    Spectrum spectrum = solve(gram);

    ReportOptions report_opts;
    report_opts.grid_points = config.grid_points;
    report_opts.grid_lo = config.grid_lo;
    report_opts.grid_hi = config.grid_hi;
    report_opts.allow_extrapolation = config.allow_extrapolation;
    report_opts.bin_width_micro = parse_bin_width(config.bin_width);
    EquilibriumReport report = build_report(series, basis, gram, spectrum, report_opts);

    ReportContext ctx;
    ctx.input_path = config.input;
    ctx.stats = parsed.stats;
    ctx.ticks = series.size();
    ctx.session_start_ns = series.session_start_ns;
    ctx.session_end_ns = series.session_end_ns;
    ctx.basis_family = to_string(config.family);
    ctx.p_lo = basis.p_lo();
    ctx.p_hi = basis.p_hi();
    ctx.total_time_s = gram.total_time;
    ctx.total_volume = gram.total_volume;

    fs::create_directories(config.out_dir);
    OutputStage stage;
    stage.add((fs::path(config.out_dir) / "report.json").string(),
              render_report_json(report, ctx));
    stage.add((fs::path(config.out_dir) / "curves.csv").string(),
              render_curves_csv(report));
    stage.add((fs::path(config.out_dir) / "histogram.csv").string(),
              render_histogram_csv(report.histogram));
    if (config.dump_gram)
      stage.add(*config.dump_gram, render_gram_csv(gram, ctx.basis_family));
    if (config.dump_spectrum)
      stage.add(*config.dump_spectrum, render_spectrum_csv(spectrum));
    stage.commit();

    out << "ticks " << series.size() << " (dropped " << parsed.stats.rows_dropped
        << ", malformed " << parsed.stats.rows_malformed << "), basis "
        << ctx.basis_family << " d=" << config.d << ", window ["
        << fmt_g17(basis.p_lo()) << ", " << fmt_g17(basis.p_hi()) << "], retained "
        << spectrum.retained << "/" << config.d << "\n";
    out << "lambda_H = " << fmt_g17(report.lambda_H) << " shares/s\n";
    out << "lambda_L = " << fmt_g17(report.lambda_L) << " shares/s\n";
    out << "p_H = " << fmt_g17(report.p_H) << "\n";
    if (report.impact.extremum)
      out << "Ex = " << fmt_g17(*report.impact.extremum) << " ("
          << to_string(report.impact.kind) << ")\n";
    else
      out << "Ex = degenerate (constraint condition "
          << fmt_g17(report.impact.ls_condition) << ")\n";
    return 0;
  });
}

int run_simulate(const std::string& profile_path, const std::string& out_csv,
                 std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    RateProfile profile = profile_from_file(profile_path);
    TickSeries series = generate(profile);
    OutputStage stage;
    stage.add(out_csv, serialize_ticks(series));
    stage.commit();
    out << "wrote " << series.size() << " ticks (" << series.total_volume()
        << " shares over " << fmt_g17(series.total_time_s()) << " s) to " << out_csv
        << "\n";
    return 0;
  });
}

int run_histogram(const RunConfig& config, const std::string& out_csv,
                  std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    ParseResult parsed = parse_ticks_file(config.input, config.parse);
    VolumeHistogram histogram =
        volume_histogram(parsed.series, parse_bin_width(config.bin_width));
    OutputStage stage;
    stage.add(out_csv, render_histogram_csv(histogram));
    stage.commit();
    out << histogram.bins.size() << " bins, total volume " << histogram.total_volume
        << ", wrote " << out_csv << "\n";
    return 0;
  });
}

}  // namespace liqspec
