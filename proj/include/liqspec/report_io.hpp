#pragma once

// Text renderings of the analysis artifacts. All floating-point values are
// written with 17 significant digits so files round-trip exactly and
// identical runs produce identical bytes.

#include <string>

#include "liqspec/analytics.hpp"
#include "liqspec/ingest.hpp"

namespace liqspec {

struct ReportContext {
  std::string input_path;
  ParseStats stats;
  std::size_t ticks = 0;
  std::int64_t session_start_ns = 0;
  std::int64_t session_end_ns = 0;
  std::string basis_family;
  double p_lo = 0.0;
  double p_hi = 0.0;
  double total_time_s = 0.0;
  double total_volume = 0.0;
};

std::string render_report_json(const EquilibriumReport& report, const ReportContext& ctx);

// "P,I,w_H,w_L" rows
std::string render_curves_csv(const EquilibriumReport& report);

// "bin_lo,volume" rows, exact decimal edges
std::string render_histogram_csv(const VolumeHistogram& histogram);

// Both Gram matrices with a header naming d, totals and the basis family.
std::string render_gram_csv(const GramPair& gram, const std::string& basis_family);

// "(i, lambda, coeffs...)" rows for the retained spectrum.
std::string render_spectrum_csv(const Spectrum& spectrum);

}  // namespace liqspec
