#include "liqspec/report_io.hpp"

#include <cmath>

#include "liqspec/decimal.hpp"

namespace liqspec {

namespace {

// report.json is written by hand to keep full control over number precision
// and key order.
class JsonWriter {
 public:
  std::string take() { return std::move(out_); }

  void begin_object() { out_ += '{'; fresh_ = true; }
  void end_object() { out_ += '}'; fresh_ = false; }

  void key(const std::string& name) {
    if (!fresh_) out_ += ',';
    fresh_ = false;
    string(name);
    out_ += ':';
  }

  void string(const std::string& s) {
    out_ += '"';
    for (char c : s) {
      switch (c) {
        case '"': out_ += "\\\""; break;
        case '\\': out_ += "\\\\"; break;
        case '\n': out_ += "\\n"; break;
        case '\t': out_ += "\\t"; break;
        case '\r': out_ += "\\r"; break;
        default: out_ += c;
      }
    }
    out_ += '"';
  }

  void number(double v) {
    if (std::isfinite(v))
      out_ += fmt_g17(v);
    else
      out_ += "null";
  }
  void number(std::int64_t v) { out_ += std::to_string(v); }
  void number(std::size_t v) { out_ += std::to_string(v); }
  void number(int v) { out_ += std::to_string(v); }
  void boolean(bool v) { out_ += v ? "true" : "false"; }
  void null() { out_ += "null"; }

  void begin_array() { out_ += '['; fresh_ = true; }
  void array_sep() {
    if (!fresh_) out_ += ',';
    fresh_ = false;
  }
  void end_array() { out_ += ']'; fresh_ = false; }

 private:
  std::string out_;
  bool fresh_ = true;
};

}  // namespace

std::string render_report_json(const EquilibriumReport& report, const ReportContext& ctx) {
  JsonWriter w;
  w.begin_object();
  w.key("schema");
  w.number(1);

  w.key("input");
  w.begin_object();
  w.key("path"); w.string(ctx.input_path);
  w.key("rows_read"); w.number(ctx.stats.rows_read);
  w.key("rows_dropped"); w.number(ctx.stats.rows_dropped);
  w.key("rows_malformed"); w.number(ctx.stats.rows_malformed);
  w.key("ticks"); w.number(ctx.ticks);
  w.key("session_start_ns"); w.number(ctx.session_start_ns);
  w.key("session_end_ns"); w.number(ctx.session_end_ns);
  w.end_object();

  w.key("basis");
  w.begin_object();
  w.key("family"); w.string(ctx.basis_family);
  w.key("d"); w.number(report.d);
  w.key("p_lo"); w.number(ctx.p_lo);
  w.key("p_hi"); w.number(ctx.p_hi);
  w.end_object();

  w.key("measures");
  w.begin_object();
  w.key("total_time_s"); w.number(ctx.total_time_s);
  w.key("total_volume"); w.number(ctx.total_volume);
  w.end_object();

  w.key("spectrum");
  w.begin_object();
  w.key("lambda_H"); w.number(report.lambda_H);
  w.key("lambda_L"); w.number(report.lambda_L);
  w.key("retained"); w.number(report.retained);
  w.key("cond_Gt"); w.number(report.cond_Gt);
  w.end_object();

  w.key("equilibrium");
  w.begin_object();
  w.key("p_H"); w.number(report.p_H);
  w.end_object();

  const ImpactAnalysis& impact = report.impact;
  w.key("impact");
  w.begin_object();
  w.key("degenerate"); w.boolean(impact.degenerate);
  w.key("ls_condition"); w.number(impact.ls_condition);
  w.key("Ex");
  if (impact.extremum) w.number(*impact.extremum); else w.null();
  w.key("kind"); w.string(to_string(impact.kind));
  w.key("beta");
  if (impact.beta) {
    w.begin_array();
    for (double b : *impact.beta) {
      w.array_sep();
      w.number(b);
    }
    w.end_array();
  } else {
    w.null();
  }
  w.end_object();

  w.key("curves");
  w.begin_object();
  w.key("points"); w.number(static_cast<std::int64_t>(report.curves.size()));
  w.key("grid_lo"); w.number(report.curves.front().price);
  w.key("grid_hi"); w.number(report.curves.back().price);
  w.key("extrapolated"); w.boolean(report.extrapolated_grid);
  w.key("file"); w.string("curves.csv");
  w.end_object();

  w.key("histogram");
  w.begin_object();
  w.key("bin_width"); w.string(format_micro(report.histogram.bin_width_micro));
  w.key("bins"); w.number(static_cast<std::int64_t>(report.histogram.bins.size()));
  w.key("total_volume"); w.number(report.histogram.total_volume);
  w.key("file"); w.string("histogram.csv");
  w.end_object();

  w.end_object();
  std::string out = w.take();
  out += '\n';
  return out;
}

std::string render_curves_csv(const EquilibriumReport& report) {
  std::string out = "P,I,w_H,w_L\n";
  for (const CurvePoint& pt : report.curves) {
    out += fmt_g17(pt.price);
    out += ',';
    out += fmt_g17(pt.rate);
    out += ',';
    out += fmt_g17(pt.w_H);
    out += ',';
    out += fmt_g17(pt.w_L);
    out += '\n';
  }
  return out;
}

std::string render_histogram_csv(const VolumeHistogram& histogram) {
  std::string out = "bin_lo,volume\n";
  for (const auto& [edge, volume] : histogram.bins) {
    out += format_micro(edge);
    out += ',';
    out += std::to_string(volume);
    out += '\n';
  }
  return out;
}

std::string render_gram_csv(const GramPair& gram, const std::string& basis_family) {
  std::string out = "# d=" + std::to_string(gram.d) +
                    ",total_time_s=" + fmt_g17(gram.total_time) +
                    ",total_volume=" + fmt_g17(gram.total_volume) +
                    ",basis=" + basis_family + "\n";
  auto dump = [&out, &gram](const char* name, const Matrix& m) {
    for (int j = 0; j < gram.d; ++j) {
      out += name;
      out += ',';
      out += std::to_string(j);
      for (int k = 0; k < gram.d; ++k) {
        out += ',';
        out += fmt_g17(m(j, k));
      }
      out += '\n';
    }
  };
  dump("Gt", gram.Gt);
  dump("Gv", gram.Gv);
  return out;
}

std::string render_spectrum_csv(const Spectrum& spectrum) {
  std::string out = "i,lambda";
  for (int k = 0; k < spectrum.d; ++k) out += ",c" + std::to_string(k);
  out += '\n';
  for (int i = 0; i < spectrum.retained; ++i) {
    out += std::to_string(i);
    out += ',';
    out += fmt_g17(spectrum.pairs[i].lambda);
    for (double c : spectrum.pairs[i].state.coeffs) {
      out += ',';
      out += fmt_g17(c);
    }
    out += '\n';
  }
  return out;
}

}  // namespace liqspec
