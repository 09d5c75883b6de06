#include "liqspec/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "liqspec/errors.hpp"

namespace liqspec {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

bool parse_i64(std::string_view s, std::int64_t& out) {
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && p == s.data() + s.size();
}

struct RawRow {
  std::int64_t t_ns;
  std::int64_t p_micro;
  std::int64_t volume;
};

// Extracts the t/p/v fields of one line. Returns false on any malformed or
// missing field.
bool parse_row(std::string_view line, const ParseOptions& opts, RawRow& row) {
  int want_max = std::max({opts.t_col, opts.p_col, opts.v_col});
  std::string_view t_field, p_field, v_field;
  int col = 0;
  std::size_t start = 0;
  while (col <= want_max) {
    std::size_t end = line.find(opts.delimiter, start);
    std::string_view field = end == std::string_view::npos
                                 ? line.substr(start)
                                 : line.substr(start, end - start);
    if (col == opts.t_col) t_field = field;
    if (col == opts.p_col) p_field = field;
    if (col == opts.v_col) v_field = field;
    if (end == std::string_view::npos) {
      if (col < want_max) return false;  // too few columns
      break;
    }
    start = end + 1;
    ++col;
  }
  if (!parse_i64(trim(t_field), row.t_ns) || row.t_ns < 0) return false;
  if (!parse_i64(trim(v_field), row.volume) || row.volume < 0) return false;
  auto price = parse_decimal_micro(trim(p_field));
  if (!price || *price <= 0) return false;
  row.p_micro = *price;
  return true;
}

}  // namespace

ParseResult parse_ticks(std::string_view content, const ParseOptions& opts) {
  if (opts.from_ns && opts.to_ns && *opts.from_ns > *opts.to_ns)
    throw ParseError("session window start is after its end");

  ParseResult result;
  auto& ticks = result.series.ticks;
  auto& stats = result.stats;

  bool first_content_row = true;
  bool have_prev = false;
  RawRow prev{};

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= content.size()) {
    std::size_t eol = content.find('\n', pos);
    std::string_view line = eol == std::string_view::npos
                                ? content.substr(pos)
                                : content.substr(pos, eol - pos);
    pos = eol == std::string_view::npos ? content.size() + 1 : eol + 1;
    ++line_no;
    if (trim(line).empty()) continue;

    RawRow row{};
    if (!parse_row(line, opts, row)) {
      if (first_content_row) {
        // header row
        stats.header_skipped = true;
        first_content_row = false;
        continue;
      }
      if (opts.lenient) {
        ++stats.rows_malformed;
        ++stats.rows_read;
        continue;
      }
      throw ParseError("unparseable row at line " + std::to_string(line_no), line_no);
    }
    first_content_row = false;
    ++stats.rows_read;

    if (have_prev) {
      if (row.t_ns < prev.t_ns)
        throw ParseError("time decreases at line " + std::to_string(line_no), line_no);
      if (row.volume < prev.volume)
        throw ParseError("cumulative volume decreases at line " + std::to_string(line_no),
                         line_no);
    }

    bool in_window = (!opts.from_ns || row.t_ns >= *opts.from_ns) &&
                     (!opts.to_ns || row.t_ns <= *opts.to_ns);
    if (in_window) {
      if (ticks.empty() && have_prev) {
        // first in-window row: the last pre-window row is the differencing
        // baseline, clamped into the window so dt covers only session time
        ticks.push_back({std::max(prev.t_ns, opts.from_ns.value_or(prev.t_ns)),
                         prev.p_micro, prev.volume});
      }
      ticks.push_back({row.t_ns, row.p_micro, row.volume});
    } else {
      ++stats.rows_dropped;
    }
    prev = row;
    have_prev = true;
  }

  if (ticks.size() < 2)
    throw ParseError(ticks.empty() ? "no ticks in input (or none inside the session window)"
                                   : "need at least 2 ticks to difference");

  result.series.session_start_ns = opts.from_ns.value_or(ticks.front().t_ns);
  result.series.session_end_ns = opts.to_ns.value_or(ticks.back().t_ns);
  result.series.validate();
  return result;
}

ParseResult parse_ticks_file(const std::string& path, const ParseOptions& opts) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_ticks(buf.str(), opts);
}

std::string serialize_ticks(const TickSeries& series) {
  std::string out;
  out.reserve(series.ticks.size() * 28);
  char num[24];
  for (const Tick& tk : series.ticks) {
    auto [p1, e1] = std::to_chars(num, num + sizeof num, tk.t_ns);
    out.append(num, p1);
    out.push_back(',');
    out += format_micro(tk.p_micro);
    out.push_back(',');
    auto [p2, e2] = std::to_chars(num, num + sizeof num, tk.volume);
    out.append(num, p2);
    out.push_back('\n');
  }
  return out;
}

}  // namespace liqspec
