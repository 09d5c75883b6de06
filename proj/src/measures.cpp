#include "liqspec/measures.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <stdexcept>
#include <thread>
#include <vector>

#include "liqspec/errors.hpp"
#include "liqspec/kahan.hpp"

namespace liqspec {

namespace {

// Upper-triangle compensated accumulator for the four moment matrices.
struct ChunkAccumulator {
  int d = 0;
  std::vector<KahanSum> gt, gv, mt, mv;

  explicit ChunkAccumulator(int dim) : d(dim) {
    std::size_t n = static_cast<std::size_t>(dim) * (dim + 1) / 2;
    gt.resize(n);
    gv.resize(n);
    mt.resize(n);
    mv.resize(n);
  }

  // Accumulates increments q in [q_begin, q_end).
  void run(const TickSeries& series, const Basis& basis, std::size_t q_begin,
           std::size_t q_end) {
    std::vector<double> q_vals(d);
    std::span<double> vals(q_vals);
    for (std::size_t q = q_begin; q < q_end; ++q) {
      const Tick& cur = series.ticks[q];
      const Tick& prev = series.ticks[q - 1];
      double dt = static_cast<double>(cur.t_ns - prev.t_ns) * 1e-9;
      double dv = static_cast<double>(cur.volume - prev.volume);
      if (dt == 0.0 && dv == 0.0) continue;
      double p = cur.price();
      basis.evaluate(p, vals);
      double wt = dt, wv = dv, wtp = dt * p, wvp = dv * p;
      std::size_t idx = 0;
      for (int j = 0; j < d; ++j) {
        double qj_t = q_vals[j] * wt;
        double qj_v = q_vals[j] * wv;
        double qj_tp = q_vals[j] * wtp;
        double qj_vp = q_vals[j] * wvp;
        for (int k = j; k < d; ++k) {
          double qk = q_vals[k];
          gt[idx].add(qj_t * qk);
          gv[idx].add(qj_v * qk);
          mt[idx].add(qj_tp * qk);
          mv[idx].add(qj_vp * qk);
          ++idx;
        }
      }
    }
  }

  void merge(const ChunkAccumulator& other) {
    for (std::size_t i = 0; i < gt.size(); ++i) {
      gt[i].merge(other.gt[i]);
      gv[i].merge(other.gv[i]);
      mt[i].merge(other.mt[i]);
      mv[i].merge(other.mv[i]);
    }
  }
};

Matrix finalize_symmetric(const std::vector<KahanSum>& tri, int d) {
  Matrix m(d, d);
  std::size_t idx = 0;
  for (int j = 0; j < d; ++j)
    for (int k = j; k < d; ++k) {
      double v = tri[idx++].value();
      m(j, k) = v;
      m(k, j) = v;
    }
  return m;
}

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("LIQSPEC_THREADS")) {
    int v = 0;
    auto [p, ec] = std::from_chars(env, env + std::string_view(env).size(), v);
    if (ec == std::errc() && v > 0) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

}  // namespace

GramPair accumulate(const TickSeries& series, const Basis& basis,
                    const AccumulateOptions& opts) {
  const int d = basis.dimension();
  if (d < 1 || d > kMaxDimension)
    throw std::invalid_argument("basis dimension must be in [1, 64]");
  if (series.size() < 2)
    throw std::invalid_argument("series needs at least 2 ticks");

  const std::size_t n = series.size();
  const std::size_t chunk = std::max<std::size_t>(1, opts.chunk_ticks);
  const std::size_t num_chunks = (n - 1 + chunk - 1) / chunk;
  std::vector<ChunkAccumulator> chunks(num_chunks, ChunkAccumulator(d));

  auto run_chunk = [&](std::size_t c) {
    std::size_t q_begin = 1 + c * chunk;
    std::size_t q_end = std::min(n, q_begin + chunk);
    chunks[c].run(series, basis, q_begin, q_end);
  };

  int threads = std::min<int>(resolve_threads(opts.threads),
                              static_cast<int>(num_chunks));
  if (threads <= 1) {
    for (std::size_t c = 0; c < num_chunks; ++c) run_chunk(c);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        for (std::size_t c = static_cast<std::size_t>(t); c < num_chunks;
             c += static_cast<std::size_t>(threads))
          run_chunk(c);
      });
    }
    for (auto& th : pool) th.join();
  }

  // ordered merge: identical result for any thread count
  ChunkAccumulator total(d);
  for (const auto& c : chunks) total.merge(c);

  GramPair out;
  out.d = d;
  out.Gt = finalize_symmetric(total.gt, d);
  out.Gv = finalize_symmetric(total.gv, d);
  out.Mt = finalize_symmetric(total.mt, d);
  out.Mv = finalize_symmetric(total.mv, d);
  out.total_time = out.Gt(0, 0);
  out.total_volume = out.Gv(0, 0);
  if (out.total_time <= 0.0)
    throw DegenerateMeasureError("time measure is null");
  return out;
}

GramPair merge(const GramPair& a, const GramPair& b) {
  if (a.d != b.d) throw std::invalid_argument("dimension mismatch in GramPair merge");
  GramPair out = a;
  auto add = [](Matrix& dst, const Matrix& src) {
    for (int j = 0; j < dst.rows(); ++j)
      for (int k = 0; k < dst.cols(); ++k) dst(j, k) += src(j, k);
  };
  add(out.Gt, b.Gt);
  add(out.Gv, b.Gv);
  add(out.Mt, b.Mt);
  add(out.Mv, b.Mv);
  out.total_time = out.Gt(0, 0);
  out.total_volume = out.Gv(0, 0);
  return out;
}

double weighted_moment(const TickSeries& series, Weight weight,
                       const std::function<double(double)>& f) {
  KahanSum acc;
  for (std::size_t q = 1; q < series.size(); ++q) {
    const Tick& cur = series.ticks[q];
    const Tick& prev = series.ticks[q - 1];
    double dw = weight == Weight::kTime
                    ? static_cast<double>(cur.t_ns - prev.t_ns) * 1e-9
                    : static_cast<double>(cur.volume - prev.volume);
    if (dw == 0.0) continue;
    acc.add(dw * f(cur.price()));
  }
  return acc.value();
}

}  // namespace liqspec
