#include <chrono>
#include <cstdio>
#include <ostream>
#include <random>

#include "tornheim/app.hpp"

namespace tornheim::app {
namespace {

constexpr std::uint64_t kBenchSeed = 20231107;

template <class F>
SeriesValue timed(F&& f, double& ms) {
  const auto t0 = std::chrono::steady_clock::now();
  SeriesValue v = f();
  ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return v;
}

bool clear_of(const TriplePoint& p, FunctionId f, double margin) {
  for (const SingularityReport& r : classify(p, f)) {
    if (r.distance < margin) return false;
  }
  return true;
}

}  // namespace

std::vector<PointRecord> default_bench_points(int count) {
  std::mt19937_64 rng(kBenchSeed);
  std::uniform_real_distribution<double> re(-2.5, 3.0), im(-1.0, 1.0);
  std::vector<PointRecord> out;
  while (static_cast<int>(out.size()) < count) {
    const TriplePoint p{{re(rng), im(rng)}, {re(rng), im(rng)}, {re(rng), im(rng)}};
    if (!clear_of(p, FunctionId::S1, 0.1) || !clear_of(p, FunctionId::S2, 0.1)) continue;
    char label[16];
    std::snprintf(label, sizeof label, "b%02zu", out.size() + 1);
    out.push_back({label, p});
  }
  return out;
}

std::vector<BenchRow> run_bench(const std::vector<PointRecord>& points, const EvalConfig& cfg) {
  std::vector<BenchRow> rows;
  rows.reserve(points.size());
  for (const PointRecord& rec : points) {
    BenchRow row;
    row.label = rec.label;
    row.point = rec.point;
    const SeriesValue a = timed([&] { return eval_S1(rec.point, cfg); }, row.s1_ms);
    const SeriesValue b = timed([&] { return eval_S1_legacy(rec.point, cfg); }, row.s1_legacy_ms);
    const SeriesValue c = timed([&] { return eval_S2(rec.point, cfg); }, row.s2_ms);
    const SeriesValue d = timed([&] { return eval_S2_legacy(rec.point, cfg); }, row.s2_legacy_ms);
    row.s1_terms = a.terms_used;
    row.s1_legacy_terms = b.terms_used;
    row.s2_terms = c.terms_used;
    row.s2_legacy_terms = d.terms_used;
    row.s1_diff = std::abs(a.value - b.value);
    row.s2_diff = std::abs(c.value - d.value);
    rows.push_back(row);
  }
  return rows;
}

double bench_win_fraction(const std::vector<BenchRow>& rows) {
  if (rows.empty()) return 0.0;
  std::size_t wins = 0;
  for (const BenchRow& r : rows) {
    wins += r.s1_terms <= r.s1_legacy_terms;
    wins += r.s2_terms <= r.s2_legacy_terms;
  }
  return static_cast<double>(wins) / (2.0 * static_cast<double>(rows.size()));
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << "label,s,t,u,s1_terms,s1_legacy_terms,s1_ms,s1_legacy_ms,s1_diff,"
         "s2_terms,s2_legacy_terms,s2_ms,s2_legacy_ms,s2_diff\n";
  char buf[512];
  for (const BenchRow& r : rows) {
    std::snprintf(buf, sizeof buf, "%s,%s,%s,%s,%lld,%lld,%.4f,%.4f,%.3e,%lld,%lld,%.4f,%.4f,%.3e\n", r.label.c_str(),
                  format_complex(r.point.s).c_str(), format_complex(r.point.t).c_str(),
                  format_complex(r.point.u).c_str(), static_cast<long long>(r.s1_terms),
                  static_cast<long long>(r.s1_legacy_terms), r.s1_ms, r.s1_legacy_ms, r.s1_diff,
                  static_cast<long long>(r.s2_terms), static_cast<long long>(r.s2_legacy_terms), r.s2_ms,
                  r.s2_legacy_ms, r.s2_diff);
    out << buf;
  }
}

}  // namespace tornheim::app
