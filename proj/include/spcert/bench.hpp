#pragma once

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "spcert/certify.hpp"
#include "spcert/errors.hpp"
#include "spcert/generate.hpp"
#include "spcert/graph.hpp"
#include "spcert/solve.hpp"

namespace spcert {

struct BenchRow {
  std::size_t n = 0;
  std::size_t m = 0;
  std::int64_t certify_ns = 0;
  std::int64_t bellman_ford_ns = 0;
  double speedup = 0.0;  // bellman_ford_ns / certify_ns
};

struct BenchReport {
  std::vector<BenchRow> rows;
  int repetitions = 0;
  std::int64_t timer_resolution_ns = 0;
  std::uint64_t seed = 0;
};

// Weight spread used for the generated benchmark instances; negative
// arcs occur but no negative cycle does (no_negative_cycle mode).
inline constexpr std::int64_t kBenchWeightMin = -10;
inline constexpr std::int64_t kBenchWeightMax = 100;

namespace detail {

inline std::int64_t now_ns() {
  return std::chrono::duration_cast<std::chrono::nanoseconds>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

inline std::int64_t median_ns(std::vector<std::int64_t> samples) {
  std::sort(samples.begin(), samples.end());
  const std::size_t k = samples.size();
  if (k % 2 == 1) return samples[k / 2];
  return (samples[k / 2 - 1] + samples[k / 2]) / 2;
}

}  // namespace detail

/// Smallest positive steady_clock delta observed over a few probes.
inline std::int64_t measure_timer_resolution_ns() {
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (int i = 0; i < 64; ++i) {
    const std::int64_t t0 = detail::now_ns();
    std::int64_t t1 = detail::now_ns();
    while (t1 == t0) t1 = detail::now_ns();
    best = std::min(best, t1 - t0);
  }
  return best;
}

/// For each (n, m): generates a no-negative-cycle instance, solves it
/// with bellman_ford, then times certify on the produced certificate
/// and bellman_ford itself, taking medians over the given repetitions.
/// Single-threaded so rows are comparable.
inline BenchReport run_scaling_bench(
    const std::vector<std::pair<std::size_t, std::size_t>>& sizes,
    std::uint64_t seed, int repetitions) {
  if (repetitions < 1) {
    throw InvalidParams("run_scaling_bench: repetitions must be >= 1");
  }
  BenchReport report;
  report.repetitions = repetitions;
  report.seed = seed;
  report.timer_resolution_ns = measure_timer_resolution_ns();

  std::size_t index = 0;
  for (const auto& [n, m] : sizes) {
    GenParams params;
    params.n = n;
    params.m = m;
    params.wmin = kBenchWeightMin;
    params.wmax = kBenchWeightMax;
    params.mode = GenMode::kNoNegativeCycle;
    params.seed = seed + index++;

    const Graph g = gen_random_graph(params);
    const VertexId s = 0;
    const SolveOutcome solved = bellman_ford(g, s);
    if (!solved.has_distances()) {
      throw Error("run_scaling_bench: no-negative-cycle instance produced a cycle");
    }
    const Certificate& cert = solved.distances();

    std::vector<std::int64_t> certify_ns;
    std::vector<std::int64_t> bf_ns;
    certify_ns.reserve(static_cast<std::size_t>(repetitions));
    bf_ns.reserve(static_cast<std::size_t>(repetitions));
    for (int r = 0; r < repetitions; ++r) {
      std::int64_t t0 = detail::now_ns();
      const VerifyResult res = certify(g, s, cert);
      std::int64_t t1 = detail::now_ns();
      if (!res.is_accept()) {
        throw Error("run_scaling_bench: reference certificate rejected");
      }
      certify_ns.push_back(t1 - t0);

      t0 = detail::now_ns();
      const SolveOutcome again = bellman_ford(g, s);
      t1 = detail::now_ns();
      if (!again.has_distances()) {
        throw Error("run_scaling_bench: unexpected negative cycle");
      }
      bf_ns.push_back(t1 - t0);
    }

    BenchRow row;
    row.n = n;
    row.m = m;
    row.certify_ns = detail::median_ns(std::move(certify_ns));
    row.bellman_ford_ns = detail::median_ns(std::move(bf_ns));
    row.speedup = row.certify_ns > 0 ? static_cast<double>(row.bellman_ford_ns) /
                                           static_cast<double>(row.certify_ns)
                                     : 0.0;
    report.rows.push_back(row);
  }
  return report;
}

/// One machine-readable row per size, fixed column order.
inline std::string format_bench_csv(const BenchReport& report) {
  std::string out = "n,m,certify_ns,bf_ns,speedup\n";
  char buf[32];
  for (const BenchRow& r : report.rows) {
    out += std::to_string(r.n) + ',' + std::to_string(r.m) + ',' +
           std::to_string(r.certify_ns) + ',' +
           std::to_string(r.bellman_ford_ns) + ',';
    std::snprintf(buf, sizeof buf, "%.2f", r.speedup);
    out += buf;
    out += '\n';
  }
  return out;
}

inline std::string format_bench_table(const BenchReport& report) {
  std::string out;
  char line[128];
  std::snprintf(line, sizeof line, "%10s %10s %14s %14s %9s\n", "n", "m",
                "certify_ns", "bf_ns", "speedup");
  out += line;
  for (const BenchRow& r : report.rows) {
    std::snprintf(line, sizeof line, "%10zu %10zu %14lld %14lld %8.2fx\n", r.n,
                  r.m, static_cast<long long>(r.certify_ns),
                  static_cast<long long>(r.bellman_ford_ns), r.speedup);
    out += line;
  }
  out += "medians of " + std::to_string(report.repetitions) +
         " repetitions; steady_clock resolution " +
         std::to_string(report.timer_resolution_ns) + " ns; seed " +
         std::to_string(report.seed) + "\n";
  return out;
}

}  // namespace spcert
