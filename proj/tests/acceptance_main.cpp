// Acceptance suite: one pass/fail line per criterion, exit code equals
// the number of failures. Criteria (thresholds pinned in code):
//
//   1. Oracle equivalence over 1000 seeded tiny instances (< 60 s).
//   2. The verifier and the naive checker accept every true certificate.
//   3. Every applicable mutation of a true certificate is rejected
//      (>= 4 mutations per solvable instance, 100% kill).
//   4. 250 negative-cycle injections: Bellman-Ford emits a witness that
//      checks out, and the all-finite labels after n-1 relaxation
//      rounds are rejected.
//   5. certify and check_constraints_naive agree on accept/reject over
//      every certificate the suite tries, plus random ones.
//   6. Scaling bench at n=10^4, m in {1e5, 2e5, 4e5}: consecutive
//      certify-time ratios in [1.3, 3.0] and certify >= 5x faster than
//      Bellman-Ford at the largest size (< 2 min).
//   7. 500 seeded documents per format survive parse(write(x)) == x.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "spcert/spcert.hpp"

namespace {

using namespace spcert;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::int64_t now_ms() {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

// Deterministic sweep instances: n <= 8, m <= 20, weights in [-8, 8],
// modes alternating. Mirrors `spcert selftest`.
struct SweepInstance {
  Graph graph;
  VertexId source;
};

SweepInstance sweep_instance(std::uint64_t i) {
  std::mt19937_64 rng(0xACCE57u ^ (i * 0x9e3779b97f4a7c15ull));
  GenParams p;
  p.n = 1 + rng() % 8;
  p.m = rng() % 21;
  p.wmin = -8;
  p.wmax = 8;
  p.mode = (i % 2 == 0) ? GenMode::kUnrestricted : GenMode::kNoNegativeCycle;
  p.seed = rng();
  Graph g = gen_random_graph(p);
  std::mt19937_64 source_rng(p.seed ^ 0x5eed);
  const auto s = static_cast<VertexId>(source_rng() % p.n);
  return SweepInstance{std::move(g), s};
}

constexpr std::uint64_t kSweepSize = 1000;

// Labels Bellman-Ford holds after `rounds` full relaxation passes;
// written out independently of the library solver on purpose.
Certificate relaxation_labels(const Graph& g, VertexId s, std::size_t rounds) {
  std::vector<Dist> dist(g.num_vertices(), Dist::infinity());
  dist[static_cast<std::size_t>(s)] = Dist::finite(0);
  for (std::size_t r = 0; r < rounds; ++r) {
    for (const Arc& a : g.arcs()) {
      const Dist dt = dist[static_cast<std::size_t>(a.tail)];
      if (dt.is_infinity()) continue;
      const Dist via = dt.plus(a.weight);
      if (via < dist[static_cast<std::size_t>(a.head)]) {
        dist[static_cast<std::size_t>(a.head)] = via;
      }
    }
  }
  return Certificate(std::move(dist));
}

std::vector<MutationKind> mutation_battery() {
  return {PerturbFinite(1),    PerturbFinite(-1),     PerturbFinite(5),
          FiniteToInfinity{},  InfinityToFinite(0),   InfinityToFinite(7),
          CorruptSource(1),    CorruptSource(-3),     CorruptSource(42)};
}

Outcome criterion_oracle_equivalence() {
  const std::int64_t t0 = now_ms();
  std::size_t solvable = 0;
  std::size_t cyclic = 0;
  for (std::uint64_t i = 0; i < kSweepSize; ++i) {
    const SweepInstance inst = sweep_instance(i);
    const SolveOutcome brute = brute_force_solve(inst.graph, inst.source);
    const SolveOutcome fast = bellman_ford(inst.graph, inst.source);
    if (brute.has_distances() != fast.has_distances()) {
      return {false, "instance " + std::to_string(i) +
                         ": solvers disagree on the discriminant"};
    }
    if (fast.has_distances()) {
      ++solvable;
      if (brute.distances() != fast.distances()) {
        return {false,
                "instance " + std::to_string(i) + ": distance labels differ"};
      }
    } else {
      ++cyclic;
      if (!verify_negative_cycle_witness(inst.graph, inst.source,
                                         fast.cycle()) ||
          !verify_negative_cycle_witness(inst.graph, inst.source,
                                         brute.cycle())) {
        return {false,
                "instance " + std::to_string(i) + ": bad cycle witness"};
      }
    }
  }
  const std::int64_t elapsed = now_ms() - t0;
  if (elapsed >= 60000) {
    return {false, "sweep took " + std::to_string(elapsed) + " ms (>= 60 s)"};
  }
  return {true, std::to_string(kSweepSize) + " instances (" +
                    std::to_string(solvable) + " solvable, " +
                    std::to_string(cyclic) + " cyclic), " +
                    std::to_string(elapsed) + " ms"};
}

Outcome criterion_prover_verifier() {
  std::size_t checked = 0;
  for (std::uint64_t i = 0; i < kSweepSize; ++i) {
    const SweepInstance inst = sweep_instance(i);
    const SolveOutcome out = bellman_ford(inst.graph, inst.source);
    if (!out.has_distances()) continue;
    ++checked;
    if (!certify(inst.graph, inst.source, out.distances()).is_accept()) {
      return {false, "instance " + std::to_string(i) +
                         ": certify rejected a true certificate"};
    }
    if (!check_constraints_naive(inst.graph, inst.source, out.distances())
             .is_accept()) {
      return {false, "instance " + std::to_string(i) +
                         ": naive checker rejected a true certificate"};
    }
  }
  return {true,
          std::to_string(checked) + " solvable instances, 100% accepted"};
}

Outcome criterion_mutation_kill() {
  std::size_t total = 0;
  std::size_t instances = 0;
  const auto kinds = mutation_battery();
  for (std::uint64_t i = 0; i < kSweepSize; ++i) {
    const SweepInstance inst = sweep_instance(i);
    const SolveOutcome out = bellman_ford(inst.graph, inst.source);
    if (!out.has_distances()) continue;
    ++instances;
    std::size_t applied = 0;
    for (std::size_t k = 0; k < kinds.size(); ++k) {
      const auto mutated = mutate_certificate(out.distances(), kinds[k],
                                              inst.source, i * 100 + k);
      if (!mutated) continue;
      ++applied;
      if (certify(inst.graph, inst.source, *mutated).is_accept()) {
        return {false, "instance " + std::to_string(i) + " mutation " +
                           std::to_string(k) + " survived certify"};
      }
    }
    if (applied < 4) {
      return {false, "instance " + std::to_string(i) + ": only " +
                         std::to_string(applied) + " applicable mutations"};
    }
    total += applied;
  }
  return {true, std::to_string(total) + " mutations over " +
                    std::to_string(instances) + " instances, 100% killed"};
}

constexpr std::uint64_t kNegativeInstances = 250;

struct NegativeInstance {
  Graph graph;
};

NegativeInstance negative_instance(std::uint64_t i) {
  std::mt19937_64 rng(0xBADC0DEull + i * 0x9e3779b97f4a7c15ull);
  GenParams p;
  p.n = 1 + rng() % 8;
  p.m = rng() % 16;
  p.wmin = -8;
  p.wmax = 8;
  p.mode = (i % 2 == 0) ? GenMode::kUnrestricted : GenMode::kNoNegativeCycle;
  p.seed = rng();
  const Graph base = gen_random_graph(p);
  const std::size_t k = 1 + rng() % p.n;
  return NegativeInstance{inject_negative_cycle(base, k, rng())};
}

Outcome criterion_negative_cycle() {
  for (std::uint64_t i = 0; i < kNegativeInstances; ++i) {
    const NegativeInstance inst = negative_instance(i);
    const VertexId s = 0;  // the injector guarantees reachability from 0
    const SolveOutcome out = bellman_ford(inst.graph, s);
    if (out.has_distances()) {
      return {false,
              "instance " + std::to_string(i) + ": cycle went undetected"};
    }
    if (!verify_negative_cycle_witness(inst.graph, s, out.cycle())) {
      return {false, "instance " + std::to_string(i) +
                         ": witness failed verification"};
    }
    const Certificate candidate =
        relaxation_labels(inst.graph, s, inst.graph.num_vertices() - 1);
    if (certify(inst.graph, s, candidate).is_accept()) {
      return {false, "instance " + std::to_string(i) +
                         ": relaxation labels were accepted"};
    }
  }
  return {true, std::to_string(kNegativeInstances) +
                    " injected instances, 100% witnessed and rejected"};
}

Outcome criterion_decision_equivalence() {
  std::size_t compared = 0;
  const auto kinds = mutation_battery();
  auto agree = [&](const Graph& g, VertexId s, const Certificate& cert) {
    ++compared;
    return certify(g, s, cert).is_accept() ==
           check_constraints_naive(g, s, cert).is_accept();
  };

  for (std::uint64_t i = 0; i < kSweepSize; ++i) {
    const SweepInstance inst = sweep_instance(i);

    // A random certificate, independent of any solver.
    std::mt19937_64 rng(0xDEC1DEull + i);
    std::vector<Dist> labels(inst.graph.num_vertices());
    for (auto& d : labels) {
      d = (rng() % 4 == 0)
              ? Dist::infinity()
              : Dist::finite(static_cast<std::int64_t>(rng() % 33) - 16);
    }
    if (!agree(inst.graph, inst.source, Certificate(std::move(labels)))) {
      return {false, "instance " + std::to_string(i) +
                         ": random certificate decision mismatch"};
    }

    const SolveOutcome out = bellman_ford(inst.graph, inst.source);
    if (out.has_distances()) {
      if (!agree(inst.graph, inst.source, out.distances())) {
        return {false, "instance " + std::to_string(i) +
                           ": true certificate decision mismatch"};
      }
      for (std::size_t k = 0; k < kinds.size(); ++k) {
        const auto mutated = mutate_certificate(out.distances(), kinds[k],
                                                inst.source, i * 100 + k);
        if (mutated && !agree(inst.graph, inst.source, *mutated)) {
          return {false, "instance " + std::to_string(i) + " mutation " +
                             std::to_string(k) + ": decision mismatch"};
        }
      }
    }
  }

  for (std::uint64_t i = 0; i < kNegativeInstances; ++i) {
    const NegativeInstance inst = negative_instance(i);
    const Certificate candidate =
        relaxation_labels(inst.graph, 0, inst.graph.num_vertices() - 1);
    if (!agree(inst.graph, 0, candidate)) {
      return {false, "negative instance " + std::to_string(i) +
                         ": decision mismatch"};
    }
  }
  return {true, std::to_string(compared) + " certificates, 100% agreement"};
}

Outcome criterion_linear_time() {
  const std::int64_t t0 = now_ms();
  const std::vector<std::pair<std::size_t, std::size_t>> sizes = {
      {10000, 100000}, {10000, 200000}, {10000, 400000}};
  const BenchReport report = run_scaling_bench(sizes, 1, 7);
  const std::int64_t elapsed = now_ms() - t0;

  std::string detail;
  for (const BenchRow& r : report.rows) {
    detail += "(m=" + std::to_string(r.m) + " certify " +
              std::to_string(r.certify_ns) + " ns, bf " +
              std::to_string(r.bellman_ford_ns) + " ns) ";
  }
  detail += std::to_string(elapsed) + " ms";

  for (std::size_t i = 1; i < report.rows.size(); ++i) {
    const double ratio =
        static_cast<double>(report.rows[i].certify_ns) /
        static_cast<double>(report.rows[i - 1].certify_ns);
    if (ratio < 1.3 || ratio > 3.0) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "certify ratio %.2f outside [1.3, 3.0]; ",
                    ratio);
      return {false, buf + detail};
    }
  }
  const double speedup = report.rows.back().speedup;
  if (speedup < 5.0) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "speedup %.2f < 5 at m=400000; ", speedup);
    return {false, buf + detail};
  }
  if (elapsed >= 120000) {
    return {false, "bench took " + std::to_string(elapsed) + " ms (>= 2 min)"};
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "speedup %.1fx at m=400000; ", speedup);
  return {true, buf + detail};
}

Outcome criterion_format_round_trip() {
  std::mt19937_64 rng(0xF02447ull);
  constexpr int kDocs = 500;
  for (int i = 0; i < kDocs; ++i) {
    GenParams p;
    p.n = 1 + rng() % 40;
    p.m = rng() % 80;
    p.wmin = -200;
    p.wmax = 200;
    p.mode = (i % 2 == 0) ? GenMode::kUnrestricted : GenMode::kNoNegativeCycle;
    p.seed = rng();

    GraphDocument doc;
    doc.graph = gen_random_graph(p);
    if (i % 3 != 0) doc.source = static_cast<VertexId>(rng() % p.n);
    if (parse_gr(write_gr(doc)) != doc) {
      return {false, "graph document " + std::to_string(i) +
                         " failed parse(write(x)) == x"};
    }

    std::vector<Dist> labels(p.n);
    for (auto& d : labels) {
      switch (rng() % 4) {
        case 0:
          d = Dist::infinity();
          break;
        case 1:
          d = Dist::finite((rng() % 2 ? 1 : -1) *
                           (std::int64_t{1} << 62));
          break;
        default:
          d = Dist::finite(static_cast<std::int64_t>(rng() % 4001) - 2000);
      }
    }
    const Certificate cert(std::move(labels));
    if (parse_cert(write_cert(cert), p.n) != cert) {
      return {false, "certificate " + std::to_string(i) +
                         " failed parse(write(x)) == x"};
    }
  }
  return {true, std::to_string(kDocs) +
                    " documents per format, 100% identical round trips"};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {"oracle equivalence sweep", criterion_oracle_equivalence},
      {"prover-verifier soundness", criterion_prover_verifier},
      {"mutation kill rate", criterion_mutation_kill},
      {"negative-cycle rejection", criterion_negative_cycle},
      {"decision equivalence", criterion_decision_equivalence},
      {"linear-time evidence", criterion_linear_time},
      {"format round-trip", criterion_format_round_trip},
  };

  int failures = 0;
  int index = 0;
  for (const Criterion& c : criteria) {
    ++index;
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    std::printf("[%d/7] %-28s %s  %s\n", index, c.name,
                outcome.pass ? "PASS" : "FAIL", outcome.detail.c_str());
    std::fflush(stdout);
    failures += outcome.pass ? 0 : 1;
  }
  std::printf("ACCEPTANCE: %d/7 criteria passed\n",
              7 - failures);
  return failures;
}
