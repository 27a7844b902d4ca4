// Command-line front end: verify / solve / gen / mutate / bench / selftest.
//
// Exit codes: verify 0 = accept, 1 = reject, 2 = input error;
// solve 0 = solved, 1 = negative cycle, 2 = error; mutate 1 = no
// eligible target; selftest 1 = a check failed; anything malformed
// exits 2 with a diagnostic, never a crash.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "spcert/spcert.hpp"

namespace {

using namespace spcert;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (!in.good() && !in.eof()) throw Error("cannot read " + path);
  return std::move(ss).str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path + " for writing");
  out << text;
  if (!out.good()) throw Error("cannot write " + path);
}

void emit(const std::optional<std::string>& out_path, const std::string& text) {
  if (out_path) {
    write_file(*out_path, text);
  } else {
    std::cout << text;
  }
}

// One-based on the outside, zero-based inside.
VertexId to_internal_vertex(std::int64_t one_based, std::size_t n) {
  if (one_based < 1 || static_cast<std::uint64_t>(one_based) > n) {
    throw Error("vertex " + std::to_string(one_based) + " outside [1, " +
                std::to_string(n) + "]");
  }
  return static_cast<VertexId>(one_based - 1);
}

VertexId resolve_source(const GraphDocument& doc,
                        const std::optional<std::int64_t>& flag) {
  if (flag) return to_internal_vertex(*flag, doc.graph.num_vertices());
  if (doc.source) return *doc.source;
  throw Error("no source: pass -s or add an 's' line to the graph file");
}

std::string describe_reject(const Graph& g, const VerifyResult& r) {
  std::string out = "REJECT ";
  out += to_string(r.reason());
  if (r.reason() == RejectReason::kRelaxationViolated) {
    const ArcId a = r.witness_arc();
    const Arc& arc = g.arc(a);
    out += " arc " + std::to_string(a) + " (" +
           std::to_string(static_cast<std::int64_t>(arc.tail) + 1) + " -> " +
           std::to_string(static_cast<std::int64_t>(arc.head) + 1) + " w " +
           std::to_string(arc.weight) + ")";
  } else {
    out += " vertex " +
           std::to_string(static_cast<std::int64_t>(r.witness_vertex()) + 1);
  }
  return out;
}

int cmd_verify(const std::string& graph_path, const std::string& cert_path,
               const std::optional<std::int64_t>& source_flag) {
  const GraphDocument doc = parse_gr(read_file(graph_path));
  const VertexId s = resolve_source(doc, source_flag);
  const Certificate cert =
      parse_cert(read_file(cert_path), doc.graph.num_vertices());
  const VerifyResult result = certify(doc.graph, s, cert);
  if (result.is_accept()) {
    std::cout << "ACCEPT\n";
    return 0;
  }
  std::cout << describe_reject(doc.graph, result) << "\n";
  return 1;
}

int cmd_solve(const std::string& graph_path,
              const std::optional<std::int64_t>& source_flag,
              const std::optional<std::string>& out_path) {
  const GraphDocument doc = parse_gr(read_file(graph_path));
  const VertexId s = resolve_source(doc, source_flag);
  const SolveOutcome outcome = bellman_ford(doc.graph, s);
  if (outcome.has_distances()) {
    const std::string text = write_cert(outcome.distances());
    if (out_path) {
      write_file(*out_path, text);
      std::cout << "SOLVED n=" << doc.graph.num_vertices() << " -> "
                << *out_path << "\n";
    } else {
      std::cout << text;
    }
    return 0;
  }
  const CycleWitness& w = outcome.cycle();
  std::int64_t total = 0;
  std::string arcs;
  for (const ArcId a : w.arc_ids) {
    total += doc.graph.arc(a).weight;
    arcs += ' ' + std::to_string(a);
  }
  std::cout << "NEGATIVE-CYCLE weight " << total << " arcs" << arcs << "\n";
  return 1;
}

int cmd_gen(const GenParams& params, std::int64_t source_one_based,
            const std::optional<std::string>& out_path) {
  GraphDocument doc;
  doc.graph = gen_random_graph(params);
  doc.source = to_internal_vertex(source_one_based, params.n);
  emit(out_path, write_gr(doc));
  return 0;
}

int cmd_mutate(const std::string& cert_path, const MutationKind& kind,
               std::int64_t source_one_based, std::uint64_t seed,
               const std::optional<std::string>& out_path) {
  const std::string text = read_file(cert_path);
  const Certificate cert = parse_cert(text, peek_cert_size(text));
  const VertexId s = to_internal_vertex(source_one_based, cert.size());
  const std::optional<Certificate> mutated =
      mutate_certificate(cert, kind, s, seed);
  if (!mutated) {
    std::cout << "NO-TARGET\n";
    return 1;
  }
  emit(out_path, write_cert(*mutated));
  return 0;
}

int cmd_bench(std::size_t n, const std::vector<std::size_t>& ms,
              std::uint64_t seed, int reps,
              const std::optional<std::string>& csv_path) {
  std::vector<std::pair<std::size_t, std::size_t>> sizes;
  sizes.reserve(ms.size());
  for (const std::size_t m : ms) sizes.emplace_back(n, m);
  const BenchReport report = run_scaling_bench(sizes, seed, reps);
  std::cout << format_bench_table(report);
  const std::string csv = format_bench_csv(report);
  if (csv_path) {
    write_file(*csv_path, csv);
  } else {
    std::cout << "\n" << csv;
  }
  return 0;
}

// Same derivation as the acceptance sweep: tiny graphs, weights in
// [-8, 8], alternating modes.
GenParams sweep_params(std::uint64_t i) {
  std::mt19937_64 rng(0xACCE57u ^ (i * 0x9e3779b97f4a7c15ull));
  GenParams p;
  p.n = 1 + rng() % 8;
  p.m = rng() % 21;
  p.wmin = -8;
  p.wmax = 8;
  p.mode = (i % 2 == 0) ? GenMode::kUnrestricted : GenMode::kNoNegativeCycle;
  p.seed = rng();
  return p;
}

int cmd_selftest(std::uint64_t instances, std::uint64_t seed) {
  std::size_t solvable = 0;
  std::size_t cyclic = 0;
  for (std::uint64_t i = 0; i < instances; ++i) {
    const GenParams p = sweep_params(seed + i);
    const Graph g = gen_random_graph(p);
    std::mt19937_64 rng(p.seed ^ 0x5eed);
    const auto s = static_cast<VertexId>(rng() % p.n);

    const SolveOutcome brute = brute_force_solve(g, s);
    const SolveOutcome fast = bellman_ford(g, s);
    if (brute.has_distances() != fast.has_distances()) {
      std::cout << "FAIL instance " << i
                << ": solvers disagree on the discriminant\n";
      return 1;
    }
    if (fast.has_distances()) {
      ++solvable;
      if (brute.distances() != fast.distances()) {
        std::cout << "FAIL instance " << i << ": distance labels differ\n";
        return 1;
      }
      const VerifyResult v = certify(g, s, fast.distances());
      const VerifyResult nv = check_constraints_naive(g, s, fast.distances());
      if (!v.is_accept() || !nv.is_accept()) {
        std::cout << "FAIL instance " << i
                  << ": true certificate not accepted\n";
        return 1;
      }
    } else {
      ++cyclic;
      if (!verify_negative_cycle_witness(g, s, fast.cycle()) ||
          !verify_negative_cycle_witness(g, s, brute.cycle())) {
        std::cout << "FAIL instance " << i << ": bad cycle witness\n";
        return 1;
      }
    }
  }
  std::cout << "SELFTEST PASS " << instances << " instances (" << solvable
            << " solvable, " << cyclic << " with a negative cycle)\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "spcert: verify single-source shortest-path distance certificates in "
      "linear time (directed graphs, negative weights allowed).\n"
      "Files use the DIMACS-style .gr dialect and the 'p cert' certificate "
      "dialect; vertices are one-based in files and CLI flags.\n"
      "Exit codes: 0 ok/accept, 1 reject / negative cycle / no target, "
      "2 input error."};
  app.require_subcommand(1);

  // verify
  auto* verify_cmd =
      app.add_subcommand("verify", "Check a certificate against a graph");
  std::string verify_graph;
  std::string verify_cert;
  std::optional<std::int64_t> verify_source;
  verify_cmd->add_option("-g,--graph", verify_graph, "graph .gr file")
      ->required();
  verify_cmd->add_option("-c,--cert", verify_cert, "certificate file")
      ->required();
  verify_cmd->add_option("-s,--source", verify_source,
                         "source vertex (one-based; default: the graph "
                         "file's s line)");

  // solve
  auto* solve_cmd = app.add_subcommand(
      "solve", "Run Bellman-Ford; print the certificate or a negative cycle");
  std::string solve_graph;
  std::optional<std::int64_t> solve_source;
  std::optional<std::string> solve_out;
  solve_cmd->add_option("-g,--graph", solve_graph, "graph .gr file")
      ->required();
  solve_cmd->add_option("-s,--source", solve_source,
                        "source vertex (one-based; default: the graph "
                        "file's s line)");
  solve_cmd->add_option("-o,--output", solve_out,
                        "write the certificate here instead of stdout");

  // gen
  auto* gen_cmd =
      app.add_subcommand("gen", "Generate a seeded random graph file");
  GenParams gen_params;
  std::string gen_mode = "unrestricted";
  std::int64_t gen_source = 1;
  std::optional<std::string> gen_out;
  gen_cmd->add_option("--n", gen_params.n, "vertex count")->required();
  gen_cmd->add_option("--m", gen_params.m, "arc count")->required();
  gen_cmd->add_option("--wmin", gen_params.wmin, "minimum weight (default -8)");
  gen_cmd->add_option("--wmax", gen_params.wmax, "maximum weight (default 8)");
  gen_cmd
      ->add_option("--mode", gen_mode,
                   "unrestricted | no-negative-cycle (default unrestricted)")
      ->check(CLI::IsMember({"unrestricted", "no-negative-cycle"}));
  gen_cmd->add_option("--seed", gen_params.seed, "PRNG seed (default 0)");
  gen_cmd->add_option("--source", gen_source,
                      "source vertex recorded in the file (one-based, "
                      "default 1)");
  gen_cmd->add_option("-o,--output", gen_out, "output file (default stdout)");

  // mutate
  auto* mutate_cmd = app.add_subcommand(
      "mutate", "Corrupt one certificate label at a seeded-random vertex");
  std::string mutate_cert;
  std::string mutate_kind;
  std::int64_t mutate_delta = 1;
  std::int64_t mutate_value = 0;
  std::int64_t mutate_source = 1;
  std::uint64_t mutate_seed = 0;
  std::optional<std::string> mutate_out;
  mutate_cmd->add_option("-c,--cert", mutate_cert, "certificate file")
      ->required();
  mutate_cmd
      ->add_option("--kind", mutate_kind,
                   "perturb | fin2inf | inf2fin | corrupt-source")
      ->required()
      ->check(CLI::IsMember({"perturb", "fin2inf", "inf2fin",
                             "corrupt-source"}));
  mutate_cmd->add_option("--delta", mutate_delta,
                         "nonzero offset for kind=perturb (default 1)");
  mutate_cmd->add_option("--value", mutate_value,
                         "finite value for kind=inf2fin / corrupt-source");
  mutate_cmd->add_option("-s,--source", mutate_source,
                         "source vertex (one-based, default 1)");
  mutate_cmd->add_option("--seed", mutate_seed, "PRNG seed (default 0)");
  mutate_cmd->add_option("-o,--output", mutate_out,
                         "output file (default stdout)");

  // bench
  auto* bench_cmd = app.add_subcommand(
      "bench",
      "Scaling benchmark: certify vs Bellman-Ford on generated instances. "
      "CSV columns: n,m,certify_ns,bf_ns,speedup");
  std::size_t bench_n = 10000;
  std::vector<std::size_t> bench_ms = {100000, 200000, 400000};
  std::uint64_t bench_seed = 1;
  int bench_reps = 5;
  std::optional<std::string> bench_csv;
  bench_cmd->add_option("--n", bench_n, "vertex count (default 10000)");
  bench_cmd->add_option("--m", bench_ms,
                        "arc counts, one row each (default 100000 200000 "
                        "400000)");
  bench_cmd->add_option("--seed", bench_seed, "PRNG seed (default 1)");
  bench_cmd->add_option("--reps", bench_reps,
                        "repetitions per timing, medians reported (default 5)")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--csv", bench_csv,
                        "write the CSV rows here instead of stdout");

  // selftest
  auto* selftest_cmd = app.add_subcommand(
      "selftest", "Oracle-equivalence sweep over seeded tiny instances");
  std::uint64_t selftest_instances = 1000;
  std::uint64_t selftest_seed = 0;
  selftest_cmd->add_option("--instances", selftest_instances,
                           "instance count (default 1000)");
  selftest_cmd->add_option("--seed", selftest_seed, "sweep seed (default 0)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*verify_cmd) return cmd_verify(verify_graph, verify_cert, verify_source);
    if (*solve_cmd) return cmd_solve(solve_graph, solve_source, solve_out);
    if (*gen_cmd) {
      gen_params.mode = gen_mode == "unrestricted" ? GenMode::kUnrestricted
                                                   : GenMode::kNoNegativeCycle;
      return cmd_gen(gen_params, gen_source, gen_out);
    }
    if (*mutate_cmd) {
      std::optional<MutationKind> kind;
      if (mutate_kind == "perturb") {
        kind = PerturbFinite(mutate_delta);
      } else if (mutate_kind == "fin2inf") {
        kind = FiniteToInfinity{};
      } else if (mutate_kind == "inf2fin") {
        kind = InfinityToFinite(mutate_value);
      } else {
        kind = CorruptSource(mutate_value);
      }
      return cmd_mutate(mutate_cert, *kind, mutate_source, mutate_seed,
                        mutate_out);
    }
    if (*bench_cmd) {
      return cmd_bench(bench_n, bench_ms, bench_seed, bench_reps, bench_csv);
    }
    if (*selftest_cmd) return cmd_selftest(selftest_instances, selftest_seed);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
