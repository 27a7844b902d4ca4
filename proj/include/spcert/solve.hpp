#pragma once

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "spcert/certificate.hpp"
#include "spcert/certify.hpp"
#include "spcert/errors.hpp"
#include "spcert/graph.hpp"

namespace spcert {

/// Either the true distance labels, or proof that they do not exist.
class SolveOutcome {
 public:
  static SolveOutcome distances(Certificate cert) {
    return SolveOutcome(std::move(cert));
  }
  static SolveOutcome negative_cycle(CycleWitness witness) {
    return SolveOutcome(std::move(witness));
  }

  bool has_distances() const noexcept {
    return std::holds_alternative<Certificate>(v_);
  }

  const Certificate& distances() const {
    assert(has_distances());
    return std::get<Certificate>(v_);
  }
  const CycleWitness& cycle() const {
    assert(!has_distances());
    return std::get<CycleWitness>(v_);
  }

  friend bool operator==(const SolveOutcome&, const SolveOutcome&) = default;

 private:
  explicit SolveOutcome(Certificate c) : v_(std::move(c)) {}
  explicit SolveOutcome(CycleWitness w) : v_(std::move(w)) {}

  std::variant<Certificate, CycleWitness> v_;
};

namespace detail {

/// Walks predecessor arcs n steps from v to land inside the cycle the
/// predecessor record is guaranteed to contain once round n still
/// relaxes, then collects one loop in forward arc order.
inline CycleWitness extract_pred_cycle(const Graph& g,
                                       const std::vector<ArcId>& pred,
                                       VertexId v) {
  VertexId x = v;
  for (std::size_t i = 0; i < g.num_vertices(); ++i) {
    assert(pred[static_cast<std::size_t>(x)] >= 0);
    x = g.arc(pred[static_cast<std::size_t>(x)]).tail;
  }
  std::vector<ArcId> arcs;
  VertexId cur = x;
  do {
    const ArcId a = pred[static_cast<std::size_t>(cur)];
    assert(a >= 0);
    arcs.push_back(a);
    cur = g.arc(a).tail;
  } while (cur != x);
  std::reverse(arcs.begin(), arcs.end());
  return CycleWitness{std::move(arcs)};
}

}  // namespace detail

/// Reference prover: n-1 rounds of relaxation over all arcs in id order
/// from labels (0 at s, infinity elsewhere), with a predecessor-arc
/// record and an early exit once a round relaxes nothing. If a further
/// full pass still relaxes some arc, a negative cycle reachable from s
/// exists; it is extracted from the predecessor record and returned as
/// the witness. O(n*m) worst case.
inline SolveOutcome bellman_ford(const Graph& g, VertexId s) {
  if (!g.contains_vertex(s)) {
    throw VertexOutOfRange("source " + std::to_string(s) + " outside [0, " +
                               std::to_string(g.num_vertices()) + ")",
                           s);
  }
  const std::size_t n = g.num_vertices();
  const auto arcs = g.arcs();

  std::vector<Dist> dist(n, Dist::infinity());
  std::vector<ArcId> pred(n, -1);
  dist[static_cast<std::size_t>(s)] = Dist::finite(0);

  bool maybe_more = true;
  for (std::size_t round = 1; round + 1 <= n && maybe_more; ++round) {
    maybe_more = false;
    for (std::size_t a = 0; a < arcs.size(); ++a) {
      const Dist dt = dist[static_cast<std::size_t>(arcs[a].tail)];
      if (dt.is_infinity()) continue;
      const Dist via = dt.plus(arcs[a].weight);
      if (via < dist[static_cast<std::size_t>(arcs[a].head)]) {
        dist[static_cast<std::size_t>(arcs[a].head)] = via;
        pred[static_cast<std::size_t>(arcs[a].head)] = static_cast<ArcId>(a);
        maybe_more = true;
      }
    }
  }

  if (maybe_more) {
    for (std::size_t a = 0; a < arcs.size(); ++a) {
      const Dist dt = dist[static_cast<std::size_t>(arcs[a].tail)];
      if (dt.is_infinity()) continue;
      if (dt.plus(arcs[a].weight) <
          dist[static_cast<std::size_t>(arcs[a].head)]) {
        pred[static_cast<std::size_t>(arcs[a].head)] = static_cast<ArcId>(a);
        return SolveOutcome::negative_cycle(
            detail::extract_pred_cycle(g, pred, arcs[a].head));
      }
    }
  }
  return SolveOutcome::distances(Certificate(std::move(dist)));
}

/// Hard cap for the exhaustive solver.
inline constexpr std::size_t kBruteForceMaxVertices = 10;

/// Independent ground-truth oracle for tiny graphs. Enumerates all
/// simple directed cycles; if one with negative total weight is
/// reachable from s, returns the minimum-weight such cycle. Otherwise
/// d[v] is the minimum over all simple s->v paths (infinity when none),
/// which equals the true distance because without reachable negative
/// cycles some shortest path is simple. Exponential; refuses n > 10.
inline SolveOutcome brute_force_solve(const Graph& g, VertexId s) {
  if (!g.contains_vertex(s)) {
    throw VertexOutOfRange("source " + std::to_string(s) + " outside [0, " +
                               std::to_string(g.num_vertices()) + ")",
                           s);
  }
  const std::size_t n = g.num_vertices();
  if (n > kBruteForceMaxVertices) {
    throw TooLargeForBruteForce("brute_force_solve: " + std::to_string(n) +
                                " vertices exceeds the cap of " +
                                std::to_string(kBruteForceMaxVertices));
  }

  const auto reach = reachable_set(g, s);

  // Cycle enumeration, canonicalized by the smallest vertex on the
  // cycle; a cycle is reachable from s iff that vertex is (the cycle's
  // own arcs connect its vertices to each other).
  std::optional<CycleWitness> best;
  std::int64_t best_weight = 0;
  std::vector<char> on_path(n, 0);
  std::vector<ArcId> path;

  auto search_cycles = [&](auto&& self, VertexId start, VertexId u,
                           std::int64_t weight) -> void {
    for (const OutArc& arc : g.out_arcs(u)) {
      if (arc.head == start) {
        const std::int64_t total = weight + arc.weight;
        if (total < 0 && (!best || total < best_weight)) {
          path.push_back(arc.id);
          best = CycleWitness{path};
          best_weight = total;
          path.pop_back();
        }
        continue;
      }
      if (arc.head < start || on_path[static_cast<std::size_t>(arc.head)]) {
        continue;
      }
      on_path[static_cast<std::size_t>(arc.head)] = 1;
      path.push_back(arc.id);
      self(self, start, arc.head, weight + arc.weight);
      path.pop_back();
      on_path[static_cast<std::size_t>(arc.head)] = 0;
    }
  };

  for (VertexId c = 0; static_cast<std::size_t>(c) < n; ++c) {
    if (!reach[static_cast<std::size_t>(c)]) continue;
    search_cycles(search_cycles, c, c, 0);
  }
  if (best) return SolveOutcome::negative_cycle(std::move(*best));

  // No reachable negative cycle: take the minimum over simple paths.
  std::vector<Dist> dist(n, Dist::infinity());
  std::vector<char> visited(n, 0);

  auto search_paths = [&](auto&& self, VertexId u, std::int64_t weight) -> void {
    if (Dist::finite(weight) < dist[static_cast<std::size_t>(u)]) {
      dist[static_cast<std::size_t>(u)] = Dist::finite(weight);
    }
    for (const OutArc& arc : g.out_arcs(u)) {
      if (visited[static_cast<std::size_t>(arc.head)]) continue;
      visited[static_cast<std::size_t>(arc.head)] = 1;
      self(self, arc.head, weight + arc.weight);
      visited[static_cast<std::size_t>(arc.head)] = 0;
    }
  };

  visited[static_cast<std::size_t>(s)] = 1;
  search_paths(search_paths, s, 0);
  return SolveOutcome::distances(Certificate(std::move(dist)));
}

}  // namespace spcert
