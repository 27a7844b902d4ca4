#pragma once

#include <cassert>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "spcert/certificate.hpp"
#include "spcert/errors.hpp"
#include "spcert/graph.hpp"

namespace spcert {

enum class RejectReason : std::uint8_t {
  kSourceNotZero,
  kRelaxationViolated,
  kFiniteButNotTightReachable,
  kUnreachableNotInfinity,
};

inline const char* to_string(RejectReason r) {
  switch (r) {
    case RejectReason::kSourceNotZero:
      return "SourceNotZero";
    case RejectReason::kRelaxationViolated:
      return "RelaxationViolated";
    case RejectReason::kFiniteButNotTightReachable:
      return "FiniteButNotTightReachable";
    case RejectReason::kUnreachableNotInfinity:
      return "UnreachableNotInfinity";
  }
  return "?";
}

/// Accept, or Reject carrying one reason plus the witness locating a
/// violated constraint instance: the offending arc for a relaxation
/// failure, the offending vertex otherwise.
class VerifyResult {
 public:
  static VerifyResult accept() { return VerifyResult(); }
  static VerifyResult reject_source_not_zero(VertexId s) {
    return VerifyResult(RejectReason::kSourceNotZero, s);
  }
  static VerifyResult reject_relaxation_violated(ArcId arc) {
    return VerifyResult(RejectReason::kRelaxationViolated, arc);
  }
  static VerifyResult reject_finite_not_tight(VertexId v) {
    return VerifyResult(RejectReason::kFiniteButNotTightReachable, v);
  }
  static VerifyResult reject_unreachable_not_infinity(VertexId v) {
    return VerifyResult(RejectReason::kUnreachableNotInfinity, v);
  }

  bool is_accept() const noexcept { return accept_; }

  RejectReason reason() const noexcept {
    assert(!accept_);
    return reason_;
  }
  ArcId witness_arc() const noexcept {
    assert(!accept_ && reason_ == RejectReason::kRelaxationViolated);
    return static_cast<ArcId>(witness_);
  }
  VertexId witness_vertex() const noexcept {
    assert(!accept_ && reason_ != RejectReason::kRelaxationViolated);
    return static_cast<VertexId>(witness_);
  }

  friend bool operator==(const VerifyResult&, const VerifyResult&) = default;

 private:
  VerifyResult() = default;
  VerifyResult(RejectReason reason, std::int64_t witness)
      : accept_(false), reason_(reason), witness_(witness) {}

  bool accept_ = true;
  RejectReason reason_ = RejectReason::kSourceNotZero;
  std::int64_t witness_ = -1;
};

inline std::ostream& operator<<(std::ostream& os, const VerifyResult& r) {
  if (r.is_accept()) return os << "Accept";
  os << "Reject(" << to_string(r.reason()) << ", ";
  if (r.reason() == RejectReason::kRelaxationViolated) {
    os << "arc " << r.witness_arc();
  } else {
    os << "vertex " << r.witness_vertex();
  }
  return os << ")";
}

/// A closed directed walk given as arc ids: head of each arc equals the
/// tail of the next, and the last wraps around to the first. Serves as
/// the unsolvability certificate for instances with a reachable
/// negative cycle.
struct CycleWitness {
  std::vector<ArcId> arc_ids;

  friend bool operator==(const CycleWitness&, const CycleWitness&) = default;
};

/// Work counters for the traversal; certify touches each vertex and arc
/// at most once, so vertices_popped <= n and arcs_scanned <= m.
struct CertifyStats {
  std::size_t vertices_popped = 0;
  std::size_t arcs_scanned = 0;
};

namespace detail {

inline void require_cert_matches(const Graph& g, VertexId s,
                                 const Certificate& cert) {
  if (!g.contains_vertex(s)) {
    throw VertexOutOfRange("source " + std::to_string(s) + " outside [0, " +
                               std::to_string(g.num_vertices()) + ")",
                           s);
  }
  if (cert.size() != g.num_vertices()) {
    throw CertLengthMismatch("certificate has " + std::to_string(cert.size()) +
                             " labels for a graph with " +
                             std::to_string(g.num_vertices()) + " vertices");
  }
}

}  // namespace detail

/// Linear-time certificate check.
///
/// Rejects unless cert[s] = 0, then runs a LIFO traversal from s that
/// follows tight arcs only (cert[v] = cert[u] + w with a finite tail),
/// rejecting on the first scanned arc with cert[head] > cert[tail] + w.
/// Afterwards every vertex the traversal did not mark must carry an
/// infinite label; a finite label is classified as
/// FiniteButNotTightReachable when the vertex is reachable in the graph
/// and UnreachableNotInfinity otherwise. That classification is the only
/// step that looks at reachability and it runs on the rejection path
/// alone, so the accepting pass stays a single sweep: O(n+m), with a
/// deterministic witness (adjacency order, LIFO stack).
inline VerifyResult certify(const Graph& g, VertexId s, const Certificate& cert,
                            CertifyStats* stats = nullptr) {
  detail::require_cert_matches(g, s, cert);
  const std::size_t n = g.num_vertices();

  if (cert[static_cast<std::size_t>(s)] != Dist::finite(0)) {
    return VerifyResult::reject_source_not_zero(s);
  }

  // Only vertices with finite labels ever get marked: s starts at 0 and
  // a tight arc forces a finite head label.
  std::vector<char> tight_reached(n, 0);
  std::vector<VertexId> stack;
  stack.push_back(s);
  tight_reached[static_cast<std::size_t>(s)] = 1;

  while (!stack.empty()) {
    const VertexId u = stack.back();
    stack.pop_back();
    if (stats) ++stats->vertices_popped;
    const Dist du = cert[static_cast<std::size_t>(u)];
    for (const OutArc& arc : g.out_arcs(u)) {
      if (stats) ++stats->arcs_scanned;
      const Dist via = du.plus(arc.weight);
      const Dist dv = cert[static_cast<std::size_t>(arc.head)];
      if (dv > via) {
        return VerifyResult::reject_relaxation_violated(arc.id);
      }
      if (!tight_reached[static_cast<std::size_t>(arc.head)] && dv == via) {
        tight_reached[static_cast<std::size_t>(arc.head)] = 1;
        stack.push_back(arc.head);
      }
    }
  }

  for (std::size_t v = 0; v < n; ++v) {
    if (tight_reached[v] || cert[v].is_infinity()) continue;
    const auto reach = reachable_set(g, s);
    return reach[v]
               ? VerifyResult::reject_finite_not_tight(
                     static_cast<VertexId>(v))
               : VerifyResult::reject_unreachable_not_infinity(
                     static_cast<VertexId>(v));
  }
  return VerifyResult::accept();
}

/// Marks arc a = (u,v,w) iff cert[u] is finite and cert[v] = cert[u] + w.
/// O(m).
inline std::vector<bool> tight_arcs(const Graph& g, const Certificate& cert) {
  if (cert.size() != g.num_vertices()) {
    throw CertLengthMismatch("certificate has " + std::to_string(cert.size()) +
                             " labels for a graph with " +
                             std::to_string(g.num_vertices()) + " vertices");
  }
  std::vector<bool> tight(g.num_arcs(), false);
  const auto arcs = g.arcs();
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    const Dist dt = cert[static_cast<std::size_t>(arcs[a].tail)];
    if (dt.is_finite() &&
        cert[static_cast<std::size_t>(arcs[a].head)] ==
            dt.plus(arcs[a].weight)) {
      tight[a] = true;
    }
  }
  return tight;
}

/// Traversal-free evaluation of the four constraint families, in order:
/// source label zero; relaxation on every arc (infinite tails hold
/// vacuously under Dist arithmetic); every graph-reachable vertex
/// reachable from s inside the tight-arc subgraph; infinite labels on
/// everything unreachable. Same accept/reject decision as certify; the
/// chosen witness may differ.
inline VerifyResult check_constraints_naive(const Graph& g, VertexId s,
                                            const Certificate& cert) {
  detail::require_cert_matches(g, s, cert);
  const std::size_t n = g.num_vertices();

  if (cert[static_cast<std::size_t>(s)] != Dist::finite(0)) {
    return VerifyResult::reject_source_not_zero(s);
  }

  const auto arcs = g.arcs();
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    const Dist via =
        cert[static_cast<std::size_t>(arcs[a].tail)].plus(arcs[a].weight);
    if (cert[static_cast<std::size_t>(arcs[a].head)] > via) {
      return VerifyResult::reject_relaxation_violated(static_cast<ArcId>(a));
    }
  }

  const auto reach = reachable_set(g, s);
  const auto tight = tight_arcs(g, cert);
  std::vector<char> tight_reached(n, 0);
  std::vector<VertexId> stack{s};
  tight_reached[static_cast<std::size_t>(s)] = 1;
  while (!stack.empty()) {
    const VertexId u = stack.back();
    stack.pop_back();
    for (const OutArc& a : g.out_arcs(u)) {
      if (!tight[static_cast<std::size_t>(a.id)]) continue;
      if (!tight_reached[static_cast<std::size_t>(a.head)]) {
        tight_reached[static_cast<std::size_t>(a.head)] = 1;
        stack.push_back(a.head);
      }
    }
  }

  for (std::size_t v = 0; v < n; ++v) {
    if (reach[v]) {
      if (!tight_reached[v]) {
        // With the relaxation pass already clean, a reachable vertex
        // cannot carry an infinite label.
        assert(cert[v].is_finite());
        return VerifyResult::reject_finite_not_tight(static_cast<VertexId>(v));
      }
    } else if (cert[v].is_finite()) {
      return VerifyResult::reject_unreachable_not_infinity(
          static_cast<VertexId>(v));
    }
  }
  return VerifyResult::accept();
}

/// True iff the arcs form a closed walk of negative total weight whose
/// first tail is reachable from s. O(n+m).
inline bool verify_negative_cycle_witness(const Graph& g, VertexId s,
                                          const CycleWitness& cycle) {
  if (!g.contains_vertex(s)) {
    throw VertexOutOfRange("source " + std::to_string(s) + " outside [0, " +
                               std::to_string(g.num_vertices()) + ")",
                           s);
  }
  for (const ArcId a : cycle.arc_ids) {
    if (!g.contains_arc(a)) {
      throw ArcOutOfRange("cycle witness names arc " + std::to_string(a) +
                              " outside [0, " + std::to_string(g.num_arcs()) +
                              ")",
                          a);
    }
  }
  if (cycle.arc_ids.empty()) return false;

  std::int64_t total = 0;
  for (std::size_t i = 0; i < cycle.arc_ids.size(); ++i) {
    const Arc& cur = g.arc(cycle.arc_ids[i]);
    const Arc& next =
        g.arc(cycle.arc_ids[(i + 1) % cycle.arc_ids.size()]);
    if (cur.head != next.tail) return false;
    total += cur.weight;
  }
  if (total >= 0) return false;

  const auto reach = reachable_set(g, s);
  return reach[static_cast<std::size_t>(g.arc(cycle.arc_ids[0]).tail)];
}

}  // namespace spcert
