#pragma once

#include <cassert>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "spcert/errors.hpp"

namespace spcert {

using VertexId = std::int32_t;
using ArcId = std::int32_t;

/// Weight magnitude cap. Keeps every simple-path sum representable in
/// 64 bits for any graph with fewer than 2^31 vertices.
inline constexpr std::int64_t kMaxArcWeight = std::int64_t{1} << 31;

struct Arc {
  VertexId tail = 0;
  VertexId head = 0;
  std::int64_t weight = 0;

  friend bool operator==(const Arc&, const Arc&) = default;
};

/// One adjacency entry: the tail is implied by the bucket. Arranged so
/// traversal reads each vertex's arcs from one contiguous run.
struct OutArc {
  std::int64_t weight = 0;
  VertexId head = 0;
  ArcId id = 0;

  friend bool operator==(const OutArc&, const OutArc&) = default;
};

/// Immutable directed weighted multigraph.
///
/// Arc ids are dense 0..m-1 in construction order. Parallel arcs and
/// self-loops are permitted (a negative self-loop is a one-arc negative
/// cycle). out_arcs(u) yields the arcs leaving u in construction order,
/// laid out compressed-sparse-row so a traversal touches each bucket
/// sequentially. Instances never change after construction and are safe
/// to read from any number of threads.
class Graph {
 public:
  Graph() = default;

  /// Validates every arc and builds the out-adjacency index.
  /// Throws VertexOutOfRange or WeightOutOfRange naming the bad arc.
  Graph(std::size_t n, std::vector<Arc> arcs)
      : n_(n), arcs_(std::move(arcs)) {
    for (std::size_t i = 0; i < arcs_.size(); ++i) {
      const Arc& a = arcs_[i];
      if (!contains_vertex(a.tail) || !contains_vertex(a.head)) {
        throw VertexOutOfRange(
            "arc " + std::to_string(i) + ": endpoint outside [0, " +
                std::to_string(n_) + ")",
            static_cast<std::int64_t>(i));
      }
      if (a.weight < -kMaxArcWeight || a.weight > kMaxArcWeight) {
        throw WeightOutOfRange(
            "arc " + std::to_string(i) + ": |weight| exceeds 2^31",
            static_cast<std::int64_t>(i));
      }
    }
    // Counting sort by tail; stable, so adjacency keeps input order.
    out_begin_.assign(n_ + 1, 0);
    for (const Arc& a : arcs_) {
      ++out_begin_[static_cast<std::size_t>(a.tail) + 1];
    }
    for (std::size_t v = 0; v < n_; ++v) {
      out_begin_[v + 1] += out_begin_[v];
    }
    out_csr_.resize(arcs_.size());
    std::vector<std::size_t> cursor(out_begin_.begin(), out_begin_.end() - 1);
    for (std::size_t i = 0; i < arcs_.size(); ++i) {
      const auto tail = static_cast<std::size_t>(arcs_[i].tail);
      out_csr_[cursor[tail]++] = OutArc{arcs_[i].weight, arcs_[i].head,
                                        static_cast<ArcId>(i)};
    }
  }

  std::size_t num_vertices() const noexcept { return n_; }
  std::size_t num_arcs() const noexcept { return arcs_.size(); }

  bool contains_vertex(VertexId v) const noexcept {
    return v >= 0 && static_cast<std::size_t>(v) < n_;
  }
  bool contains_arc(ArcId a) const noexcept {
    return a >= 0 && static_cast<std::size_t>(a) < arcs_.size();
  }

  const Arc& arc(ArcId id) const noexcept {
    assert(contains_arc(id));
    return arcs_[static_cast<std::size_t>(id)];
  }

  /// All arcs in id order.
  std::span<const Arc> arcs() const noexcept { return arcs_; }

  /// The arcs leaving u, in input order.
  std::span<const OutArc> out_arcs(VertexId u) const noexcept {
    assert(contains_vertex(u));
    const auto v = static_cast<std::size_t>(u);
    return std::span<const OutArc>(out_csr_.data() + out_begin_[v],
                                   out_begin_[v + 1] - out_begin_[v]);
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.arcs_ == b.arcs_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Arc> arcs_;
  std::vector<OutArc> out_csr_;        // grouped by tail
  std::vector<std::size_t> out_begin_; // n+1 group offsets into out_csr_
};

/// Vertices reachable from s by directed traversal, as a mask indexed by
/// vertex id. Weights play no role. O(n+m); s is always reachable.
inline std::vector<bool> reachable_set(const Graph& g, VertexId s) {
  if (!g.contains_vertex(s)) {
    throw VertexOutOfRange("reachable_set: source " + std::to_string(s) +
                               " outside [0, " +
                               std::to_string(g.num_vertices()) + ")",
                           s);
  }
  std::vector<bool> seen(g.num_vertices(), false);
  std::vector<VertexId> stack{s};
  seen[static_cast<std::size_t>(s)] = true;
  while (!stack.empty()) {
    const VertexId u = stack.back();
    stack.pop_back();
    for (const OutArc& a : g.out_arcs(u)) {
      if (!seen[static_cast<std::size_t>(a.head)]) {
        seen[static_cast<std::size_t>(a.head)] = true;
        stack.push_back(a.head);
      }
    }
  }
  return seen;
}

}  // namespace spcert
