#pragma once

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "spcert/certificate.hpp"
#include "spcert/errors.hpp"
#include "spcert/graph.hpp"

namespace spcert {

namespace detail {

/// Uniform draw from [0, bound) off a mt19937_64 stream, debiased with
/// Lemire's multiply-shift rejection. All generator randomness funnels
/// through here so streams depend only on this code and the mt19937_64
/// standard, not on library-specific distribution objects.
inline std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  assert(bound >= 1);
  unsigned __int128 mul = static_cast<unsigned __int128>(rng()) * bound;
  auto low = static_cast<std::uint64_t>(mul);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      mul = static_cast<unsigned __int128>(rng()) * bound;
      low = static_cast<std::uint64_t>(mul);
    }
  }
  return static_cast<std::uint64_t>(mul >> 64);
}

/// Uniform draw from [lo, hi], inclusive.
inline std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo,
                                std::int64_t hi) {
  assert(lo <= hi);
  const std::uint64_t span =
      static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) +
                                   bounded(rng, span));
}

}  // namespace detail

enum class GenMode {
  kUnrestricted,
  kNoNegativeCycle,
};

struct GenParams {
  std::size_t n = 1;
  std::size_t m = 0;
  std::int64_t wmin = -8;
  std::int64_t wmax = 8;
  GenMode mode = GenMode::kUnrestricted;
  std::uint64_t seed = 0;
};

namespace detail {

inline void validate(const GenParams& p) {
  if (p.n < 1) throw InvalidParams("gen: n must be >= 1");
  if (p.wmin > p.wmax) throw InvalidParams("gen: wmin > wmax");
  if (p.wmin < -kMaxArcWeight || p.wmin > kMaxArcWeight ||
      p.wmax < -kMaxArcWeight || p.wmax > kMaxArcWeight) {
    throw InvalidParams("gen: weight bounds exceed 2^31");
  }
}

}  // namespace detail

/// Seeded random multigraph; a pure function of its parameters.
///
/// Unrestricted mode draws m arcs with independent uniform endpoints
/// and weights in [wmin, wmax]. No-negative-cycle mode draws vertex
/// potentials pot[] and nonnegative reduced costs c, emitting
/// w(u,v) = c + pot[u] - pot[v]: every cycle's weight telescopes to its
/// reduced-cost sum, which is nonnegative, while individual arcs may
/// still be negative or zero. The potential and reduced-cost ranges are
/// sized so the emitted weight always lies within the 2^31 cap and the
/// final clamp never fires (lowering an out-of-cap weight could
/// otherwise manufacture a negative cycle).
inline Graph gen_random_graph(const GenParams& p) {
  detail::validate(p);
  std::mt19937_64 rng(p.seed);
  std::vector<Arc> arcs;
  arcs.reserve(p.m);
  const auto n = static_cast<std::uint64_t>(p.n);

  if (p.mode == GenMode::kUnrestricted) {
    for (std::size_t i = 0; i < p.m; ++i) {
      const auto tail = static_cast<VertexId>(detail::bounded(rng, n));
      const auto head = static_cast<VertexId>(detail::bounded(rng, n));
      const std::int64_t w = detail::uniform_int(rng, p.wmin, p.wmax);
      arcs.push_back(Arc{tail, head, w});
    }
  } else {
    const std::int64_t pot_max =
        std::min(std::max<std::int64_t>(0, -p.wmin), std::int64_t{1} << 30);
    const std::int64_t cost_max = std::min(
        std::max<std::int64_t>(0, p.wmax - p.wmin), kMaxArcWeight - pot_max);
    std::vector<std::int64_t> pot(p.n);
    for (auto& v : pot) v = detail::uniform_int(rng, 0, pot_max);
    for (std::size_t i = 0; i < p.m; ++i) {
      const auto tail = static_cast<VertexId>(detail::bounded(rng, n));
      const auto head = static_cast<VertexId>(detail::bounded(rng, n));
      const std::int64_t c = detail::uniform_int(rng, 0, cost_max);
      const std::int64_t w =
          std::clamp(c + pot[static_cast<std::size_t>(tail)] -
                         pot[static_cast<std::size_t>(head)],
                     -kMaxArcWeight, kMaxArcWeight);
      arcs.push_back(Arc{tail, head, w});
    }
  }
  return Graph(p.n, std::move(arcs));
}

/// Returns g plus k new arcs forming a directed cycle of negative total
/// weight over k distinct seeded-random vertices, plus one connecting
/// arc from vertex 0 when no cycle vertex is already reachable from it.
/// Deterministic in the seed.
inline Graph inject_negative_cycle(const Graph& g, std::size_t k,
                                   std::uint64_t seed) {
  const std::size_t n = g.num_vertices();
  if (k < 1 || k > n) {
    throw InvalidParams("inject_negative_cycle: cycle length " +
                        std::to_string(k) + " not in [1, " +
                        std::to_string(n) + "]");
  }
  std::mt19937_64 rng(seed);

  // Partial Fisher-Yates: first k entries become the cycle vertices.
  std::vector<VertexId> verts(n);
  std::iota(verts.begin(), verts.end(), 0);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j =
        i + static_cast<std::size_t>(detail::bounded(
                rng, static_cast<std::uint64_t>(n - i)));
    std::swap(verts[i], verts[j]);
  }

  std::vector<std::int64_t> weights(k);
  std::int64_t partial = 0;
  for (std::size_t i = 0; i + 1 < k; ++i) {
    weights[i] = detail::uniform_int(rng, -8, 8);
    partial += weights[i];
  }
  weights[k - 1] = -partial - detail::uniform_int(rng, 1, 8);

  std::vector<Arc> arcs(g.arcs().begin(), g.arcs().end());
  arcs.reserve(arcs.size() + k + 1);
  for (std::size_t i = 0; i < k; ++i) {
    arcs.push_back(Arc{verts[i], verts[(i + 1) % k], weights[i]});
  }

  const auto reach = reachable_set(g, 0);
  bool cycle_reached = false;
  for (std::size_t i = 0; i < k; ++i) {
    if (reach[static_cast<std::size_t>(verts[i])]) {
      cycle_reached = true;
      break;
    }
  }
  if (!cycle_reached) {
    arcs.push_back(Arc{0, verts[0], detail::uniform_int(rng, 0, 8)});
  }
  return Graph(n, std::move(arcs));
}

/// Adds delta to one finite non-source label.
struct PerturbFinite {
  explicit PerturbFinite(std::int64_t delta_in) : delta(delta_in) {
    if (delta == 0) throw InvalidParams("PerturbFinite: delta must be nonzero");
  }
  std::int64_t delta;
};

/// Replaces one finite label (the source included) with infinity.
struct FiniteToInfinity {};

/// Replaces one infinite label with the given finite value.
struct InfinityToFinite {
  explicit InfinityToFinite(std::int64_t value_in) : value(value_in) {
    if (value > Dist::kMaxFinite || value < -Dist::kMaxFinite) {
      throw InvalidParams("InfinityToFinite: |value| exceeds 2^62");
    }
  }
  std::int64_t value;
};

/// Overwrites the source label with a nonzero value.
struct CorruptSource {
  explicit CorruptSource(std::int64_t value_in) : value(value_in) {
    if (value == 0) throw InvalidParams("CorruptSource: value must be nonzero");
    if (value > Dist::kMaxFinite || value < -Dist::kMaxFinite) {
      throw InvalidParams("CorruptSource: |value| exceeds 2^62");
    }
  }
  std::int64_t value;
};

using MutationKind =
    std::variant<PerturbFinite, FiniteToInfinity, InfinityToFinite,
                 CorruptSource>;

/// Applies the mutation at a seeded-random eligible vertex and returns
/// the altered certificate, or nullopt when no vertex is eligible.
/// Exactly one label changes on success. The source vertex is needed to
/// scope eligibility: PerturbFinite skips it (CorruptSource covers the
/// source-label failure mode) and CorruptSource targets it alone.
inline std::optional<Certificate> mutate_certificate(const Certificate& cert,
                                                     const MutationKind& kind,
                                                     VertexId source,
                                                     std::uint64_t seed) {
  const std::size_t n = cert.size();
  if (source < 0 || static_cast<std::size_t>(source) >= n) {
    throw VertexOutOfRange("mutate_certificate: source " +
                               std::to_string(source) + " outside [0, " +
                               std::to_string(n) + ")",
                           source);
  }

  std::vector<std::size_t> eligible;
  for (std::size_t v = 0; v < n; ++v) {
    const bool ok = std::visit(
        [&](const auto& k) -> bool {
          using K = std::decay_t<decltype(k)>;
          if constexpr (std::is_same_v<K, PerturbFinite>) {
            return cert[v].is_finite() &&
                   v != static_cast<std::size_t>(source);
          } else if constexpr (std::is_same_v<K, FiniteToInfinity>) {
            return cert[v].is_finite();
          } else if constexpr (std::is_same_v<K, InfinityToFinite>) {
            return cert[v].is_infinity();
          } else {
            return v == static_cast<std::size_t>(source) &&
                   cert[v] != Dist::finite(k.value);
          }
        },
        kind);
    if (ok) eligible.push_back(v);
  }
  if (eligible.empty()) return std::nullopt;

  std::mt19937_64 rng(seed);
  const std::size_t target = eligible[static_cast<std::size_t>(
      detail::bounded(rng, static_cast<std::uint64_t>(eligible.size())))];

  std::vector<Dist> labels(cert.labels().begin(), cert.labels().end());
  std::visit(
      [&](const auto& k) {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, PerturbFinite>) {
          labels[target] = Dist::finite(labels[target].value() + k.delta);
        } else if constexpr (std::is_same_v<K, FiniteToInfinity>) {
          labels[target] = Dist::infinity();
        } else if constexpr (std::is_same_v<K, InfinityToFinite>) {
          labels[target] = Dist::finite(k.value);
        } else {
          labels[target] = Dist::finite(k.value);
        }
      },
      kind);
  // Certificate construction re-checks the 2^62 cap; a perturbation off
  // an extreme label can therefore throw CertOutOfRange.
  return Certificate(std::move(labels));
}

}  // namespace spcert
