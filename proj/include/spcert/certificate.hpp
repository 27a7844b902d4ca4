#pragma once

#include <cassert>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "spcert/errors.hpp"

namespace spcert {

/// Extended integer distance: a finite 64-bit value or +infinity.
///
/// Infinity absorbs addition and compares greater than every finite
/// value (and equal to itself), which is exactly the arithmetic the
/// relaxation and tightness checks need. Encoded as INT64_MAX, so the
/// defaulted comparisons are already correct: finite magnitudes stay
/// below 2^62 + 2^31 and can never collide with the sentinel.
class Dist {
 public:
  /// Finite labels are capped at |value| <= 2^62 so that label + arc
  /// weight cannot overflow 64 bits even for adversarial input.
  static constexpr std::int64_t kMaxFinite = std::int64_t{1} << 62;

  /// Default is infinity ("not reached yet").
  constexpr Dist() = default;

  static constexpr Dist finite(std::int64_t value) { return Dist(value); }
  static constexpr Dist infinity() { return Dist(); }

  constexpr bool is_finite() const noexcept { return rep_ != kInfRep; }
  constexpr bool is_infinity() const noexcept { return rep_ == kInfRep; }

  constexpr std::int64_t value() const noexcept {
    assert(is_finite());
    return rep_;
  }

  /// this + w with infinity absorbing.
  constexpr Dist plus(std::int64_t w) const noexcept {
    return is_infinity() ? *this : Dist(rep_ + w);
  }

  friend constexpr auto operator<=>(Dist, Dist) = default;
  friend constexpr bool operator==(Dist, Dist) = default;

 private:
  static constexpr std::int64_t kInfRep =
      std::numeric_limits<std::int64_t>::max();

  explicit constexpr Dist(std::int64_t rep) : rep_(rep) {}

  std::int64_t rep_ = kInfRep;
};

inline std::ostream& operator<<(std::ostream& os, Dist d) {
  if (d.is_infinity()) return os << "inf";
  return os << d.value();
}

/// The prover's claimed distance labels D[v], one per vertex.
/// Construction enforces the 2^62 cap on every finite label, so code
/// downstream may add one arc weight without overflow checks.
class Certificate {
 public:
  Certificate() = default;

  explicit Certificate(std::vector<Dist> labels) : labels_(std::move(labels)) {
    for (std::size_t v = 0; v < labels_.size(); ++v) {
      const Dist d = labels_[v];
      if (d.is_finite() &&
          (d.value() > Dist::kMaxFinite || d.value() < -Dist::kMaxFinite)) {
        throw CertOutOfRange("certificate label of vertex " +
                             std::to_string(v) + " exceeds 2^62");
      }
    }
  }

  std::size_t size() const noexcept { return labels_.size(); }

  Dist operator[](std::size_t v) const noexcept {
    assert(v < labels_.size());
    return labels_[v];
  }

  std::span<const Dist> labels() const noexcept { return labels_; }

  friend bool operator==(const Certificate&, const Certificate&) = default;

 private:
  std::vector<Dist> labels_;
};

}  // namespace spcert
