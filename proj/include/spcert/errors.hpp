#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace spcert {

/// Base class of every exception thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A vertex id lies outside [0, n). For graph construction the index
/// identifies the offending arc; elsewhere it is the vertex itself.
class VertexOutOfRange : public Error {
 public:
  VertexOutOfRange(const std::string& what, std::int64_t index)
      : Error(what), index_(index) {}
  std::int64_t index() const noexcept { return index_; }

 private:
  std::int64_t index_ = -1;
};

/// An arc weight exceeds the 2^31 magnitude cap.
class WeightOutOfRange : public Error {
 public:
  WeightOutOfRange(const std::string& what, std::int64_t arc_index)
      : Error(what), arc_index_(arc_index) {}
  std::int64_t arc_index() const noexcept { return arc_index_; }

 private:
  std::int64_t arc_index_ = -1;
};

/// An arc id lies outside [0, m).
class ArcOutOfRange : public Error {
 public:
  ArcOutOfRange(const std::string& what, std::int64_t arc_id)
      : Error(what), arc_id_(arc_id) {}
  std::int64_t arc_id() const noexcept { return arc_id_; }

 private:
  std::int64_t arc_id_ = -1;
};

/// Certificate length differs from the graph's vertex count.
class CertLengthMismatch : public Error {
 public:
  using Error::Error;
};

/// A finite certificate label exceeds the 2^62 magnitude cap.
class CertOutOfRange : public Error {
 public:
  using Error::Error;
};

/// brute_force_solve refuses graphs above its vertex cap.
class TooLargeForBruteForce : public Error {
 public:
  using Error::Error;
};

/// Generator or benchmark parameters violate their invariants.
class InvalidParams : public Error {
 public:
  using Error::Error;
};

enum class ParseErrorKind {
  kSyntax,
  kCountMismatch,
  kDuplicateHeader,
  kHeaderMismatch,
  kMissingVertex,
  kDuplicateVertex,
  kVertexOutOfRange,
  kWeightOutOfRange,
  kCertOutOfRange,
};

/// Structured parse failure. Lines are 1-based; line 0 marks a
/// document-level problem (missing header, wrong arc count at EOF).
class ParseError : public Error {
 public:
  ParseError(ParseErrorKind kind, std::size_t line, const std::string& what)
      : Error(what), kind_(kind), line_(line) {}
  ParseErrorKind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }

 private:
  ParseErrorKind kind_;
  std::size_t line_;
};

}  // namespace spcert
