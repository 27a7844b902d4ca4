#pragma once

#include <charconv>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spcert/certificate.hpp"
#include "spcert/errors.hpp"
#include "spcert/graph.hpp"

namespace spcert {

/// A graph plus the optional source declared in its file.
struct GraphDocument {
  Graph graph;
  std::optional<VertexId> source;  // zero-based in memory, one-based on disk

  friend bool operator==(const GraphDocument&, const GraphDocument&) = default;
};

namespace detail {

enum class IntParse { kOk, kMalformed, kOverflow };

inline IntParse parse_i64(std::string_view tok, std::int64_t& out) {
  if (tok.empty()) return IntParse::kMalformed;
  const auto [ptr, ec] =
      std::from_chars(tok.data(), tok.data() + tok.size(), out);
  if (ec == std::errc::result_out_of_range) return IntParse::kOverflow;
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    return IntParse::kMalformed;
  }
  return IntParse::kOk;
}

inline bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f';
}

inline std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    const std::size_t start = i;
    while (i < line.size() && !is_space(line[i])) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    fn(text.substr(pos, nl - pos), ++line_no);
    pos = nl + 1;
  }
}

[[noreturn]] inline void syntax_error(std::size_t line, const std::string& what) {
  throw ParseError(ParseErrorKind::kSyntax,
                   line, "line " + std::to_string(line) + ": " + what);
}

}  // namespace detail

/// Parses the `.gr` dialect: `c` comment lines, one `p sp <n> <m>`
/// header before any arc, an optional single `s <v>`, and exactly m
/// `a <u> <v> <w>` lines with one-based endpoints. Blank lines are
/// skipped; a trailing newline is optional.
inline GraphDocument parse_gr(std::string_view text) {
  bool have_header = false;
  std::size_t n = 0;
  std::size_t m = 0;
  std::optional<VertexId> source;
  std::vector<Arc> arcs;

  detail::for_each_line(text, [&](std::string_view line, std::size_t line_no) {
    const auto toks = detail::split_tokens(line);
    if (toks.empty() || toks[0] == "c") return;

    if (toks[0] == "p") {
      if (have_header) {
        throw ParseError(ParseErrorKind::kDuplicateHeader, line_no,
                         "line " + std::to_string(line_no) +
                             ": second p header");
      }
      std::int64_t pn = 0;
      std::int64_t pm = 0;
      if (toks.size() != 4 || toks[1] != "sp" ||
          detail::parse_i64(toks[2], pn) != detail::IntParse::kOk ||
          detail::parse_i64(toks[3], pm) != detail::IntParse::kOk ||
          pn < 0 || pm < 0 || pn > kMaxArcWeight || pm > kMaxArcWeight) {
        detail::syntax_error(line_no, "expected 'p sp <n> <m>'");
      }
      have_header = true;
      n = static_cast<std::size_t>(pn);
      m = static_cast<std::size_t>(pm);
      arcs.reserve(m);
      return;
    }

    if (toks[0] == "s") {
      if (!have_header) detail::syntax_error(line_no, "s line before header");
      if (source) detail::syntax_error(line_no, "second s line");
      std::int64_t v = 0;
      if (toks.size() != 2 ||
          detail::parse_i64(toks[1], v) != detail::IntParse::kOk) {
        detail::syntax_error(line_no, "expected 's <v>'");
      }
      if (v < 1 || static_cast<std::uint64_t>(v) > n) {
        throw ParseError(ParseErrorKind::kVertexOutOfRange, line_no,
                         "line " + std::to_string(line_no) +
                             ": source vertex outside [1, " +
                             std::to_string(n) + "]");
      }
      source = static_cast<VertexId>(v - 1);
      return;
    }

    if (toks[0] == "a") {
      if (!have_header) detail::syntax_error(line_no, "arc before header");
      if (arcs.size() == m) {
        throw ParseError(ParseErrorKind::kCountMismatch, line_no,
                         "line " + std::to_string(line_no) + ": more than " +
                             std::to_string(m) + " arc lines");
      }
      std::int64_t u = 0;
      std::int64_t v = 0;
      std::int64_t w = 0;
      if (toks.size() != 4 ||
          detail::parse_i64(toks[1], u) != detail::IntParse::kOk ||
          detail::parse_i64(toks[2], v) != detail::IntParse::kOk) {
        detail::syntax_error(line_no, "expected 'a <u> <v> <w>'");
      }
      switch (detail::parse_i64(toks[3], w)) {
        case detail::IntParse::kOk:
          break;
        case detail::IntParse::kOverflow:
          throw ParseError(ParseErrorKind::kWeightOutOfRange, line_no,
                           "line " + std::to_string(line_no) +
                               ": weight does not fit in 64 bits");
        case detail::IntParse::kMalformed:
          detail::syntax_error(line_no, "expected 'a <u> <v> <w>'");
      }
      if (u < 1 || static_cast<std::uint64_t>(u) > n || v < 1 ||
          static_cast<std::uint64_t>(v) > n) {
        throw ParseError(ParseErrorKind::kVertexOutOfRange, line_no,
                         "line " + std::to_string(line_no) +
                             ": arc endpoint outside [1, " +
                             std::to_string(n) + "]");
      }
      if (w < -kMaxArcWeight || w > kMaxArcWeight) {
        throw ParseError(ParseErrorKind::kWeightOutOfRange, line_no,
                         "line " + std::to_string(line_no) +
                             ": |weight| exceeds 2^31");
      }
      arcs.push_back(Arc{static_cast<VertexId>(u - 1),
                         static_cast<VertexId>(v - 1), w});
      return;
    }

    detail::syntax_error(line_no, "unknown line type");
  });

  if (!have_header) {
    throw ParseError(ParseErrorKind::kSyntax, 0, "missing 'p sp' header");
  }
  if (arcs.size() != m) {
    throw ParseError(ParseErrorKind::kCountMismatch, 0,
                     "expected " + std::to_string(m) + " arc lines, found " +
                         std::to_string(arcs.size()));
  }
  return GraphDocument{Graph(n, std::move(arcs)), source};
}

/// Canonical form: header, optional s line, arcs in id order, single
/// spaces, '\n' endings, no comments.
inline std::string write_gr(const GraphDocument& doc) {
  std::string out;
  out.reserve(16 + doc.graph.num_arcs() * 12);
  out += "p sp " + std::to_string(doc.graph.num_vertices()) + ' ' +
         std::to_string(doc.graph.num_arcs()) + '\n';
  if (doc.source) {
    out += "s " + std::to_string(static_cast<std::int64_t>(*doc.source) + 1) +
           '\n';
  }
  for (const Arc& a : doc.graph.arcs()) {
    out += "a " + std::to_string(static_cast<std::int64_t>(a.tail) + 1) + ' ' +
           std::to_string(static_cast<std::int64_t>(a.head) + 1) + ' ' +
           std::to_string(a.weight) + '\n';
  }
  return out;
}

/// Reads just the `p cert <n>` header, for callers that do not know the
/// expected length upfront (e.g. the CLI mutating a bare certificate).
inline std::size_t peek_cert_size(std::string_view text) {
  std::optional<std::size_t> n;
  detail::for_each_line(text, [&](std::string_view line, std::size_t line_no) {
    if (n) return;
    const auto toks = detail::split_tokens(line);
    if (toks.empty() || toks[0] == "c") return;
    std::int64_t pn = 0;
    if (toks.size() != 3 || toks[0] != "p" || toks[1] != "cert" ||
        detail::parse_i64(toks[2], pn) != detail::IntParse::kOk || pn < 0 ||
        pn > kMaxArcWeight) {
      detail::syntax_error(line_no, "expected 'p cert <n>'");
    }
    n = static_cast<std::size_t>(pn);
  });
  if (!n) throw ParseError(ParseErrorKind::kSyntax, 0, "missing 'p cert' header");
  return *n;
}

/// Parses the certificate dialect: `c` comments, one `p cert <n>`
/// header matching the expected length, then exactly n lines
/// `d <v> <value>` where value is a signed decimal or `inf`; every
/// vertex 1..n appears exactly once, in any order.
inline Certificate parse_cert(std::string_view text, std::size_t expected_n) {
  bool have_header = false;
  std::size_t n = 0;
  std::vector<Dist> labels;
  std::vector<char> seen;

  detail::for_each_line(text, [&](std::string_view line, std::size_t line_no) {
    const auto toks = detail::split_tokens(line);
    if (toks.empty() || toks[0] == "c") return;

    if (toks[0] == "p") {
      if (have_header) {
        throw ParseError(ParseErrorKind::kDuplicateHeader, line_no,
                         "line " + std::to_string(line_no) +
                             ": second p header");
      }
      std::int64_t pn = 0;
      if (toks.size() != 3 || toks[1] != "cert" ||
          detail::parse_i64(toks[2], pn) != detail::IntParse::kOk || pn < 0) {
        detail::syntax_error(line_no, "expected 'p cert <n>'");
      }
      if (static_cast<std::uint64_t>(pn) != expected_n) {
        throw ParseError(ParseErrorKind::kHeaderMismatch, line_no,
                         "line " + std::to_string(line_no) +
                             ": certificate is for " + std::to_string(pn) +
                             " vertices, expected " +
                             std::to_string(expected_n));
      }
      have_header = true;
      n = expected_n;
      labels.assign(n, Dist::infinity());
      seen.assign(n, 0);
      return;
    }

    if (toks[0] == "d") {
      if (!have_header) detail::syntax_error(line_no, "d line before header");
      std::int64_t v = 0;
      if (toks.size() != 3 ||
          detail::parse_i64(toks[1], v) != detail::IntParse::kOk) {
        detail::syntax_error(line_no, "expected 'd <v> <value>'");
      }
      if (v < 1 || static_cast<std::uint64_t>(v) > n) {
        throw ParseError(ParseErrorKind::kVertexOutOfRange, line_no,
                         "line " + std::to_string(line_no) +
                             ": vertex outside [1, " + std::to_string(n) +
                             "]");
      }
      const auto idx = static_cast<std::size_t>(v - 1);
      if (seen[idx]) {
        throw ParseError(ParseErrorKind::kDuplicateVertex, line_no,
                         "line " + std::to_string(line_no) + ": vertex " +
                             std::to_string(v) + " listed twice");
      }
      seen[idx] = 1;
      if (toks[2] == "inf") {
        labels[idx] = Dist::infinity();
        return;
      }
      std::int64_t value = 0;
      switch (detail::parse_i64(toks[2], value)) {
        case detail::IntParse::kOk:
          break;
        case detail::IntParse::kOverflow:
          throw ParseError(ParseErrorKind::kCertOutOfRange, line_no,
                           "line " + std::to_string(line_no) +
                               ": value does not fit in 64 bits");
        case detail::IntParse::kMalformed:
          detail::syntax_error(line_no, "expected a signed decimal or 'inf'");
      }
      if (value > Dist::kMaxFinite || value < -Dist::kMaxFinite) {
        throw ParseError(ParseErrorKind::kCertOutOfRange, line_no,
                         "line " + std::to_string(line_no) +
                             ": |value| exceeds 2^62");
      }
      labels[idx] = Dist::finite(value);
      return;
    }

    detail::syntax_error(line_no, "unknown line type");
  });

  if (!have_header) {
    throw ParseError(ParseErrorKind::kSyntax, 0, "missing 'p cert' header");
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (!seen[v]) {
      throw ParseError(ParseErrorKind::kMissingVertex, 0,
                       "vertex " + std::to_string(v + 1) + " has no d line");
    }
  }
  return Certificate(std::move(labels));
}

/// Canonical form: header then d lines in vertex order, `inf` for
/// infinity.
inline std::string write_cert(const Certificate& cert) {
  std::string out;
  out.reserve(16 + cert.size() * 8);
  out += "p cert " + std::to_string(cert.size()) + '\n';
  for (std::size_t v = 0; v < cert.size(); ++v) {
    out += "d " + std::to_string(v + 1) + ' ';
    if (cert[v].is_infinity()) {
      out += "inf";
    } else {
      out += std::to_string(cert[v].value());
    }
    out += '\n';
  }
  return out;
}

}  // namespace spcert
