#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "olog/error.hpp"
#include "olog/instance.hpp"
#include "olog/schema.hpp"

namespace olog {

struct SourceSpan {
  std::string file;
  int line = 1;    // 1-based
  int column = 1;  // 1-based

  std::string to_string() const;
  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

// Syntax errors (code PARSE_ERROR) and duplicate declarations (code
// DUPLICATE_ID), both located in the source text.
class ParseError : public OlogError {
 public:
  ParseError(std::string_view code, SourceSpan span, const std::string& message)
      : OlogError(code, span.to_string() + ": " + message), span_(std::move(span)) {}

  const SourceSpan& span() const noexcept { return span_; }

 private:
  SourceSpan span_;
};

struct ParsedSchema {
  OlogSchema schema;
  // Source-level inconsistencies (declared endpoints that disagree with the
  // arrows) followed by validate_schema's findings.
  std::vector<Diagnostic> diagnostics;
  // Fiber-product squares appended because the text omitted them.
  std::size_t implicit_squares = 0;
};

// `schema "name" { box ... arrow ... eq ... pullback ... }`. Missing
// fiber-product squares are appended to the equations.
ParsedSchema parse_schema(std::string_view text, std::string_view file = "<input>");

// `instance "name" of "schema" { set ... fn ... }`.
Instance parse_instance(std::string_view text, std::string_view file = "<input>");

// Canonical text: boxes and arrows in natural id order, equations and fiber
// products in declaration order, one declaration per line.
std::string serialize_schema(const OlogSchema& schema);

// Canonical text: sets and tables in natural id order, one entry per line.
std::string serialize_instance(const Instance& inst);

// Shortest round-tripping decimal form; "inf" / "-inf" for infinities.
std::string format_real(double v);

std::string format_payload(const Payload& p);

// Reads a whole file; throws IO_ERROR.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

}  // namespace olog
