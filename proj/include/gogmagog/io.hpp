#pragma once

// Text and JSON round-trip formats plus an annotated ASCII renderer.
//
// Text form, one instance per block:
//   <kind> <n> <ell>
//   <row 1 entries, space separated>
//   <row 2 entries, space separated>
//
// JSON form: one object with keys "ell", "kind", "n", "row1", "row2";
// serialization is canonical (sorted keys, no whitespace), so equal
// instances produce identical bytes in either format.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "gogmagog/trapezoid.hpp"

namespace gogmagog {

class parse_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { text, json };

std::optional<Format> format_from_string(std::string_view name);

std::string serialize_text(const AnyTrapezoid& t);
std::string serialize_json(const AnyTrapezoid& t);
std::string serialize(const AnyTrapezoid& t, Format format);

// Parsers accept what the serializers emit, modulo surrounding whitespace.
// They check shape only; validate() is a separate concern.
AnyTrapezoid parse_text(std::string_view text);
AnyTrapezoid parse_json(std::string_view text);

// Dispatches on the first non-space byte: '{' means JSON.
AnyTrapezoid parse_any(std::string_view text);

struct RenderSpec {
  bool mark_bug = false;    // magog only: caret under the smallest bug column
  bool mark_pivot = false;  // gog only: caret under the pivot column
  bool show_bounds = false; // append the per-cell ceilings
};

std::string render_ascii(const AnyTrapezoid& t, const RenderSpec& spec = {});

}  // namespace gogmagog
