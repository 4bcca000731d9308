#pragma once

#include <optional>
#include <string_view>
#include <variant>
#include <vector>

namespace gogmagog {

enum class Kind { magog, gog };

std::string_view to_string(Kind kind);
std::optional<Kind> kind_from_string(std::string_view name);

// Shape parameters: n columns (n >= 3) and the ceiling offset ell (>= 0).
struct TrapezoidParams {
  int n = 0;
  int ell = 0;

  bool valid() const { return n >= 3 && ell >= 0; }

  // No cell of either family can exceed this value.
  int max_entry() const { return n + ell; }

  friend bool operator==(const TrapezoidParams&, const TrapezoidParams&) = default;
};

// Two weakly increasing rows of positive integers; row 1 holds the n-1
// entries m_{1,1..n-1}, row 2 the n entries m_{2,1..n}. Column j is capped
// by j+ell (n+ell for the last cell of row 2) and row 1 sits below row 2
// columnwise. Indices are 1-based in every interface; row1[j-1] is m_{1,j}.
struct MagogTrapezoid {
  TrapezoidParams params;
  std::vector<int> row1;
  std::vector<int> row2;

  static constexpr Kind kind = Kind::magog;
  friend bool operator==(const MagogTrapezoid&, const MagogTrapezoid&) = default;
};

// Two weakly increasing rows of positive integers; row 1 holds the n entries
// g_{1,1..n}, row 2 the n-1 entries g_{2,1..n-1}. Columns are strict
// (g_{1,j} < g_{2,j} < j+2+ell) and the diagonal g_{1,j+1} <= g_{2,j} holds.
struct GogTrapezoid {
  TrapezoidParams params;
  std::vector<int> row1;
  std::vector<int> row2;

  static constexpr Kind kind = Kind::gog;
  friend bool operator==(const GogTrapezoid&, const GogTrapezoid&) = default;
};

using AnyTrapezoid = std::variant<MagogTrapezoid, GogTrapezoid>;

Kind kind_of(const AnyTrapezoid& t);
const TrapezoidParams& params_of(const AnyTrapezoid& t);

// Canonical order: columns left to right; within a column the row-1 entry
// comes before the row-2 entry; the length-1 end column contributes its
// single entry. Instances are compared lexicographically along that
// linearization. Returns <0, 0 or >0. Both sides must share params.
int compare_canonical(const MagogTrapezoid& lhs, const MagogTrapezoid& rhs);
int compare_canonical(const GogTrapezoid& lhs, const GogTrapezoid& rhs);

}  // namespace gogmagog
