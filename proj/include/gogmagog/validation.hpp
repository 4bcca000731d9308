#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gogmagog/trapezoid.hpp"

namespace gogmagog {

// M1/G1: rows weakly increasing. M2: m_{1,j} <= m_{2,j}. M3: m_{2,j} <= j+ell
// (n+ell at j=n). G2: g_{1,j} < g_{2,j} < j+2+ell. G3: g_{1,j+1} <= g_{2,j}.
// POS: entries >= 1. SHAPE: row lengths or params unusable.
enum class Rule { M1, M2, M3, G1, G2, G3, POS, SHAPE };

std::string_view to_string(Rule rule);

// One broken rule instance, anchored at a 1-based cell. SHAPE problems about
// params use row/col 0; SHAPE problems about a row use (row, 0).
struct Violation {
  Rule rule;
  int row = 0;
  int col = 0;
  std::vector<int> observed;
  std::string message;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  std::string summary() const;

  friend bool operator==(const ValidationReport&, const ValidationReport&) = default;
};

// Reports every violated rule instance; an empty report means membership.
ValidationReport validate(const MagogTrapezoid& m);
ValidationReport validate(const GogTrapezoid& g);
ValidationReport validate(const AnyTrapezoid& t);

// Tightest per-cell maximum implied by the family rules; row is 1 or 2, j is
// 1-based. Throws std::invalid_argument for unusable params and
// std::out_of_range for a cell outside the row.
int cell_upper_bound(Kind kind, int row, int j, const TrapezoidParams& params);

// Thrown by operations whose contract requires a valid trapezoid.
class validation_error : public std::runtime_error {
 public:
  explicit validation_error(ValidationReport report);

  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

void require_valid(const MagogTrapezoid& m);
void require_valid(const GogTrapezoid& g);
void require_valid(const AnyTrapezoid& t);

}  // namespace gogmagog
