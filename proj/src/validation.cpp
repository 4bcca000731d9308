#include "gogmagog/validation.hpp"

#include <sstream>
#include <utility>
#include <variant>

namespace gogmagog {

std::string_view to_string(Rule rule) {
  switch (rule) {
    case Rule::M1: return "M1";
    case Rule::M2: return "M2";
    case Rule::M3: return "M3";
    case Rule::G1: return "G1";
    case Rule::G2: return "G2";
    case Rule::G3: return "G3";
    case Rule::POS: return "POS";
    case Rule::SHAPE: return "SHAPE";
  }
  return "?";
}

std::string ValidationReport::summary() const {
  if (ok()) return "valid";
  std::ostringstream out;
  out << violations.size() << (violations.size() == 1 ? " violation: " : " violations: ");
  for (size_t i = 0; i < violations.size(); ++i) {
    if (i) out << "; ";
    const Violation& v = violations[i];
    out << to_string(v.rule) << " at (" << v.row << "," << v.col << ") " << v.message;
  }
  return out.str();
}

namespace {

void add(ValidationReport& rep, Rule rule, int row, int col,
         std::vector<int> observed, std::string message) {
  rep.violations.push_back(
      Violation{rule, row, col, std::move(observed), std::move(message)});
}

std::string cell_name(int row, int col) {
  std::ostringstream out;
  out << "(" << row << "," << col << ")";
  return out.str();
}

// SHAPE covers params and row lengths; when it fires the cell rules are not
// evaluated (their indexing would be meaningless).
bool check_shape(ValidationReport& rep, const TrapezoidParams& p,
                 size_t row1_len, size_t row2_len, size_t want1, size_t want2) {
  if (!p.valid()) {
    std::ostringstream msg;
    msg << "params n=" << p.n << " ell=" << p.ell << " (need n >= 3, ell >= 0)";
    add(rep, Rule::SHAPE, 0, 0, {p.n, p.ell}, msg.str());
    return false;
  }
  bool ok = true;
  if (row1_len != want1) {
    std::ostringstream msg;
    msg << "row 1 holds " << row1_len << " entries, expected " << want1;
    add(rep, Rule::SHAPE, 1, 0, {static_cast<int>(row1_len)}, msg.str());
    ok = false;
  }
  if (row2_len != want2) {
    std::ostringstream msg;
    msg << "row 2 holds " << row2_len << " entries, expected " << want2;
    add(rep, Rule::SHAPE, 2, 0, {static_cast<int>(row2_len)}, msg.str());
    ok = false;
  }
  return ok;
}

void check_positive(ValidationReport& rep, const std::vector<int>& row, int row_index) {
  for (size_t i = 0; i < row.size(); ++i) {
    if (row[i] < 1) {
      std::ostringstream msg;
      msg << "entry " << cell_name(row_index, static_cast<int>(i) + 1) << " = "
          << row[i] << " is not positive";
      add(rep, Rule::POS, row_index, static_cast<int>(i) + 1, {row[i]}, msg.str());
    }
  }
}

// Weak increase along a row; a violation is anchored at the right cell of
// the offending adjacent pair.
void check_increasing(ValidationReport& rep, Rule rule, const std::vector<int>& row,
                      int row_index) {
  for (size_t i = 1; i < row.size(); ++i) {
    if (row[i - 1] > row[i]) {
      std::ostringstream msg;
      msg << "row " << row_index << " decreases at column " << i + 1 << ": "
          << row[i - 1] << " > " << row[i];
      add(rep, rule, row_index, static_cast<int>(i) + 1, {row[i - 1], row[i]},
          msg.str());
    }
  }
}

}  // namespace

ValidationReport validate(const MagogTrapezoid& m) {
  ValidationReport rep;
  const int n = m.params.n;
  if (!check_shape(rep, m.params, m.row1.size(), m.row2.size(),
                   n >= 1 ? static_cast<size_t>(n) - 1 : 0, static_cast<size_t>(n))) {
    return rep;
  }
  check_positive(rep, m.row1, 1);
  check_positive(rep, m.row2, 2);
  check_increasing(rep, Rule::M1, m.row1, 1);
  check_increasing(rep, Rule::M1, m.row2, 2);
  for (int j = 1; j <= n - 1; ++j) {
    const int a = m.row1[j - 1];
    const int b = m.row2[j - 1];
    if (a > b) {
      std::ostringstream msg;
      msg << "column " << j << " has row 1 above row 2: " << a << " > " << b;
      add(rep, Rule::M2, 1, j, {a, b}, msg.str());
    }
  }
  for (int j = 1; j <= n; ++j) {
    const int cap = (j == n ? n : j) + m.params.ell;
    const int b = m.row2[j - 1];
    if (b > cap) {
      std::ostringstream msg;
      msg << "entry " << cell_name(2, j) << " = " << b << " exceeds ceiling " << cap;
      add(rep, Rule::M3, 2, j, {b}, msg.str());
    }
  }
  return rep;
}

ValidationReport validate(const GogTrapezoid& g) {
  ValidationReport rep;
  const int n = g.params.n;
  if (!check_shape(rep, g.params, g.row1.size(), g.row2.size(),
                   static_cast<size_t>(n), n >= 1 ? static_cast<size_t>(n) - 1 : 0)) {
    return rep;
  }
  check_positive(rep, g.row1, 1);
  check_positive(rep, g.row2, 2);
  check_increasing(rep, Rule::G1, g.row1, 1);
  check_increasing(rep, Rule::G1, g.row2, 2);
  for (int j = 1; j <= n - 1; ++j) {
    const int a = g.row1[j - 1];
    const int b = g.row2[j - 1];
    if (a >= b) {
      std::ostringstream msg;
      msg << "column " << j << " is not strict: " << a << " >= " << b;
      add(rep, Rule::G2, 1, j, {a, b}, msg.str());
    }
    const int cap = j + 1 + g.params.ell;
    if (b > cap) {
      std::ostringstream msg;
      msg << "entry " << cell_name(2, j) << " = " << b << " exceeds ceiling " << cap;
      add(rep, Rule::G2, 2, j, {b}, msg.str());
    }
    const int diag = g.row1[j];
    if (diag > b) {
      std::ostringstream msg;
      msg << "diagonal fails at column " << j << ": row 1 column " << j + 1 << " = "
          << diag << " > " << b;
      add(rep, Rule::G3, 2, j, {diag, b}, msg.str());
    }
  }
  return rep;
}

ValidationReport validate(const AnyTrapezoid& t) {
  return std::visit([](const auto& v) { return validate(v); }, t);
}

int cell_upper_bound(Kind kind, int row, int j, const TrapezoidParams& params) {
  if (!params.valid()) {
    throw std::invalid_argument("trapezoid params require n >= 3 and ell >= 0");
  }
  const int n = params.n;
  const int short_len = n - 1;
  const int long_len = n;
  const bool long_row = (kind == Kind::magog) ? row == 2 : row == 1;
  if (row != 1 && row != 2) throw std::out_of_range("row must be 1 or 2");
  const int len = long_row ? long_len : short_len;
  if (j < 1 || j > len) throw std::out_of_range("column outside the row");
  if (kind == Kind::magog) {
    return (long_row && j == n ? n : j) + params.ell;
  }
  if (row == 2) return j + 1 + params.ell;
  return (j == n ? n : j) + params.ell;
}

validation_error::validation_error(ValidationReport report)
    : std::runtime_error(report.summary()), report_(std::move(report)) {}

void require_valid(const MagogTrapezoid& m) {
  ValidationReport rep = validate(m);
  if (!rep.ok()) throw validation_error(std::move(rep));
}

void require_valid(const GogTrapezoid& g) {
  ValidationReport rep = validate(g);
  if (!rep.ok()) throw validation_error(std::move(rep));
}

void require_valid(const AnyTrapezoid& t) {
  std::visit([](const auto& v) { require_valid(v); }, t);
}

}  // namespace gogmagog
