#include "gogmagog/trapezoid.hpp"

#include <stdexcept>

namespace gogmagog {

std::string_view to_string(Kind kind) {
  return kind == Kind::magog ? "magog" : "gog";
}

std::optional<Kind> kind_from_string(std::string_view name) {
  if (name == "magog") return Kind::magog;
  if (name == "gog") return Kind::gog;
  return std::nullopt;
}

Kind kind_of(const AnyTrapezoid& t) {
  return std::visit([](const auto& v) { return v.kind; }, t);
}

const TrapezoidParams& params_of(const AnyTrapezoid& t) {
  return std::visit([](const auto& v) -> const TrapezoidParams& { return v.params; }, t);
}

namespace {

// Compares along the column-major linearization: (row1[0], row2[0]),
// (row1[1], row2[1]), ..., then the single entry of the longer row.
template <class T>
int compare_impl(const T& lhs, const T& rhs, const std::vector<int>& lhs_last,
                 const std::vector<int>& rhs_last) {
  if (lhs.params != rhs.params) {
    throw std::invalid_argument("canonical comparison requires equal params");
  }
  const int pairs = lhs.params.n - 1;
  if (pairs < 1 || lhs_last.size() != static_cast<size_t>(pairs) + 1 ||
      rhs_last.size() != static_cast<size_t>(pairs) + 1 ||
      lhs.row1.size() + lhs.row2.size() != 2 * static_cast<size_t>(pairs) + 1 ||
      rhs.row1.size() + rhs.row2.size() != 2 * static_cast<size_t>(pairs) + 1) {
    throw std::invalid_argument("canonical comparison requires well-shaped rows");
  }
  for (int i = 0; i < pairs; ++i) {
    if (lhs.row1[i] != rhs.row1[i]) return lhs.row1[i] < rhs.row1[i] ? -1 : 1;
    if (lhs.row2[i] != rhs.row2[i]) return lhs.row2[i] < rhs.row2[i] ? -1 : 1;
  }
  const int a = lhs_last[pairs];
  const int b = rhs_last[pairs];
  return a == b ? 0 : (a < b ? -1 : 1);
}

}  // namespace

int compare_canonical(const MagogTrapezoid& lhs, const MagogTrapezoid& rhs) {
  return compare_impl(lhs, rhs, lhs.row2, rhs.row2);
}

int compare_canonical(const GogTrapezoid& lhs, const GogTrapezoid& rhs) {
  return compare_impl(lhs, rhs, lhs.row1, rhs.row1);
}

}  // namespace gogmagog
