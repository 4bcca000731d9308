#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "gogmagog/bijection.hpp"
#include "gogmagog/io.hpp"
#include "gogmagog/validation.hpp"

namespace gogmagog {

namespace {

void rtrim(std::string& line) {
  while (!line.empty() && line.back() == ' ') line.pop_back();
}

std::string layout_row(const std::vector<int>& row, int width, int indent) {
  std::string line(static_cast<size_t>(indent), ' ');
  for (int v : row) {
    std::string cell = std::to_string(v);
    cell.resize(static_cast<size_t>(width), ' ');
    line += cell;
  }
  rtrim(line);
  return line;
}

std::string marker_line(int x, const std::string& label) {
  return std::string(static_cast<size_t>(x), ' ') + "\\ " + label;
}

int width_of(int v) { return static_cast<int>(std::to_string(v).size()); }

std::vector<int> caps(Kind kind, int row, size_t len, const TrapezoidParams& params) {
  std::vector<int> out(len);
  for (size_t i = 0; i < len; ++i) {
    out[i] = cell_upper_bound(kind, row, static_cast<int>(i) + 1, params);
  }
  return out;
}

}  // namespace

std::string render_ascii(const AnyTrapezoid& t, const RenderSpec& spec) {
  require_valid(t);
  const Kind kind = kind_of(t);
  const TrapezoidParams& p = params_of(t);
  const auto& row1 = std::visit([](const auto& v) -> const std::vector<int>& { return v.row1; }, t);
  const auto& row2 = std::visit([](const auto& v) -> const std::vector<int>& { return v.row2; }, t);

  const std::vector<int> caps1 = caps(kind, 1, row1.size(), p);
  const std::vector<int> caps2 = caps(kind, 2, row2.size(), p);
  int w = 1;
  for (int v : row1) w = std::max(w, width_of(v));
  for (int v : row2) w = std::max(w, width_of(v));
  if (spec.show_bounds) {
    for (int v : caps1) w = std::max(w, width_of(v));
    for (int v : caps2) w = std::max(w, width_of(v));
  }
  w += 1;

  // Row 1 sits above row 2; the magog stagger shifts the longer row 2 half a
  // cell right, so each row-1 entry hangs between its column neighbours.
  const int indent1 = 0;
  const int indent2 = kind == Kind::magog ? w / 2 : 0;

  std::vector<std::string> lines;
  lines.push_back(layout_row(row1, w, indent1));
  if (kind == Kind::magog && spec.mark_bug) {
    if (const auto bug = find_smallest_bug(std::get<MagogTrapezoid>(t))) {
      const int j = *bug;
      // Midpoint between m_{1,j+1} above and m_{2,j} below.
      const int x = (j * w + indent1 + (j - 1) * w + indent2) / 2;
      lines.push_back(marker_line(x, "bug j=" + std::to_string(j)));
    }
  }
  if (kind == Kind::gog && spec.mark_pivot) {
    const int k = compute_pivot(std::get<GogTrapezoid>(t));
    lines.push_back(marker_line((k - 1) * w, "k=" + std::to_string(k)));
  }
  lines.push_back(layout_row(row2, w, indent2));
  if (spec.show_bounds) {
    lines.push_back("max:");
    lines.push_back(layout_row(caps1, w, indent1));
    lines.push_back(layout_row(caps2, w, indent2));
  }

  std::string out;
  for (const std::string& line : lines) {
    out += line;
    out += '\n';
  }
  return out;
}

}  // namespace gogmagog
