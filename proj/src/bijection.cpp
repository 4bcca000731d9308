#include "gogmagog/bijection.hpp"

#include <charconv>
#include <sstream>
#include <variant>

#include "gogmagog/validation.hpp"

namespace gogmagog {

std::string to_string(const CaseTag& tag) {
  switch (tag.which) {
    case CaseTag::Which::case1: {
      std::ostringstream out;
      out << "Case1(k=" << tag.k << ")";
      return out.str();
    }
    case CaseTag::Which::case2: return "Case2";
    case CaseTag::Which::case3: return "Case3";
  }
  return "?";
}

std::optional<CaseTag> case_tag_from_string(std::string_view text) {
  if (text == "Case2") return CaseTag::case2();
  if (text == "Case3") return CaseTag::case3();
  constexpr std::string_view prefix = "Case1(k=";
  if (text.size() > prefix.size() + 1 && text.substr(0, prefix.size()) == prefix &&
      text.back() == ')') {
    const std::string_view digits = text.substr(prefix.size(), text.size() - prefix.size() - 1);
    int k = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && k >= 1) {
      return CaseTag::case1(k);
    }
  }
  return std::nullopt;
}

std::optional<int> find_smallest_bug(const MagogTrapezoid& m) {
  require_valid(m);
  const int n = m.params.n;
  for (int j = 1; j <= n - 2; ++j) {
    if (m.row1[j] > m.row2[j - 1] + 1) return j;  // m_{1,j+1} > m_{2,j}+1
  }
  return std::nullopt;
}

int compute_pivot(const GogTrapezoid& g) {
  require_valid(g);
  const int n = g.params.n;
  for (int j = n - 1; j >= 2; --j) {
    if (g.row2[j - 2] <= g.row1[j] + 1) return j;  // g_{2,j-1} <= g_{1,j+1}+1
  }
  return 1;
}

CaseTag classify(const MagogTrapezoid& m) {
  if (const auto bug = find_smallest_bug(m)) return CaseTag::case1(*bug);
  const int n = m.params.n;
  return m.row2[n - 2] < m.row2[n - 1] ? CaseTag::case2() : CaseTag::case3();
}

CaseTag classify(const GogTrapezoid& g) {
  const int n = g.params.n;
  const int k = compute_pivot(g);
  if (k <= n - 2) return CaseTag::case1(k);
  return g.row1[n - 1] < g.row2[n - 2] ? CaseTag::case2() : CaseTag::case3();
}

// Case 1 moves the block left of the bug down a notch and shifts the tail;
// cases 2 and 3 only rewrite the rightmost cells. Indices in the comments
// are 1-based, matching the subscripts; the code is 0-based.
GogTrapezoid magog_to_gog(const MagogTrapezoid& m) {
  require_valid(m);
  const int n = m.params.n;
  GogTrapezoid g{m.params, std::vector<int>(n, 0), std::vector<int>(n - 1, 0)};
  const CaseTag tag = classify(m);
  switch (tag.which) {
    case CaseTag::Which::case1: {
      const int k = tag.k;
      for (int j = 1; j <= k - 1; ++j) g.row2[j - 1] = m.row2[j - 1] + 1;
      for (int j = k; j <= n - 1; ++j) g.row2[j - 1] = m.row2[j];  // m_{2,j+1}
      for (int j = 1; j <= k; ++j) g.row1[j - 1] = m.row1[j - 1];
      g.row1[k] = m.row2[k - 1];  // g_{1,k+1} = m_{2,k}
      for (int j = k + 2; j <= n; ++j) g.row1[j - 1] = m.row1[j - 2] - 2;
      break;
    }
    case CaseTag::Which::case2:
      for (int j = 1; j <= n - 2; ++j) g.row2[j - 1] = m.row2[j - 1] + 1;
      g.row2[n - 2] = m.row2[n - 1];
      for (int j = 1; j <= n - 1; ++j) g.row1[j - 1] = m.row1[j - 1];
      g.row1[n - 1] = m.row2[n - 2];
      break;
    case CaseTag::Which::case3:
      for (int j = 1; j <= n - 1; ++j) g.row2[j - 1] = m.row2[j - 1] + 1;
      for (int j = 1; j <= n - 1; ++j) g.row1[j - 1] = m.row1[j - 1];
      g.row1[n - 1] = m.row2[n - 1] + 1;
      break;
  }
  return g;
}

MagogTrapezoid gog_to_magog(const GogTrapezoid& g) {
  require_valid(g);
  const int n = g.params.n;
  MagogTrapezoid m{g.params, std::vector<int>(n - 1, 0), std::vector<int>(n, 0)};
  const CaseTag tag = classify(g);
  switch (tag.which) {
    case CaseTag::Which::case1: {
      const int k = tag.k;
      for (int j = 1; j <= k - 1; ++j) m.row2[j - 1] = g.row2[j - 1] - 1;
      m.row2[k - 1] = g.row1[k];  // m_{2,k} = g_{1,k+1}
      for (int j = k + 1; j <= n; ++j) m.row2[j - 1] = g.row2[j - 2];  // g_{2,j-1}
      for (int j = 1; j <= k; ++j) m.row1[j - 1] = g.row1[j - 1];
      for (int j = k + 1; j <= n - 1; ++j) m.row1[j - 1] = g.row1[j] + 2;  // g_{1,j+1}+2
      break;
    }
    case CaseTag::Which::case2:
      for (int j = 1; j <= n - 2; ++j) m.row2[j - 1] = g.row2[j - 1] - 1;
      m.row2[n - 2] = g.row1[n - 1];
      m.row2[n - 1] = g.row2[n - 2];
      for (int j = 1; j <= n - 1; ++j) m.row1[j - 1] = g.row1[j - 1];
      break;
    case CaseTag::Which::case3:
      for (int j = 1; j <= n - 1; ++j) m.row2[j - 1] = g.row2[j - 1] - 1;
      m.row2[n - 1] = g.row1[n - 1] - 1;
      for (int j = 1; j <= n - 1; ++j) m.row1[j - 1] = g.row1[j - 1];
      break;
  }
  return m;
}

AnyTrapezoid map_any(const AnyTrapezoid& t) {
  if (std::holds_alternative<MagogTrapezoid>(t)) {
    return AnyTrapezoid(magog_to_gog(std::get<MagogTrapezoid>(t)));
  }
  return AnyTrapezoid(gog_to_magog(std::get<GogTrapezoid>(t)));
}

}  // namespace gogmagog
