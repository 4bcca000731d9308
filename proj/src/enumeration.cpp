#include "gogmagog/enumeration.hpp"

#include <stdexcept>
#include <utility>

#include "gogmagog/columns.hpp"
#include "gogmagog/validation.hpp"

namespace gogmagog {

namespace {

// tbl[a][b] = number of ways to finish columns j..n once column j = (a, b);
// indexed 1-based, zero at pairs the column rules exclude.
using Table = std::vector<std::vector<big_int>>;

int pair_b_min(const ColumnModel& m, int a) {
  return m.kind == Kind::magog ? a : a + 1;
}

Table column_table(const ColumnModel& m, int j, const Table* next) {
  const int A = m.top_max(j);
  const int B = m.bottom_max(j);
  Table tbl(A + 1, std::vector<big_int>(B + 1));
  if (next == nullptr) {  // rightmost pair column: count the end entries
    for (int a = 1; a <= A; ++a) {
      for (int b = pair_b_min(m, a); b <= B; ++b) {
        tbl[a][b] = m.last_max(a, b) - m.last_min(a, b) + 1;
      }
    }
    return tbl;
  }
  // S[a][b] = sum of the next column over states (a2 >= a, b2 >= b), with a
  // zero frame so lookups may run one past the edge.
  const int A2 = m.top_max(j + 1);
  const int B2 = m.bottom_max(j + 1);
  std::vector<std::vector<big_int>> S(A2 + 2, std::vector<big_int>(B2 + 2));
  for (int a = A2; a >= 1; --a) {
    for (int b = B2; b >= 1; --b) {
      S[a][b] = (*next)[a][b] + S[a + 1][b] + S[a][b + 1] - S[a + 1][b + 1];
    }
  }
  for (int a = 1; a <= A; ++a) {
    for (int b = pair_b_min(m, a); b <= B; ++b) {
      // Successors need a2 >= a and b2 >= b; the gog diagonal also caps
      // a2 <= b, removed by subtracting the a2 >= b+1 slab.
      tbl[a][b] = S[a][b];
      if (m.kind == Kind::gog) tbl[a][b] -= S[b + 1][b];
    }
  }
  return tbl;
}

std::vector<Table> suffix_tables(const ColumnModel& m) {
  const int pairs = m.pair_columns();
  std::vector<Table> tables(pairs);
  tables[pairs - 1] = column_table(m, pairs, nullptr);
  for (int j = pairs - 1; j >= 1; --j) {
    tables[j - 1] = column_table(m, j, &tables[j]);
  }
  return tables;
}

// Walks the pair columns left to right. state_of(j) yields the actual
// column-j pair when ranking; consume(j, a, b) returns true to accept the
// state (unranking) or false to keep scanning.
template <class PerState>
void scan_column(const ColumnModel& m, int j, int prev_a, int prev_b,
                 PerState&& per_state) {
  const int a_lo = j == 1 ? 1 : prev_a;
  for (int a = a_lo; a <= m.top_max(j); ++a) {
    if (j > 1 && m.kind == Kind::gog && a > prev_b) break;
    int b_lo = pair_b_min(m, a);
    if (j > 1 && b_lo < prev_b) b_lo = prev_b;
    for (int b = b_lo; b <= m.bottom_max(j); ++b) {
      if (per_state(a, b)) return;
    }
  }
}

big_int rank_impl(const ColumnModel& m, const std::vector<int>& top,
                  const std::vector<int>& bottom, int last) {
  const auto tables = suffix_tables(m);
  big_int r = 0;
  int prev_a = 0;
  int prev_b = 0;
  for (int j = 1; j <= m.pair_columns(); ++j) {
    const int aj = top[j - 1];
    const int bj = bottom[j - 1];
    scan_column(m, j, prev_a, prev_b, [&](int a, int b) {
      if (a == aj && b == bj) return true;
      r += tables[j - 1][a][b];
      return false;
    });
    prev_a = aj;
    prev_b = bj;
  }
  return r + (last - m.last_min(prev_a, prev_b));
}

void unrank_impl(const ColumnModel& m, big_int r, std::vector<int>& top,
                 std::vector<int>& bottom, int& last) {
  if (r < 0) throw std::out_of_range("rank is negative");
  const auto tables = suffix_tables(m);
  const int pairs = m.pair_columns();
  top.assign(pairs, 0);
  bottom.assign(pairs, 0);
  int prev_a = 0;
  int prev_b = 0;
  for (int j = 1; j <= pairs; ++j) {
    bool chosen = false;
    scan_column(m, j, prev_a, prev_b, [&](int a, int b) {
      const big_int& ways = tables[j - 1][a][b];
      if (r < ways) {
        top[j - 1] = a;
        bottom[j - 1] = b;
        chosen = true;
        return true;
      }
      r -= ways;
      return false;
    });
    if (!chosen) throw std::out_of_range("rank exceeds the family size");
    prev_a = top[j - 1];
    prev_b = bottom[j - 1];
  }
  last = m.last_min(prev_a, prev_b) + static_cast<int>(r);
}

}  // namespace

big_int count(Kind kind, const TrapezoidParams& params) {
  const ColumnModel m(kind, params);
  Table cur = column_table(m, m.pair_columns(), nullptr);
  for (int j = m.pair_columns() - 1; j >= 1; --j) {
    cur = column_table(m, j, &cur);
  }
  big_int total = 0;
  scan_column(m, 1, 0, 0, [&](int a, int b) {
    total += cur[a][b];
    return false;
  });
  return total;
}

big_int rank(const MagogTrapezoid& m) {
  require_valid(m);
  const ColumnModel model(Kind::magog, m.params);
  std::vector<int> bottom(m.row2.begin(), m.row2.end() - 1);
  return rank_impl(model, m.row1, bottom, m.row2.back());
}

big_int rank(const GogTrapezoid& g) {
  require_valid(g);
  const ColumnModel model(Kind::gog, g.params);
  std::vector<int> top(g.row1.begin(), g.row1.end() - 1);
  return rank_impl(model, top, g.row2, g.row1.back());
}

big_int rank(const AnyTrapezoid& t) {
  return std::visit([](const auto& v) { return rank(v); }, t);
}

MagogTrapezoid unrank_magog(const TrapezoidParams& params, const big_int& r) {
  const ColumnModel model(Kind::magog, params);
  MagogTrapezoid m{params, {}, {}};
  std::vector<int> bottom;
  int last = 0;
  unrank_impl(model, r, m.row1, bottom, last);
  m.row2 = std::move(bottom);
  m.row2.push_back(last);
  return m;
}

GogTrapezoid unrank_gog(const TrapezoidParams& params, const big_int& r) {
  const ColumnModel model(Kind::gog, params);
  GogTrapezoid g{params, {}, {}};
  std::vector<int> top;
  int last = 0;
  unrank_impl(model, r, top, g.row2, last);
  g.row1 = std::move(top);
  g.row1.push_back(last);
  return g;
}

AnyTrapezoid unrank(Kind kind, const TrapezoidParams& params, const big_int& r) {
  if (kind == Kind::magog) return AnyTrapezoid(unrank_magog(params, r));
  return AnyTrapezoid(unrank_gog(params, r));
}

std::vector<MagogTrapezoid> all_magog(const TrapezoidParams& params) {
  std::vector<MagogTrapezoid> out;
  for_each_magog(params, [&](const MagogTrapezoid& m) { out.push_back(m); });
  return out;
}

std::vector<GogTrapezoid> all_gog(const TrapezoidParams& params) {
  std::vector<GogTrapezoid> out;
  for_each_gog(params, [&](const GogTrapezoid& g) { out.push_back(g); });
  return out;
}

}  // namespace gogmagog
