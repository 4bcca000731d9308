#pragma once

// Column-by-column view of a trapezoid family, shared by the enumerator, the
// counting sweep and rank/unrank. Columns 1..n-1 carry a (row1, row2) pair;
// column n carries the single entry of the longer row (m_{2,n} for magog,
// g_{1,n} for gog). Every family rule couples adjacent columns only, which is
// what makes the transfer-matrix sweep exact.

#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include "gogmagog/trapezoid.hpp"

namespace gogmagog {

struct ColumnModel {
  Kind kind;
  int n;
  int ell;

  ColumnModel(Kind k, const TrapezoidParams& params)
      : kind(k), n(params.n), ell(params.ell) {
    if (!params.valid()) {
      throw std::invalid_argument("trapezoid params require n >= 3 and ell >= 0");
    }
  }

  int pair_columns() const { return n - 1; }

  // Tight per-cell caps; identical to cell_upper_bound for pair columns.
  int top_max(int j) const { return j + ell; }
  int bottom_max(int j) const { return kind == Kind::magog ? j + ell : j + 1 + ell; }

  bool pair_ok(int a, int b) const { return kind == Kind::magog ? a <= b : a < b; }

  // May column j+1 = (a2, b2) follow column j = (a, b)? Rows must not
  // decrease; the gog diagonal additionally demands a2 <= b.
  bool step_ok(int a, int b, int a2, int b2) const {
    if (a2 < a || b2 < b) return false;
    return kind == Kind::magog || a2 <= b;
  }

  // Inclusive range of the single column-n entry given column n-1 = (a, b):
  // magog needs b <= c <= n+ell, gog needs a <= c <= b.
  int last_min(int a, int b) const { return kind == Kind::magog ? b : a; }
  int last_max(int /*a*/, int b) const { return kind == Kind::magog ? n + ell : b; }
};

// Deterministic sharding: the column-1 states are numbered in canonical
// order and shard i takes every state with number = i (mod shards).
struct EnumerationPartition {
  int index = 0;
  int shards = 1;

  bool valid() const { return shards >= 1 && index >= 0 && index < shards; }
};

namespace detail {

template <class Visitor>
bool enumerate_from(const ColumnModel& m, int j, int prev_a, int prev_b,
                    std::vector<int>& row1, std::vector<int>& row2,
                    Visitor& visit) {
  if (j > m.pair_columns()) {
    const int lo = m.last_min(prev_a, prev_b);
    const int hi = m.last_max(prev_a, prev_b);
    int& last = m.kind == Kind::magog ? row2[m.n - 1] : row1[m.n - 1];
    for (int c = lo; c <= hi; ++c) {
      last = c;
      if (!visit()) return false;
    }
    return true;
  }
  const int atop = m.top_max(j);
  const int btop = m.bottom_max(j);
  for (int a = prev_a; a <= atop; ++a) {
    if (m.kind == Kind::gog && a > prev_b) break;  // diagonal against column j-1
    const int blo = std::max(prev_b, m.kind == Kind::magog ? a : a + 1);
    for (int b = blo; b <= btop; ++b) {
      row1[j - 1] = a;
      row2[j - 1] = b;
      if (!enumerate_from(m, j + 1, a, b, row1, row2, visit)) return false;
    }
  }
  return true;
}

// Normalizes void-returning visitors to the bool protocol.
template <class Visitor, class Arg>
bool invoke_visitor(Visitor& visit, const Arg& arg) {
  if constexpr (std::is_void_v<decltype(visit(arg))>) {
    visit(arg);
    return true;
  } else {
    return static_cast<bool>(visit(arg));
  }
}

}  // namespace detail

// Visits every member of the family in strictly increasing canonical order.
// The visitor receives a scratch instance that is only valid during the call;
// copy it to keep it. A visitor may return bool (false stops) or void.
template <class Visitor>
void for_each_magog(const TrapezoidParams& params, Visitor&& visit,
                    EnumerationPartition part = {}) {
  const ColumnModel m(Kind::magog, params);
  if (!part.valid()) throw std::invalid_argument("bad enumeration partition");
  MagogTrapezoid scratch{params, std::vector<int>(params.n - 1, 0),
                         std::vector<int>(params.n, 0)};
  auto emit = [&]() { return detail::invoke_visitor(visit, scratch); };
  long long state = 0;
  for (int a = 1; a <= m.top_max(1); ++a) {
    for (int b = a; b <= m.bottom_max(1); ++b) {
      if (state++ % part.shards != part.index) continue;
      scratch.row1[0] = a;
      scratch.row2[0] = b;
      if (!detail::enumerate_from(m, 2, a, b, scratch.row1, scratch.row2, emit)) return;
    }
  }
}

template <class Visitor>
void for_each_gog(const TrapezoidParams& params, Visitor&& visit,
                  EnumerationPartition part = {}) {
  const ColumnModel m(Kind::gog, params);
  if (!part.valid()) throw std::invalid_argument("bad enumeration partition");
  GogTrapezoid scratch{params, std::vector<int>(params.n, 0),
                       std::vector<int>(params.n - 1, 0)};
  auto emit = [&]() { return detail::invoke_visitor(visit, scratch); };
  long long state = 0;
  for (int a = 1; a <= m.top_max(1); ++a) {
    for (int b = a + 1; b <= m.bottom_max(1); ++b) {
      if (state++ % part.shards != part.index) continue;
      scratch.row1[0] = a;
      scratch.row2[0] = b;
      if (!detail::enumerate_from(m, 2, a, b, scratch.row1, scratch.row2, emit)) return;
    }
  }
}

// Kind-erased variant; the visitor receives AnyTrapezoid scratch copies.
template <class Visitor>
void for_each(Kind kind, const TrapezoidParams& params, Visitor&& visit,
              EnumerationPartition part = {}) {
  if (kind == Kind::magog) {
    for_each_magog(
        params,
        [&](const MagogTrapezoid& m) { return detail::invoke_visitor(visit, AnyTrapezoid(m)); },
        part);
  } else {
    for_each_gog(
        params,
        [&](const GogTrapezoid& g) { return detail::invoke_visitor(visit, AnyTrapezoid(g)); },
        part);
  }
}

}  // namespace gogmagog
