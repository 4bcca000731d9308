#pragma once

// Exact counting, rank and unrank over the canonical order. Counts are exact
// integers of arbitrary size; the n = 200 family already needs hundreds of
// bits.

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gogmagog/trapezoid.hpp"

namespace gogmagog {

using big_int = boost::multiprecision::cpp_int;

// Number of trapezoids with the given parameters, via a column transfer
// sweep; never materializes instances.
big_int count(Kind kind, const TrapezoidParams& params);

// Zero-based position in the canonical order. Inputs are validated.
big_int rank(const MagogTrapezoid& m);
big_int rank(const GogTrapezoid& g);
big_int rank(const AnyTrapezoid& t);

// Inverse of rank; throws std::out_of_range when r >= count(kind, params).
MagogTrapezoid unrank_magog(const TrapezoidParams& params, const big_int& r);
GogTrapezoid unrank_gog(const TrapezoidParams& params, const big_int& r);
AnyTrapezoid unrank(Kind kind, const TrapezoidParams& params, const big_int& r);

// Materialized exhaustive lists in canonical order. Intended for small
// parameters; use for_each_* for streaming.
std::vector<MagogTrapezoid> all_magog(const TrapezoidParams& params);
std::vector<GogTrapezoid> all_gog(const TrapezoidParams& params);

}  // namespace gogmagog
