#pragma once

// Hand-checked reference instances at n = 8, ell = 0. The def_* pair
// illustrates the definitions; the case*_pair triples are worked map
// examples, one per branch, with their expected tags.

#include "gogmagog/bijection.hpp"
#include "gogmagog/trapezoid.hpp"

namespace fixtures {

using gogmagog::CaseTag;
using gogmagog::GogTrapezoid;
using gogmagog::MagogTrapezoid;
using gogmagog::TrapezoidParams;

inline const TrapezoidParams n8{8, 0};

// Its smallest bug is j = 3 (row 1 column 4 = 4 against row 2 column 3 = 2).
inline MagogTrapezoid def_magog() {
  return {n8, {1, 1, 2, 4, 4, 5, 7}, {1, 2, 2, 4, 4, 6, 7, 7}};
}

inline GogTrapezoid def_gog() {
  return {n8, {1, 1, 2, 4, 4, 5, 7, 7}, {2, 2, 4, 5, 6, 7, 8}};
}

struct MapPair {
  MagogTrapezoid magog;
  GogTrapezoid gog;
  CaseTag tag;
};

inline MapPair case1_pair() {
  return {{n8, {1, 1, 2, 4, 4, 6, 7}, {1, 2, 2, 4, 4, 6, 7, 7}},
          {n8, {1, 1, 2, 2, 2, 2, 4, 5}, {2, 3, 4, 4, 6, 7, 7}},
          CaseTag::case1(3)};
}

inline MapPair case2_pair() {
  return {{n8, {1, 1, 2, 3, 4, 4, 5}, {1, 2, 2, 4, 4, 6, 6, 8}},
          {n8, {1, 1, 2, 3, 4, 4, 5, 6}, {2, 3, 3, 5, 5, 7, 8}},
          CaseTag::case2()};
}

inline MapPair case3_pair() {
  return {{n8, {1, 1, 2, 3, 4, 4, 5}, {1, 2, 2, 4, 4, 6, 6, 6}},
          {n8, {1, 1, 2, 3, 4, 4, 5, 7}, {2, 3, 3, 5, 5, 7, 7}},
          CaseTag::case3()};
}

// The ell = 1 instance whose pivot only exists with the extended domain.
inline GogTrapezoid edge_gog_ell1() {
  return {TrapezoidParams{3, 1}, {1, 1, 1}, {3, 3}};
}

inline MagogTrapezoid all_minimal_magog(int n, int ell = 0) {
  return {TrapezoidParams{n, ell}, std::vector<int>(n - 1, 1), std::vector<int>(n, 1)};
}

}  // namespace fixtures
