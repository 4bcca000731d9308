#pragma once

#include <optional>
#include <string>

#include "gogmagog/trapezoid.hpp"

namespace gogmagog {

// Which branch of the block-moving map applies. Case 1 carries the block
// boundary k: the smallest bug on the magog side, the pivot on the gog side.
struct CaseTag {
  enum class Which { case1, case2, case3 };

  Which which = Which::case3;
  int k = 0;  // meaningful iff which == case1

  static CaseTag case1(int k) { return CaseTag{Which::case1, k}; }
  static CaseTag case2() { return CaseTag{Which::case2, 0}; }
  static CaseTag case3() { return CaseTag{Which::case3, 0}; }

  friend bool operator==(const CaseTag&, const CaseTag&) = default;
};

std::string to_string(const CaseTag& tag);  // "Case1(k=3)", "Case2", "Case3"
std::optional<CaseTag> case_tag_from_string(std::string_view text);

// A bug is an index j in 1..n-2 with m_{1,j+1} > m_{2,j}+1. Returns the
// smallest one, or nullopt for a bug-free trapezoid.
std::optional<int> find_smallest_bug(const MagogTrapezoid& m);

// Largest j in 1..n-1 with g_{2,j-1} <= g_{1,j+1}+1, where j=1 is vacuously
// admissible (there is no g_{2,0}), so the pivot always exists. For ell=0
// this agrees with the classical definition over 2..n-1, whose domain can be
// empty once ell >= 1.
int compute_pivot(const GogTrapezoid& g);

// Case1(smallest bug) when a bug exists; otherwise Case2 when
// m_{2,n-1} < m_{2,n}, Case3 when they are equal.
CaseTag classify(const MagogTrapezoid& m);

// Case1(pivot) when the pivot is <= n-2; otherwise Case2 when
// g_{1,n} < g_{2,n-1}, Case3 when they are equal.
CaseTag classify(const GogTrapezoid& g);

// The magog-to-gog block move. The result is a valid gog trapezoid with the
// same params, and gog_to_magog inverts it exactly.
GogTrapezoid magog_to_gog(const MagogTrapezoid& m);

// The gog-to-magog block move, inverse of magog_to_gog.
MagogTrapezoid gog_to_magog(const GogTrapezoid& g);

// Maps in the direction implied by the stored kind.
AnyTrapezoid map_any(const AnyTrapezoid& t);

// All operations above refuse invalid inputs with a validation_error.

}  // namespace gogmagog
