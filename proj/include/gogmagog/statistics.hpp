#pragma once

// Statistic extractors over trapezoids, distributions of statistics across a
// family, and a search for statistics that the map fails to transport. The
// components below are building blocks; named selectors bundle the ones worth
// comparing across the map.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gogmagog/enumeration.hpp"
#include "gogmagog/trapezoid.hpp"

namespace gogmagog {

enum class StatComponent {
  ones_row1,        // entries equal to 1 in row 1
  ones_row2,        // entries equal to 1 in row 2
  maxed_row1,       // entries meeting their per-cell ceiling in row 1
  maxed_row2,       // entries meeting their per-cell ceiling in row 2
  right_row1,       // last entry of row 1
  right_row2,       // last entry of row 2
  right_row1_prev,  // next-to-last entry of row 1
  right_row2_prev,  // next-to-last entry of row 2
  zero,             // constant 0
};

std::string to_string(StatComponent c);

using StatSelector = std::vector<StatComponent>;

// Named selectors. "ones", "maxed", "right" and "zero" mean the same
// components for either kind; "mrr" is the four-component profile
// (ones_row1, ones_row2, maxed_row1, maxed_row2); "bc" picks the rightmost
// border cells, all four for magog and the two for gog.
std::optional<StatSelector> selector_from_string(std::string_view name, Kind kind);
std::vector<std::string> selector_names();

struct StatVector {
  std::vector<std::string> names;
  std::vector<long long> values;

  bool operator==(const StatVector&) const = default;
  bool operator<(const StatVector& other) const { return values < other.values; }
};

std::string to_string(const StatVector& s);

StatVector eval_stats(const MagogTrapezoid& m, const StatSelector& sel);
StatVector eval_stats(const GogTrapezoid& g, const StatSelector& sel);
StatVector eval_stats(const AnyTrapezoid& t, const StatSelector& sel);

// Multiset of statistic values across the whole family.
using Distribution = std::map<StatVector, big_int>;

Distribution distribution(Kind kind, const TrapezoidParams& params,
                          const StatSelector& sel);

// A candidate pairing of statistics, one selector per side, evaluated on a
// magog instance and on its image. The sides must have equal arity.
struct StatPairing {
  std::string name;
  StatSelector magog_side;
  StatSelector gog_side;
};

std::optional<StatPairing> pairing_from_string(std::string_view name);
std::vector<std::string> pairing_names();

struct StatCounterexample {
  MagogTrapezoid magog;
  GogTrapezoid gog;
  StatVector magog_stat;
  StatVector gog_stat;
};

// First instance in canonical magog order whose image disagrees on the
// pairing, or nullopt when the pairing is preserved everywhere at these
// parameters.
std::optional<StatCounterexample> find_statistic_counterexample(
    const TrapezoidParams& params, const StatPairing& pairing);

}  // namespace gogmagog
