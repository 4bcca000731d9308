#include "gogmagog/statistics.hpp"

#include <sstream>
#include <stdexcept>
#include <variant>

#include "gogmagog/bijection.hpp"
#include "gogmagog/columns.hpp"
#include "gogmagog/validation.hpp"

namespace gogmagog {

std::string to_string(StatComponent c) {
  switch (c) {
    case StatComponent::ones_row1: return "ones_row1";
    case StatComponent::ones_row2: return "ones_row2";
    case StatComponent::maxed_row1: return "maxed_row1";
    case StatComponent::maxed_row2: return "maxed_row2";
    case StatComponent::right_row1: return "right_row1";
    case StatComponent::right_row2: return "right_row2";
    case StatComponent::right_row1_prev: return "right_row1_prev";
    case StatComponent::right_row2_prev: return "right_row2_prev";
    case StatComponent::zero: return "zero";
  }
  return "?";
}

namespace {

std::optional<StatComponent> component_from_string(std::string_view name) {
  for (StatComponent c :
       {StatComponent::ones_row1, StatComponent::ones_row2, StatComponent::maxed_row1,
        StatComponent::maxed_row2, StatComponent::right_row1, StatComponent::right_row2,
        StatComponent::right_row1_prev, StatComponent::right_row2_prev,
        StatComponent::zero}) {
    if (name == to_string(c)) return c;
  }
  return std::nullopt;
}

long long eval_component(StatComponent c, Kind kind, const TrapezoidParams& params,
                         const std::vector<int>& row1, const std::vector<int>& row2) {
  const auto ones = [](const std::vector<int>& row) {
    long long k = 0;
    for (int v : row) k += v == 1;
    return k;
  };
  const auto maxed = [&](const std::vector<int>& row, int index) {
    long long k = 0;
    for (size_t i = 0; i < row.size(); ++i) {
      k += row[i] == cell_upper_bound(kind, index, static_cast<int>(i) + 1, params);
    }
    return k;
  };
  switch (c) {
    case StatComponent::ones_row1: return ones(row1);
    case StatComponent::ones_row2: return ones(row2);
    case StatComponent::maxed_row1: return maxed(row1, 1);
    case StatComponent::maxed_row2: return maxed(row2, 2);
    case StatComponent::right_row1: return row1.back();
    case StatComponent::right_row2: return row2.back();
    case StatComponent::right_row1_prev: return row1[row1.size() - 2];
    case StatComponent::right_row2_prev: return row2[row2.size() - 2];
    case StatComponent::zero: return 0;
  }
  throw std::invalid_argument("unknown statistic component");
}

template <class T>
StatVector eval_impl(const T& t, const StatSelector& sel) {
  require_valid(t);
  StatVector out;
  out.names.reserve(sel.size());
  out.values.reserve(sel.size());
  for (StatComponent c : sel) {
    out.names.push_back(std::string(to_string(c)));
    out.values.push_back(eval_component(c, t.kind, t.params, t.row1, t.row2));
  }
  return out;
}

}  // namespace

std::optional<StatSelector> selector_from_string(std::string_view name, Kind kind) {
  if (name == "ones") return StatSelector{StatComponent::ones_row1, StatComponent::ones_row2};
  if (name == "maxed") return StatSelector{StatComponent::maxed_row1, StatComponent::maxed_row2};
  if (name == "right") return StatSelector{StatComponent::right_row1, StatComponent::right_row2};
  if (name == "mrr") {
    return StatSelector{StatComponent::ones_row1, StatComponent::ones_row2,
                        StatComponent::maxed_row1, StatComponent::maxed_row2};
  }
  if (name == "bc") {
    if (kind == Kind::magog) {
      return StatSelector{StatComponent::right_row1_prev, StatComponent::right_row1,
                          StatComponent::right_row2_prev, StatComponent::right_row2};
    }
    return StatSelector{StatComponent::right_row1, StatComponent::right_row2};
  }
  if (name == "zero") return StatSelector{StatComponent::zero};
  if (auto c = component_from_string(name)) return StatSelector{*c};
  return std::nullopt;
}

std::vector<std::string> selector_names() {
  return {"ones", "maxed", "right", "mrr", "bc", "zero"};
}

std::string to_string(const StatVector& s) {
  std::ostringstream out;
  for (size_t i = 0; i < s.values.size(); ++i) {
    if (i) out << " ";
    out << (i < s.names.size() ? s.names[i] : "?") << "=" << s.values[i];
  }
  return out.str();
}

StatVector eval_stats(const MagogTrapezoid& m, const StatSelector& sel) {
  return eval_impl(m, sel);
}

StatVector eval_stats(const GogTrapezoid& g, const StatSelector& sel) {
  return eval_impl(g, sel);
}

StatVector eval_stats(const AnyTrapezoid& t, const StatSelector& sel) {
  return std::visit([&](const auto& v) { return eval_impl(v, sel); }, t);
}

Distribution distribution(Kind kind, const TrapezoidParams& params,
                          const StatSelector& sel) {
  if (!params.valid()) {
    throw std::invalid_argument("trapezoid params require n >= 3 and ell >= 0");
  }
  Distribution table;
  for_each(kind, params, [&](const AnyTrapezoid& t) { table[eval_stats(t, sel)] += 1; });
  return table;
}

std::optional<StatPairing> pairing_from_string(std::string_view name) {
  if (name == "mrr") {
    return StatPairing{"mrr", *selector_from_string("mrr", Kind::magog),
                       *selector_from_string("mrr", Kind::gog)};
  }
  if (name == "bc") {
    // The kind-specific border selectors have different arity, so the
    // comparable pairing uses the rightmost entry of each row on both sides.
    return StatPairing{"bc", *selector_from_string("right", Kind::magog),
                       *selector_from_string("right", Kind::gog)};
  }
  if (name == "zero") {
    return StatPairing{"zero", *selector_from_string("zero", Kind::magog),
                       *selector_from_string("zero", Kind::gog)};
  }
  return std::nullopt;
}

std::vector<std::string> pairing_names() { return {"mrr", "bc", "zero"}; }

std::optional<StatCounterexample> find_statistic_counterexample(
    const TrapezoidParams& params, const StatPairing& pairing) {
  if (!params.valid()) {
    throw std::invalid_argument("trapezoid params require n >= 3 and ell >= 0");
  }
  if (pairing.magog_side.size() != pairing.gog_side.size()) {
    throw std::invalid_argument("pairing sides must have equal arity");
  }
  std::optional<StatCounterexample> found;
  for_each_magog(params, [&](const MagogTrapezoid& m) {
    GogTrapezoid g = magog_to_gog(m);
    StatVector sm = eval_stats(m, pairing.magog_side);
    StatVector sg = eval_stats(g, pairing.gog_side);
    if (sm.values != sg.values) {
      found = StatCounterexample{m, std::move(g), std::move(sm), std::move(sg)};
      return false;
    }
    return true;
  });
  return found;
}

}  // namespace gogmagog
