#include "gogmagog/harness.hpp"

#include <chrono>
#include <utility>

#include <json.hpp>

#include "gogmagog/bijection.hpp"
#include "gogmagog/columns.hpp"
#include "gogmagog/io.hpp"
#include "gogmagog/validation.hpp"

namespace gogmagog {

namespace {

using Clock = std::chrono::steady_clock;

void finish(VerifyReport& rep, Clock::time_point t0) {
  rep.elapsed_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
}

void add_failure(VerifyReport& rep, const VerifyOptions& opts, std::string check_id,
                 std::string detail, std::string instance) {
  rep.failure_count += 1;
  if (rep.failures.size() < static_cast<size_t>(opts.max_failures_kept)) {
    rep.failures.push_back(
        CheckFailure{std::move(check_id), std::move(detail), std::move(instance)});
  }
}

VerifyReport start_report(const TrapezoidParams& params, std::string check) {
  VerifyReport rep;
  rep.params = params;
  rep.check = std::move(check);
  rep.magog_count = count(Kind::magog, params);
  rep.gog_count = count(Kind::gog, params);
  return rep;
}

bool over_cap(const VerifyReport& rep, const VerifyOptions& opts) {
  return rep.magog_count > opts.enumeration_cap || rep.gog_count > opts.enumeration_cap;
}

}  // namespace

VerifyReport verify_roundtrip(const TrapezoidParams& params, const VerifyOptions& opts) {
  const auto t0 = Clock::now();
  VerifyReport rep = start_report(params, "roundtrip");
  if (over_cap(rep, opts)) {
    rep.skipped = true;
    finish(rep, t0);
    return rep;
  }
  for_each_magog(params, [&](const MagogTrapezoid& m) {
    rep.instances_checked += 1;
    const GogTrapezoid g = magog_to_gog(m);
    const ValidationReport vg = validate(g);
    if (!vg.ok()) {
      add_failure(rep, opts, "magog_image_invalid", vg.summary(), serialize_text(AnyTrapezoid(m)));
      return;
    }
    if (gog_to_magog(g) != m) {
      add_failure(rep, opts, "magog_roundtrip", "mapping back does not restore the input",
                  serialize_text(AnyTrapezoid(m)));
    }
  });
  for_each_gog(params, [&](const GogTrapezoid& g) {
    rep.instances_checked += 1;
    const MagogTrapezoid m = gog_to_magog(g);
    const ValidationReport vm = validate(m);
    if (!vm.ok()) {
      add_failure(rep, opts, "gog_image_invalid", vm.summary(), serialize_text(AnyTrapezoid(g)));
      return;
    }
    if (magog_to_gog(m) != g) {
      add_failure(rep, opts, "gog_roundtrip", "mapping back does not restore the input",
                  serialize_text(AnyTrapezoid(g)));
    }
  });
  finish(rep, t0);
  return rep;
}

VerifyReport verify_case_correspondence(const TrapezoidParams& params,
                                        const VerifyOptions& opts) {
  const auto t0 = Clock::now();
  VerifyReport rep = start_report(params, "cases");
  if (over_cap(rep, opts)) {
    rep.skipped = true;
    finish(rep, t0);
    return rep;
  }
  for_each_magog(params, [&](const MagogTrapezoid& m) {
    rep.instances_checked += 1;
    const CaseTag cm = classify(m);
    const CaseTag cg = classify(magog_to_gog(m));
    if (cm != cg) {
      add_failure(rep, opts, "case_tag_mismatch",
                  to_string(cm) + " on the input, " + to_string(cg) + " on the image",
                  serialize_text(AnyTrapezoid(m)));
    }
  });
  finish(rep, t0);
  return rep;
}

VerifyReport verify_equinumerosity(const TrapezoidParams& params,
                                   const VerifyOptions& opts) {
  const auto t0 = Clock::now();
  VerifyReport rep = start_report(params, "counts");
  if (rep.magog_count != rep.gog_count) {
    add_failure(rep, opts, "count_mismatch",
                rep.magog_count.str() + " magog vs " + rep.gog_count.str() + " gog", "");
  }
  if (over_cap(rep, opts)) {
    rep.skipped = true;
    finish(rep, t0);
    return rep;
  }
  big_int magog_seen = 0;
  for_each_magog(params, [&](const MagogTrapezoid&) { magog_seen += 1; });
  big_int gog_seen = 0;
  for_each_gog(params, [&](const GogTrapezoid&) { gog_seen += 1; });
  rep.instances_checked = magog_seen + gog_seen;
  if (magog_seen != rep.magog_count) {
    add_failure(rep, opts, "magog_enumeration_mismatch",
                "swept " + magog_seen.str() + ", counted " + rep.magog_count.str(), "");
  }
  if (gog_seen != rep.gog_count) {
    add_failure(rep, opts, "gog_enumeration_mismatch",
                "swept " + gog_seen.str() + ", counted " + rep.gog_count.str(), "");
  }
  finish(rep, t0);
  return rep;
}

std::string to_json_string(const VerifyReport& rep) {
  nlohmann::json j;
  j["check"] = rep.check;
  j["params"] = {{"n", rep.params.n}, {"ell", rep.params.ell}};
  j["counts"] = {{"magog", rep.magog_count.str()}, {"gog", rep.gog_count.str()}};
  j["instances_checked"] = rep.instances_checked.str();
  j["failure_count"] = rep.failure_count.str();
  nlohmann::json failures = nlohmann::json::array();
  for (const CheckFailure& f : rep.failures) {
    failures.push_back(
        {{"check_id", f.check_id}, {"detail", f.detail}, {"instance", f.instance}});
  }
  j["failures"] = std::move(failures);
  j["skipped"] = rep.skipped;
  j["elapsed_seconds"] = rep.elapsed_seconds;
  j["passed"] = rep.passed();
  return j.dump();
}

}  // namespace gogmagog
