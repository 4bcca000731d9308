#pragma once

// Verification harness: sweeps parameter ranges and checks the structural
// guarantees end to end (round trips, case correspondence, equal counts).
// Reports are plain data so callers can render or serialize them.

#include <string>
#include <vector>

#include "gogmagog/enumeration.hpp"
#include "gogmagog/trapezoid.hpp"

namespace gogmagog {

struct VerifyOptions {
  // Parameter pairs whose family size exceeds the cap are counted but not
  // enumerated; the enumeration-backed checks mark them skipped.
  big_int enumeration_cap = 10'000'000;
  int max_failures_kept = 100;
};

struct CheckFailure {
  std::string check_id;
  std::string detail;
  std::string instance;  // text form of the offending trapezoid, if any
};

struct VerifyReport {
  TrapezoidParams params;
  std::string check;
  big_int magog_count = 0;
  big_int gog_count = 0;
  big_int instances_checked = 0;
  big_int failure_count = 0;
  std::vector<CheckFailure> failures;  // capped at max_failures_kept
  bool skipped = false;
  double elapsed_seconds = 0.0;

  bool passed() const { return failure_count == 0; }
};

// Every magog instance maps to a valid gog instance and back to itself, and
// every gog instance maps to a valid magog instance and back to itself.
VerifyReport verify_roundtrip(const TrapezoidParams& params,
                              const VerifyOptions& opts = {});

// classify(M) == classify(magog_to_gog(M)) across the family, including the
// pivot value in the first case.
VerifyReport verify_case_correspondence(const TrapezoidParams& params,
                                        const VerifyOptions& opts = {});

// count(magog) == count(gog), and both agree with the enumerators when the
// family fits under the cap.
VerifyReport verify_equinumerosity(const TrapezoidParams& params,
                                   const VerifyOptions& opts = {});

std::string to_json_string(const VerifyReport& report);

}  // namespace gogmagog
