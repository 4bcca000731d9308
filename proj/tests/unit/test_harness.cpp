#include <doctest.h>

#include <json.hpp>

#include "gogmagog/harness.hpp"

using namespace gogmagog;

TEST_CASE("round trips hold across a small family") {
  const VerifyReport rep = verify_roundtrip(TrapezoidParams{4, 1});
  CHECK(rep.check == "roundtrip");
  CHECK(rep.passed());
  CHECK(rep.failure_count == 0);
  CHECK(rep.failures.empty());
  CHECK_FALSE(rep.skipped);
  CHECK(rep.magog_count == 219);
  CHECK(rep.gog_count == 219);
  // both directions are swept
  CHECK(rep.instances_checked == 438);
  CHECK(rep.elapsed_seconds >= 0.0);
}

TEST_CASE("case tags agree across the map on a small family") {
  const VerifyReport rep = verify_case_correspondence(TrapezoidParams{4, 1});
  CHECK(rep.check == "cases");
  CHECK(rep.passed());
  CHECK(rep.instances_checked == 219);
  CHECK_FALSE(rep.skipped);
}

TEST_CASE("counts agree with each other and with the enumerators") {
  const VerifyReport rep = verify_equinumerosity(TrapezoidParams{4, 1});
  CHECK(rep.check == "counts");
  CHECK(rep.passed());
  CHECK(rep.magog_count == rep.gog_count);
  CHECK(rep.instances_checked == 438);
  CHECK_FALSE(rep.skipped);
}

TEST_CASE("a low cap skips the sweep but keeps the counting checks") {
  VerifyOptions opts;
  opts.enumeration_cap = 10;

  const VerifyReport rt = verify_roundtrip(TrapezoidParams{4, 1}, opts);
  CHECK(rt.skipped);
  CHECK(rt.instances_checked == 0);
  CHECK(rt.failures.empty());
  CHECK(rt.magog_count == 219);

  const VerifyReport eq = verify_equinumerosity(TrapezoidParams{4, 1}, opts);
  CHECK(eq.skipped);
  // the count comparison does not need the sweep, so it still ran
  CHECK(eq.passed());
  CHECK(eq.magog_count == 219);
  CHECK(eq.gog_count == 219);
  CHECK(eq.instances_checked == 0);
}

TEST_CASE("default options") {
  const VerifyOptions opts;
  CHECK(opts.enumeration_cap == 10'000'000);
  CHECK(opts.max_failures_kept == 100);
}

TEST_CASE("reports serialize to parseable json") {
  const VerifyReport rep = verify_equinumerosity(TrapezoidParams{3, 0});
  const nlohmann::json j = nlohmann::json::parse(to_json_string(rep));
  CHECK(j.at("check") == "counts");
  CHECK(j.at("params").at("n") == 3);
  CHECK(j.at("params").at("ell") == 0);
  CHECK(j.at("counts").at("magog") == "7");
  CHECK(j.at("counts").at("gog") == "7");
  CHECK(j.at("instances_checked") == "14");
  CHECK(j.at("failure_count") == "0");
  CHECK(j.at("failures").is_array());
  CHECK(j.at("failures").empty());
  CHECK(j.at("skipped") == false);
  CHECK(j.at("passed") == true);
  CHECK(j.at("elapsed_seconds").is_number());
}

TEST_CASE("failures carry their context through serialization") {
  VerifyReport rep;
  rep.params = TrapezoidParams{5, 2};
  rep.check = "roundtrip";
  rep.magog_count = 6841;
  rep.gog_count = 6841;
  rep.instances_checked = 3;
  rep.failure_count = 2;
  rep.failures.push_back({"magog_roundtrip", "mapping back does not restore the input",
                          "magog 3 0\n1 1\n1 1 1\n"});
  CHECK_FALSE(rep.passed());
  const nlohmann::json j = nlohmann::json::parse(to_json_string(rep));
  CHECK(j.at("passed") == false);
  CHECK(j.at("failure_count") == "2");
  REQUIRE(j.at("failures").size() == 1);
  CHECK(j.at("failures")[0].at("check_id") == "magog_roundtrip");
  CHECK(j.at("failures")[0].at("detail") == "mapping back does not restore the input");
  CHECK(j.at("failures")[0].at("instance") == "magog 3 0\n1 1\n1 1 1\n");
}
