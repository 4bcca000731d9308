#include <doctest.h>

#include <map>
#include <set>

#include "gogmagog/bijection.hpp"
#include "gogmagog/validation.hpp"

#include "fixtures.hpp"
#include "oracle.hpp"

using namespace gogmagog;

TEST_CASE("case tags print and parse") {
  CHECK(to_string(CaseTag::case1(3)) == "Case1(k=3)");
  CHECK(to_string(CaseTag::case2()) == "Case2");
  CHECK(to_string(CaseTag::case3()) == "Case3");
  CHECK(case_tag_from_string("Case1(k=3)") == CaseTag::case1(3));
  CHECK(case_tag_from_string("Case1(k=12)") == CaseTag::case1(12));
  CHECK(case_tag_from_string("Case2") == CaseTag::case2());
  CHECK(case_tag_from_string("Case3") == CaseTag::case3());
  CHECK_FALSE(case_tag_from_string("Case1(k=)").has_value());
  CHECK_FALSE(case_tag_from_string("Case1(k=0)").has_value());
  CHECK_FALSE(case_tag_from_string("Case1(k=3").has_value());
  CHECK_FALSE(case_tag_from_string("case2").has_value());
}

TEST_CASE("smallest bug of the reference magog is 3") {
  CHECK(find_smallest_bug(fixtures::def_magog()) == 3);
  CHECK_FALSE(find_smallest_bug(fixtures::case2_pair().magog).has_value());
  CHECK_FALSE(find_smallest_bug(fixtures::all_minimal_magog(5)).has_value());
}

TEST_CASE("worked example pairs map forward, backward, and agree on tags") {
  for (const auto& pair :
       {fixtures::case1_pair(), fixtures::case2_pair(), fixtures::case3_pair()}) {
    CHECK(classify(pair.magog) == pair.tag);
    CHECK(classify(pair.gog) == pair.tag);
    CHECK(magog_to_gog(pair.magog) == pair.gog);
    CHECK(gog_to_magog(pair.gog) == pair.magog);
    CHECK(map_any(AnyTrapezoid(pair.magog)) == AnyTrapezoid(pair.gog));
    CHECK(map_any(AnyTrapezoid(pair.gog)) == AnyTrapezoid(pair.magog));
  }
}

TEST_CASE("pivot of the worked case-1 image is its bug index") {
  CHECK(compute_pivot(fixtures::case1_pair().gog) == 3);
  CHECK(compute_pivot(fixtures::case2_pair().gog) == 7);
  CHECK(compute_pivot(fixtures::case3_pair().gog) == 7);
}

TEST_CASE("pivot exists even when the classical domain is empty") {
  const GogTrapezoid g = fixtures::edge_gog_ell1();
  // Every j in 2..n-1 fails g_{2,j-1} <= g_{1,j+1}+1 here, so only the
  // vacuous j = 1 remains.
  CHECK(compute_pivot(g) == 1);
  const MagogTrapezoid m = gog_to_magog(g);
  CHECK(m == MagogTrapezoid{{3, 1}, {1, 3}, {1, 3, 3}});
  CHECK(validate(m).ok());
  CHECK(magog_to_gog(m) == g);
  CHECK(classify(g) == CaseTag::case1(1));
  CHECK(classify(m) == CaseTag::case1(1));
}

TEST_CASE("the map is a bijection onto the other family") {
  for (const int n : {3, 4}) {
    for (const int ell : {0, 1, 2}) {
      const auto ms = oracle::brute_magog(n, ell);
      const auto gs = oracle::brute_gog(n, ell);
      REQUIRE(ms.size() == gs.size());
      std::set<std::vector<int>> images;
      for (const MagogTrapezoid& m : ms) {
        const GogTrapezoid g = magog_to_gog(m);
        CHECK(oracle::valid_gog(g.row1, g.row2, n, ell));
        CHECK(gog_to_magog(g) == m);
        CHECK(classify(g) == classify(m));
        images.insert(oracle::linearize_gog(g));
      }
      CHECK(images.size() == gs.size());
      for (const GogTrapezoid& g : gs) {
        const MagogTrapezoid m = gog_to_magog(g);
        CHECK(oracle::valid_magog(m.row1, m.row2, n, ell));
        CHECK(magog_to_gog(m) == g);
        CHECK(images.count(oracle::linearize_gog(g)) == 1);
      }
    }
  }
}

TEST_CASE("pivot of the image equals the smallest bug, or n-1 without one") {
  const std::pair<int, int> small_grid[] = {{3, 0}, {3, 1}, {3, 2}, {4, 0},
                                            {4, 1}, {4, 2}, {5, 0}};
  for (const auto& [n, ell] : small_grid) {
    for (const MagogTrapezoid& m : oracle::brute_magog(n, ell)) {
      const auto bug = find_smallest_bug(m);
      CHECK(compute_pivot(magog_to_gog(m)) == (bug ? *bug : n - 1));
    }
  }
}

TEST_CASE("map refuses invalid inputs") {
  const MagogTrapezoid bad{{3, 0}, {2, 2}, {1, 1, 3}};
  CHECK_THROWS_AS(magog_to_gog(bad), validation_error);
  CHECK_THROWS_AS(find_smallest_bug(bad), validation_error);
  CHECK_THROWS_AS(classify(bad), validation_error);
  const GogTrapezoid badg{{3, 0}, {2, 2, 2}, {2, 3}};
  CHECK_THROWS_AS(gog_to_magog(badg), validation_error);
  CHECK_THROWS_AS(compute_pivot(badg), validation_error);
  CHECK_THROWS_AS(map_any(AnyTrapezoid(bad)), validation_error);
}

TEST_CASE("case distribution is consistent across the map at n=5") {
  std::map<std::string, int> magog_tags;
  std::map<std::string, int> gog_tags;
  for (const MagogTrapezoid& m : oracle::brute_magog(5, 0)) {
    magog_tags[to_string(classify(m))] += 1;
  }
  for (const GogTrapezoid& g : oracle::brute_gog(5, 0)) {
    gog_tags[to_string(classify(g))] += 1;
  }
  CHECK(magog_tags == gog_tags);
  CHECK(magog_tags.size() > 2);  // all three branches occur
}
