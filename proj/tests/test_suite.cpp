#include <doctest.h>

#include <string>
#include <utility>

#include "ghznl/suite.hpp"

using namespace ghznl;

TEST_CASE("transform oracle passes on the builtin tables") {
  OracleReport report = run_transform_oracle(builtin_transform_source());
  CHECK(report.passed);
  CHECK(report.detail.empty());
  CHECK(report.checks > 500);  // columns, algebra, random samples, commutation
}

TEST_CASE("transform oracle flags a corrupted table") {
  TransformSource corrupted = [](Bipartition cut) {
    PtTransform t = pt_transform(cut);
    if (cut == Bipartition::b_ca) t.m[0][0] += Rational(1, 7);
    return t;
  };
  OracleReport report = run_transform_oracle(corrupted);
  CHECK_FALSE(report.passed);
  CHECK_FALSE(report.detail.empty());

  // a subtler corruption: swap two unequal entries within one row, keeping
  // the entry multiset (and so the row sum) intact
  TransformSource swapped = [](Bipartition cut) {
    PtTransform t = pt_transform(cut);
    if (cut == Bipartition::a_bc) std::swap(t.m[0][0], t.m[0][4]);
    return t;
  };
  CHECK_FALSE(run_transform_oracle(swapped).passed);
}

TEST_CASE("suite reports serialize without timings") {
  SuiteReport rep;
  rep.results.push_back({1, "first-check", true, 1.25, "ok"});
  rep.results.push_back({2, "second-check", false, 0.5, "broke"});
  CHECK_FALSE(rep.all_passed());

  Json j = suite_report_to_json(rep);
  CHECK(j["passed"] == false);
  REQUIRE(j["criteria"].size() == 2);
  CHECK(j["criteria"][0]["id"] == 1);
  CHECK(j["criteria"][0]["name"] == "first-check");
  CHECK(j["criteria"][0]["passed"] == true);
  CHECK(j["criteria"][0]["detail"] == "ok");
  CHECK(j["criteria"][1]["passed"] == false);

  // byte-identical regardless of how long the run took
  SuiteReport slower = rep;
  slower.results[0].seconds = 99.0;
  CHECK(dump_canonical(suite_report_to_json(slower)) == dump_canonical(j));

  rep.results[1].passed = true;
  CHECK(rep.all_passed());
  CHECK(suite_report_to_json(rep)["passed"] == true);
}
