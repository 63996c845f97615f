#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "ghznl/fixtures.hpp"
#include "ghznl/io.hpp"

using namespace ghznl;

TEST_CASE("rationals travel as strings, accept integers") {
  CHECK(rational_to_json(Rational(3, 4)) == Json("3/4"));
  CHECK(rational_to_json(Rational(-2)) == Json("-2"));
  CHECK(rational_from_json(Json("7/8"), "x") == Rational(7, 8));
  CHECK(rational_from_json(Json(5), "x") == Rational(5));
  CHECK(rational_from_json(Json(-5), "x") == Rational(-5));
  CHECK_THROWS_AS(rational_from_json(Json("1/0"), "x"), IoError);
  CHECK_THROWS_AS(rational_from_json(Json("abc"), "x"), IoError);
  CHECK_THROWS_AS(rational_from_json(Json(1.5), "x"), IoError);
  CHECK_THROWS_AS(rational_from_json(Json::object(), "x"), IoError);
}

TEST_CASE("state sets round-trip through json") {
  StateSet s10 = fixtures::s10();
  Json j = state_set_to_json(s10);
  CHECK(j["t"] == 2);
  CHECK(j["states"].size() == 10);
  CHECK(j["states"][0] == Json::array({1, 0}));
  StateSet back = state_set_from_json(j);
  CHECK(back == s10);
}

TEST_CASE("state set parsing rejects malformed documents") {
  CHECK_THROWS_AS(state_set_from_json(Json::object()), IoError);  // missing keys
  CHECK_THROWS_AS(state_set_from_json(Json::parse(R"({"t":1,"states":[]})")), IoError);
  CHECK_THROWS_AS(state_set_from_json(Json::parse(R"({"t":1,"states":[[8]]})")), IoError);
  CHECK_THROWS_AS(state_set_from_json(Json::parse(R"({"t":1,"states":[[-1]]})")), IoError);
  CHECK_THROWS_AS(state_set_from_json(Json::parse(R"({"t":2,"states":[[1]]})")), IoError);
  CHECK_THROWS_AS(state_set_from_json(Json::parse(R"({"t":1,"states":[[1],[1]]})")), IoError);
  CHECK_THROWS_AS(state_set_from_json(Json::parse(R"({"t":"x","states":[[1]]})")), IoError);
  CHECK_THROWS_AS(state_set_from_json(Json::parse(R"({"t":1,"states":[["a"]]})")), IoError);
}

TEST_CASE("certificates round-trip through json") {
  Certificate cert = fixtures::s5_certificate(Bipartition::b_ca);
  Json j = certificate_to_json(cert);
  CHECK(j["cut"] == "B|CA");
  CHECK(j["value"] == "4/5");
  CHECK(j["y"].size() == 8);
  CHECK(j["qs"].size() == 5);

  Certificate back = certificate_from_json(j);
  CHECK(back.cut == cert.cut);
  CHECK(back.claimed_value == cert.claimed_value);
  CHECK(back.y == cert.y);
  REQUIRE(back.qs.size() == cert.qs.size());
  for (std::size_t k = 0; k < cert.qs.size(); ++k) CHECK(back.qs[k] == cert.qs[k]);

  // level count is inferred from the coefficient count
  Certificate lifted = fixtures::s10_certificate(Bipartition::c_ab);
  Certificate back2 = certificate_from_json(certificate_to_json(lifted));
  CHECK(back2.y.t == 2);
  CHECK(back2.y == lifted.y);
}

TEST_CASE("certificate parsing rejects malformed documents") {
  Json good = certificate_to_json(fixtures::s5_certificate(Bipartition::a_bc));

  Json bad_cut = good;
  bad_cut["cut"] = "AB|C";
  CHECK_THROWS_AS(certificate_from_json(bad_cut), IoError);

  Json bad_len = good;
  bad_len["y"].push_back("0");  // 9 coefficients is not a power of 8
  CHECK_THROWS_AS(certificate_from_json(bad_len), IoError);

  Json no_qs = good;
  no_qs.erase("qs");
  CHECK_THROWS_AS(certificate_from_json(no_qs), IoError);

  Json empty_qs = good;
  empty_qs["qs"] = Json::array();
  CHECK_THROWS_AS(certificate_from_json(empty_qs), IoError);

  Json ragged = good;
  ragged["qs"][0] = Json::array({"0"});  // q block disagreeing with y's size
  CHECK_THROWS_AS(certificate_from_json(ragged), IoError);
}

TEST_CASE("generalized sets round-trip through json") {
  GhzLikeSet n26 = fixtures::n26();
  Json j = ghzlike_set_to_json(n26);
  CHECK(j["d"] == 3);
  CHECK(j["w"] == 2);
  CHECK(j["states"].size() == 26);
  GhzLikeSet back = ghzlike_set_from_json(j);
  CHECK(back.d == n26.d);
  CHECK(back.w == n26.w);
  REQUIRE(back.size() == n26.size());
  for (std::size_t k = 0; k < n26.size(); ++k) {
    CHECK(back.states[k].terms == n26.states[k].terms);
    REQUIRE(back.states[k].phases.size() == n26.states[k].phases.size());
    for (std::size_t p = 0; p < n26.states[k].phases.size(); ++p)
      CHECK(back.states[k].phases[p].str() == n26.states[k].phases[p].str());
  }

  Json bad_phase = j;
  bad_phase["states"][0]["phases"][0] = "maybe";
  CHECK_THROWS_AS(ghzlike_set_from_json(bad_phase), IoError);

  Json bad_term = j;
  bad_term["states"][0]["terms"][0] = Json::array({0, 1});  // two digits, not three
  CHECK_THROWS_AS(ghzlike_set_from_json(bad_term), IoError);

  CHECK_THROWS_AS(ghzlike_set_from_json(Json::object()), IoError);
}

TEST_CASE("cursors round-trip through json") {
  SearchCursor cur;
  cur.size = 3;
  cur.rank = 41;
  Json j = search_cursor_to_json(cur);
  SearchCursor back = search_cursor_from_json(j);
  CHECK(back.size == 3);
  CHECK(back.rank == 41);
  CHECK_THROWS_AS(search_cursor_from_json(Json::object()), IoError);
}

TEST_CASE("canonical dumps are byte-stable") {
  Json j = Json::parse(R"({"b":1,"a":[1,2]})");
  std::string text = dump_canonical(j);
  CHECK(text.back() == '\n');
  CHECK(text.find("  \"b\": 1") != std::string::npos);  // two-space indent
  // insertion order survives: "b" precedes "a"
  CHECK(text.find("\"b\"") < text.find("\"a\""));
  CHECK(dump_canonical(Json::parse(text)) == text);
}

TEST_CASE("every bundled fixture survives a parse and re-dump") {
  auto files = bundled_fixture_files();
  CHECK(files.size() == 16);
  for (const auto& [name, doc] : files) {
    CAPTURE(name);
    std::string text = dump_canonical(doc);
    Json reread = Json::parse(text);
    // dispatch on shape: certificates carry "cut", generalized sets "d",
    // plain state sets "t"
    Json redone;
    if (reread.contains("cut"))
      redone = certificate_to_json(certificate_from_json(reread));
    else if (reread.contains("d"))
      redone = ghzlike_set_to_json(ghzlike_set_from_json(reread));
    else
      redone = state_set_to_json(state_set_from_json(reread));
    CHECK(dump_canonical(redone) == text);
  }
}

TEST_CASE("fixture inventory") {
  auto files = bundled_fixture_files();
  std::vector<std::string> names;
  for (const auto& [name, doc] : files) names.push_back(name);
  for (const char* expected :
       {"ghz_basis.json", "s5.json", "s8.json", "s10.json", "s16.json", "l16.json", "n26.json",
        "s5_cert_a.json", "s5_cert_b.json", "s5_cert_c.json", "s8_cert_a.json", "s8_cert_b.json",
        "s8_cert_c.json", "s10_cert_a.json", "s10_cert_b.json", "s10_cert_c.json"}) {
    CAPTURE(expected);
    CHECK(std::find(names.begin(), names.end(), expected) != names.end());
  }
}

TEST_CASE("json files write and read back") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "ghznl_io_test";
  fs::create_directories(dir);
  fs::path file = dir / "set.json";

  Json j = state_set_to_json(fixtures::s5());
  write_json_file(file.string(), j);
  Json back = read_json_file(file.string());
  CHECK(back == j);
  CHECK(state_set_from_json(back) == fixtures::s5());

  CHECK_THROWS_AS(read_json_file((dir / "missing.json").string()), IoError);

  // a file with broken syntax reports a parse failure, not a crash
  fs::path broken = dir / "broken.json";
  {
    std::FILE* f = std::fopen(broken.string().c_str(), "w");
    REQUIRE(f != nullptr);
    std::fputs("{not json", f);
    std::fclose(f);
  }
  CHECK_THROWS_AS(read_json_file(broken.string()), IoError);

  fs::remove_all(dir);
}

TEST_CASE("report serializers produce the documented shapes") {
  Verdict v;
  v.kind = Verdict::Kind::certified;
  v.betas = {Rational(4, 5), Rational(4, 5), Rational(3, 5)};
  Json vj = verdict_to_json(v);
  CHECK(vj["verdict"] == "certified");
  CHECK(vj["betas"]["A|BC"] == "4/5");
  CHECK(vj["betas"]["C|AB"] == "3/5");
  CHECK_FALSE(vj.contains("distinguishable_cut"));

  Verdict d;
  d.kind = Verdict::Kind::distinguishable;
  d.betas = {Rational(1), Rational(1), Rational(1)};
  d.cut = Bipartition::b_ca;
  Json dj = verdict_to_json(d);
  CHECK(dj["verdict"] == "distinguishable");
  CHECK(dj["distinguishable_cut"] == "B|CA");

  // verification outcome embeds claimed and computed values
  Certificate cert = fixtures::s5_certificate(Bipartition::c_ab);
  VerifyOutcome out = verify_certificate(fixtures::s5(), cert);
  Json oj = verify_outcome_to_json(out, cert);
  CHECK(oj["cut"] == "C|AB");
  CHECK(oj["claimed_value"] == "3/5");
  CHECK(oj["computed_value"] == "3/5");
  CHECK(oj["feasible"] == true);
  CHECK(oj["matches_claim"] == true);

  // protocol result: attempts in cut order with nested transcripts
  ProtocolResult pr = lattice_protocol(fixtures::l16());
  Json pj = protocol_result_to_json(pr);
  CHECK(pj["distinguishing_cut"] == "B|CA");
  REQUIRE(pj["attempts"].size() == 2);
  CHECK(pj["attempts"][0]["cut"] == "A|BC");
  CHECK(pj["attempts"][0]["success"] == false);
  CHECK(pj["attempts"][1]["success"] == true);
  const Json& node = pj["attempts"][1]["transcript"];
  CHECK(node["kind"] == "parity");
  CHECK(node["level"] == 0);
  CHECK(node["states"].size() == 16);
  CHECK(node["children"].size() == 2);

  ProtocolResult failed = lattice_protocol(fixtures::ghz_basis());
  Json fj = protocol_result_to_json(failed);
  CHECK(fj["distinguishing_cut"].is_null());
  CHECK(fj["attempts"].size() == 3);

  // search report carries the subsets both as indices and as states
  SearchOptions opts;
  opts.strategy = SearchStrategy::greedy;
  SearchReport rep = search_min_subsets(fixtures::ghz_basis(), opts);
  Json sj = search_report_to_json(rep, fixtures::ghz_basis());
  CHECK(sj["strategy"] == "greedy");
  CHECK(sj["complete"] == true);
  REQUIRE(sj["found"].size() == 1);
  CHECK(sj["found"][0]["indices"] == Json::array({3, 4, 5, 6, 7}));
  CHECK(sj["found"][0]["states"] ==
        Json::array({Json::array({3}), Json::array({4}), Json::array({5}), Json::array({6}),
                     Json::array({7})}));
  CHECK(sj["found"][0]["betas"].is_object());
  CHECK_FALSE(sj.contains("cursor"));

  SearchOptions dry;
  dry.budget = 0;
  SearchReport stopped = search_min_subsets(fixtures::ghz_basis(), dry);
  Json stj = search_report_to_json(stopped, fixtures::ghz_basis());
  CHECK(stj["complete"] == false);
  CHECK(stj["cursor"]["size"] == 1);
  CHECK(stj["cursor"]["rank"] == 0);
}
