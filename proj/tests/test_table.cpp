#include <fstream>

#include "doctest.h"
#include "legch/constructions.hpp"
#include "legch/table.hpp"

using namespace legch;

TEST_CASE("polynomial text") {
  CHECK(format_poly(parse_poly("t^-1 + 4 + 2t")) == "t^-1 + 4 + 2t");
  CHECK(format_poly(parse_poly("2t+4+t^(-1)")) == "t^-1 + 4 + 2t");
  CHECK(format_poly(parse_poly("3*t^2 - t")) == "-t + 3t^2");
  CHECK(format_poly(parse_poly("2 t")) == "2t");
  CHECK(format_poly(LaurentPoly{}) == "0");
  CHECK(parse_poly("t - t").is_zero());
  for (const char* bad : {"", "t^", "2 +", "x", "t^1.5", "++t"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_poly(bad), Error);
  }
}

TEST_CASE("Laurent polynomial arithmetic") {
  const LaurentPoly p = parse_poly("t^-1 + 4 + 2t");
  CHECK(p.at_minus_one() == 1);
  CHECK(p.inverted() == parse_poly("t + 4 + 2t^-1"));
  CHECK(p.min_exponent() == -1);
  CHECK(p.max_exponent() == 1);
  CHECK((p - p).is_zero());
  CHECK(2 * p == p + p);
  CHECK(LaurentPoly{} < parse_poly("1"));
  CHECK(parse_poly("5") < parse_poly("t"));
  CHECK(parse_poly("2+t") < parse_poly("3+2t"));
}

TEST_CASE("JSON polynomials round trip") {
  const LaurentPoly p = parse_poly("t^-1 + 4 + 2t");
  CHECK(poly_to_json(p).dump() == R"({"-1":1,"0":4,"1":2})");
  for (const KnotRecord& rec : builtin_records())
    for (const LaurentPoly& q : rec.expected_reduced) CHECK(poly_from_json(poly_to_json(q)) == q);
  const Json report = report_json(k2());
  for (const auto& entry : report["polynomials"]) {
    const LaurentPoly big = poly_from_json(entry["poly"]);
    const LaurentPoly small = poly_from_json(entry["reduced"]);
    CHECK(reduce(big) == small);
    CHECK(poly_from_json(Json::parse(entry.dump())["reduced"]) == small);
  }
  CHECK_THROWS_AS(poly_from_json(Json::array()), Error);
  CHECK_THROWS_AS(poly_from_json(Json{{"x", 1}}), Error);
  CHECK_THROWS_AS(poly_from_json(Json{{"1", "2"}}), Error);
}

TEST_CASE("reports") {
  const Json k = report_json(k1());
  CHECK(k["schema"] == 1);
  CHECK(k["ch"] == 1);
  CHECK(k["augmentations"] == 5);
  CHECK(k["differential"]["c4"].size() == 4);

  const Json lt = report_json(left_trefoil());
  CHECK(lt["tb"] == -6);
  CHECK(lt["r"] == 1);
  CHECK(lt["ch"] == 0);
  CHECK(lt["polynomials"] == Json::array());

  const std::string text = report(unknot(), ReportFormat::Text);
  CHECK(text.find("\np = 0\n") != std::string::npos);
  CHECK(report(k1(), ReportFormat::Json) == report(k1(), ReportFormat::Json));
}

TEST_CASE("built-in records") {
  for (const KnotRecord& rec : builtin_records()) {
    CAPTURE(rec.label);
    const RecordResult res = check_record(rec);
    CHECK(res.error.empty());
    CHECK(res.mismatches.empty());
    CHECK(res.passed);
  }
  KnotRecord wrong = builtin_records().front();
  wrong.expected_tb = 3;
  const RecordResult bad = check_record(wrong);
  CHECK_FALSE(bad.passed);
  CHECK(bad.mismatches.size() == 1);
}

TEST_CASE("selftest is deterministic") {
  SelftestOptions opt;
  opt.random_fronts = 20;
  const SelftestReport a = selftest(opt);
  const SelftestReport b = selftest(opt);
  CHECK(a.passed());
  CHECK(a.text() == b.text());
  CHECK(a.json() == b.json());
  CHECK(a.text().find("selftest: PASS") != std::string::npos);
}

TEST_CASE("fronts directory against the transcribed table") {
  std::ifstream in(LEGCH_DATA_DIR "/table_expected.json");
  REQUIRE(in);
  const Json expected = Json::parse(in);
  CHECK(expected["knots"].size() == 170);
  CHECK(expected["knots"]["8_1_mirror"]["unverified_transcription"] == true);
  const auto rows = check_fronts_directory(LEGCH_DATA_DIR "/fronts", expected);
  CHECK(rows.size() >= 7);
  for (const TableCheck& row : rows) {
    CAPTURE(row.name);
    CAPTURE(row.detail);
    CHECK(row.passed);
  }
  // Every transcribed polynomial evaluates to tb at t = -1 for r = 0.
  for (const auto& [name, row] : expected["knots"].items()) {
    CAPTURE(name);
    for (const auto& p : row["reduced"]) {
      const LaurentPoly red = parse_poly(p.get<std::string>());
      CHECK((parse_poly("t") + red + red.inverted()).at_minus_one() == row["tb"].get<int>());
      CHECK(row["r"] == 0);
    }
  }
}
