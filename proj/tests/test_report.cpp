#include "doctest.h"
#include "preproj/errors.hpp"
#include "preproj/report.hpp"

using namespace preproj;

TEST_CASE("element records round-trip through JSON text") {
  const auto group = enumerate(build_dynkin(Family::A, 3, Labeling::Linear));
  for (std::size_t w = 0; w < group.order(); ++w) {
    const auto rec = element_record(group, w);
    const auto back = element_from_json(Json::parse(to_json(rec).dump()));
    CHECK(back == rec);
    std::vector<std::int64_t> flat;
    for (const auto& col : back.matrix) flat.insert(flat.end(), col.begin(), col.end());
    const auto g = GMatrix::from_columns(group.rank(), flat);
    CHECK(group.find(g) == w);
    CHECK(g_of_word(group.graph(), back.word) == g);
  }
}

TEST_CASE("malformed element JSON is a validation error") {
  CHECK_THROWS_AS(element_from_json(Json::parse(R"({"word": [1], "length": 1})")), ValidationError);
  CHECK_THROWS_AS(element_from_json(Json::parse(R"({"word": [1], "length": 2, "matrix": [[-1]]})")),
                  ValidationError);
  CHECK_THROWS_AS(element_from_json(Json::parse(R"({"word": [1], "length": 1, "matrix": [[1, 0]]})")),
                  ValidationError);
  CHECK_THROWS_AS(element_from_json(Json::parse(R"({"word": "s1", "length": 1, "matrix": [[-1]]})")),
                  ValidationError);
}

TEST_CASE("config validation") {
  CHECK(parse_format("dot") == Format::Dot);
  CHECK_THROWS_AS(parse_format("xml"), ValidationError);
  Config c;
  c.family = Family::A;
  c.rank = 3;
  CHECK_NOTHROW(c.validate());
  c.cap = 0;
  CHECK_THROWS_AS(c.validate(), ValidationError);
  c.cap = 10;
  c.family = Family::D;
  CHECK_THROWS_AS(c.validate(), ValidationError);
}

TEST_CASE("classify") {
  const auto a3 = enumerate(build_dynkin(Family::A, 3, Labeling::Linear));
  const auto r = classify(a3);
  CHECK(classify_text(r) == "2-silt: 24, 2-tilt: 8, folded: B2");
  const auto j = classify_json(r, a3);
  CHECK(j.at("two_silt") == 24);
  CHECK(j.at("two_tilt") == 8);
  CHECK(j.at("folded") == "B2");
  CHECK(j.at("labeling") == "linear");
  CHECK(j.at("graph").at("edges") == Json::parse("[[1, 2], [2, 3]]"));
  CHECK(j.at("graph").at("iota") == Json::parse("[3, 2, 1]"));
  CHECK(j.at("graph").at("family") == "A");
  REQUIRE(j.at("elements").size() == 24);
  int tilting = 0;
  for (const auto& e : j.at("elements")) {
    tilting += e.at("tilting").get<bool>();
    CHECK_NOTHROW(element_from_json(e));
  }
  CHECK(tilting == 8);
  CHECK(j.dump() == classify_json(classify(a3), a3).dump());

  CHECK(classify_text(classify(enumerate(build_dynkin(Family::A, 1)))) == "2-silt: 2, 2-tilt: 2, folded: B1");
  CHECK(classify_text(classify(enumerate(build_dynkin(Family::E, 6)))) ==
        "2-silt: 51840, 2-tilt: 1152, folded: F4");
}

TEST_CASE("hasse JSON") {
  const auto g = build_dynkin(Family::A, 3);
  const auto group = enumerate(g);
  const auto j = hasse_json(hasse(group));
  CHECK(j.at("nodes").size() == 24);
  CHECK(j.at("arrows").size() == 36);
  const TiltingAction action(group, fold(g));
  const auto t = hasse_json(hasse(action));
  CHECK(t.at("restricted_to_tilting") == true);
  CHECK(t.at("nodes").size() == 8);
  CHECK(t.at("arrows").size() == 8);
  CHECK(t.at("arrows")[0].at("label").get<std::string>()[0] == 't');
}

TEST_CASE("braid reports") {
  const auto g = build_dynkin(Family::A, 3);
  const auto group = enumerate(g);
  const FoldedWeylGroup fg(group, fold(g));
  const BraidGroup braid(fg);
  CHECK(braid_text(braid_report(braid, "1 -1"), group) == "Δ^0 · (empty)\nprojection: e\n");
  CHECK(braid_text(braid_report(braid, "1 1"), group) == "Δ^0 · [t1][t1]\nprojection: e\n");
  const auto j = braid_json(braid_report(braid, "-1"), braid);
  CHECK(j.at("normal_form").at("delta_power") == -1);
  CHECK(j.at("rendered") == "Δ^-1 · [t2t1t2]");
  CHECK_THROWS_AS(braid_report(braid, "1 3"), ValidationError);

  // m(1, 2) = 3 in D4.
  const auto d = build_dynkin(Family::D, 4);
  const auto dg = enumerate(d);
  const auto dfold = fold(d);
  REQUIRE(dfold.m(1, 2) == 3);
  const FoldedWeylGroup dfg(dg, dfold);
  const BraidGroup db(dfg);
  CHECK(braid_text(braid_report(db, "1 2 1"), dg) == braid_text(braid_report(db, "2 1 2"), dg));
}

TEST_CASE("oracle report JSON") {
  const auto g = build_dynkin(Family::A, 2);
  const auto alg = oracle::build_algebra(g);
  const auto group = enumerate(g);
  const auto r = oracle::verify(alg, group, true);
  const auto j = oracle_json(r);
  CHECK(j.at("records").size() == 6);
  CHECK(j.at("summary").at("nu_stable") == 2);
  CHECK(j.at("summary").at("reduced_word_failures") == 0);
  CHECK(j.at("summary").at("pass") == true);
  int with_end = 0;
  for (const auto& rec : j.at("records")) {
    CHECK(rec.contains("word"));
    if (!rec.at("end_dim").is_null()) {
      ++with_end;
      CHECK(rec.at("end_dim") == 4);
    }
  }
  CHECK(with_end == 2);
  CHECK(oracle_json(oracle::verify(alg, group, true)).dump() == j.dump());
  CHECK(oracle_json(oracle::verify(alg, group)).at("summary").at("reduced_word_failures").is_null());
}
