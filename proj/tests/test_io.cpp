#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <random>

#include "bicm/constructions.hpp"
#include "bicm/facevec.hpp"
#include "bicm/io.hpp"

using namespace bicm;
using nlohmann::json;

TEST_CASE("parse_complex_file") {
  auto dl = parse_complex_file("# a comment\nn 4\n1 2\n2 3\n");
  CHECK(dl.n() == 4);
  CHECK(dl.facets() == std::vector<VertexSet>{VertexSet{1, 2}, VertexSet{2, 3}});
  auto empty = parse_complex_file("n 3\nempty\n");
  CHECK(empty == SimplicialComplex::empty_simplex(3));
  CHECK_THROWS_AS(parse_complex_file(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_complex_file("n 3\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_complex_file("n x\n1\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_complex_file("n 3\n1 4\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_complex_file("1 2\n"), std::invalid_argument);
  // Line numbers in messages.
  try {
    parse_complex_file("n 3\n1 2\n1 9\n");
    CHECK(false);
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("serialize round trip") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 1 + (int)(rng() % 8);
    int count = 1 + (int)(rng() % 5);
    std::vector<VertexSet> facets;
    for (int i = 0; i < count; ++i)
      facets.push_back(VertexSet(rng() & ((std::uint64_t(1) << n) - 1)));
    auto dl = SimplicialComplex::from_facets(n, facets);
    std::string text = serialize_complex_file(dl);
    CHECK(parse_complex_file(text) == dl);
    CHECK(serialize_complex_file(parse_complex_file(text)) == text);
    CHECK(text.back() == '\n');
  }
  CHECK(serialize_complex_file(SimplicialComplex::empty_simplex(2)) ==
        "n 2\nempty\n");
}

TEST_CASE("analyze_json document") {
  auto doc = json::parse(analyze_json(rp2_six(), {0, 2}, 6));
  CHECK(doc["schema"] == "bicm-report/1");
  CHECK(doc["n"] == 6);
  CHECK(doc["d"] == 3);
  CHECK(doc["c"] == 2);
  CHECK(doc["f"] == json::array({1, 6, 15, 10}));
  CHECK(doc["h"] == json::array({1, 3, 6, 0}));
  CHECK(doc["type"] == json::array({6, 2, 5}));
  CHECK(doc["cone_apexes"] == json::array());
  CHECK(doc["facet_count"] == 10);
  CHECK(doc["dual_facet_count"] == 10);
  CHECK(doc["characteristics"]["0"]["cm"] == true);
  CHECK(doc["characteristics"]["0"]["bicm"] == true);
  CHECK(doc["characteristics"]["2"]["cm"] == false);
  CHECK(doc["characteristics"]["2"]["dual_cm"] == false);
  CHECK(doc["characteristics"]["2"]["bicm"] == false);
  CHECK(doc["grothendieck"][0] ==
        json::object({{"h_star", 0}, {"ambient_dim", 5}}));
  // Hilbert prefix matches the module computation.
  auto ser = hilbert_series_S(f_polynomial(rp2_six()), 6, 2, 6);
  for (int k = 0; k <= 6; ++k)
    CHECK(doc["hilbert_prefix"][k] == ser.coeffs[k]);
  // Full simplex: dual fields are null.
  auto full = json::parse(analyze_json(SimplicialComplex::full_simplex(3),
                                       {0}, 4));
  CHECK(full["dual_facet_count"].is_null());
}

TEST_CASE("betti_json") {
  auto table = hochster_betti(rp2_six(), FieldSpec::prime(2));
  auto doc = json::parse(betti_json(table));
  CHECK(doc["schema"] == "bicm-report/1");
  CHECK(doc["characteristic"] == 2);
  bool found00 = false;
  for (auto& e : doc["entries"])
    if (e["i"] == 0 && e["j"] == 0) {
      found00 = true;
      CHECK(e["beta"] == 1);
    }
  CHECK(found00);
}

TEST_CASE("hilbert_json") {
  auto doc = json::parse(hilbert_json(skeleton_complex(3, 1), 4));
  CHECK(doc["schema"] == "bicm-report/1");
  CHECK(doc["coefficients"] == json::array({0, 0, 3, 8, 15}));
}

TEST_CASE("search_report_json") {
  SearchReport r;
  r.n = 4;
  r.c = 1;
  r.s = 3;
  r.examined = 7;
  r.bicm_found = 3;
  r.cones = 2;
  r.noncones = 1;
  r.exhaustive = true;
  r.exemplars.push_back(path_complexes(2, 2).first);
  auto doc = json::parse(search_report_json(r));
  CHECK(doc["schema"] == "bicm-report/1");
  CHECK(doc["examined"] == 7);
  CHECK(doc["bicm_found"] == 3);
  CHECK(doc["cones"] == 2);
  CHECK(doc["noncones"] == 1);
  CHECK(doc["exhaustive"] == true);
  REQUIRE(doc["exemplars"].size() == 1);
  CHECK(parse_complex_file(doc["exemplars"][0].get<std::string>()) ==
        r.exemplars[0]);
}
