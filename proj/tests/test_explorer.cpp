#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bicm/constructions.hpp"
#include "bicm/explorer.hpp"
#include "bicm/facevec.hpp"
#include "bicm/homology.hpp"
#include "bicm/betti.hpp"

using namespace bicm;

TEST_CASE("enumerate_type rediscovers rp2") {
  SearchLimits limits;
  limits.max_exemplars = 10000;  // keep every non-cone class
  auto report = enumerate_type(6, 2, 5, limits);
  CHECK(report.exhaustive);
  CHECK(report.bicm_found == report.cones + report.noncones);
  CHECK(report.noncones >= 1);
  bool found_rp2 = false;
  for (const auto& ex : report.exemplars)
    if (is_isomorphic(ex, rp2_six())) found_rp2 = true;
  CHECK(found_rp2);
}

TEST_CASE("enumerate_type c=1 boundary cases") {
  auto r413 = enumerate_type(4, 1, 3, SearchLimits{});
  CHECK(r413.exhaustive);
  CHECK(r413.noncones >= 1);  // the path on 4 vertices
  bool found_path = false;
  for (const auto& ex : r413.exemplars)
    if (is_isomorphic(ex, path_complexes(2, 2).first)) found_path = true;
  CHECK(found_path);

  auto r613 = enumerate_type(6, 1, 3, SearchLimits{});
  CHECK(r613.exhaustive);
  CHECK(r613.noncones == 0);  // n - s = 3 > s - 2 = 1
  CHECK(r613.bicm_found == r613.cones);
}

TEST_CASE("exemplars recertify") {
  auto report = enumerate_type(5, 2, 4, SearchLimits{});
  for (const auto& ex : report.exemplars) {
    CHECK(cone_apexes(ex).empty());
    for (int ch : {0, 2, 3, 5}) {
      FieldSpec k = ch ? FieldSpec::prime(ch) : FieldSpec::rationals();
      CHECK(is_biCM(ex, k));
      CHECK(eagon_reiner_check(ex, k));
    }
    // Standing h-vector facts for certified bi-CM complexes.
    auto h = h_vector(f_polynomial(ex)).entries;
    for (long long hi : h) CHECK(hi >= 0);
    auto type = type_of(f_polynomial(ex), ex.n());
    REQUIRE(type.has_value());
    for (size_t i = std::get<1>(*type) + 1; i < h.size(); ++i)
      CHECK(h[i] == 0);
  }
}

TEST_CASE("enumeration guard and sampling mode") {
  CHECK_THROWS_AS(enumerate_type(8, 1, 3, SearchLimits{}), guard_error);
  SearchLimits limits;
  limits.max_samples = 50;
  limits.seed = 11;
  auto r = enumerate_type(8, 1, 3, limits);
  CHECK(!r.exhaustive);
  CHECK(r.seed == 11);
  CHECK(r.examined <= 50);
  // Reproducible under the same seed.
  auto r2 = enumerate_type(8, 1, 3, limits);
  CHECK(r2.examined == r.examined);
  CHECK(r2.bicm_found == r.bicm_found);
  CHECK(r2.noncones == r.noncones);
}

TEST_CASE("verify_c1_bound") {
  auto r4 = verify_c1_bound(4);
  CHECK(r4.holds);
  auto r5 = verify_c1_bound(5);
  CHECK(r5.holds);
  CHECK(!r5.counterexample.has_value());
  auto r2 = verify_c1_bound(2);  // single-simplex territory
  CHECK(r2.holds);
  CHECK_THROWS_AS(verify_c1_bound(60), guard_error);
}

TEST_CASE("cone_bound_audit") {
  std::vector<SimplicialComplex> corpus = {
      rp2_six(),
      skeleton_complex(4, 2),
      skeleton_complex(3, 1),
      path_complexes(2, 2).first,
      path_complexes(3, 2).first,
      iterated_cone(skeleton_complex(3, 1), 30),  // n = 33 > 24 = bound
      iterated_cone(skeleton_complex(4, 2), 3),
  };
  auto report = cone_bound_audit(corpus);
  CHECK(report.checked == (long long)corpus.size());
  CHECK(report.violations.empty());
  CHECK(report.bound_binding >= 1);  // the n = 33 iterated cone
  // X(2,2): n = 4 <= 24, bound not binding.
  auto x_only = cone_bound_audit({path_complexes(2, 2).first});
  CHECK(x_only.bound_binding == 0);
  CHECK(x_only.violations.empty());
}
