#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "bicm/constructions.hpp"
#include "bicm/facevec.hpp"
#include "bicm/homology.hpp"

using namespace bicm;

namespace {

SimplicialComplex make(int n, std::initializer_list<std::initializer_list<int>> fs) {
  std::vector<VertexSet> facets;
  for (auto f : fs) facets.push_back(VertexSet(f));
  return SimplicialComplex::from_facets(n, facets);
}

const std::vector<FieldSpec> kFields = {FieldSpec::rationals(),
                                        FieldSpec::prime(2),
                                        FieldSpec::prime(3),
                                        FieldSpec::prime(5)};

}  // namespace

TEST_CASE("field spec") {
  CHECK(FieldSpec::rationals().characteristic == 0);
  CHECK(FieldSpec::prime(7).characteristic == 7);
  CHECK_THROWS_AS(FieldSpec::prime(6), std::invalid_argument);
  CHECK_THROWS_AS(FieldSpec::prime(1), std::invalid_argument);
}

TEST_CASE("matrix ranks") {
  std::vector<std::vector<long long>> m = {{2, 4}, {1, 2}};
  CHECK(rank_exact(m) == 1);
  CHECK(rank_mod_p(m, 2) == 1);
  std::vector<std::vector<long long>> id3 = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  CHECK(rank_exact(id3) == 3);
  // Rank can drop mod p.
  std::vector<std::vector<long long>> m3 = {{1, 1}, {1, -2}};
  CHECK(rank_exact(m3) == 2);
  CHECK(rank_mod_p(m3, 3) == 1);
  // Determinant-growth stress: exact elimination must not overflow.
  int n = 12;
  std::vector<std::vector<long long>> big(n, std::vector<long long>(n));
  std::mt19937_64 rng(33);
  for (auto& row : big)
    for (auto& x : row) x = (long long)(rng() % 2001) - 1000;
  long r = rank_exact(big);
  CHECK(r >= 11);  // random matrices are almost surely full rank
  CHECK(r <= 12);
}

TEST_CASE("reduced homology of small spaces") {
  auto circle = make(3, {{1, 2}, {1, 3}, {2, 3}});
  for (auto k : kFields) {
    auto h = reduced_homology(circle, k);
    CHECK(h.betti_at(0) == 0);
    CHECK(h.betti_at(1) == 1);
  }
  auto point = make(1, {{1}});
  for (auto k : kFields) {
    auto h = reduced_homology(point, k);
    CHECK(h.betti_at(-1) == 0);
    CHECK(h.betti_at(0) == 0);
  }
  auto empty = SimplicialComplex::empty_simplex(2);
  for (auto k : kFields) CHECK(reduced_homology(empty, k).betti_at(-1) == 1);
  auto two_points = make(2, {{1}, {2}});
  for (auto k : kFields) CHECK(reduced_homology(two_points, k).betti_at(0) == 1);
  auto sphere = make(4, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}});
  for (auto k : kFields) {
    auto h = reduced_homology(sphere, k);
    CHECK(h.betti_at(1) == 0);
    CHECK(h.betti_at(2) == 1);
  }
}

TEST_CASE("rp2 homology is characteristic sensitive") {
  auto rp2 = rp2_six();
  auto h2 = reduced_homology(rp2, FieldSpec::prime(2));
  CHECK(h2.betti_at(0) == 0);
  CHECK(h2.betti_at(1) == 1);
  CHECK(h2.betti_at(2) == 1);
  auto h0 = reduced_homology(rp2, FieldSpec::rationals());
  CHECK(h0.betti_at(0) == 0);
  CHECK(h0.betti_at(1) == 0);
  CHECK(h0.betti_at(2) == 0);
  auto h3 = reduced_homology(rp2, FieldSpec::prime(3));
  CHECK(h3.betti_at(1) == 0);
  CHECK(h3.betti_at(2) == 0);
}

TEST_CASE("euler consistency on random complexes") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + (int)(rng() % 6);
    int count = 1 + (int)(rng() % 5);
    std::vector<VertexSet> facets;
    for (int i = 0; i < count; ++i)
      facets.push_back(VertexSet(rng() & ((std::uint64_t(1) << n) - 1)));
    auto dl = SimplicialComplex::from_facets(n, facets);
    auto fc = face_counts(dl);
    long long chi = 0;  // reduced: sum over cardinalities of (-1)^{card-1} f
    for (size_t card = 0; card < fc.size(); ++card)
      chi += (card % 2 == 0 ? -1 : 1) * fc[card];
    for (auto k : kFields) CHECK(reduced_homology(dl, k).reduced_euler() == chi);
  }
}

TEST_CASE("mod-p and rational betti agree away from bad primes") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 3 + (int)(rng() % 4);
    int count = 2 + (int)(rng() % 4);
    std::vector<VertexSet> facets;
    for (int i = 0; i < count; ++i)
      facets.push_back(VertexSet(rng() & ((std::uint64_t(1) << n) - 1)));
    auto dl = SimplicialComplex::from_facets(n, facets);
    auto q = reduced_homology(dl, FieldSpec::rationals());
    // Universal coefficients: rational betti <= mod-p betti.
    for (auto p : {2, 3, 5}) {
      auto hp = reduced_homology(dl, FieldSpec::prime(p));
      for (int i = -1; i <= dl.d(); ++i)
        CHECK(q.betti_at(i) <= hp.betti_at(i));
    }
  }
}

TEST_CASE("is_CM verdicts and witnesses") {
  for (auto k : kFields) {
    CHECK(is_CM(skeleton_complex(4, 2), k).verdict);
    CHECK(is_CM(SimplicialComplex::full_simplex(3), k).verdict);
    auto two_edges = make(4, {{1, 2}, {3, 4}});
    auto w = is_CM(two_edges, k);
    CHECK(!w.verdict);
    REQUIRE(w.failing_face.has_value());
    CHECK(*w.failing_face == VertexSet{});
    CHECK(*w.failing_dimension == 0);
  }
  CHECK(is_CM(rp2_six(), FieldSpec::rationals()).verdict);
  auto w2 = is_CM(rp2_six(), FieldSpec::prime(2));
  CHECK(!w2.verdict);
  CHECK(*w2.failing_face == VertexSet{});
  CHECK(*w2.failing_dimension == 1);
  // Non-pure complexes fail Reisner.
  auto nonpure = make(4, {{1, 2, 3}, {3, 4}});
  CHECK(!is_CM(nonpure, FieldSpec::rationals()).verdict);
}

TEST_CASE("is_biCM") {
  for (auto k : kFields) {
    for (int s = 2; s <= 5; ++s)
      for (int c = 1; c < s; ++c) CHECK(is_biCM(skeleton_complex(s, c), k));
    auto c4 = make(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
    CHECK(!is_biCM(c4, k));
  }
  CHECK(is_biCM(rp2_six(), FieldSpec::rationals()));
  CHECK(is_biCM(rp2_six(), FieldSpec::prime(3)));
  CHECK(is_biCM(rp2_six(), FieldSpec::prime(5)));
  CHECK(!is_biCM(rp2_six(), FieldSpec::prime(2)));
  // Duality symmetry.
  std::vector<SimplicialComplex> corpus = {
      rp2_six(), skeleton_complex(5, 2), make(4, {{1, 2}, {2, 3}, {3, 4}}),
      make(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}})};
  for (const auto& dl : corpus)
    for (auto k : kFields)
      CHECK(is_biCM(dl, k) == is_biCM(alexander_dual(dl), k));
}

TEST_CASE("CM implies nonnegative h-vector") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 3 + (int)(rng() % 4);
    int count = 1 + (int)(rng() % 5);
    std::vector<VertexSet> facets;
    for (int i = 0; i < count; ++i)
      facets.push_back(VertexSet(rng() & ((std::uint64_t(1) << n) - 1)));
    auto dl = SimplicialComplex::from_facets(n, facets);
    if (!is_CM(dl, FieldSpec::rationals()).verdict) continue;
    for (long long hi : h_vector(f_polynomial(dl)).entries) CHECK(hi >= 0);
  }
}

TEST_CASE("is_shelling") {
  auto circle = make(3, {{1, 2}, {1, 3}, {2, 3}});
  CHECK(is_shelling(circle, {0, 1, 2}));
  CHECK(is_shelling(circle, {2, 0, 1}));
  std::vector<int> identity(10);
  std::iota(identity.begin(), identity.end(), 0);
  CHECK(!is_shelling(rp2_six(), identity));
  auto nonpure = make(4, {{1, 2, 3}, {3, 4}});
  CHECK_THROWS_AS(is_shelling(nonpure, {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(is_shelling(circle, {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(is_shelling(circle, {0, 1, 1}), std::invalid_argument);
  // Disconnected graphs are never shellable in dim 1.
  auto two_edges = make(4, {{1, 2}, {3, 4}});
  CHECK(!is_shelling(two_edges, {0, 1}));
  CHECK(!is_shelling(two_edges, {1, 0}));
}

TEST_CASE("find_shelling") {
  auto order = find_shelling(skeleton_complex(4, 2));
  REQUIRE(order.has_value());
  CHECK(is_shelling(skeleton_complex(4, 2), *order));
  CHECK(!find_shelling(rp2_six()).has_value());
  auto [x33, y33] = path_complexes(3, 3);
  auto oy = find_shelling(y33);
  REQUIRE(oy.has_value());
  CHECK(is_shelling(y33, *oy));
  // Points are shellable with the t=1 convention.
  auto pts = skeleton_complex(3, 1);
  REQUIRE(find_shelling(pts).has_value());
  // Guard.
  int saved = guards::shelling_facets;
  guards::shelling_facets = 2;
  CHECK_THROWS_AS(find_shelling(rp2_six()), guard_error);
  guards::shelling_facets = saved;
  // Shellable certified implies CM everywhere.
  std::vector<SimplicialComplex> corpus = {
      skeleton_complex(4, 2), x33, y33,
      make(3, {{1, 2}, {1, 3}, {2, 3}})};
  for (const auto& dl : corpus) {
    auto o = find_shelling(dl);
    if (!o) continue;
    for (auto k : kFields) CHECK(is_CM(dl, k).verdict);
  }
}

TEST_CASE("homology guard") {
  int saved = guards::face_count;
  guards::face_count = 4;
  auto fresh = make(5, {{1, 2, 3}, {2, 3, 4}, {3, 4, 5}, {1, 4, 5}});
  CHECK_THROWS_AS(reduced_homology(fresh, FieldSpec::rationals()), guard_error);
  guards::face_count = saved;
}
