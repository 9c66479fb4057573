#ifndef BICM_HOMOLOGY_HPP
#define BICM_HOMOLOGY_HPP

#include <map>
#include <optional>
#include <vector>

#include "bicm/complex.hpp"

namespace bicm {

// Coefficient field: the rationals (characteristic 0) or F_p, p prime.
struct FieldSpec {
  int characteristic = 0;
  static FieldSpec rationals() { return FieldSpec{0}; }
  static FieldSpec prime(int p);
  bool operator==(const FieldSpec&) const = default;
};

// Reduced Betti numbers, indexed -1 .. dim.
struct HomologyReport {
  std::map<int, long long> betti;
  long long betti_at(int i) const {
    auto it = betti.find(i);
    return it == betti.end() ? 0 : it->second;
  }
  long long reduced_euler() const;  // sum (-1)^i betti_i
};

struct CMWitness {
  bool verdict = false;
  std::optional<VertexSet> failing_face;
  std::optional<int> failing_dimension;
};

// Reduced simplicial homology over the given field. Characteristic 0 is
// certified with exact integer elimination; a large-prime pre-pass may
// short-circuit only when the chain condition pins the ranks.
HomologyReport reduced_homology(const SimplicialComplex& dl, FieldSpec k);

// Reisner criterion: every link has vanishing reduced homology strictly
// below its dimension. Returns the lexicographically first failure.
CMWitness is_CM(const SimplicialComplex& dl, FieldSpec k);

bool is_biCM(const SimplicialComplex& dl, FieldSpec k);

// Pure-shelling condition on the given facet order (indices into facets()).
bool is_shelling(const SimplicialComplex& dl, const std::vector<int>& order);

// Exhaustive backtracking search, deterministic in canonical facet order.
std::optional<std::vector<int>> find_shelling(const SimplicialComplex& dl);

// Rank of an integer matrix over F_p (p prime) or over Q (p = 0, exact).
long rank_mod_p(std::vector<std::vector<long long>> m, long long p);
long rank_exact(const std::vector<std::vector<long long>>& m);

}  // namespace bicm

#endif  // BICM_HOMOLOGY_HPP
