#ifndef BICM_BETTI_HPP
#define BICM_BETTI_HPP

#include <map>

#include "bicm/complex.hpp"
#include "bicm/homology.hpp"

namespace bicm {

// Graded Betti numbers of the Stanley-Reisner ring k[dl].
struct BettiTable {
  std::map<std::pair<int, int>, long long> entries;  // (i, j) -> beta_{i,j}
  FieldSpec field;
  long long at(int i, int j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
  }
  int max_i() const;
  int max_j() const;
};

// Hochster's formula: beta_{i,j} = sum over |W| = j of
// dim H~_{j-i-1}(restriction to W). Guard: n <= 16.
BettiTable hochster_betti(const SimplicialComplex& dl, FieldSpec k);

// (c+1)-linear resolution of the Stanley-Reisner ideal: all minimal
// nonfaces have cardinality c+1 and beta_{i,j}(k[dl]) = 0 for i >= 1,
// j != i + c.
bool has_linear_resolution(const SimplicialComplex& dl, FieldSpec k);

// Consistency oracle: linear resolution of I_dl <=> the dual is CM.
bool eagon_reiner_check(const SimplicialComplex& dl, FieldSpec k);

}  // namespace bicm

#endif  // BICM_BETTI_HPP
