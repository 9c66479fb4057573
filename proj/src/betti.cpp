#include "bicm/betti.hpp"

#include <algorithm>

namespace bicm {

int BettiTable::max_i() const {
  int m = 0;
  for (auto& [ij, v] : entries) m = std::max(m, ij.first);
  return m;
}

int BettiTable::max_j() const {
  int m = 0;
  for (auto& [ij, v] : entries) m = std::max(m, ij.second);
  return m;
}

BettiTable hochster_betti(const SimplicialComplex& dl, FieldSpec k) {
  if (dl.n() > 16) throw guard_error("hochster guard exceeded (n > 16)");
  BettiTable table;
  table.field = k;
  table.entries[{0, 0}] = 1;
  for (std::uint64_t w = 1; w < (std::uint64_t(1) << dl.n()); ++w) {
    VertexSet ws(w);
    int j = ws.size();
    SimplicialComplex restr = restriction(dl, ws);
    HomologyReport rep = reduced_homology(restr, k);
    for (auto [r, b] : rep.betti) {
      int i = j - r - 1;
      if (i >= 1 && b > 0) table.entries[{i, j}] += b;
    }
  }
  return table;
}

bool has_linear_resolution(const SimplicialComplex& dl, FieldSpec k) {
  if (dl.is_full_simplex())
    throw std::invalid_argument("linear-resolution test on the full simplex");
  int c = frame_invariant_c(dl);
  for (VertexSet nf : minimal_nonfaces(dl))
    if (nf.size() != c + 1) return false;
  BettiTable table = hochster_betti(dl, k);
  for (auto& [ij, v] : table.entries) {
    auto [i, j] = ij;
    if (i >= 1 && j != i + c && v != 0) return false;
  }
  return true;
}

bool eagon_reiner_check(const SimplicialComplex& dl, FieldSpec k) {
  bool linear = has_linear_resolution(dl, k);
  bool dual_cm = is_CM(alexander_dual(dl), k).verdict;
  return linear == dual_cm;
}

}  // namespace bicm
