#ifndef BICM_CONSTRUCTIONS_HPP
#define BICM_CONSTRUCTIONS_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "bicm/complex.hpp"

namespace bicm {

struct Cell {
  int row = 0;  // 1..p
  int col = 0;  // 1..q
  bool operator==(const Cell&) const = default;
  auto operator<=>(const Cell&) const = default;
};

// A p x q grid with a partition of its cells into blocks, each block lying
// inside one normal diagonal D_k = {(i,j) : i+j = k+1}, k = 1..p+q-1.
struct PathMatrixSpec {
  int p = 0;
  int q = 0;
  std::vector<std::vector<Cell>> blocks;  // disjoint, covering, per-diagonal

  static PathMatrixSpec trivial(int p, int q);
  // Builds the spec from merge groups (cells to be identified); unmentioned
  // cells become singleton blocks. Validates the diagonal condition.
  static PathMatrixSpec from_merges(int p, int q,
                                    const std::vector<std::vector<Cell>>& merges);
  void validate() const;
  int block_count() const { return (int)blocks.size(); }
};

// Graph of a nondecreasing function: vertical [p] -> [q], horizontal
// [q] -> [p].
struct LatticePath {
  enum class Kind { vertical, horizontal };
  Kind kind = Kind::vertical;
  std::vector<int> values;

  std::vector<Cell> cells() const;
  bool valid(int p, int q) const;
};

// (c-1)-skeleton of the simplex on [s]: facets are all c-subsets.
SimplicialComplex skeleton_complex(int s, int c);

SimplicialComplex iterated_cone(const SimplicialComplex& dl, int m);

// One attachment glues a fresh vertex onto a (d-2)-face of an existing
// facet: (facet index, index of the dropped vertex within that facet).
struct TreeAttachment {
  int facet_index = 0;
  int drop_index = 0;
};
SimplicialComplex d_tree(int d, const std::vector<TreeAttachment>& attach);
// One attachment applied to an existing tree (fresh vertex n+1).
SimplicialComplex d_tree_extend(const SimplicialComplex& dl, int facet_index,
                                int drop_index);
SimplicialComplex d_tree_random(int d, int attachments, std::uint64_t seed);

// The 6-vertex triangulation of the real projective plane.
SimplicialComplex rp2_six();

// All nondecreasing paths of the given kind in a p x q grid, in
// lexicographic order on their value tuples.
std::vector<LatticePath> all_paths(int p, int q, LatticePath::Kind kind);

// Row-major flattening of [p] x [q] onto [pq].
int cell_vertex(const Cell& cell, int q);

// X: facets are complements of horizontal paths; Y of vertical paths.
// X and Y are Alexander dual.
std::pair<SimplicialComplex, SimplicialComplex> path_complexes(int p, int q);

// Constructive dichotomy: either a horizontal path inside F or a vertical
// path inside the complement.
struct DichotomyResult {
  bool horizontal_in_f = false;
  LatticePath path;
};
DichotomyResult path_dichotomy(const std::vector<Cell>& f, int p, int q);

// Facet order induced by the lexicographic order on defining paths.
std::vector<int> lex_shelling_order(int p, int q, bool which_x);

// The complex on the block labels whose minimal nonfaces are the images of
// vertical paths.
SimplicialComplex identify_diagonals(const PathMatrixSpec& spec);

struct NonConeCertificate {
  PathMatrixSpec spec;
  SimplicialComplex complex = SimplicialComplex::empty_simplex(0);
  std::vector<int> characteristics_checked;
};

// Searches diagonal identifications of the (c+1) x (s-c) grid for a bi-CM
// non-cone complex with invariants (n, c, s). Throws std::runtime_error on
// search exhaustion.
NonConeCertificate biCM_noncone(int n, int c, int s);

}  // namespace bicm

#endif  // BICM_CONSTRUCTIONS_HPP
