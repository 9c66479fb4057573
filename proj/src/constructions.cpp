#include "bicm/constructions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "bicm/betti.hpp"
#include "bicm/facevec.hpp"
#include "bicm/homology.hpp"

namespace bicm {

SimplicialComplex skeleton_complex(int s, int c) {
  if (c < 0 || c > s)
    throw std::invalid_argument("skeleton requires 0 <= c <= s");
  if (c == 0) return SimplicialComplex::empty_simplex(s);
  std::vector<VertexSet> facets;
  std::vector<int> idx(c);
  std::iota(idx.begin(), idx.end(), 1);
  while (true) {
    facets.push_back(VertexSet::from_members(idx));
    int i = c - 1;
    while (i >= 0 && idx[i] == s - c + i + 1) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < c; ++j) idx[j] = idx[j - 1] + 1;
  }
  return SimplicialComplex::from_facets(s, facets);
}

SimplicialComplex iterated_cone(const SimplicialComplex& dl, int m) {
  if (m < 0) throw std::invalid_argument("negative cone count");
  SimplicialComplex out = dl;
  for (int i = 0; i < m; ++i) out = cone(out);
  return out;
}

SimplicialComplex d_tree_extend(const SimplicialComplex& dl, int facet_index,
                                int drop_index) {
  const auto& facets = dl.facets();
  if (facet_index < 0 || facet_index >= (int)facets.size())
    throw std::invalid_argument("attachment facet index out of range");
  std::vector<int> mem = facets[facet_index].members();
  if (drop_index < 0 || drop_index >= (int)mem.size())
    throw std::invalid_argument("attachment face selector out of range");
  VertexSet fresh = facets[facet_index];
  fresh.remove(mem[drop_index]);
  fresh.add(dl.n() + 1);
  std::vector<VertexSet> all = facets;
  all.push_back(fresh);
  return SimplicialComplex::from_facets(dl.n() + 1, all);
}

SimplicialComplex d_tree(int d, const std::vector<TreeAttachment>& attach) {
  if (d < 1) throw std::invalid_argument("d_tree requires d >= 1");
  SimplicialComplex dl = SimplicialComplex::full_simplex(d);
  for (const TreeAttachment& a : attach)
    dl = d_tree_extend(dl, a.facet_index, a.drop_index);
  return dl;
}

SimplicialComplex d_tree_random(int d, int attachments, std::uint64_t seed) {
  if (d < 1) throw std::invalid_argument("d_tree requires d >= 1");
  std::mt19937_64 rng(seed);
  SimplicialComplex dl = SimplicialComplex::full_simplex(d);
  for (int step = 0; step < attachments; ++step) {
    int fi = (int)(rng() % dl.facets().size());
    int di = (int)(rng() % dl.facets()[fi].size());
    dl = d_tree_extend(dl, fi, di);
  }
  return dl;
}

SimplicialComplex rp2_six() {
  // Facet list validated against the f-vector, self-duality and the
  // characteristic-2 homology of the projective plane (see tests).
  std::vector<VertexSet> facets = {
      {1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6},
      {2, 3, 5}, {3, 4, 6}, {2, 4, 5}, {3, 5, 6}, {2, 4, 6}};
  return SimplicialComplex::from_facets(6, facets);
}

std::vector<Cell> LatticePath::cells() const {
  std::vector<Cell> out;
  for (size_t i = 0; i < values.size(); ++i) {
    if (kind == Kind::vertical)
      out.push_back(Cell{(int)i + 1, values[i]});
    else
      out.push_back(Cell{values[i], (int)i + 1});
  }
  return out;
}

bool LatticePath::valid(int p, int q) const {
  int len = (kind == Kind::vertical) ? p : q;
  int range = (kind == Kind::vertical) ? q : p;
  if ((int)values.size() != len) return false;
  for (size_t i = 0; i < values.size(); ++i) {
    if (values[i] < 1 || values[i] > range) return false;
    if (i > 0 && values[i] < values[i - 1]) return false;
  }
  return true;
}

std::vector<LatticePath> all_paths(int p, int q, LatticePath::Kind kind) {
  int len = (kind == LatticePath::Kind::vertical) ? p : q;
  int range = (kind == LatticePath::Kind::vertical) ? q : p;
  std::vector<LatticePath> out;
  std::vector<int> vals(len, 1);
  while (true) {
    out.push_back(LatticePath{kind, vals});
    int i = len - 1;
    while (i >= 0 && vals[i] == range) --i;
    if (i < 0) break;
    ++vals[i];
    for (int j = i + 1; j < len; ++j) vals[j] = vals[i];
  }
  return out;
}

int cell_vertex(const Cell& cell, int q) {
  return (cell.row - 1) * q + cell.col;
}

std::pair<SimplicialComplex, SimplicialComplex> path_complexes(int p, int q) {
  if (p < 1 || q < 1) throw std::invalid_argument("path grid needs p,q >= 1");
  if (p * q > 25) throw guard_error("path grid guard exceeded (pq > 25)");
  int n = p * q;
  auto complement_facets = [&](LatticePath::Kind kind) {
    std::vector<VertexSet> facets;
    for (const LatticePath& path : all_paths(p, q, kind)) {
      VertexSet s;
      for (const Cell& cell : path.cells()) s.add(cell_vertex(cell, q));
      facets.push_back(s.complement_in(n));
    }
    return facets;
  };
  SimplicialComplex x = SimplicialComplex::from_facets(
      n, complement_facets(LatticePath::Kind::horizontal));
  SimplicialComplex y = SimplicialComplex::from_facets(
      n, complement_facets(LatticePath::Kind::vertical));
  return {x, y};
}

namespace {

// Either a horizontal path inside f or a vertical path in the complement,
// on the prefix grid [1..p] x [1..q].
DichotomyResult dichotomy_rec(const std::set<Cell>& f, int p, int q) {
  // Greedy minimal partial horizontal path.
  std::vector<int> beta;
  int prev = 1;
  int stall_col = 0;
  for (int j = 1; j <= q; ++j) {
    int found = 0;
    for (int i = prev; i <= p; ++i)
      if (f.count(Cell{i, j})) {
        found = i;
        break;
      }
    if (!found) {
      stall_col = j;
      break;
    }
    beta.push_back(found);
    prev = found;
  }
  if ((int)beta.size() == q)
    return {true, LatticePath{LatticePath::Kind::horizontal, beta}};
  // Stalled: column stall_col is f-free at rows >= prev. Recurse on the
  // prefix block above-left, then complete downward through stall_col.
  int sub_rows = prev - 1;
  std::vector<int> alpha;
  if (sub_rows >= 1) {
    DichotomyResult sub = dichotomy_rec(f, sub_rows, stall_col - 1);
    if (sub.horizontal_in_f)
      throw std::logic_error("dichotomy: blocked prefix contained a path");
    alpha = sub.path.values;
  }
  for (int r = sub_rows + 1; r <= p; ++r) alpha.push_back(stall_col);
  return {false, LatticePath{LatticePath::Kind::vertical, alpha}};
}

}  // namespace

DichotomyResult path_dichotomy(const std::vector<Cell>& f, int p, int q) {
  std::set<Cell> fs;
  for (const Cell& cell : f) {
    if (cell.row < 1 || cell.row > p || cell.col < 1 || cell.col > q)
      throw std::invalid_argument("cell outside the grid");
    fs.insert(cell);
  }
  return dichotomy_rec(fs, p, q);
}

std::vector<int> lex_shelling_order(int p, int q, bool which_x) {
  auto [x, y] = path_complexes(p, q);
  const SimplicialComplex& dl = which_x ? x : y;
  auto kind =
      which_x ? LatticePath::Kind::horizontal : LatticePath::Kind::vertical;
  int n = p * q;
  std::vector<int> order;
  for (const LatticePath& path : all_paths(p, q, kind)) {
    VertexSet s;
    for (const Cell& cell : path.cells()) s.add(cell_vertex(cell, q));
    VertexSet facet = s.complement_in(n);
    auto it = std::find(dl.facets().begin(), dl.facets().end(), facet);
    order.push_back((int)(it - dl.facets().begin()));
  }
  return order;
}

PathMatrixSpec PathMatrixSpec::trivial(int p, int q) {
  PathMatrixSpec spec;
  spec.p = p;
  spec.q = q;
  for (int i = 1; i <= p; ++i)
    for (int j = 1; j <= q; ++j) spec.blocks.push_back({Cell{i, j}});
  spec.validate();
  return spec;
}

PathMatrixSpec PathMatrixSpec::from_merges(
    int p, int q, const std::vector<std::vector<Cell>>& merges) {
  PathMatrixSpec spec;
  spec.p = p;
  spec.q = q;
  std::set<Cell> used;
  for (const auto& group : merges) {
    if (group.empty()) throw std::invalid_argument("empty merge group");
    for (const Cell& cell : group)
      if (!used.insert(cell).second)
        throw std::invalid_argument("cell in two merge groups");
    std::vector<Cell> block = group;
    std::sort(block.begin(), block.end());
    spec.blocks.push_back(block);
  }
  for (int i = 1; i <= p; ++i)
    for (int j = 1; j <= q; ++j)
      if (!used.count(Cell{i, j})) spec.blocks.push_back({Cell{i, j}});
  spec.validate();
  return spec;
}

void PathMatrixSpec::validate() const {
  if (p < 1 || q < 1) throw std::invalid_argument("path grid needs p,q >= 1");
  std::set<Cell> seen;
  for (const auto& block : blocks) {
    if (block.empty()) throw std::invalid_argument("empty partition block");
    int diag = block[0].row + block[0].col;
    for (const Cell& cell : block) {
      if (cell.row < 1 || cell.row > p || cell.col < 1 || cell.col > q)
        throw std::invalid_argument("cell outside the grid");
      if (cell.row + cell.col != diag)
        throw std::invalid_argument("partition block straddles two diagonals");
      if (!seen.insert(cell).second)
        throw std::invalid_argument("cell in two partition blocks");
    }
  }
  if ((int)seen.size() != p * q)
    throw std::invalid_argument("partition does not cover the grid");
}

SimplicialComplex identify_diagonals(const PathMatrixSpec& spec) {
  spec.validate();
  // Blocks labeled 1..n by smallest cell in row-major order, so the trivial
  // partition reproduces the cell_vertex labeling of X exactly.
  std::vector<std::vector<Cell>> blocks = spec.blocks;
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end(),
            [](const std::vector<Cell>& a, const std::vector<Cell>& b) {
              return a[0] < b[0];
            });
  int n = (int)blocks.size();
  std::map<Cell, int> label;
  for (int bi = 0; bi < n; ++bi)
    for (const Cell& cell : blocks[bi]) label[cell] = bi + 1;
  // Images of vertical paths are squarefree: a vertical path cannot meet a
  // diagonal twice (row strictly increases, column never decreases).
  std::set<std::uint64_t> generators;
  for (const LatticePath& path :
       all_paths(spec.p, spec.q, LatticePath::Kind::vertical)) {
    VertexSet g;
    for (const Cell& cell : path.cells()) g.add(label.at(cell));
    generators.insert(g.bits());
  }
  std::vector<VertexSet> dual_facets;
  for (std::uint64_t g : generators)
    dual_facets.push_back(VertexSet(g).complement_in(n));
  // The complex with these minimal nonfaces is the dual of the complex whose
  // facets are their complements.
  return alexander_dual(SimplicialComplex::from_facets(n, dual_facets));
}

namespace {

// All set partitions of {0..len-1} in restricted-growth order, sorted with
// fewer blocks first.
std::vector<std::vector<int>> set_partitions(int len) {
  std::vector<std::vector<int>> out;
  std::vector<int> assign(len, 0);
  auto rec = [&](auto&& self, int pos, int max_block) -> void {
    if (pos == len) {
      out.push_back(assign);
      return;
    }
    for (int b = 0; b <= max_block + 1; ++b) {
      assign[pos] = b;
      self(self, pos + 1, std::max(max_block, b));
    }
  };
  rec(rec, 0, -1);
  std::stable_sort(out.begin(), out.end(),
                   [](const std::vector<int>& a, const std::vector<int>& b) {
                     int ba = *std::max_element(a.begin(), a.end());
                     int bb = *std::max_element(b.begin(), b.end());
                     return ba < bb;
                   });
  return out;
}

}  // namespace

NonConeCertificate biCM_noncone(int n, int c, int s) {
  if (!(0 < c && c < s && s <= n && n <= (c + 1) * (s - c)))
    throw std::invalid_argument("invariants outside s <= n <= (c+1)(s-c)");
  int p = c + 1, q = s - c;
  int m = p * q - n;
  // Diagonals, longest first.
  std::vector<std::vector<Cell>> diagonals;
  for (int k = 1; k <= p + q - 1; ++k) {
    std::vector<Cell> diag;
    for (int i = 1; i <= p; ++i) {
      int j = k + 1 - i;
      if (j >= 1 && j <= q) diag.push_back(Cell{i, j});
    }
    std::sort(diag.begin(), diag.end());
    diagonals.push_back(diag);
  }
  std::stable_sort(diagonals.begin(), diagonals.end(),
                   [](const auto& a, const auto& b) { return a.size() > b.size(); });

  const std::vector<int> chars = {0, 2, 3, 5};
  std::vector<std::vector<std::vector<int>>> partition_choices;
  for (const auto& diag : diagonals)
    partition_choices.push_back(set_partitions((int)diag.size()));

  std::vector<std::vector<std::vector<Cell>>> chosen(diagonals.size());
  NonConeCertificate found;
  bool have = false;

  auto certify = [&](const PathMatrixSpec& spec) -> bool {
    SimplicialComplex dl = identify_diagonals(spec);
    if (!cone_apexes(dl).empty()) return false;
    auto type = type_of(f_polynomial(dl), dl.n());
    if (!type || *type != std::make_tuple(n, c, s)) return false;
    for (int ch : chars) {
      FieldSpec field = ch == 0 ? FieldSpec::rationals() : FieldSpec::prime(ch);
      if (!is_biCM(dl, field)) return false;
      // Independent route: linear resolution must agree with dual CM-ness.
      if (!eagon_reiner_check(dl, field))
        throw std::logic_error("eagon-reiner inconsistency in noncone search");
    }
    found.spec = spec;
    found.complex = identify_diagonals(spec);
    found.characteristics_checked = chars;
    return true;
  };

  auto rec = [&](auto&& self, size_t di, int merges_left) -> bool {
    if (di == diagonals.size()) {
      if (merges_left != 0) return false;
      PathMatrixSpec spec;
      spec.p = p;
      spec.q = q;
      for (const auto& diag_blocks : chosen)
        for (const auto& block : diag_blocks) spec.blocks.push_back(block);
      return certify(spec);
    }
    int len = (int)diagonals[di].size();
    // Remaining diagonals can still absorb this many merges.
    int capacity = 0;
    for (size_t dj = di + 1; dj < diagonals.size(); ++dj)
      capacity += (int)diagonals[dj].size() - 1;
    for (const auto& assign : partition_choices[di]) {
      int nblocks = *std::max_element(assign.begin(), assign.end()) + 1;
      int merges = len - nblocks;
      if (merges > merges_left) continue;
      if (merges_left - merges > capacity) continue;
      std::vector<std::vector<Cell>> blocks(nblocks);
      for (int pos = 0; pos < len; ++pos)
        blocks[assign[pos]].push_back(diagonals[di][pos]);
      chosen[di] = blocks;
      if (self(self, di + 1, merges_left - merges)) return true;
    }
    return false;
  };

  // Prefer many merges early: iterate the first diagonal's partitions from
  // fewest blocks upward, which set_partitions already provides.
  have = rec(rec, 0, m);
  if (!have)
    throw std::runtime_error(
        "no bi-CM non-cone identification found for the requested invariants");
  return found;
}

}  // namespace bicm
