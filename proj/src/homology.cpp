#include "bicm/homology.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace bicm {

namespace {
constexpr long long kPrepassPrime = 2147483647;  // 2^31 - 1
}

FieldSpec FieldSpec::prime(int p) {
  if (p < 2) throw std::invalid_argument("characteristic must be 0 or prime");
  for (int q = 2; (long long)q * q <= p; ++q)
    if (p % q == 0) throw std::invalid_argument("characteristic not prime");
  return FieldSpec{p};
}

long long HomologyReport::reduced_euler() const {
  long long acc = 0;
  for (auto [i, b] : betti) {
    long long term = ((i % 2) == 0) ? b : -b;
    acc += term;
  }
  return acc;
}

long rank_mod_p(std::vector<std::vector<long long>> m, long long p) {
  if (m.empty()) return 0;
  size_t rows = m.size(), cols = m[0].size();
  for (auto& row : m)
    for (auto& v : row) {
      v %= p;
      if (v < 0) v += p;
    }
  size_t r = 0;
  for (size_t col = 0; col < cols && r < rows; ++col) {
    size_t piv = r;
    while (piv < rows && m[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[r], m[piv]);
    // Normalize pivot row.
    long long inv = 1, base = m[r][col], e = p - 2;
    while (e) {  // modular inverse by Fermat
      if (e & 1) inv = (__int128)inv * base % p;
      base = (__int128)base * base % p;
      e >>= 1;
    }
    for (size_t j = col; j < cols; ++j)
      m[r][j] = (__int128)m[r][j] * inv % p;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][col] == 0) continue;
      long long factor = m[i][col];
      for (size_t j = col; j < cols; ++j) {
        m[i][j] = (m[i][j] - (__int128)factor * m[r][j]) % p;
        if (m[i][j] < 0) m[i][j] += p;
      }
    }
    ++r;
  }
  return (long)r;
}

long rank_exact(const std::vector<std::vector<long long>>& m_in) {
  using boost::multiprecision::cpp_int;
  if (m_in.empty()) return 0;
  size_t rows = m_in.size(), cols = m_in[0].size();
  std::vector<std::vector<cpp_int>> m(rows, std::vector<cpp_int>(cols));
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) m[i][j] = m_in[i][j];
  // Bareiss fraction-free elimination.
  cpp_int prev = 1;
  size_t r = 0;
  for (size_t col = 0; col < cols && r < rows; ++col) {
    size_t piv = r;
    while (piv < rows && m[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[r], m[piv]);
    for (size_t i = r + 1; i < rows; ++i) {
      for (size_t j = col + 1; j < cols; ++j)
        m[i][j] = (m[r][col] * m[i][j] - m[i][col] * m[r][j]) / prev;
      m[i][col] = 0;
    }
    prev = m[r][col];
    ++r;
  }
  return (long)r;
}

namespace {

// Boundary matrices of the reduced chain complex, by domain cardinality:
// result[j] is the matrix of C_{j} -> C_{j-1} in face cardinalities
// (j-element faces map to (j-1)-element faces), j = 1..d.
std::vector<std::vector<std::vector<long long>>> boundary_matrices(
    const std::vector<std::vector<VertexSet>>& levels) {
  int d = (int)levels.size() - 1;
  std::vector<std::vector<std::vector<long long>>> out(d + 1);
  for (int j = 1; j <= d; ++j) {
    std::unordered_map<std::uint64_t, int> row_of;
    for (size_t r = 0; r < levels[j - 1].size(); ++r)
      row_of[levels[j - 1][r].bits()] = (int)r;
    std::vector<std::vector<long long>> mat(
        levels[j - 1].size(),
        std::vector<long long>(levels[j].size(), 0));
    for (size_t col = 0; col < levels[j].size(); ++col) {
      std::vector<int> mem = levels[j][col].members();
      for (size_t pos = 0; pos < mem.size(); ++pos) {
        VertexSet sub = levels[j][col];
        sub.remove(mem[pos]);
        mat[row_of.at(sub.bits())][col] = (pos % 2 == 0) ? 1 : -1;
      }
    }
    out[j] = std::move(mat);
  }
  return out;
}

HomologyReport betti_from_ranks(const std::vector<long long>& counts,
                                const std::vector<long>& ranks) {
  // counts[j]: number of j-element faces; ranks[j]: rank of boundary from
  // cardinality j (ranks[0] unused = 0). Betti indexed by dimension j-1.
  HomologyReport rep;
  int d = (int)counts.size() - 1;
  for (int j = 0; j <= d; ++j) {
    long long rk_out = (j >= 1) ? ranks[j] : 0;
    long long rk_in = (j + 1 <= d) ? ranks[j + 1] : 0;
    long long b = counts[j] - rk_out - rk_in;
    if (b != 0) rep.betti[j - 1] = b;
  }
  return rep;
}

std::string memo_key(const SimplicialComplex& dl, int characteristic) {
  // Compress onto the support vertices; homology ignores absent vertices.
  VertexSet support;
  for (VertexSet f : dl.facets()) support = support | f;
  std::vector<int> labels = support.members();
  std::ostringstream os;
  os << characteristic << '|';
  for (VertexSet f : dl.facets()) {
    std::uint64_t packed = 0;
    for (size_t i = 0; i < labels.size(); ++i)
      if (f.contains(labels[i])) packed |= std::uint64_t(1) << i;
    os << packed << ',';
  }
  return os.str();
}

std::unordered_map<std::string, HomologyReport> g_homology_memo;

HomologyReport reduced_homology_uncached(const SimplicialComplex& dl,
                                         FieldSpec k) {
  auto levels = all_faces(dl);
  std::vector<long long> counts(levels.size());
  for (size_t j = 0; j < levels.size(); ++j) counts[j] = (long long)levels[j].size();
  auto mats = boundary_matrices(levels);
  int d = (int)levels.size() - 1;
  std::vector<long> ranks(d + 1, 0);
  if (k.characteristic > 0) {
    for (int j = 1; j <= d; ++j) ranks[j] = rank_mod_p(mats[j], k.characteristic);
    return betti_from_ranks(counts, ranks);
  }
  // Characteristic 0: mod-p ranks lower-bound the rational ranks, and
  // del.del = 0 gives rank_j + rank_{j+1} <= counts_j. When no two
  // consecutive betti numbers of the pre-pass are nonzero, each constraint
  // with betti = 0 pins both adjacent ranks, so the pre-pass ranks are the
  // true rational ranks.
  for (int j = 1; j <= d; ++j) ranks[j] = rank_mod_p(mats[j], kPrepassPrime);
  HomologyReport pre = betti_from_ranks(counts, ranks);
  bool certified = true;
  for (int i = -1; i < d; ++i)
    if (pre.betti_at(i) != 0 && pre.betti_at(i + 1) != 0) {
      certified = false;
      break;
    }
  if (certified) return pre;
  for (int j = 1; j <= d; ++j) ranks[j] = rank_exact(mats[j]);
  return betti_from_ranks(counts, ranks);
}

}  // namespace

HomologyReport reduced_homology(const SimplicialComplex& dl, FieldSpec k) {
  std::string key = memo_key(dl, k.characteristic);
  auto it = g_homology_memo.find(key);
  if (it != g_homology_memo.end()) return it->second;
  HomologyReport rep = reduced_homology_uncached(dl, k);
  if (g_homology_memo.size() < 2000000) g_homology_memo.emplace(key, rep);
  return rep;
}

CMWitness is_CM(const SimplicialComplex& dl, FieldSpec k) {
  auto levels = all_faces(dl);
  for (const auto& level : levels) {
    for (VertexSet sigma : level) {
      SimplicialComplex lk = link(dl, sigma);
      int lk_dim = lk.d() - 1;
      if (lk_dim <= -1) continue;
      HomologyReport rep = reduced_homology(lk, k);
      for (int i = -1; i < lk_dim; ++i) {
        if (rep.betti_at(i) != 0) {
          CMWitness w;
          w.verdict = false;
          w.failing_face = sigma;
          w.failing_dimension = i;
          return w;
        }
      }
    }
  }
  CMWitness w;
  w.verdict = true;
  return w;
}

bool is_biCM(const SimplicialComplex& dl, FieldSpec k) {
  if (dl.is_full_simplex())
    throw std::invalid_argument("bi-CM test on the full simplex");
  if (!is_CM(dl, k).verdict) return false;
  return is_CM(alexander_dual(dl), k).verdict;
}

namespace {

// F_j must meet the earlier facets in a pure nonempty (|F_j|-2)-dimensional
// subcomplex: every intersection with an earlier facet lies in one of
// cardinality |F_j|-1.
bool shelling_step_ok(const std::vector<VertexSet>& facets,
                      const std::vector<int>& prior, int j) {
  VertexSet fj = facets[j];
  int t = fj.size();
  for (int i : prior) {
    VertexSet inter = fj & facets[i];
    bool covered = false;
    for (int l : prior) {
      VertexSet big = fj & facets[l];
      if (big.size() == t - 1 && big.contains(inter)) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

}  // namespace

bool is_shelling(const SimplicialComplex& dl, const std::vector<int>& order) {
  if (!dl.is_pure()) throw std::invalid_argument("shelling needs a pure complex");
  const auto& facets = dl.facets();
  std::vector<bool> seen(facets.size(), false);
  if (order.size() != facets.size())
    throw std::invalid_argument("order is not a permutation of the facets");
  for (int i : order) {
    if (i < 0 || i >= (int)facets.size() || seen[i])
      throw std::invalid_argument("order is not a permutation of the facets");
    seen[i] = true;
  }
  std::vector<int> prior;
  for (size_t pos = 0; pos < order.size(); ++pos) {
    if (pos >= 1 && !shelling_step_ok(facets, prior, order[pos])) return false;
    prior.push_back(order[pos]);
  }
  return true;
}

std::optional<std::vector<int>> find_shelling(const SimplicialComplex& dl) {
  if ((int)dl.facets().size() > guards::shelling_facets)
    throw guard_error("shelling search guard exceeded");
  if (!dl.is_pure()) return std::nullopt;
  const auto& facets = dl.facets();
  int m = (int)facets.size();
  if (m == 1) return std::vector<int>{0};
  // The condition depends only on the set of earlier facets, so dead
  // prefix-sets are memoized.
  std::unordered_map<std::uint32_t, bool> dead;
  std::vector<int> order;
  auto rec = [&](auto&& self, std::uint32_t used) -> bool {
    if ((int)order.size() == m) return true;
    auto it = dead.find(used);
    if (it != dead.end()) return false;
    std::vector<int> prior = order;
    for (int j = 0; j < m; ++j) {
      if ((used >> j) & 1) continue;
      if (!order.empty() && !shelling_step_ok(facets, prior, j)) continue;
      order.push_back(j);
      if (self(self, used | (1u << j))) return true;
      order.pop_back();
    }
    dead[used] = true;
    return false;
  };
  if (rec(rec, 0)) return order;
  return std::nullopt;
}

}  // namespace bicm
