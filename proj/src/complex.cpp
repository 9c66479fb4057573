#include "bicm/complex.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace bicm {

namespace guards {
int iso_n = 12;
long face_count = 200000;
int shelling_facets = 12;
int enum_n = 7;
}  // namespace guards

VertexSet VertexSet::from_members(const std::vector<int>& verts) {
  VertexSet s;
  for (int v : verts) s.add(v);
  return s;
}

VertexSet VertexSet::full(int n) {
  if (n == 0) return VertexSet();
  return VertexSet(~std::uint64_t(0) >> (64 - n));
}

int VertexSet::size() const { return std::popcount(bits_); }

void VertexSet::add(int v) {
  if (v < 1 || v > 63) throw std::invalid_argument("vertex out of range 1..63");
  bits_ |= std::uint64_t(1) << (v - 1);
}

int VertexSet::min_vertex() const {
  if (bits_ == 0) throw std::logic_error("min_vertex of empty set");
  return std::countr_zero(bits_) + 1;
}

VertexSet VertexSet::complement_in(int n) const {
  return VertexSet(VertexSet::full(n).bits() & ~bits_);
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  std::uint64_t b = bits_;
  while (b) {
    out.push_back(std::countr_zero(b) + 1);
    b &= b - 1;
  }
  return out;
}

std::string VertexSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int v : members()) {
    if (!first) os << ',';
    os << v;
    first = false;
  }
  os << '}';
  return os.str();
}

bool face_less(VertexSet a, VertexSet b) {
  int ca = a.size(), cb = b.size();
  if (ca != cb) return ca < cb;
  std::uint64_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  // First differing member decides lexicographic order on member lists.
  std::uint64_t low = diff & (~diff + 1);
  return (a.bits() & low) != 0;
}

SimplicialComplex SimplicialComplex::from_facets(
    int n, const std::vector<VertexSet>& candidates) {
  if (n < 0) throw std::invalid_argument("negative ground-set size");
  if (n > 63) throw std::invalid_argument("ground-set size above 63");
  if (candidates.empty())
    throw std::invalid_argument("void complex is not representable");
  VertexSet full = VertexSet::full(n);
  for (VertexSet f : candidates)
    if (!full.contains(f))
      throw std::invalid_argument("facet vertex out of range for n=" +
                                  std::to_string(n));
  // Drop dominated candidates and duplicates.
  std::vector<VertexSet> kept;
  for (VertexSet f : candidates) {
    bool dominated = false;
    for (VertexSet g : candidates)
      if (g != f && g.contains(f)) {
        dominated = true;
        break;
      }
    if (dominated) continue;
    if (std::find(kept.begin(), kept.end(), f) == kept.end()) kept.push_back(f);
  }
  std::sort(kept.begin(), kept.end(), face_less);
  return SimplicialComplex(n, std::move(kept));
}

SimplicialComplex SimplicialComplex::full_simplex(int n) {
  return from_facets(n, {VertexSet::full(n)});
}

SimplicialComplex SimplicialComplex::empty_simplex(int n) {
  return from_facets(n, {VertexSet()});
}

int SimplicialComplex::d() const {
  int m = 0;
  for (VertexSet f : facets_) m = std::max(m, f.size());
  return m;
}

bool SimplicialComplex::is_full_simplex() const {
  return facets_.size() == 1 && facets_[0] == VertexSet::full(n_);
}

bool SimplicialComplex::is_pure() const {
  for (VertexSet f : facets_)
    if (f.size() != facets_[0].size()) return false;
  return true;
}

bool SimplicialComplex::is_face(VertexSet s) const {
  for (VertexSet f : facets_)
    if (f.contains(s)) return true;
  return false;
}

std::vector<VertexSet> faces(const SimplicialComplex& dl, int k) {
  if (k < -1 || k > dl.d() - 1)
    throw std::invalid_argument("face dimension out of range");
  if (k == -1) return {VertexSet()};
  std::unordered_set<std::uint64_t> seen;
  std::vector<VertexSet> out;
  int card = k + 1;
  for (VertexSet f : dl.facets()) {
    if (f.size() < card) continue;
    // All cardinality-card submasks of f.
    std::vector<int> m = f.members();
    std::vector<int> idx(card);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      VertexSet s;
      for (int i : idx) s.add(m[i]);
      if (seen.insert(s.bits()).second) out.push_back(s);
      int i = card - 1;
      while (i >= 0 && idx[i] == (int)m.size() - card + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < card; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  std::sort(out.begin(), out.end(), face_less);
  return out;
}

std::vector<std::vector<VertexSet>> all_faces(const SimplicialComplex& dl) {
  std::unordered_set<std::uint64_t> seen;
  std::vector<std::vector<VertexSet>> out(dl.d() + 1);
  long total = 0;
  for (VertexSet f : dl.facets()) {
    std::uint64_t fb = f.bits();
    // Enumerate submasks of fb (including 0).
    std::uint64_t sub = fb;
    while (true) {
      if (seen.insert(sub).second) {
        VertexSet s(sub);
        out[s.size()].push_back(s);
        if (++total > guards::face_count)
          throw guard_error("face count guard exceeded");
      }
      if (sub == 0) break;
      sub = (sub - 1) & fb;
    }
  }
  for (auto& level : out) std::sort(level.begin(), level.end(), face_less);
  return out;
}

std::vector<long long> face_counts(const SimplicialComplex& dl) {
  const auto& fac = dl.facets();
  if (fac.size() <= 20) {
    // Inclusion-exclusion over facet intersections.
    std::vector<long long> counts(dl.d() + 1, 0);
    // binomials up to 63
    static const int NB = 64;
    static std::vector<std::vector<long long>> binom = [] {
      std::vector<std::vector<long long>> b(NB, std::vector<long long>(NB, 0));
      for (int i = 0; i < NB; ++i) {
        b[i][0] = 1;
        for (int j = 1; j <= i; ++j)
          b[i][j] = b[i - 1][j - 1] + (j <= i - 1 ? b[i - 1][j] : 0);
      }
      return b;
    }();
    int m = (int)fac.size();
    for (std::uint32_t s = 1; s < (1u << m); ++s) {
      VertexSet inter = VertexSet::full(dl.n());
      int bits = 0;
      for (int i = 0; i < m; ++i)
        if ((s >> i) & 1) {
          inter = inter & fac[i];
          ++bits;
        }
      int sz = inter.size();
      int sign = (bits % 2 == 1) ? 1 : -1;
      for (int j = 0; j <= sz && j < (int)counts.size(); ++j)
        counts[j] += sign * binom[sz][j];
    }
    return counts;
  }
  auto lv = all_faces(dl);
  std::vector<long long> counts(lv.size());
  for (size_t j = 0; j < lv.size(); ++j) counts[j] = (long long)lv[j].size();
  return counts;
}

int frame_invariant_c(const SimplicialComplex& dl) {
  int n = dl.n();
  for (int c = 0; c <= n; ++c) {
    // Check all (c+1)-subsets of [n] are faces; if not, answer is c.
    if (c == n) return n;
    // enumerate (c+1)-subsets
    std::vector<int> idx(c + 1);
    std::iota(idx.begin(), idx.end(), 1);
    bool all_in = true;
    while (all_in) {
      VertexSet s;
      for (int v : idx) s.add(v);
      if (!dl.is_face(s)) {
        all_in = false;
        break;
      }
      int i = c;
      while (i >= 0 && idx[i] == n - c + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j <= c; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!all_in) return c;
  }
  return dl.n();
}

std::vector<VertexSet> minimal_nonfaces(const SimplicialComplex& dl) {
  int n = dl.n();
  std::vector<VertexSet> out;
  // Increasing cardinality; a set is a minimal nonface iff it is not a face
  // and all its maximal proper subsets are faces.
  for (int card = 1; card <= n; ++card) {
    std::vector<int> idx(card);
    std::iota(idx.begin(), idx.end(), 1);
    while (true) {
      VertexSet s;
      for (int v : idx) s.add(v);
      if (!dl.is_face(s)) {
        bool minimal = true;
        for (int v : s.members()) {
          VertexSet t = s;
          t.remove(v);
          if (!dl.is_face(t)) {
            minimal = false;
            break;
          }
        }
        if (minimal) out.push_back(s);
      }
      int i = card - 1;
      while (i >= 0 && idx[i] == n - card + 1 + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < card; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  std::sort(out.begin(), out.end(), face_less);
  return out;
}

SimplicialComplex alexander_dual(const SimplicialComplex& dl) {
  if (dl.is_full_simplex())
    throw std::invalid_argument(
        "alexander dual of the full simplex is the void complex");
  std::vector<VertexSet> duals;
  for (VertexSet nf : minimal_nonfaces(dl))
    duals.push_back(nf.complement_in(dl.n()));
  return SimplicialComplex::from_facets(dl.n(), duals);
}

SimplicialComplex link(const SimplicialComplex& dl, VertexSet sigma) {
  if (!dl.is_face(sigma))
    throw std::invalid_argument("link of a non-face");
  std::vector<VertexSet> out;
  VertexSet support;
  for (VertexSet f : dl.facets())
    if (f.contains(sigma)) {
      out.push_back(f.minus(sigma));
      support = support | out.back();
    }
  // Order-preserving compression onto an initial segment.
  std::vector<int> labels = support.members();
  std::vector<VertexSet> packed;
  for (VertexSet f : out) {
    VertexSet relabeled;
    for (size_t i = 0; i < labels.size(); ++i)
      if (f.contains(labels[i])) relabeled.add((int)i + 1);
    packed.push_back(relabeled);
  }
  return SimplicialComplex::from_facets((int)labels.size(), packed);
}

SimplicialComplex restriction(const SimplicialComplex& dl, VertexSet w,
                              std::vector<int>* original_labels) {
  std::vector<int> labels = w.members();
  if (original_labels) *original_labels = labels;
  std::vector<VertexSet> out;
  for (VertexSet f : dl.facets()) {
    VertexSet cut = f & w;
    VertexSet relabeled;
    for (size_t i = 0; i < labels.size(); ++i)
      if (cut.contains(labels[i])) relabeled.add((int)i + 1);
    out.push_back(relabeled);
  }
  return SimplicialComplex::from_facets((int)labels.size(), out);
}

SimplicialComplex cone(const SimplicialComplex& dl) {
  std::vector<VertexSet> out;
  for (VertexSet f : dl.facets()) {
    VertexSet g = f;
    g.add(dl.n() + 1);
    out.push_back(g);
  }
  return SimplicialComplex::from_facets(dl.n() + 1, out);
}

VertexSet cone_apexes(const SimplicialComplex& dl) {
  VertexSet apex = VertexSet::full(dl.n());
  for (VertexSet f : dl.facets()) apex = apex & f;
  return apex;
}

namespace {

bool facets_less(const std::vector<VertexSet>& a,
                 const std::vector<VertexSet>& b) {
  for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return face_less(a[i], b[i]);
  }
  return a.size() < b.size();
}

std::vector<VertexSet> apply_perm(const std::vector<VertexSet>& facets,
                                  const std::vector<int>& img) {
  // img[v-1] is the image of vertex v.
  std::vector<VertexSet> out;
  out.reserve(facets.size());
  for (VertexSet f : facets) {
    VertexSet g;
    for (int v : f.members()) g.add(img[v - 1]);
    out.push_back(g);
  }
  std::sort(out.begin(), out.end(), face_less);
  return out;
}

}  // namespace

SimplicialComplex canonical_form(const SimplicialComplex& dl) {
  int n = dl.n();
  if (n > guards::iso_n)
    throw guard_error("isomorphism guard exceeded (n > " +
                      std::to_string(guards::iso_n) + ")");
  if (n <= 1) return dl;
  // Vertex invariant: per-cardinality face counts through this vertex.
  auto levels = all_faces(dl);
  std::vector<std::vector<int>> inv(n);
  for (int v = 1; v <= n; ++v) {
    std::vector<int> profile;
    for (const auto& lvl : levels) {
      int cnt = 0;
      for (VertexSet f : lvl)
        if (f.contains(v)) ++cnt;
      profile.push_back(cnt);
    }
    inv[v - 1] = profile;
  }
  // Group vertices into classes sorted by invariant; relabelings permute
  // within classes only, so the minimum stays isomorphism-invariant.
  std::map<std::vector<int>, std::vector<int>> classes;
  for (int v = 1; v <= n; ++v) classes[inv[v - 1]].push_back(v);
  std::vector<std::vector<int>> groups;
  for (auto& [key, verts] : classes) groups.push_back(verts);

  std::vector<int> img(n, 0);
  std::vector<VertexSet> best;
  bool have_best = false;

  // DFS over products of within-class permutations.
  std::vector<std::vector<int>> perms;
  for (auto& g : groups) perms.push_back(g);
  int next_label = 1;
  std::vector<int> base_label(groups.size());
  for (size_t gi = 0; gi < groups.size(); ++gi) {
    base_label[gi] = next_label;
    next_label += (int)groups[gi].size();
  }
  auto rec = [&](auto&& self, size_t gi) -> void {
    if (gi == groups.size()) {
      auto cand = apply_perm(dl.facets(), img);
      if (!have_best || facets_less(cand, best)) {
        best = cand;
        have_best = true;
      }
      return;
    }
    auto& g = perms[gi];
    std::sort(g.begin(), g.end());
    do {
      for (size_t i = 0; i < g.size(); ++i)
        img[g[i] - 1] = base_label[gi] + (int)i;
      self(self, gi + 1);
    } while (std::next_permutation(g.begin(), g.end()));
  };
  rec(rec, 0);
  return SimplicialComplex::from_facets(n, best);
}

bool is_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (a.n() != b.n()) return false;
  if (a.facets().size() != b.facets().size()) return false;
  if (face_counts(a) != face_counts(b)) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace bicm
