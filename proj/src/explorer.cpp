#include "bicm/explorer.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "bicm/constructions.hpp"
#include "bicm/facevec.hpp"
#include "bicm/homology.hpp"

namespace bicm {

namespace {

const std::vector<int> kDefaultChars = {0, 2, 3, 5};

bool certified_bicm(const SimplicialComplex& dl) {
  // Bi-CM over at least one default characteristic counts (rp2 is bi-CM
  // away from characteristic 2 and must be found by the (6,2,5) run).
  for (int ch : kDefaultChars) {
    FieldSpec field = ch == 0 ? FieldSpec::rationals() : FieldSpec::prime(ch);
    if (is_biCM(dl, field)) return true;
  }
  return false;
}

std::string encode(const SimplicialComplex& dl) {
  std::ostringstream os;
  os << dl.n() << ':';
  for (VertexSet f : dl.facets()) os << f.bits() << ',';
  return os.str();
}

std::vector<VertexSet> all_subsets_of_size(int n, int card) {
  std::vector<VertexSet> out;
  if (card == 0) return {VertexSet()};
  std::vector<int> idx(card);
  std::iota(idx.begin(), idx.end(), 1);
  while (true) {
    out.push_back(VertexSet::from_members(idx));
    int i = card - 1;
    while (i >= 0 && idx[i] == n - card + i + 1) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < card; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

}  // namespace

SearchReport enumerate_type(int n, int c, int s, const SearchLimits& limits) {
  SearchReport report;
  report.n = n;
  report.c = c;
  report.s = s;
  report.seed = limits.seed;

  // Target face counts of (1+t)^{n-s} f_{s,c}.
  FPolynomial base = f_sc(s, c);
  std::vector<long long> target = base.coeffs;
  for (int round = 0; round < n - s; ++round) {
    std::vector<long long> next(target.size() + 1, 0);
    for (size_t i = 0; i < target.size(); ++i) {
      next[i] += target[i];
      next[i + 1] += target[i];
    }
    target = next;
  }
  int d = (int)target.size() - 1;
  long long facet_count = target[d];
  auto candidates = all_subsets_of_size(n, d);

  std::set<std::string> seen;
  auto classify = [&](const SimplicialComplex& dl) {
    SimplicialComplex canon =
        n <= guards::iso_n ? canonical_form(dl) : dl;
    if (!seen.insert(encode(canon)).second) return;
    ++report.examined;
    if (!certified_bicm(canon)) return;
    ++report.bicm_found;
    if (cone_apexes(canon).empty()) {
      ++report.noncones;
      if ((int)report.exemplars.size() < limits.max_exemplars)
        report.exemplars.push_back(canon);
    } else {
      ++report.cones;
    }
  };

  if (limits.max_samples == 0) {
    if (n > guards::enum_n)
      throw guard_error("exhaustive enumeration guard exceeded");
    report.exhaustive = true;
    std::vector<long long> counts(d + 1, 0);
    std::set<std::uint64_t> faces_seen;
    std::vector<int> picked;
    // Choose facet_count facets in increasing candidate order with running
    // face-count pruning.
    auto rec = [&](auto&& self, int next_idx,
                   std::set<std::uint64_t>& faces) -> void {
      if ((int)picked.size() == facet_count) {
        std::vector<long long> have(d + 1, 0);
        for (std::uint64_t f : faces) ++have[VertexSet(f).size()];
        if (have == target) {
          std::vector<VertexSet> facets;
          for (int i : picked) facets.push_back(candidates[i]);
          classify(SimplicialComplex::from_facets(n, facets));
        }
        return;
      }
      int still_needed = (int)facet_count - (int)picked.size();
      for (int i = next_idx; i + still_needed <= (int)candidates.size(); ++i) {
        // Add candidate i and its new faces; prune on any overshoot.
        std::vector<std::uint64_t> added;
        std::uint64_t fb = candidates[i].bits();
        bool overshoot = false;
        std::uint64_t sub = fb;
        while (true) {
          if (!faces.count(sub)) {
            faces.insert(sub);
            added.push_back(sub);
            int card = VertexSet(sub).size();
            if (++counts[card] > target[card]) overshoot = true;
          }
          if (sub == 0) break;
          sub = (sub - 1) & fb;
        }
        if (!overshoot) {
          picked.push_back(i);
          self(self, i + 1, faces);
          picked.pop_back();
        }
        for (std::uint64_t f : added) {
          faces.erase(f);
          --counts[VertexSet(f).size()];
        }
      }
    };
    std::set<std::uint64_t> faces;
    faces.insert(0);
    counts[0] = 1;
    rec(rec, 0, faces);
  } else {
    report.exhaustive = false;
    std::mt19937_64 rng(limits.seed);
    for (long long trial = 0; trial < limits.max_samples; ++trial) {
      std::vector<int> pick((size_t)candidates.size());
      std::iota(pick.begin(), pick.end(), 0);
      std::shuffle(pick.begin(), pick.end(), rng);
      std::vector<VertexSet> facets;
      for (long long i = 0; i < facet_count && i < (long long)pick.size(); ++i)
        facets.push_back(candidates[pick[i]]);
      SimplicialComplex dl = SimplicialComplex::from_facets(n, facets);
      if (face_counts(dl) != target) continue;
      classify(dl);
    }
  }
  return report;
}

C1BoundResult verify_c1_bound(int n_max) {
  if (n_max > 10) throw guard_error("tree enumeration guard exceeded");
  C1BoundResult result;
  std::set<std::string> seen;
  auto check = [&](const SimplicialComplex& dl, int d) -> bool {
    if (!cone_apexes(dl).empty()) return true;
    int n = dl.n();
    int s = n - d + 1;
    return n - s <= s - 2;
  };
  for (int d = 1; d <= n_max && result.holds; ++d) {
    // DFS over attachment sequences, deduplicating by canonical form.
    auto rec = [&](auto&& self, const SimplicialComplex& dl) -> void {
      if (!result.holds) return;
      if (!seen.insert(encode(canonical_form(dl))).second) return;
      if (!check(dl, d)) {
        result.holds = false;
        result.counterexample = dl;
        return;
      }
      if (dl.n() >= n_max) return;
      for (int fi = 0; fi < (int)dl.facets().size(); ++fi)
        for (int di = 0; di < d; ++di)
          self(self, d_tree_extend(dl, fi, di));
    };
    rec(rec, SimplicialComplex::full_simplex(d));
  }
  return result;
}

ConeBoundReport cone_bound_audit(const std::vector<SimplicialComplex>& corpus) {
  ConeBoundReport report;
  for (const SimplicialComplex& dl : corpus) {
    ++report.checked;
    FPolynomial f = f_polynomial(dl);
    long long bound = cone_bound(f, dl.n(), frame_invariant_c(dl));
    if (dl.n() > bound) {
      ++report.bound_binding;
      if (cone_apexes(dl).empty())
        report.violations.push_back({dl, bound});
    }
  }
  return report;
}

}  // namespace bicm
