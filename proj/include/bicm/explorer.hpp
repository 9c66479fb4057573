#ifndef BICM_EXPLORER_HPP
#define BICM_EXPLORER_HPP

#include <cstdint>
#include <optional>

#include "bicm/complex.hpp"

namespace bicm {

struct SearchReport {
  int n = 0, c = 0, s = 0;
  long long examined = 0;
  long long bicm_found = 0;
  long long cones = 0;
  long long noncones = 0;
  bool exhaustive = false;
  std::uint64_t seed = 0;  // sampling mode only
  std::vector<SimplicialComplex> exemplars;  // canonical non-cone bi-CM reps
};

struct SearchLimits {
  int max_exemplars = 4;
  long long max_samples = 0;      // 0: exhaustive mode
  std::uint64_t seed = 0;
};

// Enumerates pure complexes on [n] with f-polynomial (1+t)^{n-s} f_{s,c}
// up to isomorphism, certifies bi-CM over {0,2,3,5} and classifies
// cone/non-cone. Exhaustive mode is guarded by guards::enum_n.
SearchReport enumerate_type(int n, int c, int s, const SearchLimits& limits);

struct C1BoundResult {
  bool holds = true;
  std::optional<SimplicialComplex> counterexample;
};

// Checks n-s <= s-2 for every non-cone (d-1)-tree with n <= n_max, over all
// d; trees exhaust the bi-CM complexes with c = 1.
C1BoundResult verify_c1_bound(int n_max);

struct ConeBoundViolation {
  SimplicialComplex complex = SimplicialComplex::empty_simplex(0);
  long long bound = 0;
};

struct ConeBoundReport {
  long long checked = 0;
  long long bound_binding = 0;  // members with n > a*b
  std::vector<ConeBoundViolation> violations;
};

// For every corpus member: n > cone_bound(f, n, c) must imply a cone.
ConeBoundReport cone_bound_audit(const std::vector<SimplicialComplex>& corpus);

}  // namespace bicm

#endif  // BICM_EXPLORER_HPP
