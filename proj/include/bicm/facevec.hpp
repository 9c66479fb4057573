#ifndef BICM_FACEVEC_HPP
#define BICM_FACEVEC_HPP

#include <optional>
#include <tuple>
#include <vector>

#include "bicm/complex.hpp"

namespace bicm {

// f-polynomial 1 + f_0 t + f_1 t^2 + ... + f_{d-1} t^d, coefficients by
// degree. Constant term always 1.
struct FPolynomial {
  std::vector<long long> coeffs;  // coeffs[i] = f_{i-1}, coeffs[0] = 1

  int degree() const { return (int)coeffs.size() - 1; }
  long long eval(long long t) const;
  bool operator==(const FPolynomial&) const = default;
};

// h-vector [h_0=1, h_1, ..., h_d]; entries may be negative for non-CM input.
struct HVector {
  std::vector<long long> entries;
  bool operator==(const HVector&) const = default;
};

// Exact integer power series truncated at degree k_max.
struct PowerSeries {
  std::vector<long long> coeffs;  // indexed 0..k_max
  bool operator==(const PowerSeries&) const = default;
};

long long binomial(long long n, long long k);

FPolynomial f_polynomial(const SimplicialComplex& dl);

HVector h_vector(const FPolynomial& f);
FPolynomial f_from_h(const HVector& h);

// f-polynomial of the Alexander dual via f*_i + f_{n-i-2} = C(n, i+1).
// Throws if a derived coefficient is negative (f not realizable on [n]).
FPolynomial dual_f(const FPolynomial& f, int n);

// f-polynomial of the (c-1)-skeleton of the (s-1)-simplex: sum C(s,i) t^i.
FPolynomial f_sc(int s, int c);

// Factorization f = (1+t)^{n-s} f_{s,c}; absent when the (1+t)-free part is
// not of binomial shape.
std::optional<std::tuple<int, int, int>> type_of(const FPolynomial& f, int n);

// Truncated expansion of (-1)^{c+1} + (-1)^c f(-t)/(1-t)^n.
PowerSeries hilbert_series_S(const FPolynomial& f, int n, int c, int k_max);

// Pairs (h*_{d*-j}, n-1-j) for j = 0..d*, h* the h-vector of the dual.
std::vector<std::pair<long long, int>> grothendieck_class(
    const SimplicialComplex& dl);

// Alternating sum over the dual-facet resolution of S(dl), twisted by k.
long long euler_char_S(const SimplicialComplex& dl, int k);

// a*b with a, b the series coefficients at c+1 and c+2; any complex with CM
// dual, this f-polynomial and n > a*b is a cone.
long long cone_bound(const FPolynomial& f, int n, int c);

}  // namespace bicm

#endif  // BICM_FACEVEC_HPP
