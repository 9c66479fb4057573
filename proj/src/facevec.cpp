#include "bicm/facevec.hpp"

#include <stdexcept>

namespace bicm {

long long binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

long long FPolynomial::eval(long long t) const {
  long long acc = 0;
  for (int i = degree(); i >= 0; --i) acc = acc * t + coeffs[i];
  return acc;
}

FPolynomial f_polynomial(const SimplicialComplex& dl) {
  auto counts = face_counts(dl);
  while (counts.size() > 1 && counts.back() == 0) counts.pop_back();
  return FPolynomial{counts};
}

HVector h_vector(const FPolynomial& f) {
  int d = f.degree();
  std::vector<long long> h(d + 1, 0);
  for (int k = 0; k <= d; ++k) {
    long long acc = 0;
    for (int i = 0; i <= k; ++i) {
      long long term = binomial(d - i, k - i) * f.coeffs[i];
      acc += ((k - i) % 2 == 0) ? term : -term;
    }
    h[k] = acc;
  }
  return HVector{h};
}

FPolynomial f_from_h(const HVector& h) {
  int d = (int)h.entries.size() - 1;
  // F(t) = sum_i h_i (1+t)^{d-i}; coefficient of t^{d-k} is f_{k-1}.
  std::vector<long long> big(d + 1, 0);
  for (int i = 0; i <= d; ++i)
    for (int j = 0; j <= d - i; ++j)
      big[j] += h.entries[i] * binomial(d - i, j);
  std::vector<long long> f(d + 1, 0);
  for (int k = 0; k <= d; ++k) f[k] = big[d - k];
  while (f.size() > 1 && f.back() == 0) f.pop_back();
  return FPolynomial{f};
}

FPolynomial dual_f(const FPolynomial& f, int n) {
  auto fi = [&](int i) -> long long {  // f_i with f_{-1} = 1
    if (i == -1) return 1;
    if (i < -1 || i + 1 >= (int)f.coeffs.size()) return 0;
    return f.coeffs[i + 1];
  };
  std::vector<long long> out(1, 1);
  for (int i = 0; i <= n - 1; ++i) {
    long long v = binomial(n, i + 1) - fi(n - i - 2);
    if (v < 0)
      throw std::invalid_argument("f-polynomial not realizable on [n]");
    out.push_back(v);
  }
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return FPolynomial{out};
}

FPolynomial f_sc(int s, int c) {
  if (c < 0 || c > s) throw std::invalid_argument("f_sc requires 0 <= c <= s");
  std::vector<long long> coeffs;
  for (int i = 0; i <= c; ++i) coeffs.push_back(binomial(s, i));
  return FPolynomial{coeffs};
}

std::optional<std::tuple<int, int, int>> type_of(const FPolynomial& f, int n) {
  // Divide out (1+t) exactly as often as possible: f(-1) = 0 test repeated.
  std::vector<long long> g = f.coeffs;
  int e = 0;
  while (true) {
    long long at_minus1 = 0;
    for (int i = (int)g.size() - 1; i >= 0; --i) at_minus1 = -at_minus1 + g[i];
    if (at_minus1 != 0) break;
    // g := g / (1+t), synthetic division from the top.
    std::vector<long long> q(g.size() - 1, 0);
    long long carry = 0;
    for (int i = (int)g.size() - 1; i >= 1; --i) {
      q[i - 1] = g[i] - carry;
      carry = q[i - 1];
    }
    g = q;
    ++e;
    if (g.size() == 1) break;  // constant quotient
  }
  int s = n - e;
  int c = (int)g.size() - 1;
  if (s < 0 || c > s) return std::nullopt;
  for (int i = 0; i <= c; ++i)
    if (g[i] != binomial(s, i)) return std::nullopt;
  return std::make_tuple(n, c, s);
}

PowerSeries hilbert_series_S(const FPolynomial& f, int n, int c, int k_max) {
  if (k_max < 0) throw std::invalid_argument("negative truncation degree");
  std::vector<long long> coeffs(k_max + 1, 0);
  // (-1)^c f(-t)
  for (int k = 0; k <= k_max && k <= f.degree(); ++k) {
    long long v = f.coeffs[k];
    coeffs[k] = ((c + k) % 2 == 0) ? v : -v;
  }
  // Division by (1-t)^n is n rounds of prefix sums.
  for (int round = 0; round < n; ++round)
    for (int k = 1; k <= k_max; ++k) coeffs[k] += coeffs[k - 1];
  coeffs[0] += (c % 2 == 0) ? -1 : 1;
  return PowerSeries{coeffs};
}

std::vector<std::pair<long long, int>> grothendieck_class(
    const SimplicialComplex& dl) {
  SimplicialComplex dual = alexander_dual(dl);
  HVector hstar = h_vector(f_polynomial(dual));
  int dstar = (int)hstar.entries.size() - 1;
  std::vector<std::pair<long long, int>> out;
  for (int j = 0; j <= dstar; ++j)
    out.emplace_back(hstar.entries[dstar - j], dl.n() - 1 - j);
  return out;
}

namespace {

// chi(O(m)) on projective N-space: binomial(m+N, N) as a polynomial in m.
long long chi_o(long long m, int N) {
  long long num = 1, den = 1;
  for (int t = 1; t <= N; ++t) {
    num *= m + t;
    den *= t;
  }
  return num / den;
}

}  // namespace

long long euler_char_S(const SimplicialComplex& dl, int k) {
  SimplicialComplex dual = alexander_dual(dl);
  auto g = face_counts(dual);  // g[j] = number of j-element faces of the dual
  int dstar = dual.d();
  int c = frame_invariant_c(dl);
  int n = dl.n();
  long long chi = 0;
  for (int i = 0; i <= dstar; ++i) {
    long long term = g[dstar - i] * chi_o(k - c - 1 - i, n - 1);
    chi += (i % 2 == 0) ? term : -term;
  }
  return chi;
}

long long cone_bound(const FPolynomial& f, int n, int c) {
  PowerSeries s = hilbert_series_S(f, n, c, c + 2);
  return s.coeffs[c + 1] * s.coeffs[c + 2];
}

ComplexProfile profile(const SimplicialComplex& dl) {
  ComplexProfile p;
  p.n = dl.n();
  p.d = dl.d();
  p.c = frame_invariant_c(dl);
  p.cone_apexes = cone_apexes(dl);
  p.type_ncs = type_of(f_polynomial(dl), dl.n());
  return p;
}

}  // namespace bicm
