#ifndef BICM_COMPLEX_HPP
#define BICM_COMPLEX_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace bicm {

// Guard exceeded (problem size above a configured limit). Distinct from
// invalid_argument so callers can map it to a separate exit code.
class guard_error : public std::runtime_error {
 public:
  explicit guard_error(const std::string& what) : std::runtime_error(what) {}
};

namespace guards {
// Process-wide defaults, overridable (the CLI reads environment variables).
extern int iso_n;           // max n for canonical_form / is_isomorphic
extern long face_count;     // max total face count for homology
extern int shelling_facets; // max facet count for find_shelling
extern int enum_n;          // max n for exhaustive enumeration
}  // namespace guards

// A subset of {1,...,n}, n <= 63, stored as a bitmask (bit v-1 <=> vertex v).
class VertexSet {
 public:
  VertexSet() : bits_(0) {}
  explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<int> verts) : bits_(0) {
    for (int v : verts) add(v);
  }
  static VertexSet from_members(const std::vector<int>& verts);
  static VertexSet full(int n);  // {1,...,n}

  std::uint64_t bits() const { return bits_; }
  int size() const;
  bool empty() const { return bits_ == 0; }
  bool contains(int v) const { return (bits_ >> (v - 1)) & 1u; }
  bool contains(VertexSet other) const {
    return (other.bits_ & ~bits_) == 0;
  }
  void add(int v);
  void remove(int v) { bits_ &= ~(std::uint64_t(1) << (v - 1)); }
  int min_vertex() const;  // smallest member; requires nonempty

  VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  VertexSet minus(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  VertexSet complement_in(int n) const;

  bool operator==(VertexSet o) const { return bits_ == o.bits_; }
  bool operator!=(VertexSet o) const { return bits_ != o.bits_; }

  std::vector<int> members() const;
  std::string to_string() const;  // "{1,2,5}"

 private:
  std::uint64_t bits_;
};

// Canonical face order: by cardinality, then lexicographic on member lists.
bool face_less(VertexSet a, VertexSet b);

// A simplicial complex on ground set [n], stored as its canonically sorted
// antichain of facets. The empty simplex {emptyset} is n >= 0 with a single
// empty facet; the void complex is not representable.
class SimplicialComplex {
 public:
  static SimplicialComplex from_facets(int n,
                                       const std::vector<VertexSet>& candidates);
  static SimplicialComplex full_simplex(int n);
  static SimplicialComplex empty_simplex(int n);

  int n() const { return n_; }
  const std::vector<VertexSet>& facets() const { return facets_; }
  // Largest facet cardinality; dim = d-1.
  int d() const;
  bool is_full_simplex() const;
  bool is_pure() const;

  bool is_face(VertexSet s) const;

  bool operator==(const SimplicialComplex& o) const {
    return n_ == o.n_ && facets_ == o.facets_;
  }
  bool operator!=(const SimplicialComplex& o) const { return !(*this == o); }

 private:
  SimplicialComplex(int n, std::vector<VertexSet> canonical_facets)
      : n_(n), facets_(std::move(canonical_facets)) {}
  int n_;
  std::vector<VertexSet> facets_;
};

struct ComplexProfile {
  int n = 0;
  int d = 0;            // dim = d-1
  int c = 0;            // frame invariant
  VertexSet cone_apexes;
  std::optional<std::tuple<int, int, int>> type_ncs;
};

// All k-dimensional faces (cardinality k+1), canonically ordered.
// k = -1 yields the single empty face. Throws on k outside [-1, dim].
std::vector<VertexSet> faces(const SimplicialComplex& dl, int k);

// Every face, grouped by cardinality: result[j] holds the j-element faces.
// Subject to guards::face_count.
std::vector<std::vector<VertexSet>> all_faces(const SimplicialComplex& dl);

// Face counts by cardinality without enumerating faces (inclusion-exclusion
// over facets); works for large facets as long as there are few facets.
std::vector<long long> face_counts(const SimplicialComplex& dl);

// Largest c such that every (c-1)-face of the full simplex on [n] is a face.
int frame_invariant_c(const SimplicialComplex& dl);

// Inclusion-minimal non-faces of [n]; empty list for the full simplex.
std::vector<VertexSet> minimal_nonfaces(const SimplicialComplex& dl);

// Facets of the dual are complements of the minimal non-faces.
// Throws on the full simplex (void dual is not representable).
SimplicialComplex alexander_dual(const SimplicialComplex& dl);

// Link of a face, kept on the ambient ground set [n].
SimplicialComplex link(const SimplicialComplex& dl, VertexSet sigma);

// Faces contained in W, relabeled order-preservingly onto [|W|].
// original_labels, when given, receives the member list of W (new label i+1
// corresponds to original_labels[i]).
SimplicialComplex restriction(const SimplicialComplex& dl, VertexSet w,
                              std::vector<int>* original_labels = nullptr);

// Cone over a new vertex n+1.
SimplicialComplex cone(const SimplicialComplex& dl);

// Vertices common to all facets; nonempty iff the complex is a cone.
VertexSet cone_apexes(const SimplicialComplex& dl);

// Minimum of the facet encoding over vertex relabelings (class-pruned).
SimplicialComplex canonical_form(const SimplicialComplex& dl);
bool is_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b);

ComplexProfile profile(const SimplicialComplex& dl);

}  // namespace bicm

#endif  // BICM_COMPLEX_HPP
