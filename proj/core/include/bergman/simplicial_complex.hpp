#pragma once

#include <string>
#include <vector>

#include "bergman/bitset.hpp"
#include "bergman/vertex_label.hpp"

namespace bergman {

/// Face counts by cardinality: entries[k] is the number of faces with k
/// vertices, so entries = (f_{-1}, f_0, ..., f_{d-1}) and entries[0] = 1 for
/// any nonvoid complex.
struct FaceVector {
  std::vector<long long> entries;

  bool operator==(const FaceVector& o) const { return entries == o.entries; }
};

struct ComplexStats {
  int dimension = -1;
  bool pure = false;
  FaceVector f;
  std::vector<long long> h;  // length dimension + 2, h[0] = 1
};

/// Abstract simplicial complex in canonical form: a sorted vertex label
/// table and the inclusion-maximal faces as bitsets over it, sorted
/// lexicographically. Every vertex occurs in some facet. The void complex
/// (no faces at all) and the empty complex {∅} are distinct values.
/// Instances are immutable; all operations build new complexes.
class SimplicialComplex {
 public:
  /// The void complex.
  SimplicialComplex() = default;

  /// Complex generated by the given faces: dominated faces are absorbed,
  /// facets deduplicated and canonically ordered. An empty input yields the
  /// void complex; a single empty face yields {∅}.
  static SimplicialComplex from_faces(const std::vector<std::vector<VertexLabel>>& faces);

  /// Canonicalizing constructor over an explicit label table. `labels` must
  /// be sorted and unique; faces are bitsets over it. Unused labels are
  /// dropped.
  static SimplicialComplex build(std::vector<VertexLabel> labels, std::vector<Bitset> faces);

  bool is_void() const { return facets_.empty(); }
  /// True for {∅}: one facet, the empty face.
  bool is_empty_complex() const { return facets_.size() == 1 && facets_[0].none(); }
  /// Simplices (at most one facet) are the base case of decompositions.
  bool is_simplex() const { return facets_.size() <= 1; }

  std::size_t facet_count() const { return facets_.size(); }
  const std::vector<VertexLabel>& vertex_labels() const { return labels_; }
  const std::vector<Bitset>& facet_sets() const { return facets_; }

  std::vector<VertexLabel> face_labels(const Bitset& face) const;
  std::vector<std::vector<VertexLabel>> facets_as_labels() const;

  /// Index of a label in the vertex table, or -1.
  int vertex_index(const VertexLabel& v) const;
  bool has_vertex(const VertexLabel& v) const { return vertex_index(v) >= 0; }

  /// Converts labels to a face bitset; throws InputError on unknown labels.
  Bitset face_from_labels(const std::vector<VertexLabel>& face) const;

  /// True iff the set is contained in some facet.
  bool has_face(const Bitset& face) const;

  /// Deterministic serialization of the canonical facet set; equal complexes
  /// produce equal keys. Used as a memoization key.
  std::string canonical_key() const;

  bool operator==(const SimplicialComplex& o) const {
    return labels_ == o.labels_ && facets_ == o.facets_;
  }
  bool operator!=(const SimplicialComplex& o) const { return !(*this == o); }

 private:
  std::vector<VertexLabel> labels_;
  std::vector<Bitset> facets_;
};

/// Spec-level constructor name; identical to SimplicialComplex::from_faces.
SimplicialComplex complex_from_facets(const std::vector<std::vector<VertexLabel>>& faces);

/// del(σ) = { τ∖σ : τ ∈ Δ }. σ must be a face.
SimplicialComplex deletion(const SimplicialComplex& complex, const std::vector<VertexLabel>& sigma);

/// link(σ) = { τ∖σ : σ ⊆ τ ∈ Δ }. σ must be a face.
SimplicialComplex link(const SimplicialComplex& complex, const std::vector<VertexLabel>& sigma);

/// Join of complexes on disjoint vertex sets; facets are pairwise unions.
SimplicialComplex join(const SimplicialComplex& left, const SimplicialComplex& right);

/// Subcomplex of the faces contained in W. W must consist of vertices of the
/// complex.
SimplicialComplex induced(const SimplicialComplex& complex,
                          const std::vector<VertexLabel>& within);

/// Dimension, purity, f-vector and h-vector. The h-vector uses d = dim + 1
/// in the standard binomial transform, also for nonpure complexes. Throws on
/// the void complex.
ComplexStats stats(const SimplicialComplex& complex);

/// h_k = sum_i (-1)^{k-i} C(d-i, k-i) f_{i-1}, k = 0..d.
std::vector<long long> h_from_f(const FaceVector& f);

}  // namespace bergman
