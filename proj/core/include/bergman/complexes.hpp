#pragma once

#include <utility>
#include <vector>

#include "bergman/closure_operator.hpp"
#include "bergman/simplicial_complex.hpp"

namespace bergman {

/// Face (I, F_•) of an augmented Bergman complex: an independent set plus a
/// compatible flag of proper flats (f(I) ⊆ F_1 when the flag is nonempty).
struct AugmentedFace {
  ElemMask independent = 0;
  Flag flag;
};

/// Splits a face of Δ(f) into its (I, F_•) form and validates it.
AugmentedFace augmented_face_from_labels(const ClosureOperator& f,
                                         const std::vector<VertexLabel>& face);
std::vector<VertexLabel> augmented_face_labels(const ClosureOperator& f,
                                               const AugmentedFace& face);

/// Order complex of the flats strictly between f(∅) and E; {∅} if there are
/// none.
SimplicialComplex bergman_complex(const ClosureOperator& f);

/// Bergman complex coned over the vertex x_{f(∅)}. Throws when f(∅) = E.
SimplicialComplex cone_bergman(const ClosureOperator& f);

/// Complex of independent sets on the y-vertices.
SimplicialComplex independence_complex(const ClosureOperator& f,
                                       int max_ground_size = kDefaultEnumerationBudget);

/// The augmented Bergman complex, by direct facet enumeration: for every
/// independent set I with f(I) = E a facet (I, ∅); for every other
/// independent set the facets (I, F_•) where F_• runs over the saturated
/// chains from f(I) to a flat covered by E.
SimplicialComplex augmented_bergman(const ClosureOperator& f,
                                    int max_ground_size = kDefaultEnumerationBudget);

/// Same complex by brute force: generates every compatible (I, F_•) pair and
/// absorbs dominated faces. Kept as an independent route for validating the
/// direct enumeration.
SimplicialComplex augmented_bergman_bruteforce(const ClosureOperator& f,
                                               int max_ground_size = kDefaultEnumerationBudget);

/// Induced subcomplex of Δ(M) on all y-vertices plus {x_F : F ∈ upper_set}.
/// M must be a matroid and upper_set upward-closed among proper flats.
SimplicialComplex augmented_upperset(const ClosureOperator& matroid,
                                     const std::vector<ElemMask>& upper_set,
                                     int max_ground_size = kDefaultEnumerationBudget);

/// All upward-closed sets of proper flats, sorted by size then lexicographic
/// content. Intended for small instances.
std::vector<std::vector<ElemMask>> all_upper_sets(const ClosureOperator& f);

/// link(Δ(f), x_F) factors as join(Δ(f|_F), B(f/F)) after renaming the
/// contraction side's flat vertices back to the original ground set.
struct LinkFactorization {
  SimplicialComplex restriction_part;  // Δ(f|_F)
  SimplicialComplex contraction_part;  // B(f/F), labels over E∖F
  /// Maps every factor vertex to its vertex in Δ(f): identity on the
  /// restriction side, x_{G∖F} → x_G on the contraction side.
  std::vector<std::pair<VertexLabel, VertexLabel>> relabel;
};

LinkFactorization link_factorization(const ClosureOperator& f, ElemMask proper_flat,
                                     int max_ground_size = kDefaultEnumerationBudget);

/// Rewrites vertex labels through the given map (vertices absent from the
/// map are kept) and re-canonicalizes.
SimplicialComplex relabel_vertices(
    const SimplicialComplex& complex,
    const std::vector<std::pair<VertexLabel, VertexLabel>>& map);

/// Facets of an augmented Bergman complex split into the three layers of the
/// usual picture: pure flag facets, hybrid facets, and pure independent-set
/// facets.
struct LayerClassification {
  std::vector<std::vector<VertexLabel>> flag_only;
  std::vector<std::vector<VertexLabel>> hybrid;
  std::vector<std::vector<VertexLabel>> independent_only;
};

LayerClassification classify_layers(const SimplicialComplex& augmented);

}  // namespace bergman
