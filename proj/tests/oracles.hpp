#pragma once

// Brute-force reference implementations used to compute expected values
// independently of the library's production paths. Everything here works on
// explicit face sets and stays deliberately naive.

#include <set>
#include <vector>

#include "bergman/closure_operator.hpp"
#include "bergman/shelling.hpp"
#include "bergman/simplicial_complex.hpp"

namespace oracles {

using LabelFace = std::vector<bergman::VertexLabel>;  // sorted
using FaceSet = std::set<LabelFace>;

/// Downward closure of the facets: every face of the complex.
FaceSet all_faces(const bergman::SimplicialComplex& complex);

/// Face counts by cardinality from scratch.
bergman::FaceVector face_vector(const bergman::SimplicialComplex& complex);

/// Deletion and link straight from their set definitions.
bergman::SimplicialComplex deletion(const bergman::SimplicialComplex& complex,
                                    const LabelFace& sigma);
bergman::SimplicialComplex link(const bergman::SimplicialComplex& complex,
                                const LabelFace& sigma);

/// f-polynomial convolution: f-vector of a join from the factor f-vectors.
bergman::FaceVector join_face_vector(const bergman::FaceVector& a, const bergman::FaceVector& b);

std::vector<long long> poly_mul(const std::vector<long long>& a,
                                const std::vector<long long>& b);
std::vector<long long> poly_trim(std::vector<long long> p);

/// Definitional shelling check: for each i >= 1 the complex generated by
/// {σ_j ∩ σ_i : j < i} must be nonvoid with all maximal faces of size
/// |σ_i| - 1.
bool definitional_shelling_check(const bergman::SimplicialComplex& complex,
                                 const bergman::ShellingOrder& order);

/// Definitional restriction sets; asserts the minimal new face is unique.
std::vector<LabelFace> definitional_restriction_sets(const bergman::SimplicialComplex& complex,
                                                     const bergman::ShellingOrder& order);

/// Closure axioms A ⊆ f(A), monotonicity, idempotence over every subset.
bool closure_axioms_hold(const bergman::ClosureOperator& f);

/// Every subset of an independent set is independent.
bool independence_hereditary(const bergman::ClosureOperator& f);

}  // namespace oracles
