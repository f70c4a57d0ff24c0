#include "oracles.hpp"

#include <algorithm>

namespace oracles {

using bergman::Bitset;
using bergman::ClosureOperator;
using bergman::ElemMask;
using bergman::FaceVector;
using bergman::ShellingOrder;
using bergman::SimplicialComplex;
using bergman::VertexLabel;

FaceSet all_faces(const SimplicialComplex& complex) {
  FaceSet out;
  for (const auto& facet : complex.facets_as_labels()) {
    const std::size_t n = facet.size();
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << n); ++pick) {
      LabelFace face;
      for (std::size_t i = 0; i < n; ++i)
        if (pick & (std::uint64_t{1} << i)) face.push_back(facet[i]);
      out.insert(face);
    }
  }
  return out;
}

FaceVector face_vector(const SimplicialComplex& complex) {
  FaceSet faces = all_faces(complex);
  std::size_t top = 0;
  for (const auto& face : faces) top = std::max(top, face.size());
  FaceVector out;
  out.entries.assign(top + 1, 0);
  for (const auto& face : faces) out.entries[face.size()]++;
  return out;
}

namespace {

SimplicialComplex from_face_set(const FaceSet& faces) {
  std::vector<LabelFace> list(faces.begin(), faces.end());
  return SimplicialComplex::from_faces(list);
}

bool contains_all(const LabelFace& big, const LabelFace& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

LabelFace remove_all(const LabelFace& face, const LabelFace& sigma) {
  LabelFace out;
  for (const auto& v : face)
    if (std::find(sigma.begin(), sigma.end(), v) == sigma.end()) out.push_back(v);
  return out;
}

}  // namespace

SimplicialComplex deletion(const SimplicialComplex& complex, const LabelFace& sigma) {
  LabelFace s = sigma;
  std::sort(s.begin(), s.end());
  FaceSet out;
  for (const auto& face : all_faces(complex)) out.insert(remove_all(face, s));
  return from_face_set(out);
}

SimplicialComplex link(const SimplicialComplex& complex, const LabelFace& sigma) {
  LabelFace s = sigma;
  std::sort(s.begin(), s.end());
  FaceSet out;
  for (const auto& face : all_faces(complex))
    if (contains_all(face, s)) out.insert(remove_all(face, s));
  return from_face_set(out);
}

FaceVector join_face_vector(const FaceVector& a, const FaceVector& b) {
  FaceVector out;
  out.entries = poly_mul(a.entries, b.entries);
  return out;
}

std::vector<long long> poly_mul(const std::vector<long long>& a,
                                const std::vector<long long>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<long long> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

std::vector<long long> poly_trim(std::vector<long long> p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

bool definitional_shelling_check(const SimplicialComplex& complex, const ShellingOrder& order) {
  std::vector<LabelFace> sorted;
  for (const auto& facet : order.facets) {
    LabelFace f = facet;
    std::sort(f.begin(), f.end());
    sorted.push_back(f);
  }
  {
    // Must enumerate exactly the facet set.
    std::set<LabelFace> given(sorted.begin(), sorted.end());
    std::set<LabelFace> actual;
    for (const auto& facet : complex.facets_as_labels()) actual.insert(facet);
    if (given != actual || given.size() != order.facets.size()) return false;
  }

  for (std::size_t i = 1; i < sorted.size(); ++i) {
    // Faces of <σ_1..σ_{i-1}> ∩ <σ_i> are the subsets of the pairwise
    // intersections.
    std::set<LabelFace> intersections;
    for (std::size_t j = 0; j < i; ++j) {
      LabelFace meet;
      std::set_intersection(sorted[i].begin(), sorted[i].end(), sorted[j].begin(),
                            sorted[j].end(), std::back_inserter(meet));
      intersections.insert(meet);
    }
    // Maximal intersections must all have size |σ_i| - 1.
    for (const auto& face : intersections) {
      bool maximal = true;
      for (const auto& other : intersections)
        if (other != face && contains_all(other, face)) {
          maximal = false;
          break;
        }
      if (maximal && face.size() != sorted[i].size() - 1) return false;
    }
  }
  return true;
}

std::vector<LabelFace> definitional_restriction_sets(const SimplicialComplex& complex,
                                                     const ShellingOrder& order) {
  std::vector<LabelFace> sorted;
  for (const auto& facet : order.facets) {
    LabelFace f = facet;
    std::sort(f.begin(), f.end());
    sorted.push_back(f);
  }
  std::vector<LabelFace> out;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    // All subsets of σ_i contained in no earlier facet; keep the minimal
    // ones and insist there is exactly one.
    std::vector<LabelFace> fresh;
    const std::size_t n = sorted[i].size();
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << n); ++pick) {
      LabelFace face;
      for (std::size_t k = 0; k < n; ++k)
        if (pick & (std::uint64_t{1} << k)) face.push_back(sorted[i][k]);
      bool seen_before = false;
      for (std::size_t j = 0; j < i && !seen_before; ++j)
        seen_before = contains_all(sorted[j], face);
      if (!seen_before) fresh.push_back(face);
    }
    std::vector<LabelFace> minimal;
    for (const auto& face : fresh) {
      bool is_minimal = true;
      for (const auto& other : fresh)
        if (other != face && contains_all(face, other)) {
          is_minimal = false;
          break;
        }
      if (is_minimal) minimal.push_back(face);
    }
    if (minimal.size() != 1) throw std::logic_error("restriction set is not unique");
    out.push_back(minimal.front());
  }
  return out;
}

bool closure_axioms_hold(const ClosureOperator& f) {
  const ElemMask full = f.full_mask();
  const std::uint64_t limit = ElemMask{1} << f.ground_size();
  for (ElemMask a = 0; a < limit; ++a) {
    ElemMask ca = f.closure(a);
    if (a & ~ca) return false;                      // A ⊆ f(A)
    if (f.closure(ca) != ca) return false;          // f(f(A)) = f(A)
    for (ElemMask b = a; b < limit; ++b) {
      if ((a & ~b) == 0 && (ca & ~f.closure(b))) return false;  // monotone
    }
  }
  return (f.closure(full) == full);
}

bool independence_hereditary(const ClosureOperator& f) {
  const std::uint64_t limit = ElemMask{1} << f.ground_size();
  for (ElemMask s = 0; s < limit; ++s) {
    if (!f.is_independent(s)) continue;
    for (ElemMask rest = s; rest;) {
      ElemMask bit = rest & (~rest + 1);
      rest ^= bit;
      if (!f.is_independent(s ^ bit)) return false;
    }
  }
  return true;
}

}  // namespace oracles
