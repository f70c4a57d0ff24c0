#include "doctest.h"

#include <algorithm>
#include <bit>

#include "bergman/complexes.hpp"
#include "bergman/decompose.hpp"
#include "bergman/errors.hpp"
#include "bergman/instances.hpp"
#include "corpus.hpp"
#include "oracles.hpp"

using namespace bergman;

namespace {

VertexLabel y(const std::string& e) { return VertexLabel::ground(e); }

bool is_matroid_op(const ClosureOperator& op) { return is_matroid(op).is_matroid; }

}  // namespace

TEST_CASE("shedding vertices") {
  // No vertex of a full simplex sheds: deleting v leaves σ∖{v} as a facet of
  // the deletion but not of the simplex. Simplices are the base case of the
  // decomposition instead.
  SimplicialComplex simplex = complex_from_facets({{y("1"), y("2"), y("3")}});
  for (const auto& v : simplex.vertex_labels()) {
    SheddingCheck check = is_shedding_vertex(simplex, v);
    CHECK_FALSE(check.shedding);
    REQUIRE(check.witness.has_value());
    CHECK(check.witness->size() == 2);
  }

  SimplicialComplex path = complex_from_facets({{y("a"), y("b")}, {y("b"), y("c")}});
  SheddingCheck mid = is_shedding_vertex(path, y("b"));
  CHECK_FALSE(mid.shedding);
  REQUIRE(mid.witness.has_value());
  CHECK(mid.witness->size() == 1);  // {a} or {c}, a facet of the deletion only

  ClosureOperator u23 = uniform_matroid(2, corpus::ground(3));
  SimplicialComplex aug = augmented_bergman(u23);
  CHECK(is_shedding_vertex(aug, VertexLabel::flat({})).shedding);
  CHECK_THROWS_AS(is_shedding_vertex(aug, y("9")), InputError);
}

TEST_CASE("vertex decomposability search") {
  SimplicialComplex simplex = complex_from_facets({{y("1"), y("2"), y("3")}});
  VdResult leaf = is_vertex_decomposable(simplex);
  REQUIRE(leaf.status == SearchStatus::Found);
  CHECK(leaf.certificate->is_leaf());

  // Two triangles glued at one vertex: not vertex decomposable (it is not
  // even shellable).
  VdResult ind = is_vertex_decomposable(independence_complex(example_1_3()));
  CHECK(ind.status == SearchStatus::NotFound);

  VdResult aug = is_vertex_decomposable(augmented_bergman(uniform_matroid(2, corpus::ground(3))));
  REQUIRE(aug.status == SearchStatus::Found);
  CHECK(check_certificate(augmented_bergman(uniform_matroid(2, corpus::ground(3))),
                          *aug.certificate)
            .ok);

  VdResult starved =
      is_vertex_decomposable(augmented_bergman(uniform_matroid(2, corpus::ground(3))), 2);
  CHECK(starved.status == SearchStatus::BudgetExhausted);
}

TEST_CASE("certificate checking") {
  ClosureOperator u23 = uniform_matroid(2, corpus::ground(3));
  SimplicialComplex aug = augmented_bergman(u23);
  VdResult found = is_vertex_decomposable(aug);
  REQUIRE(found.status == SearchStatus::Found);
  CHECK(check_certificate(aug, *found.certificate).ok);

  // Swapping deletion and link children at an asymmetric node must fail.
  const Certificate& good = *found.certificate;
  REQUIRE_FALSE(good.is_leaf());
  Certificate swapped = Certificate::node(good.vertex(), good.link_child(), good.del_child());
  CHECK_FALSE(check_certificate(aug, swapped).ok);

  Certificate from_construction = matroid_vd_certificate(
      uniform_matroid(3, corpus::ground(4)), uniform_matroid(3, corpus::ground(4)).proper_flats());
  CHECK(check_certificate(augmented_bergman(uniform_matroid(3, corpus::ground(4))),
                          from_construction)
            .ok);

  // The void complex is accepted at a leaf, with a note.
  CertificateCheck void_leaf = check_certificate(SimplicialComplex(), Certificate::leaf());
  CHECK(void_leaf.ok);
  CHECK(void_leaf.used_void_leaf);
}

TEST_CASE("matroid certificates") {
  ClosureOperator u23 = uniform_matroid(2, corpus::ground(3));
  Certificate cert = matroid_vd_certificate(u23, u23.proper_flats());
  REQUIRE_FALSE(cert.is_leaf());
  CHECK(cert.vertex() == VertexLabel::flat({}));  // the bottom flat decomposes first
  CHECK(check_certificate(augmented_bergman(u23), cert).ok);

  // Empty upper-set: a certificate for the independence complex alone.
  Certificate ind_cert = matroid_vd_certificate(u23, {});
  CHECK(check_certificate(independence_complex(u23), ind_cert).ok);

  CHECK_THROWS_AS(matroid_vd_certificate(example_1_3(), {}), InputError);
  ElemMask bottom = 0;
  CHECK_THROWS_AS(matroid_vd_certificate(u23, {bottom}), InputError);  // not an upper-set
}

TEST_CASE("construction and generic search agree on matroids") {
  for (const auto& [name, op] : corpus::small_corpus()) {
    if (!is_matroid_op(op)) continue;
    CAPTURE(name);
    SimplicialComplex aug = augmented_bergman(op);
    Certificate constructed = matroid_vd_certificate(op, op.proper_flats());
    CHECK(check_certificate(aug, constructed).ok);
    VdResult searched = is_vertex_decomposable(aug);
    CHECK(searched.status == SearchStatus::Found);
  }
}

TEST_CASE("shelling from a certificate") {
  SimplicialComplex simplex = complex_from_facets({{y("1"), y("2")}});
  ShellingOrder single = shelling_from_certificate(simplex, Certificate::leaf());
  CHECK(single.facets.size() == 1);

  ClosureOperator u23 = uniform_matroid(2, corpus::ground(3));
  SimplicialComplex aug = augmented_bergman(u23);
  Certificate cert = matroid_vd_certificate(u23, u23.proper_flats());
  ShellingOrder order = shelling_from_certificate(aug, cert);
  CHECK(verify_shelling(aug, order).valid);
  CHECK(oracles::definitional_shelling_check(aug, order));

  CHECK_THROWS_AS(shelling_from_certificate(aug, Certificate::leaf()), InputError);
}

TEST_CASE("join of certified complexes is certified by the interleaving") {
  ClosureOperator u23 = uniform_matroid(2, corpus::ground(3));
  ClosureOperator shifted = uniform_matroid(1, {"7", "8"});
  SimplicialComplex left = independence_complex(u23);
  SimplicialComplex right = independence_complex(shifted);

  VdResult left_result = is_vertex_decomposable(left);
  VdResult right_result = is_vertex_decomposable(right);
  REQUIRE(left_result.status == SearchStatus::Found);
  REQUIRE(right_result.status == SearchStatus::Found);

  SimplicialComplex joined = join(left, right);
  Certificate combined = join_certificate(*left_result.certificate, *right_result.certificate);
  CHECK(check_certificate(joined, combined).ok);
}

TEST_CASE("every certificate produced anywhere passes the checker") {
  for (const auto& [name, op] : corpus::small_corpus()) {
    CAPTURE(name);
    SimplicialComplex aug = augmented_bergman(op);
    VdResult result = is_vertex_decomposable(aug);
    if (result.status == SearchStatus::Found) {
      CHECK(check_certificate(aug, *result.certificate).ok);
      ShellingOrder order = shelling_from_certificate(aug, *result.certificate);
      CHECK(verify_shelling(aug, order).valid);
    }
  }
}

TEST_CASE("the shedding step of the upper-set construction has explicit witnesses") {
  // For every facet (I, F_•) containing the decomposing vertex x_{F0}, the
  // replacement facet either extends I by some a with (I∪a, ∅) a facet, or
  // swaps x_{F0} out by choosing a in the second flat of the chain.
  for (const auto& [name, op] : corpus::small_corpus()) {
    if (!is_matroid_op(op)) continue;
    CAPTURE(name);
    for (const auto& upper : all_upper_sets(op)) {
      if (upper.empty()) continue;
      SimplicialComplex current = augmented_upperset(op, upper);

      ElemMask minimal = 0;
      bool have = false;
      for (ElemMask candidate : upper) {
        bool is_min = true;
        for (ElemMask below : upper)
          if (below != candidate && (below & ~candidate) == 0) is_min = false;
        if (is_min && (!have || mask_lex_less(candidate, minimal))) {
          minimal = candidate;
          have = true;
        }
      }
      VertexLabel shed = op.flat_label(minimal);

      for (const auto& facet : current.facets_as_labels()) {
        if (std::find(facet.begin(), facet.end(), shed) == facet.end()) continue;
        AugmentedFace face = augmented_face_from_labels(op, facet);
        REQUIRE(face.flag.chain.front() == minimal);

        ElemMask extension_pool = face.flag.chain.size() == 1
                                      ? (op.full_mask() & ~face.independent)
                                      : (face.flag.chain[1] & ~face.independent);
        bool found_replacement = false;
        for (ElemMask rest = extension_pool; rest && !found_replacement;) {
          ElemMask a = rest & (~rest + 1);
          rest ^= a;
          if (!op.is_independent(face.independent | a)) continue;
          AugmentedFace replacement;
          replacement.independent = face.independent | a;
          replacement.flag.chain.assign(face.flag.chain.begin() + 1, face.flag.chain.end());
          std::vector<VertexLabel> labels = augmented_face_labels(op, replacement);
          Bitset as_face = current.face_from_labels(labels);
          for (const Bitset& candidate_facet : current.facet_sets())
            if (candidate_facet == as_face) found_replacement = true;
        }
        CHECK(found_replacement);
      }
    }
  }
}
