#include "doctest.h"

#include "bergman/complexes.hpp"
#include "bergman/errors.hpp"
#include "bergman/instances.hpp"
#include "corpus.hpp"
#include "oracles.hpp"

using namespace bergman;

namespace {

SimplicialComplex relabeled_join(const LinkFactorization& parts) {
  return join(parts.restriction_part,
              relabel_vertices(parts.contraction_part, parts.relabel));
}

}  // namespace

TEST_CASE("bergman complex shapes") {
  ClosureOperator u23 = uniform_matroid(2, corpus::ground(3));
  SimplicialComplex b = bergman_complex(u23);
  CHECK(b.facet_count() == 3);  // three isolated flat vertices
  for (const auto& facet : b.facets_as_labels()) CHECK(facet.size() == 1);

  SimplicialComplex ex = bergman_complex(example_1_3());
  ComplexStats s = stats(ex);
  CHECK(s.f.entries == std::vector<long long>{1, 11, 12});

  CHECK(bergman_complex(uniform_matroid(1, corpus::ground(1))).is_empty_complex());
}

TEST_CASE("cone over the bergman complex") {
  ClosureOperator u23 = uniform_matroid(2, corpus::ground(3));
  SimplicialComplex cone = cone_bergman(u23);
  CHECK(cone.facet_count() == 3);
  VertexLabel apex = VertexLabel::flat({});
  for (const auto& facet : cone.facets_as_labels()) {
    CHECK(facet.size() == 2);
    CHECK(std::count(facet.begin(), facet.end(), apex) == 1);
  }

  // Cone over {∅} is a single vertex.
  SimplicialComplex point = cone_bergman(uniform_matroid(1, corpus::ground(1)));
  CHECK(point == complex_from_facets({{apex}}));

  ClosureOperator degenerate = ClosureOperator::validate({"1"}, {{"1"}});
  CHECK_THROWS_AS(cone_bergman(degenerate), InputError);

  // The bundled operator: one triangle per maximal flag.
  SimplicialComplex ex_cone = cone_bergman(example_1_3());
  CHECK(ex_cone.facet_count() == 12);
  CHECK(stats(ex_cone).dimension == 2);
}

TEST_CASE("independence complexes") {
  SimplicialComplex ind = independence_complex(example_1_3());
  CHECK(ind.facet_count() == 6);

  SimplicialComplex u23 = independence_complex(uniform_matroid(2, corpus::ground(3)));
  CHECK(u23 == complex_from_facets({{VertexLabel::ground("1"), VertexLabel::ground("2")},
                                    {VertexLabel::ground("1"), VertexLabel::ground("3")},
                                    {VertexLabel::ground("2"), VertexLabel::ground("3")}}));

  ClosureOperator degenerate = ClosureOperator::validate({"1"}, {{"1"}});
  CHECK(independence_complex(degenerate).is_empty_complex());
}

TEST_CASE("augmented bergman complex of the bundled operator") {
  SimplicialComplex aug = augmented_bergman(example_1_3());
  CHECK(aug.facet_count() == 36);

  ComplexStats s = stats(aug);
  CHECK(s.f.entries == std::vector<long long>{1, 17, 50, 32});
  CHECK(s.f == oracles::face_vector(aug));
  CHECK_FALSE(s.pure);
  CHECK(s.dimension == 2);
  CHECK(s.h == std::vector<long long>{1, 14, 19, -2});

  LayerClassification layers = classify_layers(aug);
  CHECK(layers.flag_only.size() == 12);
  CHECK(layers.hybrid.size() == 18);
  CHECK(layers.independent_only.size() == 6);
}

TEST_CASE("augmented bergman complex of tiny operators") {
  SimplicialComplex u11 = augmented_bergman(uniform_matroid(1, corpus::ground(1)));
  CHECK(u11 == complex_from_facets({{VertexLabel::flat({})}, {VertexLabel::ground("1")}}));

  ClosureOperator degenerate = ClosureOperator::validate({"1"}, {{"1"}});
  CHECK(augmented_bergman(degenerate).is_empty_complex());
}

TEST_CASE("induced subcomplexes of the augmented complex recover both parts") {
  for (const auto& [name, op] : corpus::named_operators()) {
    CAPTURE(name);
    SimplicialComplex aug = augmented_bergman(op);
    if (aug.is_empty_complex()) continue;

    std::vector<VertexLabel> ground_side, flat_side;
    for (const auto& v : aug.vertex_labels())
      (v.is_ground() ? ground_side : flat_side).push_back(v);

    CHECK(induced(aug, ground_side) == independence_complex(op));
    if (op.closure_of_empty() != op.full_mask())
      CHECK(induced(aug, flat_side) == cone_bergman(op));
  }
}

TEST_CASE("direct facet enumeration matches brute force on the corpus") {
  for (const auto& [name, op] : corpus::small_corpus()) {
    CAPTURE(name);
    CHECK(augmented_bergman(op) == augmented_bergman_bruteforce(op));
  }
  // One six-element instance to push the facet characterization further.
  ClosureOperator six = random_closure_operator(271828, corpus::ground(6), 0.12);
  CHECK(augmented_bergman(six) == augmented_bergman_bruteforce(six));
}

TEST_CASE("augmented faces decompose uniquely and validate") {
  ClosureOperator ex = example_1_3();
  SimplicialComplex aug = augmented_bergman(ex);
  for (const auto& facet : aug.facets_as_labels()) {
    AugmentedFace face = augmented_face_from_labels(ex, facet);
    CHECK(augmented_face_labels(ex, face) == facet);
  }
  CHECK_THROWS_AS(
      augmented_face_from_labels(
          ex, {VertexLabel::ground("3"), VertexLabel::flat({})}),  // f({3}) ⊄ ∅
      InputError);
}

TEST_CASE("upper-set subcomplexes") {
  ClosureOperator u23 = uniform_matroid(2, corpus::ground(3));

  CHECK(augmented_upperset(u23, {}) == independence_complex(u23));

  std::vector<ElemMask> all = u23.proper_flats();
  CHECK(augmented_upperset(u23, all) == augmented_bergman(u23));

  // Dropping only the bottom flat deletes exactly the cone vertex.
  std::vector<ElemMask> singles;
  for (ElemMask m : all)
    if (m != 0) singles.push_back(m);
  SimplicialComplex expected = deletion(augmented_bergman(u23), {VertexLabel::flat({})});
  CHECK(augmented_upperset(u23, singles) == expected);

  // Not an upper-set: contains ∅ but not a singleton above it.
  CHECK_THROWS_AS(augmented_upperset(u23, {0}), InputError);
  CHECK_THROWS_AS(augmented_upperset(example_1_3(), {}), InputError);  // not a matroid
}

TEST_CASE("all_upper_sets enumerates upward-closed families") {
  ClosureOperator u23 = uniform_matroid(2, corpus::ground(3));
  std::vector<std::vector<ElemMask>> sets = all_upper_sets(u23);
  CHECK(sets.size() == 9);  // any subset of the singletons, plus everything
  for (const auto& s : sets) CHECK_NOTHROW(augmented_upperset(u23, s));
}

TEST_CASE("link of a flat vertex factors as restriction times contraction") {
  ClosureOperator ex = example_1_3();
  ElemMask three = ex.mask_from_names({"3"});
  LinkFactorization parts = link_factorization(ex, three);

  // Left factor: two isolated vertices x_{} and y_3 (no edge, since the
  // closure of {3} is not contained in ∅).
  CHECK(parts.restriction_part ==
        complex_from_facets({{VertexLabel::flat({})}, {VertexLabel::ground("3")}}));
  // Right factor: the four flat pairs through 3, isolated.
  CHECK(parts.contraction_part.facet_count() == 4);

  SimplicialComplex lhs = link(augmented_bergman(ex), {ex.flat_label(three)});
  CHECK(relabeled_join(parts) == lhs);
}

TEST_CASE("link of the cone vertex is the bergman complex when f(∅) = ∅") {
  for (const auto& [name, op] : corpus::named_operators()) {
    CAPTURE(name);
    if (op.closure_of_empty() != 0 || op.full_mask() == 0) continue;
    SimplicialComplex aug = augmented_bergman(op);
    VertexLabel apex = VertexLabel::flat({});
    if (!aug.has_vertex(apex)) continue;
    LinkFactorization parts = link_factorization(op, 0);
    CHECK(parts.restriction_part.is_empty_complex());
    CHECK(relabeled_join(parts) == link(aug, {apex}));
    CHECK(link(aug, {apex}) == bergman_complex(op));
  }
}

TEST_CASE("link factorization on a singleton flat of the triangle matroid") {
  ClosureOperator u23 = uniform_matroid(2, corpus::ground(3));
  ElemMask one = u23.mask_from_names({"1"});
  LinkFactorization parts = link_factorization(u23, one);
  CHECK(parts.restriction_part ==
        complex_from_facets({{VertexLabel::flat({})}, {VertexLabel::ground("1")}}));
  CHECK(parts.contraction_part.is_empty_complex());
  SimplicialComplex joined = relabeled_join(parts);
  CHECK(joined.facet_count() == 2);
  CHECK(joined == link(augmented_bergman(u23), {u23.flat_label(one)}));
}

TEST_CASE("link factorization holds for every proper flat over the corpus") {
  for (const auto& [name, op] : corpus::small_corpus()) {
    CAPTURE(name);
    SimplicialComplex aug = augmented_bergman(op);
    for (ElemMask flat : op.proper_flats()) {
      CAPTURE(op.flat_label(flat).to_string());
      LinkFactorization parts = link_factorization(op, flat);
      CHECK(relabeled_join(parts) == link(aug, {op.flat_label(flat)}));
    }
  }
}

TEST_CASE("layer export classifies every facet exactly once") {
  for (const auto& [name, op] : corpus::named_operators()) {
    CAPTURE(name);
    SimplicialComplex aug = augmented_bergman(op);
    LayerClassification layers = classify_layers(aug);
    CHECK(layers.flag_only.size() + layers.hybrid.size() + layers.independent_only.size() ==
          aug.facet_count());
  }
}
