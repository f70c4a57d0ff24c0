#include "bergman/decompose.hpp"

#include <algorithm>
#include <unordered_map>

#include "bergman/complexes.hpp"
#include "bergman/errors.hpp"

namespace bergman {

Certificate Certificate::leaf() { return Certificate(std::make_shared<Node>()); }

Certificate Certificate::node(VertexLabel vertex, Certificate del_child, Certificate link_child) {
  auto n = std::make_shared<Node>();
  n->vertex = std::move(vertex);
  n->del = del_child.root_;
  n->link = link_child.root_;
  return Certificate(std::move(n));
}

std::size_t Certificate::node_count() const {
  if (is_leaf()) return 1;
  return 1 + del_child().node_count() + link_child().node_count();
}

SheddingCheck is_shedding_vertex(const SimplicialComplex& complex, const VertexLabel& v) {
  if (!complex.has_vertex(v)) throw InputError("is_shedding_vertex: unknown vertex " + v.to_string());
  SimplicialComplex del = deletion(complex, {v});

  SheddingCheck out;
  for (const Bitset& facet : del.facet_sets()) {
    std::vector<VertexLabel> labels = del.face_labels(facet);
    Bitset in_parent = complex.face_from_labels(labels);
    bool is_facet = false;
    for (const Bitset& parent_facet : complex.facet_sets())
      if (parent_facet == in_parent) {
        is_facet = true;
        break;
      }
    if (!is_facet) {
      out.shedding = false;
      out.witness = std::move(labels);
      return out;
    }
  }
  out.shedding = true;
  return out;
}

namespace {

class VdSearch {
 public:
  explicit VdSearch(std::uint64_t budget) : budget_(budget) {}

  enum class Out { Found, NotVd, Budget };

  Out search(const SimplicialComplex& complex, Certificate* result) {
    if (++nodes_ > budget_) return Out::Budget;
    if (complex.is_simplex()) {
      *result = Certificate::leaf();
      return Out::Found;
    }
    std::string key = complex.canonical_key();
    auto hit = memo_.find(key);
    if (hit != memo_.end()) {
      if (!hit->second.has_value()) return Out::NotVd;
      *result = *hit->second;
      return Out::Found;
    }

    // Only shedding vertices can be decomposing; vertex labels are already
    // in lexicographic order, so the first success is the lex-least one.
    for (const VertexLabel& v : complex.vertex_labels()) {
      if (!is_shedding_vertex(complex, v).shedding) continue;
      Certificate del_cert = Certificate::leaf(), link_cert = Certificate::leaf();
      Out del_out = search(deletion(complex, {v}), &del_cert);
      if (del_out == Out::Budget) return Out::Budget;
      if (del_out == Out::NotVd) continue;
      Out link_out = search(link(complex, {v}), &link_cert);
      if (link_out == Out::Budget) return Out::Budget;
      if (link_out == Out::NotVd) continue;
      Certificate cert = Certificate::node(v, del_cert, link_cert);
      memo_.emplace(std::move(key), cert);
      *result = cert;
      return Out::Found;
    }
    memo_.emplace(std::move(key), std::nullopt);
    return Out::NotVd;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::unordered_map<std::string, std::optional<Certificate>> memo_;
};

}  // namespace

VdResult is_vertex_decomposable(const SimplicialComplex& complex, std::uint64_t budget) {
  VdSearch search(budget);
  Certificate cert = Certificate::leaf();
  VdSearch::Out out = search.search(complex, &cert);
  VdResult result;
  result.nodes = search.nodes();
  switch (out) {
    case VdSearch::Out::Found:
      result.status = SearchStatus::Found;
      result.certificate = cert;
      break;
    case VdSearch::Out::NotVd:
      result.status = SearchStatus::NotFound;
      break;
    case VdSearch::Out::Budget:
      result.status = SearchStatus::BudgetExhausted;
      break;
  }
  return result;
}

namespace {

bool check_walk(const SimplicialComplex& complex, const Certificate& cert, std::string path,
                CertificateCheck* out) {
  if (cert.is_leaf()) {
    if (complex.is_void()) {
      out->used_void_leaf = true;
      return true;
    }
    if (complex.facet_count() == 1) return true;
    out->failure_path = path;
    out->reason = "leaf on a complex with " + std::to_string(complex.facet_count()) + " facets";
    return false;
  }

  const VertexLabel& v = cert.vertex();
  if (!complex.has_vertex(v)) {
    out->failure_path = path;
    out->reason = "vertex " + v.to_string() + " is not in the complex";
    return false;
  }
  SheddingCheck shed = is_shedding_vertex(complex, v);
  if (!shed.shedding) {
    out->failure_path = path;
    out->reason = "vertex " + v.to_string() + " is not shedding";
    return false;
  }
  std::string prefix = path.empty() ? v.to_string() : path + "." + v.to_string();
  return check_walk(deletion(complex, {v}), cert.del_child(), prefix + ":del", out) &&
         check_walk(link(complex, {v}), cert.link_child(), prefix + ":link", out);
}

}  // namespace

CertificateCheck check_certificate(const SimplicialComplex& complex, const Certificate& cert) {
  CertificateCheck out;
  out.ok = check_walk(complex, cert, "", &out);
  if (out.ok) out.reason = "certificate verified";
  return out;
}

namespace {

}  // namespace

Certificate join_certificate(const Certificate& left, const Certificate& right) {
  if (!left.is_leaf())
    return Certificate::node(left.vertex(), join_certificate(left.del_child(), right),
                             join_certificate(left.link_child(), right));
  if (!right.is_leaf())
    return Certificate::node(right.vertex(), join_certificate(left, right.del_child()),
                             join_certificate(left, right.link_child()));
  return Certificate::leaf();
}

namespace {

// Certificate for a matroid independence complex: any vertex decomposes.
Certificate independence_certificate(const SimplicialComplex& complex) {
  if (complex.is_simplex()) return Certificate::leaf();
  const VertexLabel v = complex.vertex_labels().front();
  return Certificate::node(v, independence_certificate(deletion(complex, {v})),
                           independence_certificate(link(complex, {v})));
}

struct UppersetContext {
  const ClosureOperator& matroid;
  const SimplicialComplex& full;  // Δ(M)
  std::uint64_t budget;
};

SimplicialComplex induced_on_upperset(const UppersetContext& ctx,
                                      const std::vector<ElemMask>& upper_set) {
  std::vector<VertexLabel> keep;
  for (const VertexLabel& v : ctx.full.vertex_labels()) {
    if (v.is_ground()) {
      keep.push_back(v);
    } else {
      ElemMask m = ctx.matroid.mask_from_names(v.elements());
      if (std::binary_search(upper_set.begin(), upper_set.end(), m, &mask_lex_less))
        keep.push_back(v);
    }
  }
  return induced(ctx.full, keep);
}

Certificate upperset_certificate(const UppersetContext& ctx,
                                 std::vector<ElemMask> upper_set) {
  SimplicialComplex current = induced_on_upperset(ctx, upper_set);
  if (upper_set.empty()) return independence_certificate(current);

  // Lex-least minimal element of the upper-set.
  ElemMask minimal = 0;
  bool have = false;
  for (ElemMask candidate : upper_set) {
    bool is_minimal = true;
    for (ElemMask below : upper_set)
      if (below != candidate && (below & ~candidate) == 0) {
        is_minimal = false;
        break;
      }
    if (is_minimal && (!have || mask_lex_less(candidate, minimal))) {
      minimal = candidate;
      have = true;
    }
  }

  const VertexLabel shed_vertex = ctx.matroid.flat_label(minimal);
  std::vector<ElemMask> rest;
  for (ElemMask m : upper_set)
    if (m != minimal) rest.push_back(m);
  Certificate del_cert = upperset_certificate(ctx, rest);

  // The link splits as I(M|_F0) ∗ B(M/F0); certify the factors and
  // interleave.
  SimplicialComplex link_complex = link(current, {shed_vertex});
  std::vector<VertexLabel> ground_side, flat_side;
  for (const VertexLabel& v : link_complex.vertex_labels())
    (v.is_ground() ? ground_side : flat_side).push_back(v);
  SimplicialComplex left = induced(link_complex, ground_side);
  SimplicialComplex right = induced(link_complex, flat_side);
  if (join(left, right) != link_complex)
    throw Error("matroid_vd_certificate: link of " + shed_vertex.to_string() +
                " does not factor as a join; the operator is not a matroid");

  Certificate left_cert = independence_certificate(left);
  VdResult right_result = is_vertex_decomposable(right, ctx.budget);
  if (right_result.status == SearchStatus::BudgetExhausted)
    throw BudgetError("matroid_vd_certificate: budget exhausted on a Bergman factor");
  if (right_result.status == SearchStatus::NotFound)
    throw Error("matroid_vd_certificate: Bergman factor is not vertex decomposable");

  return Certificate::node(shed_vertex, del_cert,
                           join_certificate(left_cert, *right_result.certificate));
}

}  // namespace

Certificate matroid_vd_certificate(const ClosureOperator& matroid,
                                   const std::vector<ElemMask>& upper_set, std::uint64_t budget,
                                   int max_ground_size) {
  MatroidCheck check = is_matroid(matroid, max_ground_size);
  if (!check.is_matroid)
    throw InputError("matroid_vd_certificate: not a matroid (" + check.reason + ")");

  std::vector<ElemMask> sorted = upper_set;
  std::sort(sorted.begin(), sorted.end(), &mask_lex_less);
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (ElemMask m : sorted) {
    if (!matroid.is_flat(m) || m == matroid.full_mask())
      throw InputError("matroid_vd_certificate: member is not a proper flat");
    for (ElemMask high : matroid.proper_flats()) {
      if (high != m && (m & ~high) == 0 &&
          !std::binary_search(sorted.begin(), sorted.end(), high, &mask_lex_less))
        throw InputError("matroid_vd_certificate: not an upper-set, " +
                         matroid.flat_label(m).to_string() + " is in but " +
                         matroid.flat_label(high).to_string() + " is not");
    }
  }

  SimplicialComplex full = augmented_bergman(matroid, max_ground_size);
  UppersetContext ctx{matroid, full, budget};
  return upperset_certificate(ctx, std::move(sorted));
}

namespace {

void build_order(const SimplicialComplex& complex, const Certificate& cert,
                 std::vector<std::vector<VertexLabel>>* out) {
  if (cert.is_leaf()) {
    if (!complex.is_void()) out->push_back(complex.face_labels(complex.facet_sets().front()));
    return;
  }
  const VertexLabel& v = cert.vertex();
  build_order(deletion(complex, {v}), cert.del_child(), out);

  std::vector<std::vector<VertexLabel>> from_link;
  build_order(link(complex, {v}), cert.link_child(), &from_link);
  for (auto& facet : from_link) {
    facet.push_back(v);
    std::sort(facet.begin(), facet.end());
    out->push_back(std::move(facet));
  }
}

}  // namespace

ShellingOrder shelling_from_certificate(const SimplicialComplex& complex,
                                        const Certificate& cert) {
  CertificateCheck check = check_certificate(complex, cert);
  if (!check.ok)
    throw InputError("shelling_from_certificate: invalid certificate at '" +
                     check.failure_path + "': " + check.reason);

  ShellingOrder order;
  build_order(complex, cert, &order.facets);
  ShellingReport report = verify_shelling(complex, order);
  if (!report.valid)
    throw Error("shelling_from_certificate: derived order failed verification: " +
                report.message);
  return order;
}

}  // namespace bergman
