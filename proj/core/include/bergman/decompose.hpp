#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bergman/closure_operator.hpp"
#include "bergman/shelling.hpp"
#include "bergman/simplicial_complex.hpp"

namespace bergman {

/// Binary witness tree for vertex decomposability: a leaf asserts the
/// complex is a simplex (one facet, possibly ∅), a node names a decomposing
/// vertex and certifies its deletion and link. Immutable; subtrees are
/// shared.
class Certificate {
 public:
  static Certificate leaf();
  static Certificate node(VertexLabel vertex, Certificate del_child, Certificate link_child);

  bool is_leaf() const { return !root_->vertex.has_value(); }
  const VertexLabel& vertex() const { return *root_->vertex; }
  Certificate del_child() const { return Certificate(root_->del); }
  Certificate link_child() const { return Certificate(root_->link); }

  std::size_t node_count() const;

 private:
  struct Node {
    std::optional<VertexLabel> vertex;
    std::shared_ptr<const Node> del, link;
  };
  explicit Certificate(std::shared_ptr<const Node> root) : root_(std::move(root)) {}
  std::shared_ptr<const Node> root_;
};

struct SheddingCheck {
  bool shedding = false;
  /// A facet of del(v) that is not a facet of the complex, when not shedding.
  std::optional<std::vector<VertexLabel>> witness;
};

/// v is shedding iff every facet of del_Δ(v) is a facet of Δ.
SheddingCheck is_shedding_vertex(const SimplicialComplex& complex, const VertexLabel& v);

struct VdResult {
  SearchStatus status = SearchStatus::NotFound;
  std::optional<Certificate> certificate;
  std::uint64_t nodes = 0;
};

/// Exhaustive memoized search over decomposing vertices. NotFound is a proof
/// of exhaustion; running out of budget never claims it.
VdResult is_vertex_decomposable(const SimplicialComplex& complex,
                                std::uint64_t budget = kDefaultSearchBudget);

struct CertificateCheck {
  bool ok = false;
  /// Dotted del/link path to the failing node, empty when ok.
  std::string failure_path;
  std::string reason;
  /// The void complex is accepted at a leaf by convention; noted here.
  bool used_void_leaf = false;
};

CertificateCheck check_certificate(const SimplicialComplex& complex, const Certificate& cert);

/// Certificate for a join of certified complexes: the left factor's
/// decomposing vertices are used up first, then the right factor's.
Certificate join_certificate(const Certificate& left, const Certificate& right);

/// Certificate for the induced subcomplex Δ_M(L) of a matroid's augmented
/// Bergman complex, built by induction on the upper-set L: the root sheds
/// x_{F0} for the lex-least minimal flat F0; the link splits as the join of
/// an independence complex (any vertex decomposes) and a Bergman complex
/// (certified by generic search).
Certificate matroid_vd_certificate(const ClosureOperator& matroid,
                                   const std::vector<ElemMask>& upper_set,
                                   std::uint64_t budget = kDefaultSearchBudget,
                                   int max_ground_size = kDefaultEnumerationBudget);

/// Shelling induced by a valid certificate: the deletion side's shelling
/// followed by the link side's shelling joined with the decomposing vertex.
ShellingOrder shelling_from_certificate(const SimplicialComplex& complex,
                                        const Certificate& cert);

}  // namespace bergman
