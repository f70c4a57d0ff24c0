#include "bergman/complexes.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "bergman/errors.hpp"

namespace bergman {

namespace {

bool strict_subset(ElemMask a, ElemMask b) { return a != b && (a & ~b) == 0; }

// Cover structure of the flat lattice restricted to proper flats, plus
// which proper flats are covered by E.
struct FlatCovers {
  std::vector<ElemMask> proper;                 // sorted by mask_lex_less
  std::map<ElemMask, std::vector<ElemMask>> up; // covers within proper flats
  std::map<ElemMask, bool> coatom;              // covered by E
};

FlatCovers flat_covers(const ClosureOperator& f) {
  FlatCovers out;
  out.proper = f.proper_flats();
  for (ElemMask low : out.proper) {
    out.up[low] = {};
    bool nothing_between_top = true;
    for (ElemMask high : out.proper) {
      if (!strict_subset(low, high)) continue;
      nothing_between_top = false;
      bool covered = false;
      for (ElemMask mid : out.proper) {
        if (mid != low && mid != high && strict_subset(low, mid) && strict_subset(mid, high)) {
          covered = true;
          break;
        }
      }
      if (!covered) out.up[low].push_back(high);
    }
    out.coatom[low] = nothing_between_top;
  }
  return out;
}

// Saturated chains from `start` to a coatom (inclusive), as flat lists.
void saturated_chains_from(const FlatCovers& covers, ElemMask start,
                           std::vector<ElemMask>& chain,
                           std::vector<std::vector<ElemMask>>& out) {
  chain.push_back(start);
  if (covers.coatom.at(start)) out.push_back(chain);
  for (ElemMask next : covers.up.at(start)) saturated_chains_from(covers, next, chain, out);
  chain.pop_back();
}

std::vector<VertexLabel> face_of(const ClosureOperator& f, ElemMask independent,
                                 const std::vector<ElemMask>& chain) {
  std::vector<VertexLabel> face;
  for (const std::string& name : f.names_from_mask(independent))
    face.push_back(VertexLabel::ground(name));
  for (ElemMask flat : chain) face.push_back(f.flat_label(flat));
  return face;
}

}  // namespace

AugmentedFace augmented_face_from_labels(const ClosureOperator& f,
                                         const std::vector<VertexLabel>& face) {
  AugmentedFace out;
  std::vector<std::string> ground;
  for (const VertexLabel& v : face) {
    if (v.is_ground()) ground.push_back(v.element());
    else out.flag.chain.push_back(f.mask_from_names(v.elements()));
  }
  out.independent = f.mask_from_names(ground);
  std::sort(out.flag.chain.begin(), out.flag.chain.end(),
            [](ElemMask a, ElemMask b) { return std::popcount(a) < std::popcount(b); });
  if (!f.is_independent(out.independent))
    throw InputError("face has a dependent ground part");
  check_flag(f, out.flag);
  if (!out.flag.chain.empty() && (f.closure(out.independent) & ~out.flag.chain.front()))
    throw InputError("face flag is incompatible with its independent set");
  return out;
}

std::vector<VertexLabel> augmented_face_labels(const ClosureOperator& f,
                                               const AugmentedFace& face) {
  std::vector<VertexLabel> out = face_of(f, face.independent, face.flag.chain);
  std::sort(out.begin(), out.end());
  return out;
}

SimplicialComplex bergman_complex(const ClosureOperator& f) {
  const ElemMask bottom = f.closure_of_empty();
  FlatCovers covers = flat_covers(f);

  std::vector<ElemMask> between;
  for (ElemMask m : covers.proper)
    if (m != bottom) between.push_back(m);
  if (between.empty())
    return SimplicialComplex::from_faces({{}});

  // Maximal chains run from covers of the bottom flat to coatoms.
  std::vector<std::vector<VertexLabel>> facets;
  std::vector<std::vector<ElemMask>> chains;
  std::vector<ElemMask> chain;
  for (ElemMask atom : covers.up.at(bottom)) saturated_chains_from(covers, atom, chain, chains);
  for (const auto& c : chains) facets.push_back(face_of(f, 0, c));
  return SimplicialComplex::from_faces(facets);
}

SimplicialComplex cone_bergman(const ClosureOperator& f) {
  const ElemMask bottom = f.closure_of_empty();
  if (bottom == f.full_mask())
    throw InputError("cone_bergman: f(∅) = E, there is no cone vertex");
  SimplicialComplex apex = SimplicialComplex::from_faces({{f.flat_label(bottom)}});
  return join(bergman_complex(f), apex);
}

SimplicialComplex independence_complex(const ClosureOperator& f, int max_ground_size) {
  Enumeration e = enumerate_sets(f, max_ground_size);
  std::vector<std::vector<VertexLabel>> facets;
  for (ElemMask m : e.maximal_independent_sets) facets.push_back(face_of(f, m, {}));
  return SimplicialComplex::from_faces(facets);
}

SimplicialComplex augmented_bergman(const ClosureOperator& f, int max_ground_size) {
  Enumeration e = enumerate_sets(f, max_ground_size);
  FlatCovers covers = flat_covers(f);

  // Chains reused across independent sets with the same closure.
  std::map<ElemMask, std::vector<std::vector<ElemMask>>> chains_from;
  auto chains_at = [&](ElemMask flat) -> const std::vector<std::vector<ElemMask>>& {
    auto it = chains_from.find(flat);
    if (it == chains_from.end()) {
      std::vector<std::vector<ElemMask>> chains;
      std::vector<ElemMask> chain;
      saturated_chains_from(covers, flat, chain, chains);
      it = chains_from.emplace(flat, std::move(chains)).first;
    }
    return it->second;
  };

  std::vector<std::vector<VertexLabel>> facets;
  for (ElemMask independent : e.independent_sets) {
    ElemMask top = f.closure(independent);
    if (top == f.full_mask()) {
      facets.push_back(face_of(f, independent, {}));
      continue;
    }
    for (const auto& c : chains_at(top)) facets.push_back(face_of(f, independent, c));
  }
  return SimplicialComplex::from_faces(facets);
}

SimplicialComplex augmented_bergman_bruteforce(const ClosureOperator& f, int max_ground_size) {
  Enumeration e = enumerate_sets(f, max_ground_size);

  std::vector<std::vector<VertexLabel>> faces;
  std::vector<ElemMask> chain;
  // All chains of proper flats above `low`, every prefix emitted.
  auto extend = [&](auto&& self, const ClosureOperator& op, ElemMask independent,
                    ElemMask low) -> void {
    faces.push_back(face_of(op, independent, chain));
    for (ElemMask next : op.proper_flats()) {
      if (chain.empty() ? (low & ~next) != 0 : !strict_subset(chain.back(), next)) continue;
      chain.push_back(next);
      self(self, op, independent, low);
      chain.pop_back();
    }
  };
  for (ElemMask independent : e.independent_sets)
    extend(extend, f, independent, f.closure(independent));
  return SimplicialComplex::from_faces(faces);
}

std::vector<std::vector<ElemMask>> all_upper_sets(const ClosureOperator& f) {
  std::vector<ElemMask> proper = f.proper_flats();
  const std::size_t n = proper.size();
  if (n > 20) throw BudgetError("all_upper_sets: too many proper flats");

  std::vector<std::vector<ElemMask>> out;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << n); ++pick) {
    std::vector<ElemMask> set;
    for (std::size_t i = 0; i < n; ++i)
      if (pick & (std::uint64_t{1} << i)) set.push_back(proper[i]);
    bool closed = true;
    for (ElemMask low : set) {
      for (ElemMask high : proper) {
        if (strict_subset(low, high) &&
            !std::binary_search(set.begin(), set.end(), high, &mask_lex_less)) {
          closed = false;
          break;
        }
      }
      if (!closed) break;
    }
    if (closed) out.push_back(std::move(set));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return mask_lex_less(a[i], b[i]);
    return false;
  });
  return out;
}

SimplicialComplex augmented_upperset(const ClosureOperator& matroid,
                                     const std::vector<ElemMask>& upper_set,
                                     int max_ground_size) {
  MatroidCheck check = is_matroid(matroid, max_ground_size);
  if (!check.is_matroid)
    throw InputError("augmented_upperset: not a matroid (" + check.reason + ")");

  std::vector<ElemMask> sorted = upper_set;
  std::sort(sorted.begin(), sorted.end(), &mask_lex_less);
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (ElemMask m : sorted) {
    if (!matroid.is_flat(m) || m == matroid.full_mask())
      throw InputError("augmented_upperset: member is not a proper flat");
    for (ElemMask high : matroid.proper_flats()) {
      if (strict_subset(m, high) &&
          !std::binary_search(sorted.begin(), sorted.end(), high, &mask_lex_less)) {
        throw InputError("augmented_upperset: not an upper-set, " +
                         matroid.flat_label(m).to_string() + " is in but " +
                         matroid.flat_label(high).to_string() + " is not");
      }
    }
  }

  SimplicialComplex full = augmented_bergman(matroid, max_ground_size);
  std::vector<VertexLabel> keep;
  for (const VertexLabel& v : full.vertex_labels()) {
    if (v.is_ground()) keep.push_back(v);
    else if (std::binary_search(sorted.begin(), sorted.end(),
                                matroid.mask_from_names(v.elements()), &mask_lex_less))
      keep.push_back(v);
  }
  return induced(full, keep);
}

SimplicialComplex relabel_vertices(
    const SimplicialComplex& complex,
    const std::vector<std::pair<VertexLabel, VertexLabel>>& map) {
  auto renamed = [&map](const VertexLabel& v) {
    for (const auto& [from, to] : map)
      if (from == v) return to;
    return v;
  };
  std::vector<std::vector<VertexLabel>> faces;
  for (const auto& facet : complex.facets_as_labels()) {
    std::vector<VertexLabel> face;
    face.reserve(facet.size());
    for (const VertexLabel& v : facet) face.push_back(renamed(v));
    faces.push_back(std::move(face));
  }
  if (complex.is_void()) return SimplicialComplex();
  return SimplicialComplex::from_faces(faces);
}

LinkFactorization link_factorization(const ClosureOperator& f, ElemMask proper_flat,
                                     int max_ground_size) {
  if (!f.is_flat(proper_flat) || proper_flat == f.full_mask())
    throw InputError("link_factorization: F must be a proper flat");

  LinkFactorization out;
  ClosureOperator restricted = restriction(f, proper_flat);
  ClosureOperator contracted = contraction(f, proper_flat);
  out.restriction_part = augmented_bergman(restricted, max_ground_size);
  out.contraction_part = bergman_complex(contracted);

  for (const VertexLabel& v : out.restriction_part.vertex_labels())
    out.relabel.emplace_back(v, v);
  for (const VertexLabel& v : out.contraction_part.vertex_labels()) {
    ElemMask sub = contracted.mask_from_names(v.elements());
    // x_{G∖F} in the contraction corresponds to x_G in Δ(f).
    ElemMask original = f.mask_from_names(contracted.names_from_mask(sub)) | proper_flat;
    out.relabel.emplace_back(v, f.flat_label(original));
  }
  return out;
}

LayerClassification classify_layers(const SimplicialComplex& augmented) {
  LayerClassification out;
  for (const auto& facet : augmented.facets_as_labels()) {
    bool has_ground = false, has_flat = false;
    for (const VertexLabel& v : facet) (v.is_ground() ? has_ground : has_flat) = true;
    if (has_ground && has_flat) out.hybrid.push_back(facet);
    else if (has_flat) out.flag_only.push_back(facet);
    else out.independent_only.push_back(facet);
  }
  return out;
}

}  // namespace bergman
