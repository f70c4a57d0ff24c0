#include "bergman/simplicial_complex.hpp"

#include <algorithm>
#include <unordered_set>

#include "bergman/errors.hpp"

namespace bergman {

namespace {

// Keep the inclusion-maximal faces, deduplicated.
std::vector<Bitset> absorb(std::vector<Bitset> faces) {
  std::stable_sort(faces.begin(), faces.end(),
                   [](const Bitset& a, const Bitset& b) { return a.count() > b.count(); });
  std::vector<Bitset> kept;
  for (const Bitset& face : faces) {
    bool dominated = false;
    for (const Bitset& big : kept) {
      if (face.is_subset_of(big)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(face);
  }
  return kept;
}

}  // namespace

SimplicialComplex SimplicialComplex::build(std::vector<VertexLabel> labels,
                                           std::vector<Bitset> faces) {
  faces = absorb(std::move(faces));
  if (faces.empty()) return SimplicialComplex();

  // Drop labels that occur in no facet; the remap preserves index order, so
  // lexicographic facet order is unaffected.
  Bitset used(labels.size());
  for (const Bitset& f : faces)
    for (int i = f.next_set_bit(0); i >= 0; i = f.next_set_bit(i + 1)) used.set(i);

  SimplicialComplex out;
  std::vector<int> remap(labels.size(), -1);
  int next = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (used.test(static_cast<int>(i))) {
      remap[i] = next++;
      out.labels_.push_back(labels[i]);
    }
  }
  out.facets_.reserve(faces.size());
  for (const Bitset& f : faces) {
    Bitset g(out.labels_.size());
    for (int i = f.next_set_bit(0); i >= 0; i = f.next_set_bit(i + 1)) g.set(remap[i]);
    out.facets_.push_back(std::move(g));
  }
  std::sort(out.facets_.begin(), out.facets_.end(), &Bitset::lex_less);
  return out;
}

SimplicialComplex SimplicialComplex::from_faces(
    const std::vector<std::vector<VertexLabel>>& faces) {
  std::vector<VertexLabel> labels;
  for (const auto& face : faces)
    for (const auto& v : face) labels.push_back(v);
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

  std::vector<Bitset> sets;
  sets.reserve(faces.size());
  for (const auto& face : faces) {
    Bitset b(labels.size());
    for (const auto& v : face) {
      auto it = std::lower_bound(labels.begin(), labels.end(), v);
      b.set(static_cast<int>(it - labels.begin()));
    }
    sets.push_back(std::move(b));
  }
  return build(std::move(labels), std::move(sets));
}

std::vector<VertexLabel> SimplicialComplex::face_labels(const Bitset& face) const {
  std::vector<VertexLabel> out;
  for (int i = face.next_set_bit(0); i >= 0; i = face.next_set_bit(i + 1))
    out.push_back(labels_[static_cast<std::size_t>(i)]);
  return out;
}

std::vector<std::vector<VertexLabel>> SimplicialComplex::facets_as_labels() const {
  std::vector<std::vector<VertexLabel>> out;
  out.reserve(facets_.size());
  for (const Bitset& f : facets_) out.push_back(face_labels(f));
  return out;
}

int SimplicialComplex::vertex_index(const VertexLabel& v) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), v);
  if (it == labels_.end() || *it != v) return -1;
  return static_cast<int>(it - labels_.begin());
}

Bitset SimplicialComplex::face_from_labels(const std::vector<VertexLabel>& face) const {
  Bitset b(labels_.size());
  for (const auto& v : face) {
    int i = vertex_index(v);
    if (i < 0) throw InputError("unknown vertex " + v.to_string());
    b.set(i);
  }
  return b;
}

bool SimplicialComplex::has_face(const Bitset& face) const {
  for (const Bitset& f : facets_)
    if (face.is_subset_of(f)) return true;
  return false;
}

std::string SimplicialComplex::canonical_key() const {
  if (is_void()) return "#void";
  std::string key;
  for (const Bitset& f : facets_) {
    for (int i = f.next_set_bit(0); i >= 0; i = f.next_set_bit(i + 1)) {
      key += labels_[static_cast<std::size_t>(i)].to_string();
      key += ',';
    }
    key += ';';
  }
  return key;
}

SimplicialComplex complex_from_facets(const std::vector<std::vector<VertexLabel>>& faces) {
  return SimplicialComplex::from_faces(faces);
}

SimplicialComplex deletion(const SimplicialComplex& complex,
                           const std::vector<VertexLabel>& sigma) {
  Bitset s = complex.face_from_labels(sigma);
  if (!complex.has_face(s)) throw InputError("deletion: σ is not a face");
  std::vector<Bitset> faces;
  faces.reserve(complex.facet_count());
  for (const Bitset& f : complex.facet_sets()) faces.push_back(f - s);
  return SimplicialComplex::build(complex.vertex_labels(), std::move(faces));
}

SimplicialComplex link(const SimplicialComplex& complex,
                       const std::vector<VertexLabel>& sigma) {
  Bitset s = complex.face_from_labels(sigma);
  std::vector<Bitset> faces;
  for (const Bitset& f : complex.facet_sets())
    if (s.is_subset_of(f)) faces.push_back(f - s);
  if (faces.empty()) throw InputError("link: σ is not a face");
  return SimplicialComplex::build(complex.vertex_labels(), std::move(faces));
}

SimplicialComplex join(const SimplicialComplex& left, const SimplicialComplex& right) {
  for (const auto& v : left.vertex_labels())
    if (right.has_vertex(v)) throw InputError("join: overlapping vertex label " + v.to_string());
  if (left.is_void() || right.is_void()) return SimplicialComplex();

  std::vector<VertexLabel> labels = left.vertex_labels();
  labels.insert(labels.end(), right.vertex_labels().begin(), right.vertex_labels().end());
  std::sort(labels.begin(), labels.end());

  auto remap = [&labels](const SimplicialComplex& c) {
    std::vector<int> m;
    m.reserve(c.vertex_labels().size());
    for (const auto& v : c.vertex_labels()) {
      auto it = std::lower_bound(labels.begin(), labels.end(), v);
      m.push_back(static_cast<int>(it - labels.begin()));
    }
    return m;
  };
  std::vector<int> lm = remap(left), rm = remap(right);

  std::vector<Bitset> faces;
  faces.reserve(left.facet_count() * right.facet_count());
  for (const Bitset& a : left.facet_sets()) {
    Bitset base(labels.size());
    for (int i = a.next_set_bit(0); i >= 0; i = a.next_set_bit(i + 1))
      base.set(lm[static_cast<std::size_t>(i)]);
    for (const Bitset& b : right.facet_sets()) {
      Bitset u = base;
      for (int i = b.next_set_bit(0); i >= 0; i = b.next_set_bit(i + 1))
        u.set(rm[static_cast<std::size_t>(i)]);
      faces.push_back(std::move(u));
    }
  }
  return SimplicialComplex::build(std::move(labels), std::move(faces));
}

SimplicialComplex induced(const SimplicialComplex& complex,
                          const std::vector<VertexLabel>& within) {
  Bitset w = complex.face_from_labels(within);
  if (complex.is_void()) return SimplicialComplex();
  std::vector<Bitset> faces;
  faces.reserve(complex.facet_count());
  for (const Bitset& f : complex.facet_sets()) faces.push_back(f & w);
  return SimplicialComplex::build(complex.vertex_labels(), std::move(faces));
}

std::vector<long long> h_from_f(const FaceVector& f) {
  const int d = static_cast<int>(f.entries.size()) - 1;  // d = dim + 1
  // Pascal triangle up to d.
  std::vector<std::vector<long long>> choose(d + 1, std::vector<long long>(d + 1, 0));
  for (int n = 0; n <= d; ++n) {
    choose[n][0] = 1;
    for (int k = 1; k <= n; ++k)
      choose[n][k] = choose[n - 1][k - 1] + (k <= n - 1 ? choose[n - 1][k] : 0);
  }
  std::vector<long long> h(d + 1, 0);
  for (int k = 0; k <= d; ++k) {
    long long sum = 0;
    for (int i = 0; i <= k; ++i) {
      long long c = choose[d - i][k - i];
      long long term = c * f.entries[static_cast<std::size_t>(i)];
      sum += ((k - i) % 2 == 0) ? term : -term;
    }
    h[static_cast<std::size_t>(k)] = sum;
  }
  return h;
}

ComplexStats stats(const SimplicialComplex& complex) {
  if (complex.is_void()) throw InputError("stats: dimension of the void complex is undefined");

  int dim = -1;
  bool pure = true;
  int top = complex.facet_sets().front().count();
  for (const Bitset& f : complex.facet_sets()) {
    dim = std::max(dim, f.count() - 1);
    if (f.count() != top) pure = false;
  }

  // Count all faces by cardinality: enumerate subsets of each facet and
  // dedupe across facets.
  std::vector<long long> counts(static_cast<std::size_t>(dim) + 2, 0);
  std::unordered_set<Bitset, BitsetHash> seen;
  for (const Bitset& f : complex.facet_sets()) {
    std::vector<int> idx = f.to_indices();
    const std::size_t n = idx.size();
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
      Bitset face(complex.vertex_labels().size());
      for (std::size_t j = 0; j < n; ++j)
        if (m & (std::uint64_t{1} << j)) face.set(idx[j]);
      if (seen.insert(face).second) counts[static_cast<std::size_t>(face.count())]++;
    }
  }

  ComplexStats out;
  out.dimension = dim;
  out.pure = pure;
  out.f.entries = std::move(counts);
  out.h = h_from_f(out.f);
  return out;
}

}  // namespace bergman
