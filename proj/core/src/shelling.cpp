#include "bergman/shelling.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>
#include <unordered_set>

#include "bergman/complexes.hpp"
#include "bergman/errors.hpp"

namespace bergman {

namespace {

std::vector<long long> poly_trim(std::vector<long long> p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

// Maps each order entry to its index in the complex's canonical facet list;
// throws unless the order is a permutation of the facet set.
std::vector<int> order_as_indices(const SimplicialComplex& complex, const ShellingOrder& order) {
  std::unordered_map<Bitset, int, BitsetHash> where;
  for (std::size_t i = 0; i < complex.facet_sets().size(); ++i)
    where.emplace(complex.facet_sets()[i], static_cast<int>(i));

  if (order.facets.size() != complex.facet_count())
    throw InputError("shelling order does not list every facet exactly once");
  std::vector<int> indices;
  std::vector<char> used(complex.facet_count(), 0);
  for (const auto& facet : order.facets) {
    Bitset b = complex.face_from_labels(facet);
    auto it = where.find(b);
    if (it == where.end()) throw InputError("shelling order contains a non-facet");
    if (used[static_cast<std::size_t>(it->second)])
      throw InputError("shelling order repeats a facet");
    used[static_cast<std::size_t>(it->second)] = 1;
    indices.push_back(it->second);
  }
  return indices;
}

}  // namespace

ShellingReport verify_shelling(const SimplicialComplex& complex, const ShellingOrder& order) {
  std::vector<int> idx = order_as_indices(complex, order);
  const auto& facets = complex.facet_sets();

  ShellingReport report;
  for (std::size_t i = 1; i < idx.size(); ++i) {
    const Bitset& cur = facets[static_cast<std::size_t>(idx[i])];
    for (std::size_t j = 0; j < i; ++j) {
      const Bitset& prior = facets[static_cast<std::size_t>(idx[j])];
      Bitset meet = cur & prior;
      bool ok = false;
      for (std::size_t k = 0; k < i; ++k) {
        const Bitset& witness = facets[static_cast<std::size_t>(idx[k])];
        if ((cur - witness).count() == 1 && meet.is_subset_of(witness)) {
          ok = true;
          break;
        }
      }
      if (!ok) {
        report.valid = false;
        report.failing_index = static_cast<int>(i);
        report.failing_prior = static_cast<int>(j);
        report.message = "facet " + std::to_string(i) + " meets facet " + std::to_string(j) +
                         " outside a codimension-1 intersection with the earlier facets";
        return report;
      }
    }
  }
  report.valid = true;
  report.message = "shelling verified";
  return report;
}

bool facet_in_class(const std::vector<VertexLabel>& facet, FacetClass cls) {
  for (const VertexLabel& v : facet) {
    if (cls == FacetClass::Bases && v.is_flat()) return false;
    if (cls == FacetClass::MaximalFlags && v.is_ground()) return false;
  }
  return true;
}

SearchConstraint SearchConstraint::with_prefix(std::vector<std::vector<VertexLabel>> facets) {
  SearchConstraint c;
  c.mode = Mode::Prefix;
  c.prefix = std::move(facets);
  return c;
}

SearchConstraint SearchConstraint::class_first(FacetClass cls) {
  SearchConstraint c;
  c.mode = Mode::ClassFirst;
  c.first_class = cls;
  return c;
}

SearchConstraint SearchConstraint::class_last(FacetClass cls) {
  SearchConstraint c;
  c.mode = Mode::ClassLast;
  c.last_class = cls;
  return c;
}

SearchConstraint SearchConstraint::class_first_and_last(FacetClass first, FacetClass last) {
  SearchConstraint c;
  c.mode = Mode::ClassFirst;
  c.first_class = first;
  c.last_class = last;
  return c;
}

namespace {

// DFS over facet sequences. Feasibility of extending a prefix depends only
// on the set of placed facets, so dead placed-sets are memoized by mask.
class ShellingSearch {
 public:
  ShellingSearch(const SimplicialComplex& complex, const SearchConstraint& constraint,
                 std::uint64_t budget)
      : complex_(complex), budget_(budget) {
    const auto& facets = complex.facet_sets();
    m_ = static_cast<int>(facets.size());
    diff1_.assign(static_cast<std::size_t>(m_) * static_cast<std::size_t>(m_), 0);
    for (int k = 0; k < m_; ++k)
      for (int i = 0; i < m_; ++i)
        if (i != k)
          diff1_[pos(k, i)] =
              (facets[static_cast<std::size_t>(i)] - facets[static_cast<std::size_t>(k)]).count() == 1;

    first_.assign(static_cast<std::size_t>(m_), 0);
    last_.assign(static_cast<std::size_t>(m_), 0);
    auto labels = complex.facets_as_labels();
    for (int i = 0; i < m_; ++i) {
      if (constraint.first_class && facet_in_class(labels[static_cast<std::size_t>(i)], *constraint.first_class))
        first_[static_cast<std::size_t>(i)] = 1;
      if (constraint.last_class && facet_in_class(labels[static_cast<std::size_t>(i)], *constraint.last_class))
        last_[static_cast<std::size_t>(i)] = 1;
    }
    gate_first_ = constraint.first_class.has_value();
    gate_last_ = constraint.last_class.has_value();
    remaining_first_ = static_cast<int>(std::count(first_.begin(), first_.end(), 1));
    remaining_nonlast_ = m_ - static_cast<int>(std::count(last_.begin(), last_.end(), 1));

    for (const auto& facet : constraint.prefix) {
      Bitset b = complex.face_from_labels(facet);
      int found = -1;
      for (int i = 0; i < m_; ++i)
        if (facets[static_cast<std::size_t>(i)] == b) found = i;
      if (found < 0) throw InputError("constraint prefix contains a non-facet");
      forced_.push_back(found);
    }
    std::vector<int> sorted = forced_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw InputError("constraint prefix repeats a facet");

    // Candidate priority: fewer ground vertices first (flag-heavy facets
    // lead, bases trail), ties in canonical order. This mirrors how
    // augmented complexes are actually shelled and leaves pure flag or pure
    // independence complexes in canonical order.
    priority_.resize(static_cast<std::size_t>(m_));
    std::vector<int> ground_count(static_cast<std::size_t>(m_), 0);
    for (int i = 0; i < m_; ++i)
      for (const VertexLabel& v : labels[static_cast<std::size_t>(i)])
        if (v.is_ground()) ++ground_count[static_cast<std::size_t>(i)];
    for (int i = 0; i < m_; ++i) priority_[static_cast<std::size_t>(i)] = i;
    std::stable_sort(priority_.begin(), priority_.end(), [&ground_count](int a, int b) {
      return ground_count[static_cast<std::size_t>(a)] < ground_count[static_cast<std::size_t>(b)];
    });

    placed_ = Bitset(static_cast<std::size_t>(m_));
  }

  ShellingSearchResult run() {
    ShellingSearchResult result;
    if (complex_.is_void()) throw InputError("find_shelling: void complex");
    if (m_ == 1) {
      result.status = SearchStatus::Found;
      result.order = ShellingOrder{complex_.facets_as_labels(), std::nullopt};
      result.nodes = 1;
      return result;
    }

    if (statically_unshellable()) {
      result.status = SearchStatus::NotFound;
      result.nodes = 0;
      return result;
    }

    Out out = dfs();
    result.nodes = nodes_;
    if (out == Out::Found) {
      result.status = SearchStatus::Found;
      ShellingOrder order;
      for (int i : order_) order.facets.push_back(complex_.face_labels(
          complex_.facet_sets()[static_cast<std::size_t>(i)]));
      result.order = std::move(order);
    } else {
      result.status = out == Out::Dead ? SearchStatus::NotFound : SearchStatus::BudgetExhausted;
    }
    return result;
  }

 private:
  enum class Out { Found, Dead, Budget };

  std::size_t pos(int k, int i) const {
    return static_cast<std::size_t>(k) * static_cast<std::size_t>(m_) + static_cast<std::size_t>(i);
  }

  // Every facet but the first needs an earlier facet within set-difference
  // one; two facets with no such potential predecessor, or a disconnected
  // adjacency graph, rule out any shelling regardless of constraints.
  bool statically_unshellable() const {
    int no_in_edge = 0;
    for (int i = 0; i < m_; ++i) {
      bool any = false;
      for (int k = 0; k < m_ && !any; ++k) any = k != i && diff1_[pos(k, i)];
      if (!any) ++no_in_edge;
    }
    if (no_in_edge >= 2) return true;

    std::vector<int> component(static_cast<std::size_t>(m_), -1);
    std::vector<int> stack = {0};
    component[0] = 0;
    while (!stack.empty()) {
      int at = stack.back();
      stack.pop_back();
      for (int other = 0; other < m_; ++other) {
        if (component[static_cast<std::size_t>(other)] < 0 &&
            (diff1_[pos(at, other)] || diff1_[pos(other, at)])) {
          component[static_cast<std::size_t>(other)] = 0;
          stack.push_back(other);
        }
      }
    }
    return std::any_of(component.begin(), component.end(), [](int c) { return c < 0; });
  }

  bool candidate_allowed(int i) const {
    std::size_t depth = order_.size();
    if (depth < forced_.size()) return forced_[depth] == i;
    if (gate_first_ && remaining_first_ > 0 && !first_[static_cast<std::size_t>(i)]) return false;
    if (gate_last_ && remaining_nonlast_ > 0 && last_[static_cast<std::size_t>(i)]) return false;
    return true;
  }

  bool criterion_holds(int i) const {
    if (order_.empty()) return true;
    const auto& facets = complex_.facet_sets();
    const Bitset& cur = facets[static_cast<std::size_t>(i)];
    bool any_adjacent = false;
    for (int k : order_) any_adjacent = any_adjacent || diff1_[pos(k, i)];
    if (!any_adjacent) return false;
    for (int j : order_) {
      Bitset meet = cur & facets[static_cast<std::size_t>(j)];
      bool ok = false;
      for (int k : order_) {
        if (diff1_[pos(k, i)] && meet.is_subset_of(facets[static_cast<std::size_t>(k)])) {
          ok = true;
          break;
        }
      }
      if (!ok) return false;
    }
    return true;
  }

  Out dfs() {
    if (++nodes_ > budget_) return Out::Budget;
    if (static_cast<int>(order_.size()) == m_) return Out::Found;
    if (infeasible_.count(placed_)) return Out::Dead;

    bool budget_hit = false;
    for (int i : priority_) {
      if (placed_.test(i)) continue;
      if (!candidate_allowed(i) || !criterion_holds(i)) continue;
      place(i);
      Out out = dfs();
      if (out == Out::Found) return Out::Found;  // keep order_ intact
      unplace(i);
      if (out == Out::Budget) {
        budget_hit = true;
        break;
      }
    }
    if (budget_hit) return Out::Budget;
    infeasible_.insert(placed_);
    return Out::Dead;
  }

  void place(int i) {
    order_.push_back(i);
    placed_.set(i);
    if (first_[static_cast<std::size_t>(i)]) --remaining_first_;
    if (!last_[static_cast<std::size_t>(i)]) --remaining_nonlast_;
  }

  void unplace(int i) {
    order_.pop_back();
    placed_.reset(i);
    if (first_[static_cast<std::size_t>(i)]) ++remaining_first_;
    if (!last_[static_cast<std::size_t>(i)]) ++remaining_nonlast_;
  }

  const SimplicialComplex& complex_;
  std::uint64_t budget_;
  int m_ = 0;
  std::vector<char> diff1_;
  std::vector<char> first_, last_;
  bool gate_first_ = false, gate_last_ = false;
  int remaining_first_ = 0, remaining_nonlast_ = 0;
  std::vector<int> forced_;
  std::vector<int> priority_;
  std::vector<int> order_;
  Bitset placed_;
  std::uint64_t nodes_ = 0;
  std::unordered_set<Bitset, BitsetHash> infeasible_;
};

}  // namespace

ShellingSearchResult find_shelling(const SimplicialComplex& complex,
                                   const SearchConstraint& constraint, std::uint64_t budget) {
  return ShellingSearch(complex, constraint, budget).run();
}

std::vector<std::vector<VertexLabel>> restriction_sets(const SimplicialComplex& complex,
                                                       const ShellingOrder& order) {
  ShellingReport report = verify_shelling(complex, order);
  if (!report.valid) throw InputError("restriction_sets: order is not a shelling: " + report.message);

  std::vector<int> idx = order_as_indices(complex, order);
  const auto& facets = complex.facet_sets();
  std::vector<std::vector<VertexLabel>> out;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    const Bitset& cur = facets[static_cast<std::size_t>(idx[i])];
    Bitset restricted(complex.vertex_labels().size());
    for (int v = cur.next_set_bit(0); v >= 0; v = cur.next_set_bit(v + 1)) {
      Bitset without = cur;
      without.reset(v);
      for (std::size_t j = 0; j < i; ++j) {
        if (without.is_subset_of(facets[static_cast<std::size_t>(idx[j])])) {
          restricted.set(v);
          break;
        }
      }
    }
    out.push_back(complex.face_labels(restricted));
  }
  return out;
}

HFromShelling h_from_shelling(const SimplicialComplex& complex, const ShellingOrder& order) {
  std::vector<std::vector<VertexLabel>> rs = restriction_sets(complex, order);
  ComplexStats st = stats(complex);

  HFromShelling out;
  out.pure = st.pure;
  out.histogram.assign(static_cast<std::size_t>(st.dimension) + 2, 0);
  for (const auto& r : rs) out.histogram[r.size()]++;
  out.matches_f_transform = out.histogram == st.h;
  return out;
}

namespace {

using ChainKey = std::vector<VertexLabel>;

// Position of each facet of a fixed shelling, keyed by sorted label list.
std::map<ChainKey, int> order_positions(const ShellingOrder& order) {
  std::map<ChainKey, int> out;
  for (std::size_t i = 0; i < order.facets.size(); ++i) {
    ChainKey key = order.facets[i];
    std::sort(key.begin(), key.end());
    out.emplace(std::move(key), static_cast<int>(i));
  }
  return out;
}

}  // namespace

FlagToBasisResult flag_to_basis_shelling(const ClosureOperator& f,
                                         const FlagToBasisOptions& options) {
  FlagToBasisResult result;
  SimplicialComplex augmented = augmented_bergman(f, options.max_ground_size);
  Enumeration enumeration = enumerate_sets(f, options.max_ground_size);

  // Linear extension of the independent sets.
  std::vector<ElemMask> extension;
  if (options.linear_extension) {
    extension = *options.linear_extension;
    std::vector<ElemMask> sorted = extension;
    std::sort(sorted.begin(), sorted.end(), &mask_lex_less);
    if (sorted != enumeration.independent_sets)
      throw InputError("linear extension must list every independent set exactly once");
    std::unordered_map<ElemMask, std::size_t> at;
    for (std::size_t i = 0; i < extension.size(); ++i) at[extension[i]] = i;
    for (ElemMask small : extension)
      for (ElemMask big : extension)
        if (small != big && (small & ~big) == 0 && at[small] > at[big])
          throw InputError("not a linear extension: a set is ordered after a superset");
  } else {
    extension = enumeration.independent_sets;
    std::sort(extension.begin(), extension.end(), [](ElemMask a, ElemMask b) {
      if (std::popcount(a) != std::popcount(b)) return std::popcount(a) < std::popcount(b);
      return mask_lex_less(a, b);
    });
  }
  std::unordered_map<ElemMask, int> extension_pos;
  for (std::size_t i = 0; i < extension.size(); ++i)
    extension_pos[extension[i]] = static_cast<int>(i);

  // Parse facets into (I, F_•) form.
  struct ParsedFacet {
    std::vector<VertexLabel> labels;
    AugmentedFace face;
  };
  std::vector<ParsedFacet> flagged, bases;
  for (const auto& facet : augmented.facets_as_labels()) {
    ParsedFacet p{facet, augmented_face_from_labels(f, facet)};
    (p.face.flag.chain.empty() ? bases : flagged).push_back(std::move(p));
  }

  // Fixed shellings of B(f/F) for every needed flat, largest flats first.
  std::map<ElemMask, ShellingOrder> local_cache;
  std::map<ElemMask, ShellingOrder>& cache =
      options.flat_shellings ? *options.flat_shellings : local_cache;
  std::vector<ElemMask> needed;
  for (const auto& p : flagged) needed.push_back(p.face.flag.chain.front());
  std::sort(needed.begin(), needed.end(), [](ElemMask a, ElemMask b) {
    if (std::popcount(a) != std::popcount(b)) return std::popcount(a) > std::popcount(b);
    return mask_lex_less(a, b);
  });
  needed.erase(std::unique(needed.begin(), needed.end()), needed.end());
  for (ElemMask flat : needed) {
    if (cache.count(flat)) continue;
    SimplicialComplex contracted_bergman = bergman_complex(contraction(f, flat));
    ShellingSearchResult search = find_shelling(contracted_bergman, {}, options.budget);
    result.nodes += search.nodes;
    if (search.status != SearchStatus::Found) {
      result.status = search.status;
      result.blocking_flat = f.flat_label(flat);
      return result;
    }
    cache.emplace(flat, *search.order);
  }

  // Sort keys: extension position of I, then the flag's position above f(I)
  // in the fixed shelling of B(f/f(I)). The contraction's flat vertices are
  // labeled by original element names, so the key is x_{G∖F} by name.
  std::map<ElemMask, std::map<ChainKey, int>> positions;
  for (ElemMask flat : needed) positions.emplace(flat, order_positions(cache.at(flat)));
  auto chain_position = [&](const ParsedFacet& p) {
    ElemMask bottom = p.face.flag.chain.front();
    ChainKey key;
    for (std::size_t i = 1; i < p.face.flag.chain.size(); ++i)
      key.push_back(VertexLabel::flat(f.names_from_mask(p.face.flag.chain[i] & ~bottom)));
    std::sort(key.begin(), key.end());
    return positions.at(bottom).at(key);
  };

  std::vector<std::pair<std::pair<int, int>, const ParsedFacet*>> keyed;
  keyed.reserve(flagged.size());
  for (const auto& p : flagged)
    keyed.push_back({{extension_pos.at(p.face.independent), chain_position(p)}, &p});
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  ShellingOrder order;
  for (const auto& [key, p] : keyed) order.facets.push_back(p->labels);
  for (const auto& p : bases) order.facets.push_back(p.labels);

  ShellingReport report = verify_shelling(augmented, order);
  if (!report.valid)
    throw Error("flag_to_basis_shelling: constructed order failed verification: " +
                report.message);
  result.status = SearchStatus::Found;
  result.order = std::move(order);
  return result;
}

HFormulaReport augmented_h_formula(const ClosureOperator& f, int max_ground_size) {
  Enumeration enumeration = enumerate_sets(f, max_ground_size);
  HFormulaReport out;

  std::map<ElemMask, std::pair<std::vector<long long>, bool>> per_flat;  // h, pure
  auto bergman_h = [&per_flat, &f](ElemMask flat) -> const std::pair<std::vector<long long>, bool>& {
    auto it = per_flat.find(flat);
    if (it == per_flat.end()) {
      ComplexStats st = stats(bergman_complex(contraction(f, flat)));
      it = per_flat.emplace(flat, std::make_pair(st.h, st.pure)).first;
    }
    return it->second;
  };

  std::vector<long long> rhs;
  out.contractions_all_pure = true;
  for (ElemMask independent : enumeration.independent_sets) {
    const auto& [h, pure] = bergman_h(f.closure(independent));
    if (!pure) out.contractions_all_pure = false;
    const int shift = std::popcount(independent);
    if (rhs.size() < h.size() + static_cast<std::size_t>(shift))
      rhs.resize(h.size() + static_cast<std::size_t>(shift), 0);
    for (std::size_t k = 0; k < h.size(); ++k) rhs[k + static_cast<std::size_t>(shift)] += h[k];
  }

  ComplexStats st = stats(augmented_bergman(f, max_ground_size));
  out.rhs = rhs;
  out.actual = st.h;
  out.augmented_pure = st.pure;
  out.equal = poly_trim(rhs) == poly_trim(st.h);
  return out;
}

namespace {

Verdict verdict_of(SearchStatus status) {
  switch (status) {
    case SearchStatus::Found: return Verdict::True;
    case SearchStatus::NotFound: return Verdict::False;
    default: return Verdict::Unknown;
  }
}

}  // namespace

EquivalenceReport equivalence_report(const ClosureOperator& f, std::uint64_t budget,
                                     int max_ground_size) {
  EquivalenceReport report;
  std::map<ElemMask, ShellingOrder> cache;

  // (i) B(f) shellable.
  report.bergman_shellable = verdict_of(find_shelling(bergman_complex(f), {}, budget).status);

  // (ii) B(f/F) shellable for every proper flat, largest contractions first.
  std::vector<ElemMask> flats = f.proper_flats();
  std::sort(flats.begin(), flats.end(), [](ElemMask a, ElemMask b) {
    if (std::popcount(a) != std::popcount(b)) return std::popcount(a) > std::popcount(b);
    return mask_lex_less(a, b);
  });
  bool any_budget = false;
  report.contractions_shellable = Verdict::True;
  for (ElemMask flat : flats) {
    ShellingSearchResult search = find_shelling(bergman_complex(contraction(f, flat)), {}, budget);
    if (search.status == SearchStatus::Found) {
      cache.emplace(flat, *search.order);
    } else if (search.status == SearchStatus::NotFound) {
      report.contractions_shellable = Verdict::False;
      report.unshellable_contraction = f.flat_label(flat);
      break;
    } else {
      any_budget = true;
    }
  }
  if (report.contractions_shellable == Verdict::True && any_budget)
    report.contractions_shellable = Verdict::Unknown;

  // (iii) flags-first/bases-last shelling of Δ(f): by construction when
  // possible, otherwise by constrained exhaustive search.
  FlagToBasisOptions options;
  options.budget = budget;
  options.flat_shellings = &cache;
  options.max_ground_size = max_ground_size;
  FlagToBasisResult construction = flag_to_basis_shelling(f, options);
  SimplicialComplex augmented = augmented_bergman(f, max_ground_size);
  if (construction.status == SearchStatus::Found) {
    report.flag_to_basis_exists = Verdict::True;
  } else {
    SearchConstraint both =
        SearchConstraint::class_first_and_last(FacetClass::MaximalFlags, FacetClass::Bases);
    report.flag_to_basis_exists = verdict_of(find_shelling(augmented, both, budget).status);
  }

  // (iv) Δ(f) shellable.
  report.augmented_shellable = verdict_of(find_shelling(augmented, {}, budget).status);

  report.any_unknown = report.bergman_shellable == Verdict::Unknown ||
                       report.contractions_shellable == Verdict::Unknown ||
                       report.flag_to_basis_exists == Verdict::Unknown ||
                       report.augmented_shellable == Verdict::Unknown;
  report.all_agree = !report.any_unknown &&
                     report.bergman_shellable == report.contractions_shellable &&
                     report.bergman_shellable == report.flag_to_basis_exists &&
                     report.bergman_shellable == report.augmented_shellable;
  return report;
}

}  // namespace bergman
