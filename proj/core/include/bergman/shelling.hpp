#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bergman/closure_operator.hpp"
#include "bergman/simplicial_complex.hpp"

namespace bergman {

inline constexpr std::uint64_t kDefaultSearchBudget = 10'000'000;

/// Outcome of an exhaustive search. NotFound is only reported after the
/// search space was exhausted; running out of budget is a distinct result.
enum class SearchStatus { Found, NotFound, BudgetExhausted };

/// Ordered facet list of a target complex, each facet appearing exactly
/// once, with optional parallel restriction sets.
struct ShellingOrder {
  std::vector<std::vector<VertexLabel>> facets;
  std::optional<std::vector<std::vector<VertexLabel>>> restriction_sets;
};

struct ShellingReport {
  bool valid = false;
  /// 0-based position of the first facet violating the criterion, with a
  /// prior index j it cannot be reconciled with; -1 when valid.
  int failing_index = -1;
  int failing_prior = -1;
  std::string message;
};

/// Checks the pairwise criterion: for every i and every j < i there is a
/// k < i with |σ_i ∖ σ_k| = 1 and σ_i ∩ σ_j ⊆ σ_k. Throws InputError if the
/// order is not a permutation of the facet set.
ShellingReport verify_shelling(const SimplicialComplex& complex, const ShellingOrder& order);

/// Facet classes used in search constraints: basis facets have no flat
/// vertex, maximal flags no ground vertex.
enum class FacetClass { Bases, MaximalFlags };

bool facet_in_class(const std::vector<VertexLabel>& facet, FacetClass cls);

struct SearchConstraint {
  enum class Mode { None, Prefix, ClassFirst, ClassLast };
  Mode mode = Mode::None;
  std::vector<std::vector<VertexLabel>> prefix;
  /// Gating predicates; the equivalence report combines both.
  std::optional<FacetClass> first_class;
  std::optional<FacetClass> last_class;

  static SearchConstraint none() { return {}; }
  static SearchConstraint with_prefix(std::vector<std::vector<VertexLabel>> facets);
  static SearchConstraint class_first(FacetClass cls);
  static SearchConstraint class_last(FacetClass cls);
  static SearchConstraint class_first_and_last(FacetClass first, FacetClass last);
};

struct ShellingSearchResult {
  SearchStatus status = SearchStatus::NotFound;
  std::optional<ShellingOrder> order;
  std::uint64_t nodes = 0;
};

/// Backtracking search for a shelling order extending the constraint.
/// Prunes on the pairwise criterion, codimension-1 adjacency connectivity,
/// and memoized infeasible placed-facet sets.
ShellingSearchResult find_shelling(const SimplicialComplex& complex,
                                   const SearchConstraint& constraint = {},
                                   std::uint64_t budget = kDefaultSearchBudget);

/// R(σ_i) = {v ∈ σ_i : σ_i∖{v} ⊆ σ_j for some j < i}. The order must verify.
std::vector<std::vector<VertexLabel>> restriction_sets(const SimplicialComplex& complex,
                                                       const ShellingOrder& order);

struct HFromShelling {
  /// histogram[i] = number of facets whose restriction set has size i.
  std::vector<long long> histogram;
  bool pure = false;
  /// histogram == h-vector from the f-vector; only asserted for pure
  /// complexes, reported as-is otherwise.
  bool matches_f_transform = false;
};

HFromShelling h_from_shelling(const SimplicialComplex& complex, const ShellingOrder& order);

struct FlagToBasisOptions {
  /// All independent sets in order; must be a linear extension of
  /// containment. Default: by size, ties lexicographic.
  std::optional<std::vector<ElemMask>> linear_extension;
  std::uint64_t budget = kDefaultSearchBudget;
  /// Optional in/out cache of verified shellings of B(f/F), keyed by flat.
  std::map<ElemMask, ShellingOrder>* flat_shellings = nullptr;
  int max_ground_size = kDefaultEnumerationBudget;
};

struct FlagToBasisResult {
  SearchStatus status = SearchStatus::NotFound;
  std::optional<ShellingOrder> order;
  /// When not Found: the proper flat whose contraction Bergman complex could
  /// not be shelled (definitively for NotFound, within budget otherwise).
  std::optional<VertexLabel> blocking_flat;
  std::uint64_t nodes = 0;
};

/// Total order on the facets of Δ(f): facets with nonempty flags sorted by
/// the linear extension of their independent sets, ties broken by the
/// position of the flag above f(I) in a fixed shelling of B(f/f(I));
/// empty-flag facets appended last in lexicographic order. The result starts
/// with the maximal flags and ends with the bases, and passes
/// verify_shelling.
FlagToBasisResult flag_to_basis_shelling(const ClosureOperator& f,
                                         const FlagToBasisOptions& options = {});

struct HFormulaReport {
  /// Coefficients of Σ_{I independent} t^|I| · h(B(f/f(I)), t).
  std::vector<long long> rhs;
  /// h-vector of Δ(f).
  std::vector<long long> actual;
  bool equal = false;
  bool augmented_pure = false;
  bool contractions_all_pure = false;
};

HFormulaReport augmented_h_formula(const ClosureOperator& f,
                                   int max_ground_size = kDefaultEnumerationBudget);

enum class Verdict { True, False, Unknown };

/// Four shellability conditions decided independently: (i) B(f) shellable,
/// (ii) every B(f/F) shellable, (iii) Δ(f) has a flags-first/bases-last
/// shelling, (iv) Δ(f) shellable. Sub-decisions that exhaust their budget
/// are reported Unknown and excluded from the agreement claim.
struct EquivalenceReport {
  Verdict bergman_shellable = Verdict::Unknown;
  Verdict contractions_shellable = Verdict::Unknown;
  Verdict flag_to_basis_exists = Verdict::Unknown;
  Verdict augmented_shellable = Verdict::Unknown;
  bool any_unknown = true;
  bool all_agree = false;
  std::optional<VertexLabel> unshellable_contraction;
};

EquivalenceReport equivalence_report(const ClosureOperator& f,
                                     std::uint64_t budget = kDefaultSearchBudget,
                                     int max_ground_size = kDefaultEnumerationBudget);

}  // namespace bergman
