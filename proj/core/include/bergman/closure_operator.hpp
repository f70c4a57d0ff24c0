#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bergman/vertex_label.hpp"

namespace bergman {

/// Subset of a closure operator's ground set, bit i = i-th element in the
/// operator's sorted name table. Ground sets are capped at 63 elements.
using ElemMask = std::uint64_t;

/// Lexicographic order on the increasing index sequences of two masks.
bool mask_lex_less(ElemMask a, ElemMask b);

/// Closure operator on a finite ground set, stored as its intersection-closed
/// family of flats. The derived closure f(A) is the intersection of all flats
/// containing A. Immutable after construction.
class ClosureOperator {
 public:
  /// Validates that E is in the family and the family is closed under
  /// pairwise intersection; throws InputError naming a witness pair
  /// otherwise. Flats are given as element-name lists.
  static ClosureOperator validate(std::vector<std::string> ground,
                                  const std::vector<std::vector<std::string>>& flats);

  int ground_size() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& ground_names() const { return names_; }
  ElemMask full_mask() const { return names_.empty() ? 0 : (ElemMask{1} << names_.size()) - 1; }

  /// All flats including E, sorted by mask_lex_less.
  const std::vector<ElemMask>& flats() const { return flats_; }
  std::vector<ElemMask> proper_flats() const;

  bool is_flat(ElemMask a) const;
  ElemMask closure(ElemMask a) const;
  ElemMask closure_of_empty() const { return closure(0); }

  /// I is independent iff i ∉ f(I∖{i}) for every i ∈ I.
  bool is_independent(ElemMask i) const;

  // Name/mask conversion.
  int element_index(const std::string& name) const;  // -1 if absent
  ElemMask mask_from_names(const std::vector<std::string>& names) const;
  std::vector<std::string> names_from_mask(ElemMask m) const;
  VertexLabel flat_label(ElemMask m) const { return VertexLabel::flat(names_from_mask(m)); }
  VertexLabel ground_label(int i) const { return VertexLabel::ground(names_[static_cast<std::size_t>(i)]); }

  bool operator==(const ClosureOperator& o) const {
    return names_ == o.names_ && flats_ == o.flats_;
  }

 private:
  ClosureOperator(std::vector<std::string> names, std::vector<ElemMask> flats)
      : names_(std::move(names)), flats_(std::move(flats)) {}

  std::vector<std::string> names_;  // sorted unique element names
  std::vector<ElemMask> flats_;     // sorted by mask_lex_less, contains E
};

/// Strictly increasing chain of proper flats (possibly empty).
struct Flag {
  std::vector<ElemMask> chain;
};

/// Throws InputError unless every entry is a proper flat and consecutive
/// entries are strictly increasing.
void check_flag(const ClosureOperator& f, const Flag& flag);

inline constexpr int kDefaultEnumerationBudget = 16;

struct Enumeration {
  std::vector<ElemMask> independent_sets;
  std::vector<ElemMask> bases;
  std::vector<ElemMask> maximal_independent_sets;
  std::vector<ElemMask> proper_flats;
  /// Pairs (F, G) of flats with F ⊊ G and no flat strictly between.
  std::vector<std::pair<ElemMask, ElemMask>> cover_relations;
};

/// Complete enumerations over 2^E; throws BudgetError when |E| exceeds the
/// budget.
Enumeration enumerate_sets(const ClosureOperator& f,
                           int max_ground_size = kDefaultEnumerationBudget);

/// f/F on E∖F: flats are {G∖F : G flat of f, G ⊇ F}. Element names are kept.
ClosureOperator contraction(const ClosureOperator& f, ElemMask flat);

/// f|_F on F: flats are the flats of f contained in F.
ClosureOperator restriction(const ClosureOperator& f, ElemMask flat);

struct MatroidCheck {
  bool is_matroid = false;
  /// On failure, a human-readable reason plus the violating sets: either a
  /// pair of maximal independent sets (exchange/equicardinality failure) or
  /// (F, {x}, {y}) witnessing a closure-exchange failure.
  std::string reason;
  std::vector<ElemMask> witness;
};

/// Recognizes closure operators of matroids: maximal independent sets must
/// be equicardinal and satisfy basis exchange, and the closure itself must
/// satisfy the exchange property (y ∈ f(F∪x)∖F implies x ∈ f(F∪y)) on every
/// flat F.
MatroidCheck is_matroid(const ClosureOperator& f,
                        int max_ground_size = kDefaultEnumerationBudget);

/// Flats are all sets of size < rank, plus E.
ClosureOperator uniform_matroid(int rank, std::vector<std::string> ground);

/// Derives the closure f(A) = {x : rank(A∪x) = rank(A)} with rank taken from
/// the given basis family; throws InputError on an exchange violation.
ClosureOperator matroid_from_bases(std::vector<std::string> ground,
                                   const std::vector<std::vector<std::string>>& bases);

/// Density-controlled random subset family closed under intersection, with E
/// added; identical seeds produce identical operators.
ClosureOperator random_closure_operator(std::uint64_t seed, std::vector<std::string> ground,
                                        double density);

}  // namespace bergman
