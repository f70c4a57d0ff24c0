#include "bergman/closure_operator.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <unordered_set>

#include "bergman/errors.hpp"

namespace bergman {

namespace {

std::string set_to_string(const ClosureOperator& f, ElemMask m) {
  std::string out = "{";
  bool first = true;
  for (const std::string& name : f.names_from_mask(m)) {
    if (!first) out += ',';
    out += name;
    first = false;
  }
  return out + "}";
}

std::vector<std::string> sorted_unique_names(std::vector<std::string> ground) {
  for (const auto& name : ground) VertexLabel::check_element_name(name);
  std::sort(ground.begin(), ground.end());
  auto dup = std::adjacent_find(ground.begin(), ground.end());
  if (dup != ground.end()) throw InputError("duplicate ground element '" + *dup + "'");
  if (ground.size() > 63) throw InputError("ground sets are limited to 63 elements");
  return ground;
}

}  // namespace

bool mask_lex_less(ElemMask a, ElemMask b) {
  ElemMask d = a ^ b;
  if (d == 0) return false;
  int bit = std::countr_zero(d);
  ElemMask above = ~((ElemMask{2} << bit) - 1);
  if (a & (ElemMask{1} << bit)) return (b & above) != 0;
  return (a & above) == 0;
}

ClosureOperator ClosureOperator::validate(std::vector<std::string> ground,
                                          const std::vector<std::vector<std::string>>& flats) {
  std::vector<std::string> names = sorted_unique_names(std::move(ground));

  auto index_of = [&names](const std::string& name) {
    auto it = std::lower_bound(names.begin(), names.end(), name);
    if (it == names.end() || *it != name) throw InputError("flat element '" + name + "' is not in the ground set");
    return static_cast<int>(it - names.begin());
  };

  std::vector<ElemMask> masks;
  masks.reserve(flats.size());
  for (const auto& flat : flats) {
    ElemMask m = 0;
    for (const auto& name : flat) m |= ElemMask{1} << index_of(name);
    masks.push_back(m);
  }
  std::sort(masks.begin(), masks.end(), &mask_lex_less);
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());

  ClosureOperator f(std::move(names), std::move(masks));
  const ElemMask full = f.full_mask();
  if (!std::binary_search(f.flats_.begin(), f.flats_.end(), full, &mask_lex_less))
    throw InputError("flat family does not contain the ground set E");

  std::unordered_set<ElemMask> table(f.flats_.begin(), f.flats_.end());
  for (std::size_t i = 0; i < f.flats_.size(); ++i) {
    for (std::size_t j = i + 1; j < f.flats_.size(); ++j) {
      ElemMask meet = f.flats_[i] & f.flats_[j];
      if (!table.count(meet)) {
        throw InputError("flat family is not intersection-closed: " +
                         set_to_string(f, f.flats_[i]) + " ∩ " + set_to_string(f, f.flats_[j]) +
                         " = " + set_to_string(f, meet) + " is missing");
      }
    }
  }
  return f;
}

std::vector<ElemMask> ClosureOperator::proper_flats() const {
  std::vector<ElemMask> out;
  out.reserve(flats_.size() - 1);
  for (ElemMask m : flats_)
    if (m != full_mask()) out.push_back(m);
  return out;
}

bool ClosureOperator::is_flat(ElemMask a) const {
  return std::binary_search(flats_.begin(), flats_.end(), a, &mask_lex_less);
}

ElemMask ClosureOperator::closure(ElemMask a) const {
  if (a & ~full_mask()) throw InputError("closure: set contains elements outside the ground set");
  ElemMask m = full_mask();
  for (ElemMask flat : flats_)
    if ((a & ~flat) == 0) m &= flat;
  return m;
}

bool ClosureOperator::is_independent(ElemMask i) const {
  if (i & ~full_mask()) throw InputError("is_independent: set contains elements outside the ground set");
  for (ElemMask rest = i; rest;) {
    ElemMask bit = rest & (~rest + 1);
    rest ^= bit;
    if (closure(i ^ bit) & bit) return false;
  }
  return true;
}

int ClosureOperator::element_index(const std::string& name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name) return -1;
  return static_cast<int>(it - names_.begin());
}

ElemMask ClosureOperator::mask_from_names(const std::vector<std::string>& names) const {
  ElemMask m = 0;
  for (const auto& name : names) {
    int i = element_index(name);
    if (i < 0) throw InputError("element '" + name + "' is not in the ground set");
    m |= ElemMask{1} << i;
  }
  return m;
}

std::vector<std::string> ClosureOperator::names_from_mask(ElemMask m) const {
  std::vector<std::string> out;
  for (int i = 0; i < ground_size(); ++i)
    if (m & (ElemMask{1} << i)) out.push_back(names_[static_cast<std::size_t>(i)]);
  return out;
}

void check_flag(const ClosureOperator& f, const Flag& flag) {
  ElemMask prev = 0;
  bool first = true;
  for (ElemMask m : flag.chain) {
    if (!f.is_flat(m)) throw InputError("flag entry is not a flat");
    if (m == f.full_mask()) throw InputError("flag entry must be a proper flat");
    if (!first && !((prev & ~m) == 0 && prev != m))
      throw InputError("flag entries must be strictly increasing");
    prev = m;
    first = false;
  }
}

Enumeration enumerate_sets(const ClosureOperator& f, int max_ground_size) {
  if (f.ground_size() > max_ground_size)
    throw BudgetError("enumeration budget exceeded: |E| = " + std::to_string(f.ground_size()) +
                      " > " + std::to_string(max_ground_size));
  Enumeration out;
  const ElemMask full = f.full_mask();
  const std::uint64_t limit = ElemMask{1} << f.ground_size();
  for (ElemMask s = 0; s < limit; ++s) {
    if (!f.is_independent(s)) continue;
    out.independent_sets.push_back(s);
    if (f.closure(s) == full) out.bases.push_back(s);
    bool maximal = true;
    for (ElemMask rest = full & ~s; rest;) {
      ElemMask bit = rest & (~rest + 1);
      rest ^= bit;
      if (f.is_independent(s | bit)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.maximal_independent_sets.push_back(s);
  }
  out.proper_flats = f.proper_flats();
  for (ElemMask low : f.flats()) {
    for (ElemMask high : f.flats()) {
      if (low == high || (low & ~high)) continue;
      bool covered = false;
      for (ElemMask mid : f.flats()) {
        if (mid == low || mid == high) continue;
        if ((low & ~mid) == 0 && (mid & ~high) == 0) {
          covered = true;
          break;
        }
      }
      if (!covered) out.cover_relations.emplace_back(low, high);
    }
  }
  auto by_lex = [](std::vector<ElemMask>& v) { std::sort(v.begin(), v.end(), &mask_lex_less); };
  by_lex(out.independent_sets);
  by_lex(out.bases);
  by_lex(out.maximal_independent_sets);
  return out;
}

ClosureOperator contraction(const ClosureOperator& f, ElemMask flat) {
  if (!f.is_flat(flat)) throw InputError("contraction: F is not a flat");
  std::vector<std::string> names;
  for (int i = 0; i < f.ground_size(); ++i)
    if (!(flat & (ElemMask{1} << i))) names.push_back(f.ground_names()[static_cast<std::size_t>(i)]);
  std::vector<std::vector<std::string>> new_flats;
  for (ElemMask g : f.flats())
    if ((flat & ~g) == 0) new_flats.push_back(f.names_from_mask(g & ~flat));
  return ClosureOperator::validate(std::move(names), new_flats);
}

ClosureOperator restriction(const ClosureOperator& f, ElemMask flat) {
  if (!f.is_flat(flat)) throw InputError("restriction: F is not a flat");
  std::vector<std::string> names = f.names_from_mask(flat);
  std::vector<std::vector<std::string>> new_flats;
  for (ElemMask g : f.flats())
    if ((g & ~flat) == 0) new_flats.push_back(f.names_from_mask(g));
  return ClosureOperator::validate(std::move(names), new_flats);
}

MatroidCheck is_matroid(const ClosureOperator& f, int max_ground_size) {
  Enumeration e = enumerate_sets(f, max_ground_size);
  const auto& maxima = e.maximal_independent_sets;
  MatroidCheck out;

  for (std::size_t i = 0; i < maxima.size(); ++i) {
    for (std::size_t j = 0; j < maxima.size(); ++j) {
      if (i == j) continue;
      ElemMask b1 = maxima[i], b2 = maxima[j];
      if (std::popcount(b1) != std::popcount(b2)) {
        out.reason = "maximal independent sets of different sizes: " + set_to_string(f, b1) +
                     " and " + set_to_string(f, b2);
        out.witness = {b1, b2};
        return out;
      }
      for (ElemMask rest = b1 & ~b2; rest;) {
        ElemMask x = rest & (~rest + 1);
        rest ^= x;
        bool exchanged = false;
        for (ElemMask cand = b2 & ~b1; cand;) {
          ElemMask y = cand & (~cand + 1);
          cand ^= y;
          ElemMask swapped = (b1 ^ x) | y;
          if (std::binary_search(maxima.begin(), maxima.end(), swapped, &mask_lex_less)) {
            exchanged = true;
            break;
          }
        }
        if (!exchanged) {
          out.reason = "basis exchange fails between " + set_to_string(f, b1) + " and " +
                       set_to_string(f, b2);
          out.witness = {b1, b2};
          return out;
        }
      }
    }
  }

  // Closure exchange on flats: y ∈ f(F∪x) ∖ F implies x ∈ f(F∪y).
  for (ElemMask flat : f.flats()) {
    for (ElemMask xs = f.full_mask() & ~flat; xs;) {
      ElemMask x = xs & (~xs + 1);
      xs ^= x;
      ElemMask grown = f.closure(flat | x);
      for (ElemMask ys = grown & ~flat & ~x; ys;) {
        ElemMask y = ys & (~ys + 1);
        ys ^= y;
        if (!(f.closure(flat | y) & x)) {
          out.reason = "closure exchange fails on flat " + set_to_string(f, flat) + " with x = " +
                       set_to_string(f, x) + ", y = " + set_to_string(f, y);
          out.witness = {flat, x, y};
          return out;
        }
      }
    }
  }

  out.is_matroid = true;
  return out;
}

ClosureOperator uniform_matroid(int rank, std::vector<std::string> ground) {
  std::vector<std::string> names = sorted_unique_names(std::move(ground));
  const int n = static_cast<int>(names.size());
  if (rank < 0 || rank > n) throw InputError("uniform matroid rank out of range");
  if (n > kDefaultEnumerationBudget) throw BudgetError("uniform_matroid: ground set too large");

  std::vector<std::vector<std::string>> flats;
  const std::uint64_t limit = ElemMask{1} << n;
  for (ElemMask s = 0; s < limit; ++s) {
    if (std::popcount(s) < rank) {
      std::vector<std::string> flat;
      for (int i = 0; i < n; ++i)
        if (s & (ElemMask{1} << i)) flat.push_back(names[static_cast<std::size_t>(i)]);
      flats.push_back(std::move(flat));
    }
  }
  flats.push_back(names);
  return ClosureOperator::validate(names, flats);
}

ClosureOperator matroid_from_bases(std::vector<std::string> ground,
                                   const std::vector<std::vector<std::string>>& bases) {
  std::vector<std::string> names = sorted_unique_names(std::move(ground));
  if (bases.empty()) throw InputError("matroid_from_bases: empty basis family");
  const int n = static_cast<int>(names.size());
  if (n > kDefaultEnumerationBudget) throw BudgetError("matroid_from_bases: ground set too large");

  std::vector<ElemMask> basis_masks;
  for (const auto& b : bases) {
    ElemMask m = 0;
    for (const auto& name : b) {
      auto it = std::lower_bound(names.begin(), names.end(), name);
      if (it == names.end() || *it != name)
        throw InputError("basis element '" + name + "' is not in the ground set");
      m |= ElemMask{1} << (it - names.begin());
    }
    basis_masks.push_back(m);
  }
  std::sort(basis_masks.begin(), basis_masks.end(), &mask_lex_less);
  basis_masks.erase(std::unique(basis_masks.begin(), basis_masks.end()), basis_masks.end());

  for (ElemMask b1 : basis_masks) {
    for (ElemMask b2 : basis_masks) {
      if (std::popcount(b1) != std::popcount(b2))
        throw InputError("matroid_from_bases: bases of different sizes");
      for (ElemMask rest = b1 & ~b2; rest;) {
        ElemMask x = rest & (~rest + 1);
        rest ^= x;
        bool ok = false;
        for (ElemMask cand = b2 & ~b1; cand;) {
          ElemMask y = cand & (~cand + 1);
          cand ^= y;
          if (std::binary_search(basis_masks.begin(), basis_masks.end(), (b1 ^ x) | y,
                                 &mask_lex_less)) {
            ok = true;
            break;
          }
        }
        if (!ok) throw InputError("matroid_from_bases: basis exchange fails");
      }
    }
  }

  auto rank = [&basis_masks](ElemMask a) {
    int r = 0;
    for (ElemMask b : basis_masks) r = std::max(r, std::popcount(a & b));
    return r;
  };
  // Greedy closure via the rank function; correct because rank is the rank
  // function of a matroid once exchange holds.
  auto close = [&](ElemMask a) {
    ElemMask c = a;
    int r = rank(a);
    for (int i = 0; i < n; ++i) {
      ElemMask bit = ElemMask{1} << i;
      if (!(c & bit) && rank(a | bit) == r) c |= bit;
    }
    return c;
  };

  std::vector<ElemMask> flat_masks;
  const std::uint64_t limit = ElemMask{1} << n;
  for (ElemMask s = 0; s < limit; ++s) flat_masks.push_back(close(s));
  std::sort(flat_masks.begin(), flat_masks.end(), &mask_lex_less);
  flat_masks.erase(std::unique(flat_masks.begin(), flat_masks.end()), flat_masks.end());

  std::vector<std::vector<std::string>> flats;
  for (ElemMask m : flat_masks) {
    std::vector<std::string> flat;
    for (int i = 0; i < n; ++i)
      if (m & (ElemMask{1} << i)) flat.push_back(names[static_cast<std::size_t>(i)]);
    flats.push_back(std::move(flat));
  }
  return ClosureOperator::validate(names, flats);
}

ClosureOperator random_closure_operator(std::uint64_t seed, std::vector<std::string> ground,
                                        double density) {
  if (!(density > 0.0) || density > 1.0) throw InputError("density must be in (0, 1]");
  std::vector<std::string> names = sorted_unique_names(std::move(ground));
  const int n = static_cast<int>(names.size());
  if (n > kDefaultEnumerationBudget) throw BudgetError("random_closure_operator: ground set too large");

  std::mt19937_64 rng(seed);
  auto coin = [&rng, density]() {
    // Fixed mapping to [0,1) so output is identical across standard libraries.
    return static_cast<double>(rng() >> 11) * 0x1.0p-53 < density;
  };

  std::unordered_set<ElemMask> family;
  const std::uint64_t limit = ElemMask{1} << n;
  family.insert(limit - 1);
  for (ElemMask s = 0; s < limit - 1; ++s)
    if (coin()) family.insert(s);

  // Close under pairwise intersection.
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<ElemMask> snapshot(family.begin(), family.end());
    for (std::size_t i = 0; i < snapshot.size(); ++i)
      for (std::size_t j = i + 1; j < snapshot.size(); ++j)
        if (family.insert(snapshot[i] & snapshot[j]).second) changed = true;
  }

  std::vector<std::vector<std::string>> flats;
  for (ElemMask m : family) {
    std::vector<std::string> flat;
    for (int i = 0; i < n; ++i)
      if (m & (ElemMask{1} << i)) flat.push_back(names[static_cast<std::size_t>(i)]);
    flats.push_back(std::move(flat));
  }
  return ClosureOperator::validate(names, flats);
}

}  // namespace bergman
