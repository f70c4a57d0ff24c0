#pragma once

#include <cstdint>
#include <string>

#include "bergman/closure_operator.hpp"

namespace bergman {

/// Five-element operator whose proper flats are ∅, the singletons, and the
/// pairs {1,2},{1,3},{2,3},{3,4},{3,5},{4,5}. Its independence complex is a
/// complete graph plus two triangles sharing one vertex; the classic case
/// where the augmented Bergman complex is shellable but bases cannot come
/// first.
ClosureOperator example_1_3();

/// Four-element operator with flats ∅,{1},{2},{3},{4},{1,2},{3,4},E. Its
/// Bergman complex is two disjoint wedges, so nothing here is shellable.
ClosureOperator two_wedge();

/// Resolves a builtin name ("example-1-3", "two-wedge", "uniform:r,n",
/// "random:n[,density]") or reads a JSON instance file. The seed only
/// affects the random builtin.
ClosureOperator resolve_instance(const std::string& name_or_path, std::uint64_t seed = 0);

}  // namespace bergman
