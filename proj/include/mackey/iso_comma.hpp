#pragma once

#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "mackey/groupoid.hpp"

namespace mackey {

/// The iso-comma (u/v) of u: X → Z and v: Y → Z with its projections and the
/// tautological 2-cell u∘p ⇒ v∘q.
struct IsoCommaResult {
  GroupoidPtr apex;
  GroupoidFunctor proj_left;
  GroupoidFunctor proj_right;
  NatTransformation two_cell;
  /// (x, y, γ) for each apex object, in lexicographic order.
  std::vector<std::tuple<int, int, int>> triples;
};

/// Objects (x, y, γ: u(x) → v(y)) in lexicographic order; arrows (α, β) with
/// v(β)∘γ = γ'∘u(α), grouped by source object and ordered by (α, β).
IsoCommaResult iso_comma(GroupoidFunctor const& u, GroupoidFunctor const& v);

/// A square  P --q--> Y, P --p--> X, u: X → Z, v: Y → Z, gamma: u∘p ⇒ v∘q.
struct Square {
  GroupoidFunctor p;
  GroupoidFunctor q;
  NatTransformation gamma;
  GroupoidFunctor u;
  GroupoidFunctor v;
};

/// The iso-comma of the square's cospan and the functor ⟨p, q, γ⟩ into it.
std::pair<IsoCommaResult, GroupoidFunctor> comparison_functor(Square const& sq);
/// Throws TypeError for an ill-typed square.
bool is_mackey_square(Square const& sq);

/// Strict pullback: objects (x, y) with u(x) = v(y), arrows (α, β) with u(α) = v(β).
struct StrictPullback {
  GroupoidPtr apex;
  GroupoidFunctor p;
  GroupoidFunctor q;
};
StrictPullback strict_pullback(GroupoidFunctor const& u, GroupoidFunctor const& v);
/// The pullback square with identity 2-cell.
Square pullback_square(StrictPullback const& pb, GroupoidFunctor const& u, GroupoidFunctor const& v);
Square iso_comma_square(IsoCommaResult const& ic, GroupoidFunctor const& u, GroupoidFunctor const& v);

/// Some natural isomorphism F1 ⇒ F2, or none. Exhaustive over the component
/// at the least object of each connected component; the rest follows from a
/// spanning tree.
std::optional<NatTransformation> functor_iso(GroupoidFunctor const& F1, GroupoidFunctor const& F2, Budget& budget);
std::optional<NatTransformation> functor_iso(GroupoidFunctor const& F1, GroupoidFunctor const& F2);

/// Every natural transformation F1 ⇒ F2, in lexicographic order of components.
std::vector<NatTransformation> enumerate_nat_transfs(GroupoidFunctor const& F1, GroupoidFunctor const& F2,
                                                   Budget& budget);
std::vector<NatTransformation> enumerate_nat_transfs(GroupoidFunctor const& F1, GroupoidFunctor const& F2);

/// Every functor A → B.
std::vector<GroupoidFunctor> enumerate_functors(GroupoidPtr const& A, GroupoidPtr const& B, Budget& budget);
std::vector<GroupoidFunctor> enumerate_functors(GroupoidPtr const& A, GroupoidPtr const& B);

}  // namespace mackey
