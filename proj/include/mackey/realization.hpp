#pragma once

#include "mackey/biset.hpp"

namespace mackey {

/// The biset Y(b-, -) ⊗_S X(-, a-) of a span X <-a- S -b-> Y: pairs of
/// arrows (α: b(s) → y, β: x → a(s)) over objects s of S modulo
/// (α∘b(φ), β) ∼ (α, a(φ)∘β), with Y acting by post- and X by precomposition.
Biset realize(Span const& s);
/// Sum of the realized class representatives.
BisetSum realize(SpanSum const& s);

/// Classes of realize(s2∘s1) against realize(s2) ⊗ realize(s1).
RelationReport check_functorial(Span const& s1, Span const& s2);

/// [Q ←p G →p Q] compared with id_Q on both sides.
struct KernelReport {
  bool span_is_identity = false;
  bool biset_is_identity = false;
};
/// Throws TypeError unless p is surjective.
KernelReport kernel_witness(Hom const& p);

/// The span [H ← L → G] given by the two projections of L ≤ G × H.
GroupSpan section(FiveForm const& form);

/// For pair faithful_right (resp. faithful_both): realize sends the span basis
/// of each of Hom(H, G), End(G), End(H) bijectively onto the transitive
/// right-free (resp. bifree) biset classes, and composites of basis elements
/// End(H) × Hom(H, G) and Hom(H, G) × End(G) agree after realization.
RelationReport check_restricted_iso(PairKind pair, GroupPtr const& H, GroupPtr const& G, int bound = 6);

}  // namespace mackey
