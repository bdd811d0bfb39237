#pragma once

#include <optional>
#include <vector>

#include "mackey/iso_comma.hpp"
#include "mackey/lincomb.hpp"

namespace mackey {

/// A finite left G-set on points 0..n-1; action[g * n + x] = g·x.
struct GSet {
  GroupPtr group;
  int size = 0;
  std::vector<int> action;

  int act(Element g, int x) const { return action[static_cast<std::size_t>(g) * size + x]; }
};

/// Throws TypeError unless the action is a group action.
void check_gset(GSet const& X);
GSet point_gset(GroupPtr const& G);
/// G/H with cosets numbered by their least element.
GSet coset_gset(GroupPtr const& G, Subgroup const& H);
GSet disjoint_union(GSet const& X, GSet const& Y);
GSet gset_product(GSet const& X, GSet const& Y);

struct GMap {
  GSet source;
  GSet target;
  std::vector<int> map;
  int operator()(int x) const { return map[x]; }
};

/// Throws TypeError unless equivariant.
void check_gmap(GMap const& f);
GMap identity_gmap(GSet const& X);
GMap to_point(GSet const& X);
GMap compose(GMap const& g, GMap const& f);  ///< g∘f
/// Every G-map X → Y.
std::vector<GMap> all_gmaps(GSet const& X, GSet const& Y);
/// Every G-isomorphism X → Y.
std::vector<GMap> gset_isomorphisms(GSet const& X, GSet const& Y);

struct Orbit {
  GSet gset;                ///< the orbit as a transitive G-set
  std::vector<int> points;  ///< its points in X, least first
  Subgroup stabilizer;      ///< of the least point
};
/// Orbits in order of least point.
std::vector<Orbit> orbit_decomposition(GSet const& X);

struct GSetPullback {
  GSet apex;  ///< pairs (x, y) with f(x) = g(y), in lexicographic order
  GMap p;
  GMap q;
};
/// Throws TypeError unless f and g share their target.
GSetPullback pullback(GMap const& f, GMap const& g);

/// A twisting map τ: X → G^c; as a 2-cell f₁ ⇒ f₂ it satisfies τ(x)·f₁(x) = f₂(x).
struct TwistingMap {
  std::vector<Element> tau;
};
/// τ(g·x) = g τ(x) g⁻¹ for all g, x.
bool is_twisting(GSet const& X, TwistingMap const& t);
/// Also checks τ(x)·f₁(x) = f₂(x).
bool is_twisting_between(GMap const& f1, GMap const& f2, TwistingMap const& t);
/// (τ'·τ)(x) = τ'(x) τ(x)
TwistingMap vertical(Group const& G, TwistingMap const& second, TwistingMap const& first);
/// For τ: f₁ ⇒ f₂ (X → Y) and σ: g₁ ⇒ g₂ (Y → Z): (σ∘τ)(x) = τ(x)·σ(f₁(x)).
TwistingMap horizontal(TwistingMap const& sigma, TwistingMap const& tau, GMap const& f1);
/// Every twisting map f₁ ⇒ f₂, solved orbit by orbit.
std::vector<TwistingMap> twisting_maps(GMap const& f1, GMap const& f2);
/// Some twisting map f₁ ⇒ f₂; throws TypeError unless parallel.
std::optional<TwistingMap> fused_gmap_related(GMap const& f1, GMap const& f2);

/// G ⋉ X: objects the points, arrows (g, x): x → g·x numbered g·|X| + x,
/// composed by (h, g·x)∘(g, x) = (hg, x), with the faithful projection to G.
struct Transport {
  GroupoidPtr groupoid;
  GroupoidFunctor projection;
};
Transport transport_groupoid(GSet const& X);
/// G ⋉ f between the given transport groupoids.
GroupoidFunctor transport_functor(GMap const& f, GroupoidPtr const& source, GroupoidPtr const& target);
GroupoidFunctor transport_functor(GMap const& f);
/// Component at x is the arrow (τ(x), f₁(x)).
NatTransformation transport_2cell(GMap const& f1, GMap const& f2, TwistingMap const& t);
/// The twisting map whose transport is α; throws TypeError if α is not
/// between transported functors.
TwistingMap nat_to_twist(NatTransformation const& alpha, GSet const& X);

/// gH ↦ gaH on G/H for a in the normalizer of H; TypeError otherwise.
GMap right_translation(GroupPtr const& G, Subgroup const& H, Element a);

/// Spans X ← S → Y of G-sets.
struct GSetSpan {
  GMap left;
  GMap right;
};
/// An isomorphism of apexes commuting with both legs up to twisting maps.
bool fused_span_equivalent(GSetSpan const& s1, GSetSpan const& s2);
/// The same with strictly commuting legs.
bool strict_span_equivalent(GSetSpan const& s1, GSetSpan const& s2);

/// The pullback square of (f, g) is a Mackey square in the 2-category of
/// G-sets, G-maps and twisting maps, tested against every orbit G/H as the
/// test object: the comparison from G-maps T → P to (t, s, γ) triples is
/// essentially surjective and fully faithful.
bool check_fused_pullback_mackey(GMap const& f, GMap const& g);

/// The transported pullback square (with identity 2-cell) passes is_mackey_square.
bool check_transport_mackey_preservation(GMap const& f, GMap const& g);

/// Multiplication of the Burnside ring on the orbit basis.
struct BurnsideTable {
  GroupPtr group;
  std::vector<Subgroup> basis;                     ///< subgroup class representatives
  std::vector<std::vector<LinComb<int>>> product;  ///< [G/H_i]·[G/H_j]
};
/// Products via pullback over the point and orbit decomposition.
BurnsideTable burnside_table(GroupPtr const& G, int bound = 8);
/// Class index of a transitive G-set in `basis`.
int orbit_class(GSet const& X, std::vector<Subgroup> const& basis);

}  // namespace mackey
