#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "mackey/group.hpp"

namespace mackey {

/// Finite groupoid with objects 0..n-1 and arrows 0..m-1, stored with its
/// full composition table. Values are immutable once built.
class FiniteGroupoid {
 public:
  struct ArrowData {
    int src;
    int tgt;
  };
  /// compose(g, f) must return g∘f for every pair with tgt(f) == src(g).
  using ComposeFn = std::function<int(int g, int f)>;

  FiniteGroupoid() = default;

  /// Builds the tables; inverses are derived. Does not check the axioms;
  /// call check_axioms() on untrusted input.
  static FiniteGroupoid build(int num_objects, std::vector<ArrowData> arrows, std::vector<int> identities,
                              ComposeFn const& compose);

  /// One-object groupoid whose arrow g is the group element g.
  static FiniteGroupoid from_group(Group const& G);

  int num_objects() const noexcept { return n_; }
  int num_arrows() const noexcept { return static_cast<int>(arrows_.size()); }
  int src(int a) const { return arrows_[a].src; }
  int tgt(int a) const { return arrows_[a].tgt; }
  int identity(int x) const { return identity_[x]; }
  int inverse(int a) const { return inverse_[a]; }
  /// g∘f; requires tgt(f) == src(g).
  int compose(int g, int f) const { return table_[offset_[g] + in_pos_[f]]; }
  bool composable(int g, int f) const { return tgt(f) == src(g); }

  /// Arrows leaving x in increasing id order.
  std::vector<int> const& out_arrows(int x) const { return out_[x]; }
  /// Arrows entering x in increasing id order.
  std::vector<int> const& in_arrows(int x) const { return in_[x]; }
  /// Position of a within out_arrows(src(a)).
  int out_position(int a) const { return out_pos_[a]; }
  std::vector<int> hom(int x, int y) const;

  /// Exhaustive check of unit, associativity and inverse laws; throws ParseError.
  void check_axioms() const;

  /// The one-object group End(x), with element i mapped to arrow arrows[i].
  struct VertexGroup {
    GroupPtr group;
    std::vector<int> arrows;       ///< element → arrow
    std::vector<int> element_of;   ///< arrow → element, -1 off End(x)
  };
  VertexGroup vertex_group(int x) const;

  /// Structural equality of the stored tables (not isomorphism).
  bool operator==(FiniteGroupoid const& o) const;

 private:
  int n_ = 0;
  std::vector<ArrowData> arrows_;
  std::vector<int> identity_;
  std::vector<int> inverse_;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
  std::vector<int> out_pos_;
  std::vector<int> in_pos_;
  std::vector<std::size_t> offset_;
  std::vector<int> table_;
};

using GroupoidPtr = std::shared_ptr<const FiniteGroupoid>;

inline GroupoidPtr share(FiniteGroupoid G) { return std::make_shared<const FiniteGroupoid>(std::move(G)); }
GroupoidPtr group_groupoid(GroupPtr const& G);

struct GroupoidFunctor {
  GroupoidPtr source;
  GroupoidPtr target;
  std::vector<int> object_map;
  std::vector<int> arrow_map;

  int obj(int x) const { return object_map[x]; }
  int arr(int a) const { return arrow_map[a]; }
};

/// Validates functoriality; throws TypeError.
GroupoidFunctor make_functor(GroupoidPtr source, GroupoidPtr target, std::vector<int> object_map,
                             std::vector<int> arrow_map);
void check_functor(GroupoidFunctor const& F);
GroupoidFunctor identity_functor(GroupoidPtr const& G);
GroupoidFunctor compose(GroupoidFunctor const& G, GroupoidFunctor const& F);  ///< G∘F
/// Functor between one-object groupoids built by group_groupoid.
GroupoidFunctor functor_from_hom(Hom const& f, GroupoidPtr src, GroupoidPtr tgt);
GroupoidFunctor functor_from_hom(Hom const& f);
bool same_functor(GroupoidFunctor const& F, GroupoidFunctor const& G);

bool is_faithful(GroupoidFunctor const& F);
bool is_full(GroupoidFunctor const& F);
bool is_essentially_surjective(GroupoidFunctor const& F);
bool is_equivalence(GroupoidFunctor const& F);

/// Natural transformation `from ⇒ to`; components[x]: from(x) → to(x).
struct NatTransformation {
  GroupoidFunctor from;
  GroupoidFunctor to;
  std::vector<int> components;
};

void check_nat(NatTransformation const& t);
NatTransformation identity_nat(GroupoidFunctor const& F);
NatTransformation vertical(NatTransformation const& second, NatTransformation const& first);
NatTransformation inverse(NatTransformation const& t);
/// H θ : H∘F ⇒ H∘G
NatTransformation whisker_left(GroupoidFunctor const& H, NatTransformation const& t);
/// θ K : F∘K ⇒ G∘K
NatTransformation whisker_right(NatTransformation const& t, GroupoidFunctor const& K);

// ---------------------------------------------------------------------------

struct DisjointUnion {
  GroupoidPtr groupoid;
  std::vector<GroupoidFunctor> inclusions;
};
DisjointUnion disjoint_union(std::vector<GroupoidPtr> const& parts);

/// For each object, the index of its component; components are numbered by
/// their least object.
std::vector<int> component_index(FiniteGroupoid const& G);
int num_components(FiniteGroupoid const& G);

struct Component {
  GroupoidPtr groupoid;
  GroupoidFunctor inclusion;
};
/// Full subgroupoid on `objects` (kept in the given order) with its inclusion.
Component full_subgroupoid(GroupoidPtr const& G, std::vector<int> const& objects);
std::vector<Component> connected_components(GroupoidPtr const& G);

struct Skeleton {
  std::vector<GroupoidPtr> groups;   ///< End of the least object of each component
  std::vector<int> representatives;  ///< that least object
  GroupoidFunctor inclusion;         ///< disjoint union of `groups` → G
};
Skeleton skeleton(GroupoidPtr const& G);

/// Coproduct of functors F_i : A_i → B_i.
GroupoidFunctor coproduct(std::vector<GroupoidFunctor> const& parts);
/// Copairing (u_1, ..., u_k): ⊔ A_i → B of functors with a common target.
GroupoidFunctor copair(std::vector<GroupoidFunctor> const& parts);

}  // namespace mackey
