#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mackey/error.hpp"

namespace mackey {

/// Elements of a finite group are the integers 0..order-1; 0 is the identity.
using Element = int;

/// A subgroup (or any subset) stored as a sorted list of elements.
using Subgroup = std::vector<Element>;

/// Finite group given by its full multiplication table.
class Group {
 public:
  /// Validates `table` (closure, associativity, identity, inverses) and
  /// relabels so that the identity comes first; other elements keep input order.
  static Group from_table(std::vector<std::vector<int>> const& table, std::string name = "");

  /// Closure of permutation generators (images of 0..degree-1). Elements are
  /// numbered identity first, then in breadth-first discovery order, where the
  /// children of p are p*g for the generators g in input order and
  /// (p*q)(i) = p(q(i)).
  static Group from_permutations(std::vector<std::vector<int>> const& gens, std::string name = "");

  /// Table accepted without validation; entry a*n+b is the product ab.
  static Group unchecked(int order, std::vector<int> table, std::string name = "");

  int order() const noexcept { return n_; }
  Element mul(Element a, Element b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  Element inv(Element a) const { return inv_[a]; }
  /// x a x^-1
  Element conj(Element x, Element a) const { return mul(mul(x, a), inv_[x]); }
  int element_order(Element a) const { return orders_[a]; }

  std::string const& name() const noexcept { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }
  std::vector<int> const& table() const noexcept { return table_; }

  /// Permutation realizing each element, when the group was built from permutations.
  std::vector<std::vector<int>> const& permutations() const noexcept { return perms_; }
  std::optional<Element> find_permutation(std::vector<int> const& perm) const;

  /// Every subgroup, sorted by (order, elements). Computed once and cached.
  std::vector<Subgroup> const& subgroups() const;

  bool operator==(Group const& other) const { return n_ == other.n_ && table_ == other.table_; }

 private:
  Group(int n, std::vector<int> table, std::string name);

  struct Cache {
    std::once_flag once;
    std::vector<Subgroup> subgroups;
  };

  int n_ = 0;
  std::vector<int> table_;
  std::vector<int> inv_;
  std::vector<int> orders_;
  std::string name_;
  std::vector<std::vector<int>> perms_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

using GroupPtr = std::shared_ptr<const Group>;

inline GroupPtr share(Group g) { return std::make_shared<const Group>(std::move(g)); }

// ---------------------------------------------------------------------------
// Subgroups

Subgroup generate(Group const& G, std::vector<Element> const& gens);
Subgroup whole(Group const& G);
Subgroup trivial_subgroup();
bool is_subgroup(Group const& G, Subgroup const& S);
bool is_normal(Group const& G, Subgroup const& S);
bool contains(Subgroup const& S, Element g);
std::vector<Subgroup> normal_subgroups(Group const& G);
Subgroup conjugate(Group const& G, Subgroup const& S, Element x);  ///< x S x^-1
Subgroup intersect(Subgroup const& A, Subgroup const& B);
Subgroup product_set(Group const& G, Subgroup const& A, Subgroup const& B);  ///< AB
Subgroup normalizer(Group const& G, Subgroup const& S);
Subgroup centralizer(Group const& G, Subgroup const& S);
Subgroup center(Group const& G);
/// Lexicographically least conjugate of S.
Subgroup conjugacy_rep(Group const& G, Subgroup const& S);
/// Representatives (lex-least in their class) of conjugacy classes of
/// subgroups, sorted by (order, elements).
std::vector<Subgroup> subgroup_classes(Group const& G);
/// Smallest generating list found greedily (elements of large order first).
std::vector<Element> generators(Group const& G, Subgroup const& S);
std::vector<Element> generators(Group const& G);
/// Minimum number of generators, computed exhaustively.
int rank(Group const& G);

struct DoubleCoset {
  Element rep;  ///< least element of the double coset
  int size;
};
/// Double cosets H\G/K in order of their least elements.
std::vector<DoubleCoset> double_cosets(Group const& G, Subgroup const& H, Subgroup const& K);

// ---------------------------------------------------------------------------
// Homomorphisms

struct Hom {
  GroupPtr src;
  GroupPtr tgt;
  std::vector<Element> map;
  Element operator()(Element g) const { return map[g]; }
  bool operator==(Hom const& o) const { return *src == *o.src && *tgt == *o.tgt && map == o.map; }
};

/// Checks the homomorphism property; throws TypeError otherwise.
Hom make_hom(GroupPtr src, GroupPtr tgt, std::vector<Element> map);
Hom identity_hom(GroupPtr G);
Hom compose(Hom const& g, Hom const& f);  ///< g∘f
Hom inverse(Hom const& f);                ///< requires an isomorphism
Hom conjugation(GroupPtr G, Element x);   ///< c_x(g) = x g x^-1 on G
/// f followed by conjugation by x in the target.
Hom conjugated(Hom const& f, Element x);
Subgroup kernel(Hom const& f);
Subgroup image(Hom const& f);
bool is_injective(Hom const& f);
bool is_surjective(Hom const& f);
bool is_isomorphism(Hom const& f);

/// All homomorphisms S → T, ordered lexicographically by generator images.
std::vector<Hom> all_homs(GroupPtr S, GroupPtr T, Budget& budget);
std::vector<Hom> all_homs(GroupPtr S, GroupPtr T);
std::vector<Hom> isomorphisms(GroupPtr S, GroupPtr T);
std::optional<Hom> find_isomorphism(GroupPtr S, GroupPtr T);

// ---------------------------------------------------------------------------
// Constructions

struct Embedding {
  GroupPtr group;  ///< the subgroup as a group, elements in sorted order of S
  Hom incl;
};
Embedding subgroup_group(GroupPtr G, Subgroup const& S);

struct Quotient {
  GroupPtr group;  ///< cosets numbered by their least element
  Hom proj;
};
Quotient quotient(GroupPtr G, Subgroup const& N);

/// Elements (g, h) numbered g*|H| + h.
GroupPtr direct_product(GroupPtr G, GroupPtr H);
inline Element pair_element(Group const& /*G*/, Group const& H, Element g, Element h) {
  return g * H.order() + h;
}

/// A subset of S × T closed under multiplication, listed with (e, e) first,
/// as a group with its two projections. Element i is elems[i].
struct PairSubgroup {
  GroupPtr group;
  Hom pr1;
  Hom pr2;
};
PairSubgroup pair_subgroup(GroupPtr S, GroupPtr T, std::vector<std::pair<Element, Element>> const& elems);

struct FibreProduct {
  GroupPtr group;  ///< {(s, t) : a(s) = b(t)} ≤ S × T
  Hom pr1;
  Hom pr2;
};
FibreProduct fibre_product(Hom const& a, Hom const& b);

/// The map Q1 → Q2 with q∘p1 = p2, for surjections p1: G → Q1, p2: G → Q2
/// with ker p1 ≤ ker p2.
Hom induced_on_quotients(Hom const& p1, Hom const& p2);

// ---------------------------------------------------------------------------
// Named groups

GroupPtr cyclic(int n);
GroupPtr symmetric(int n);
GroupPtr dihedral(int n);  ///< order 2n
GroupPtr klein();
GroupPtr quaternion();
GroupPtr trivial_group();
/// "1", "Cn", "Sn" (n ≤ 5), "Dn" (symmetries of the n-gon, order 2n), "Q8",
/// "V4", and products "AxB" of those ("C2xC2" is the Klein group).
GroupPtr named_group(std::string const& name);

std::string format_subgroup(Subgroup const& S);

}  // namespace mackey
