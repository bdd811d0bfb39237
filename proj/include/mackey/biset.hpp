#pragma once

#include <string>
#include <vector>

#include "mackey/presentation.hpp"

namespace mackey {

/// A finite biset from H to G: a functor H^op × G → Set, stored as a set of
/// elements over pairs of objects with both actions tabulated. Element u sits
/// over (src_obj[u], tgt_obj[u]) ∈ H × G; an arrow g: x → x' of G sends it
/// to g·u over x', an arrow h: y' → y of H to u·h over y'.
struct Biset {
  GroupoidPtr source;  ///< H, acting on the right
  GroupoidPtr target;  ///< G, acting on the left
  std::vector<int> src_obj;
  std::vector<int> tgt_obj;
  std::vector<int> left;   ///< left[g * size + u], -1 when not composable
  std::vector<int> right;  ///< right[h * size + u], -1 when not composable

  int size() const { return static_cast<int>(src_obj.size()); }
  int act_left(int g, int u) const { return left[static_cast<std::size_t>(g) * size() + u]; }
  int act_right(int u, int h) const { return right[static_cast<std::size_t>(h) * size() + u]; }
};

/// Builds the action tables from element functions, which are only called on
/// composable arguments.
template <class L, class R>
Biset make_biset(GroupoidPtr source, GroupoidPtr target, std::vector<int> src_obj, std::vector<int> tgt_obj,
                 L const& left_fn, R const& right_fn) {
  Biset U{std::move(source), std::move(target), std::move(src_obj), std::move(tgt_obj), {}, {}};
  int const n = U.size();
  U.left.assign(static_cast<std::size_t>(U.target->num_arrows()) * n, -1);
  U.right.assign(static_cast<std::size_t>(U.source->num_arrows()) * n, -1);
  for (int g = 0; g < U.target->num_arrows(); ++g) {
    for (int u = 0; u < n; ++u) {
      if (U.target->src(g) == U.tgt_obj[u]) U.left[static_cast<std::size_t>(g) * n + u] = left_fn(g, u);
    }
  }
  for (int h = 0; h < U.source->num_arrows(); ++h) {
    for (int u = 0; u < n; ++u) {
      if (U.source->tgt(h) == U.src_obj[u]) U.right[static_cast<std::size_t>(h) * n + u] = right_fn(u, h);
    }
  }
  return U;
}

/// Functoriality of both actions and their commutation; throws TypeError.
void check_biset(Biset const& U);

/// The biset X(-, -): elements are the arrows, both actions by composition.
Biset identity_biset(GroupoidPtr const& X);
/// (G × H)/L for L ≤ G × H (elements g·|H| + h), with g·[a, b]·h = [ga, h⁻¹b].
Biset biset_from_subgroup(GroupPtr const& G, GroupPtr const& H, Subgroup const& L);
/// The homonymous biset of a letter: Ind_K^G = G with K acting on the right
/// through the inclusion, Res^G_K = G with K acting on the left, Infl^G_Q = Q
/// with G acting on the left through the surjection, Defl^G_Q = Q with G
/// acting on the right, Iso(f) = G' with G acting on the right through f.
Biset elementary_biset(Letter const& l);
/// Composite of the word's bisets, last letter outermost.
Biset word_biset(SpanWord const& w);

/// V ⊗_G U for U: H → G and V: G → K, the coend over G computed by
/// union-find; throws TypeError on mismatched middles and Error if the
/// induced action is ill-defined.
Biset tensor(Biset const& V, Biset const& U);
Biset disjoint_sum(Biset const& U, Biset const& V);

/// Orbits under both actions, ordered by least element.
std::vector<Biset> transitive_decomposition(Biset const& U);

bool is_right_free(Biset const& U);
bool is_left_free(Biset const& U);
inline bool is_bifree(Biset const& U) { return is_right_free(U) && is_left_free(U); }

/// {(g, h) : g·u = u·h} ≤ G × H for one-object endpoints.
Subgroup stabilizer(Biset const& U, int u);

/// Bouc's normal form Ind_D^G Infl_{D/C}^D Iso(f) Defl^B_{B/A} Res^H_B of a
/// transitive (G, H)-biset, read from the conjugacy-least point stabilizer L.
struct FiveForm {
  GroupPtr G;  ///< acting on the left
  GroupPtr H;  ///< acting on the right
  Subgroup L;  ///< ≤ G × H
  Subgroup D;  ///< first projection of L
  Subgroup C;  ///< {g : (g, e) ∈ L}
  Subgroup B;  ///< second projection of L
  Subgroup A;  ///< {h : (e, h) ∈ L}
  /// f(bA) = dC, listed as (least element of bA, least element of dC)
  std::vector<std::pair<Element, Element>> f;
};
FiveForm bouc_canonical_form(Biset const& U);
FiveForm five_form_of(GroupPtr const& G, GroupPtr const& H, Subgroup const& L);
std::string format_five_form(FiveForm const& f);
/// Res^H_B, Defl^B_{B/A}, Iso(f), Infl^D_{D/C}, Ind_D^G as a word from H to G.
SpanWord five_form_word(FiveForm const& f);

/// Class of a transitive biset between connected components: the least
/// stabilizer at the least objects, as elements of the product of vertex groups.
struct BisetClassKey {
  int source_component = 0;
  int target_component = 0;
  Subgroup L;
  bool operator<(BisetClassKey const& o) const;
  bool operator==(BisetClassKey const& o) const;
};

/// An element of the double Burnside module B(H, G) over ℤ.
struct BisetSum {
  GroupoidPtr source;
  GroupoidPtr target;
  LinComb<BisetClassKey> terms;
  bool operator==(BisetSum const& o) const;
  bool operator!=(BisetSum const& o) const { return !(*this == o); }
};

BisetSum biset_class(Biset const& U);
BisetSum add(BisetSum const& a, BisetSum const& b);
BisetSum scale(BisetSum const& a, long long c);
std::string format_biset_sum(BisetSum const& s, Ring const& ring = {});
/// A transitive biset with the given class.
Biset biset_representative(GroupoidPtr const& H, GroupoidPtr const& G, BisetClassKey const& k);

/// Classification through stabilizers.
bool biset_iso(Biset const& U, Biset const& V);
/// Exhaustive search for an action-preserving bijection.
bool biset_iso_search(Biset const& U, Biset const& V);

/// Both sides as sums of word bisets, compared as classes.
RelationReport check_biset_relation(RelationInstance const& r);

/// Bouc's 2.(d) for (M, N) derived from the deflativity relation of the
/// comparison surjection G ↠ G/M ×_{G/MN} G/N: every step of the chain is
/// evaluated and the first failing step reported.
RelationReport bouc_chain(GroupPtr const& G, Subgroup const& M, Subgroup const& N);

/// Basis of transitive (G, G)-bisets by classes of L ≤ G × G and the
/// structure constants of ⊗ on it.
struct DoubleBurnsideTable {
  GroupPtr G;
  std::vector<FiveForm> basis;
  std::vector<std::vector<LinComb<int>>> product;  ///< product[i][j] = basis_i ⊗ basis_j
};
DoubleBurnsideTable double_burnside_table(GroupPtr const& G, int bound = 6);

}  // namespace mackey
