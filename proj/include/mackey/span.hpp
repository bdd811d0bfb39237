#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mackey/iso_comma.hpp"
#include "mackey/lincomb.hpp"

namespace mackey {

/// A span [H <-left- S -right-> G] of groups, read as a morphism H → G.
struct GroupSpan {
  GroupPtr apex;
  Hom left;   ///< S → H
  Hom right;  ///< S → G
  GroupPtr const& source() const { return left.tgt; }
  GroupPtr const& target() const { return right.tgt; }
};

GroupSpan identity_group_span(GroupPtr const& G);

/// Equivalence class of a GroupSpan. Two spans (S, b, a) and (S', b', a') are
/// equivalent iff a' s = c_x a and b' s = c_y b for an isomorphism s and x ∈ G,
/// y ∈ H. The code is the least encoding over all such relabelings: images of
/// a minimal generating tuple under both legs, their labels, and the table of
/// S in breadth-first order from that tuple. `rep` is the span the least code
/// was read from.
struct GroupSpanKey {
  std::shared_ptr<const std::vector<int>> code;
  GroupSpan rep;

  bool operator<(GroupSpanKey const& o) const { return *code < *o.code; }
  bool operator==(GroupSpanKey const& o) const { return *code == *o.code; }
  bool operator!=(GroupSpanKey const& o) const { return !(*this == o); }
};

/// Results are cached process-wide.
GroupSpanKey canonical_key(GroupSpan const& s, Budget& budget);
GroupSpanKey canonical_key(GroupSpan const& s);

/// The factorization H ⊇ D ≅ S/N ← S → S/M ≅ B ⊆ G of a connected span, read
/// off the canonical representative.
struct SixForm {
  Subgroup D;           ///< image of the left leg, in H
  Subgroup N;           ///< kernel of the left leg, in the canonical labeling of S
  Subgroup M;           ///< kernel of the right leg
  Subgroup B;           ///< image of the right leg, in G
  GroupPtr S;           ///< canonically labeled apex
  std::vector<Element> ell;  ///< coset of N (by least element) → element of D
  std::vector<Element> f;    ///< coset of M (by least element) → element of B
};
SixForm six_form(GroupSpanKey const& key);
std::string format_six_form(SixForm const& s);

/// Short deterministic text for a key; "id" for the identity class.
std::string key_string(GroupSpanKey const& key);

/// Composite s2∘s1 (apply s1 first): orbits of S1 × S2 on G = target of s1,
/// one term per double coset l2(S2)\G/r1(S1) with its stabilizer as apex.
LinComb<GroupSpanKey> compose_group_spans(GroupSpan const& s1, GroupSpan const& s2);

// ---------------------------------------------------------------------------
// Spans of groupoids

/// A span X <-left- S -right-> Y of groupoids, read as a morphism X → Y.
struct Span {
  GroupoidFunctor left;
  GroupoidFunctor right;
  GroupoidPtr const& apex() const { return left.source; }
  GroupoidPtr const& source() const { return left.target; }
  GroupoidPtr const& target() const { return right.target; }
};

/// Throws TypeError unless the legs share their source.
void check_span(Span const& s);
Span to_span(GroupSpan const& s);
Span identity_span(GroupoidPtr const& X);
/// The span with empty apex.
Span zero_span(GroupoidPtr const& X, GroupoidPtr const& Y);
/// Apex S1 ⊔ S2 with the copaired legs.
Span sum_span(Span const& a, Span const& b);

/// Basis key of a connected span between connected components: the
/// components of the endpoints (numbered by least object) and the class of
/// the span transported to the vertex groups at their least objects.
struct SpanClassKey {
  int source_component = 0;
  int target_component = 0;
  GroupSpanKey key;

  bool operator<(SpanClassKey const& o) const;
  bool operator==(SpanClassKey const& o) const;
};

/// An element of the Hom module Sp(X, Y) over ℤ.
struct SpanSum {
  GroupoidPtr source;
  GroupoidPtr target;
  LinComb<SpanClassKey> terms;

  bool operator==(SpanSum const& o) const;
  bool operator!=(SpanSum const& o) const { return !(*this == o); }
};

SpanSum zero(GroupoidPtr const& X, GroupoidPtr const& Y);
SpanSum add(SpanSum const& a, SpanSum const& b);
SpanSum scale(SpanSum const& a, long long c);
SpanSum from_group_terms(GroupPtr const& H, GroupPtr const& G, LinComb<GroupSpanKey> const& terms);
SpanSum span_class(GroupSpan const& s);

/// Splits the apex into connected components and canonicalizes each.
SpanSum decompose(Span const& s);
/// A span with the given single basis class (the transported representative).
Span representative(GroupoidPtr const& X, GroupoidPtr const& Y, SpanClassKey const& k);

/// b∘a on basis keys through the group-level composite.
SpanSum compose(SpanSum const& a, SpanSum const& b);
/// s2∘s1 through the iso-comma of the middle cospan, then decomposition.
SpanSum compose_spans(Span const& s1, Span const& s2);

/// Key comparison; for connected spans between one-object groupoids with
/// small apex the exhaustive search is also run and must agree.
bool span_equivalent(Span const& s1, Span const& s2);
/// Search over functors s: S → S' that are equivalences, with a'∘s ≅ a and
/// b'∘s ≅ b.
bool span_equivalent_search(Span const& s1, Span const& s2, Budget& budget);
bool span_equivalent_search(Span const& s1, Span const& s2);

/// One-object checks against the same groupoid value before composing.
bool same_groupoid(GroupoidPtr const& a, GroupoidPtr const& b);

// ---------------------------------------------------------------------------
// Elementary spans

/// A generator: Res and Ind carry an injective map i: K → G, Infl and Defl a
/// surjection p: G → Q, Iso an isomorphism f: G → G'.
struct Letter {
  enum class Kind { Res, Ind, Infl, Defl, Iso };
  Kind kind;
  Hom map;

  GroupPtr const& source() const;
  GroupPtr const& target() const;
};

std::string kind_name(Letter::Kind k);
/// Validates injectivity / surjectivity / bijectivity; throws TypeError.
Letter make_letter(Letter::Kind kind, Hom map);
Letter res(GroupPtr const& G, Subgroup const& K);  ///< G → K
Letter ind(GroupPtr const& G, Subgroup const& K);  ///< K → G
Letter infl(GroupPtr const& G, Subgroup const& N);  ///< G/N → G
Letter defl(GroupPtr const& G, Subgroup const& N);  ///< G → G/N
Letter iso(Hom const& f);

GroupSpan elementary(Letter const& l);

/// Letters applied first to last; `start` fixes the source of an empty word.
struct SpanWord {
  GroupPtr start;
  std::vector<Letter> letters;

  GroupPtr const& end() const { return letters.empty() ? start : letters.back().target(); }
};
/// Throws TypeError unless consecutive letters have structurally equal endpoints.
void check_word(SpanWord const& w);
/// Composite of the word by folding compose_spans over the letters.
SpanSum fold_compose(SpanWord const& w);

// ---------------------------------------------------------------------------
// Bases

enum class PairKind { All, FaithfulRight, FaithfulBoth };
std::string pair_name(PairKind p);
std::optional<PairKind> parse_pair_kind(std::string const& name);

/// Every group of order ≤ 8 up to isomorphism.
std::vector<GroupPtr> small_groups(int max_order);
inline constexpr int kSmallGroupCatalogBound = 8;

/// Connected span classes X → Y in deterministic order. For PairKind::All the
/// apex order is bounded by `apex_bound` (≤ 8), which must be given, and the
/// basis is flagged truncated.
struct HomBasis {
  std::vector<SpanClassKey> keys;
  bool truncated = false;
};
HomBasis hom_basis(GroupoidPtr const& X, GroupoidPtr const& Y, PairKind pair,
                   std::optional<int> apex_bound = std::nullopt);
/// Whether a span is allowed in the span category of the pair.
bool legal_span(Span const& s, PairKind pair);
bool legal_group_span(GroupSpan const& s, PairKind pair);

}  // namespace mackey
