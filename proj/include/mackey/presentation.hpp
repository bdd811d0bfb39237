#pragma once

#include <random>
#include <string>
#include <vector>

#include "mackey/span.hpp"

namespace mackey {

struct NormalizeOptions {
  /// Also impose Defl∘Infl = id: every apex is replaced by its image in
  /// H × G, which gives the normal form of the realized biset.
  bool deflative = false;
};

/// Rewrites the word into a sum of length-six canonical strings by pushing
/// each letter through the current normal form: inductions, isomorphisms and
/// deflations fuse into the right leg, a restriction expands by the Mackey
/// formula over K\G/B, an inflation replaces the apex by a fibre product.
SpanSum normalize_word(SpanWord const& w, NormalizeOptions const& opt = {});

/// S/(ker b ∩ ker a) with the induced legs.
GroupSpan deflate(GroupSpan const& s);

/// One relation between two formal sums of words with common endpoints.
struct RelationInstance {
  std::string family;       ///< "0a" ... "2f", or "defl" for Defl∘Infl = id
  std::string description;  ///< the group data the instance was built from
  std::vector<std::pair<long long, SpanWord>> lhs;
  std::vector<std::pair<long long, SpanWord>> rhs;
};

std::vector<std::string> const& relation_families();

/// Every instance of a family over G: all subgroups, normal subgroups,
/// automorphisms and elements the family quantifies over. Family 2d is
/// restricted to M ∩ N = 1 unless `unrestricted`.
std::vector<RelationInstance> relation_instances(std::string const& family, GroupPtr const& G,
                                                 bool unrestricted = false);

/// The instance of 2d for given M, N (TypeError when M ∩ N ≠ 1 and not unrestricted).
RelationInstance relation_2d(GroupPtr const& G, Subgroup const& M, Subgroup const& N, bool unrestricted = false);
/// Defl^G_{G/N} ∘ Infl^G_{G/N} = id_{G/N}.
RelationInstance relation_deflativity(GroupPtr const& G, Subgroup const& N);
/// The Mackey formula for H, K ≤ G.
RelationInstance relation_mackey(GroupPtr const& G, Subgroup const& H, Subgroup const& K);

struct RelationReport {
  bool pass = false;
  std::string detail;  ///< empty on success
};

/// Both sides through normalize_word and through fold_compose; passes when
/// the two pipelines agree on each side and the sides agree.
RelationReport check_relation(RelationInstance const& r, NormalizeOptions const& opt = {});

SpanSum evaluate_normalized(std::vector<std::pair<long long, SpanWord>> const& side, NormalizeOptions const& opt = {});
SpanSum evaluate_folded(std::vector<std::pair<long long, SpanWord>> const& side);

/// A random composable word of the given length starting at `start`.
/// Inductions and inflations land in groups drawn from `pool`; restrictions,
/// deflations and isomorphisms stay inside the current group.
SpanWord random_word(std::mt19937_64& rng, GroupPtr const& start, int length, std::vector<GroupPtr> const& pool);

std::string format_span_sum(SpanSum const& s, Ring const& ring = {});

}  // namespace mackey
