#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "mackey/spannable.hpp"

using namespace mackey;

namespace {

std::vector<GroupoidPtr> corpus() {
  return {group_groupoid(trivial_group()), group_groupoid(cyclic(2)), group_groupoid(cyclic(3)),
          group_groupoid(symmetric(3))};
}

/// [G/H][G/K] = Σ over double cosets HgK of [G/(H ∩ gKg⁻¹)], with double
/// cosets found by brute-force orbit sweeps.
std::vector<std::vector<LinComb<int>>> mackey_formula(GroupPtr const& G, std::vector<Subgroup> const& basis) {
  auto const& g = *G;
  std::size_t const k = basis.size();
  std::vector<std::vector<LinComb<int>>> out(k, std::vector<LinComb<int>>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      std::set<Element> seen;
      for (Element x = 0; x < g.order(); ++x) {
        if (seen.count(x)) continue;
        for (Element h : basis[i]) {
          for (Element kk : basis[j]) seen.insert(g.mul(g.mul(h, x), kk));
        }
        Subgroup meet;
        for (Element h : basis[i]) {
          Element c = g.conj(g.inv(x), h);
          if (std::binary_search(basis[j].begin(), basis[j].end(), c)) meet.push_back(h);
        }
        auto rep = conjugacy_rep(g, meet);
        int idx = static_cast<int>(std::find(basis.begin(), basis.end(), rep) - basis.begin());
        out[i][j].add(idx, 1);
      }
    }
  }
  return out;
}

}  // namespace

TEST(Spannable, StandardPairsPass) {
  auto objs = corpus();
  for (auto const& pair : {pair_all(), pair_faithful_right(), pair_faithful_both()}) {
    auto r = check_spannable(pair, objs);
    EXPECT_TRUE(r.pass()) << r.pair << ": " << r.detail;
    EXPECT_GT(r.instances, 0);
  }
}

TEST(Spannable, RejectingIdentitiesFailsAxiomA) {
  auto r = check_spannable(pair_rejecting_identities(), corpus());
  EXPECT_FALSE(r.pass());
  EXPECT_FALSE(r.axiom_a);
  EXPECT_FALSE(r.detail.empty());
}

TEST(Spannable, FaithfulIsNeededForJ) {
  // With every functor a 1-cell but J = faithful, a non-faithful copair component leaves J.
  auto C2 = group_groupoid(cyclic(2));
  auto one = group_groupoid(trivial_group());
  auto collapse = functor_from_hom(Hom{cyclic(2), trivial_group(), {0, 0}}, C2, one);
  auto idp = identity_functor(one);
  auto pr = pair_faithful_right();
  EXPECT_FALSE(pr.in_j(collapse));
  EXPECT_FALSE(pr.in_j(copair({collapse, idp})));
  EXPECT_TRUE(pr.in_j(copair({idp, idp})));
}

TEST(Spannable, OverGroupPasses) {
  for (auto const& G : {cyclic(2), symmetric(3)}) {
    auto r = check_spannable_over_g(G);
    EXPECT_TRUE(r.pass()) << r.pair << ": " << r.detail;
    EXPECT_GT(r.instances, 0);
  }
}

TEST(Spannable, OverGroupEndomorphismsAreTheBurnsideRing) {
  for (auto const& G : {trivial_group(), cyclic(2), cyclic(3), klein(), cyclic(4), symmetric(3)}) {
    auto t = over_g_burnside_table(G);
    auto b = burnside_table(G);
    ASSERT_EQ(t.basis, b.basis);
    EXPECT_EQ(t.product, b.product) << G->name();
    EXPECT_EQ(t.product, mackey_formula(G, t.basis)) << G->name();
  }
  EXPECT_THROW(over_g_burnside_table(named_group("D4"), 6), BoundExceeded);
}

TEST(Spannable, OverGroupExamples) {
  auto S3 = symmetric(3);
  auto t = over_g_burnside_table(S3);
  // basis: 1, C2, C3, S3; [S3/C2]^2 = [S3/1] + [S3/C2]
  ASSERT_EQ(t.basis.size(), 4u);
  LinComb<int> want;
  want.add(0, 1);
  want.add(1, 1);
  EXPECT_EQ(t.product[1][1], want);
  LinComb<int> unit;
  unit.add(1, 1);
  EXPECT_EQ(t.product[3][1], unit);
}
