#include <gtest/gtest.h>

#include <set>

#include "mackey/group.hpp"

using namespace mackey;

namespace {

// Every subset closed under multiplication, by scanning the power set.
std::set<Subgroup> subgroups_by_power_set(Group const& G) {
  int const n = G.order();
  std::set<Subgroup> out;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    if (!(mask & 1u)) continue;
    bool closed = true;
    for (int a = 0; a < n && closed; ++a) {
      if (!(mask >> a & 1u)) continue;
      for (int b = 0; b < n && closed; ++b) {
        if ((mask >> b & 1u) && !(mask >> G.mul(a, b) & 1u)) closed = false;
      }
    }
    if (!closed) continue;
    Subgroup S;
    for (int a = 0; a < n; ++a) {
      if (mask >> a & 1u) S.push_back(a);
    }
    out.insert(S);
  }
  return out;
}

// Homomorphisms by scanning every map S → T.
std::size_t homs_by_scan(Group const& S, Group const& T) {
  int const n = S.order();
  std::vector<int> m(n, 0);
  std::size_t count = 0;
  while (true) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) {
      for (int b = 0; b < n && ok; ++b) ok = m[S.mul(a, b)] == T.mul(m[a], m[b]);
    }
    count += ok;
    int i = n - 1;
    while (i >= 0 && ++m[i] == T.order()) m[i--] = 0;
    if (i < 0) break;
  }
  return count;
}

}  // namespace

TEST(Group, NamedOrders) {
  EXPECT_EQ(named_group("1")->order(), 1);
  EXPECT_EQ(named_group("C2")->order(), 2);
  EXPECT_EQ(named_group("C2xC2")->order(), 4);
  EXPECT_EQ(named_group("S3")->order(), 6);
  EXPECT_EQ(named_group("D4")->order(), 8);
  EXPECT_EQ(named_group("Q8")->order(), 8);
  EXPECT_EQ(named_group("C8")->order(), 8);
  EXPECT_EQ(named_group("S4")->order(), 24);
  EXPECT_THROW(named_group("Z9"), ParseError);
}

TEST(Group, FromTableRelabelsIdentityFirst) {
  // identity is input element 1
  auto G = Group::from_table({{1, 0}, {0, 1}});
  EXPECT_EQ(G.order(), 2);
  EXPECT_EQ(G.mul(1, 1), 0);
  EXPECT_THROW(Group::from_table({{0, 1}, {1, 1}}), ParseError);
  // Latin square that is not associative
  EXPECT_THROW(Group::from_table({{0, 1, 2, 3, 4},
                                  {1, 0, 3, 4, 2},
                                  {2, 4, 0, 1, 3},
                                  {3, 2, 4, 0, 1},
                                  {4, 3, 1, 2, 0}}),
               ParseError);
}

TEST(Group, SubgroupsMatchPowerSetScan) {
  for (auto name : {"1", "C2", "C3", "C4", "C2xC2", "C5", "C6", "S3", "D4", "Q8", "C8"}) {
    auto G = named_group(name);
    auto expect = subgroups_by_power_set(*G);
    std::set<Subgroup> got(G->subgroups().begin(), G->subgroups().end());
    EXPECT_EQ(got, expect) << name;
  }
}

TEST(Group, SubgroupClassCounts) {
  // conjugacy classes by brute force over the power-set list
  for (auto name : {"C2xC2", "S3", "D4", "Q8"}) {
    auto G = named_group(name);
    std::set<Subgroup> reps;
    for (auto const& S : subgroups_by_power_set(*G)) {
      Subgroup best = S;
      for (int x = 0; x < G->order(); ++x) best = std::min(best, conjugate(*G, S, x));
      reps.insert(best);
    }
    EXPECT_EQ(subgroup_classes(*G).size(), reps.size()) << name;
  }
  EXPECT_EQ(subgroup_classes(*named_group("S3")).size(), 4u);
}

TEST(Group, HomCountsMatchScan) {
  std::vector<std::pair<std::string, std::string>> pairs = {
      {"C2", "S3"}, {"S3", "S3"}, {"C2xC2", "C2"}, {"C4", "C2xC2"}, {"C3", "C6"}, {"S3", "C2"}, {"C2xC2", "S3"}};
  for (auto const& [a, b] : pairs) {
    auto S = named_group(a);
    auto T = named_group(b);
    EXPECT_EQ(all_homs(S, T).size(), homs_by_scan(*S, *T)) << a << "->" << b;
  }
}

TEST(Group, AutomorphismCounts) {
  EXPECT_EQ(isomorphisms(named_group("S3"), named_group("S3")).size(), 6u);
  EXPECT_EQ(isomorphisms(named_group("C2xC2"), named_group("C2xC2")).size(), 6u);
  EXPECT_EQ(isomorphisms(named_group("C4"), named_group("C2xC2")).size(), 0u);
}

TEST(Group, DoubleCosetsS3) {
  auto G = symmetric(3);
  Element t12 = *G->find_permutation({1, 0, 2});
  Element t13 = *G->find_permutation({2, 1, 0});
  Subgroup H = generate(*G, {t12});
  auto dc = double_cosets(*G, H, H);
  ASSERT_EQ(dc.size(), 2u);
  EXPECT_EQ(dc[0].rep, 0);
  EXPECT_EQ(dc[0].size, 2);
  EXPECT_EQ(dc[1].size, 4);
  // (13) lies in the second double coset
  EXPECT_FALSE(contains(H, t13));
  auto C2 = named_group("C2");
  auto dc2 = double_cosets(*C2, trivial_subgroup(), trivial_subgroup());
  EXPECT_EQ(dc2.size(), 2u);
  EXPECT_EQ(double_cosets(*G, whole(*G), whole(*G)).size(), 1u);
}

TEST(Group, QuotientAndFibreProduct) {
  auto G = symmetric(3);
  Subgroup A3;
  for (int g = 0; g < 6; ++g) {
    if (G->element_order(g) != 2) A3.push_back(g);
  }
  auto q = quotient(G, A3);
  EXPECT_EQ(q.group->order(), 2);
  EXPECT_TRUE(is_surjective(q.proj));
  EXPECT_EQ(kernel(q.proj), A3);
  auto fp = fibre_product(q.proj, q.proj);
  EXPECT_EQ(fp.group->order(), 18);
  EXPECT_THROW(quotient(G, generate(*G, {1})), TypeError);
}

TEST(Group, CentersAndRank) {
  EXPECT_EQ(center(*named_group("S3")).size(), 1u);
  EXPECT_EQ(center(*named_group("D4")).size(), 2u);
  EXPECT_EQ(center(*named_group("Q8")).size(), 2u);
  EXPECT_EQ(rank(*named_group("C2xC2xC2")), 3);
  EXPECT_EQ(rank(*named_group("S3")), 2);
  EXPECT_EQ(rank(*named_group("C6")), 1);
}
