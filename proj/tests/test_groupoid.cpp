#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "mackey/iso_comma.hpp"

using namespace mackey;

namespace {

GroupoidFunctor hom_functor(Hom const& f) { return functor_from_hom(f); }

GroupoidFunctor to_trivial(GroupPtr const& G) {
  return functor_from_hom(Hom{G, trivial_group(), std::vector<Element>(G->order(), 0)});
}

Hom inclusion_of(GroupPtr G, std::vector<Element> const& gens) {
  return subgroup_group(G, generate(*G, gens)).incl;
}

// Orders of the vertex groups of the components, sorted.
std::vector<int> skeleton_orders(GroupoidPtr const& G) {
  std::vector<int> out;
  for (auto const& g : skeleton(G).groups) out.push_back(g->num_arrows());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Groupoid, BuildGroup) {
  auto one = group_groupoid(cyclic(1));
  EXPECT_EQ(one->num_objects(), 1);
  EXPECT_EQ(one->num_arrows(), 1);
  auto s3 = group_groupoid(symmetric(3));
  EXPECT_EQ(s3->num_arrows(), 6);
  s3->check_axioms();
  auto c2 = group_groupoid(share(Group::from_table({{0, 1}, {1, 0}})));
  EXPECT_EQ(c2->num_arrows(), 2);
}

TEST(Groupoid, DisjointUnionAndComponents) {
  auto empty = disjoint_union({});
  EXPECT_EQ(empty.groupoid->num_objects(), 0);
  EXPECT_TRUE(empty.inclusions.empty());
  EXPECT_TRUE(connected_components(empty.groupoid).empty());

  auto u = disjoint_union({group_groupoid(cyclic(2)), group_groupoid(cyclic(3))});
  EXPECT_EQ(u.groupoid->num_objects(), 2);
  EXPECT_EQ(u.groupoid->num_arrows(), 5);
  u.groupoid->check_axioms();
  for (auto const& inc : u.inclusions) {
    check_functor(inc);
    EXPECT_TRUE(is_faithful(inc));
    EXPECT_TRUE(is_full(inc));
  }
  auto comps = connected_components(u.groupoid);
  ASSERT_EQ(comps.size(), 2u);
  EXPECT_EQ(comps[0].groupoid->num_arrows(), 2);
  EXPECT_EQ(comps[1].groupoid->num_arrows(), 3);

  auto single = disjoint_union({group_groupoid(cyclic(2))});
  EXPECT_EQ(*single.groupoid, *group_groupoid(cyclic(2)));
}

TEST(Groupoid, ComponentsOfDisjointUnionRecoverParts) {
  std::vector<GroupoidPtr> parts;
  for (auto n : {"C2", "S3", "1", "C2xC2"}) parts.push_back(group_groupoid(named_group(n)));
  auto ic = iso_comma(hom_functor(inclusion_of(symmetric(3), {1})), hom_functor(inclusion_of(symmetric(3), {1})));
  parts.push_back(ic.apex);
  auto u = disjoint_union(parts);
  auto comps = connected_components(u.groupoid);
  // the iso-comma apex has two components of its own
  ASSERT_EQ(comps.size(), 6u);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(*comps[i].groupoid, *parts[i]);
}

TEST(Groupoid, SkeletonOfConnectedGroupoid) {
  // two isomorphic objects with End = C2: the iso-comma of id_C2 with itself
  auto id = identity_functor(group_groupoid(cyclic(2)));
  auto ic = iso_comma(id, id);
  auto sk = skeleton(ic.apex);
  ASSERT_EQ(sk.groups.size(), 1u);
  EXPECT_EQ(sk.groups[0]->num_arrows(), 2);
  EXPECT_TRUE(is_equivalence(sk.inclusion));
  auto c2 = group_groupoid(cyclic(2));
  auto sk2 = skeleton(c2);
  EXPECT_TRUE(is_equivalence(sk2.inclusion));
}

TEST(Groupoid, Faithfulness) {
  auto S3 = symmetric(3);
  EXPECT_TRUE(is_faithful(identity_functor(group_groupoid(S3))));
  EXPECT_FALSE(is_faithful(to_trivial(cyclic(2))));
}

TEST(IsoComma, OfMapsToTrivialGroup) {
  auto u = to_trivial(cyclic(2));
  auto ic = iso_comma(u, u);
  EXPECT_EQ(ic.apex->num_objects(), 1);
  EXPECT_EQ(ic.apex->num_arrows(), 4);
  ic.apex->check_axioms();
  check_nat(ic.two_cell);
}

TEST(IsoComma, OfIdentities) {
  auto id = identity_functor(group_groupoid(cyclic(2)));
  auto ic = iso_comma(id, id);
  EXPECT_EQ(ic.apex->num_objects(), 2);
  EXPECT_EQ(num_components(*ic.apex), 1);
  EXPECT_EQ(skeleton_orders(ic.apex), std::vector<int>{2});
}

TEST(IsoComma, InclusionOfC2InS3) {
  auto S3 = symmetric(3);
  Hom i = inclusion_of(S3, {*S3->find_permutation({1, 0, 2})});
  auto ic = iso_comma(hom_functor(i), hom_functor(i));
  ic.apex->check_axioms();
  EXPECT_EQ(ic.apex->num_objects(), 6);
  // brute-force oracle: objects are γ ∈ S3; (α, β) ∈ C2×C2 sends γ to β γ α^-1
  std::vector<int> comp(6, -1);
  int ncomp = 0;
  std::vector<int> stab_sizes;
  for (int g = 0; g < 6; ++g) {
    if (comp[g] >= 0) continue;
    int stab = 0;
    for (int a : i.map) {
      for (int b : i.map) {
        int h = S3->mul(S3->mul(b, g), S3->inv(a));
        comp[h] = ncomp;
        stab += (h == g);
      }
    }
    stab_sizes.push_back(stab);
    ++ncomp;
  }
  std::sort(stab_sizes.begin(), stab_sizes.end());
  EXPECT_EQ(ncomp, 2);
  EXPECT_EQ(stab_sizes, (std::vector<int>{1, 2}));
  EXPECT_EQ(num_components(*ic.apex), ncomp);
  EXPECT_EQ(skeleton_orders(ic.apex), stab_sizes);
  EXPECT_EQ(double_cosets(*S3, image(i), image(i)).size(), static_cast<std::size_t>(ncomp));
}

TEST(IsoComma, MismatchedTargets) {
  auto a = identity_functor(group_groupoid(cyclic(2)));
  auto b = identity_functor(group_groupoid(cyclic(3)));
  EXPECT_THROW(iso_comma(a, b), TypeError);
}

TEST(MackeySquare, IsoCommaSquaresAreMackey) {
  std::vector<std::string> names = {"1", "C2", "C3", "S3"};
  for (auto const& zn : names) {
    auto Z = named_group(zn);
    for (auto const& xn : names) {
      for (auto const& yn : names) {
        auto homs_u = all_homs(named_group(xn), Z);
        auto homs_v = all_homs(named_group(yn), Z);
        for (std::size_t i = 0; i < homs_u.size(); i += 3) {
          for (std::size_t j = 0; j < homs_v.size(); j += 3) {
            auto zg = group_groupoid(Z);
            auto u = functor_from_hom(homs_u[i], group_groupoid(homs_u[i].src), zg);
            auto v = functor_from_hom(homs_v[j], group_groupoid(homs_v[j].src), zg);
            auto ic = iso_comma(u, v);
            EXPECT_TRUE(is_mackey_square(iso_comma_square(ic, u, v))) << xn << yn << zn;
          }
        }
      }
    }
  }
}

TEST(MackeySquare, CommutativeSquareOverC2IsNotMackey) {
  auto c2 = group_groupoid(cyclic(2));
  auto one = group_groupoid(trivial_group());
  GroupoidFunctor incl{one, c2, {0}, {0}};
  GroupoidFunctor id1 = identity_functor(one);
  auto up = compose(incl, id1);
  NatTransformation gamma{up, up, {0}};
  EXPECT_FALSE(is_mackey_square(Square{id1, id1, gamma, incl, incl}));
}

TEST(MackeySquare, StrictPullbackAlongSurjection) {
  // cospan 1 = 1 ← C2
  auto one = group_groupoid(trivial_group());
  auto b = identity_functor(one);
  auto c = to_trivial(cyclic(2));
  c.target = one;
  auto pb = strict_pullback(b, c);
  EXPECT_EQ(pb.apex->num_arrows(), 2);
  EXPECT_TRUE(is_mackey_square(pullback_square(pb, b, c)));
}

TEST(MackeySquare, PullbackVsIsoCommaForSurjections) {
  std::vector<std::string> names = {"1", "C2", "C3", "C4", "C2xC2", "S3", "D4", "Q8"};
  int checked = 0;
  for (auto const& xn : names) {
    auto X = named_group(xn);
    for (auto const& N : normal_subgroups(*X)) {
      auto q = quotient(X, N);
      auto Z = q.group;
      auto zg = group_groupoid(Z);
      auto u = functor_from_hom(q.proj, group_groupoid(X), zg);
      for (auto const& yn : names) {
        auto Y = named_group(yn);
        if (Y->order() > 4 && X->order() > 4) continue;
        for (auto const& h : all_homs(Y, Z)) {
          auto v = functor_from_hom(h, group_groupoid(Y), zg);
          auto ic = iso_comma(u, v);
          auto pb = strict_pullback(u, v);
          EXPECT_EQ(skeleton_orders(ic.apex), skeleton_orders(pb.apex));
          EXPECT_TRUE(is_mackey_square(pullback_square(pb, u, v)));
          ++checked;
        }
      }
    }
  }
  EXPECT_GT(checked, 100);
}

TEST(MackeySquare, ExtensivityProbe) {
  std::vector<GroupoidPtr> tests = {group_groupoid(cyclic(2)), group_groupoid(symmetric(3))};
  auto ic = iso_comma(identity_functor(tests[0]), identity_functor(tests[0]));
  tests.push_back(ic.apex);
  int checked = 0;
  for (auto const& A : tests) {
    for (auto const& X : tests) {
      auto us = enumerate_functors(A, X);
      for (auto const& B : tests) {
        for (auto const& Y : tests) {
          auto vs = enumerate_functors(B, Y);
          for (std::size_t i = 0; i < us.size(); i += 5) {
            for (std::size_t j = 0; j < vs.size(); j += 7) {
              auto const& u = us[i];
              auto const& v = vs[j];
              auto uv = coproduct({u, v});
              auto AB = disjoint_union({A, B});
              auto XY = disjoint_union({X, Y});
              auto left = compose(XY.inclusions[0], u);
              NatTransformation g1 = identity_nat(left);
              g1.to = compose(uv, AB.inclusions[0]);
              EXPECT_TRUE(is_mackey_square(Square{u, AB.inclusions[0], g1, XY.inclusions[0], uv}));
              NatTransformation g2 = identity_nat(compose(uv, AB.inclusions[1]));
              g2.to = compose(XY.inclusions[1], v);
              EXPECT_TRUE(is_mackey_square(Square{AB.inclusions[1], v, g2, uv, XY.inclusions[1]}));
              ++checked;
            }
          }
        }
      }
    }
  }
  EXPECT_GT(checked, 20);
}

TEST(FunctorIso, ConjugationAndInclusions) {
  auto S3 = symmetric(3);
  auto g = group_groupoid(S3);
  Element x = *S3->find_permutation({1, 0, 2});
  auto id = identity_functor(g);
  auto cx = functor_from_hom(conjugation(S3, x), g, g);
  auto t = functor_iso(id, cx);
  ASSERT_TRUE(t.has_value());
  EXPECT_EQ(t->components, std::vector<int>{x});
  EXPECT_EQ(functor_iso(id, id)->components, std::vector<int>{0});

  Element t12 = *S3->find_permutation({1, 0, 2});
  Element t13 = *S3->find_permutation({2, 1, 0});
  auto c2 = group_groupoid(cyclic(2));
  GroupoidFunctor i12{c2, g, {0}, {0, t12}};
  GroupoidFunctor i13{c2, g, {0}, {0, t13}};
  auto s = functor_iso(i12, i13);
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(S3->conj(s->components[0], t12), t13);
  // scan oracle: number of conjugating elements
  int scan = 0;
  for (int h = 0; h < 6; ++h) scan += S3->conj(h, t12) == t13;
  EXPECT_EQ(enumerate_nat_transfs(i12, i13).size(), static_cast<std::size_t>(scan));
}

TEST(FunctorIso, NatTransfCountIsCenterOrder) {
  for (auto n : {"1", "C2", "C3", "C4", "C2xC2", "S3", "D4", "Q8", "C6"}) {
    auto G = named_group(n);
    auto id = identity_functor(group_groupoid(G));
    EXPECT_EQ(enumerate_nat_transfs(id, id).size(), center(*G).size()) << n;
  }
  auto e = disjoint_union({}).groupoid;
  auto id = identity_functor(e);
  EXPECT_EQ(enumerate_nat_transfs(id, id).size(), 1u);
}

TEST(FunctorIso, NonParallel) {
  auto a = identity_functor(group_groupoid(cyclic(2)));
  auto b = identity_functor(group_groupoid(cyclic(3)));
  EXPECT_THROW(functor_iso(a, b), TypeError);
}

TEST(Functors, EnumerationMatchesHomCount) {
  auto S3 = symmetric(3);
  EXPECT_EQ(enumerate_functors(group_groupoid(S3), group_groupoid(S3)).size(), 10u);
  // functors from a connected 2-object groupoid G with trivial End into C2: 2 choices of the tree arrow
  auto id = identity_functor(group_groupoid(trivial_group()));
  auto two = disjoint_union({group_groupoid(cyclic(2)), group_groupoid(cyclic(2))}).groupoid;
  EXPECT_EQ(enumerate_functors(two, group_groupoid(cyclic(2))).size(), 4u);
  (void)id;
}

TEST(Functors, CompositionPreservesFaithfulness) {
  std::vector<GroupPtr> gs = {cyclic(2), cyclic(3), symmetric(3), klein()};
  for (auto const& A : gs) {
    for (auto const& B : gs) {
      for (auto const& C : gs) {
        for (auto const& f : all_homs(A, B)) {
          if (!is_injective(f)) continue;
          for (auto const& g : all_homs(B, C)) {
            if (!is_injective(g)) continue;
            EXPECT_TRUE(is_faithful(compose(functor_from_hom(g), functor_from_hom(f, group_groupoid(A),
                                                                                    group_groupoid(B)))));
          }
        }
      }
    }
  }
}
