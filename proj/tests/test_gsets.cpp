#include <gtest/gtest.h>

#include <functional>

#include "mackey/gsets.hpp"

using namespace mackey;

namespace {

/// Every function X → G satisfying the twisting conditions, by exhaustion.
std::size_t count_twisting_naive(GMap const& f1, GMap const& f2) {
  int const n = f1.source.size, k = f1.source.group->order();
  std::size_t count = 0;
  TwistingMap t{std::vector<Element>(n, 0)};
  std::function<void(int)> rec = [&](int x) {
    if (x == n) {
      count += is_twisting_between(f1, f2, t);
      return;
    }
    for (Element g = 0; g < k; ++g) {
      t.tau[x] = g;
      rec(x + 1);
    }
  };
  rec(0);
  return count;
}

/// |X^K| for every subgroup K in `basis`, by counting fixed points.
std::vector<int> marks(GSet const& X, std::vector<Subgroup> const& basis) {
  std::vector<int> out;
  for (auto const& K : basis) {
    int fixed = 0;
    for (int x = 0; x < X.size; ++x) {
      bool all = true;
      for (Element k : K) all = all && X.act(k, x) == x;
      fixed += all;
    }
    out.push_back(fixed);
  }
  return out;
}

std::vector<GSet> orbits_of(GroupPtr const& G) {
  std::vector<GSet> out;
  for (auto const& H : subgroup_classes(*G)) out.push_back(coset_gset(G, H));
  return out;
}

}  // namespace

TEST(GSet, OrbitExamples) {
  auto S3 = symmetric(3);
  auto regular = coset_gset(S3, trivial_subgroup());
  ASSERT_NO_THROW(check_gset(regular));
  auto o = orbit_decomposition(regular);
  ASSERT_EQ(o.size(), 1u);
  EXPECT_EQ(o[0].stabilizer, trivial_subgroup());

  auto C2 = cyclic(2);
  auto two = disjoint_union(point_gset(C2), point_gset(C2));
  o = orbit_decomposition(two);
  ASSERT_EQ(o.size(), 2u);
  EXPECT_EQ(o[0].stabilizer, whole(*C2));
  EXPECT_EQ(o[1].stabilizer, whole(*C2));

  // natural action on {0, 1, 2}
  GSet nat{S3, 3, std::vector<int>(18)};
  for (Element g = 0; g < 6; ++g) {
    for (int x = 0; x < 3; ++x) nat.action[g * 3 + x] = S3->permutations()[g][x];
  }
  ASSERT_NO_THROW(check_gset(nat));
  o = orbit_decomposition(nat);
  ASSERT_EQ(o.size(), 1u);
  EXPECT_EQ(o[0].stabilizer, (Subgroup{0, 3}));
}

TEST(GSet, PullbackExamples) {
  auto C2 = cyclic(2);
  auto free = coset_gset(C2, trivial_subgroup());
  auto pb = pullback(to_point(free), to_point(free));
  EXPECT_EQ(pb.apex.size, 4);
  auto o = orbit_decomposition(pb.apex);
  ASSERT_EQ(o.size(), 2u);
  EXPECT_EQ(o[0].stabilizer, trivial_subgroup());
  EXPECT_EQ(o[1].stabilizer, trivial_subgroup());
  ASSERT_NO_THROW(check_gmap(pb.p));
  ASSERT_NO_THROW(check_gmap(pb.q));

  auto id = identity_gmap(free);
  auto pi = pullback(id, id);
  EXPECT_EQ(pi.apex.size, 2);
  EXPECT_THROW(pullback(id, to_point(free)), TypeError);
}

TEST(GMap, EnumerationMatchesEquivarianceFilter) {
  auto S3 = symmetric(3);
  auto orbits = orbits_of(S3);
  for (auto const& X : orbits) {
    for (auto const& Y : orbits) {
      auto maps = all_gmaps(X, Y);
      // brute force over all functions
      std::size_t naive = 0;
      std::vector<int> f(X.size, 0);
      std::function<void(int)> rec = [&](int x) {
        if (x == X.size) {
          bool ok = true;
          for (int p = 0; p < X.size && ok; ++p) {
            for (Element g = 0; g < S3->order() && ok; ++g) ok = f[X.act(g, p)] == Y.act(g, f[p]);
          }
          naive += ok;
          return;
        }
        for (int y = 0; y < Y.size; ++y) {
          f[x] = y;
          rec(x + 1);
        }
      };
      rec(0);
      EXPECT_EQ(maps.size(), naive);
      for (auto const& m : maps) EXPECT_NO_THROW(check_gmap(m));
    }
  }
}

TEST(Transport, Examples) {
  auto S3 = symmetric(3);
  auto pt = transport_groupoid(point_gset(S3));
  EXPECT_EQ(pt.groupoid->num_objects(), 1);
  EXPECT_TRUE(*pt.groupoid == *group_groupoid(S3));
  EXPECT_TRUE(is_equivalence(pt.projection));

  auto C2 = cyclic(2);
  auto reg = transport_groupoid(coset_gset(C2, trivial_subgroup()));
  ASSERT_NO_THROW(reg.groupoid->check_axioms());
  EXPECT_EQ(reg.groupoid->num_objects(), 2);
  EXPECT_EQ(num_components(*reg.groupoid), 1);
  EXPECT_EQ(skeleton(reg.groupoid).groups.front()->num_arrows(), 1);

  auto tr = transport_groupoid(coset_gset(S3, {0, 1}));
  EXPECT_EQ(num_components(*tr.groupoid), 1);
  EXPECT_EQ(skeleton(tr.groupoid).groups.front()->num_arrows(), 2);
  EXPECT_TRUE(is_faithful(tr.projection));
}

TEST(Transport, FunctorsAreFaithfulAndOverG) {
  for (auto const& G : {cyclic(2), cyclic(3), symmetric(3)}) {
    auto orbits = orbits_of(G);
    for (auto const& X : orbits) {
      for (auto const& Y : orbits) {
        auto TX = transport_groupoid(X), TY = transport_groupoid(Y);
        for (auto const& f : all_gmaps(X, Y)) {
          auto F = transport_functor(f, TX.groupoid, TY.groupoid);
          ASSERT_NO_THROW(check_functor(F));
          EXPECT_TRUE(is_faithful(F));
          EXPECT_TRUE(same_functor(compose(TY.projection, F), TX.projection));
        }
      }
      auto id = transport_functor(identity_gmap(X));
      EXPECT_TRUE(same_functor(id, identity_functor(id.source)));
    }
  }
  // the fold map merges two components
  auto C2 = cyclic(2);
  auto free = coset_gset(C2, trivial_subgroup());
  auto two = disjoint_union(free, free);
  GMap fold{two, free, {0, 1, 0, 1}};
  ASSERT_NO_THROW(check_gmap(fold));
  auto F = transport_functor(fold);
  EXPECT_EQ(num_components(*F.source), 2);
  EXPECT_EQ(num_components(*F.target), 1);
}

TEST(Twisting, Examples) {
  auto C2 = cyclic(2);
  auto pt = point_gset(C2);
  auto id = identity_gmap(pt);
  auto ts = twisting_maps(id, id);
  ASSERT_EQ(ts.size(), 2u);
  auto alpha = transport_2cell(id, id, TwistingMap{{1}});
  EXPECT_EQ(enumerate_nat_transfs(alpha.from, alpha.to).size(), 2u);
  EXPECT_EQ(alpha.components, std::vector<int>{1});
  EXPECT_EQ(nat_to_twist(alpha, pt).tau, std::vector<Element>{1});
  EXPECT_EQ(nat_to_twist(identity_nat(alpha.from), pt).tau, std::vector<Element>{0});

  auto free = coset_gset(C2, trivial_subgroup());
  auto f1 = identity_gmap(free);
  auto f2 = right_translation(C2, trivial_subgroup(), 1);
  auto t = fused_gmap_related(f1, f2);
  ASSERT_TRUE(t.has_value());
  EXPECT_EQ(t->tau, (std::vector<Element>{1, 1}));
  EXPECT_TRUE(fused_gmap_related(f1, f1).has_value());
  EXPECT_EQ(fused_gmap_related(f1, f1)->tau, (std::vector<Element>{0, 0}));

  auto two = disjoint_union(pt, pt);
  GMap a{pt, two, {0}}, b{pt, two, {1}};
  EXPECT_FALSE(fused_gmap_related(a, b).has_value());
  EXPECT_THROW(fused_gmap_related(a, f1), TypeError);
}

TEST(Twisting, CountsMatchNaturalTransformations) {
  for (auto const& G : {cyclic(2), cyclic(3), klein(), symmetric(3)}) {
    std::vector<GSet> sets = orbits_of(G);
    auto orbits = sets;
    for (auto const& A : orbits) {
      for (auto const& B : orbits) {
        if (A.size + B.size <= 4) sets.push_back(disjoint_union(A, B));
      }
    }
    for (auto const& X : sets) {
      if (X.size > 4) continue;
      for (auto const& Y : sets) {
        if (Y.size > 4) continue;
        auto TX = transport_groupoid(X), TY = transport_groupoid(Y);
        auto maps = all_gmaps(X, Y);
        for (auto const& f1 : maps) {
          for (auto const& f2 : maps) {
            auto ts = twisting_maps(f1, f2);
            ASSERT_EQ(ts.size(), count_twisting_naive(f1, f2));
            auto F1 = transport_functor(f1, TX.groupoid, TY.groupoid);
            auto F2 = transport_functor(f2, TX.groupoid, TY.groupoid);
            auto nats = enumerate_nat_transfs(F1, F2);
            ASSERT_EQ(nats.size(), ts.size()) << G->name();
            for (auto const& a : nats) {
              auto t = nat_to_twist(a, X);
              EXPECT_TRUE(is_twisting_between(f1, f2, t));
              EXPECT_EQ(transport_2cell(f1, f2, t).components, a.components);
            }
          }
        }
      }
    }
  }
}

TEST(Twisting, HorizontalCompositeTransports) {
  auto S3 = symmetric(3);
  auto orbits = orbits_of(S3);
  int checked = 0;
  for (auto const& X : orbits) {
    for (auto const& Y : orbits) {
      for (auto const& Z : orbits) {
        auto TX = transport_groupoid(X), TY = transport_groupoid(Y), TZ = transport_groupoid(Z);
        auto fs = all_gmaps(X, Y);
        auto gs = all_gmaps(Y, Z);
        for (auto const& f1 : fs) {
          for (auto const& f2 : fs) {
            for (auto const& tau : twisting_maps(f1, f2)) {
              for (auto const& g1 : gs) {
                for (auto const& g2 : gs) {
                  for (auto const& sigma : twisting_maps(g1, g2)) {
                    auto comp = horizontal(sigma, tau, f1);
                    ASSERT_TRUE(is_twisting_between(compose(g1, f1), compose(g2, f2), comp));
                    auto a = transport_2cell(f1, f2, tau);
                    auto b = transport_2cell(g1, g2, sigma);
                    auto G1 = transport_functor(g1, TY.groupoid, TZ.groupoid);
                    auto viaNat = vertical(whisker_right(b, a.to), whisker_left(G1, a));
                    EXPECT_EQ(viaNat.components, transport_2cell(compose(g1, f1), compose(g2, f2), comp).components);
                    ++checked;
                  }
                }
              }
            }
          }
        }
      }
    }
  }
  EXPECT_GT(checked, 50);
}

TEST(Fused, SpanEquivalenceDetectsCentralizer) {
  auto S3 = symmetric(3);
  for (auto const& H : S3->subgroups()) {
    auto X = coset_gset(S3, H);
    GSetSpan id{identity_gmap(X), identity_gmap(X)};
    Subgroup CH = product_set(*S3, centralizer(*S3, H), H);
    for (Element a : normalizer(*S3, H)) {
      GSetSpan conj{identity_gmap(X), right_translation(S3, H, a)};
      ASSERT_NO_THROW(check_gmap(conj.right));
      EXPECT_EQ(fused_span_equivalent(id, conj), contains(CH, a)) << format_subgroup(H) << " a=" << a;
      EXPECT_TRUE(fused_span_equivalent(conj, conj));
    }
  }
  // H = A3, a = (12): conjugation inverts A3 and admits no twisting witness
  Subgroup A3{0, 2, 5};
  auto X = coset_gset(S3, A3);
  GSetSpan id{identity_gmap(X), identity_gmap(X)};
  GSetSpan conj{identity_gmap(X), right_translation(S3, A3, 1)};
  EXPECT_FALSE(fused_span_equivalent(id, conj));
  EXPECT_FALSE(strict_span_equivalent(id, conj));
}

TEST(Fused, PullbacksAreMackeySquares) {
  for (auto const& G : {cyclic(2), cyclic(3), symmetric(3)}) {
    auto orbits = orbits_of(G);
    auto pt = point_gset(G);
    for (auto const& X : orbits) {
      for (auto const& Y : orbits) {
        EXPECT_TRUE(check_fused_pullback_mackey(to_point(X), to_point(Y))) << G->name();
      }
      EXPECT_TRUE(check_fused_pullback_mackey(identity_gmap(X), identity_gmap(X)));
      for (auto const& Z : orbits) {
        for (auto const& f : all_gmaps(X, Z)) {
          for (auto const& g : all_gmaps(Z, Z)) EXPECT_TRUE(check_fused_pullback_mackey(f, g));
        }
      }
    }
  }
}

TEST(Transport, PreservesMackeySquares) {
  for (auto const& G : {cyclic(2), cyclic(3), symmetric(3)}) {
    auto orbits = orbits_of(G);
    for (auto const& X : orbits) {
      for (auto const& Y : orbits) {
        for (auto const& Z : orbits) {
          for (auto const& f : all_gmaps(X, Z)) {
            for (auto const& g : all_gmaps(Y, Z)) ASSERT_TRUE(check_transport_mackey_preservation(f, g)) << G->name();
          }
        }
      }
    }
  }
}

TEST(Burnside, Examples) {
  auto t1 = burnside_table(trivial_group());
  ASSERT_EQ(t1.basis.size(), 1u);
  EXPECT_EQ(t1.product[0][0], LinComb<int>(0));

  auto t2 = burnside_table(cyclic(2));
  ASSERT_EQ(t2.basis.size(), 2u);
  EXPECT_EQ(t2.basis[0], trivial_subgroup());
  EXPECT_EQ(t2.product[0][0], LinComb<int>(0, 2));
  for (int i = 0; i < 2; ++i) EXPECT_EQ(t2.product[1][i], LinComb<int>(i));

  auto S3 = symmetric(3);
  auto t = burnside_table(S3);
  ASSERT_EQ(t.basis.size(), 4u);
  EXPECT_EQ(t.product[1][2], LinComb<int>(0));  // [S3/C2]·[S3/C3] = [S3/1]
  EXPECT_THROW(burnside_table(S3, 4), BoundExceeded);
}

TEST(Burnside, MarksAreMultiplicative) {
  for (auto const& name : {"C2", "C3", "C4", "C2xC2", "S3", "D4", "Q8"}) {
    auto G = named_group(name);
    auto t = burnside_table(G);
    int n = static_cast<int>(t.basis.size());
    std::vector<std::vector<int>> m;
    for (auto const& H : t.basis) m.push_back(marks(coset_gset(G, H), t.basis));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        std::vector<int> lhs(n, 0);
        for (auto const& [k, c] : t.product[i][j].terms()) {
          for (int r = 0; r < n; ++r) lhs[r] += c * m[k][r];
        }
        std::vector<int> rhs(n);
        for (int r = 0; r < n; ++r) rhs[r] = m[i][r] * m[j][r];
        ASSERT_EQ(lhs, rhs) << name << " " << i << "," << j;
      }
    }
  }
}
