#include <gtest/gtest.h>

#include "mackey/presentation.hpp"

using namespace mackey;

namespace {

GroupSpan collapse(GroupPtr apex) {
  Hom t{apex, trivial_group(), std::vector<Element>(apex->order(), 0)};
  return {apex, t, t};
}

std::vector<GroupPtr> small_pool() {
  return {trivial_group(), named_group("C2"), named_group("C3"), named_group("C2xC2"), named_group("C4"),
          named_group("S3")};
}

}  // namespace

TEST(Normalize, ResAfterIndOverC2) {
  auto C2 = cyclic(2);
  SpanWord w{trivial_group(), {ind(C2, trivial_subgroup()), res(C2, trivial_subgroup())}};
  auto n = normalize_word(w);
  EXPECT_EQ(n, scale(span_class(identity_group_span(trivial_group())), 2));
  EXPECT_EQ(n, fold_compose(w));
}

TEST(Normalize, MackeyOverS3) {
  auto S3 = symmetric(3);
  Subgroup H{0, 1};
  auto e = subgroup_group(S3, H);
  SpanWord w{e.group, {ind(S3, H), res(S3, H)}};
  auto n = normalize_word(w);
  Hom in{trivial_group(), e.group, {0}};
  auto expected = add(span_class(identity_group_span(e.group)), span_class({trivial_group(), in, in}));
  EXPECT_EQ(n, expected);
  EXPECT_EQ(n, fold_compose(w));
  EXPECT_NE(format_span_sum(n).find("1*[id]"), std::string::npos);
}

TEST(Normalize, DeflAfterInflIsNotIdentityUnlessDeflative) {
  auto C2 = cyclic(2);
  auto top = quotient(C2, whole(*C2)).group;
  SpanWord w{top, {infl(C2, whole(*C2)), defl(C2, whole(*C2))}};
  auto n = normalize_word(w);
  EXPECT_EQ(n, span_class(collapse(C2)));
  EXPECT_EQ(n, fold_compose(w));
  auto d = normalize_word(w, {true});
  EXPECT_EQ(d, span_class(identity_group_span(top)));
  EXPECT_EQ(format_span_sum(d), "1*[id]");
}

TEST(Normalize, EmptyWordIsIdentity) {
  auto G = symmetric(3);
  EXPECT_EQ(normalize_word(SpanWord{G, {}}), span_class(identity_group_span(G)));
}

TEST(Normalize, NonComposableWord) {
  auto C2 = cyclic(2);
  SpanWord w{C2, {res(C2, trivial_subgroup()), defl(C2, whole(*C2))}};
  EXPECT_THROW(normalize_word(w), TypeError);
}

TEST(Normalize, AgreesWithFoldOnRandomWords) {
  std::mt19937_64 rng(2024);
  auto pool = small_pool();
  int checked = 0;
  for (int t = 0; t < 250; ++t) {
    auto start = pool[rng() % pool.size()];
    int len = 1 + static_cast<int>(rng() % 4);
    auto w = random_word(rng, start, len, pool);
    ASSERT_EQ(normalize_word(w), fold_compose(w)) << "trial " << t;
    ++checked;
  }
  EXPECT_EQ(checked, 250);
}

TEST(Deflate, QuotientsByCommonKernel) {
  auto C2 = cyclic(2);
  auto d = deflate(collapse(C2));
  EXPECT_EQ(d.apex->order(), 1);
  auto S3 = symmetric(3);
  auto id = identity_group_span(S3);
  EXPECT_EQ(deflate(id).apex->order(), 6);
}

TEST(Relations, FamiliesHoldOverSmallGroups) {
  for (auto const& name : {"1", "C2", "C3", "C2xC2", "S3"}) {
    auto G = named_group(name);
    for (auto const& fam : relation_families()) {
      auto insts = relation_instances(fam, G);
      if (fam != "2d") {
        EXPECT_FALSE(insts.empty()) << fam << " " << name;
      }
      for (auto const& r : insts) {
        auto rep = check_relation(r);
        ASSERT_TRUE(rep.pass) << rep.detail;
      }
    }
  }
}

TEST(Relations, Examples) {
  auto S3 = symmetric(3);
  for (auto const& r : relation_instances("0b", S3)) EXPECT_TRUE(check_relation(r).pass);
  EXPECT_TRUE(check_relation(relation_mackey(S3, {0, 1}, {0, 1})).pass);
  auto V = klein();
  auto ns = normal_subgroups(*V);
  // two distinct order-2 factors
  std::vector<Subgroup> twos;
  for (auto const& N : ns) {
    if (N.size() == 2) twos.push_back(N);
  }
  ASSERT_GE(twos.size(), 2u);
  EXPECT_TRUE(check_relation(relation_2d(V, twos[0], twos[1])).pass);
  EXPECT_THROW(relation_2d(V, twos[0], twos[0]), TypeError);
  EXPECT_THROW(relation_instances("3z", V), ParseError);
}

TEST(Relations, Restricted2dFailsOnSpansButHoldsDeflatively) {
  auto C2 = cyclic(2);
  auto r = relation_2d(C2, whole(*C2), whole(*C2), true);
  EXPECT_FALSE(check_relation(r).pass);
  EXPECT_TRUE(check_relation(r, {true}).pass);
  auto defl = relation_deflativity(C2, whole(*C2));
  EXPECT_FALSE(check_relation(defl).pass);
  EXPECT_TRUE(check_relation(defl, {true}).pass);
}

TEST(Relations, DeflativeNormalizationStillSatisfiesSpanRelations) {
  for (auto const& name : {"C2", "S3"}) {
    auto G = named_group(name);
    for (auto const& fam : relation_families()) {
      for (auto const& r : relation_instances(fam, G, true)) {
        auto rep = check_relation(r, {true});
        ASSERT_TRUE(rep.pass) << rep.detail;
      }
    }
  }
}
