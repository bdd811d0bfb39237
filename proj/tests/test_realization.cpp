#include <gtest/gtest.h>

#include <random>

#include "mackey/realization.hpp"

using namespace mackey;

namespace {

std::vector<GroupPtr> pool() { return {trivial_group(), cyclic(2), cyclic(3), klein(), cyclic(4), symmetric(3)}; }

std::vector<Letter> letters_from(GroupPtr const& G) {
  std::vector<Letter> out;
  for (auto const& K : G->subgroups()) {
    out.push_back(res(G, K));
    out.push_back(ind(G, K));
  }
  for (auto const& N : normal_subgroups(*G)) {
    out.push_back(infl(G, N));
    out.push_back(defl(G, N));
  }
  for (auto const& f : isomorphisms(G, G)) out.push_back(iso(f));
  return out;
}

GroupSpan collapse(GroupPtr const& apex) {
  Hom t{apex, trivial_group(), std::vector<Element>(apex->order(), 0)};
  return {apex, t, t};
}

}  // namespace

TEST(Realize, Examples) {
  auto C2 = cyclic(2);
  auto one = realize(to_span(collapse(C2)));
  EXPECT_EQ(one.size(), 1);
  EXPECT_TRUE(biset_iso(one, identity_biset(group_groupoid(trivial_group()))));
  for (auto const& G : pool()) {
    auto U = realize(identity_span(group_groupoid(G)));
    EXPECT_TRUE(biset_iso(U, identity_biset(group_groupoid(G))));
    EXPECT_EQ(U.size(), G->order());
  }
}

TEST(Realize, ElementarySpansGiveElementaryBisets) {
  for (auto const& G : pool()) {
    for (auto const& l : letters_from(G)) {
      auto U = realize(to_span(elementary(l)));
      ASSERT_NO_THROW(check_biset(U));
      ASSERT_TRUE(biset_iso(U, elementary_biset(l))) << kind_name(l.kind) << " over " << G->name();
    }
  }
}

TEST(Realize, IsAdditive) {
  auto H = symmetric(3);
  auto s1 = to_span(GroupSpan{cyclic(2), Hom{cyclic(2), trivial_group(), {0, 0}}, make_hom(cyclic(2), H, {0, 1})});
  auto s2 = to_span(GroupSpan{trivial_group(), Hom{trivial_group(), trivial_group(), {0}}, make_hom(trivial_group(), H, {0})});
  auto sum = sum_span(s1, s2);
  auto U = realize(sum);
  EXPECT_EQ(biset_class(U), add(biset_class(realize(s1)), biset_class(realize(s2))));
  EXPECT_EQ(U.size(), 3 + 6);
}

TEST(Realize, FunctorialOnRandomWords) {
  std::mt19937_64 rng(99);
  auto groups = pool();
  for (int t = 0; t < 150; ++t) {
    auto start = groups[rng() % groups.size()];
    int len = 1 + static_cast<int>(rng() % 3);
    auto w = random_word(rng, start, len, groups);
    auto folded = fold_compose(w);
    ASSERT_EQ(realize(folded), biset_class(word_biset(w))) << "trial " << t;
  }
}

TEST(Realize, CheckFunctorialExamples) {
  auto S3 = symmetric(3);
  Subgroup H{0, 1};
  EXPECT_TRUE(check_functorial(to_span(elementary(ind(S3, H))), to_span(elementary(res(S3, H)))).pass);
  auto C2 = cyclic(2);
  auto I = to_span(elementary(infl(C2, whole(*C2))));
  auto D = to_span(elementary(defl(C2, whole(*C2))));
  EXPECT_TRUE(check_functorial(I, D).pass);
  auto both = realize(compose_spans(I, D));
  EXPECT_TRUE(biset_class(identity_biset(both.source)) == both);
  auto s = to_span(elementary(res(S3, H)));
  EXPECT_TRUE(check_functorial(identity_span(s.source()), s).pass);
  EXPECT_THROW(check_functorial(s, s), TypeError);
}

TEST(Kernel, Examples) {
  auto C2 = cyclic(2);
  auto q = quotient(C2, whole(*C2));
  auto r = kernel_witness(q.proj);
  EXPECT_FALSE(r.span_is_identity);
  EXPECT_TRUE(r.biset_is_identity);
  auto S3 = symmetric(3);
  auto sign = quotient(S3, {0, 2, 5});
  r = kernel_witness(sign.proj);
  EXPECT_FALSE(r.span_is_identity);
  EXPECT_TRUE(r.biset_is_identity);
  r = kernel_witness(identity_hom(S3));
  EXPECT_TRUE(r.span_is_identity);
  EXPECT_TRUE(r.biset_is_identity);
  EXPECT_THROW(kernel_witness(subgroup_group(S3, {0, 1}).incl), TypeError);
}

TEST(Kernel, RealizationsAgreeExactlyWhenDeflationsAgree) {
  for (auto const& H : {trivial_group(), cyclic(2), cyclic(3)}) {
    for (auto const& G : {cyclic(2), klein(), symmetric(3)}) {
      auto X = group_groupoid(H), Y = group_groupoid(G);
      auto basis = hom_basis(X, Y, PairKind::All, 6).keys;
      std::vector<BisetSum> real;
      std::vector<SpanSum> defl;
      for (auto const& k : basis) {
        auto s = representative(X, Y, k);
        real.push_back(biset_class(realize(s)));
        defl.push_back(span_class(deflate(k.key.rep)));
      }
      for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = 0; j < basis.size(); ++j) {
          ASSERT_EQ(real[i] == real[j], defl[i] == defl[j]) << H->name() << "→" << G->name() << " " << i << "," << j;
        }
      }
    }
  }
}

TEST(Section, Examples) {
  auto S3 = symmetric(3);
  auto f = bouc_canonical_form(identity_biset(group_groupoid(S3)));
  EXPECT_EQ(span_class(section(f)), span_class(identity_group_span(S3)));

  Subgroup H{0, 1};
  auto g = bouc_canonical_form(elementary_biset(ind(S3, H)));
  EXPECT_EQ(span_class(section(g)), span_class(elementary(ind(S3, H))));

  auto C2 = cyclic(2);
  auto h = bouc_canonical_form(elementary_biset(infl(C2, whole(*C2))));
  EXPECT_EQ(span_class(section(h)), span_class(elementary(infl(C2, whole(*C2)))));
  EXPECT_TRUE(biset_iso(realize(to_span(section(h))), elementary_biset(infl(C2, whole(*C2)))));
}

TEST(Section, EveryTransitiveBisetIsRealized) {
  for (auto const& G : pool()) {
    for (auto const& H : pool()) {
      for (auto const& L : subgroup_classes(*direct_product(G, H))) {
        auto U = biset_from_subgroup(G, H, L);
        auto V = realize(to_span(section(bouc_canonical_form(U))));
        ASSERT_TRUE(biset_iso(U, V)) << G->name() << " " << H->name() << " " << format_subgroup(L);
      }
    }
  }
}

TEST(RestrictedIso, Examples) {
  auto C2 = cyclic(2);
  auto r = check_restricted_iso(PairKind::FaithfulBoth, C2, C2);
  EXPECT_TRUE(r.pass) << r.detail;
  EXPECT_EQ(hom_basis(group_groupoid(C2), group_groupoid(C2), PairKind::FaithfulBoth).keys.size(), 2u);
  r = check_restricted_iso(PairKind::FaithfulRight, trivial_group(), C2);
  EXPECT_TRUE(r.pass) << r.detail;
  r = check_restricted_iso(PairKind::FaithfulBoth, trivial_group(), trivial_group());
  EXPECT_TRUE(r.pass) << r.detail;
  EXPECT_THROW(check_restricted_iso(PairKind::All, C2, C2), TypeError);
  EXPECT_THROW(check_restricted_iso(PairKind::FaithfulRight, C2, named_group("D4"), 6), BoundExceeded);
}

TEST(RestrictedIso, SmallGroups) {
  std::vector<GroupPtr> groups{trivial_group(), cyclic(2), cyclic(3), symmetric(3)};
  for (auto const& H : groups) {
    for (auto const& G : groups) {
      for (auto pair : {PairKind::FaithfulRight, PairKind::FaithfulBoth}) {
        auto r = check_restricted_iso(pair, H, G);
        ASSERT_TRUE(r.pass) << r.detail;
      }
    }
  }
}
