#include "mackey/realization.hpp"

#include <set>

#include "coend.hpp"

namespace mackey {

Biset realize(Span const& s) {
  check_span(s);
  auto const& S = *s.apex();
  auto const& X = *s.source();
  auto const& Y = *s.target();
  auto const& a = s.left;
  auto const& b = s.right;
  std::vector<int> in_pos(X.num_arrows());
  for (int x = 0; x < X.num_objects(); ++x) {
    auto const& in = X.in_arrows(x);
    for (std::size_t i = 0; i < in.size(); ++i) in_pos[in[i]] = static_cast<int>(i);
  }
  std::vector<int> offset(S.num_objects() + 1, 0);
  for (int o = 0; o < S.num_objects(); ++o) {
    offset[o + 1] = offset[o] + static_cast<int>(Y.out_arrows(b.obj(o)).size() * X.in_arrows(a.obj(o)).size());
  }
  int const npairs = offset.back();
  std::vector<int> sigma(npairs), alpha(npairs), beta(npairs);
  for (int o = 0; o < S.num_objects(); ++o) {
    auto const& out = Y.out_arrows(b.obj(o));
    auto const& in = X.in_arrows(a.obj(o));
    for (std::size_t i = 0; i < out.size(); ++i) {
      for (std::size_t j = 0; j < in.size(); ++j) {
        int p = offset[o] + static_cast<int>(i * in.size() + j);
        sigma[p] = o;
        alpha[p] = out[i];
        beta[p] = in[j];
      }
    }
  }
  auto id = [&](int o, int al, int be) {
    return offset[o] + Y.out_position(al) * static_cast<int>(X.in_arrows(a.obj(o)).size()) + in_pos[be];
  };
  detail::UnionFind uf(std::max(npairs, 1));
  // (α'∘b(φ), β) at σ ∼ (α', a(φ)∘β) at σ'
  for (int phi = 0; phi < S.num_arrows(); ++phi) {
    int o = S.src(phi), o2 = S.tgt(phi);
    int bphi = b.arr(phi), aphi = a.arr(phi);
    for (int al : Y.out_arrows(b.obj(o2))) {
      for (int be : X.in_arrows(a.obj(o))) uf.unite(id(o, Y.compose(al, bphi), be), id(o2, al, X.compose(aphi, be)));
    }
  }
  std::vector<int> members(npairs);
  for (int p = 0; p < npairs; ++p) members[p] = p;
  return detail::quotient_biset(
      s.source(), s.target(), members, uf, npairs, [&](int p) { return X.src(beta[p]); },
      [&](int p) { return Y.tgt(alpha[p]); }, [&](int g, int p) { return id(sigma[p], Y.compose(g, alpha[p]), beta[p]); },
      [&](int p, int h) { return id(sigma[p], alpha[p], X.compose(beta[p], h)); });
}

BisetSum realize(SpanSum const& s) {
  BisetSum out{s.source, s.target, {}};
  for (auto const& [k, c] : s.terms.terms()) {
    out = add(out, scale(biset_class(realize(representative(s.source, s.target, k))), c));
  }
  return out;
}

RelationReport check_functorial(Span const& s1, Span const& s2) {
  auto lhs = realize(compose_spans(s1, s2));
  auto rhs = biset_class(tensor(realize(s2), realize(s1)));
  if (lhs != rhs) {
    return {false, "realize(s2∘s1) = " + format_biset_sum(lhs) + " but realize(s2)⊗realize(s1) = " +
                       format_biset_sum(rhs)};
  }
  return {true, {}};
}

KernelReport kernel_witness(Hom const& p) {
  if (!is_surjective(p)) throw TypeError("kernel_witness needs a surjection");
  GroupSpan qq{p.src, p, p};
  auto Q = p.tgt;
  KernelReport r;
  r.span_is_identity = span_equivalent(to_span(qq), to_span(identity_group_span(Q)));
  r.biset_is_identity = biset_iso(realize(to_span(qq)), identity_biset(group_groupoid(Q)));
  return r;
}

GroupSpan section(FiveForm const& form) {
  auto GH = direct_product(form.G, form.H);
  if (!is_subgroup(*GH, form.L)) throw TypeError("five-form subgroup is not a subgroup of G × H");
  auto e = subgroup_group(GH, form.L);
  int const nh = form.H->order();
  std::vector<Element> to_h, to_g;
  for (Element i = 0; i < e.group->order(); ++i) {
    to_g.push_back(e.incl(i) / nh);
    to_h.push_back(e.incl(i) % nh);
  }
  return GroupSpan{e.group, make_hom(e.group, form.H, to_h), make_hom(e.group, form.G, to_g)};
}

namespace {

bool free_enough(Biset const& U, PairKind pair) { return pair == PairKind::FaithfulBoth ? is_bifree(U) : is_right_free(U); }

/// Realizes the basis of Hom(A, B) and checks it lands bijectively on the free transitive classes.
RelationReport check_basis(PairKind pair, GroupPtr const& A, GroupPtr const& B, std::vector<SpanClassKey>& keys) {
  auto X = group_groupoid(A), Y = group_groupoid(B);
  keys = hom_basis(X, Y, pair).keys;
  std::set<BisetClassKey> got;
  std::string tag = pair_name(pair) + " " + A->name() + "→" + B->name() + ": ";
  for (auto const& k : keys) {
    auto U = realize(representative(X, Y, k));
    auto cls = biset_class(U);
    if (cls.terms.size() != 1 || cls.terms.terms().begin()->second != 1) {
      return {false, tag + "basis span realizes to " + format_biset_sum(cls)};
    }
    if (!free_enough(U, pair)) return {false, tag + "basis span realizes to a non-free biset"};
    if (!got.insert(cls.terms.terms().begin()->first).second) return {false, tag + "two basis spans realize alike"};
  }
  std::set<BisetClassKey> want;
  for (auto const& L : subgroup_classes(*direct_product(B, A))) {
    if (free_enough(biset_from_subgroup(B, A, L), pair)) want.insert({0, 0, L});
  }
  if (got != want) {
    return {false, tag + std::to_string(got.size()) + " realized classes vs " + std::to_string(want.size()) +
                       " free transitive classes"};
  }
  return {true, {}};
}

}  // namespace

RelationReport check_restricted_iso(PairKind pair, GroupPtr const& H, GroupPtr const& G, int bound) {
  if (pair != PairKind::FaithfulRight && pair != PairKind::FaithfulBoth) {
    throw TypeError("check_restricted_iso needs faithful_right or faithful_both");
  }
  if (H->order() > bound || G->order() > bound) {
    throw BoundExceeded("check_restricted_iso: group order exceeds bound " + std::to_string(bound));
  }
  std::vector<SpanClassKey> hg, gg, hh;
  for (auto const& [A, B, keys] : {std::tie(H, G, hg), std::tie(G, G, gg), std::tie(H, H, hh)}) {
    auto r = check_basis(pair, A, B, keys);
    if (!r.pass) return r;
  }
  auto X = group_groupoid(H), Y = group_groupoid(G);
  auto basis_sum = [](GroupoidPtr const& P, GroupoidPtr const& Q, SpanClassKey const& k) {
    return SpanSum{P, Q, LinComb<SpanClassKey>(k)};
  };
  auto check_pair = [&](SpanSum const& first, SpanSum const& second) -> RelationReport {
    auto lhs = realize(compose(first, second));
    auto rhs = biset_class(tensor(realize(representative(second.source, second.target, second.terms.terms().begin()->first)),
                                  realize(representative(first.source, first.target, first.terms.terms().begin()->first))));
    if (lhs != rhs) {
      return {false, pair_name(pair) + " " + H->name() + "," + G->name() + ": composite realizes to " +
                         format_biset_sum(lhs) + " but the tensor is " + format_biset_sum(rhs)};
    }
    return {true, {}};
  };
  for (auto const& s : hg) {
    for (auto const& e : hh) {
      auto r = check_pair(basis_sum(X, X, e), basis_sum(X, Y, s));
      if (!r.pass) return r;
    }
    for (auto const& e : gg) {
      auto r = check_pair(basis_sum(X, Y, s), basis_sum(Y, Y, e));
      if (!r.pass) return r;
    }
  }
  return {true, {}};
}

}  // namespace mackey
