#include <algorithm>
#include <optional>
#include <sstream>

#include "mackey/presentation.hpp"

namespace mackey {

namespace {

using K = Letter::Kind;
using Side = std::vector<std::pair<long long, SpanWord>>;

Side one(GroupPtr start, std::vector<Letter> letters) { return {{1, SpanWord{std::move(start), std::move(letters)}}}; }

/// Labels of S ∩ e(sub) in the subgroup's own numbering.
Subgroup in_labels(Embedding const& e, Subgroup const& S) {
  Subgroup out;
  for (Element i = 0; i < e.group->order(); ++i) {
    if (contains(S, e.incl(i))) out.push_back(i);
  }
  return out;
}

/// Index of each element of the ambient group inside the embedded subgroup, -1 outside.
std::vector<Element> positions(Embedding const& e) {
  std::vector<Element> pos(e.incl.tgt->order(), -1);
  for (Element i = 0; i < e.group->order(); ++i) pos[e.incl(i)] = i;
  return pos;
}

/// The map Q → T with q∘p = f for a surjection p: X → Q and f constant on the fibres of p.
Hom factor_through(Hom const& p, Hom const& f) {
  std::vector<Element> map(p.tgt->order(), -1);
  for (Element x = 0; x < p.src->order(); ++x) map[p(x)] = f(x);
  return make_hom(p.tgt, f.tgt, std::move(map));
}

/// Hom from an explicit element function.
template <class F>
Hom build_hom(GroupPtr src, GroupPtr tgt, F const& f) {
  std::vector<Element> map(src->order());
  for (Element x = 0; x < src->order(); ++x) map[x] = f(x);
  return make_hom(std::move(src), std::move(tgt), std::move(map));
}

Subgroup image_set(Hom const& f, Subgroup const& S) {
  Subgroup out;
  for (Element s : S) out.push_back(f(s));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string describe(GroupPtr const& G, std::initializer_list<std::pair<char const*, Subgroup>> parts) {
  std::ostringstream os;
  os << "G=" << G->name();
  for (auto const& [n, S] : parts) os << " " << n << "=" << format_subgroup(S);
  return os.str();
}

std::string describe_map(Hom const& f) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < f.map.size(); ++i) os << (i ? "," : "") << f.map[i];
  os << "]";
  return os.str();
}

RelationInstance make(std::string family, std::string desc, Side lhs, Side rhs) {
  return {std::move(family), std::move(desc), std::move(lhs), std::move(rhs)};
}

std::vector<RelationInstance> family_0a(GroupPtr const& G) {
  Subgroup all = whole(*G), one_ = trivial_subgroup();
  std::vector<RelationInstance> out;
  out.push_back(make("0a", "Res^G_G, " + describe(G, {}), one(G, {res(G, all)}), one(G, {})));
  out.push_back(make("0a", "Ind^G_G, " + describe(G, {}), one(G, {ind(G, all)}), one(G, {})));
  out.push_back(make("0a", "Defl^G_G/1, " + describe(G, {}), one(G, {defl(G, one_)}), one(G, {})));
  out.push_back(make("0a", "Infl^G_G/1, " + describe(G, {}), one(G, {infl(G, one_)}), one(G, {})));
  return out;
}

std::vector<RelationInstance> family_0b(GroupPtr const& G) {
  std::vector<RelationInstance> out;
  for (Element x = 0; x < G->order(); ++x) {
    out.push_back(make("0b", describe(G, {}) + " x=" + std::to_string(x), one(G, {iso(conjugation(G, x))}),
                       one(G, {})));
  }
  return out;
}

std::vector<RelationInstance> family_1a(GroupPtr const& G) {
  std::vector<RelationInstance> out;
  for (auto const& H : G->subgroups()) {
    auto eH = subgroup_group(G, H);
    for (auto const& Kk : G->subgroups()) {
      if (!std::includes(H.begin(), H.end(), Kk.begin(), Kk.end())) continue;
      auto eKH = subgroup_group(eH.group, in_labels(eH, Kk));
      auto eK = subgroup_group(G, Kk);
      std::string d = describe(G, {{"H", H}, {"K", Kk}});
      out.push_back(make("1a", "Res " + d,
                         one(G, {make_letter(K::Res, eH.incl), make_letter(K::Res, eKH.incl)}),
                         one(G, {make_letter(K::Res, eK.incl)})));
      out.push_back(make("1a", "Ind " + d,
                         one(eK.group, {make_letter(K::Ind, eKH.incl), make_letter(K::Ind, eH.incl)}),
                         one(eK.group, {make_letter(K::Ind, eK.incl)})));
    }
  }
  return out;
}

std::vector<RelationInstance> family_1b(GroupPtr const& G) {
  std::vector<RelationInstance> out;
  auto autos = isomorphisms(G, G);
  for (auto const& f : autos) {
    for (auto const& g : autos) {
      out.push_back(make("1b", describe(G, {}) + " f=" + describe_map(f) + " g=" + describe_map(g),
                         one(G, {iso(f), iso(g)}), one(G, {iso(compose(g, f))})));
    }
  }
  return out;
}

std::vector<RelationInstance> family_1c(GroupPtr const& G) {
  std::vector<RelationInstance> out;
  auto normals = normal_subgroups(*G);
  for (auto const& N : normals) {
    auto qN = quotient(G, N);
    for (auto const& M : normals) {
      if (!std::includes(M.begin(), M.end(), N.begin(), N.end())) continue;
      auto qNN = quotient(qN.group, image_set(qN.proj, M));
      auto qM = quotient(G, M);
      // (G/N)/(M/N) → G/M
      Hom phi = induced_on_quotients(compose(qNN.proj, qN.proj), qM.proj);
      std::string d = describe(G, {{"N", N}, {"M", M}});
      out.push_back(make("1c", "Infl " + d,
                         one(qM.group, {iso(inverse(phi)), make_letter(K::Infl, qNN.proj),
                                        make_letter(K::Infl, qN.proj)}),
                         one(qM.group, {make_letter(K::Infl, qM.proj)})));
      out.push_back(make("1c", "Defl " + d,
                         one(G, {make_letter(K::Defl, qN.proj), make_letter(K::Defl, qNN.proj), iso(phi)}),
                         one(G, {make_letter(K::Defl, qM.proj)})));
    }
  }
  return out;
}

std::vector<RelationInstance> family_2a(GroupPtr const& G) {
  std::vector<RelationInstance> out;
  auto autos = isomorphisms(G, G);
  for (auto const& Kk : G->subgroups()) {
    auto eK = subgroup_group(G, Kk);
    for (auto const& f : autos) {
      Subgroup fK = image_set(f, Kk);
      auto efK = subgroup_group(G, fK);
      auto pos = positions(efK);
      Hom ft = build_hom(eK.group, efK.group, [&](Element k) { return pos[f(eK.incl(k))]; });
      std::string d = describe(G, {{"K", Kk}}) + " f=" + describe_map(f);
      out.push_back(make("2a", "Res " + d, one(G, {make_letter(K::Res, eK.incl), iso(ft)}),
                         one(G, {iso(f), make_letter(K::Res, efK.incl)})));
      out.push_back(make("2a", "Ind " + d, one(eK.group, {make_letter(K::Ind, eK.incl), iso(f)}),
                         one(eK.group, {iso(ft), make_letter(K::Ind, efK.incl)})));
    }
  }
  return out;
}

std::vector<RelationInstance> family_2b(GroupPtr const& G) {
  std::vector<RelationInstance> out;
  auto autos = isomorphisms(G, G);
  for (auto const& N : normal_subgroups(*G)) {
    auto qN = quotient(G, N);
    for (auto const& f : autos) {
      auto qfN = quotient(G, image_set(f, N));
      Hom fbar = induced_on_quotients(qN.proj, compose(qfN.proj, f));
      std::string d = describe(G, {{"N", N}}) + " f=" + describe_map(f);
      out.push_back(make("2b", "Defl " + d, one(G, {make_letter(K::Defl, qN.proj), iso(fbar)}),
                         one(G, {iso(f), make_letter(K::Defl, qfN.proj)})));
      out.push_back(make("2b", "Infl " + d, one(qN.group, {make_letter(K::Infl, qN.proj), iso(f)}),
                         one(qN.group, {iso(fbar), make_letter(K::Infl, qfN.proj)})));
    }
  }
  return out;
}

RelationInstance mackey_instance(GroupPtr const& G, Subgroup const& H, Subgroup const& Kk) {
  auto eH = subgroup_group(G, H);
  auto eK = subgroup_group(G, Kk);
  Side rhs;
  for (auto const& dc : double_cosets(*G, H, Kk)) {
    Element x = dc.rep;
    auto eA = subgroup_group(eK.group, in_labels(eK, conjugate(*G, H, G->inv(x))));  // x⁻¹Hx ∩ K
    auto eB = subgroup_group(eH.group, in_labels(eH, conjugate(*G, Kk, x)));        // H ∩ xKx⁻¹
    std::vector<Element> posB(G->order(), -1);
    for (Element j = 0; j < eB.group->order(); ++j) posB[eH.incl(eB.incl(j))] = j;
    Hom cx = build_hom(eA.group, eB.group, [&](Element a) { return posB[G->conj(x, eK.incl(eA.incl(a)))]; });
    rhs.push_back({1, SpanWord{eK.group,
                               {make_letter(K::Res, eA.incl), iso(cx), make_letter(K::Ind, eB.incl)}}});
  }
  return make("2c", describe(G, {{"H", H}, {"K", Kk}}),
              one(eK.group, {make_letter(K::Ind, eK.incl), make_letter(K::Res, eH.incl)}), std::move(rhs));
}

std::vector<RelationInstance> family_2c(GroupPtr const& G) {
  std::vector<RelationInstance> out;
  for (auto const& H : G->subgroups()) {
    for (auto const& Kk : G->subgroups()) out.push_back(mackey_instance(G, H, Kk));
  }
  return out;
}

std::vector<RelationInstance> family_2d(GroupPtr const& G, bool unrestricted) {
  std::vector<RelationInstance> out;
  auto normals = normal_subgroups(*G);
  for (auto const& M : normals) {
    for (auto const& N : normals) {
      if (!unrestricted && intersect(M, N).size() != 1) continue;
      out.push_back(relation_2d(G, M, N, unrestricted));
    }
  }
  return out;
}

std::vector<RelationInstance> family_2e(GroupPtr const& G) {
  std::vector<RelationInstance> out;
  for (auto const& H : G->subgroups()) {
    auto eH = subgroup_group(G, H);
    for (auto const& N : normal_subgroups(*G)) {
      auto qN = quotient(G, N);
      Subgroup HN = product_set(*G, H, N);
      auto eHN = subgroup_group(G, HN);
      auto qHN = quotient(eHN.group, in_labels(eHN, N));                    // HN/N
      auto qH = quotient(eH.group, in_labels(eH, N));                       // H/(H∩N)
      auto posHN = positions(eHN);
      Hom f = factor_through(qH.proj, build_hom(eH.group, qHN.group, [&](Element h) {
                               return qHN.proj(posHN[eH.incl(h)]);
                             }));
      // HN/N ↪ G/N
      Hom j = factor_through(qHN.proj, compose(qN.proj, eHN.incl));
      std::string d = describe(G, {{"H", H}, {"N", N}});
      out.push_back(make("2e", "Ind " + d,
                         one(eH.group, {make_letter(K::Ind, eH.incl), make_letter(K::Defl, qN.proj)}),
                         one(eH.group, {make_letter(K::Defl, qH.proj), iso(f), make_letter(K::Ind, j)})));
      out.push_back(make("2e", "Res " + d,
                         one(qN.group, {make_letter(K::Infl, qN.proj), make_letter(K::Res, eH.incl)}),
                         one(qN.group, {make_letter(K::Res, j), iso(inverse(f)), make_letter(K::Infl, qH.proj)})));
    }
  }
  return out;
}

std::vector<RelationInstance> family_2f(GroupPtr const& G) {
  std::vector<RelationInstance> out;
  for (auto const& N : normal_subgroups(*G)) {
    auto qN = quotient(G, N);
    for (auto const& H : G->subgroups()) {
      if (!std::includes(H.begin(), H.end(), N.begin(), N.end())) continue;
      auto eH = subgroup_group(G, H);
      auto qHN = quotient(eH.group, in_labels(eH, N));                // H/N as a quotient of H
      auto eQ = subgroup_group(qN.group, image_set(qN.proj, H));       // H/N as a subgroup of G/N
      auto posQ = positions(eQ);
      Hom j = factor_through(qHN.proj, build_hom(eH.group, eQ.group, [&](Element h) {
                               return posQ[qN.proj(eH.incl(h))];
                             }));
      std::string d = describe(G, {{"H", H}, {"N", N}});
      out.push_back(make("2f", "Res " + d,
                         one(G, {make_letter(K::Defl, qN.proj), make_letter(K::Res, eQ.incl)}),
                         one(G, {make_letter(K::Res, eH.incl), make_letter(K::Defl, qHN.proj), iso(j)})));
      out.push_back(make("2f", "Ind " + d,
                         one(qHN.group, {make_letter(K::Infl, qHN.proj), make_letter(K::Ind, eH.incl)}),
                         one(qHN.group, {iso(j), make_letter(K::Ind, eQ.incl), make_letter(K::Infl, qN.proj)})));
    }
  }
  return out;
}

/// Deflates every term; the realization of a span sum is determined by this.
SpanSum deflate_sum(SpanSum const& s) {
  SpanSum out{s.source, s.target, {}};
  for (auto const& [k, c] : s.terms.terms()) {
    out.terms.add({k.source_component, k.target_component, canonical_key(deflate(k.key.rep))}, c);
  }
  return out;
}

}  // namespace

std::vector<std::string> const& relation_families() {
  static std::vector<std::string> const f = {"0a", "0b", "1a", "1b", "1c", "2a", "2b", "2c", "2d", "2e", "2f"};
  return f;
}

std::vector<RelationInstance> relation_instances(std::string const& family, GroupPtr const& G, bool unrestricted) {
  if (family == "0a") return family_0a(G);
  if (family == "0b") return family_0b(G);
  if (family == "1a") return family_1a(G);
  if (family == "1b") return family_1b(G);
  if (family == "1c") return family_1c(G);
  if (family == "2a") return family_2a(G);
  if (family == "2b") return family_2b(G);
  if (family == "2c") return family_2c(G);
  if (family == "2d") return family_2d(G, unrestricted);
  if (family == "2e") return family_2e(G);
  if (family == "2f") return family_2f(G);
  if (family == "defl") {
    std::vector<RelationInstance> out;
    for (auto const& N : normal_subgroups(*G)) out.push_back(relation_deflativity(G, N));
    return out;
  }
  throw ParseError("unknown relation family: " + family);
}

RelationInstance relation_2d(GroupPtr const& G, Subgroup const& M, Subgroup const& N, bool unrestricted) {
  if (!is_normal(*G, M) || !is_normal(*G, N)) throw TypeError("2d needs normal subgroups");
  if (!unrestricted && intersect(M, N).size() != 1) throw TypeError("2d needs M ∩ N = 1 for spans");
  auto qM = quotient(G, M);
  auto qN = quotient(G, N);
  Subgroup MN = product_set(*G, M, N);
  auto qMM = quotient(qM.group, image_set(qM.proj, MN));  // (G/M)/(MN/M)
  auto qNN = quotient(qN.group, image_set(qN.proj, MN));  // (G/N)/(MN/N)
  Hom iso_mid = induced_on_quotients(compose(qMM.proj, qM.proj), compose(qNN.proj, qN.proj));
  return make("2d", describe(G, {{"M", M}, {"N", N}}),
              one(qM.group, {make_letter(K::Infl, qM.proj), make_letter(K::Defl, qN.proj)}),
              one(qM.group, {make_letter(K::Defl, qMM.proj), iso(iso_mid), make_letter(K::Infl, qNN.proj)}));
}

RelationInstance relation_deflativity(GroupPtr const& G, Subgroup const& N) {
  if (!is_normal(*G, N)) throw TypeError("deflativity needs a normal subgroup");
  auto qN = quotient(G, N);
  return make("defl", describe(G, {{"N", N}}),
              one(qN.group, {make_letter(K::Infl, qN.proj), make_letter(K::Defl, qN.proj)}), one(qN.group, {}));
}

RelationInstance relation_mackey(GroupPtr const& G, Subgroup const& H, Subgroup const& Kk) {
  if (!is_subgroup(*G, H) || !is_subgroup(*G, Kk)) throw TypeError("Mackey formula needs subgroups");
  return mackey_instance(G, H, Kk);
}

SpanSum evaluate_normalized(Side const& side, NormalizeOptions const& opt) {
  if (side.empty()) throw TypeError("empty side");
  SpanSum acc = zero(group_groupoid(side.front().second.start), group_groupoid(side.front().second.end()));
  for (auto const& [c, w] : side) acc = add(acc, scale(normalize_word(w, opt), c));
  return acc;
}

SpanSum evaluate_folded(Side const& side) {
  if (side.empty()) throw TypeError("empty side");
  SpanSum acc = zero(group_groupoid(side.front().second.start), group_groupoid(side.front().second.end()));
  for (auto const& [c, w] : side) acc = add(acc, scale(fold_compose(w), c));
  return acc;
}

RelationReport check_relation(RelationInstance const& r, NormalizeOptions const& opt) {
  auto side_check = [&](Side const& side, char const* name, SpanSum& value) -> std::string {
    value = evaluate_normalized(side, opt);
    SpanSum folded = evaluate_folded(side);
    if (opt.deflative) folded = deflate_sum(folded);
    if (value != folded) {
      return std::string(name) + ": normalize_word gives " + format_span_sum(value) + " but compose_spans gives " +
             format_span_sum(folded);
    }
    return {};
  };
  SpanSum l, rr;
  std::string err = side_check(r.lhs, "lhs", l);
  if (err.empty()) err = side_check(r.rhs, "rhs", rr);
  if (err.empty() && l != rr) err = "lhs " + format_span_sum(l) + " != rhs " + format_span_sum(rr);
  if (!err.empty()) return {false, r.family + " " + r.description + ": " + err};
  return {true, {}};
}

SpanWord random_word(std::mt19937_64& rng, GroupPtr const& start, int length, std::vector<GroupPtr> const& pool) {
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  SpanWord w{start, {}};
  GroupPtr cur = start;
  while (static_cast<int>(w.letters.size()) < length) {
    std::optional<Letter> l;
    switch (pick(5)) {
      case 0: {
        auto const& subs = cur->subgroups();
        l = res(cur, subs[pick(subs.size())]);
        break;
      }
      case 1: {
        auto const& G = pool[pick(pool.size())];
        std::vector<Hom> inj;
        for (auto const& f : all_homs(cur, G)) {
          if (is_injective(f)) inj.push_back(f);
        }
        if (!inj.empty()) l = make_letter(K::Ind, inj[pick(inj.size())]);
        break;
      }
      case 2: {
        auto const& G = pool[pick(pool.size())];
        std::vector<Hom> sur;
        for (auto const& f : all_homs(G, cur)) {
          if (is_surjective(f)) sur.push_back(f);
        }
        if (!sur.empty()) l = make_letter(K::Infl, sur[pick(sur.size())]);
        break;
      }
      case 3: {
        auto ns = normal_subgroups(*cur);
        l = defl(cur, ns[pick(ns.size())]);
        break;
      }
      default: {
        auto autos = isomorphisms(cur, cur);
        l = iso(autos[pick(autos.size())]);
        break;
      }
    }
    if (!l) continue;
    cur = l->target();
    w.letters.push_back(*l);
  }
  return w;
}

}  // namespace mackey
