#include "mackey/biset.hpp"

#include "coend.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace mackey {

using detail::UnionFind;
using detail::quotient_biset;

namespace {

Subgroup image_set(Hom const& f, Subgroup const& S) {
  Subgroup out;
  for (Element s : S) out.push_back(f(s));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Subgroup in_labels(Embedding const& e, Subgroup const& S) {
  Subgroup out;
  for (Element i = 0; i < e.group->order(); ++i) {
    if (contains(S, e.incl(i))) out.push_back(i);
  }
  return out;
}

struct Reps {
  std::vector<int> comp;
  std::vector<int> rep;
};

Reps reps_of(FiniteGroupoid const& X) {
  Reps r;
  r.comp = component_index(X);
  for (int x = 0; x < X.num_objects(); ++x) {
    if (r.comp[x] == static_cast<int>(r.rep.size())) r.rep.push_back(x);
  }
  return r;
}

}  // namespace

void check_biset(Biset const& U) {
  auto const& G = *U.target;
  auto const& H = *U.source;
  int const n = U.size();
  if (U.tgt_obj.size() != static_cast<std::size_t>(n)) throw TypeError("biset object lists differ in length");
  for (int u = 0; u < n; ++u) {
    if (U.act_left(G.identity(U.tgt_obj[u]), u) != u) throw TypeError("identity of G acts nontrivially");
    if (U.act_right(u, H.identity(U.src_obj[u])) != u) throw TypeError("identity of H acts nontrivially");
    for (int g = 0; g < G.num_arrows(); ++g) {
      if (G.src(g) != U.tgt_obj[u]) continue;
      int gu = U.act_left(g, u);
      if (gu < 0 || U.tgt_obj[gu] != G.tgt(g) || U.src_obj[gu] != U.src_obj[u]) throw TypeError("left action lands wrong");
      for (int g2 : G.out_arrows(G.tgt(g))) {
        if (U.act_left(g2, gu) != U.act_left(G.compose(g2, g), u)) throw TypeError("left action not associative");
      }
      for (int h = 0; h < H.num_arrows(); ++h) {
        if (H.tgt(h) != U.src_obj[u]) continue;
        if (U.act_right(gu, h) != U.act_left(g, U.act_right(u, h))) throw TypeError("actions do not commute");
      }
    }
    for (int h = 0; h < H.num_arrows(); ++h) {
      if (H.tgt(h) != U.src_obj[u]) continue;
      int uh = U.act_right(u, h);
      if (uh < 0 || U.src_obj[uh] != H.src(h) || U.tgt_obj[uh] != U.tgt_obj[u]) throw TypeError("right action lands wrong");
      for (int h2 : H.in_arrows(H.src(h))) {
        if (U.act_right(uh, h2) != U.act_right(u, H.compose(h, h2))) throw TypeError("right action not associative");
      }
    }
  }
}

Biset identity_biset(GroupoidPtr const& X) {
  int const m = X->num_arrows();
  std::vector<int> so(m), to(m);
  for (int a = 0; a < m; ++a) {
    so[a] = X->src(a);
    to[a] = X->tgt(a);
  }
  return make_biset(
      X, X, so, to, [&](int g, int u) { return X->compose(g, u); }, [&](int u, int h) { return X->compose(u, h); });
}

Biset biset_from_subgroup(GroupPtr const& G, GroupPtr const& H, Subgroup const& L) {
  auto GH = direct_product(G, H);
  if (!is_subgroup(*GH, L)) throw TypeError("not a subgroup of G × H");
  int const n = GH->order();
  std::vector<int> coset(n, -1);
  std::vector<Element> reps;
  for (Element x = 0; x < n; ++x) {
    if (coset[x] >= 0) continue;
    for (Element l : L) coset[GH->mul(x, l)] = static_cast<int>(reps.size());
    reps.push_back(x);
  }
  int const k = static_cast<int>(reps.size());
  int const nh = H->order();
  return make_biset(
      group_groupoid(H), group_groupoid(G), std::vector<int>(k, 0), std::vector<int>(k, 0),
      [&](int g, int u) { return coset[GH->mul(g * nh, reps[u])]; },
      [&](int u, int h) { return coset[GH->mul(H->inv(h), reps[u])]; });
}

Biset elementary_biset(Letter const& l) {
  Hom const& m = l.map;
  auto gp = [](GroupPtr const& G) { return group_groupoid(G); };
  switch (l.kind) {
    case Letter::Kind::Ind: {
      Group const& G = *m.tgt;
      int n = G.order();
      return make_biset(
          gp(m.src), gp(m.tgt), std::vector<int>(n, 0), std::vector<int>(n, 0),
          [&](int g, int u) { return G.mul(g, u); }, [&](int u, int k) { return G.mul(u, m(k)); });
    }
    case Letter::Kind::Res: {
      Group const& G = *m.tgt;
      int n = G.order();
      return make_biset(
          gp(m.tgt), gp(m.src), std::vector<int>(n, 0), std::vector<int>(n, 0),
          [&](int k, int u) { return G.mul(m(k), u); }, [&](int u, int g) { return G.mul(u, g); });
    }
    case Letter::Kind::Infl: {
      Group const& Q = *m.tgt;
      int n = Q.order();
      return make_biset(
          gp(m.tgt), gp(m.src), std::vector<int>(n, 0), std::vector<int>(n, 0),
          [&](int g, int u) { return Q.mul(m(g), u); }, [&](int u, int q) { return Q.mul(u, q); });
    }
    case Letter::Kind::Defl: {
      Group const& Q = *m.tgt;
      int n = Q.order();
      return make_biset(
          gp(m.src), gp(m.tgt), std::vector<int>(n, 0), std::vector<int>(n, 0),
          [&](int q, int u) { return Q.mul(q, u); }, [&](int u, int g) { return Q.mul(u, m(g)); });
    }
    case Letter::Kind::Iso: {
      Group const& T = *m.tgt;
      int n = T.order();
      return make_biset(
          gp(m.src), gp(m.tgt), std::vector<int>(n, 0), std::vector<int>(n, 0),
          [&](int g, int u) { return T.mul(g, u); }, [&](int u, int g) { return T.mul(u, m(g)); });
    }
  }
  throw Error("unknown letter");
}

Biset word_biset(SpanWord const& w) {
  check_word(w);
  Biset acc = identity_biset(group_groupoid(w.start));
  for (auto const& l : w.letters) acc = tensor(elementary_biset(l), acc);
  return acc;
}

Biset tensor(Biset const& V, Biset const& U) {
  if (!same_groupoid(V.source, U.target)) throw TypeError("tensor: middle groupoids differ");
  auto const& G = *U.target;
  int const nv = V.size(), nu = U.size();
  int const npairs = nv * nu;
  auto id = [&](int v, int u) { return v * nu + u; };
  std::vector<int> members;
  for (int v = 0; v < nv; ++v) {
    for (int u = 0; u < nu; ++u) {
      if (V.src_obj[v] == U.tgt_obj[u]) members.push_back(id(v, u));
    }
  }
  UnionFind uf(std::max(npairs, 1));
  // (v·φ, u) ∼ (v, φ·u)
  for (int phi = 0; phi < G.num_arrows(); ++phi) {
    for (int v = 0; v < nv; ++v) {
      if (V.src_obj[v] != G.tgt(phi)) continue;
      int vphi = V.act_right(v, phi);
      for (int u = 0; u < nu; ++u) {
        if (U.tgt_obj[u] != G.src(phi)) continue;
        uf.unite(id(vphi, u), id(v, U.act_left(phi, u)));
      }
    }
  }
  return quotient_biset(
      U.source, V.target, members, uf, npairs, [&](int p) { return U.src_obj[p % nu]; },
      [&](int p) { return V.tgt_obj[p / nu]; }, [&](int k, int p) { return id(V.act_left(k, p / nu), p % nu); },
      [&](int p, int h) { return id(p / nu, U.act_right(p % nu, h)); });
}

Biset disjoint_sum(Biset const& U, Biset const& V) {
  if (!same_groupoid(U.source, V.source) || !same_groupoid(U.target, V.target)) {
    throw TypeError("sum of bisets with different endpoints");
  }
  int nu = U.size();
  std::vector<int> so = U.src_obj, to = U.tgt_obj;
  so.insert(so.end(), V.src_obj.begin(), V.src_obj.end());
  to.insert(to.end(), V.tgt_obj.begin(), V.tgt_obj.end());
  return make_biset(
      U.source, U.target, so, to,
      [&](int g, int u) { return u < nu ? U.act_left(g, u) : nu + V.act_left(g, u - nu); },
      [&](int u, int h) { return u < nu ? U.act_right(u, h) : nu + V.act_right(u - nu, h); });
}

std::vector<Biset> transitive_decomposition(Biset const& U) {
  int const n = U.size();
  UnionFind uf(std::max(n, 1));
  for (int u = 0; u < n; ++u) {
    for (int g = 0; g < U.target->num_arrows(); ++g) {
      if (U.target->src(g) == U.tgt_obj[u]) uf.unite(u, U.act_left(g, u));
    }
    for (int h = 0; h < U.source->num_arrows(); ++h) {
      if (U.source->tgt(h) == U.src_obj[u]) uf.unite(u, U.act_right(u, h));
    }
  }
  std::map<int, std::vector<int>> orbits;
  for (int u = 0; u < n; ++u) orbits[uf.find(u)].push_back(u);
  std::vector<Biset> out;
  for (auto const& [root, elems] : orbits) {
    std::vector<int> pos(n, -1);
    for (std::size_t i = 0; i < elems.size(); ++i) pos[elems[i]] = static_cast<int>(i);
    std::vector<int> so, to;
    for (int u : elems) {
      so.push_back(U.src_obj[u]);
      to.push_back(U.tgt_obj[u]);
    }
    out.push_back(make_biset(
        U.source, U.target, so, to, [&](int g, int u) { return pos[U.act_left(g, elems[u])]; },
        [&](int u, int h) { return pos[U.act_right(elems[u], h)]; }));
  }
  return out;
}

bool is_right_free(Biset const& U) {
  for (int u = 0; u < U.size(); ++u) {
    for (int h = 0; h < U.source->num_arrows(); ++h) {
      if (U.source->tgt(h) == U.src_obj[u] && h != U.source->identity(U.src_obj[u]) && U.act_right(u, h) == u) {
        return false;
      }
    }
  }
  return true;
}

bool is_left_free(Biset const& U) {
  for (int u = 0; u < U.size(); ++u) {
    for (int g = 0; g < U.target->num_arrows(); ++g) {
      if (U.target->src(g) == U.tgt_obj[u] && g != U.target->identity(U.tgt_obj[u]) && U.act_left(g, u) == u) {
        return false;
      }
    }
  }
  return true;
}

namespace {

/// Stabilizer of u inside End(tgt_obj u) × End(src_obj u), in the labels of the vertex groups.
Subgroup vertex_stabilizer(Biset const& U, int u, FiniteGroupoid::VertexGroup const& VG,
                           FiniteGroupoid::VertexGroup const& VH) {
  Subgroup L;
  int const nh = VH.group->order();
  for (Element g = 0; g < VG.group->order(); ++g) {
    int gu = U.act_left(VG.arrows[g], u);
    for (Element h = 0; h < nh; ++h) {
      if (U.act_right(u, VH.arrows[h]) == gu) L.push_back(g * nh + h);
    }
  }
  return L;
}

}  // namespace

Subgroup stabilizer(Biset const& U, int u) {
  if (U.source->num_objects() != 1 || U.target->num_objects() != 1) throw TypeError("stabilizer needs group endpoints");
  return vertex_stabilizer(U, u, U.target->vertex_group(0), U.source->vertex_group(0));
}

FiveForm five_form_of(GroupPtr const& G, GroupPtr const& H, Subgroup const& L) {
  auto GH = direct_product(G, H);
  if (!is_subgroup(*GH, L)) throw TypeError("not a subgroup of G × H");
  int const nh = H->order();
  FiveForm f{G, H, L, {}, {}, {}, {}, {}};
  for (Element x : L) {
    Element g = x / nh, h = x % nh;
    f.D.push_back(g);
    f.B.push_back(h);
    if (h == 0) f.C.push_back(g);
    if (g == 0) f.A.push_back(h);
  }
  for (auto* S : {&f.D, &f.B, &f.C, &f.A}) {
    std::sort(S->begin(), S->end());
    S->erase(std::unique(S->begin(), S->end()), S->end());
  }
  auto least_in_coset = [](Group const& X, Element x, Subgroup const& N) {
    Element best = X.order();
    for (Element n : N) best = std::min(best, X.mul(x, n));
    return best;
  };
  std::map<Element, Element> fm;
  for (Element x : L) {
    Element g = x / nh, h = x % nh;
    fm.emplace(least_in_coset(*H, h, f.A), least_in_coset(*G, g, f.C));
  }
  f.f.assign(fm.begin(), fm.end());
  return f;
}

FiveForm bouc_canonical_form(Biset const& U) {
  if (U.source->num_objects() != 1 || U.target->num_objects() != 1) {
    throw TypeError("canonical form needs group endpoints");
  }
  if (U.size() == 0 || transitive_decomposition(U).size() != 1) throw TypeError("canonical form needs a transitive biset");
  auto VG = U.target->vertex_group(0);
  auto VH = U.source->vertex_group(0);
  auto GH = direct_product(VG.group, VH.group);
  return five_form_of(VG.group, VH.group, conjugacy_rep(*GH, stabilizer(U, 0)));
}

std::string format_five_form(FiveForm const& f) {
  std::ostringstream os;
  os << "B=" << format_subgroup(f.B) << " A=" << format_subgroup(f.A) << " C=" << format_subgroup(f.C)
     << " D=" << format_subgroup(f.D) << " f=";
  for (std::size_t i = 0; i < f.f.size(); ++i) os << (i ? "," : "") << f.f[i].first << "->" << f.f[i].second;
  return os.str();
}

SpanWord five_form_word(FiveForm const& f) {
  auto const& G = f.G;
  auto const& H = f.H;
  int const nh = H->order();
  auto eB = subgroup_group(H, f.B);
  auto qB = quotient(eB.group, in_labels(eB, f.A));
  auto eD = subgroup_group(G, f.D);
  auto qD = quotient(eD.group, in_labels(eD, f.C));
  std::vector<Element> posB(nh, -1), posD(G->order(), -1);
  for (Element i = 0; i < eB.group->order(); ++i) posB[eB.incl(i)] = i;
  for (Element i = 0; i < eD.group->order(); ++i) posD[eD.incl(i)] = i;
  std::vector<Element> iso_map(qB.group->order(), -1);
  for (Element x : f.L) iso_map[qB.proj(posB[x % nh])] = qD.proj(posD[x / nh]);
  Hom phi = make_hom(qB.group, qD.group, iso_map);
  return SpanWord{H,
                  {make_letter(Letter::Kind::Res, eB.incl), make_letter(Letter::Kind::Defl, qB.proj), iso(phi),
                   make_letter(Letter::Kind::Infl, qD.proj), make_letter(Letter::Kind::Ind, eD.incl)}};
}

bool BisetClassKey::operator<(BisetClassKey const& o) const {
  if (source_component != o.source_component) return source_component < o.source_component;
  if (target_component != o.target_component) return target_component < o.target_component;
  if (L.size() != o.L.size()) return L.size() < o.L.size();
  return L < o.L;
}

bool BisetClassKey::operator==(BisetClassKey const& o) const {
  return source_component == o.source_component && target_component == o.target_component && L == o.L;
}

bool BisetSum::operator==(BisetSum const& o) const {
  return same_groupoid(source, o.source) && same_groupoid(target, o.target) && terms == o.terms;
}

BisetSum biset_class(Biset const& U) {
  auto RG = reps_of(*U.target);
  auto RH = reps_of(*U.source);
  std::map<int, FiniteGroupoid::VertexGroup> vg, vh;
  BisetSum out{U.source, U.target, {}};
  for (auto const& O : transitive_decomposition(U)) {
    int const cg = RG.comp[O.tgt_obj[0]], ch = RH.comp[O.src_obj[0]];
    int const x0 = RG.rep[cg], y0 = RH.rep[ch];
    // move element 0 to the component representatives
    int alpha = U.target->hom(O.tgt_obj[0], x0).front();
    int beta = U.source->hom(y0, O.src_obj[0]).front();
    int u = O.act_right(O.act_left(alpha, 0), beta);
    if (!vg.count(x0)) vg.emplace(x0, U.target->vertex_group(x0));
    if (!vh.count(y0)) vh.emplace(y0, U.source->vertex_group(y0));
    auto const& VG = vg.at(x0);
    auto const& VH = vh.at(y0);
    auto GH = direct_product(VG.group, VH.group);
    out.terms.add({ch, cg, conjugacy_rep(*GH, vertex_stabilizer(O, u, VG, VH))}, 1);
  }
  return out;
}

BisetSum add(BisetSum const& a, BisetSum const& b) {
  if (!same_groupoid(a.source, b.source) || !same_groupoid(a.target, b.target)) {
    throw TypeError("add: different endpoints");
  }
  return {a.source, a.target, a.terms + b.terms};
}

BisetSum scale(BisetSum const& a, long long c) { return {a.source, a.target, a.terms.scaled(c)}; }

std::string format_biset_sum(BisetSum const& s, Ring const& ring) {
  std::ostringstream os;
  bool first = true;
  bool multi = s.source->num_objects() > 1 || s.target->num_objects() > 1;
  for (auto const& [k, c] : s.terms.terms()) {
    if (ring.is_zero(c)) continue;
    if (!first) os << " + ";
    first = false;
    os << ring.format(c) << "*[";
    if (multi) os << k.source_component << "→" << k.target_component << ": ";
    os << "L=" << format_subgroup(k.L) << "]";
  }
  return first ? "0" : os.str();
}

Biset biset_representative(GroupoidPtr const& H, GroupoidPtr const& G, BisetClassKey const& k) {
  auto RG = reps_of(*G);
  auto RH = reps_of(*H);
  int const x0 = RG.rep.at(k.target_component), y0 = RH.rep.at(k.source_component);
  auto VG = G->vertex_group(x0);
  auto VH = H->vertex_group(y0);
  Biset core = biset_from_subgroup(VG.group, VH.group, k.L);
  if (G->num_objects() == 1 && H->num_objects() == 1) return core;
  // G(x0, -) as a biset from End(x0) to G and H(-, y0) from H to End(y0)
  auto VGg = core.target, VHg = core.source;
  std::vector<int> out_x0 = G->out_arrows(x0), in_y0 = H->in_arrows(y0);
  std::vector<int> pos_out(G->num_arrows(), -1), pos_in(H->num_arrows(), -1);
  for (std::size_t i = 0; i < out_x0.size(); ++i) pos_out[out_x0[i]] = static_cast<int>(i);
  for (std::size_t i = 0; i < in_y0.size(); ++i) pos_in[in_y0[i]] = static_cast<int>(i);
  std::vector<int> so1(out_x0.size(), 0), to1;
  for (int a : out_x0) to1.push_back(G->tgt(a));
  Biset P = make_biset(
      VGg, G, so1, to1, [&](int g, int u) { return pos_out[G->compose(g, out_x0[u])]; },
      [&](int u, int e) { return pos_out[G->compose(out_x0[u], VG.arrows[e])]; });
  std::vector<int> so2, to2(in_y0.size(), 0);
  for (int a : in_y0) so2.push_back(H->src(a));
  Biset Q = make_biset(
      H, VHg, so2, to2, [&](int e, int u) { return pos_in[H->compose(VH.arrows[e], in_y0[u])]; },
      [&](int u, int h) { return pos_in[H->compose(in_y0[u], h)]; });
  return tensor(P, tensor(core, Q));
}

bool biset_iso(Biset const& U, Biset const& V) {
  if (!same_groupoid(U.source, V.source) || !same_groupoid(U.target, V.target)) {
    throw TypeError("biset_iso: different endpoints");
  }
  return U.size() == V.size() && biset_class(U) == biset_class(V);
}

bool biset_iso_search(Biset const& U, Biset const& V) {
  if (!same_groupoid(U.source, V.source) || !same_groupoid(U.target, V.target)) {
    throw TypeError("biset_iso_search: different endpoints");
  }
  int const n = U.size();
  if (V.size() != n) return false;
  std::vector<int> m(n, -1), used(n, 0);
  // Extends u ↦ v along both actions; records new assignments in `log`.
  auto propagate = [&](int u0, int v0, std::vector<int>& log) {
    std::vector<std::pair<int, int>> todo{{u0, v0}};
    auto assign = [&](int a, int b) {
      if (a < 0 || b < 0) return a == b;
      if (m[a] >= 0) return m[a] == b;
      if (used[b] || U.src_obj[a] != V.src_obj[b] || U.tgt_obj[a] != V.tgt_obj[b]) return false;
      m[a] = b;
      used[b] = 1;
      log.push_back(a);
      todo.push_back({a, b});
      return true;
    };
    todo.clear();
    if (!assign(u0, v0)) return false;
    while (!todo.empty()) {
      auto [a, b] = todo.back();
      todo.pop_back();
      for (int g = 0; g < U.target->num_arrows(); ++g) {
        if (U.target->src(g) == U.tgt_obj[a] && !assign(U.act_left(g, a), V.act_left(g, b))) return false;
      }
      for (int h = 0; h < U.source->num_arrows(); ++h) {
        if (U.source->tgt(h) == U.src_obj[a] && !assign(U.act_right(a, h), V.act_right(b, h))) return false;
      }
    }
    return true;
  };
  std::function<bool()> rec = [&]() {
    int u = 0;
    while (u < n && m[u] >= 0) ++u;
    if (u == n) return true;
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      std::vector<int> log;
      if (propagate(u, v, log) && rec()) return true;
      for (int a : log) {
        used[m[a]] = 0;
        m[a] = -1;
      }
    }
    return false;
  };
  return rec();
}

namespace {

BisetSum evaluate_bisets(std::vector<std::pair<long long, SpanWord>> const& side) {
  if (side.empty()) throw TypeError("empty side");
  BisetSum acc{group_groupoid(side.front().second.start), group_groupoid(side.front().second.end()), {}};
  for (auto const& [c, w] : side) acc = add(acc, scale(biset_class(word_biset(w)), c));
  return acc;
}

}  // namespace

RelationReport check_biset_relation(RelationInstance const& r) {
  auto l = evaluate_bisets(r.lhs);
  auto rr = evaluate_bisets(r.rhs);
  if (l != rr) {
    return {false, r.family + " " + r.description + ": lhs " + format_biset_sum(l) + " != rhs " + format_biset_sum(rr)};
  }
  return {true, {}};
}

RelationReport bouc_chain(GroupPtr const& G, Subgroup const& M, Subgroup const& N) {
  if (!is_normal(*G, M) || !is_normal(*G, N)) throw TypeError("Bouc's 2.(d) needs normal subgroups");
  using K = Letter::Kind;
  auto qM = quotient(G, M);
  auto qN = quotient(G, N);
  Subgroup MN = product_set(*G, M, N);
  auto qMM = quotient(qM.group, image_set(qM.proj, MN));
  Hom a = qMM.proj;                                                              // G/M ↠ G/MN
  Hom b = induced_on_quotients(qN.proj, compose(qMM.proj, qM.proj));             // G/N ↠ G/MN
  auto P = fibre_product(a, b);                                                  // pr1 = b̃, pr2 = ã
  std::map<std::pair<Element, Element>, Element> index;
  for (Element i = 0; i < P.group->order(); ++i) index[{P.pr1(i), P.pr2(i)}] = i;
  std::vector<Element> pmap(G->order());
  for (Element g = 0; g < G->order(); ++g) pmap[g] = index.at({qM.proj(g), qN.proj(g)});
  Hom p = make_hom(G, P.group, pmap);

  auto start = qM.group;
  SpanWord w0{start, {make_letter(K::Defl, a), make_letter(K::Infl, b)}};
  SpanWord w1{start, {make_letter(K::Infl, P.pr1), make_letter(K::Defl, P.pr2)}};
  SpanWord w2{start, {make_letter(K::Infl, P.pr1), make_letter(K::Infl, p), make_letter(K::Defl, p),
                      make_letter(K::Defl, P.pr2)}};
  SpanWord w3{start, {make_letter(K::Infl, qM.proj), make_letter(K::Defl, qN.proj)}};
  SpanWord pp{P.group, {make_letter(K::Infl, p), make_letter(K::Defl, p)}};

  std::string d = "G=" + G->name() + " M=" + format_subgroup(M) + " N=" + format_subgroup(N);
  auto fail = [&](std::string const& step) { return RelationReport{false, "bouc " + d + ": " + step}; };
  // b*a_* = ã_* b̃^*: the pullback square for spans
  if (normalize_word(w0) != normalize_word(w1)) return fail("pullback step fails for spans");
  // p_*p^* = id_P: the deflativity special case, the only biset-only input
  if (!biset_iso(word_biset(pp), identity_biset(group_groupoid(P.group)))) return fail("deflativity for p fails");
  Biset b1 = word_biset(w1), b2 = word_biset(w2);
  if (!biset_iso(b1, b2)) return fail("inserting p_*p^* changes the biset");
  // (b̃p)^* = b̄^* and (ãp)_* = ā_* hold already for spans
  if (fold_compose(SpanWord{start, {make_letter(K::Infl, P.pr1), make_letter(K::Infl, p)}}) !=
      fold_compose(SpanWord{start, {make_letter(K::Infl, qM.proj)}})) {
    return fail("(b̃p)^* differs from b̄^*");
  }
  if (fold_compose(SpanWord{G, {make_letter(K::Defl, p), make_letter(K::Defl, P.pr2)}}) !=
      fold_compose(SpanWord{G, {make_letter(K::Defl, qN.proj)}})) {
    return fail("(ãp)_* differs from ā_*");
  }
  if (!biset_iso(b2, word_biset(w3))) return fail("functoriality step fails for bisets");
  if (!biset_iso(word_biset(w0), word_biset(w3))) return fail("end-to-end comparison fails");
  return {true, {}};
}

DoubleBurnsideTable double_burnside_table(GroupPtr const& G, int bound) {
  if (G->order() > bound) {
    throw BoundExceeded("double Burnside table: |G| = " + std::to_string(G->order()) + " exceeds bound " +
                        std::to_string(bound));
  }
  auto GG = direct_product(G, G);
  DoubleBurnsideTable t{G, {}, {}};
  auto classes = subgroup_classes(*GG);
  std::map<Subgroup, int> index;
  std::vector<Biset> reps;
  for (auto const& L : classes) {
    index[L] = static_cast<int>(t.basis.size());
    t.basis.push_back(five_form_of(G, G, L));
    reps.push_back(biset_from_subgroup(G, G, L));
  }
  int const n = static_cast<int>(classes.size());
  t.product.assign(n, std::vector<LinComb<int>>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      auto cls = biset_class(tensor(reps[i], reps[j]));
      for (auto const& [k, c] : cls.terms.terms()) {
        t.product[i][j].add(index.at(k.L), c);
      }
    }
  }
  return t;
}

}  // namespace mackey
