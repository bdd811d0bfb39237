#include "mackey/iso_comma.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace mackey {

namespace {

bool same(GroupoidPtr const& a, GroupoidPtr const& b) { return a == b || *a == *b; }

struct IsoCommaIndex {
  int ny = 0;
  std::vector<int> base;                 // (x*ny + y) → first object with these coordinates
  std::vector<std::vector<int>> homs;    // (x*ny + y) → hom_Z(u(x), v(y))
  std::vector<int> arrow_base;           // object → first arrow id
  std::vector<int> obj_y;                // object → y

  int object(int x, int y, int gamma) const {
    auto const& h = homs[static_cast<std::size_t>(x) * ny + y];
    auto it = std::lower_bound(h.begin(), h.end(), gamma);
    return base[static_cast<std::size_t>(x) * ny + y] + static_cast<int>(it - h.begin());
  }
};

IsoCommaResult build_iso_comma(GroupoidFunctor const& u, GroupoidFunctor const& v, IsoCommaIndex& idx) {
  if (!same(u.target, v.target)) throw TypeError("iso_comma: functors have different targets");
  auto const& X = *u.source;
  auto const& Y = *v.source;
  auto const& Z = *u.target;
  idx.ny = Y.num_objects();
  std::size_t cells = static_cast<std::size_t>(X.num_objects()) * Y.num_objects();
  idx.base.assign(cells, 0);
  idx.homs.assign(cells, {});
  IsoCommaResult out;
  for (int x = 0; x < X.num_objects(); ++x) {
    for (int y = 0; y < Y.num_objects(); ++y) {
      std::size_t c = static_cast<std::size_t>(x) * idx.ny + y;
      idx.base[c] = static_cast<int>(out.triples.size());
      idx.homs[c] = Z.hom(u.obj(x), v.obj(y));
      for (int g : idx.homs[c]) {
        out.triples.emplace_back(x, y, g);
        idx.obj_y.push_back(y);
      }
    }
  }
  int const n = static_cast<int>(out.triples.size());
  std::vector<FiniteGroupoid::ArrowData> arrows;
  std::vector<int> arr_alpha, arr_beta;
  idx.arrow_base.assign(n, 0);
  for (int o = 0; o < n; ++o) {
    auto [x, y, g] = out.triples[o];
    idx.arrow_base[o] = static_cast<int>(arrows.size());
    for (int a : X.out_arrows(x)) {
      int ua_inv = Z.inverse(u.arr(a));
      for (int b : Y.out_arrows(y)) {
        int g2 = Z.compose(Z.compose(v.arr(b), g), ua_inv);
        arrows.push_back({o, idx.object(X.tgt(a), Y.tgt(b), g2)});
        arr_alpha.push_back(a);
        arr_beta.push_back(b);
      }
    }
  }
  auto arrow_of = [&](int o, int a, int b) {
    return idx.arrow_base[o] + X.out_position(a) * static_cast<int>(Y.out_arrows(idx.obj_y[o]).size()) +
           Y.out_position(b);
  };
  std::vector<int> ids(n);
  for (int o = 0; o < n; ++o) {
    auto [x, y, g] = out.triples[o];
    ids[o] = arrow_of(o, X.identity(x), Y.identity(y));
  }
  std::vector<int> arr_src(arrows.size());
  for (std::size_t i = 0; i < arrows.size(); ++i) arr_src[i] = arrows[i].src;
  auto apex = share(FiniteGroupoid::build(n, std::move(arrows), std::move(ids), [&](int g, int f) {
    return arrow_of(arr_src[f], X.compose(arr_alpha[g], arr_alpha[f]), Y.compose(arr_beta[g], arr_beta[f]));
  }));
  std::vector<int> pobj(n), qobj(n), comps(n);
  for (int o = 0; o < n; ++o) {
    auto [x, y, g] = out.triples[o];
    pobj[o] = x;
    qobj[o] = y;
    comps[o] = g;
  }
  out.apex = apex;
  out.proj_left = GroupoidFunctor{apex, u.source, std::move(pobj), std::move(arr_alpha)};
  out.proj_right = GroupoidFunctor{apex, v.source, std::move(qobj), std::move(arr_beta)};
  out.two_cell = NatTransformation{compose(u, out.proj_left), compose(v, out.proj_right), std::move(comps)};
  return out;
}

}  // namespace

IsoCommaResult iso_comma(GroupoidFunctor const& u, GroupoidFunctor const& v) {
  IsoCommaIndex idx;
  return build_iso_comma(u, v, idx);
}

namespace {

void check_square(Square const& sq) {
  if (!same(sq.p.source, sq.q.source)) throw TypeError("square: p and q have different sources");
  if (!same(sq.p.target, sq.u.source) || !same(sq.q.target, sq.v.source)) throw TypeError("square: boundary does not compose");
  if (!same(sq.u.target, sq.v.target)) throw TypeError("square: u and v have different targets");
  auto up = compose(sq.u, sq.p);
  auto vq = compose(sq.v, sq.q);
  if (!same_functor(sq.gamma.from, up) || !same_functor(sq.gamma.to, vq)) {
    throw TypeError("square: 2-cell does not run from u∘p to v∘q");
  }
  check_nat(sq.gamma);
}

GroupoidFunctor comparison(Square const& sq, IsoCommaResult const& ic, IsoCommaIndex const& idx) {
  auto const& P = *sq.p.source;
  auto const& Y = *sq.v.source;
  auto const& X = *sq.u.source;
  GroupoidFunctor w{sq.p.source, ic.apex, std::vector<int>(P.num_objects()), std::vector<int>(P.num_arrows())};
  for (int s = 0; s < P.num_objects(); ++s) w.object_map[s] = idx.object(sq.p.obj(s), sq.q.obj(s), sq.gamma.components[s]);
  for (int f = 0; f < P.num_arrows(); ++f) {
    int o = w.object_map[P.src(f)];
    int y = sq.q.obj(P.src(f));
    w.arrow_map[f] = idx.arrow_base[o] + X.out_position(sq.p.arr(f)) * static_cast<int>(Y.out_arrows(y).size()) +
                     Y.out_position(sq.q.arr(f));
  }
  return w;
}

}  // namespace

std::pair<IsoCommaResult, GroupoidFunctor> comparison_functor(Square const& sq) {
  check_square(sq);
  IsoCommaIndex idx;
  auto ic = build_iso_comma(sq.u, sq.v, idx);
  auto w = comparison(sq, ic, idx);
  return {std::move(ic), std::move(w)};
}

bool is_mackey_square(Square const& sq) {
  check_square(sq);
  IsoCommaIndex idx;
  auto ic = build_iso_comma(sq.u, sq.v, idx);
  auto w = comparison(sq, ic, idx);
  check_functor(w);
  return is_equivalence(w);
}

StrictPullback strict_pullback(GroupoidFunctor const& u, GroupoidFunctor const& v) {
  if (!same(u.target, v.target)) throw TypeError("strict_pullback: functors have different targets");
  auto const& X = *u.source;
  auto const& Y = *v.source;
  std::vector<std::pair<int, int>> objs;
  std::map<std::pair<int, int>, int> obj_id;
  for (int x = 0; x < X.num_objects(); ++x) {
    for (int y = 0; y < Y.num_objects(); ++y) {
      if (u.obj(x) == v.obj(y)) {
        obj_id.emplace(std::make_pair(x, y), static_cast<int>(objs.size()));
        objs.emplace_back(x, y);
      }
    }
  }
  std::vector<FiniteGroupoid::ArrowData> arrows;
  std::vector<int> pa, qa;
  std::unordered_map<long long, int> arr_id;
  long long const my = Y.num_arrows();
  for (std::size_t o = 0; o < objs.size(); ++o) {
    auto [x, y] = objs[o];
    for (int a : X.out_arrows(x)) {
      for (int b : Y.out_arrows(y)) {
        if (u.arr(a) != v.arr(b)) continue;
        arr_id.emplace(a * my + b, static_cast<int>(arrows.size()));
        arrows.push_back({static_cast<int>(o), obj_id.at({X.tgt(a), Y.tgt(b)})});
        pa.push_back(a);
        qa.push_back(b);
      }
    }
  }
  std::vector<int> ids;
  for (auto [x, y] : objs) ids.push_back(arr_id.at(X.identity(x) * my + Y.identity(y)));
  auto apex = share(FiniteGroupoid::build(static_cast<int>(objs.size()), std::move(arrows), std::move(ids),
                                          [&](int g, int f) {
                                            return arr_id.at(X.compose(pa[g], pa[f]) * my + Y.compose(qa[g], qa[f]));
                                          }));
  std::vector<int> po, qo;
  for (auto [x, y] : objs) {
    po.push_back(x);
    qo.push_back(y);
  }
  return StrictPullback{apex, GroupoidFunctor{apex, u.source, std::move(po), std::move(pa)},
                        GroupoidFunctor{apex, v.source, std::move(qo), std::move(qa)}};
}

Square pullback_square(StrictPullback const& pb, GroupoidFunctor const& u, GroupoidFunctor const& v) {
  auto up = compose(u, pb.p);
  auto vq = compose(v, pb.q);
  NatTransformation id = identity_nat(up);
  id.to = vq;
  return Square{pb.p, pb.q, std::move(id), u, v};
}

Square iso_comma_square(IsoCommaResult const& ic, GroupoidFunctor const& u, GroupoidFunctor const& v) {
  return Square{ic.proj_left, ic.proj_right, ic.two_cell, u, v};
}

// ---------------------------------------------------------------------------

namespace {

struct TreeData {
  std::vector<int> comp;                 // object → component
  std::vector<int> root;                 // component → least object
  std::vector<int> tree;                 // object → arrow root → object
  std::vector<std::vector<int>> objects; // component → objects
  std::vector<std::vector<int>> arrows;  // component → arrows
};

TreeData spanning_trees(FiniteGroupoid const& A) {
  TreeData t;
  t.comp = component_index(A);
  int k = t.comp.empty() ? 0 : *std::max_element(t.comp.begin(), t.comp.end()) + 1;
  t.root.assign(k, -1);
  t.tree.assign(A.num_objects(), -1);
  t.objects.assign(k, {});
  t.arrows.assign(k, {});
  for (int x = 0; x < A.num_objects(); ++x) {
    t.objects[t.comp[x]].push_back(x);
    if (t.root[t.comp[x]] >= 0) continue;
    t.root[t.comp[x]] = x;
    t.tree[x] = A.identity(x);
    std::vector<int> queue{x};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      int y = queue[i];
      for (int a : A.out_arrows(y)) {
        int z = A.tgt(a);
        if (t.tree[z] < 0) {
          t.tree[z] = A.compose(a, t.tree[y]);
          queue.push_back(z);
        }
      }
    }
  }
  for (int a = 0; a < A.num_arrows(); ++a) t.arrows[t.comp[A.src(a)]].push_back(a);
  return t;
}

void check_parallel(GroupoidFunctor const& F1, GroupoidFunctor const& F2) {
  if (!same(F1.source, F2.source) || !same(F1.target, F2.target)) throw TypeError("functors are not parallel");
}

// All component choices at the roots of component c making the family natural.
std::vector<std::vector<int>> component_solutions(GroupoidFunctor const& F1, GroupoidFunctor const& F2,
                                                  TreeData const& t, int c, Budget& budget, bool first_only) {
  auto const& A = *F1.source;
  auto const& B = *F1.target;
  int r = t.root[c];
  std::vector<std::vector<int>> sols;
  std::vector<int> theta(A.num_objects(), -1);
  for (int cand : B.hom(F1.obj(r), F2.obj(r))) {
    budget.spend();
    for (int y : t.objects[c]) {
      int ty = t.tree[y];
      theta[y] = B.compose(B.compose(F2.arr(ty), cand), B.inverse(F1.arr(ty)));
    }
    bool ok = true;
    for (int f : t.arrows[c]) {
      if (B.compose(F2.arr(f), theta[A.src(f)]) != B.compose(theta[A.tgt(f)], F1.arr(f))) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    std::vector<int> s;
    for (int y : t.objects[c]) s.push_back(theta[y]);
    sols.push_back(std::move(s));
    if (first_only) break;
  }
  return sols;
}

}  // namespace

std::optional<NatTransformation> functor_iso(GroupoidFunctor const& F1, GroupoidFunctor const& F2, Budget& budget) {
  check_parallel(F1, F2);
  auto t = spanning_trees(*F1.source);
  std::vector<int> comps(F1.source->num_objects(), -1);
  for (std::size_t c = 0; c < t.root.size(); ++c) {
    auto sols = component_solutions(F1, F2, t, static_cast<int>(c), budget, true);
    if (sols.empty()) return std::nullopt;
    for (std::size_t i = 0; i < t.objects[c].size(); ++i) comps[t.objects[c][i]] = sols[0][i];
  }
  return NatTransformation{F1, F2, std::move(comps)};
}

std::optional<NatTransformation> functor_iso(GroupoidFunctor const& F1, GroupoidFunctor const& F2) {
  Budget b;
  return functor_iso(F1, F2, b);
}

std::vector<NatTransformation> enumerate_nat_transfs(GroupoidFunctor const& F1, GroupoidFunctor const& F2,
                                                   Budget& budget) {
  check_parallel(F1, F2);
  auto t = spanning_trees(*F1.source);
  std::vector<std::vector<std::vector<int>>> per;
  for (std::size_t c = 0; c < t.root.size(); ++c) {
    per.push_back(component_solutions(F1, F2, t, static_cast<int>(c), budget, false));
    if (per.back().empty()) return {};
  }
  std::vector<NatTransformation> out;
  std::vector<std::size_t> idx(per.size(), 0);
  while (true) {
    budget.spend();
    std::vector<int> comps(F1.source->num_objects(), -1);
    for (std::size_t c = 0; c < per.size(); ++c) {
      for (std::size_t i = 0; i < t.objects[c].size(); ++i) comps[t.objects[c][i]] = per[c][idx[c]][i];
    }
    out.push_back(NatTransformation{F1, F2, std::move(comps)});
    std::size_t c = per.size();
    bool done = true;
    while (c > 0) {
      --c;
      if (++idx[c] < per[c].size()) {
        done = false;
        break;
      }
      idx[c] = 0;
    }
    if (done) break;
  }
  return out;
}

std::vector<NatTransformation> enumerate_nat_transfs(GroupoidFunctor const& F1, GroupoidFunctor const& F2) {
  Budget b;
  return enumerate_nat_transfs(F1, F2, b);
}

std::vector<GroupoidFunctor> enumerate_functors(GroupoidPtr const& A, GroupoidPtr const& B, Budget& budget) {
  auto t = spanning_trees(*A);
  // per component: list of (object images of its objects, arrow images of its arrows)
  std::vector<std::vector<std::pair<std::vector<int>, std::vector<int>>>> per;
  for (std::size_t c = 0; c < t.root.size(); ++c) {
    int r = t.root[c];
    auto vg = A->vertex_group(r);
    std::vector<std::pair<std::vector<int>, std::vector<int>>> choices;
    std::vector<int> others;
    for (int y : t.objects[c]) {
      if (y != r) others.push_back(y);
    }
    for (int b0 = 0; b0 < B->num_objects(); ++b0) {
      auto vb = B->vertex_group(b0);
      auto homs = all_homs(vg.group, vb.group, budget);
      auto const& outs = B->out_arrows(b0);
      for (auto const& phi : homs) {
        std::vector<std::size_t> pick(others.size(), 0);
        while (true) {
          budget.spend();
          std::vector<int> tree_img(A->num_objects(), -1);
          tree_img[r] = B->identity(b0);
          for (std::size_t i = 0; i < others.size(); ++i) tree_img[others[i]] = outs[pick[i]];
          std::vector<int> oimg, aimg;
          for (int y : t.objects[c]) oimg.push_back(B->tgt(tree_img[y]));
          for (int f : t.arrows[c]) {
            int y = A->src(f), z = A->tgt(f);
            int loop = A->compose(A->inverse(t.tree[z]), A->compose(f, t.tree[y]));
            int img = vb.arrows[phi(vg.element_of[loop])];
            aimg.push_back(B->compose(tree_img[z], B->compose(img, B->inverse(tree_img[y]))));
          }
          choices.emplace_back(std::move(oimg), std::move(aimg));
          std::size_t i = others.size();
          bool done = true;
          while (i > 0) {
            --i;
            if (++pick[i] < outs.size()) {
              done = false;
              break;
            }
            pick[i] = 0;
          }
          if (done) break;
        }
      }
    }
    if (choices.empty()) return {};
    per.push_back(std::move(choices));
  }
  std::vector<GroupoidFunctor> out;
  std::vector<std::size_t> idx(per.size(), 0);
  while (true) {
    budget.spend();
    GroupoidFunctor F{A, B, std::vector<int>(A->num_objects()), std::vector<int>(A->num_arrows())};
    for (std::size_t c = 0; c < per.size(); ++c) {
      auto const& [oimg, aimg] = per[c][idx[c]];
      for (std::size_t i = 0; i < t.objects[c].size(); ++i) F.object_map[t.objects[c][i]] = oimg[i];
      for (std::size_t i = 0; i < t.arrows[c].size(); ++i) F.arrow_map[t.arrows[c][i]] = aimg[i];
    }
    out.push_back(std::move(F));
    std::size_t c = per.size();
    bool done = true;
    while (c > 0) {
      --c;
      if (++idx[c] < per[c].size()) {
        done = false;
        break;
      }
      idx[c] = 0;
    }
    if (done) break;
  }
  return out;
}

std::vector<GroupoidFunctor> enumerate_functors(GroupoidPtr const& A, GroupoidPtr const& B) {
  Budget b;
  return enumerate_functors(A, B, b);
}

}  // namespace mackey
