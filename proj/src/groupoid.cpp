#include "mackey/groupoid.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace mackey {

namespace {

bool same(GroupoidPtr const& a, GroupoidPtr const& b) { return a == b || *a == *b; }

}  // namespace

FiniteGroupoid FiniteGroupoid::build(int num_objects, std::vector<ArrowData> arrows, std::vector<int> identities,
                                     ComposeFn const& compose) {
  FiniteGroupoid G;
  G.n_ = num_objects;
  G.arrows_ = std::move(arrows);
  G.identity_ = std::move(identities);
  int const m = G.num_arrows();
  if (static_cast<int>(G.identity_.size()) != num_objects) throw ParseError("groupoid: identity map has wrong size");
  G.out_.assign(num_objects, {});
  G.in_.assign(num_objects, {});
  G.out_pos_.assign(m, 0);
  G.in_pos_.assign(m, 0);
  for (int a = 0; a < m; ++a) {
    auto [s, t] = G.arrows_[a];
    if (s < 0 || s >= num_objects || t < 0 || t >= num_objects) throw ParseError("groupoid: arrow endpoint out of range");
    G.out_pos_[a] = static_cast<int>(G.out_[s].size());
    G.out_[s].push_back(a);
    G.in_pos_[a] = static_cast<int>(G.in_[t].size());
    G.in_[t].push_back(a);
  }
  for (int x = 0; x < num_objects; ++x) {
    int e = G.identity_[x];
    if (e < 0 || e >= m || G.arrows_[e].src != x || G.arrows_[e].tgt != x) {
      throw ParseError("groupoid: identity of object " + std::to_string(x) + " is not an endomorphism of it");
    }
  }
  G.offset_.assign(m, 0);
  std::size_t total = 0;
  for (int g = 0; g < m; ++g) {
    G.offset_[g] = total;
    total += G.in_[G.arrows_[g].src].size();
  }
  G.table_.assign(total, -1);
  for (int g = 0; g < m; ++g) {
    auto const& ins = G.in_[G.arrows_[g].src];
    for (std::size_t i = 0; i < ins.size(); ++i) {
      int r = compose(g, ins[i]);
      if (r < 0 || r >= m) throw ParseError("groupoid: composite out of range");
      G.table_[G.offset_[g] + i] = r;
    }
  }
  G.inverse_.assign(m, -1);
  for (int a = 0; a < m; ++a) {
    auto [s, t] = G.arrows_[a];
    for (int h : G.out_[t]) {
      if (G.arrows_[h].tgt == s && G.compose(h, a) == G.identity_[s]) {
        G.inverse_[a] = h;
        break;
      }
    }
  }
  return G;
}

FiniteGroupoid FiniteGroupoid::from_group(Group const& G) {
  std::vector<ArrowData> arrows(G.order(), ArrowData{0, 0});
  return build(1, std::move(arrows), {0}, [&G](int g, int f) { return G.mul(g, f); });
}

GroupoidPtr group_groupoid(GroupPtr const& G) { return share(FiniteGroupoid::from_group(*G)); }

std::vector<int> FiniteGroupoid::hom(int x, int y) const {
  std::vector<int> out;
  for (int a : out_[x]) {
    if (arrows_[a].tgt == y) out.push_back(a);
  }
  return out;
}

void FiniteGroupoid::check_axioms() const {
  int const m = num_arrows();
  for (int f = 0; f < m; ++f) {
    int s = src(f), t = tgt(f);
    if (compose(identity(t), f) != f || compose(f, identity(s)) != f) {
      throw ParseError("groupoid: identity law fails at arrow " + std::to_string(f));
    }
    if (inverse_[f] < 0 || compose(f, inverse_[f]) != identity(t)) {
      throw ParseError("groupoid: arrow " + std::to_string(f) + " has no two-sided inverse");
    }
    for (int g : out_[t]) {
      int gf = compose(g, f);
      if (src(gf) != s || tgt(gf) != tgt(g)) throw ParseError("groupoid: composite has wrong endpoints");
      for (int h : out_[tgt(g)]) {
        if (compose(h, gf) != compose(compose(h, g), f)) throw ParseError("groupoid: composition is not associative");
      }
    }
  }
}

FiniteGroupoid::VertexGroup FiniteGroupoid::vertex_group(int x) const {
  VertexGroup vg;
  vg.arrows.push_back(identity(x));
  for (int a : hom(x, x)) {
    if (a != identity(x)) vg.arrows.push_back(a);
  }
  int const k = static_cast<int>(vg.arrows.size());
  vg.element_of.assign(num_arrows(), -1);
  for (int i = 0; i < k; ++i) vg.element_of[vg.arrows[i]] = i;
  std::vector<int> t(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) t[static_cast<std::size_t>(i) * k + j] = vg.element_of[compose(vg.arrows[i], vg.arrows[j])];
  }
  vg.group = share(Group::unchecked(k, std::move(t)));
  return vg;
}

bool FiniteGroupoid::operator==(FiniteGroupoid const& o) const {
  if (n_ != o.n_ || arrows_.size() != o.arrows_.size() || identity_ != o.identity_ || table_ != o.table_) return false;
  for (std::size_t a = 0; a < arrows_.size(); ++a) {
    if (arrows_[a].src != o.arrows_[a].src || arrows_[a].tgt != o.arrows_[a].tgt) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

void check_functor(GroupoidFunctor const& F) {
  auto const& A = *F.source;
  auto const& B = *F.target;
  if (static_cast<int>(F.object_map.size()) != A.num_objects() || static_cast<int>(F.arrow_map.size()) != A.num_arrows()) {
    throw TypeError("functor: map sizes do not match the source");
  }
  for (int y : F.object_map) {
    if (y < 0 || y >= B.num_objects()) throw TypeError("functor: object image out of range");
  }
  for (int a = 0; a < A.num_arrows(); ++a) {
    int b = F.arrow_map[a];
    if (b < 0 || b >= B.num_arrows()) throw TypeError("functor: arrow image out of range");
    if (B.src(b) != F.obj(A.src(a)) || B.tgt(b) != F.obj(A.tgt(a))) throw TypeError("functor: endpoints not preserved");
  }
  for (int x = 0; x < A.num_objects(); ++x) {
    if (F.arr(A.identity(x)) != B.identity(F.obj(x))) throw TypeError("functor: identities not preserved");
  }
  for (int f = 0; f < A.num_arrows(); ++f) {
    for (int g : A.out_arrows(A.tgt(f))) {
      if (F.arr(A.compose(g, f)) != B.compose(F.arr(g), F.arr(f))) throw TypeError("functor: composition not preserved");
    }
  }
}

GroupoidFunctor make_functor(GroupoidPtr source, GroupoidPtr target, std::vector<int> object_map,
                             std::vector<int> arrow_map) {
  GroupoidFunctor F{std::move(source), std::move(target), std::move(object_map), std::move(arrow_map)};
  check_functor(F);
  return F;
}

GroupoidFunctor identity_functor(GroupoidPtr const& G) {
  std::vector<int> o(G->num_objects()), a(G->num_arrows());
  std::iota(o.begin(), o.end(), 0);
  std::iota(a.begin(), a.end(), 0);
  return GroupoidFunctor{G, G, std::move(o), std::move(a)};
}

GroupoidFunctor compose(GroupoidFunctor const& G, GroupoidFunctor const& F) {
  if (!same(F.target, G.source)) throw TypeError("functors are not composable");
  GroupoidFunctor H{F.source, G.target, F.object_map, F.arrow_map};
  for (auto& x : H.object_map) x = G.obj(x);
  for (auto& a : H.arrow_map) a = G.arr(a);
  return H;
}

GroupoidFunctor functor_from_hom(Hom const& f, GroupoidPtr src, GroupoidPtr tgt) {
  return GroupoidFunctor{std::move(src), std::move(tgt), {0}, f.map};
}

GroupoidFunctor functor_from_hom(Hom const& f) {
  return functor_from_hom(f, group_groupoid(f.src), group_groupoid(f.tgt));
}

bool same_functor(GroupoidFunctor const& F, GroupoidFunctor const& G) {
  return same(F.source, G.source) && same(F.target, G.target) && F.object_map == G.object_map &&
         F.arrow_map == G.arrow_map;
}

bool is_faithful(GroupoidFunctor const& F) {
  auto const& A = *F.source;
  std::vector<std::tuple<int, int, int>> keys;
  keys.reserve(A.num_arrows());
  for (int a = 0; a < A.num_arrows(); ++a) keys.emplace_back(A.src(a), A.tgt(a), F.arr(a));
  std::sort(keys.begin(), keys.end());
  return std::adjacent_find(keys.begin(), keys.end()) == keys.end();
}

namespace {

int aut_size(FiniteGroupoid const& G, int x) {
  int k = 0;
  for (int a : G.out_arrows(x)) k += (G.tgt(a) == x);
  return k;
}

}  // namespace

bool is_full(GroupoidFunctor const& F) {
  auto const& A = *F.source;
  auto const& B = *F.target;
  auto ca = component_index(A);
  auto cb = component_index(B);
  std::vector<int> autb(B.num_objects());
  for (int y = 0; y < B.num_objects(); ++y) autb[y] = aut_size(B, y);
  for (int x = 0; x < A.num_objects(); ++x) {
    // distinct images of arrows x → z, grouped by z
    std::vector<std::pair<int, int>> imgs;
    for (int f : A.out_arrows(x)) imgs.emplace_back(A.tgt(f), F.arr(f));
    std::sort(imgs.begin(), imgs.end());
    imgs.erase(std::unique(imgs.begin(), imgs.end()), imgs.end());
    std::vector<int> count(A.num_objects(), 0);
    for (auto const& [z, b] : imgs) ++count[z];
    for (int z = 0; z < A.num_objects(); ++z) {
      int want = cb[F.obj(x)] == cb[F.obj(z)] ? autb[F.obj(x)] : 0;
      if (ca[x] != ca[z]) {
        if (want != 0) return false;
      } else if (count[z] != want) {
        return false;
      }
    }
  }
  return true;
}

bool is_essentially_surjective(GroupoidFunctor const& F) {
  auto cb = component_index(*F.target);
  std::vector<char> hit(num_components(*F.target), 0);
  for (int y : F.object_map) hit[cb[y]] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

bool is_equivalence(GroupoidFunctor const& F) {
  return is_faithful(F) && is_full(F) && is_essentially_surjective(F);
}

// ---------------------------------------------------------------------------

void check_nat(NatTransformation const& t) {
  if (!same(t.from.source, t.to.source) || !same(t.from.target, t.to.target)) {
    throw TypeError("natural transformation between non-parallel functors");
  }
  auto const& A = *t.from.source;
  auto const& B = *t.from.target;
  if (static_cast<int>(t.components.size()) != A.num_objects()) throw TypeError("natural transformation: wrong size");
  for (int x = 0; x < A.num_objects(); ++x) {
    int c = t.components[x];
    if (c < 0 || c >= B.num_arrows() || B.src(c) != t.from.obj(x) || B.tgt(c) != t.to.obj(x)) {
      throw TypeError("natural transformation: component has wrong endpoints");
    }
  }
  for (int f = 0; f < A.num_arrows(); ++f) {
    int x = A.src(f), y = A.tgt(f);
    if (B.compose(t.to.arr(f), t.components[x]) != B.compose(t.components[y], t.from.arr(f))) {
      throw TypeError("natural transformation: naturality fails");
    }
  }
}

NatTransformation identity_nat(GroupoidFunctor const& F) {
  std::vector<int> c(F.source->num_objects());
  for (int x = 0; x < F.source->num_objects(); ++x) c[x] = F.target->identity(F.obj(x));
  return NatTransformation{F, F, std::move(c)};
}

NatTransformation vertical(NatTransformation const& second, NatTransformation const& first) {
  if (first.to.object_map != second.from.object_map || first.to.arrow_map != second.from.arrow_map) {
    throw TypeError("vertical composite of non-matching transformations");
  }
  std::vector<int> c(first.components.size());
  for (std::size_t x = 0; x < c.size(); ++x) c[x] = first.from.target->compose(second.components[x], first.components[x]);
  return NatTransformation{first.from, second.to, std::move(c)};
}

NatTransformation inverse(NatTransformation const& t) {
  std::vector<int> c(t.components.size());
  for (std::size_t x = 0; x < c.size(); ++x) c[x] = t.from.target->inverse(t.components[x]);
  return NatTransformation{t.to, t.from, std::move(c)};
}

NatTransformation whisker_left(GroupoidFunctor const& H, NatTransformation const& t) {
  std::vector<int> c(t.components.size());
  for (std::size_t x = 0; x < c.size(); ++x) c[x] = H.arr(t.components[x]);
  return NatTransformation{compose(H, t.from), compose(H, t.to), std::move(c)};
}

NatTransformation whisker_right(NatTransformation const& t, GroupoidFunctor const& K) {
  std::vector<int> c(K.source->num_objects());
  for (int x = 0; x < K.source->num_objects(); ++x) c[x] = t.components[K.obj(x)];
  return NatTransformation{compose(t.from, K), compose(t.to, K), std::move(c)};
}

// ---------------------------------------------------------------------------

DisjointUnion disjoint_union(std::vector<GroupoidPtr> const& parts) {
  std::vector<int> obj_off, arr_off;
  int no = 0, na = 0;
  for (auto const& p : parts) {
    obj_off.push_back(no);
    arr_off.push_back(na);
    no += p->num_objects();
    na += p->num_arrows();
  }
  std::vector<FiniteGroupoid::ArrowData> arrows;
  std::vector<int> ids;
  std::vector<int> part_of(na);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    auto const& P = *parts[i];
    for (int a = 0; a < P.num_arrows(); ++a) {
      arrows.push_back({P.src(a) + obj_off[i], P.tgt(a) + obj_off[i]});
      part_of[arr_off[i] + a] = static_cast<int>(i);
    }
    for (int x = 0; x < P.num_objects(); ++x) ids.push_back(P.identity(x) + arr_off[i]);
  }
  auto U = share(FiniteGroupoid::build(no, std::move(arrows), std::move(ids), [&](int g, int f) {
    int i = part_of[g];
    return parts[i]->compose(g - arr_off[i], f - arr_off[i]) + arr_off[i];
  }));
  DisjointUnion out{U, {}};
  for (std::size_t i = 0; i < parts.size(); ++i) {
    std::vector<int> o(parts[i]->num_objects()), a(parts[i]->num_arrows());
    std::iota(o.begin(), o.end(), obj_off[i]);
    std::iota(a.begin(), a.end(), arr_off[i]);
    out.inclusions.push_back(GroupoidFunctor{parts[i], U, std::move(o), std::move(a)});
  }
  return out;
}

std::vector<int> component_index(FiniteGroupoid const& G) {
  std::vector<int> comp(G.num_objects(), -1);
  int next = 0;
  for (int x = 0; x < G.num_objects(); ++x) {
    if (comp[x] >= 0) continue;
    comp[x] = next;
    std::vector<int> stack{x};
    while (!stack.empty()) {
      int y = stack.back();
      stack.pop_back();
      for (int a : G.out_arrows(y)) {
        int z = G.tgt(a);
        if (comp[z] < 0) {
          comp[z] = next;
          stack.push_back(z);
        }
      }
    }
    ++next;
  }
  return comp;
}

int num_components(FiniteGroupoid const& G) {
  auto c = component_index(G);
  return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

Component full_subgroupoid(GroupoidPtr const& G, std::vector<int> const& objects) {
  std::vector<int> pos(G->num_objects(), -1);
  for (std::size_t i = 0; i < objects.size(); ++i) pos[objects[i]] = static_cast<int>(i);
  std::vector<int> arrow_ids;
  std::vector<int> local(G->num_arrows(), -1);
  for (int a = 0; a < G->num_arrows(); ++a) {
    if (pos[G->src(a)] >= 0 && pos[G->tgt(a)] >= 0) {
      local[a] = static_cast<int>(arrow_ids.size());
      arrow_ids.push_back(a);
    }
  }
  std::vector<FiniteGroupoid::ArrowData> arrows;
  for (int a : arrow_ids) arrows.push_back({pos[G->src(a)], pos[G->tgt(a)]});
  std::vector<int> ids;
  for (int x : objects) ids.push_back(local[G->identity(x)]);
  auto S = share(FiniteGroupoid::build(static_cast<int>(objects.size()), std::move(arrows), std::move(ids),
                                       [&](int g, int f) { return local[G->compose(arrow_ids[g], arrow_ids[f])]; }));
  return Component{S, GroupoidFunctor{S, G, objects, arrow_ids}};
}

std::vector<Component> connected_components(GroupoidPtr const& G) {
  auto comp = component_index(*G);
  int k = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<std::vector<int>> objs(k);
  for (int x = 0; x < G->num_objects(); ++x) objs[comp[x]].push_back(x);
  std::vector<Component> out;
  for (auto const& o : objs) out.push_back(full_subgroupoid(G, o));
  return out;
}

Skeleton skeleton(GroupoidPtr const& G) {
  auto comp = component_index(*G);
  Skeleton sk;
  std::vector<FiniteGroupoid::VertexGroup> vgs;
  for (int x = 0; x < G->num_objects(); ++x) {
    if (static_cast<int>(sk.representatives.size()) == comp[x]) {
      sk.representatives.push_back(x);
      vgs.push_back(G->vertex_group(x));
      sk.groups.push_back(group_groupoid(vgs.back().group));
    }
  }
  auto U = disjoint_union(sk.groups);
  std::vector<int> o, a;
  for (std::size_t i = 0; i < vgs.size(); ++i) {
    o.push_back(sk.representatives[i]);
    for (int arrow : vgs[i].arrows) a.push_back(arrow);
  }
  sk.inclusion = GroupoidFunctor{U.groupoid, G, std::move(o), std::move(a)};
  return sk;
}

GroupoidFunctor coproduct(std::vector<GroupoidFunctor> const& parts) {
  std::vector<GroupoidPtr> srcs, tgts;
  for (auto const& F : parts) {
    srcs.push_back(F.source);
    tgts.push_back(F.target);
  }
  auto S = disjoint_union(srcs);
  auto T = disjoint_union(tgts);
  GroupoidFunctor out{S.groupoid, T.groupoid, {}, {}};
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (int y : parts[i].object_map) out.object_map.push_back(T.inclusions[i].obj(y));
    for (int b : parts[i].arrow_map) out.arrow_map.push_back(T.inclusions[i].arr(b));
  }
  return out;
}

GroupoidFunctor copair(std::vector<GroupoidFunctor> const& parts) {
  if (parts.empty()) throw TypeError("copair needs at least one functor to fix the target");
  std::vector<GroupoidPtr> srcs;
  for (auto const& F : parts) {
    if (!same(F.target, parts.front().target)) throw TypeError("copair: functors have different targets");
    srcs.push_back(F.source);
  }
  auto S = disjoint_union(srcs);
  GroupoidFunctor out{S.groupoid, parts.front().target, {}, {}};
  for (auto const& F : parts) {
    out.object_map.insert(out.object_map.end(), F.object_map.begin(), F.object_map.end());
    out.arrow_map.insert(out.arrow_map.end(), F.arrow_map.begin(), F.arrow_map.end());
  }
  return out;
}

}  // namespace mackey
