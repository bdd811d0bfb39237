#include "mackey/gsets.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace mackey {

namespace {

void require_same_group(GSet const& X, GSet const& Y, char const* what) {
  if (!(*X.group == *Y.group)) throw TypeError(std::string(what) + ": G-sets over different groups");
}

bool same_gset(GSet const& X, GSet const& Y) { return *X.group == *Y.group && X.action == Y.action; }

template <class F>
GSet make_gset(GroupPtr const& G, int n, F const& act) {
  GSet X{G, n, std::vector<int>(static_cast<std::size_t>(G->order()) * n)};
  for (Element g = 0; g < G->order(); ++g) {
    for (int x = 0; x < n; ++x) X.action[static_cast<std::size_t>(g) * n + x] = act(g, x);
  }
  return X;
}

/// Enumerates the cartesian product of per-orbit choices.
void for_each_choice(std::vector<std::vector<int>> const& options, std::function<void(std::vector<int> const&)> const& fn) {
  std::vector<int> pick(options.size(), 0);
  for (auto const& o : options) {
    if (o.empty()) return;
  }
  std::vector<int> cur(options.size());
  while (true) {
    for (std::size_t i = 0; i < options.size(); ++i) cur[i] = options[i][pick[i]];
    fn(cur);
    std::size_t i = 0;
    while (i < options.size() && ++pick[i] == static_cast<int>(options[i].size())) pick[i++] = 0;
    if (i == options.size()) return;
  }
}

}  // namespace

void check_gset(GSet const& X) {
  auto const& G = *X.group;
  if (X.action.size() != static_cast<std::size_t>(G.order()) * X.size) throw TypeError("G-set action has wrong size");
  for (int x = 0; x < X.size; ++x) {
    if (X.act(0, x) != x) throw TypeError("identity acts nontrivially");
    for (Element g = 0; g < G.order(); ++g) {
      int gx = X.act(g, x);
      if (gx < 0 || gx >= X.size) throw TypeError("action leaves the point set");
      for (Element h = 0; h < G.order(); ++h) {
        if (X.act(h, gx) != X.act(G.mul(h, g), x)) throw TypeError("action is not compatible");
      }
    }
  }
}

GSet point_gset(GroupPtr const& G) {
  return make_gset(G, 1, [](Element, int) { return 0; });
}

GSet coset_gset(GroupPtr const& G, Subgroup const& H) {
  if (!is_subgroup(*G, H)) throw TypeError("coset_gset: not a subgroup");
  std::vector<int> coset(G->order(), -1);
  std::vector<Element> reps;
  for (Element g = 0; g < G->order(); ++g) {
    if (coset[g] >= 0) continue;
    for (Element h : H) coset[G->mul(g, h)] = static_cast<int>(reps.size());
    reps.push_back(g);
  }
  return make_gset(G, static_cast<int>(reps.size()), [&](Element g, int x) { return coset[G->mul(g, reps[x])]; });
}

GSet disjoint_union(GSet const& X, GSet const& Y) {
  require_same_group(X, Y, "disjoint_union");
  return make_gset(X.group, X.size + Y.size,
                   [&](Element g, int x) { return x < X.size ? X.act(g, x) : X.size + Y.act(g, x - X.size); });
}

GSet gset_product(GSet const& X, GSet const& Y) {
  require_same_group(X, Y, "gset_product");
  return make_gset(X.group, X.size * Y.size,
                   [&](Element g, int x) { return X.act(g, x / Y.size) * Y.size + Y.act(g, x % Y.size); });
}

void check_gmap(GMap const& f) {
  require_same_group(f.source, f.target, "check_gmap");
  if (f.map.size() != static_cast<std::size_t>(f.source.size)) throw TypeError("G-map has wrong size");
  for (int x = 0; x < f.source.size; ++x) {
    if (f(x) < 0 || f(x) >= f.target.size) throw TypeError("G-map leaves its target");
    for (Element g = 0; g < f.source.group->order(); ++g) {
      if (f(f.source.act(g, x)) != f.target.act(g, f(x))) throw TypeError("map is not equivariant");
    }
  }
}

GMap identity_gmap(GSet const& X) {
  GMap f{X, X, std::vector<int>(X.size)};
  for (int x = 0; x < X.size; ++x) f.map[x] = x;
  return f;
}

GMap to_point(GSet const& X) { return {X, point_gset(X.group), std::vector<int>(X.size, 0)}; }

GMap compose(GMap const& g, GMap const& f) {
  if (!same_gset(f.target, g.source)) throw TypeError("G-maps are not composable");
  GMap h{f.source, g.target, f.map};
  for (auto& x : h.map) x = g(x);
  return h;
}

std::vector<Orbit> orbit_decomposition(GSet const& X) {
  auto const& G = *X.group;
  std::vector<int> seen(X.size, 0);
  std::vector<Orbit> out;
  for (int x0 = 0; x0 < X.size; ++x0) {
    if (seen[x0]) continue;
    Orbit o;
    std::vector<int> pos(X.size, -1);
    for (Element g = 0; g < G.order(); ++g) {
      int y = X.act(g, x0);
      if (y == x0) o.stabilizer.push_back(g);
      if (!seen[y]) {
        seen[y] = 1;
        o.points.push_back(y);
      }
    }
    std::sort(o.points.begin(), o.points.end());
    for (std::size_t i = 0; i < o.points.size(); ++i) pos[o.points[i]] = static_cast<int>(i);
    o.gset = make_gset(X.group, static_cast<int>(o.points.size()),
                       [&](Element g, int i) { return pos[X.act(g, o.points[i])]; });
    out.push_back(std::move(o));
  }
  return out;
}

std::vector<GMap> all_gmaps(GSet const& X, GSet const& Y) {
  require_same_group(X, Y, "all_gmaps");
  auto const& G = *X.group;
  auto orbits = orbit_decomposition(X);
  std::vector<std::vector<int>> options;
  for (auto const& o : orbits) {
    std::vector<int> ys;
    for (int y = 0; y < Y.size; ++y) {
      bool fixed = std::all_of(o.stabilizer.begin(), o.stabilizer.end(), [&](Element s) { return Y.act(s, y) == y; });
      if (fixed) ys.push_back(y);
    }
    options.push_back(std::move(ys));
  }
  std::vector<GMap> out;
  if (orbits.empty()) {
    out.push_back({X, Y, {}});
    return out;
  }
  for_each_choice(options, [&](std::vector<int> const& ys) {
    GMap f{X, Y, std::vector<int>(X.size)};
    for (std::size_t i = 0; i < orbits.size(); ++i) {
      int x0 = orbits[i].points.front();
      for (Element g = 0; g < G.order(); ++g) f.map[X.act(g, x0)] = Y.act(g, ys[i]);
    }
    out.push_back(std::move(f));
  });
  return out;
}

std::vector<GMap> gset_isomorphisms(GSet const& X, GSet const& Y) {
  std::vector<GMap> out;
  if (X.size != Y.size) return out;
  for (auto& f : all_gmaps(X, Y)) {
    std::vector<int> img = f.map;
    std::sort(img.begin(), img.end());
    if (std::adjacent_find(img.begin(), img.end()) == img.end()) out.push_back(std::move(f));
  }
  return out;
}

GSetPullback pullback(GMap const& f, GMap const& g) {
  if (!same_gset(f.target, g.target)) throw TypeError("pullback: maps have different targets");
  std::vector<std::pair<int, int>> pts;
  std::map<std::pair<int, int>, int> index;
  for (int x = 0; x < f.source.size; ++x) {
    for (int y = 0; y < g.source.size; ++y) {
      if (f(x) == g(y)) {
        index[{x, y}] = static_cast<int>(pts.size());
        pts.emplace_back(x, y);
      }
    }
  }
  int const n = static_cast<int>(pts.size());
  GSet P = make_gset(f.source.group, n, [&](Element h, int i) {
    return index.at({f.source.act(h, pts[i].first), g.source.act(h, pts[i].second)});
  });
  GSetPullback pb{P, {P, f.source, std::vector<int>(n)}, {P, g.source, std::vector<int>(n)}};
  for (int i = 0; i < n; ++i) {
    pb.p.map[i] = pts[i].first;
    pb.q.map[i] = pts[i].second;
  }
  return pb;
}

bool is_twisting(GSet const& X, TwistingMap const& t) {
  auto const& G = *X.group;
  if (t.tau.size() != static_cast<std::size_t>(X.size)) return false;
  for (int x = 0; x < X.size; ++x) {
    for (Element g = 0; g < G.order(); ++g) {
      if (t.tau[X.act(g, x)] != G.conj(g, t.tau[x])) return false;
    }
  }
  return true;
}

bool is_twisting_between(GMap const& f1, GMap const& f2, TwistingMap const& t) {
  if (!is_twisting(f1.source, t)) return false;
  for (int x = 0; x < f1.source.size; ++x) {
    if (f1.target.act(t.tau[x], f1(x)) != f2(x)) return false;
  }
  return true;
}

TwistingMap vertical(Group const& G, TwistingMap const& second, TwistingMap const& first) {
  TwistingMap out{std::vector<Element>(first.tau.size())};
  for (std::size_t x = 0; x < first.tau.size(); ++x) out.tau[x] = G.mul(second.tau[x], first.tau[x]);
  return out;
}

TwistingMap horizontal(TwistingMap const& sigma, TwistingMap const& tau, GMap const& f1) {
  auto const& G = *f1.source.group;
  TwistingMap out{std::vector<Element>(tau.tau.size())};
  for (std::size_t x = 0; x < tau.tau.size(); ++x) out.tau[x] = G.mul(tau.tau[x], sigma.tau[f1(static_cast<int>(x))]);
  return out;
}

std::vector<TwistingMap> twisting_maps(GMap const& f1, GMap const& f2) {
  if (!same_gset(f1.source, f2.source) || !same_gset(f1.target, f2.target)) {
    throw TypeError("twisting maps need parallel G-maps");
  }
  auto const& X = f1.source;
  auto const& G = *X.group;
  auto orbits = orbit_decomposition(X);
  std::vector<std::vector<int>> options;
  for (auto const& o : orbits) {
    int x0 = o.points.front();
    Subgroup C = centralizer(G, o.stabilizer);
    std::vector<int> ts;
    for (Element t : C) {
      if (f1.target.act(t, f1(x0)) == f2(x0)) ts.push_back(t);
    }
    options.push_back(std::move(ts));
  }
  std::vector<TwistingMap> out;
  if (orbits.empty()) {
    out.push_back({});
    return out;
  }
  for_each_choice(options, [&](std::vector<int> const& ts) {
    TwistingMap t{std::vector<Element>(X.size)};
    for (std::size_t i = 0; i < orbits.size(); ++i) {
      int x0 = orbits[i].points.front();
      for (Element g = 0; g < G.order(); ++g) t.tau[X.act(g, x0)] = G.conj(g, ts[i]);
    }
    out.push_back(std::move(t));
  });
  return out;
}

std::optional<TwistingMap> fused_gmap_related(GMap const& f1, GMap const& f2) {
  auto all = twisting_maps(f1, f2);
  if (all.empty()) return std::nullopt;
  return all.front();
}

Transport transport_groupoid(GSet const& X) {
  auto const& G = *X.group;
  int const n = X.size;
  std::vector<FiniteGroupoid::ArrowData> arrows;
  for (Element g = 0; g < G.order(); ++g) {
    for (int x = 0; x < n; ++x) arrows.push_back({x, X.act(g, x)});
  }
  std::vector<int> ids(n);
  for (int x = 0; x < n; ++x) ids[x] = x;
  auto T = share(FiniteGroupoid::build(n, std::move(arrows), std::move(ids), [&](int h, int f) {
    return G.mul(h / n, f / n) * n + f % n;
  }));
  auto target = group_groupoid(X.group);
  std::vector<int> arr(T->num_arrows());
  for (int a = 0; a < T->num_arrows(); ++a) arr[a] = a / n;
  return {T, GroupoidFunctor{T, target, std::vector<int>(n, 0), std::move(arr)}};
}

GroupoidFunctor transport_functor(GMap const& f, GroupoidPtr const& source, GroupoidPtr const& target) {
  int const n = f.source.size, m = f.target.size;
  if (source->num_objects() != n || target->num_objects() != m) throw TypeError("transport groupoids do not match");
  GroupoidFunctor F{source, target, f.map, std::vector<int>(source->num_arrows())};
  for (int a = 0; a < source->num_arrows(); ++a) F.arrow_map[a] = (a / n) * m + f(a % n);
  return F;
}

GroupoidFunctor transport_functor(GMap const& f) {
  return transport_functor(f, transport_groupoid(f.source).groupoid, transport_groupoid(f.target).groupoid);
}

NatTransformation transport_2cell(GMap const& f1, GMap const& f2, TwistingMap const& t) {
  if (!is_twisting_between(f1, f2, t)) throw TypeError("not a twisting map between the given G-maps");
  auto S = transport_groupoid(f1.source).groupoid;
  auto T = transport_groupoid(f1.target).groupoid;
  NatTransformation a{transport_functor(f1, S, T), transport_functor(f2, S, T), std::vector<int>(f1.source.size)};
  int const m = f1.target.size;
  for (int x = 0; x < f1.source.size; ++x) a.components[x] = t.tau[x] * m + f1(x);
  return a;
}

GMap right_translation(GroupPtr const& G, Subgroup const& H, Element a) {
  if (!contains(normalizer(*G, H), a)) throw TypeError("right translation needs an element of the normalizer");
  auto X = coset_gset(G, H);
  GMap f{X, X, std::vector<int>(X.size)};
  for (Element g = 0; g < G->order(); ++g) f.map[X.act(g, 0)] = X.act(G->mul(g, a), 0);
  return f;
}

TwistingMap nat_to_twist(NatTransformation const& alpha, GSet const& X) {
  int const n = X.size;
  int const m = alpha.from.target->num_objects();
  auto transported = [&](GroupoidFunctor const& F) {
    if (F.source->num_objects() != n || F.source->num_arrows() != n * X.group->order()) return false;
    if (F.target->num_arrows() != m * X.group->order()) return false;
    for (int a = 0; a < F.source->num_arrows(); ++a) {
      if (F.arr(a) != (a / n) * m + F.obj(a % n)) return false;
    }
    return true;
  };
  if (!transported(alpha.from) || !transported(alpha.to)) throw TypeError("natural transformation is not between transported functors");
  check_nat(alpha);
  TwistingMap t{std::vector<Element>(n)};
  for (int x = 0; x < n; ++x) t.tau[x] = alpha.components[x] / m;
  if (!is_twisting(X, t)) throw TypeError("components do not form a twisting map");
  return t;
}

namespace {

bool span_equivalent_with(GSetSpan const& s1, GSetSpan const& s2, bool fused) {
  if (!same_gset(s1.left.target, s2.left.target) || !same_gset(s1.right.target, s2.right.target)) {
    throw TypeError("spans have different endpoints");
  }
  auto related = [&](GMap const& a, GMap const& b) { return fused ? fused_gmap_related(a, b).has_value() : a.map == b.map; };
  for (auto const& phi : gset_isomorphisms(s1.left.source, s2.left.source)) {
    if (related(s1.left, compose(s2.left, phi)) && related(s1.right, compose(s2.right, phi))) return true;
  }
  return false;
}

}  // namespace

bool fused_span_equivalent(GSetSpan const& s1, GSetSpan const& s2) { return span_equivalent_with(s1, s2, true); }
bool strict_span_equivalent(GSetSpan const& s1, GSetSpan const& s2) { return span_equivalent_with(s1, s2, false); }

bool check_fused_pullback_mackey(GMap const& f, GMap const& g) {
  auto pb = pullback(f, g);
  auto const& G = f.source.group;
  auto const& Grp = *G;
  for (auto const& H : subgroup_classes(Grp)) {
    GSet T = coset_gset(G, H);
    auto maps_p = all_gmaps(T, pb.apex);
    // essentially surjective: every (t, s, γ) is isomorphic to some (pu, qu, e)
    for (auto const& t : all_gmaps(T, f.source)) {
      for (auto const& s : all_gmaps(T, g.source)) {
        for (auto const& gamma : twisting_maps(compose(f, t), compose(g, s))) {
          bool found = false;
          for (auto const& u : maps_p) {
            auto pu = compose(pb.p, u);
            auto qu = compose(pb.q, u);
            for (auto const& beta : twisting_maps(s, qu)) {
              TwistingMap alpha{std::vector<Element>(T.size)};
              for (int x = 0; x < T.size; ++x) alpha.tau[x] = Grp.mul(beta.tau[x], gamma.tau[x]);
              if (is_twisting_between(t, pu, alpha)) {
                found = true;
                break;
              }
            }
            if (found) break;
          }
          if (!found) return false;
        }
      }
    }
    // fully faithful: 2-cells u ⇒ u' correspond to compatible pairs (α, β) = (ω, ω)
    for (auto const& u : maps_p) {
      for (auto const& v : maps_p) {
        auto omegas = twisting_maps(u, v);
        auto alphas = twisting_maps(compose(pb.p, u), compose(pb.p, v));
        auto betas = twisting_maps(compose(pb.q, u), compose(pb.q, v));
        std::size_t pairs = 0;
        for (auto const& a : alphas) {
          for (auto const& b : betas) pairs += a.tau == b.tau;
        }
        if (pairs != omegas.size()) return false;
      }
    }
  }
  return true;
}

bool check_transport_mackey_preservation(GMap const& f, GMap const& g) {
  auto pb = pullback(f, g);
  auto TX = transport_groupoid(f.source).groupoid;
  auto TY = transport_groupoid(g.source).groupoid;
  auto TZ = transport_groupoid(f.target).groupoid;
  auto TP = transport_groupoid(pb.apex).groupoid;
  auto u = transport_functor(f, TX, TZ);
  auto v = transport_functor(g, TY, TZ);
  auto p = transport_functor(pb.p, TP, TX);
  auto q = transport_functor(pb.q, TP, TY);
  NatTransformation id = identity_nat(compose(u, p));
  id.to = compose(v, q);
  return is_mackey_square(Square{p, q, id, u, v});
}

int orbit_class(GSet const& X, std::vector<Subgroup> const& basis) {
  auto orbits = orbit_decomposition(X);
  if (orbits.size() != 1) throw TypeError("orbit_class needs a transitive G-set");
  Subgroup rep = conjugacy_rep(*X.group, orbits.front().stabilizer);
  auto it = std::find(basis.begin(), basis.end(), rep);
  if (it == basis.end()) throw Error("stabilizer class missing from basis");
  return static_cast<int>(it - basis.begin());
}

BurnsideTable burnside_table(GroupPtr const& G, int bound) {
  if (G->order() > bound) {
    throw BoundExceeded("Burnside table: |G| = " + std::to_string(G->order()) + " exceeds bound " +
                        std::to_string(bound));
  }
  BurnsideTable t{G, subgroup_classes(*G), {}};
  int const n = static_cast<int>(t.basis.size());
  std::vector<GSet> orbits;
  for (auto const& H : t.basis) orbits.push_back(coset_gset(G, H));
  t.product.assign(n, std::vector<LinComb<int>>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      auto pb = pullback(to_point(orbits[i]), to_point(orbits[j]));
      for (auto const& o : orbit_decomposition(pb.apex)) t.product[i][j].add(orbit_class(o.gset, t.basis), 1);
    }
  }
  return t;
}

}  // namespace mackey
