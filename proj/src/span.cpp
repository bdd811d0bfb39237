#include "mackey/span.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <tuple>
#include <cstdint>
#include <iomanip>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <string_view>
#include <unordered_map>

namespace mackey {

GroupSpan identity_group_span(GroupPtr const& G) { return {G, identity_hom(G), identity_hom(G)}; }

// ---------------------------------------------------------------------------
// Canonical keys

namespace {

// -1, 0, 1 for lexicographic comparison of equal-length ranges.
int lex(std::vector<int> const& a, std::vector<int> const& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

// Least conjugate of the images of `gens` under f over the target group.
std::pair<std::vector<int>, Element> least_conjugate(Hom const& f, std::vector<Element> const& gens) {
  Group const& T = *f.tgt;
  std::vector<int> best, cur(gens.size());
  Element arg = 0;
  for (Element y = 0; y < T.order(); ++y) {
    for (std::size_t i = 0; i < gens.size(); ++i) cur[i] = T.conj(y, f(gens[i]));
    if (y == 0 || cur < best) {
      best = cur;
      arg = y;
    }
  }
  return {best, arg};
}

// Breadth-first labeling of S from a generating tuple: label → element.
std::vector<Element> bfs_labeling(Group const& S, std::vector<Element> const& gens) {
  std::vector<Element> order{0};
  std::vector<char> seen(S.order(), 0);
  seen[0] = 1;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (Element g : gens) {
      Element c = S.mul(order[i], g);
      if (!seen[c]) {
        seen[c] = 1;
        order.push_back(c);
      }
    }
  }
  return order;
}

struct Best {
  bool set = false;
  std::vector<int> head;
  std::vector<int> table;
  std::vector<Element> labeling;
  Element y = 0;
  Element x = 0;
};

// Generating tuples of length k in which no entry lies in the subgroup
// generated by the entries before it, restricted to those whose sequence of
// automorphism invariants (element order, class size, order of the subgroup
// generated so far) is lexicographically least. `reset` is called whenever a
// smaller sequence turns up.
template <class F, class R>
void for_each_generating_tuple(Group const& S, int k, Budget& budget, F const& visit, R const& reset) {
  int const n = S.order();
  std::vector<int> class_size(n, 0);
  for (Element g = 0; g < n; ++g) {
    std::vector<char> seen(n, 0);
    for (Element x = 0; x < n; ++x) seen[S.conj(x, g)] = 1;
    class_size[g] = static_cast<int>(std::count(seen.begin(), seen.end(), 1));
  }
  using Inv = std::array<int, 3>;
  std::vector<Element> tuple;
  std::vector<Inv> invs, best;
  std::function<void(Subgroup const&)> rec = [&](Subgroup const& cur) {
    std::size_t const d = tuple.size();
    if (static_cast<int>(d) == k) {
      if (static_cast<int>(cur.size()) != n) return;
      if (best.empty() || invs < best) {
        best = invs;
        reset();
      }
      if (invs == best) visit(tuple);
      return;
    }
    std::vector<std::tuple<Inv, Element, Subgroup>> kids;
    for (Element g = 1; g < n; ++g) {
      if (contains(cur, g)) continue;
      budget.spend();
      tuple.push_back(g);
      Subgroup next = generate(S, tuple);
      tuple.pop_back();
      Inv inv{S.element_order(g), class_size[g], static_cast<int>(next.size())};
      kids.emplace_back(inv, g, std::move(next));
    }
    std::sort(kids.begin(), kids.end(), [](auto const& a, auto const& b) {
      return std::tie(std::get<0>(a), std::get<1>(a)) < std::tie(std::get<0>(b), std::get<1>(b));
    });
    for (auto const& [inv, g, next] : kids) {
      invs.push_back(inv);
      bool const worse = !best.empty() && std::lexicographical_compare(best.begin(), best.begin() + d + 1,
                                                                        invs.begin(), invs.end());
      if (worse) {
        invs.pop_back();
        break;
      }
      tuple.push_back(g);
      rec(next);
      tuple.pop_back();
      invs.pop_back();
    }
  };
  rec(Subgroup{0});
}

GroupSpanKey compute_key(GroupSpan const& s, Budget& budget) {
  Group const& S = *s.apex;
  int const n = S.order();
  int const k = rank(S);
  Best best;
  std::vector<int> pos(n);
  for_each_generating_tuple(S, k, budget, [&](std::vector<Element> const& t) {
    auto [L, y] = least_conjugate(s.left, t);
    auto [R, x] = least_conjugate(s.right, t);
    auto labeling = bfs_labeling(S, t);
    for (int i = 0; i < n; ++i) pos[labeling[i]] = i;
    std::vector<int> head{n, k};
    head.insert(head.end(), L.begin(), L.end());
    head.insert(head.end(), R.begin(), R.end());
    for (Element g : t) head.push_back(pos[g]);
    int cmp = best.set ? lex(head, best.head) : -1;
    if (cmp > 0) return;
    std::vector<int> table(static_cast<std::size_t>(n) * n);
    std::size_t filled = 0;
    for (int i = 0; i < n && cmp >= 0; ++i) {
      for (int j = 0; j < n; ++j, ++filled) {
        table[filled] = pos[S.mul(labeling[i], labeling[j])];
        if (cmp == 0 && table[filled] != best.table[filled]) {
          cmp = table[filled] < best.table[filled] ? -1 : 1;
          if (cmp > 0) break;
        }
      }
    }
    if (cmp >= 0) return;
    for (; filled < table.size(); ++filled) {
      table[filled] = pos[S.mul(labeling[filled / n], labeling[filled % n])];
    }
    best = {true, std::move(head), std::move(table), std::move(labeling), y, x};
  }, [&] { best.set = false; });
  auto code = std::make_shared<std::vector<int>>(best.head);
  code->insert(code->end(), best.table.begin(), best.table.end());
  auto apex = share(Group::unchecked(n, best.table));
  std::vector<Element> lm(n), rm(n);
  for (int i = 0; i < n; ++i) {
    lm[i] = s.left.tgt->conj(best.y, s.left(best.labeling[i]));
    rm[i] = s.right.tgt->conj(best.x, s.right(best.labeling[i]));
  }
  return {code, GroupSpan{apex, Hom{apex, s.left.tgt, std::move(lm)}, Hom{apex, s.right.tgt, std::move(rm)}}};
}

std::string fingerprint(GroupSpan const& s) {
  std::vector<int> v;
  auto put = [&](std::vector<int> const& xs) {
    v.push_back(static_cast<int>(xs.size()));
    v.insert(v.end(), xs.begin(), xs.end());
  };
  put(s.apex->table());
  put(s.left.tgt->table());
  put(s.right.tgt->table());
  put(s.left.map);
  put(s.right.map);
  return std::string(reinterpret_cast<char const*>(v.data()), v.size() * sizeof(int));
}

struct KeyCache {
  std::mutex mu;
  std::unordered_map<std::string, GroupSpanKey> map;
};

KeyCache& key_cache() {
  static KeyCache c;
  return c;
}

constexpr std::size_t kKeyCacheLimit = 200000;

}  // namespace

GroupSpanKey canonical_key(GroupSpan const& s, Budget& budget) {
  if (!(*s.left.src == *s.apex) || !(*s.right.src == *s.apex)) throw TypeError("span legs have different sources");
  std::string fp = fingerprint(s);
  auto& cache = key_cache();
  {
    std::lock_guard<std::mutex> lock(cache.mu);
    if (auto it = cache.map.find(fp); it != cache.map.end()) {
      // the cached representative may carry other endpoint pointers
      GroupSpanKey k = it->second;
      k.rep.left.tgt = s.left.tgt;
      k.rep.right.tgt = s.right.tgt;
      return k;
    }
  }
  GroupSpanKey k = compute_key(s, budget);
  std::lock_guard<std::mutex> lock(cache.mu);
  if (cache.map.size() > kKeyCacheLimit) cache.map.clear();
  cache.map.emplace(std::move(fp), k);
  return k;
}

GroupSpanKey canonical_key(GroupSpan const& s) {
  Budget b;
  return canonical_key(s, b);
}

SixForm six_form(GroupSpanKey const& key) {
  auto const& r = key.rep;
  SixForm out;
  out.S = r.apex;
  out.D = image(r.left);
  out.B = image(r.right);
  out.N = kernel(r.left);
  out.M = kernel(r.right);
  auto cosets = [&](Subgroup const& K, Hom const& f) {
    std::vector<Element> vals;
    std::vector<char> seen(r.apex->order(), 0);
    for (Element s = 0; s < r.apex->order(); ++s) {
      if (seen[s]) continue;
      for (Element k : K) seen[r.apex->mul(s, k)] = 1;
      vals.push_back(f(s));
    }
    return vals;
  };
  out.ell = cosets(out.N, r.left);
  out.f = cosets(out.M, r.right);
  return out;
}

std::string format_six_form(SixForm const& s) {
  std::ostringstream os;
  os << "S=" << s.S->order() << " D=" << format_subgroup(s.D) << " N=" << format_subgroup(s.N)
     << " M=" << format_subgroup(s.M) << " B=" << format_subgroup(s.B);
  return os.str();
}

std::string key_string(GroupSpanKey const& key) {
  auto const& r = key.rep;
  if (*r.source() == *r.target() && key == canonical_key(identity_group_span(r.source()))) return "id";
  std::uint64_t h = 1469598103934665603ull;
  for (int v : *key.code) {
    h ^= static_cast<std::uint32_t>(v);
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << format_six_form(six_form(key)) << " #" << std::hex << std::setw(8) << std::setfill('0')
     << static_cast<std::uint32_t>(h ^ (h >> 32));
  return os.str();
}

LinComb<GroupSpanKey> compose_group_spans(GroupSpan const& s1, GroupSpan const& s2) {
  if (!(*s1.target() == *s2.source())) throw TypeError("compose: middle groups differ");
  Group const& G = *s1.target();
  Hom const& r1 = s1.right;
  Hom const& l2 = s2.left;
  std::vector<std::vector<Element>> preimage(G.order());
  for (Element b = 0; b < l2.src->order(); ++b) preimage[l2(b)].push_back(b);
  LinComb<GroupSpanKey> out;
  for (auto const& dc : double_cosets(G, image(l2), image(r1))) {
    Element gamma = dc.rep;
    std::vector<std::pair<Element, Element>> stab;
    for (Element a = 0; a < r1.src->order(); ++a) {
      Element t = G.conj(gamma, r1(a));
      for (Element b : preimage[t]) stab.emplace_back(a, b);
    }
    auto P = pair_subgroup(s1.apex, s2.apex, stab);
    out.add(canonical_key(GroupSpan{P.group, compose(s1.left, P.pr1), compose(s2.right, P.pr2)}), 1);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Spans of groupoids

bool same_groupoid(GroupoidPtr const& a, GroupoidPtr const& b) { return a == b || *a == *b; }

void check_span(Span const& s) {
  if (!same_groupoid(s.left.source, s.right.source)) throw TypeError("span legs have different sources");
}

Span to_span(GroupSpan const& s) {
  auto S = group_groupoid(s.apex);
  return {functor_from_hom(s.left, S, group_groupoid(s.left.tgt)),
          functor_from_hom(s.right, S, group_groupoid(s.right.tgt))};
}

Span identity_span(GroupoidPtr const& X) { return {identity_functor(X), identity_functor(X)}; }

Span zero_span(GroupoidPtr const& X, GroupoidPtr const& Y) {
  auto E = disjoint_union({}).groupoid;
  return {GroupoidFunctor{E, X, {}, {}}, GroupoidFunctor{E, Y, {}, {}}};
}

Span sum_span(Span const& a, Span const& b) {
  check_span(a);
  check_span(b);
  if (!same_groupoid(a.source(), b.source()) || !same_groupoid(a.target(), b.target())) {
    throw TypeError("sum of spans with different endpoints");
  }
  return {copair({a.left, b.left}), copair({a.right, b.right})};
}

bool SpanClassKey::operator<(SpanClassKey const& o) const {
  if (source_component != o.source_component) return source_component < o.source_component;
  if (target_component != o.target_component) return target_component < o.target_component;
  return key < o.key;
}

bool SpanClassKey::operator==(SpanClassKey const& o) const {
  return source_component == o.source_component && target_component == o.target_component && key == o.key;
}

bool SpanSum::operator==(SpanSum const& o) const {
  return same_groupoid(source, o.source) && same_groupoid(target, o.target) && terms == o.terms;
}

SpanSum zero(GroupoidPtr const& X, GroupoidPtr const& Y) { return {X, Y, {}}; }

SpanSum add(SpanSum const& a, SpanSum const& b) {
  if (!same_groupoid(a.source, b.source) || !same_groupoid(a.target, b.target)) {
    throw TypeError("add: different endpoints");
  }
  return {a.source, a.target, a.terms + b.terms};
}

SpanSum scale(SpanSum const& a, long long c) { return {a.source, a.target, a.terms.scaled(c)}; }

SpanSum from_group_terms(GroupPtr const& H, GroupPtr const& G, LinComb<GroupSpanKey> const& terms) {
  SpanSum out{group_groupoid(H), group_groupoid(G), {}};
  for (auto const& [k, c] : terms.terms()) out.terms.add({0, 0, k}, c);
  return out;
}

SpanSum span_class(GroupSpan const& s) {
  return from_group_terms(s.source(), s.target(), LinComb<GroupSpanKey>(canonical_key(s)));
}

namespace {

// Least object of each component and the vertex group there.
struct ComponentReps {
  std::vector<int> comp;  // object → component
  std::vector<int> rep;   // component → least object
  std::vector<FiniteGroupoid::VertexGroup> groups;
};

ComponentReps component_reps(FiniteGroupoid const& X) {
  ComponentReps out;
  out.comp = component_index(X);
  for (int x = 0; x < X.num_objects(); ++x) {
    if (out.comp[x] == static_cast<int>(out.rep.size())) {
      out.rep.push_back(x);
      out.groups.push_back(X.vertex_group(x));
    }
  }
  return out;
}

// The vertex group at s mapped by F and transported to the component
// representative of F(s) along the first arrow rep → F(s).
Hom transported(GroupoidFunctor const& F, FiniteGroupoid::VertexGroup const& at_s, int s, ComponentReps const& R) {
  FiniteGroupoid const& X = *F.target;
  int x = F.obj(s);
  int c = R.comp[x];
  int t = X.hom(R.rep[c], x).front();
  int t_inv = X.inverse(t);
  auto const& V = R.groups[c];
  std::vector<Element> map(at_s.group->order());
  for (Element e = 0; e < at_s.group->order(); ++e) {
    int phi = F.arr(at_s.arrows[e]);
    map[e] = V.element_of[X.compose(t_inv, X.compose(phi, t))];
  }
  return Hom{at_s.group, V.group, std::move(map)};
}

}  // namespace

SpanSum decompose(Span const& s) {
  check_span(s);
  auto RX = component_reps(*s.source());
  auto RY = component_reps(*s.target());
  auto const& P = *s.apex();
  auto comps = component_index(P);
  SpanSum out{s.source(), s.target(), {}};
  int next = 0;
  for (int o = 0; o < P.num_objects(); ++o) {
    if (comps[o] != next) continue;
    ++next;
    auto V = P.vertex_group(o);
    Hom b = transported(s.left, V, o, RX);
    Hom a = transported(s.right, V, o, RY);
    int cx = RX.comp[s.left.obj(o)];
    int cy = RY.comp[s.right.obj(o)];
    out.terms.add({cx, cy, canonical_key(GroupSpan{V.group, b, a})}, 1);
  }
  return out;
}

Span representative(GroupoidPtr const& X, GroupoidPtr const& Y, SpanClassKey const& k) {
  auto RX = component_reps(*X);
  auto RY = component_reps(*Y);
  auto const& r = k.key.rep;
  auto S = group_groupoid(r.apex);
  auto leg = [&](Hom const& h, GroupoidPtr const& T, ComponentReps const& R, int c) {
    auto const& V = R.groups.at(c);
    if (!(*V.group == *h.tgt)) throw TypeError("basis key does not match the endpoint component");
    std::vector<int> arr(h.src->order());
    for (Element e = 0; e < h.src->order(); ++e) arr[e] = V.arrows[h(e)];
    return GroupoidFunctor{S, T, {R.rep[c]}, std::move(arr)};
  };
  return {leg(r.left, X, RX, k.source_component), leg(r.right, Y, RY, k.target_component)};
}

SpanSum compose(SpanSum const& a, SpanSum const& b) {
  if (!same_groupoid(a.target, b.source)) throw TypeError("compose: middle groupoids differ");
  SpanSum out{a.source, b.target, {}};
  for (auto const& [ka, ca] : a.terms.terms()) {
    for (auto const& [kb, cb] : b.terms.terms()) {
      if (ka.target_component != kb.source_component) continue;
      auto terms = compose_group_spans(ka.key.rep, kb.key.rep);
      for (auto const& [k, c] : terms.terms()) {
        out.terms.add({ka.source_component, kb.target_component, k}, ca * cb * c);
      }
    }
  }
  return out;
}

SpanSum compose_spans(Span const& s1, Span const& s2) {
  check_span(s1);
  check_span(s2);
  if (!same_groupoid(s1.target(), s2.source())) throw TypeError("compose_spans: middle groupoids differ");
  auto ic = iso_comma(s1.right, s2.left);
  return decompose(Span{compose(s1.left, ic.proj_left), compose(s2.right, ic.proj_right)});
}

bool span_equivalent_search(Span const& s1, Span const& s2, Budget& budget) {
  check_span(s1);
  check_span(s2);
  if (!same_groupoid(s1.source(), s2.source()) || !same_groupoid(s1.target(), s2.target())) {
    throw TypeError("span_equivalent: endpoints differ");
  }
  if (s1.apex()->num_objects() == 0 || s2.apex()->num_objects() == 0) {
    return s1.apex()->num_objects() == s2.apex()->num_objects();
  }
  if (num_components(*s1.apex()) != num_components(*s2.apex())) return false;
  for (auto const& f : enumerate_functors(s1.apex(), s2.apex(), budget)) {
    budget.spend();
    if (!is_equivalence(f)) continue;
    if (functor_iso(s1.left, compose(s2.left, f), budget) && functor_iso(s1.right, compose(s2.right, f), budget)) {
      return true;
    }
  }
  return false;
}

bool span_equivalent_search(Span const& s1, Span const& s2) {
  Budget b;
  return span_equivalent_search(s1, s2, b);
}

namespace {
constexpr int kCrossCheckApex = 12;
}

bool span_equivalent(Span const& s1, Span const& s2) {
  check_span(s1);
  check_span(s2);
  if (!same_groupoid(s1.source(), s2.source()) || !same_groupoid(s1.target(), s2.target())) {
    throw TypeError("span_equivalent: endpoints differ");
  }
  bool fast = decompose(s1) == decompose(s2);
  bool small = s1.source()->num_objects() == 1 && s1.target()->num_objects() == 1 &&
               s1.apex()->num_objects() == 1 && s2.apex()->num_objects() == 1 &&
               s1.apex()->num_arrows() <= kCrossCheckApex && s2.apex()->num_arrows() <= kCrossCheckApex;
  if (small && span_equivalent_search(s1, s2) != fast) {
    throw Error("span_equivalent: canonical keys disagree with the exhaustive search");
  }
  return fast;
}

// ---------------------------------------------------------------------------
// Elementary spans

GroupPtr const& Letter::source() const {
  switch (kind) {
    case Kind::Res:
    case Kind::Infl:
      return map.tgt;
    default:
      return map.src;
  }
}

GroupPtr const& Letter::target() const {
  switch (kind) {
    case Kind::Res:
    case Kind::Infl:
      return map.src;
    default:
      return map.tgt;
  }
}

std::string kind_name(Letter::Kind k) {
  switch (k) {
    case Letter::Kind::Res:
      return "Res";
    case Letter::Kind::Ind:
      return "Ind";
    case Letter::Kind::Infl:
      return "Infl";
    case Letter::Kind::Defl:
      return "Defl";
    case Letter::Kind::Iso:
      return "Iso";
  }
  return "?";
}

Letter make_letter(Letter::Kind kind, Hom map) {
  switch (kind) {
    case Letter::Kind::Res:
    case Letter::Kind::Ind:
      if (!is_injective(map)) throw TypeError(kind_name(kind) + " needs an injective map");
      break;
    case Letter::Kind::Infl:
    case Letter::Kind::Defl:
      if (!is_surjective(map)) throw TypeError(kind_name(kind) + " needs a surjective map");
      break;
    case Letter::Kind::Iso:
      if (!is_isomorphism(map)) throw TypeError("Iso needs an isomorphism");
      break;
  }
  return {kind, std::move(map)};
}

Letter res(GroupPtr const& G, Subgroup const& K) { return {Letter::Kind::Res, subgroup_group(G, K).incl}; }
Letter ind(GroupPtr const& G, Subgroup const& K) { return {Letter::Kind::Ind, subgroup_group(G, K).incl}; }
Letter infl(GroupPtr const& G, Subgroup const& N) { return {Letter::Kind::Infl, quotient(G, N).proj}; }
Letter defl(GroupPtr const& G, Subgroup const& N) { return {Letter::Kind::Defl, quotient(G, N).proj}; }
Letter iso(Hom const& f) { return make_letter(Letter::Kind::Iso, f); }

GroupSpan elementary(Letter const& l) {
  auto const& f = l.map;
  switch (l.kind) {
    case Letter::Kind::Res:
    case Letter::Kind::Infl:
      return {f.src, f, identity_hom(f.src)};
    default:
      return {f.src, identity_hom(f.src), f};
  }
}

void check_word(SpanWord const& w) {
  if (!w.start) throw TypeError("word has no start group");
  GroupPtr cur = w.start;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (!(*w.letters[i].source() == *cur)) {
      throw TypeError("word is not composable at letter " + std::to_string(i) + " (" +
                      kind_name(w.letters[i].kind) + ")");
    }
    cur = w.letters[i].target();
  }
}

SpanSum fold_compose(SpanWord const& w) {
  check_word(w);
  auto X = group_groupoid(w.start);
  SpanSum acc = decompose(identity_span(X));
  for (auto const& l : w.letters) {
    Span e = to_span(elementary(l));
    SpanSum next = zero(X, e.target());
    for (auto const& [k, c] : acc.terms.terms()) {
      next = add(next, scale(compose_spans(representative(acc.source, acc.target, k), e), c));
    }
    acc = next;
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Bases

std::string pair_name(PairKind p) {
  switch (p) {
    case PairKind::All:
      return "all";
    case PairKind::FaithfulRight:
      return "faithful_right";
    case PairKind::FaithfulBoth:
      return "faithful_both";
  }
  return "?";
}

std::optional<PairKind> parse_pair_kind(std::string const& name) {
  for (auto p : {PairKind::All, PairKind::FaithfulRight, PairKind::FaithfulBoth}) {
    if (pair_name(p) == name) return p;
  }
  return std::nullopt;
}

std::vector<GroupPtr> small_groups(int max_order) {
  if (max_order > kSmallGroupCatalogBound) {
    throw BoundExceeded("the small-group catalog is complete only up to order 8");
  }
  static std::vector<std::string> const names = {"1",  "C2", "C3", "C4",   "C2xC2",    "C5", "C6",
                                                 "S3", "C7", "C8", "C4xC2", "C2xC2xC2", "D4", "Q8"};
  std::vector<GroupPtr> out;
  for (auto const& n : names) {
    auto G = named_group(n);
    if (G->order() <= max_order) out.push_back(G);
  }
  return out;
}

bool legal_group_span(GroupSpan const& s, PairKind pair) {
  switch (pair) {
    case PairKind::All:
      return true;
    case PairKind::FaithfulRight:
      return is_injective(s.right);
    case PairKind::FaithfulBoth:
      return is_injective(s.right) && is_injective(s.left);
  }
  return false;
}

bool legal_span(Span const& s, PairKind pair) {
  switch (pair) {
    case PairKind::All:
      return true;
    case PairKind::FaithfulRight:
      return is_faithful(s.right);
    case PairKind::FaithfulBoth:
      return is_faithful(s.right) && is_faithful(s.left);
  }
  return false;
}

namespace {

std::set<GroupSpanKey> group_basis(GroupPtr const& H, GroupPtr const& G, PairKind pair, int apex_bound) {
  std::set<GroupSpanKey> out;
  switch (pair) {
    case PairKind::FaithfulBoth:
      for (auto const& D : subgroup_classes(*H)) {
        auto e = subgroup_group(H, D);
        for (auto const& a : all_homs(e.group, G)) {
          if (is_injective(a)) out.insert(canonical_key(GroupSpan{e.group, e.incl, a}));
        }
      }
      break;
    case PairKind::FaithfulRight:
      for (auto const& B : subgroup_classes(*G)) {
        auto e = subgroup_group(G, B);
        for (auto const& b : all_homs(e.group, H)) out.insert(canonical_key(GroupSpan{e.group, b, e.incl}));
      }
      break;
    case PairKind::All:
      for (auto const& S : small_groups(apex_bound)) {
        auto lefts = all_homs(S, H);
        auto rights = all_homs(S, G);
        for (auto const& b : lefts) {
          for (auto const& a : rights) out.insert(canonical_key(GroupSpan{S, b, a}));
        }
      }
      break;
  }
  return out;
}

}  // namespace

HomBasis hom_basis(GroupoidPtr const& X, GroupoidPtr const& Y, PairKind pair, std::optional<int> apex_bound) {
  HomBasis out;
  int bound = 0;
  if (pair == PairKind::All) {
    if (!apex_bound) throw BoundExceeded("hom_basis for pair 'all' needs an explicit apex bound");
    bound = *apex_bound;
    if (bound < 1) throw BoundExceeded("apex bound must be at least 1");
    out.truncated = true;
  }
  auto RX = component_reps(*X);
  auto RY = component_reps(*Y);
  for (std::size_t cx = 0; cx < RX.rep.size(); ++cx) {
    for (std::size_t cy = 0; cy < RY.rep.size(); ++cy) {
      for (auto const& k : group_basis(RX.groups[cx].group, RY.groups[cy].group, pair, bound)) {
        out.keys.push_back({static_cast<int>(cx), static_cast<int>(cy), k});
      }
    }
  }
  return out;
}

}  // namespace mackey
