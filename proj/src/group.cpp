#include "mackey/group.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace mackey {

Group::Group(int n, std::vector<int> table, std::string name)
    : n_(n), table_(std::move(table)), inv_(n, -1), orders_(n, 0), name_(std::move(name)) {
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b) {
      if (mul(a, b) == 0) {
        inv_[a] = b;
        break;
      }
    }
    int k = 1;
    for (Element x = a; x != 0; x = mul(x, a)) ++k;
    orders_[a] = k;
  }
}

Group Group::unchecked(int order, std::vector<int> table, std::string name) {
  return Group(order, std::move(table), std::move(name));
}

Group Group::from_table(std::vector<std::vector<int>> const& table, std::string name) {
  int const n = static_cast<int>(table.size());
  if (n == 0) throw ParseError("group table is empty");
  for (auto const& row : table) {
    if (static_cast<int>(row.size()) != n) throw ParseError("group table is not square");
    for (int v : row) {
      if (v < 0 || v >= n) throw ParseError("group table entry out of range");
    }
  }
  int e = -1;
  for (int a = 0; a < n && e < 0; ++a) {
    bool ok = true;
    for (int b = 0; b < n && ok; ++b) ok = table[a][b] == b && table[b][a] == b;
    if (ok) e = a;
  }
  if (e < 0) throw ParseError("group table has no identity");
  for (int a = 0; a < n; ++a) {
    std::vector<char> row(n, 0), col(n, 0);
    for (int b = 0; b < n; ++b) {
      row[table[a][b]] = 1;
      col[table[b][a]] = 1;
    }
    if (std::count(row.begin(), row.end(), 1) != n || std::count(col.begin(), col.end(), 1) != n) {
      throw ParseError("group table has a non-invertible element");
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (table[table[a][b]][c] != table[a][table[b][c]]) {
          throw ParseError("group table is not associative");
        }
      }
    }
  }
  // identity first, others in input order
  std::vector<int> order_new;
  order_new.push_back(e);
  for (int a = 0; a < n; ++a) {
    if (a != e) order_new.push_back(a);
  }
  std::vector<int> label(n);
  for (int i = 0; i < n; ++i) label[order_new[i]] = i;
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) t[static_cast<std::size_t>(i) * n + j] = label[table[order_new[i]][order_new[j]]];
  }
  return Group(n, std::move(t), std::move(name));
}

Group Group::from_permutations(std::vector<std::vector<int>> const& gens, std::string name) {
  std::size_t degree = gens.empty() ? 0 : gens.front().size();
  for (auto const& p : gens) {
    if (p.size() != degree) throw ParseError("permutation generators have different degrees");
    std::vector<char> seen(degree, 0);
    for (int v : p) {
      if (v < 0 || static_cast<std::size_t>(v) >= degree || seen[v]) {
        throw ParseError("generator is not a permutation");
      }
      seen[v] = 1;
    }
  }
  std::vector<int> id(degree);
  std::iota(id.begin(), id.end(), 0);
  auto compose_perm = [&](std::vector<int> const& p, std::vector<int> const& q) {
    std::vector<int> r(degree);
    for (std::size_t i = 0; i < degree; ++i) r[i] = p[q[i]];
    return r;
  };
  std::vector<std::vector<int>> elems{id};
  std::map<std::vector<int>, int> index{{id, 0}};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (auto const& g : gens) {
      auto r = compose_perm(elems[i], g);
      if (!index.count(r)) {
        index.emplace(r, static_cast<int>(elems.size()));
        elems.push_back(std::move(r));
      }
    }
  }
  int const n = static_cast<int>(elems.size());
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) t[static_cast<std::size_t>(a) * n + b] = index.at(compose_perm(elems[a], elems[b]));
  }
  Group G(n, std::move(t), std::move(name));
  G.perms_ = std::move(elems);
  return G;
}

std::optional<Element> Group::find_permutation(std::vector<int> const& perm) const {
  for (int a = 0; a < static_cast<int>(perms_.size()); ++a) {
    if (perms_[a] == perm) return a;
  }
  return std::nullopt;
}

std::vector<Subgroup> const& Group::subgroups() const {
  std::call_once(cache_->once, [this] {
    std::vector<Subgroup> cyclics;
    std::vector<Element> cyclic_gen;
    std::set<Subgroup> seen;
    for (Element g = 0; g < n_; ++g) {
      Subgroup c = generate(*this, {g});
      if (seen.insert(c).second) {
        cyclics.push_back(c);
        cyclic_gen.push_back(g);
      }
    }
    std::vector<Subgroup> frontier = cyclics;
    while (!frontier.empty()) {
      std::vector<Subgroup> next;
      for (auto const& A : frontier) {
        auto gens = generators(*this, A);
        for (std::size_t i = 0; i < cyclics.size(); ++i) {
          if (contains(A, cyclic_gen[i])) continue;
          auto g2 = gens;
          g2.push_back(cyclic_gen[i]);
          Subgroup B = generate(*this, g2);
          if (seen.insert(B).second) next.push_back(std::move(B));
        }
      }
      frontier = std::move(next);
    }
    std::vector<Subgroup> all(seen.begin(), seen.end());
    std::sort(all.begin(), all.end(), [](Subgroup const& a, Subgroup const& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    cache_->subgroups = std::move(all);
  });
  return cache_->subgroups;
}

// ---------------------------------------------------------------------------

Subgroup generate(Group const& G, std::vector<Element> const& gens) {
  std::vector<char> in(G.order(), 0);
  std::vector<Element> out{0};
  in[0] = 1;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (Element g : gens) {
      Element x = G.mul(out[i], g);
      if (!in[x]) {
        in[x] = 1;
        out.push_back(x);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Subgroup whole(Group const& G) {
  Subgroup s(G.order());
  std::iota(s.begin(), s.end(), 0);
  return s;
}

Subgroup trivial_subgroup() { return {0}; }

bool contains(Subgroup const& S, Element g) { return std::binary_search(S.begin(), S.end(), g); }

bool is_subgroup(Group const& G, Subgroup const& S) {
  if (S.empty() || !std::is_sorted(S.begin(), S.end())) return false;
  if (std::adjacent_find(S.begin(), S.end()) != S.end()) return false;
  if (S.front() != 0 || S.back() >= G.order()) return false;
  for (Element a : S) {
    for (Element b : S) {
      if (!contains(S, G.mul(a, b))) return false;
    }
  }
  return true;
}

bool is_normal(Group const& G, Subgroup const& S) {
  for (Element x = 0; x < G.order(); ++x) {
    for (Element s : S) {
      if (!contains(S, G.conj(x, s))) return false;
    }
  }
  return true;
}

std::vector<Subgroup> normal_subgroups(Group const& G) {
  std::vector<Subgroup> out;
  for (auto const& S : G.subgroups()) {
    if (is_normal(G, S)) out.push_back(S);
  }
  return out;
}

Subgroup conjugate(Group const& G, Subgroup const& S, Element x) {
  Subgroup out;
  out.reserve(S.size());
  for (Element s : S) out.push_back(G.conj(x, s));
  std::sort(out.begin(), out.end());
  return out;
}

Subgroup intersect(Subgroup const& A, Subgroup const& B) {
  Subgroup out;
  std::set_intersection(A.begin(), A.end(), B.begin(), B.end(), std::back_inserter(out));
  return out;
}

Subgroup product_set(Group const& G, Subgroup const& A, Subgroup const& B) {
  std::vector<char> in(G.order(), 0);
  for (Element a : A) {
    for (Element b : B) in[G.mul(a, b)] = 1;
  }
  Subgroup out;
  for (Element g = 0; g < G.order(); ++g) {
    if (in[g]) out.push_back(g);
  }
  return out;
}

Subgroup normalizer(Group const& G, Subgroup const& S) {
  Subgroup out;
  for (Element x = 0; x < G.order(); ++x) {
    if (conjugate(G, S, x) == S) out.push_back(x);
  }
  return out;
}

Subgroup centralizer(Group const& G, Subgroup const& S) {
  Subgroup out;
  for (Element x = 0; x < G.order(); ++x) {
    bool ok = true;
    for (Element s : S) {
      if (G.mul(x, s) != G.mul(s, x)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(x);
  }
  return out;
}

Subgroup center(Group const& G) { return centralizer(G, whole(G)); }

Subgroup conjugacy_rep(Group const& G, Subgroup const& S) {
  Subgroup best = S;
  for (Element x = 1; x < G.order(); ++x) {
    Subgroup c = conjugate(G, S, x);
    if (c < best) best = std::move(c);
  }
  return best;
}

std::vector<Subgroup> subgroup_classes(Group const& G) {
  std::set<Subgroup> reps;
  for (auto const& S : G.subgroups()) reps.insert(conjugacy_rep(G, S));
  std::vector<Subgroup> out(reps.begin(), reps.end());
  std::sort(out.begin(), out.end(), [](Subgroup const& a, Subgroup const& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

std::vector<Element> generators(Group const& G, Subgroup const& S) {
  std::vector<Element> cand(S.begin(), S.end());
  std::stable_sort(cand.begin(), cand.end(),
                   [&](Element a, Element b) { return G.element_order(a) > G.element_order(b); });
  std::vector<Element> gens;
  Subgroup cur{0};
  for (Element s : cand) {
    if (cur.size() == S.size()) break;
    if (contains(cur, s)) continue;
    gens.push_back(s);
    cur = generate(G, gens);
  }
  return gens;
}

std::vector<Element> generators(Group const& G) { return generators(G, whole(G)); }

int rank(Group const& G) {
  int const n = G.order();
  if (n == 1) return 0;
  int const upper = static_cast<int>(generators(G).size());
  for (int k = 1; k < upper; ++k) {
    // combinations of k distinct non-identity elements
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 1);
    while (true) {
      if (static_cast<int>(generate(G, idx).size()) == n) return k;
      int i = k - 1;
      while (i >= 0 && idx[i] == n - k + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return upper;
}

std::vector<DoubleCoset> double_cosets(Group const& G, Subgroup const& H, Subgroup const& K) {
  if (!is_subgroup(G, H) || !is_subgroup(G, K)) throw TypeError("double_cosets: arguments are not subgroups");
  std::vector<char> seen(G.order(), 0);
  std::vector<DoubleCoset> out;
  for (Element g = 0; g < G.order(); ++g) {
    if (seen[g]) continue;
    int size = 0;
    for (Element h : H) {
      Element hg = G.mul(h, g);
      for (Element k : K) {
        Element x = G.mul(hg, k);
        if (!seen[x]) {
          seen[x] = 1;
          ++size;
        }
      }
    }
    out.push_back({g, size});
  }
  return out;
}

// ---------------------------------------------------------------------------

Hom make_hom(GroupPtr src, GroupPtr tgt, std::vector<Element> map) {
  if (static_cast<int>(map.size()) != src->order()) throw TypeError("homomorphism has the wrong domain size");
  for (Element v : map) {
    if (v < 0 || v >= tgt->order()) throw TypeError("homomorphism value out of range");
  }
  for (Element a = 0; a < src->order(); ++a) {
    for (Element b = 0; b < src->order(); ++b) {
      if (map[src->mul(a, b)] != tgt->mul(map[a], map[b])) throw TypeError("map is not a homomorphism");
    }
  }
  return Hom{std::move(src), std::move(tgt), std::move(map)};
}

Hom identity_hom(GroupPtr G) {
  std::vector<Element> m(G->order());
  std::iota(m.begin(), m.end(), 0);
  return Hom{G, G, std::move(m)};
}

Hom compose(Hom const& g, Hom const& f) {
  if (!(*f.tgt == *g.src)) throw TypeError("compose: homomorphisms are not composable");
  std::vector<Element> m(f.map.size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = g.map[f.map[i]];
  return Hom{f.src, g.tgt, std::move(m)};
}

Hom inverse(Hom const& f) {
  if (!is_isomorphism(f)) throw TypeError("inverse: not an isomorphism");
  std::vector<Element> m(f.map.size());
  for (std::size_t i = 0; i < m.size(); ++i) m[f.map[i]] = static_cast<Element>(i);
  return Hom{f.tgt, f.src, std::move(m)};
}

Hom conjugation(GroupPtr G, Element x) {
  std::vector<Element> m(G->order());
  for (Element g = 0; g < G->order(); ++g) m[g] = G->conj(x, g);
  return Hom{G, G, std::move(m)};
}

Hom conjugated(Hom const& f, Element x) {
  Hom out = f;
  for (auto& v : out.map) v = f.tgt->conj(x, v);
  return out;
}

Subgroup kernel(Hom const& f) {
  Subgroup out;
  for (Element g = 0; g < f.src->order(); ++g) {
    if (f.map[g] == 0) out.push_back(g);
  }
  return out;
}

Subgroup image(Hom const& f) {
  Subgroup out(f.map.begin(), f.map.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_injective(Hom const& f) { return kernel(f).size() == 1; }
bool is_surjective(Hom const& f) { return static_cast<int>(image(f).size()) == f.tgt->order(); }
bool is_isomorphism(Hom const& f) { return f.src->order() == f.tgt->order() && is_injective(f); }

namespace {

// Extends generator images to a homomorphism if the assignment is consistent.
std::optional<std::vector<Element>> extend(Group const& S, Group const& T, std::vector<Element> const& gens,
                                           std::vector<Element> const& imgs) {
  std::vector<Element> m(S.order(), -1);
  m[0] = 0;
  std::vector<Element> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    Element s = queue[i];
    for (std::size_t j = 0; j < gens.size(); ++j) {
      Element t = S.mul(s, gens[j]);
      Element v = T.mul(m[s], imgs[j]);
      if (m[t] < 0) {
        m[t] = v;
        queue.push_back(t);
      } else if (m[t] != v) {
        return std::nullopt;
      }
    }
  }
  return m;
}

}  // namespace

std::vector<Hom> all_homs(GroupPtr S, GroupPtr T, Budget& budget) {
  auto gens = generators(*S);
  std::vector<std::vector<Element>> choices(gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j) {
    for (Element t = 0; t < T->order(); ++t) {
      if (S->element_order(gens[j]) % T->element_order(t) == 0) choices[j].push_back(t);
    }
  }
  std::vector<Hom> out;
  std::vector<std::size_t> idx(gens.size(), 0);
  std::vector<Element> imgs(gens.size());
  while (true) {
    budget.spend();
    for (std::size_t j = 0; j < gens.size(); ++j) imgs[j] = choices[j][idx[j]];
    if (auto m = extend(*S, *T, gens, imgs)) out.push_back(Hom{S, T, std::move(*m)});
    std::size_t j = gens.size();
    while (j > 0) {
      --j;
      if (++idx[j] < choices[j].size()) break;
      idx[j] = 0;
      if (j == 0) return out;
    }
    if (gens.empty()) return out;
  }
}

std::vector<Hom> all_homs(GroupPtr S, GroupPtr T) {
  Budget b;
  return all_homs(std::move(S), std::move(T), b);
}

std::vector<Hom> isomorphisms(GroupPtr S, GroupPtr T) {
  if (S->order() != T->order()) return {};
  std::vector<Hom> out;
  for (auto& h : all_homs(S, T)) {
    if (is_injective(h)) out.push_back(std::move(h));
  }
  return out;
}

std::optional<Hom> find_isomorphism(GroupPtr S, GroupPtr T) {
  if (S->order() != T->order()) return std::nullopt;
  auto isos = isomorphisms(S, T);
  if (isos.empty()) return std::nullopt;
  return isos.front();
}

// ---------------------------------------------------------------------------

Embedding subgroup_group(GroupPtr G, Subgroup const& S) {
  if (!is_subgroup(*G, S)) throw TypeError("not a subgroup: " + format_subgroup(S));
  int const k = static_cast<int>(S.size());
  std::vector<int> pos(G->order(), -1);
  for (int i = 0; i < k; ++i) pos[S[i]] = i;
  std::vector<int> t(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) t[static_cast<std::size_t>(i) * k + j] = pos[G->mul(S[i], S[j])];
  }
  auto H = share(Group::unchecked(k, std::move(t)));
  return {H, Hom{H, G, S}};
}

Quotient quotient(GroupPtr G, Subgroup const& N) {
  if (!is_subgroup(*G, N) || !is_normal(*G, N)) throw TypeError("not a normal subgroup: " + format_subgroup(N));
  int const n = G->order();
  std::vector<int> label(n, -1);
  std::vector<Element> reps;
  for (Element g = 0; g < n; ++g) {
    if (label[g] >= 0) continue;
    int id = static_cast<int>(reps.size());
    reps.push_back(g);
    for (Element x : N) label[G->mul(g, x)] = id;
  }
  int const q = static_cast<int>(reps.size());
  std::vector<int> t(static_cast<std::size_t>(q) * q);
  for (int i = 0; i < q; ++i) {
    for (int j = 0; j < q; ++j) t[static_cast<std::size_t>(i) * q + j] = label[G->mul(reps[i], reps[j])];
  }
  auto Q = share(Group::unchecked(q, std::move(t)));
  return {Q, Hom{G, Q, std::move(label)}};
}

GroupPtr direct_product(GroupPtr G, GroupPtr H) {
  int const a = G->order(), b = H->order(), n = a * b;
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      t[static_cast<std::size_t>(x) * n + y] = G->mul(x / b, y / b) * b + H->mul(x % b, y % b);
    }
  }
  std::string name;
  if (!G->name().empty() && !H->name().empty()) name = G->name() + "x" + H->name();
  return share(Group::unchecked(n, std::move(t), std::move(name)));
}

PairSubgroup pair_subgroup(GroupPtr S, GroupPtr T, std::vector<std::pair<Element, Element>> const& elems) {
  int const k = static_cast<int>(elems.size());
  int const m = T->order();
  std::vector<int> pos(static_cast<std::size_t>(S->order()) * m, -1);
  for (int i = 0; i < k; ++i) pos[static_cast<std::size_t>(elems[i].first) * m + elems[i].second] = i;
  if (k == 0 || elems[0] != std::pair<Element, Element>{0, 0}) throw TypeError("pair_subgroup: identity must come first");
  std::vector<int> tab(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      Element s = S->mul(elems[i].first, elems[j].first);
      Element t = T->mul(elems[i].second, elems[j].second);
      int p = pos[static_cast<std::size_t>(s) * m + t];
      if (p < 0) throw TypeError("pair_subgroup: set is not closed under multiplication");
      tab[static_cast<std::size_t>(i) * k + j] = p;
    }
  }
  auto P = share(Group::unchecked(k, std::move(tab)));
  std::vector<Element> m1(k), m2(k);
  for (int i = 0; i < k; ++i) {
    m1[i] = elems[i].first;
    m2[i] = elems[i].second;
  }
  return {P, Hom{P, std::move(S), std::move(m1)}, Hom{P, std::move(T), std::move(m2)}};
}

FibreProduct fibre_product(Hom const& a, Hom const& b) {
  if (!(*a.tgt == *b.tgt)) throw TypeError("fibre_product: maps have different targets");
  std::vector<std::pair<Element, Element>> elems;
  for (Element s = 0; s < a.src->order(); ++s) {
    for (Element t = 0; t < b.src->order(); ++t) {
      if (a(s) == b(t)) elems.emplace_back(s, t);
    }
  }
  auto P = pair_subgroup(a.src, b.src, elems);
  return {P.group, P.pr1, P.pr2};
}

Hom induced_on_quotients(Hom const& p1, Hom const& p2) {
  if (!(*p1.src == *p2.src)) throw TypeError("induced_on_quotients: different domains");
  std::vector<Element> m(p1.tgt->order(), -1);
  for (Element g = 0; g < p1.src->order(); ++g) {
    Element q = p1(g);
    if (m[q] < 0) {
      m[q] = p2(g);
    } else if (m[q] != p2(g)) {
      throw TypeError("induced_on_quotients: kernel containment fails");
    }
  }
  for (Element v : m) {
    if (v < 0) throw TypeError("induced_on_quotients: first map is not surjective");
  }
  return Hom{p1.tgt, p2.tgt, std::move(m)};
}

// ---------------------------------------------------------------------------

GroupPtr cyclic(int n) {
  if (n < 1) throw ParseError("cyclic group needs n >= 1");
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) t[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
  }
  return share(Group::unchecked(n, std::move(t), n == 1 ? "1" : "C" + std::to_string(n)));
}

GroupPtr trivial_group() { return cyclic(1); }

GroupPtr symmetric(int n) {
  if (n < 1) throw ParseError("symmetric group needs n >= 1");
  std::vector<std::vector<int>> gens;
  if (n >= 2) {
    std::vector<int> t(n), c(n);
    std::iota(t.begin(), t.end(), 0);
    std::swap(t[0], t[1]);
    for (int i = 0; i < n; ++i) c[i] = (i + 1) % n;
    gens.push_back(t);
    if (n > 2) gens.push_back(c);
  } else {
    gens.push_back({0});
  }
  return share(Group::from_permutations(gens, n == 1 ? "1" : "S" + std::to_string(n)));
}

GroupPtr dihedral(int n) {
  if (n < 3) throw ParseError("dihedral group needs n >= 3");
  std::vector<int> r(n), s(n);
  for (int i = 0; i < n; ++i) {
    r[i] = (i + 1) % n;
    s[i] = (n - i) % n;
  }
  return share(Group::from_permutations({r, s}, "D" + std::to_string(n)));
}

GroupPtr klein() {
  auto g = direct_product(cyclic(2), cyclic(2));
  return g;
}

GroupPtr quaternion() {
  // element 2u + s stands for (-1)^s times the unit u in {1, i, j, k}
  static int const unit[4][4][2] = {
      {{0, 0}, {1, 0}, {2, 0}, {3, 0}},
      {{1, 0}, {0, 1}, {3, 0}, {2, 1}},
      {{2, 0}, {3, 1}, {0, 1}, {1, 0}},
      {{3, 0}, {2, 0}, {1, 1}, {0, 1}},
  };
  std::vector<int> t(64);
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      auto const* p = unit[a / 2][b / 2];
      int sign = (a % 2 + b % 2 + p[1]) % 2;
      t[a * 8 + b] = 2 * p[0] + sign;
    }
  }
  return share(Group::unchecked(8, std::move(t), "Q8"));
}

namespace {

GroupPtr named_factor(std::string const& tok) {
  auto num = [&](std::size_t from) {
    if (tok.size() <= from) throw ParseError("unknown group name: " + tok);
    for (std::size_t i = from; i < tok.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(tok[i]))) throw ParseError("unknown group name: " + tok);
    }
    return std::stoi(tok.substr(from));
  };
  if (tok == "1") return trivial_group();
  if (tok == "Q8") return quaternion();
  if (tok == "V4" || tok == "K4") return klein();
  if (tok.empty()) throw ParseError("empty group name");
  switch (tok[0]) {
    case 'C':
      return cyclic(num(1));
    case 'S': {
      int n = num(1);
      if (n > 5) throw BoundExceeded("symmetric groups are limited to n <= 5");
      return symmetric(n);
    }
    case 'D':
      return dihedral(num(1));
    default:
      throw ParseError("unknown group name: " + tok);
  }
}

}  // namespace

GroupPtr named_group(std::string const& name) {
  static std::mutex mu;
  static std::map<std::string, GroupPtr> registry;
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = registry.find(name); it != registry.end()) return it->second;
  std::vector<std::string> parts;
  std::string cur;
  for (char c : name) {
    if (c == 'x' || c == '*') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  GroupPtr G = named_factor(parts[0]);
  for (std::size_t i = 1; i < parts.size(); ++i) G = direct_product(G, named_factor(parts[i]));
  auto named = std::make_shared<Group>(*G);
  named->set_name(name);
  GroupPtr out = named;
  registry.emplace(name, out);
  return out;
}

std::string format_subgroup(Subgroup const& S) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < S.size(); ++i) os << (i ? "," : "") << S[i];
  os << '}';
  return os.str();
}

}  // namespace mackey
