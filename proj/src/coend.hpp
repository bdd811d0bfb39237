#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "mackey/biset.hpp"

namespace mackey::detail {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

/// Numbers the classes of `uf` over `members` (ids < n) by least member.
inline std::vector<int> class_numbers(UnionFind& uf, std::vector<int> const& members, int n, int& count) {
  std::vector<int> cls(n, -1), root_cls(n, -1);
  count = 0;
  for (int m : members) {
    int r = uf.find(m);
    if (root_cls[r] < 0) root_cls[r] = count++;
    cls[m] = root_cls[r];
  }
  return cls;
}

/// Builds the quotient biset of a set of "pairs" by a union-find relation.
/// act_left(g, p) / act_right(p, h) give pair ids (or -1) and must descend to
/// classes; checked on every member of every class.
template <class OL, class OR, class AL, class AR>
Biset quotient_biset(GroupoidPtr const& source, GroupoidPtr const& target, std::vector<int> const& members,
                     UnionFind& uf, int npairs, OL const& src_of, OR const& tgt_of, AL const& act_l, AR const& act_r) {
  int count = 0;
  auto cls = class_numbers(uf, members, npairs, count);
  std::vector<int> rep(count, -1), so(count), to(count);
  for (int m : members) {
    int c = cls[m];
    if (rep[c] < 0) {
      rep[c] = m;
      so[c] = src_of(m);
      to[c] = tgt_of(m);
    }
  }
  Biset U = make_biset(
      source, target, so, to, [&](int g, int u) { return cls[act_l(g, rep[u])]; },
      [&](int u, int h) { return cls[act_r(rep[u], h)]; });
  for (int m : members) {
    int c = cls[m];
    if (src_of(m) != so[c] || tgt_of(m) != to[c]) throw Error("coend quotient mixes objects");
    for (int g = 0; g < target->num_arrows(); ++g) {
      if (target->src(g) == to[c] && cls[act_l(g, m)] != U.act_left(g, c)) throw Error("left action not well defined");
    }
    for (int h = 0; h < source->num_arrows(); ++h) {
      if (source->tgt(h) == so[c] && cls[act_r(m, h)] != U.act_right(c, h)) {
        throw Error("right action not well defined");
      }
    }
  }
  return U;
}

}  // namespace mackey::detail
