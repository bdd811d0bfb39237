#include "mackey/spannable.hpp"

#include <algorithm>

namespace mackey {

SpannablePair pair_all() {
  return {"all", [](GroupoidFunctor const&) { return true; }, [](GroupoidFunctor const&) { return true; }};
}

SpannablePair pair_faithful_right() {
  return {"faithful_right", [](GroupoidFunctor const&) { return true; },
          [](GroupoidFunctor const& F) { return is_faithful(F); }};
}

SpannablePair pair_faithful_both() {
  return {"faithful_both", [](GroupoidFunctor const& F) { return is_faithful(F); },
          [](GroupoidFunctor const& F) { return is_faithful(F); }};
}

SpannablePair pair_rejecting_identities() {
  return {"reject_identities", [](GroupoidFunctor const&) { return true; },
          [](GroupoidFunctor const& F) {
            return !(same_groupoid(F.source, F.target) && same_functor(F, identity_functor(F.source)));
          }};
}

namespace {

struct Recorder {
  SpannableReport& r;
  void fail(bool SpannableReport::*axiom, std::string const& what) {
    if (r.detail.empty()) r.detail = what;
    r.*axiom = false;
  }
};

std::string arrow_name(std::vector<std::string> const& names, int a, int b) { return names[a] + "→" + names[b]; }

bool same_nat(NatTransformation const& a, NatTransformation const& b) { return a.components == b.components; }

}  // namespace

SpannableReport check_spannable(SpannablePair const& pair, std::vector<GroupoidPtr> const& corpus) {
  SpannableReport r;
  r.pair = pair.name;
  Recorder rec{r};
  int const nb = static_cast<int>(corpus.size());
  std::vector<GroupoidPtr> objs = corpus;
  std::vector<std::string> names;
  for (int i = 0; i < nb; ++i) names.push_back("#" + std::to_string(i));
  for (int i = 0; i < nb; ++i) {
    for (int j = i; j < nb; ++j) {
      objs.push_back(disjoint_union({corpus[i], corpus[j]}).groupoid);
      names.push_back(names[i] + "⊔" + names[j]);
    }
  }
  int const n = static_cast<int>(objs.size());
  std::vector<std::vector<std::vector<GroupoidFunctor>>> cells(n, std::vector<std::vector<GroupoidFunctor>>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (auto& F : enumerate_functors(objs[a], objs[b])) {
        if (pair.is_cell(F)) cells[a][b].push_back(std::move(F));
      }
    }
  }

  // (a) equivalences over all objects; isomorphism and composition closure on the base corpus.
  for (int a = 0; a < n; ++a) {
    if (!pair.is_cell(identity_functor(objs[a]))) rec.fail(&SpannableReport::axiom_a, "identity of " + names[a] + " is not a 1-cell");
    for (int b = 0; b < n; ++b) {
      for (auto const& F : cells[a][b]) {
        ++r.instances;
        if (is_equivalence(F) && !pair.in_j(F)) {
          rec.fail(&SpannableReport::axiom_a, "an equivalence " + arrow_name(names, a, b) + " is not in J");
        }
      }
    }
  }
  for (int a = 0; a < nb; ++a) {
    for (int b = 0; b < nb; ++b) {
      for (auto const& F : cells[a][b]) {
        if (!pair.in_j(F)) continue;
        for (auto const& F2 : cells[a][b]) {
          ++r.instances;
          if (!pair.in_j(F2) && functor_iso(F, F2)) {
            rec.fail(&SpannableReport::axiom_a, "J is not closed under isomorphism on " + arrow_name(names, a, b));
          }
        }
        for (int c = 0; c < nb; ++c) {
          for (auto const& G : cells[b][c]) {
            if (!pair.in_j(G)) continue;
            ++r.instances;
            auto GF = compose(G, F);
            if (!pair.is_cell(GF) || !pair.in_j(GF)) {
              rec.fail(&SpannableReport::axiom_a, "J is not closed under composition " + arrow_name(names, a, b) + "→" + names[c]);
            }
          }
        }
      }
    }
  }

  // (b) cospans X -i-> Z <-u- Y of the base corpus with i in J.
  for (int x = 0; x < nb; ++x) {
    for (int z = 0; z < nb; ++z) {
      for (auto const& i : cells[x][z]) {
        if (!pair.in_j(i)) continue;
        for (int y = 0; y < nb; ++y) {
          for (auto const& u : cells[y][z]) {
            ++r.instances;
            auto ic = iso_comma(i, u);
            std::string tag = "iso-comma over " + arrow_name(names, x, z) + "←" + names[y];
            if (!is_mackey_square(iso_comma_square(ic, i, u))) rec.fail(&SpannableReport::axiom_b, tag + " is not Mackey");
            if (!pair.is_cell(ic.proj_left) || !pair.is_cell(ic.proj_right)) {
              rec.fail(&SpannableReport::axiom_b, tag + " has a projection outside the 1-cells");
            }
            if (!pair.in_j(ic.proj_right)) rec.fail(&SpannableReport::axiom_b, tag + " has its parallel leg outside J");
          }
        }
      }
    }
  }

  // (c) copairings of two 1-cells from the base corpus into a common target.
  for (int y = 0; y < nb; ++y) {
    for (int a = 0; a < nb; ++a) {
      for (int b = a; b < nb; ++b) {
        for (auto const& u1 : cells[a][y]) {
          for (auto const& u2 : cells[b][y]) {
            ++r.instances;
            auto c = copair({u1, u2});
            bool want = pair.in_j(u1) && pair.in_j(u2);
            if (!pair.is_cell(c) || pair.in_j(c) != want) {
              rec.fail(&SpannableReport::axiom_c, "copairing into " + names[y] + " from " + names[a] + "," + names[b]);
            }
          }
        }
      }
    }
  }
  return r;
}

namespace {

struct OverObject {
  GroupoidPtr groupoid;
  GroupoidFunctor embedding;
  std::string name;
};

/// A 1-cell (u, θ: j∘u ⇒ i) from (X, i) to (Y, j).
struct OverCell {
  int source;
  int target;
  GroupoidFunctor u;
  NatTransformation theta;
};

NatTransformation retarget(NatTransformation t, GroupoidFunctor from, GroupoidFunctor to) {
  t.from = std::move(from);
  t.to = std::move(to);
  return t;
}

}  // namespace

SpannableReport check_spannable_over_g(GroupPtr const& G) {
  SpannableReport r;
  r.pair = "over_G(" + G->name() + ")";
  Recorder rec{r};
  auto GG = group_groupoid(G);
  std::vector<OverObject> objs;
  std::vector<GSet> orbit;
  for (auto const& H : subgroup_classes(*G)) {
    auto X = coset_gset(G, H);
    auto T = transport_groupoid(X);
    T.projection.target = GG;
    objs.push_back({T.groupoid, T.projection, "G/" + format_subgroup(H)});
    orbit.push_back(X);
  }
  int const no = static_cast<int>(objs.size());

  auto valid_cell = [&](OverCell const& c) {
    try {
      check_nat(c.theta);
      return same_functor(c.theta.from, compose(objs[c.target].embedding, c.u)) &&
             same_functor(c.theta.to, objs[c.source].embedding);
    } catch (Error const&) {
      return false;
    }
  };

  std::vector<OverCell> cells;
  for (int a = 0; a < no; ++a) {
    auto autos = enumerate_nat_transfs(objs[a].embedding, objs[a].embedding);
    for (int b = 0; b < no; ++b) {
      for (auto const& f : all_gmaps(orbit[a], orbit[b])) {
        auto u = transport_functor(f, objs[a].groupoid, objs[b].groupoid);
        auto ju = compose(objs[b].embedding, u);
        for (auto const& rho : autos) cells.push_back({a, b, u, retarget(rho, ju, objs[a].embedding)});
      }
    }
  }
  for (auto const& c : cells) {
    ++r.instances;
    if (!valid_cell(c)) rec.fail(&SpannableReport::axiom_a, "a sampled 1-cell " + objs[c.source].name + "→" + objs[c.target].name + " is ill-formed");
    if (!is_faithful(objs[c.source].embedding)) rec.fail(&SpannableReport::axiom_a, objs[c.source].name + " is not embedded faithfully");
  }

  // (a) J = all: identities are 1-cells and composites of 1-cells are 1-cells.
  for (int a = 0; a < no; ++a) {
    OverCell id{a, a, identity_functor(objs[a].groupoid), identity_nat(objs[a].embedding)};
    if (!valid_cell(id)) rec.fail(&SpannableReport::axiom_a, "identity of " + objs[a].name + " is ill-formed");
  }
  for (auto const& c1 : cells) {
    for (auto const& c2 : cells) {
      if (c2.source != c1.target) continue;
      ++r.instances;
      auto vu = compose(c2.u, c1.u);
      auto theta = vertical(c1.theta, whisker_right(c2.theta, c1.u));
      if (!valid_cell({c1.source, c2.target, vu, theta})) {
        rec.fail(&SpannableReport::axiom_a, "composite through " + objs[c1.target].name + " is ill-formed");
      }
    }
  }

  // (b) iso-comma of underlying functors, embedded through the left leg.
  for (auto const& ci : cells) {
    for (auto const& cu : cells) {
      if (cu.target != ci.target) continue;
      ++r.instances;
      auto const& iZ = objs[ci.target].embedding;
      auto ic = iso_comma(ci.u, cu.u);
      std::string tag = "iso-comma over " + objs[ci.source].name + "→" + objs[ci.target].name + "←" + objs[cu.source].name;
      if (!is_mackey_square(iso_comma_square(ic, ci.u, cu.u))) {
        rec.fail(&SpannableReport::axiom_b, tag + " is not Mackey");
        continue;
      }
      auto iP = compose(objs[ci.source].embedding, ic.proj_left);
      if (!is_faithful(iP)) rec.fail(&SpannableReport::axiom_b, tag + " has a non-faithful apex embedding");
      auto thp = whisker_right(ci.theta, ic.proj_left);
      auto thq_v = whisker_right(cu.theta, ic.proj_right);
      auto iz_gamma = whisker_left(iZ, ic.two_cell);
      try {
        auto theta_q = vertical(thp, vertical(inverse(iz_gamma), inverse(thq_v)));
        check_nat(theta_q);
        auto back = vertical(vertical(theta_q, thq_v), iz_gamma);
        if (!same_nat(back, thp)) rec.fail(&SpannableReport::axiom_b, tag + " has an incompatible 2-cell");
      } catch (Error const& e) {
        rec.fail(&SpannableReport::axiom_b, tag + ": " + e.what());
      }
    }
  }

  // (c) copairings (u1, θ1) ⊔ (u2, θ2) out of the coproduct object.
  for (std::size_t p = 0; p < cells.size(); ++p) {
    for (std::size_t q = p; q < cells.size(); ++q) {
      auto const& c1 = cells[p];
      auto const& c2 = cells[q];
      if (c1.target != c2.target) continue;
      ++r.instances;
      auto D = disjoint_union({objs[c1.source].groupoid, objs[c2.source].groupoid});
      auto iD = copair({objs[c1.source].embedding, objs[c2.source].embedding});
      auto u = copair({c1.u, c2.u});
      auto comps = c1.theta.components;
      comps.insert(comps.end(), c2.theta.components.begin(), c2.theta.components.end());
      NatTransformation theta{compose(objs[c1.target].embedding, u), iD, comps};
      bool ok = is_faithful(iD) && same_groupoid(u.source, D.groupoid);
      try {
        check_nat(theta);
      } catch (Error const&) {
        ok = false;
      }
      if (!ok) rec.fail(&SpannableReport::axiom_c, "copairing into " + objs[c1.target].name + " is ill-formed");
    }
  }
  return r;
}

BurnsideTable over_g_burnside_table(GroupPtr const& G, int bound) {
  if (G->order() > bound) throw BoundExceeded("over_g_burnside_table: group order exceeds bound " + std::to_string(bound));
  BurnsideTable t{G, subgroup_classes(*G), {}};
  auto GG = group_groupoid(G);
  std::vector<GroupoidFunctor> incl;
  for (auto const& H : t.basis) {
    auto e = subgroup_group(G, H);
    incl.push_back(functor_from_hom(e.incl, group_groupoid(e.group), GG));
  }
  int const k = static_cast<int>(t.basis.size());
  t.product.assign(k, std::vector<LinComb<int>>(k));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      auto ic = iso_comma(incl[i], incl[j]);
      auto iP = compose(incl[i], ic.proj_left);
      for (auto const& comp : connected_components(ic.apex)) {
        auto vg = comp.groupoid->vertex_group(0);
        Subgroup img;
        for (int a : vg.arrows) img.push_back(iP.arr(comp.inclusion.arr(a)));
        std::sort(img.begin(), img.end());
        img.erase(std::unique(img.begin(), img.end()), img.end());
        auto rep = conjugacy_rep(*G, img);
        auto it = std::find(t.basis.begin(), t.basis.end(), rep);
        if (it == t.basis.end()) throw Error("over_g_burnside_table: unclassified apex component");
        t.product[i][j].add(static_cast<int>(it - t.basis.begin()), 1);
      }
    }
  }
  return t;
}

}  // namespace mackey
