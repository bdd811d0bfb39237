#include "mackey/json_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace mackey::io {

namespace {

template <class F>
auto guarded(char const* what, F const& f) -> decltype(f()) {
  try {
    return f();
  } catch (json::exception const& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

int as_index(json const& v, int size, char const* what) {
  int i = v.get<int>();
  if (i < 0 || i >= size) throw ParseError(std::string(what) + " index " + std::to_string(i) + " out of range");
  return i;
}

/// [[k, v]] pairs covering 0..size-1 exactly once.
std::vector<int> total_map(json const& pairs, int size, int range, char const* what) {
  std::vector<int> out(size, -1);
  for (auto const& p : pairs) {
    if (!p.is_array() || p.size() != 2) throw ParseError(std::string(what) + " entries must be [from, to]");
    int k = as_index(p[0], size, what);
    if (out[k] != -1) throw ParseError(std::string(what) + " maps " + std::to_string(k) + " twice");
    out[k] = as_index(p[1], range, what);
  }
  for (int k = 0; k < size; ++k) {
    if (out[k] == -1) throw ParseError(std::string(what) + " misses " + std::to_string(k));
  }
  return out;
}

json pairs(std::vector<int> const& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.size(); ++i) out.push_back({static_cast<int>(i), m[i]});
  return out;
}

Subgroup subset_from_json(json const& j) {
  auto s = j.get<std::vector<int>>();
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

}  // namespace

GroupPtr group_from_json(json const& j) {
  return guarded("group", [&]() -> GroupPtr {
    if (j.is_string()) {
      try {
        return named_group(j.get<std::string>());
      } catch (Error const& e) {
        throw ParseError(e.what());
      }
    }
    if (!j.is_object()) throw ParseError("group reference must be a name or an object");
    std::string name = j.value("name", "");
    if (j.contains("table")) return share(Group::from_table(j.at("table").get<std::vector<std::vector<int>>>(), name));
    if (j.contains("permutations")) {
      return share(Group::from_permutations(j.at("permutations").get<std::vector<std::vector<int>>>(), name));
    }
    throw ParseError("group object needs \"table\" or \"permutations\"");
  });
}

json group_to_json(Group const& G) {
  std::vector<std::vector<int>> rows(G.order(), std::vector<int>(G.order()));
  for (Element a = 0; a < G.order(); ++a) {
    for (Element b = 0; b < G.order(); ++b) rows[a][b] = G.mul(a, b);
  }
  json out{{"table", rows}};
  if (!G.name().empty()) out["name"] = G.name();
  return out;
}

GroupoidPtr groupoid_from_json(json const& j) {
  return guarded("groupoid", [&]() -> GroupoidPtr {
    if (j.is_object() && j.contains("group")) return group_groupoid(group_from_json(j.at("group")));
    auto objects = j.at("objects").get<std::vector<int>>();
    int const n = static_cast<int>(objects.size());
    for (int x = 0; x < n; ++x) {
      if (objects[x] != x) throw ParseError("objects must be 0..n-1 in order");
    }
    auto const& arr = j.at("arrows");
    int const m = static_cast<int>(arr.size());
    std::vector<FiniteGroupoid::ArrowData> arrows(m, {-1, -1});
    for (auto const& a : arr) {
      int id = as_index(a.at("id"), m, "arrow");
      if (arrows[id].src != -1) throw ParseError("arrow " + std::to_string(id) + " listed twice");
      arrows[id] = {as_index(a.at("src"), n, "object"), as_index(a.at("tgt"), n, "object")};
    }
    auto ids = total_map(j.at("identity"), n, m, "identity");
    std::map<std::pair<int, int>, int> table;
    for (auto const& c : j.at("compose")) {
      if (!c.is_array() || c.size() != 3) throw ParseError("compose entries must be [g, f, g∘f]");
      int g = as_index(c[0], m, "arrow"), f = as_index(c[1], m, "arrow"), gf = as_index(c[2], m, "arrow");
      if (arrows[f].tgt != arrows[g].src) throw ParseError("compose entry for a non-composable pair");
      if (!table.emplace(std::pair{g, f}, gf).second) throw ParseError("compose entry listed twice");
    }
    for (int f = 0; f < m; ++f) {
      for (int g = 0; g < m; ++g) {
        if (arrows[f].tgt == arrows[g].src && !table.count({g, f})) {
          throw ParseError("compose table misses " + std::to_string(g) + "∘" + std::to_string(f));
        }
      }
    }
    auto G = FiniteGroupoid::build(n, arrows, ids, [&](int g, int f) { return table.at({g, f}); });
    G.check_axioms();
    return share(std::move(G));
  });
}

json groupoid_to_json(FiniteGroupoid const& G) {
  json objects = json::array(), arrows = json::array(), compose = json::array(), identity = json::array();
  for (int x = 0; x < G.num_objects(); ++x) {
    objects.push_back(x);
    identity.push_back({x, G.identity(x)});
  }
  for (int a = 0; a < G.num_arrows(); ++a) arrows.push_back({{"id", a}, {"src", G.src(a)}, {"tgt", G.tgt(a)}});
  for (int g = 0; g < G.num_arrows(); ++g) {
    for (int f : G.in_arrows(G.src(g))) compose.push_back({g, f, G.compose(g, f)});
  }
  return {{"objects", objects}, {"arrows", arrows}, {"compose", compose}, {"identity", identity}};
}

GroupoidFunctor functor_from_json(json const& j, GroupoidPtr const& source, GroupoidPtr const& target) {
  return guarded("functor", [&] {
    auto obj = total_map(j.at("object_map"), source->num_objects(), target->num_objects(), "object_map");
    auto arr = total_map(j.at("arrow_map"), source->num_arrows(), target->num_arrows(), "arrow_map");
    try {
      return make_functor(source, target, std::move(obj), std::move(arr));
    } catch (TypeError const& e) {
      throw ParseError(std::string("not a functor: ") + e.what());
    }
  });
}

json functor_to_json(GroupoidFunctor const& F) {
  return {{"object_map", pairs(F.object_map)}, {"arrow_map", pairs(F.arrow_map)}};
}

GroupoidFunctor functor_file_from_json(json const& j) {
  return guarded("functor", [&] {
    return functor_from_json(j, groupoid_from_json(j.at("source")), groupoid_from_json(j.at("target")));
  });
}

json functor_file_to_json(GroupoidFunctor const& F) {
  auto out = functor_to_json(F);
  out["source"] = groupoid_to_json(*F.source);
  out["target"] = groupoid_to_json(*F.target);
  return out;
}

Span span_from_json(json const& j) {
  return guarded("span", [&] {
    auto apex = groupoid_from_json(j.at("apex"));
    auto const& l = j.at("left");
    auto const& r = j.at("right");
    return Span{functor_from_json(l, apex, groupoid_from_json(l.at("target"))),
                functor_from_json(r, apex, groupoid_from_json(r.at("target")))};
  });
}

json span_to_json(Span const& s) {
  auto l = functor_to_json(s.left);
  l["target"] = groupoid_to_json(*s.source());
  auto r = functor_to_json(s.right);
  r["target"] = groupoid_to_json(*s.target());
  return {{"apex", groupoid_to_json(*s.apex())}, {"left", l}, {"right", r}};
}

SpanWord word_from_json(json const& j) {
  return guarded("word", [&] {
    json const& list = j.is_array() ? j : j.at("letters");
    SpanWord w;
    for (auto const& l : list) {
      auto kind = l.at("kind").get<std::string>();
      auto G = group_from_json(l.at("group"));
      if (kind == "Res") {
        w.letters.push_back(res(G, subset_from_json(l.at("subgroup"))));
      } else if (kind == "Ind") {
        w.letters.push_back(ind(G, subset_from_json(l.at("subgroup"))));
      } else if (kind == "Infl") {
        w.letters.push_back(infl(G, subset_from_json(l.at("normal"))));
      } else if (kind == "Defl") {
        w.letters.push_back(defl(G, subset_from_json(l.at("normal"))));
      } else if (kind == "Iso") {
        auto T = l.contains("target") ? group_from_json(l.at("target")) : G;
        w.letters.push_back(iso(make_hom(G, T, l.at("images").get<std::vector<int>>())));
      } else {
        throw ParseError("unknown letter kind " + kind);
      }
    }
    if (j.is_object() && j.contains("start")) {
      w.start = group_from_json(j.at("start"));
    } else if (!w.letters.empty()) {
      w.start = w.letters.front().source();
    } else {
      throw ParseError("an empty word needs \"start\"");
    }
    check_word(w);
    return w;
  });
}

Biset biset_from_json(json const& j) {
  return guarded("biset", [&] {
    auto source = groupoid_from_json(j.at("source"));
    auto target = groupoid_from_json(j.at("target"));
    auto const& el = j.at("elements");
    int const n = static_cast<int>(el.size());
    Biset U{source, target, std::vector<int>(n, -1), std::vector<int>(n, -1), {}, {}};
    for (auto const& e : el) {
      int id = as_index(e.at("id"), n, "element");
      if (U.src_obj[id] != -1) throw ParseError("element listed twice");
      U.src_obj[id] = as_index(e.at("src_obj"), source->num_objects(), "object");
      U.tgt_obj[id] = as_index(e.at("tgt_obj"), target->num_objects(), "object");
    }
    U.left.assign(static_cast<std::size_t>(target->num_arrows()) * n, -1);
    U.right.assign(static_cast<std::size_t>(source->num_arrows()) * n, -1);
    for (auto const& t : j.at("left_action")) {
      int g = as_index(t.at(0), target->num_arrows(), "arrow");
      int u = as_index(t.at(1), n, "element");
      U.left[static_cast<std::size_t>(g) * n + u] = as_index(t.at(2), n, "element");
    }
    for (auto const& t : j.at("right_action")) {
      int u = as_index(t.at(0), n, "element");
      int h = as_index(t.at(1), source->num_arrows(), "arrow");
      U.right[static_cast<std::size_t>(h) * n + u] = as_index(t.at(2), n, "element");
    }
    try {
      check_biset(U);
    } catch (Error const& e) {
      throw ParseError(std::string("not a biset: ") + e.what());
    }
    return U;
  });
}

json biset_to_json(Biset const& U) {
  json el = json::array(), left = json::array(), right = json::array();
  int const n = U.size();
  for (int u = 0; u < n; ++u) el.push_back({{"id", u}, {"src_obj", U.src_obj[u]}, {"tgt_obj", U.tgt_obj[u]}});
  for (int g = 0; g < U.target->num_arrows(); ++g) {
    for (int u = 0; u < n; ++u) {
      if (U.act_left(g, u) >= 0) left.push_back({g, u, U.act_left(g, u)});
    }
  }
  for (int h = 0; h < U.source->num_arrows(); ++h) {
    for (int u = 0; u < n; ++u) {
      if (U.act_right(u, h) >= 0) right.push_back({u, h, U.act_right(u, h)});
    }
  }
  return {{"elements", el},
          {"left_action", left},
          {"right_action", right},
          {"source", groupoid_to_json(*U.source)},
          {"target", groupoid_to_json(*U.target)}};
}

GSet gset_from_json(json const& j) {
  return guarded("gset", [&] {
    auto G = group_from_json(j.at("group"));
    auto points = j.at("points").get<std::vector<int>>();
    int const n = static_cast<int>(points.size());
    for (int x = 0; x < n; ++x) {
      if (points[x] != x) throw ParseError("points must be 0..n-1 in order");
    }
    GSet X{G, n, std::vector<int>(static_cast<std::size_t>(G->order()) * n, -1)};
    for (auto const& t : j.at("action")) {
      int g = as_index(t.at(0), G->order(), "element");
      int x = as_index(t.at(1), n, "point");
      X.action[static_cast<std::size_t>(g) * n + x] = as_index(t.at(2), n, "point");
    }
    for (int v : X.action) {
      if (v < 0) throw ParseError("action table is incomplete");
    }
    try {
      check_gset(X);
    } catch (Error const& e) {
      throw ParseError(std::string("not a G-set: ") + e.what());
    }
    return X;
  });
}

json gset_to_json(GSet const& X) {
  json points = json::array(), action = json::array();
  for (int x = 0; x < X.size; ++x) points.push_back(x);
  for (Element g = 0; g < X.group->order(); ++g) {
    for (int x = 0; x < X.size; ++x) action.push_back({g, x, X.act(g, x)});
  }
  return {{"group", group_to_json(*X.group)}, {"points", points}, {"action", action}};
}

json iso_comma_to_json(IsoCommaResult const& r) {
  json triples = json::array();
  for (auto const& [x, y, g] : r.triples) triples.push_back({x, y, g});
  return {{"apex", groupoid_to_json(*r.apex)},
          {"proj_left", functor_to_json(r.proj_left)},
          {"proj_right", functor_to_json(r.proj_right)},
          {"two_cell", pairs(r.two_cell.components)},
          {"triples", triples}};
}

json read_json_file(std::string const& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return json::parse(ss.str());
  } catch (json::exception const& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace mackey::io
