#include <sstream>

#include "mackey/presentation.hpp"

namespace mackey {

namespace {

Hom restrict_to(Hom const& f, Embedding const& e) { return compose(f, e.incl); }

/// Right-multiplies a normal-form term (S, b, a) by one letter.
std::vector<GroupSpan> apply_letter(GroupSpan const& t, Letter const& l) {
  switch (l.kind) {
    case Letter::Kind::Ind:
    case Letter::Kind::Iso:
    case Letter::Kind::Defl:
      return {{t.apex, t.left, compose(l.map, t.right)}};
    case Letter::Kind::Infl: {
      auto P = fibre_product(t.right, l.map);
      return {{P.group, compose(t.left, P.pr1), P.pr2}};
    }
    case Letter::Kind::Res:
      break;
  }
  // Res along m: K ↪ G. One term per x in m(K)\G/a(S), apex a⁻¹(x⁻¹ m(K) x).
  Hom const& m = l.map;
  Group const& G = *m.tgt;
  Subgroup K = image(m);
  std::vector<Element> back(G.order(), -1);
  for (Element k = 0; k < m.src->order(); ++k) back[m(k)] = k;

  auto dcs = double_cosets(G, K, image(t.right));
#ifdef MACKEY_SABOTAGE_NORMALIZER
  if (dcs.size() > 1) dcs.pop_back();
#endif
  std::vector<GroupSpan> out;
  for (auto const& dc : dcs) {
    Element x = dc.rep;
    Subgroup Sx;
    for (Element s = 0; s < t.apex->order(); ++s) {
      if (contains(K, G.conj(x, t.right(s)))) Sx.push_back(s);
    }
    auto e = subgroup_group(t.apex, Sx);
    std::vector<Element> a(e.group->order());
    for (Element i = 0; i < e.group->order(); ++i) a[i] = back[G.conj(x, t.right(Sx[i]))];
    out.push_back({e.group, restrict_to(t.left, e), make_hom(e.group, m.src, std::move(a))});
  }
  return out;
}

}  // namespace

GroupSpan deflate(GroupSpan const& s) {
  Subgroup N = intersect(kernel(s.left), kernel(s.right));
  if (N.size() == 1) return s;
  auto Q = quotient(s.apex, N);
  return {Q.group, induced_on_quotients(Q.proj, s.left), induced_on_quotients(Q.proj, s.right)};
}

SpanSum normalize_word(SpanWord const& w, NormalizeOptions const& opt) {
  check_word(w);
  LinComb<GroupSpanKey> acc(canonical_key(identity_group_span(w.start)));
  for (auto const& l : w.letters) {
    LinComb<GroupSpanKey> next;
    for (auto const& [k, c] : acc.terms()) {
      for (auto const& t : apply_letter(k.rep, l)) {
        next.add(canonical_key(opt.deflative ? deflate(t) : t), c);
      }
    }
    acc = std::move(next);
  }
  return from_group_terms(w.start, w.end(), acc);
}

std::string format_span_sum(SpanSum const& s, Ring const& ring) {
  if (s.terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto const& [k, c] : s.terms.terms()) {
    if (ring.is_zero(c)) continue;
    if (!first) os << " + ";
    first = false;
    os << ring.format(c) << "*[";
    if (s.source->num_objects() > 1 || s.target->num_objects() > 1) {
      os << k.source_component << "→" << k.target_component << ": ";
    }
    os << key_string(k.key) << "]";
  }
  return first ? "0" : os.str();
}

}  // namespace mackey
