#include "mackey/suites.hpp"

#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <optional>
#include <random>
#include <thread>

#include "mackey/realization.hpp"
#include "mackey/spannable.hpp"

namespace mackey {

std::vector<GroupPtr> default_corpus() {
  return {trivial_group(), cyclic(2), cyclic(3), klein(), cyclic(4), symmetric(3)};
}

bool SuiteReport::pass() const {
  for (auto const& c : checks) {
    if (!c.pass()) return false;
  }
  return true;
}

CheckResult const& SuiteReport::check(std::string const& name) const {
  for (auto const& c : checks) {
    if (c.name == name) return c;
  }
  throw TypeError("suite " + suite + " has no check " + name);
}

std::vector<std::string> const& suite_names() {
  static std::vector<std::string> const names = {"presentation", "biset-relations", "realization",
                                                 "transport",    "fused",           "spannable"};
  return names;
}

namespace {

/// One instance of a check: returns a failure description, or nothing.
struct Task {
  std::string check;
  std::function<std::optional<std::string>()> run;
};

class Plan {
 public:
  void add(std::string check, std::function<std::optional<std::string>()> run) {
    if (std::find(order_.begin(), order_.end(), check) == order_.end()) order_.push_back(check);
    tasks_.push_back({std::move(check), std::move(run)});
  }
  /// Declares a check up front so it is reported even with no instances.
  void declare(std::string const& check) {
    if (std::find(order_.begin(), order_.end(), check) == order_.end()) order_.push_back(check);
  }

  std::vector<CheckResult> execute(int jobs) const {
    std::size_t const n = tasks_.size();
    std::vector<std::optional<std::string>> out(n);
    std::vector<std::exception_ptr> errors(n);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          out[i] = tasks_[i].run();
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    };
    int const threads = std::max(1, std::min<int>(jobs, static_cast<int>(n)));
    if (threads == 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
      for (auto& t : pool) t.join();
    }
    for (auto const& e : errors) {
      if (e) std::rethrow_exception(e);
    }
    std::vector<CheckResult> res;
    for (auto const& name : order_) res.push_back({name, 0, 0, {}});
    for (std::size_t i = 0; i < n; ++i) {
      auto it = std::find_if(res.begin(), res.end(), [&](CheckResult const& c) { return c.name == tasks_[i].check; });
      ++it->instances;
      if (out[i]) {
        if (it->failures == 0) it->counterexample = *out[i];
        ++it->failures;
      }
    }
    return res;
  }

 private:
  std::vector<std::string> order_;
  std::vector<Task> tasks_;
};

std::optional<std::string> failure_if(bool bad, std::function<std::string()> const& what) {
  if (bad) return what();
  return std::nullopt;
}

std::optional<std::string> from_report(RelationReport const& r, std::string const& tag) {
  if (r.pass) return std::nullopt;
  return tag.empty() ? r.detail : tag + ": " + r.detail;
}

std::vector<Subgroup> nontrivial_normal(Group const& G) {
  std::vector<Subgroup> out;
  for (auto const& N : normal_subgroups(G)) {
    if (N.size() > 1) out.push_back(N);
  }
  return out;
}

std::vector<Letter> letters_over(GroupPtr const& G) {
  std::vector<Letter> out;
  for (auto const& K : G->subgroups()) {
    out.push_back(res(G, K));
    out.push_back(ind(G, K));
  }
  for (auto const& N : normal_subgroups(*G)) {
    out.push_back(infl(G, N));
    out.push_back(defl(G, N));
  }
  for (auto const& f : isomorphisms(G, G)) out.push_back(iso(f));
  return out;
}

std::string describe(SpanWord const& w) {
  std::string s = w.start->name();
  for (auto const& l : w.letters) s += " " + kind_name(l.kind) + "(" + l.source()->name() + "→" + l.target()->name() + ")";
  return s;
}

std::vector<GSet> orbits_of(GroupPtr const& G) {
  std::vector<GSet> out;
  for (auto const& H : subgroup_classes(*G)) out.push_back(coset_gset(G, H));
  return out;
}

void plan_presentation(Plan& plan, SuiteConfig const& cfg) {
  for (auto const& name : {"families", "mackey", "deflativity-separates", "deflative-normalization"}) plan.declare(name);
  for (auto const& G : cfg.corpus) {
    for (auto const& fam : relation_families()) {
      for (auto const& r : relation_instances(fam, G)) {
        plan.add("families", [r] { return from_report(check_relation(r), ""); });
      }
      for (auto const& r : relation_instances(fam, G, true)) {
        plan.add("deflative-normalization",
                 [r] { return from_report(check_relation(r, {true}), ""); });
      }
    }
    for (auto const& H : G->subgroups()) {
      for (auto const& K : G->subgroups()) {
        plan.add("mackey", [G, H, K] {
          return from_report(check_relation(relation_mackey(G, H, K)), "");
        });
      }
    }
    for (auto const& N : nontrivial_normal(*G)) {
      plan.add("deflativity-separates", [G, N] {
        auto r = relation_deflativity(G, N);
        bool span_side = check_relation(r).pass;
        bool biset_side = check_relation(r, {true}).pass;
        return failure_if(span_side || !biset_side, [&] {
          return "Defl∘Infl over " + G->name() + "/" + format_subgroup(N) + ": span relation " +
                 (span_side ? "holds" : "fails") + ", deflative relation " + (biset_side ? "holds" : "fails");
        });
      });
    }
  }
}

void plan_biset_relations(Plan& plan, SuiteConfig const& cfg) {
  for (auto const& name : {"families", "2d-unrestricted", "deflativity", "bouc-chain"}) plan.declare(name);
  for (auto const& G : cfg.corpus) {
    for (auto const& fam : relation_families()) {
      for (auto const& r : relation_instances(fam, G, true)) {
        plan.add("families", [r] { return from_report(check_biset_relation(r), ""); });
      }
    }
    auto normals = normal_subgroups(*G);
    for (auto const& M : normals) {
      for (auto const& N : normals) {
        std::string tag = G->name() + " M=" + format_subgroup(M) + " N=" + format_subgroup(N);
        plan.add("2d-unrestricted",
                 [G, M, N, tag] { return from_report(check_biset_relation(relation_2d(G, M, N, true)), tag); });
        plan.add("bouc-chain", [G, M, N, tag] { return from_report(bouc_chain(G, M, N), tag); });
      }
      plan.add("deflativity", [G, M] {
        return from_report(check_biset_relation(relation_deflativity(G, M)), G->name() + "/" + format_subgroup(M));
      });
    }
  }
}

void plan_realization(Plan& plan, SuiteConfig const& cfg) {
  for (auto const& name : {"elementary", "functorial", "functorial-sampled", "kernel", "section", "restricted-iso"}) {
    plan.declare(name);
  }
  auto letters = std::make_shared<std::vector<Letter>>();
  for (auto const& G : cfg.corpus) {
    for (auto const& l : letters_over(G)) letters->push_back(l);
  }
  std::size_t const nl = letters->size();
  auto realized = std::make_shared<std::vector<Biset>>(nl);
  for (std::size_t i = 0; i < nl; ++i) {
    (*realized)[i] = realize(to_span(elementary((*letters)[i])));
    plan.add("elementary", [letters, realized, i] {
      auto const& l = (*letters)[i];
      return failure_if(!biset_iso((*realized)[i], elementary_biset(l)), [&] {
        return kind_name(l.kind) + " " + l.source()->name() + "→" + l.target()->name();
      });
    });
  }
  // next[i]: letters that can follow letter i
  std::vector<std::vector<std::size_t>> next(nl);
  for (std::size_t i = 0; i < nl; ++i) {
    for (std::size_t j = 0; j < nl; ++j) {
      if (*(*letters)[i].target() == *(*letters)[j].source()) next[i].push_back(j);
    }
  }
  auto check_word_realization = [letters, realized](std::vector<std::size_t> const& idx) -> std::optional<std::string> {
    SpanWord w{(*letters)[idx.front()].source(), {}};
    Biset B = (*realized)[idx.front()];
    w.letters.push_back((*letters)[idx.front()]);
    for (std::size_t k = 1; k < idx.size(); ++k) {
      w.letters.push_back((*letters)[idx[k]]);
      B = tensor((*realized)[idx[k]], B);
    }
    auto lhs = realize(fold_compose(w));
    auto rhs = biset_class(B);
    return failure_if(lhs != rhs, [&] {
      return describe(w) + ": " + format_biset_sum(lhs) + " vs " + format_biset_sum(rhs);
    });
  };
  std::vector<std::size_t> word;
  std::function<void()> extend = [&] {
    plan.add("functorial", [check_word_realization, word] { return check_word_realization(word); });
    if (static_cast<int>(word.size()) == cfg.word_length) return;
    for (std::size_t j : next[word.back()]) {
      word.push_back(j);
      extend();
      word.pop_back();
    }
  };
  for (std::size_t i = 0; i < nl; ++i) {
    word = {i};
    extend();
  }
  std::mt19937_64 rng(cfg.seed);
  for (int t = 0; t < cfg.sampled_words && nl > 0; ++t) {
    std::vector<std::size_t> idx{static_cast<std::size_t>(rng() % nl)};
    while (static_cast<int>(idx.size()) < cfg.word_length + 1 && !next[idx.back()].empty()) {
      auto const& choices = next[idx.back()];
      idx.push_back(choices[rng() % choices.size()]);
    }
    plan.add("functorial-sampled", [check_word_realization, idx] { return check_word_realization(idx); });
  }

  for (auto const& G : cfg.corpus) {
    for (auto const& N : nontrivial_normal(*G)) {
      auto Q = quotient(G, N).group;
      for (auto const& p : all_homs(G, Q)) {
        if (!is_surjective(p)) continue;
        plan.add("kernel", [G, N, p] {
          auto r = kernel_witness(p);
          return failure_if(r.span_is_identity || !r.biset_is_identity, [&] {
            return G->name() + " ↠ " + G->name() + "/" + format_subgroup(N) + ": span is " +
                   (r.span_is_identity ? "" : "not ") + "the identity, biset is " + (r.biset_is_identity ? "" : "not ") +
                   "the identity";
          });
        });
      }
    }
    for (auto const& H : cfg.corpus) {
      auto GH = direct_product(G, H);
      for (auto const& L : subgroup_classes(*GH)) {
        plan.add("section", [G, H, L] {
          auto U = biset_from_subgroup(G, H, L);
          auto V = realize(to_span(section(bouc_canonical_form(U))));
          return failure_if(!biset_iso(U, V),
                            [&] { return G->name() + "×" + H->name() + " L=" + format_subgroup(L); });
        });
      }
      if (G->order() <= 6 && H->order() <= 6) {
        for (auto pair : {PairKind::FaithfulRight, PairKind::FaithfulBoth}) {
          plan.add("restricted-iso", [G, H, pair] {
            auto r = check_restricted_iso(pair, H, G);
            return from_report(r, pair_name(pair) + " " + H->name() + "→" + G->name());
          });
        }
      }
    }
  }
}

void plan_transport(Plan& plan, SuiteConfig const& cfg) {
  for (auto const& name : {"mackey-preservation", "twisting-nat"}) plan.declare(name);
  for (auto const& G : cfg.corpus) {
    auto orbits = orbits_of(G);
    for (auto const& X : orbits) {
      for (auto const& Y : orbits) {
        for (auto const& Z : orbits) {
          for (auto const& f : all_gmaps(X, Z)) {
            for (auto const& g : all_gmaps(Y, Z)) {
              plan.add("mackey-preservation", [G, f, g] {
                return failure_if(!check_transport_mackey_preservation(f, g), [&] {
                  return "pullback over " + G->name() + " of G-sets of sizes " + std::to_string(f.source.size) + "," +
                         std::to_string(g.source.size) + "→" + std::to_string(f.target.size);
                });
              });
            }
          }
        }
        auto maps = all_gmaps(X, Y);
        for (auto const& f1 : maps) {
          for (auto const& f2 : maps) {
            plan.add("twisting-nat", [G, f1, f2] () -> std::optional<std::string> {
              auto tag = G->name() + " maps " + std::to_string(f1.source.size) + "→" + std::to_string(f1.target.size);
              auto ts = twisting_maps(f1, f2);
              auto TX = transport_groupoid(f1.source), TY = transport_groupoid(f1.target);
              auto nats = enumerate_nat_transfs(transport_functor(f1, TX.groupoid, TY.groupoid),
                                                transport_functor(f2, TX.groupoid, TY.groupoid));
              if (ts.size() != nats.size()) {
                return tag + ": " + std::to_string(ts.size()) + " twisting maps vs " + std::to_string(nats.size()) +
                       " natural transformations";
              }
              for (auto const& a : nats) {
                auto t = nat_to_twist(a, f1.source);
                if (!is_twisting_between(f1, f2, t)) return tag + ": a transformation gives no twisting map";
                if (transport_2cell(f1, f2, t).components != a.components) return tag + ": round trip differs";
              }
              return std::nullopt;
            });
          }
        }
      }
    }
  }
}

void plan_fused(Plan& plan, SuiteConfig const& cfg) {
  for (auto const& name : {"centralizer", "pullback-mackey"}) plan.declare(name);
  for (auto const& G : cfg.corpus) {
    for (auto const& H : G->subgroups()) {
      Subgroup CH = product_set(*G, centralizer(*G, H), H);
      for (Element a : normalizer(*G, H)) {
        plan.add("centralizer", [G, H, CH, a] {
          auto X = coset_gset(G, H);
          GSetSpan id{identity_gmap(X), identity_gmap(X)};
          GSetSpan conj{identity_gmap(X), right_translation(G, H, a)};
          bool fused = fused_span_equivalent(id, conj);
          return failure_if(fused != contains(CH, a), [&] {
            return G->name() + " H=" + format_subgroup(H) + " a=" + std::to_string(a) + ": fused equivalence " +
                   (fused ? "holds" : "fails") + " but a is " + (contains(CH, a) ? "" : "not ") + "in C_G(H)H";
          });
        });
      }
    }
    auto orbits = orbits_of(G);
    for (auto const& X : orbits) {
      for (auto const& Z : orbits) {
        for (auto const& f : all_gmaps(X, Z)) {
          for (auto const& Y : orbits) {
            for (auto const& g : all_gmaps(Y, Z)) {
              plan.add("pullback-mackey", [G, f, g] {
                return failure_if(!check_fused_pullback_mackey(f, g), [&] {
                  return "fused pullback over " + G->name() + " of sizes " + std::to_string(f.source.size) + "," +
                         std::to_string(g.source.size) + "→" + std::to_string(f.target.size);
                });
              });
            }
          }
        }
      }
    }
  }
}

void plan_spannable(Plan& plan, SuiteConfig const& cfg) {
  for (auto const& name : {"pairs", "over-G", "negative-control", "over-G-burnside"}) plan.declare(name);
  auto objs = std::make_shared<std::vector<GroupoidPtr>>();
  for (auto const& G : cfg.corpus) objs->push_back(group_groupoid(G));
  auto report = [](SpannableReport const& r) {
    return failure_if(!r.pass(), [&] {
      return r.pair + ": axiom (a) " + (r.axiom_a ? "ok" : "fails") + ", (b) " + (r.axiom_b ? "ok" : "fails") +
             ", (c) " + (r.axiom_c ? "ok" : "fails") + "; " + r.detail;
    });
  };
  for (auto const& pair : {pair_all(), pair_faithful_right(), pair_faithful_both()}) {
    plan.add("pairs", [pair, objs, report] { return report(check_spannable(pair, *objs)); });
  }
  plan.add("negative-control", [objs] {
    auto r = check_spannable(pair_rejecting_identities(), *objs);
    return failure_if(r.axiom_a, [] { return std::string("a J without identities passed axiom (a)"); });
  });
  for (auto const& G : cfg.corpus) {
    if (G->order() <= 6) plan.add("over-G", [G, report] { return report(check_spannable_over_g(G)); });
    plan.add("over-G-burnside", [G] {
      return failure_if(over_g_burnside_table(G).product != burnside_table(G).product,
                        [&] { return "End((" + G->name() + ", id)) differs from the Burnside ring"; });
    });
  }
}

}  // namespace

SuiteReport run_suite(std::string const& name, SuiteConfig const& cfg) {
  auto t0 = std::chrono::steady_clock::now();
  if (cfg.corpus.empty()) throw TypeError("empty corpus");
  Plan plan;
  if (name == "presentation") {
    plan_presentation(plan, cfg);
  } else if (name == "biset-relations") {
    plan_biset_relations(plan, cfg);
  } else if (name == "realization") {
    plan_realization(plan, cfg);
  } else if (name == "transport") {
    plan_transport(plan, cfg);
  } else if (name == "fused") {
    plan_fused(plan, cfg);
  } else if (name == "spannable") {
    plan_spannable(plan, cfg);
  } else {
    throw ParseError("unknown suite " + name);
  }
  SuiteReport r{name, plan.execute(cfg.jobs), 0};
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace mackey
