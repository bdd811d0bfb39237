#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>

#include "mackey/json_io.hpp"
#include "mackey/realization.hpp"
#include "mackey/suites.hpp"

using namespace mackey;
using io::json;

namespace {

struct RunConfig {
  std::string ring = "int";
  int bound = 8;
  std::uint64_t budget = kDefaultBudget;
  bool deflative = false;
  std::string pair = "faithful_right";
  int jobs = 1;
  std::string format = "text";
  std::uint64_t seed = 1;
  std::string corpus;  ///< comma-separated group names, or a JSON file
};

bool is_json_path(std::string const& s) { return s.size() > 5 && s.substr(s.size() - 5) == ".json"; }

GroupPtr group_arg(std::string const& s, int bound) {
  auto G = is_json_path(s) ? io::group_from_json(io::read_json_file(s)) : io::group_from_json(json(s));
  if (G->order() > bound) {
    throw BoundExceeded("group " + s + " has order " + std::to_string(G->order()) + " above bound " + std::to_string(bound));
  }
  return G;
}

std::vector<GroupPtr> corpus_from_json(json const& j, int bound) {
  json const& list = j.is_object() ? j.at("groups") : j;
  if (!list.is_array() || list.empty()) throw ParseError("corpus must be a nonempty list of groups");
  std::vector<GroupPtr> out;
  for (auto const& g : list) {
    auto G = io::group_from_json(g);
    if (G->order() > bound) throw BoundExceeded("corpus group of order " + std::to_string(G->order()) + " above bound");
    out.push_back(G);
  }
  return out;
}

std::vector<GroupPtr> load_corpus(RunConfig const& cfg) {
  std::string spec = cfg.corpus;
  if (spec.empty()) {
    if (char const* env = std::getenv("MACKEY_KERNEL_CORPUS"); env && *env) spec = env;
  }
  if (spec.empty()) {
    auto c = default_corpus();
    for (auto const& G : c) {
      if (G->order() > cfg.bound) throw BoundExceeded("default corpus exceeds bound " + std::to_string(cfg.bound));
    }
    return c;
  }
  if (is_json_path(spec)) {
    try {
      return corpus_from_json(io::read_json_file(spec), cfg.bound);
    } catch (json::exception const& e) {
      throw ParseError(spec + ": " + e.what());
    }
  }
  std::vector<GroupPtr> out;
  std::size_t start = 0;
  while (start <= spec.size()) {
    auto end = spec.find(',', start);
    if (end == std::string::npos) end = spec.size();
    out.push_back(group_arg(spec.substr(start, end - start), cfg.bound));
    start = end + 1;
  }
  return out;
}

/// Disjoint sum of class representatives; coefficients must be nonnegative.
Biset sum_representative(BisetSum const& s) {
  auto none = [](int, int) { return -1; };
  Biset U = make_biset(s.source, s.target, {}, {}, none, none);
  for (auto const& [k, c] : s.terms.terms()) {
    if (c < 0) throw TypeError("a biset sum with negative coefficients has no biset");
    for (long long i = 0; i < c; ++i) U = disjoint_sum(U, biset_representative(s.source, s.target, k));
  }
  return U;
}

void print(json const& j) { std::cout << j.dump(2) << "\n"; }

json span_sum_json(SpanSum const& s, Ring const& ring) {
  json terms = json::array();
  for (auto const& [k, c] : s.terms.terms()) {
    if (ring.is_zero(c)) continue;
    terms.push_back({{"coeff", ring.format(c)},
                     {"source_component", k.source_component},
                     {"target_component", k.target_component},
                     {"key", key_string(k.key)}});
  }
  return {{"terms", terms}, {"text", format_span_sum(s, ring)}};
}

void emit_span_sum(SpanSum const& s, RunConfig const& cfg) {
  auto ring = Ring::parse(cfg.ring);
  if (cfg.format == "json") {
    print(span_sum_json(s, ring));
  } else {
    std::cout << format_span_sum(s, ring) << "\n";
  }
}

/// A square table of linear combinations over labeled basis elements.
void emit_table(std::string const& title, std::vector<std::string> const& labels,
                std::vector<std::vector<LinComb<int>>> const& product, RunConfig const& cfg) {
  auto ring = Ring::parse(cfg.ring);
  auto cell = [&](LinComb<int> const& c) {
    std::string s;
    for (auto const& [k, v] : c.terms()) {
      if (ring.is_zero(v)) continue;
      if (!s.empty()) s += " + ";
      s += ring.format(v) + "*[" + labels[k] + "]";
    }
    return s.empty() ? std::string("0") : s;
  };
  std::size_t const n = labels.size();
  if (cfg.format == "json") {
    json rows = json::array();
    for (std::size_t i = 0; i < n; ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < n; ++j) {
        json terms = json::object();
        for (auto const& [k, v] : product[i][j].terms()) {
          if (!ring.is_zero(v)) terms[labels[k]] = ring.format(v);
        }
        row.push_back(terms);
      }
      rows.push_back(row);
    }
    print({{"table", title}, {"basis", labels}, {"product", rows}});
  } else if (cfg.format == "csv") {
    auto quote = [](std::string const& s) { return "\"" + s + "\""; };
    std::cout << quote("");
    for (auto const& l : labels) std::cout << "," << quote(l);
    std::cout << "\n";
    for (std::size_t i = 0; i < n; ++i) {
      std::cout << quote(labels[i]);
      for (std::size_t j = 0; j < n; ++j) std::cout << "," << quote(cell(product[i][j]));
      std::cout << "\n";
    }
  } else {
    std::cout << title << "\n";
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) std::cout << "[" << labels[i] << "]·[" << labels[j] << "] = " << cell(product[i][j]) << "\n";
    }
  }
}

void emit_hom_basis(std::string const& x, std::string const& y, RunConfig const& cfg) {
  auto pair = parse_pair_kind(cfg.pair);
  if (!pair) throw ParseError("unknown pair " + cfg.pair);
  auto H = group_arg(x, cfg.bound), G = group_arg(y, cfg.bound);
  std::optional<int> apex;
  if (*pair == PairKind::All) apex = cfg.bound;
  auto basis = hom_basis(group_groupoid(H), group_groupoid(G), *pair, apex);
  if (cfg.format == "json") {
    json keys = json::array();
    for (auto const& k : basis.keys) keys.push_back(key_string(k.key));
    print({{"pair", pair_name(*pair)}, {"source", H->name()}, {"target", G->name()},
           {"truncated", basis.truncated}, {"basis", keys}});
  } else if (cfg.format == "csv") {
    std::cout << "index,key\n";
    for (std::size_t i = 0; i < basis.keys.size(); ++i) std::cout << i << ",\"" << key_string(basis.keys[i].key) << "\"\n";
  } else {
    std::cout << pair_name(*pair) << " " << H->name() << "→" << G->name() << ": " << basis.keys.size() << " classes"
              << (basis.truncated ? " (apex order ≤ " + std::to_string(cfg.bound) + ")" : "") << "\n";
    for (std::size_t i = 0; i < basis.keys.size(); ++i) std::cout << i << " " << key_string(basis.keys[i].key) << "\n";
  }
}

int run_verify(std::string const& suite, RunConfig const& cfg) {
  SuiteConfig sc;
  sc.corpus = load_corpus(cfg);
  sc.jobs = cfg.jobs;
  sc.seed = cfg.seed;
  std::vector<std::string> suites;
  if (suite == "all") {
    suites = suite_names();
  } else {
    suites = {suite};
  }
  std::vector<SuiteReport> reports;
  for (auto const& s : suites) reports.push_back(run_suite(s, sc));
  bool ok = std::all_of(reports.begin(), reports.end(), [](SuiteReport const& r) { return r.pass(); });
  if (cfg.format == "json") {
    json out = json::array();
    for (auto const& r : reports) {
      json checks = json::array();
      for (auto const& c : r.checks) {
        json jc{{"check", c.name}, {"instances", c.instances}, {"failures", c.failures}};
        if (!c.pass()) jc["counterexample"] = c.counterexample;
        checks.push_back(jc);
      }
      out.push_back({{"suite", r.suite}, {"pass", r.pass()}, {"checks", checks}});
    }
    print({{"pass", ok}, {"reports", out}});
  } else {
    for (auto const& r : reports) {
      for (auto const& c : r.checks) {
        std::cout << r.suite << " " << c.name << ": " << c.instances << " instances, " << c.failures << " failures";
        if (!c.pass()) std::cout << "; first counterexample: " << c.counterexample;
        std::cout << "\n";
      }
    }
    std::cout << (ok ? "PASS" : "FAIL") << "\n";
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Span and biset calculus of finite groupoids"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--ring", cfg.ring, "coefficient ring: int, mod:n or rat");
  app.add_option("--bound", cfg.bound, "group order bound")->check(CLI::PositiveNumber);
  app.add_option("--budget", cfg.budget, "search budget")->check(CLI::Range(std::uint64_t{1000}, UINT64_MAX));
  app.add_flag("--deflative", cfg.deflative, "impose Defl∘Infl = id");
  app.add_option("--pair", cfg.pair, "all, faithful_right or faithful_both");
  app.add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--seed", cfg.seed, "seed for sampled checks");
  app.add_option("--corpus", cfg.corpus, "comma-separated group names or a JSON file");

  std::string a, b;
  auto* iso = app.add_subcommand("iso-comma", "iso-comma of two functor files");
  iso->add_option("u", a)->required();
  iso->add_option("v", b)->required();
  auto* norm = app.add_subcommand("normalize", "normal form of a word file");
  norm->add_option("word", a)->required();
  auto* comp = app.add_subcommand("compose", "composite s2∘s1 of two span files");
  comp->add_option("s1", a)->required();
  comp->add_option("s2", b)->required();
  auto* real = app.add_subcommand("realize", "biset of a span file or, with --word, of a word file");
  bool word_input = false;
  real->add_option("input", a)->required();
  real->add_flag("--word", word_input, "input is a word");
  auto* ver = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  std::vector<std::string> choices = suite_names();
  choices.push_back("all");
  ver->add_option("suite", suite)->required()->check(CLI::IsMember(choices));
  auto* tab = app.add_subcommand("table", "burnside G | double-burnside G | hom-basis X Y");
  std::string kind;
  std::vector<std::string> targs;
  tab->add_option("kind", kind)->required()->check(CLI::IsMember({"burnside", "double-burnside", "hom-basis"}));
  tab->add_option("groups", targs)->required();
  auto* hb = app.add_subcommand("hom-basis", "span basis of Hom(X, Y) for --pair");
  hb->add_option("X", a)->required();
  hb->add_option("Y", b)->required();

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    Ring::parse(cfg.ring);
    default_budget_limit() = cfg.budget;
    if (*iso) {
      auto u = io::functor_file_from_json(io::read_json_file(a));
      auto v = io::functor_file_from_json(io::read_json_file(b));
      print(io::iso_comma_to_json(iso_comma(u, v)));
    } else if (*norm) {
      auto w = io::word_from_json(io::read_json_file(a));
      for (auto const& l : w.letters) {
        if (l.source()->order() > cfg.bound || l.target()->order() > cfg.bound) {
          throw BoundExceeded("word group above bound " + std::to_string(cfg.bound));
        }
      }
      emit_span_sum(normalize_word(w, {cfg.deflative}), cfg);
    } else if (*comp) {
      auto s1 = io::span_from_json(io::read_json_file(a));
      auto s2 = io::span_from_json(io::read_json_file(b));
      emit_span_sum(compose_spans(s1, s2), cfg);
    } else if (*real) {
      Biset U;
      if (word_input) {
        auto sum = fold_compose(io::word_from_json(io::read_json_file(a)));
        auto cls = realize(sum);
        if (cfg.format != "json") {
          std::cout << format_biset_sum(cls, Ring::parse(cfg.ring)) << "\n";
          return 0;
        }
        U = sum_representative(cls);
      } else {
        U = realize(io::span_from_json(io::read_json_file(a)));
      }
      if (cfg.format == "json") {
        print(io::biset_to_json(U));
      } else {
        std::cout << format_biset_sum(biset_class(U), Ring::parse(cfg.ring)) << "\n";
      }
    } else if (*ver) {
      return run_verify(suite, cfg);
    } else if (*tab) {
      if (kind == "hom-basis") {
        if (targs.size() != 2) throw ParseError("table hom-basis needs X and Y");
        emit_hom_basis(targs[0], targs[1], cfg);
      } else {
        if (targs.size() != 1) throw ParseError("table " + kind + " needs one group");
        auto G = group_arg(targs[0], cfg.bound);
        std::vector<std::string> labels;
        if (kind == "burnside") {
          auto t = burnside_table(G, cfg.bound);
          for (auto const& H : t.basis) labels.push_back(G->name() + "/" + format_subgroup(H));
          emit_table("burnside " + G->name(), labels, t.product, cfg);
        } else {
          auto t = double_burnside_table(G, cfg.bound);
          for (auto const& f : t.basis) labels.push_back(format_five_form(f));
          emit_table("double-burnside " + G->name(), labels, t.product, cfg);
        }
      }
    } else if (*hb) {
      emit_hom_basis(a, b, cfg);
    }
  } catch (Error const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.exit_code();
  }
  return 0;
}
