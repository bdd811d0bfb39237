// One line per acceptance criterion; exit status 0 iff all pass.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>

#include "mackey/biset.hpp"
#include "mackey/gsets.hpp"
#include "mackey/suites.hpp"

using namespace mackey;

namespace {

// All comparisons are exact: coefficients are integers and the tolerance is zero.
constexpr long long kCoefficientTolerance = 0;
constexpr double kPresentationSeconds = 300;     // criterion 1
constexpr double kTransportFusedSeconds = 600;   // criterion 8

struct Line {
  bool pass = true;
  std::string note;
  void require(bool ok, std::string const& what) {
    if (!ok) {
      pass = false;
      if (!note.empty()) note += "; ";
      note += what;
    }
  }
  void counts(CheckResult const& c) {
    require(c.instances > 0, c.name + " has no instances");
    require(c.failures <= kCoefficientTolerance,
            c.name + ": " + std::to_string(c.failures) + " failures, first " + c.counterexample);
  }
};

int failures = 0;

void emit(int n, std::string const& title, std::function<Line()> const& body) {
  Line l;
  try {
    l = body();
  } catch (std::exception const& e) {
    l.pass = false;
    l.note = std::string("error: ") + e.what();
  }
  failures += !l.pass;
  std::printf("criterion %d %s: %s%s%s\n", n, l.pass ? "PASS" : "FAIL", title.c_str(), l.note.empty() ? "" : " | ",
              l.note.c_str());
  std::fflush(stdout);
}

std::string summary(CheckResult const& c) { return c.name + " " + std::to_string(c.instances); }

/// |(G/H)^K| = #{g : g⁻¹Kg ⊆ H} / |H|, straight from the multiplication table.
int mark(Group const& G, Subgroup const& H, Subgroup const& K) {
  int count = 0;
  for (Element g = 0; g < G.order(); ++g) {
    bool inside = true;
    for (Element k : K) inside = inside && std::binary_search(H.begin(), H.end(), G.conj(G.inv(g), k));
    count += inside;
  }
  return count / static_cast<int>(H.size());
}

}  // namespace

int main() {
  SuiteConfig cfg;
  cfg.corpus = default_corpus();
  std::printf("corpus: 1, C2, C3, C2xC2, C4, S3; coefficient tolerance %lld\n", kCoefficientTolerance);

  SuiteReport presentation, realization;
  emit(1, "presentation relation families", [&] {
    presentation = run_suite("presentation", cfg);
    Line l;
    l.counts(presentation.check("families"));
    l.require(presentation.seconds <= kPresentationSeconds,
              "took " + std::to_string(presentation.seconds) + " s > " + std::to_string(kPresentationSeconds));
    if (l.pass) l.note = summary(presentation.check("families")) + " instances in " + std::to_string(presentation.seconds) + " s";
    return l;
  });

  emit(2, "Mackey formula via iso-comma", [&] {
    Line l;
    l.counts(presentation.check("mackey"));
    auto S3 = symmetric(3);
    Subgroup H{0, 1};
    auto C2 = subgroup_group(S3, H).group;
    auto lhs = compose_spans(to_span(elementary(ind(S3, H))), to_span(elementary(res(S3, H))));
    auto through_one = fold_compose(SpanWord{C2, {res(C2, trivial_subgroup()), ind(C2, trivial_subgroup())}});
    auto rhs = add(span_class(identity_group_span(C2)), through_one);
    l.require(lhs == rhs, "S3, H = K = C2: " + format_span_sum(lhs) + " vs " + format_span_sum(rhs));
    if (l.pass) l.note = summary(presentation.check("mackey")) + " subgroup pairs; S3 worked instance = id + Ind∘Res via 1";
    return l;
  });

  emit(3, "deflativity separates spans from bisets", [&] {
    realization = run_suite("realization", cfg);
    Line l;
    l.counts(realization.check("kernel"));
    l.counts(presentation.check("deflativity-separates"));
    if (l.pass) l.note = summary(realization.check("kernel")) + " surjections";
    return l;
  });

  emit(4, "realization functoriality and elementary correspondence", [&] {
    Line l;
    for (auto const& c : {"elementary", "functorial", "functorial-sampled"}) l.counts(realization.check(c));
    if (l.pass) {
      l.note = summary(realization.check("elementary")) + ", " + summary(realization.check("functorial")) +
               " words of length ≤ 3";
    }
    return l;
  });

  emit(5, "restricted isomorphisms for faithful pairs", [&] {
    Line l;
    l.counts(realization.check("restricted-iso"));
    if (l.pass) l.note = summary(realization.check("restricted-iso")) + " (pair, H, G) instances";
    return l;
  });

  emit(6, "Bouc simplification", [&] {
    auto r = run_suite("biset-relations", cfg);
    Line l;
    l.counts(r.check("2d-unrestricted"));
    l.counts(r.check("bouc-chain"));
    if (l.pass) l.note = summary(r.check("2d-unrestricted")) + ", " + summary(r.check("bouc-chain")) + " normal pairs";
    return l;
  });

  emit(7, "Burnside oracles", [&] {
    Line l;
    auto t2 = burnside_table(cyclic(2));
    LinComb<int> two_free;
    two_free.add(0, 2);
    l.require(t2.basis.size() == 2 && t2.basis[0] == trivial_subgroup() && t2.product[0][0] == two_free,
              "[C2/1]^2 != 2[C2/1]");
    auto S3 = symmetric(3);
    auto t = burnside_table(S3);
    l.require(t.basis.size() == 4, "burnside_table(S3) is not 4×4");
    for (std::size_t i = 0; i < t.basis.size(); ++i) {
      for (std::size_t j = 0; j < t.basis.size(); ++j) {
        for (auto const& K : t.basis) {
          long long want = static_cast<long long>(mark(*S3, t.basis[i], K)) * mark(*S3, t.basis[j], K);
          long long got = 0;
          for (auto const& [k, c] : t.product[i][j].terms()) got += static_cast<long long>(c) * mark(*S3, t.basis[k], K);
          l.require(std::llabs(got - want) <= kCoefficientTolerance,
                    "mark of S3 product " + std::to_string(i) + "," + std::to_string(j) + " at " + format_subgroup(K));
        }
      }
    }
    auto d = double_burnside_table(cyclic(2));
    l.require(d.basis.size() == 5, "double_burnside_table(C2) has " + std::to_string(d.basis.size()) + " basis elements");
    if (l.pass) l.note = "C2 square, S3 4×4 table against marks, double Burnside C2 rank 5";
    return l;
  });

  emit(8, "transport and fused suite", [&] {
    auto tr = run_suite("transport", cfg);
    auto fu = run_suite("fused", cfg);
    Line l;
    l.counts(tr.check("mackey-preservation"));
    l.counts(tr.check("twisting-nat"));
    l.counts(fu.check("centralizer"));
    l.counts(fu.check("pullback-mackey"));
    double secs = tr.seconds + fu.seconds;
    l.require(secs <= kTransportFusedSeconds, "took " + std::to_string(secs) + " s");
    if (l.pass) {
      l.note = summary(tr.check("mackey-preservation")) + ", " + summary(tr.check("twisting-nat")) + ", " +
               summary(fu.check("centralizer")) + ", " + summary(fu.check("pullback-mackey")) + " in " +
               std::to_string(secs) + " s";
    }
    return l;
  });

  emit(9, "spannable-pair axioms", [&] {
    auto r = run_suite("spannable", cfg);
    Line l;
    for (auto const& c : {"pairs", "over-G", "negative-control", "over-G-burnside"}) l.counts(r.check(c));
    if (l.pass) l.note = "all, faithful_right, faithful_both, over_G for corpus groups; negative control fails axiom (a)";
    return l;
  });

  std::printf("%s\n", failures == 0 ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL");
  return failures == 0 ? 0 : 1;
}
