#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>

#include "mackey/json_io.hpp"

using namespace mackey;
using io::json;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(std::string const& binary, std::string const& args) {
  std::string cmd = binary + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return {-1, {}};
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Run cli(std::string const& args) { return run(MACKEY_CLI, args); }

std::string data(std::string const& name) { return std::string(MACKEY_TEST_DATA) + "/" + name; }

std::string line(std::string s) { return s + "\n"; }

}  // namespace

TEST(Cli, IsoCommaOfTwoCollapses) {
  auto r = cli("iso-comma " + data("c2_to_1.json") + " " + data("c2_to_1.json"));
  ASSERT_EQ(r.code, 0);
  auto j = json::parse(r.out);
  auto apex = io::groupoid_from_json(j.at("apex"));
  EXPECT_EQ(apex->num_arrows(), 4);
  EXPECT_EQ(apex->num_objects(), 1);
}

TEST(Cli, IsoCommaOfIdentitiesIsEquivalentToSource) {
  auto r = cli("iso-comma " + data("id_c2.json") + " " + data("id_c2.json"));
  ASSERT_EQ(r.code, 0);
  auto j = json::parse(r.out);
  auto apex = io::groupoid_from_json(j.at("apex"));
  auto C2 = group_groupoid(cyclic(2));
  auto p = io::functor_from_json(j.at("proj_left"), apex, C2);
  EXPECT_TRUE(is_equivalence(p));
}

TEST(Cli, IsoCommaErrors) {
  EXPECT_EQ(cli("iso-comma " + data("c2_to_1.json") + " " + data("id_c2.json")).code, 3);
  EXPECT_EQ(cli("iso-comma " + data("bad_functor.json") + " " + data("id_c2.json")).code, 2);
  EXPECT_EQ(cli("iso-comma " + data("missing.json") + " " + data("id_c2.json")).code, 2);
}

TEST(Cli, NormalizeResAfterInd) {
  auto S3 = symmetric(3);
  auto C2 = subgroup_group(S3, {0, 1}).group;
  auto want = add(span_class(identity_group_span(C2)),
                  fold_compose(SpanWord{C2, {res(C2, trivial_subgroup()), ind(C2, trivial_subgroup())}}));
  auto r = cli("normalize " + data("res_ind_s3_c2.json"));
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, line(format_span_sum(want)));
  EXPECT_EQ(want.terms.size(), 2u);
}

TEST(Cli, NormalizeDeflativeFlag) {
  auto C2 = cyclic(2);
  auto one = trivial_group();
  Hom t{C2, one, {0, 0}};
  auto plain = cli("normalize " + data("defl_infl_c2.json"));
  ASSERT_EQ(plain.code, 0);
  EXPECT_EQ(plain.out, line(format_span_sum(span_class(GroupSpan{C2, t, t}))));
  EXPECT_NE(plain.out, "1*[id]\n");
  auto defl = cli("--deflative normalize " + data("defl_infl_c2.json"));
  ASSERT_EQ(defl.code, 0);
  EXPECT_EQ(defl.out, "1*[id]\n");
}

TEST(Cli, NormalizeEdgeCases) {
  auto r = cli("normalize " + data("empty_s3.json"));
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1*[id]\n");
  EXPECT_EQ(cli("normalize " + data("not_composable.json")).code, 3);
  auto m = cli("--ring mod:2 normalize " + data("res_ind_s3_c2.json"));
  EXPECT_EQ(m.code, 0);
  EXPECT_EQ(cli("--ring mod:0 normalize " + data("res_ind_s3_c2.json")).code, 2);
}

TEST(Cli, ComposeAndRealize) {
  auto r = cli("compose " + data("span_collapse_c2.json") + " " + data("span_collapse_c2.json"));
  ASSERT_EQ(r.code, 0);
  Hom t{klein(), trivial_group(), {0, 0, 0, 0}};
  EXPECT_EQ(r.out, line(format_span_sum(span_class(GroupSpan{klein(), t, t}))));
  auto b = cli("--format json realize " + data("span_collapse_c2.json"));
  ASSERT_EQ(b.code, 0);
  auto U = io::biset_from_json(json::parse(b.out));
  EXPECT_EQ(U.size(), 1);
  auto w = cli("realize --word " + data("res_ind_s3_c2.json"));
  ASSERT_EQ(w.code, 0);
  EXPECT_NE(w.out.find(" + "), std::string::npos) << w.out;
}

TEST(Cli, Tables) {
  auto r = cli("--format csv table burnside C2");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "\"\",\"C2/{0}\",\"C2/{0,1}\"\n"
                   "\"C2/{0}\",\"2*[C2/{0}]\",\"1*[C2/{0}]\"\n"
                   "\"C2/{0,1}\",\"1*[C2/{0}]\",\"1*[C2/{0,1}]\"\n");
  auto one = cli("--format json table double-burnside 1");
  ASSERT_EQ(one.code, 0);
  auto j1 = json::parse(one.out);
  ASSERT_EQ(j1.at("basis").size(), 1u);
  EXPECT_EQ(j1.at("product")[0][0].at(j1.at("basis")[0].get<std::string>()), "1");
  auto two = cli("--format json table double-burnside C2");
  ASSERT_EQ(two.code, 0);
  EXPECT_EQ(json::parse(two.out).at("basis").size(), 5u);
  EXPECT_EQ(cli("--bound 6 table burnside D4").code, 4);
  EXPECT_EQ(cli("table burnside NoSuchGroup").code, 2);
}

TEST(Cli, HomBasis) {
  auto r = cli("--format json --pair faithful_both hom-basis C2 C2");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out).at("basis").size(), 2u);
  auto t = cli("--format json --pair faithful_both table hom-basis C2 C2");
  ASSERT_EQ(t.code, 0);
  EXPECT_EQ(json::parse(t.out), json::parse(r.out));
  EXPECT_EQ(cli("--pair nonsense hom-basis C2 C2").code, 2);
}

TEST(Cli, ConfigValidation) {
  EXPECT_EQ(cli("--budget 10 table burnside C2").code, 2);
  EXPECT_EQ(cli("--bound 0 table burnside C2").code, 2);
  EXPECT_EQ(cli("--format xml table burnside C2").code, 2);
  EXPECT_EQ(cli("verify nonsense").code, 2);
  EXPECT_EQ(cli("").code, 2);
}

TEST(Cli, VerifyIsDeterministicAcrossJobs) {
  auto a = cli("--corpus 1,C2,C3 --format json verify transport");
  auto b = cli("--corpus 1,C2,C3 --format json --jobs 3 verify transport");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_TRUE(json::parse(a.out).at("pass").get<bool>());
}

TEST(Cli, VerifyPresentationAndBisetRelations) {
  auto r = cli("--corpus 1,C2,C3,C2xC2,S3 verify presentation");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("PASS"), std::string::npos);
  EXPECT_EQ(cli("verify biset-relations").code, 0);
}

TEST(Cli, SabotagedNormalizerIsCaught) {
  auto r = run(MACKEY_CLI_SABOTAGED, "--corpus 1,C2,C3 verify presentation");
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("first counterexample"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, CorpusFromEnvironment) {
  auto full = cli("--format json verify fused");
  ASSERT_EQ(full.code, 0);
  setenv("MACKEY_KERNEL_CORPUS", data("corpus_c2.json").c_str(), 1);
  auto small = cli("--format json verify fused");
  unsetenv("MACKEY_KERNEL_CORPUS");
  ASSERT_EQ(small.code, 0);
  auto count = [](std::string const& out) {
    long long n = 0;
    auto const j = json::parse(out);
    for (auto const& rep : j.at("reports")) {
      for (auto const& c : rep.at("checks")) n += c.at("instances").get<long long>();
    }
    return n;
  };
  EXPECT_LT(count(small.out), count(full.out));
  EXPECT_GT(count(small.out), 0);
}
