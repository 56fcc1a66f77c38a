#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "udh/cli.hpp"
#include "udh/json_io.hpp"
#include "udh/ternary.hpp"

namespace {

using namespace udh;

const std::string kData = UDH_TEST_DATA_DIR;

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "udh");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

Json result_of(const Run& r) {
  auto j = Json::parse(r.out);
  EXPECT_EQ(j.at("schema"), "udh-report/1");
  EXPECT_TRUE(j.at("config").contains("seed"));
  return j.at("result");
}

TEST(Json, WitnessRoundTrip) {
  const auto w = decide_condition_b(catalog::c5_minus());
  ASSERT_TRUE(w);
  const auto back = witness_from_json(witness_to_json(*w, 3));
  EXPECT_EQ(back.ordering, w->ordering);
  EXPECT_EQ(back.colour, w->colour);
}

TEST(Json, EmbeddingRoundTrip) {
  const auto w = decide_ternary_embeddable(catalog::single_edge());
  ASSERT_TRUE(w);
  const auto back = embedding_from_json(embedding_to_json(*w));
  EXPECT_EQ(back.length, w->length);
  EXPECT_EQ(back.image, w->image);
}

TEST(Json, ReducedAndCoreRoundTrip) {
  const auto a = random_reduced(5, 2, 4, 0.6, 0.3, 2);
  EXPECT_EQ(reduced_from_json(reduced_to_json(a)), a);
  ReducedHypergraph full(4, 2);
  full.fill_complete();
  const auto core = select_rainbow_core(full, 1.0, 4);
  ASSERT_TRUE(core);
  const auto back = core_from_json(core_to_json(*core));
  EXPECT_EQ(back.lambda, core->lambda);
  EXPECT_EQ(back.red, core->red);
  EXPECT_EQ(back.blue, core->blue);
  EXPECT_EQ(back.green, core->green);
  EXPECT_THROW(reduced_from_json(Json::parse(R"({"m": 3})")), Error);
}

TEST(Cli, DecideConditionB) {
  const auto c5 = cli({"decide-pi1", kData + "/c5_minus.hyg"});
  EXPECT_EQ(c5.code, 0);
  EXPECT_EQ(result_of(c5).at("ordering"), Json::parse("[1,4,2,0,3]"));
  EXPECT_EQ(cli({"decide-pi1", kData + "/k4.hyg"}).code, 1);
  EXPECT_EQ(cli({"decide-pi1", kData + "/edgeless4.hyg"}).code, 0);
  EXPECT_EQ(cli({"decide-pi1", kData + "/missing.hyg"}).code, 2);
}

TEST(Cli, Frequent) {
  EXPECT_EQ(cli({"frequent", kData + "/single_edge.hyg"}).code, 0);
  EXPECT_EQ(cli({"frequent", kData + "/k4.hyg"}).code, 1);
  EXPECT_EQ(cli({"frequent", kData + "/c5_minus.hyg"}).code, 1);
}

TEST(Cli, ParseErrorIsInputError) {
  const auto dir = std::filesystem::temp_directory_path() / "udh_cli_test";
  std::filesystem::create_directories(dir);
  const auto bad = dir / "bad.hyg";
  std::ofstream(bad) << "3 4 1\n0 1 7\n";
  const auto r = cli({"decide-pi1", bad.string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 2"), std::string::npos) << r.err;
  EXPECT_EQ(cli({"no-such-command"}).code, 2);
}

TEST(Cli, GenerateIsDeterministic) {
  const auto t = cli({"generate", "ternary", "--k", "3", "--n", "2"});
  EXPECT_EQ(t.code, 0);
  EXPECT_EQ(parse_hypergraph(t.out).edge_count(), 30u);
  const auto a = cli({"--seed", "4", "generate", "hphi", "--n", "12"});
  const auto b = cli({"--seed", "4", "generate", "hphi", "--n", "12"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, Audits) {
  EXPECT_EQ(cli({"audit", "vertex", kData + "/edgeless4.hyg", "--d", "0.5", "--eta", "0.01"}).code, 1);
  EXPECT_EQ(cli({"audit", "vertex", kData + "/k4.hyg", "--d", "1", "--eta", "0.01"}).code, 0);
  const auto p = cli({"audit", "profile", kData + "/k4.hyg", "--grid", "1"});
  EXPECT_EQ(p.code, 0);
}

TEST(Cli, SweepCounts) {
  const auto r = cli({"sweep", "--f", "4"});
  EXPECT_EQ(r.code, 0);
  const auto res = result_of(r);
  EXPECT_EQ(res.at("counts").at("frequent_and_b"), 11);
  EXPECT_EQ(res.at("counts").at("neither"), 5);
  EXPECT_EQ(res.at("counts").at("frequent_without_b"), 0);
}

TEST(Cli, ReducedSelectAndVerify) {
  const auto dir = std::filesystem::temp_directory_path() / "udh_cli_test";
  std::filesystem::create_directories(dir);
  ReducedHypergraph full(5, 2);
  full.fill_complete();
  const auto in = dir / "full.json";
  std::ofstream(in) << reduced_to_json(full).dump();
  const auto out = dir / "core.json";
  EXPECT_EQ(cli({"-o", out.string(), "reduced", "select", in.string(), "--mu", "1", "--f", "5"}).code, 0);
  EXPECT_EQ(cli({"reduced", "verify", in.string(), out.string()}).code, 0);
}

TEST(Cli, NumericReports) {
  EXPECT_EQ(cli({"verify-fact7", "--resolution", "31"}).code, 0);
  EXPECT_EQ(cli({"audit-tn", "--level", "2"}).code, 0);
  EXPECT_EQ(cli({"optimality", "--r", "1", "--n", "3"}).code, 0);
  const auto s = cli({"supersat", "--file", kData + "/tight_path4.hyg", "--nmax", "2"});
  EXPECT_EQ(s.code, 0);
  EXPECT_EQ(cli({"supersat", "--file", kData + "/k4.hyg"}).code, 2);
  EXPECT_EQ(cli({"hom-count", kData + "/single_edge.hyg", kData + "/k4.hyg"}).code, 0);
  EXPECT_EQ(cli({"embed", kData + "/k4.hyg", kData + "/tight_path4.hyg"}).code, 1);
}

}  // namespace
