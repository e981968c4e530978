#include <howe/cli.hpp>

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = howe::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json json_of(const Run& r) { return nlohmann::json::parse(r.out); }

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  for (std::string l; std::getline(is, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST(Cli, HelpExitsZeroAndDocumentsColumns) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("dimension_sum"), std::string::npos);
  EXPECT_NE(r.out.find("HOWE_FORGE_THREADS"), std::string::npos);
  EXPECT_EQ(run({"decompose", "--help"}).code, 0);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"decompose", "--k", "0", "--m", "1"}).code, 2);
  EXPECT_EQ(run({"decompose", "--m", "2"}).code, 2);
  EXPECT_EQ(run({"decompose", "--k", "2", "--convention", "xx"}).code, 2);
  EXPECT_EQ(run({"induce", "--k", "3", "--m-group", "2", "--weight", "2,a"}).code, 2);
  EXPECT_EQ(run({"induce", "--k", "3", "--m-group", "2", "--weight", "1,2"}).code, 2);
  EXPECT_EQ(run({"induce", "--k", "3", "--mn-group", "1,1", "--halfint", "1/3,0"}).code, 2);
  EXPECT_EQ(run({"induce", "--k", "3", "--mn-group", "1,1", "--signed", "1"}).code, 2);
  EXPECT_EQ(run({"induce", "--k", "3", "--mn-group", "1", "--weight", "4,-1"}).code, 2);
  EXPECT_EQ(run({"induce", "--k", "3", "--weight", "1"}).code, 2);
  EXPECT_EQ(run({"orbit", "--k", "3", "--m", "0"}).code, 2);
  EXPECT_EQ(run({"orbit", "--k", "3", "--m", "1", "--tolerance", "0"}).code, 2);
}

TEST(Cli, DecomposeHoweTable) {
  const auto r = run({"decompose", "--k", "2", "--m", "2", "--deg", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto ls = lines(r.out);
  EXPECT_EQ(ls.front(), "degree\tu_k\tu_m\tmultiplicity\tdim_u_k\tdim_u_m");
  EXPECT_NE(std::find(ls.begin(), ls.end(), "3\t(2,1)\t(2,1)\t1\t2\t2"), ls.end());
  EXPECT_NE(std::find(ls.begin(), ls.end(), "3\t2\t20\t20\t2\tpass"), ls.end());
  EXPECT_EQ(ls.back(), "result\tpass");
  EXPECT_EQ(r.out.find('\x1b'), std::string::npos);
}

TEST(Cli, DecomposeKvTableHasShiftedColumn) {
  const auto r = run({"decompose", "--k", "2", "--m", "1", "--n", "1", "--deg", "3", "--convention", "sq"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto ls = lines(r.out);
  EXPECT_NE(ls.front().find("m+k,n"), std::string::npos);
  EXPECT_NE(std::find(ls.begin(), ls.end(), "2\t1\t((2),(1))\t(2,-1)\t(4,-1)\t(2,-1)\t(4,-1)\t(4,-1)\tyes"), ls.end());
  EXPECT_EQ(ls.back(), "result\tpass");
}

TEST(Cli, DecomposeJsonUnderHalfForms) {
  const auto r = run({"decompose", "--k", "1", "--m", "1", "--deg", "2", "--convention", "hf", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json_of(r);
  EXPECT_EQ(j["convention"], "hf");
}

TEST(Cli, InduceCompact) {
  const auto r = run({"induce", "--k", "3", "--m-group", "2", "--weight", "2,1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json_of(r);
  EXPECT_EQ(j["dimension"], 8);
  EXPECT_EQ(j["highest_weight"], nlohmann::json({"2", "1", "0"}));
  EXPECT_EQ(j["commutant_dim"], 1);
}

TEST(Cli, InduceCompactTooManyRowsIsInfeasible) {
  EXPECT_EQ(run({"induce", "--k", "2", "--m-group", "2", "--weight", "1,1,1"}).code, 1);
}

TEST(Cli, InduceCompactEmptyWhenRowsExceedK) {
  const auto r = run({"induce", "--k", "2", "--m-group", "3", "--weight", "1,1,1", "--expect", "empty"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(json_of(r)["empty"].get<bool>());
  EXPECT_EQ(run({"induce", "--k", "2", "--m-group", "3", "--weight", "1,1,1"}).code, 1);
}

TEST(Cli, InduceCompactWrongDegreeHasNoInvariants) {
  const auto r = run({"induce", "--k", "3", "--m-group", "2", "--weight", "2,1", "--degree", "2", "--expect", "empty"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(json_of(r)["empty"].get<bool>());
}

TEST(Cli, InduceRenormalizedWeightIsEmpty) {
  const auto r = run({"induce", "--k", "3", "--mn-group", "1,1", "--halfint", "7/2,-3/2", "--expect", "empty"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json_of(r);
  EXPECT_TRUE(j["empty"].get<bool>());
  EXPECT_EQ(j["reason"], "weight is not integral");
  // the same call expecting a module is a falsification
  EXPECT_EQ(run({"induce", "--k", "3", "--mn-group", "1,1", "--halfint", "7/2,-3/2"}).code, 1);
}

TEST(Cli, InduceNoncompactWeight) {
  const auto r = run({"induce", "--k", "3", "--mn-group", "1,1", "--weight", "4,-1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json_of(r);
  EXPECT_EQ(j["dimension"], 8);
  EXPECT_EQ(j["highest_weight"], nlohmann::json({"1", "0", "-1"}));
}

TEST(Cli, InduceSignedMatchesWeight) {
  const auto a = json_of(run({"induce", "--k", "3", "--mn-group", "1,1", "--signed", "1:1"}));
  const auto b = json_of(run({"induce", "--k", "3", "--mn-group", "1,1", "--weight", "4,-1"}));
  EXPECT_EQ(a["highest_weight"], b["highest_weight"]);
  EXPECT_EQ(a["dimension"], b["dimension"]);
  // under half-forms the same label induces from (m+k/2, -(n+k/2))
  const auto c = json_of(run({"induce", "--k", "3", "--mn-group", "1,1", "--signed", "1:1", "--convention", "hf"}));
  EXPECT_EQ(c["inputs"]["weight"], nlohmann::json({"5/2", "-5/2"}));
  EXPECT_EQ(c["dimension"], 8);
}

TEST(Cli, InduceBelowKIsEmpty) {
  const auto r = run({"induce", "--k", "3", "--mn-group", "1,1", "--weight", "2,0", "--expect", "empty"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json_of(r)["reason"], "some a_i is smaller than k");
}

TEST(Cli, InduceTsv) {
  const auto r = run({"induce", "--k", "3", "--m-group", "2", "--weight", "2,1", "--format", "tsv"});
  ASSERT_EQ(r.code, 0);
  const auto ls = lines(r.out);
  EXPECT_NE(std::find(ls.begin(), ls.end(), "dimension\t8"), ls.end());
}

TEST(Cli, OrbitPasses) {
  const auto r = run({"orbit", "--k", "5", "--m", "2,1", "--n", "1", "--seeds", "10"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json_of(r);
  ASSERT_EQ(j["reports"].size(), 10u);
  for (const auto& rep : j["reports"]) EXPECT_TRUE(rep["pass"].get<bool>());
}

TEST(Cli, OrbitRankTooSmall) {
  const auto r = run({"orbit", "--k", "1", "--m", "1", "--n", "1"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("k >= 2"), std::string::npos);
}

TEST(Cli, OrbitSpectrum) {
  const auto r = run({"orbit", "--k", "3", "--m", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json_of(r)["reports"][0]["spectrum"], nlohmann::json({1.0, 0.0, 0.0}));
}

TEST(Cli, OrbitOutputIsDeterministic) {
  const std::vector<std::string> args = {"orbit", "--k", "4", "--m", "2", "--n", "1", "--seeds", "3", "--seed", "7", "--format", "tsv"};
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST(Cli, ConfigFileWithFlagOverride) {
  const std::string path = testing::TempDir() + "howe_forge_cli.ini";
  {
    std::ofstream f(path);
    f << "# test config\nformat = json\n[decompose]\nk = 2\nm = 2\ndeg = 2\n";
  }
  const auto a = run({"--config", path, "decompose"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(json_of(a)["d"], 2);
  const auto b = run({"--config", path, "decompose", "--deg", "1", "--format", "tsv"});
  ASSERT_EQ(b.code, 0) << b.err;
  EXPECT_EQ(lines(b.out).front().substr(0, 6), "degree");
  EXPECT_EQ(b.out.find("\n2\t"), std::string::npos);
  std::remove(path.c_str());
  EXPECT_EQ(run({"--config", path, "decompose"}).code, 2);
}

TEST(Cli, OutputFile) {
  const std::string path = testing::TempDir() + "howe_forge_cli.json";
  const auto r = run({"orbit", "--k", "3", "--m", "1", "--output", path});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  EXPECT_EQ(nlohmann::json::parse(ss.str())["k"], 3);
  std::remove(path.c_str());
}

TEST(Cli, ThreadCountDoesNotChangeOutput) {
  const std::vector<std::string> args = {"orbit", "--k", "4", "--m", "1", "--n", "1", "--seeds", "6", "--format", "tsv"};
  setenv("HOWE_FORGE_THREADS", "1", 1);
  const auto one = run(args);
  setenv("HOWE_FORGE_THREADS", "3", 1);
  const auto three = run(args);
  setenv("HOWE_FORGE_THREADS", "zero", 1);
  const auto bad = run(args);
  unsetenv("HOWE_FORGE_THREADS");
  EXPECT_EQ(one.out, three.out);
  EXPECT_EQ(bad.code, 2);
}
