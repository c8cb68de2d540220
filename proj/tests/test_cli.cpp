#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"
#include "cunningham/report.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cunningham::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool has(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST(Cli, Chains) {
  EXPECT_EQ(run({"chains", "--length", "3", "--max", "30"}).out, "(23,11,5)\n");
  EXPECT_EQ(run({"chains", "--length", "2", "--max", "12"}).out, "(7,3)\n(11,5)\n");
  EXPECT_EQ(run({"chains", "--length", "1", "--max", "3"}).out, "(3)\n");
}

TEST(Cli, Groups) {
  const auto r = run({"groups", "23", "11", "5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has(r.out, "0\tI={}\tC_1265\n"));
  EXPECT_TRUE(has(r.out, "1\tI={2}\t(C_23 ⋊ C_11) × C_5\n"));
  EXPECT_TRUE(has(r.out, "2\tI={3}\tC_23 × (C_11 ⋊ C_5)\n"));
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 4);
  const auto r2 = run({"groups", "7", "3"});
  EXPECT_EQ(std::count(r2.out.begin(), r2.out.end(), '\n'), 3);
  EXPECT_EQ(run({"groups", "3"}).out, "index\tshape\tstructure\n0\tI={}\tC_3\n");
}

TEST(Cli, ValidationErrorsExitTwo) {
  EXPECT_EQ(run({"verify", "13", "5"}).code, 2);
  EXPECT_EQ(run({"classify", "7", "3", "--shape", "5"}).code, 2);
  EXPECT_EQ(run({"classify", "23", "11", "5", "--shape", "I=2,3"}).code, 2);
  EXPECT_EQ(run({"classify", "7", "3", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, VerifyFull) {
  const auto r = run({"verify", "7", "3", "--level", "full"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(has(r.out, "PASS  cyclic classes: expected 12, got 12\n"));
  EXPECT_TRUE(has(r.out, "PASS  I={2} structured and oracle subgroup sets are equal\n"));
  EXPECT_FALSE(has(r.out, "FAIL"));
}

TEST(Cli, VerifyFullWithSkipsExitsThree) {
  const auto r = run({"verify", "7", "3", "--level", "full", "--oracle-cap", "100"});
  EXPECT_EQ(r.code, 3);
  EXPECT_TRUE(has(r.out, "SKIP  I={} oracle"));
  EXPECT_EQ(run({"verify", "7", "3", "--oracle-cap", "100"}).code, 0);
}

TEST(Cli, ClassifyCsvTable) {
  const auto r = run({"classify", "7", "3", "--shape", "1", "--format", "csv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has(r.out, "structure,groups,aut_mm,hgs\n"));
  EXPECT_TRUE(has(r.out, "C_{pq},14,12,4\n"));
  EXPECT_TRUE(has(r.out, "N ⋊ (C_p ⋊ C_q),1,84,2\n"));
  EXPECT_TRUE(has(r.out, "total,108,,60\n"));
  EXPECT_TRUE(has(r.err, "classifying I={2}"));
}

TEST(Cli, ClassifyJsonSchema) {
  const auto r = run({"classify", "7", "3", "--shape", "I=2", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["chain"], nlohmann::json({7, 3}));
  EXPECT_EQ(j["type"], "I={2}");
  EXPECT_EQ(j["classes"].size(), 12u);
  EXPECT_EQ(j["totals"]["classes"], 12);
  EXPECT_EQ(j["totals"]["transitive_subgroups"], 108);
  EXPECT_EQ(j["totals"]["hgs_by_type"]["I={2}"], 60);
  for (const auto& c : j["classes"])
    for (const char* k : {"label", "class_size", "aut_mm", "hgs"}) EXPECT_TRUE(c.contains(k));
}

TEST(Cli, ReportsAreDeterministic) {
  const std::vector<std::string> args = {"classify", "11", "5", "--shape", "0", "--format", "md"};
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST(Cli, EnumerateWithOracle) {
  const auto r = run({"enumerate", "7", "3", "--shape", "0", "--oracle"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has(r.out, "transitive subgroups: 14\n"));
  EXPECT_TRUE(has(r.out, "structured/oracle set equality: structured 14, oracle 14, equal\n"));
  EXPECT_EQ(run({"enumerate", "7", "3", "--oracle", "--oracle-cap", "100"}).code, 3);
}

TEST(Cli, EnumerateEmitsGenerators) {
  const auto r = run({"enumerate", "3", "--emit", "generators"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has(r.out, "1\tJ_{} t=() ⋊ ⟨1⟩\n  (0 1 2)\n")) << r.out;
}

TEST(Cli, OracleCapFromEnvironment) {
  setenv("HGS_ORACLE_CAP", "100", 1);
  EXPECT_EQ(run({"enumerate", "7", "3", "--oracle"}).code, 3);
  EXPECT_EQ(run({"enumerate", "7", "3", "--oracle", "--oracle-cap", "1000"}).code, 0);
  setenv("HGS_ORACLE_CAP", "lots", 1);
  EXPECT_EQ(run({"enumerate", "7", "3", "--oracle"}).code, 2);
  unsetenv("HGS_ORACLE_CAP");
}

TEST(Cli, CountLengthFour) {
  const auto r = run({"count", "47", "23", "11", "5", "--shape", "0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "1121 classes");
}

TEST(Report, EmptyClassListIsHeaderOnly) {
  using namespace cunningham;
  ClassTable t{validate_chain({7, 3}), "I={}", "C_21", {}};
  EXPECT_EQ(emit_table(t, Format::Csv), "structure,groups,aut_mm,hgs\n");
  EXPECT_EQ(emit_table(t, Format::Markdown), "| Structure | # groups | \\|Aut(M,M')\\| | # HGS |\n|---|---:|---:|---:|\n");
  EXPECT_EQ(emit_tables({}, Format::Csv), "structure,groups,aut_mm,hgs\n");
  const auto j = nlohmann::json::parse(emit_table(t, Format::Json));
  EXPECT_TRUE(j["classes"].empty());
  EXPECT_EQ(j["totals"]["classes"], 0);
}

TEST(Report, CsvQuotesCommas) {
  using namespace cunningham;
  ClassTable t{validate_chain({7, 3}), "I={}", "C_21", {}};
  HgsClass c;
  c.label = "a, b";
  c.class_size = 1;
  t.classification.classes.push_back(c);
  EXPECT_TRUE(emit_table(t, Format::Csv).find("\"a, b\",1,0,0\n") != std::string::npos);
  EXPECT_THROW(parse_format("xml"), std::invalid_argument);
}
