#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "dtopo/generators.hpp"
#include "dtopo/simplicial.hpp"
#include "json.hpp"

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = dtopo::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string value_of(const std::string& text, const std::string& key) {
  std::istringstream lines(text);
  for (std::string line; std::getline(lines, line);)
    if (line.rfind(key + "=", 0) == 0) return line.substr(key.size() + 1);
  return "<missing>";
}

}  // namespace

TEST(Cli, GenThenClassifyFromStdin) {
  const Outcome gen = run({"gen", "sphere", "2"});
  ASSERT_EQ(gen.code, 0) << gen.err;
  const Outcome cls = run({"classify", "--mode", "both"}, gen.out);
  ASSERT_EQ(cls.code, 0) << cls.err;
  EXPECT_EQ(value_of(cls.out, "kind"), "surface");
  EXPECT_EQ(value_of(cls.out, "agreement"), "true");
  EXPECT_EQ(value_of(cls.out, "rank"), "2");
}

TEST(Cli, FileRoundTripMatchesInProcess) {
  const auto path = std::filesystem::temp_directory_path() / "dtopo-cli-annulus.facets";
  ASSERT_EQ(run({"gen", "annulus", "5", "-o", path.string()}).code, 0);
  std::ifstream in(path);
  EXPECT_EQ(dtopo::read_facets(in), dtopo::annulus(5));

  const Outcome cls = run({"classify", path.string(), "--mode", "recursive", "--json"});
  ASSERT_EQ(cls.code, 0) << cls.err;
  const auto j = nlohmann::json::parse(cls.out);
  EXPECT_EQ(j["exit_status"], 0);
  EXPECT_EQ(j["instance"]["faces"], dtopo::annulus(5).size());
  EXPECT_EQ(j["classification"]["kind"], "pcm");
  EXPECT_EQ(j["classification"]["smooth_pcm"], true);
  std::filesystem::remove(path);
}

TEST(Cli, HasseInputForKhalimsky) {
  const Outcome gen = run({"gen", "khalimsky", "3", "3"});
  ASSERT_EQ(gen.code, 0) << gen.err;
  EXPECT_EQ(gen.out.rfind("rank 2", 0), 0u);
  const Outcome cls = run({"classify", "--mode", "recursive"}, gen.out);
  ASSERT_EQ(cls.code, 0) << cls.err;
  EXPECT_EQ(value_of(cls.out, "format"), "hasse");
  EXPECT_EQ(value_of(cls.out, "kind"), "pcm");
  EXPECT_EQ(run({"classify"}, gen.out).code, 1);  // fast path needs a complex
  EXPECT_EQ(run({"gen", "khalimsky", "1", "1", "--format", "facets"}).code, 1);

  const Outcome border = run({"border"}, gen.out);
  ASSERT_EQ(border.code, 0) << border.err;
  std::istringstream hasse(border.out);
  EXPECT_EQ(dtopo::read_hasse(hasse).size(), 24u);
}

TEST(Cli, CheckPrintsOneProperty) {
  const std::string disk = run({"gen", "disk", "5"}).out;
  EXPECT_EQ(value_of(run({"check", "--smooth"}, disk).out, "smooth"), "true");
  EXPECT_EQ(value_of(run({"check", "--surface"}, disk).out, "surface"), "false");
  EXPECT_EQ(value_of(run({"check", "--condition-c"}, disk).out, "condition-c"), "true");
  const std::string pinched = run({"gen", "pinched-sphere"}).out;
  EXPECT_EQ(value_of(run({"check", "--pseudomanifold"}, pinched).out, "pseudomanifold"), "true");
  EXPECT_EQ(value_of(run({"check", "--normal"}, pinched).out, "normal"), "false");
  EXPECT_EQ(run({"check"}, disk).code, 1);
  EXPECT_EQ(run({"check", "--surface", "--pcm"}, disk).code, 1);
}

TEST(Cli, ErrorsExitWithOne) {
  const Outcome unknown = run({"classify", "--bogus"});
  EXPECT_EQ(unknown.code, 1);
  EXPECT_NE(unknown.err.find("error"), std::string::npos);
  const Outcome parse = run({"classify"}, "0 1\n1 x\n");
  EXPECT_EQ(parse.code, 1);
  EXPECT_NE(parse.err.find("line 2"), std::string::npos);
  EXPECT_EQ(run({"gen", "annulus", "2"}).code, 1);
  EXPECT_EQ(run({"gen", "nothing"}).code, 1);
  EXPECT_EQ(run({"classify", "/nonexistent/file"}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({}).code, 1);
}

TEST(Cli, EmptyInputIsTheEmptyOrder) {
  const Outcome r = run({"classify", "--json"}, "");
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["instance"]["rank"], -1);
  EXPECT_EQ(j["classification"]["surface"], true);
  EXPECT_EQ(j["classification"]["pcm"], true);
}

TEST(Cli, BenchReportsNoDisagreements) {
  const Outcome r = run({"bench", "--random", "10", "--max-sphere", "2",
                     "--dump-dir", (std::filesystem::temp_directory_path() / "dtopo-bench").string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("disagreements=0"), std::string::npos);
}
