#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "svg_check.hpp"

namespace rhombic {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

class TempDir : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("rhombic_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const auto path = dir_ / name;
    std::ofstream(path) << text;
    return path.string();
  }

  std::filesystem::path dir_;
};

const char* kWord7456312 = "3,4,2,5,6,5,3,4,3,2,1,5,2,3,6,4,5";

TEST(Cli, Tile) {
  const Result r = run({"tile", kWord7456312, "--n", "7"});
  ASSERT_EQ(r.code, 0) << r.err;
  const RhombicTiling t = parse_rhombic(r.out);
  EXPECT_EQ(t.tiles.size(), 17u);
  EXPECT_EQ(t.w, parse_permutation("7456312"));
  EXPECT_TRUE(validate(t));
  EXPECT_EQ(run({"tile", "1,2,1"}).out, serialize(word_to_tiling(Word(3, {1, 2, 1}))) + "\n");
}

TEST(Cli, Enumerate) {
  const Result r = run({"enumerate", "321"});
  ASSERT_EQ(r.code, 0);
  const auto out = lines(r.out);
  ASSERT_EQ(out.size(), 3u);
  EXPECT_EQ(out.back(), "2");
  EXPECT_EQ(lines(run({"enumerate", "4321"}).out).back(), "8");
  EXPECT_EQ(lines(run({"enumerate", "4321", "--zonotopal"}).out).back(), "17");
  EXPECT_EQ(lines(run({"enumerate", "1"}).out).back(), "1");
}

TEST(Cli, FlipGraph) {
  const auto adj = lines(run({"flipgraph", "4321"}).out);
  ASSERT_EQ(adj.size(), 8u);
  for (const auto& line : adj) EXPECT_EQ(line.find(':'), 16u);
  const std::string dot = run({"flipgraph", "321", "--dot"}).out;
  EXPECT_EQ(dot.rfind("graph flips {", 0), 0u);
  EXPECT_NE(dot.find("1,2,1"), std::string::npos);
  EXPECT_NE(dot.find(" -- "), std::string::npos);
}

TEST(Cli, Poset) {
  const auto out = lines(run({"poset", "4321"}).out);
  std::size_t elements = 0, maximal = 0;
  for (const auto& line : out) {
    elements += line.rfind("element ", 0) == 0;
    maximal += line.rfind("maximal ", 0) == 0;
  }
  EXPECT_EQ(elements, 17u);
  EXPECT_EQ(maximal, 1u);
  EXPECT_EQ(out[out.size() - 2], "unique_max yes");
  EXPECT_EQ(out.back(), "patterns 4231,4312,3421 avoids");

  const auto bad = lines(run({"poset", "4231"}).out);
  EXPECT_EQ(bad.back(), "patterns 4231,4312,3421 contains");
  EXPECT_EQ(bad[bad.size() - 2], "unique_max no");
}

TEST_F(TempDir, WordsAndPoincare) {
  const std::string path = write("t.json", run({"tile", "1,2,1"}).out);
  EXPECT_EQ(run({"words", path}).out, "1,2,1\n");
  EXPECT_EQ(run({"words", path, "--all"}).out, "1,2,1\n");
  EXPECT_EQ(run({"poincare", path}).out, "[1,3,3,1]\n");

  const std::string commuting = write("c.json", run({"tile", "1,3"}).out);
  EXPECT_EQ(run({"words", commuting, "--all"}).out, "1,3\n3,1\n");

  const std::string hex = write("h.json", R"({"n":3,"w":[3,2,1],"tiles":[{"labels":[1,2,3],"base":[]}]})");
  EXPECT_EQ(run({"poincare", hex}).out, "[1,2,2,1]\n");
  EXPECT_EQ(run({"words", hex}).code, cli::kInvalidInput);
}

TEST_F(TempDir, FixedPoints) {
  const std::string path = write("t.json", run({"tile", "1,2,1"}).out);
  EXPECT_EQ(run({"fixedpoints", path}).out, "fixed_points 8\n");
  const auto out = lines(run({"fixedpoints", path, "--images"}).out);
  EXPECT_EQ(out.front(), "fixed_points 8");
  EXPECT_EQ(out.back(), "distinct_images 6");
  EXPECT_EQ(out.size(), 8u);
}

TEST_F(TempDir, Render) {
  const std::string path = write("t.json", run({"tile", kWord7456312, "--n", "7"}).out);
  const Result r = run({"render", path});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(svgcheck::well_formed(r.out));
  EXPECT_EQ(svgcheck::polygons(r.out).size(), 17u);

  const std::string svg_path = (dir_ / "out.svg").string();
  ASSERT_EQ(run({"render", path, "--coloring", std::string(17, '1'), "-o", svg_path, "--no-labels"}).code, 0);
  std::ifstream in(svg_path);
  std::stringstream buf;
  buf << in.rdbuf();
  EXPECT_TRUE(svgcheck::well_formed(buf.str()));
  EXPECT_EQ(buf.str().find("<text"), std::string::npos);

  EXPECT_EQ(run({"render", path, "--coloring", "101"}).code, cli::kInvalidInput);
  EXPECT_EQ(run({"render", path, "--coloring", std::string(17, '2')}).code, cli::kInvalidInput);
}

TEST_F(TempDir, InvalidInput) {
  EXPECT_EQ(run({}).code, cli::kInvalidInput);
  EXPECT_EQ(run({"bogus"}).code, cli::kInvalidInput);
  EXPECT_EQ(run({"tile", "1,1"}).code, cli::kInvalidInput);
  EXPECT_EQ(run({"tile", "1,x"}).code, cli::kInvalidInput);
  EXPECT_EQ(run({"tile", "3", "--n", "3"}).code, cli::kInvalidInput);
  EXPECT_EQ(run({"enumerate", "1224"}).code, cli::kInvalidInput);
  EXPECT_EQ(run({"words", (dir_ / "missing.json").string()}).code, cli::kInvalidInput);
  const std::string garbage = write("g.json", "{\"n\":");
  EXPECT_EQ(run({"words", garbage}).code, cli::kInvalidInput);
  EXPECT_EQ(run({"render", garbage}).code, cli::kInvalidInput);
  const std::string invalid = write("i.json", R"({"n":2,"w":[1,2],"tiles":[{"pair":[1,2],"base":[]}]})");
  const Result r = run({"fixedpoints", invalid});
  EXPECT_EQ(r.code, cli::kInvalidInput);
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, GuardExceeded) {
  EXPECT_EQ(run({"enumerate", "87654321"}).code, cli::kGuardExceeded);
  EXPECT_EQ(run({"enumerate", "987654321", "--zonotopal"}).code, cli::kGuardExceeded);
}

TEST(Cli, Deterministic) {
  for (const std::vector<std::string>& args : std::vector<std::vector<std::string>>{
           {"enumerate", "4321", "--zonotopal"}, {"poset", "54312"}, {"flipgraph", "52341"}}) {
    EXPECT_EQ(run(args).out, run(args).out);
  }
}

TEST(Cli, Help) {
  const Result r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("enumerate"), std::string::npos);
}

}  // namespace
}  // namespace rhombic
