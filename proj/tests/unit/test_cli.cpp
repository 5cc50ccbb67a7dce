#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include "einf/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = einf::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(EINF_DATA_DIR) + "/" + name; }

}  // namespace

TEST(Cli, Eval) {
  const auto r = run({"eval", "--d", "1", "--term", "delta", "--point", "1/4"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "(0), (1/2)\n");
  EXPECT_EQ(run({"eval", "--d", "1", "--term", "delta", "--point", "1/4", "--tolerance", "1e-9"}).code, 1);
  EXPECT_EQ(run({"eval", "--d", "1", "--term", "delta", "--point", "1/4", "--float", "--tolerance", "1e-9"}).code, 0);
}

TEST(Cli, Normalize) {
  EXPECT_EQ(run({"normalize", "delta ; (mu(1/2) | id)"}).code, 1);
  const auto a = run({"normalize", "delta ; (delta | id) ; (mu(1/2) | id)"});
  ASSERT_EQ(a.code, 0) << a.err;
  std::string nf = a.out;
  while (!nf.empty() && nf.back() == '\n') nf.pop_back();
  const auto b = run({"normalize", nf});
  EXPECT_EQ(b.code, 0) << b.err;
  EXPECT_EQ(b.out, a.out);
  const auto c = run({"normalize", "--shuffled", "--seed", "3", "delta ; (delta | id) ; (mu(1/2) | id)"});
  EXPECT_EQ(c.out, a.out);
}

TEST(Cli, Steenrod) {
  const auto r = run({"sq", "-k", "1", "--complex", data("rp2.sc"), "--cocycle", data("gen1.cc")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "# degree 2\n0 3 4\n# class: nonzero\n");
}

TEST(Cli, VerifyIsReproducible) {
  const auto a = run({"verify", "--suite", "2", "--seed", "5"});
  const auto b = run({"verify", "--suite", "2", "--seed", "5"});
  EXPECT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("PASS"), std::string::npos);
}

TEST(Cli, Formats) {
  EXPECT_EQ(run({"--format", "yaml", "parse", "delta"}).code, 1);
  const auto dot = run({"--format", "dot", "parse", "delta"});
  EXPECT_EQ(dot.code, 0) << dot.err;
  EXPECT_NE(dot.out.find("digraph"), std::string::npos);
  ::setenv(einf::cli::kFormatEnv, "json", 1);
  const auto js = run({"normalize", "delta"});
  ::unsetenv(einf::cli::kFormatEnv);
  EXPECT_EQ(js.code, 0) << js.err;
  EXPECT_EQ(js.out.front(), '{');
  EXPECT_EQ(run({"surface", "surj n=1 m=2 : 1:1 2:1"}).code, 0);
  EXPECT_EQ(run({"normalize", "--format", "json", "delta"}).out, js.out);
  EXPECT_EQ(run({"nonsense"}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
}
