#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  int code = proofid::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string trim(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == ' ')) s.pop_back();
  return s;
}

}  // namespace

TEST(Cli, GoldenExitCodes) {
  auto r = run({"eq", "--by", "gen", "p1[p,p]", "p2[p,p]", "--expect", "equal"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("different"), std::string::npos) << r.out;

  r = run({"eq", "--by", "gen", "p1[p,p]", "p2[p,p]"});
  EXPECT_EQ(r.code, 0);

  r = run({"eq", "--by", "norm", "comp(p1[p,p],pair(id[p],id[p]))", "id[p]"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("equal"), std::string::npos);
  EXPECT_EQ(r.out.find("different"), std::string::npos);

  r = run({"demo", "ccc-divergence"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("differ"), std::string::npos);

  EXPECT_EQ(run({"eq", "--by", "norm", "p1[p,q]", "id[p]"}).code, 2);
  EXPECT_EQ(run({"parse", "formula", "p &"}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"eq", "--no-such-flag", "id[p]", "id[p]"}).code, 2);
  EXPECT_EQ(run({"demo", "nope"}).code, 2);
  EXPECT_EQ(run({"iso", "p & p", "p", "--expect", "equal"}).code, 1);
  EXPECT_EQ(run({"iso", "p & q", "q & p", "--expect", "equal"}).code, 0);
  EXPECT_EQ(run({"probe-maximality", "comp(p1[p,p],pair(id[p],id[p]))", "id[p]"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

// Each verb reaches its operation with a valid input.
TEST(Cli, VerbCoverage) {
  const std::vector<std::vector<std::string>> calls{
      {"parse", "formula", "p & (q -> r)"},
      {"parse", "arrow", "pair(p2[p,q],p1[p,q])", "--fragment", "cart"},
      {"parse", "lambda", "\\x:p.x"},
      {"normalize", "comp(p1[p,p],pair(id[p],id[p]))"},
      {"normalize", "--lambda", "(\\x:p.x) (y:p)"},
      {"normalize", "--seed", "3", "--count", "50"},
      {"principal-type", "\\f.\\x.f (f x)"},
      {"principal-type", "p -> q", "r -> r", "--trace"},
      {"graph", "sum(p1[p,p],p2[p,p])", "--fragment", "matrix", "--support", "--decompose"},
      {"graph", "case(id[p],id[p])"},
      {"eq", "--by", "rewrite", "case(i1[p,q],i2[p,q])", "id[p | q]"},
      {"iso", "(p & q) -> r", "p -> q -> r"},
      {"iso", "p & q", "q & p", "--witness", "4"},
      {"enumerate", "p & p", "p", "--size", "3"},
      {"enumerate", "p & q", "p & q", "--size", "5", "--dedup"},
      {"check-coherence", "--size", "3", "--connectives", "1"},
      {"check-coherence", "--fragment", "conjdisj", "--size", "3", "--connectives", "1"},
      {"probe-maximality", "p1[p,p]", "p2[p,p]", "--depth", "1", "--size", "3"},
      {"demo", "zero-proof"},
  };
  for (const auto& c : calls) {
    auto r = run(c);
    EXPECT_EQ(r.code, 0) << c.front() << "\n" << r.out << r.err;
    EXPECT_FALSE(r.out.empty()) << c.front();
    auto s = c;
    s.push_back("--format");
    s.push_back("structured");
    auto rs = run(s);
    EXPECT_EQ(rs.code, 0) << c.front() << "\n" << rs.err;
    EXPECT_TRUE(rs.out.front() == '{' || rs.out.front() == '[') << c.front() << "\n" << rs.out;
  }
}

TEST(Cli, StructuredRoundTrip) {
  for (const auto& [kind, text] : std::vector<std::pair<std::string, std::string>>{
           {"formula", "(p -> q) & T"}, {"arrow", "curry(p1[p,q])"}, {"lambda", "\\x:p & q.(snd x, fst x)"}}) {
    auto plain = run({"parse", kind, text});
    auto tree = run({"parse", kind, text, "--format", "structured"});
    ASSERT_EQ(tree.code, 0) << tree.err;
    auto back = run({"parse", kind, trim(tree.out), "--from-structured"});
    ASSERT_EQ(back.code, 0) << back.err;
    EXPECT_EQ(back.out, plain.out);
  }
}

TEST(Cli, Deterministic) {
  std::vector<std::string> c{"check-coherence", "--size", "4", "--connectives", "2", "--format", "structured"};
  EXPECT_EQ(run(c).out, run(c).out);
}

TEST(Cli, EqFromFile) {
  auto path = std::filesystem::temp_directory_path() / "proofid_cli_eq.txt";
  {
    std::ofstream f(path);
    f << "# pairs\n"
      << "comp(p1[p,p],pair(id[p],id[p]))\nid[p]\n"
      << "\n"
      << "pair(p2[p,q],p1[p,q])\npair(p2[p,q],p1[p,q])\n";
  }
  EXPECT_EQ(run({"eq", "--file", path.string(), "--expect", "equal"}).code, 0);
  {
    std::ofstream f(path);
    f << "p1[p,p]\np2[p,p]\n";
  }
  EXPECT_EQ(run({"eq", "--file", path.string(), "--expect", "equal"}).code, 1);
  {
    std::ofstream f(path);
    f << "p1[p,p]\n";
  }
  EXPECT_EQ(run({"eq", "--file", path.string()}).code, 2);
  std::filesystem::remove(path);
  EXPECT_EQ(run({"eq", "--file", path.string()}).code, 2);
}
