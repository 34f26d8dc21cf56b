#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace fs = std::filesystem;
using namespace defdom;

namespace {

class Cli : public ::testing::Test {
protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("defdom_cli_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& body) {
    auto p = (dir_ / name).string();
    std::ofstream(p) << body;
    return p;
  }
  std::string path(const std::string& name) { return (dir_ / name).string(); }

  std::string graph_file(const std::string& name, const Graph& g,
                         const std::vector<std::pair<std::string, long long>>& params = {}) {
    std::ostringstream os;
    write_graph(os, g, params);
    return file(name, os.str());
  }

  int run(std::vector<std::string> args) {
    out_.str("");
    log_.str("");
    return cli::run(std::move(args), out_, log_);
  }

  std::string summary() const {
    std::string s = out_.str();
    if (!s.empty() && s.back() == '\n') s.pop_back();
    return s.substr(s.rfind('\n') == std::string::npos ? 0 : s.rfind('\n') + 1);
  }

  fs::path dir_;
  std::ostringstream out_, log_;
};

std::string slurp(const std::string& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const char* kWinning =
    "p e2cnf 1 2 7\n-1 2 3 0\n-1 2 -3 0\n-1 -2 3 0\n-1 -2 -3 0\n-1 2 3 0\n-1 2 -3 0\n-1 -2 3 0\n";

}  // namespace

TEST_F(Cli, Verify) {
  auto star = graph_file("star.txt", star_graph(5));
  EXPECT_EQ(run({"verify", star, file("d.txt", "1 2\n"), "-k", "2"}), 0);
  EXPECT_EQ(summary(), "verdict=good value=2 certificate=none");
  auto p3 = graph_file("p3.txt", path_graph(3));
  EXPECT_EQ(run({"verify", p3, file("d2.txt", "2 1\n"), "-k", "2", "-o", path("v.txt")}), 1);
  EXPECT_EQ(summary(), "verdict=bad value=1,3 certificate=" + path("v.txt"));
  EXPECT_EQ(slurp(path("v.txt")), "1\n3\n");
  EXPECT_EQ(run({"verify", p3, file("bad.txt", "x y z\n"), "-k", "2"}), 2);
  EXPECT_EQ(run({"verify", p3, file("d3.txt", "2\n"), "-k", "0"}), 2);
  EXPECT_EQ(run({"verify", p3, file("d4.txt", "2\n"), "-k", "2", "--strategy", "exhaustive"}), 1);
}

TEST_F(Cli, SolveExact) {
  auto star = graph_file("star.txt", star_graph(5));
  EXPECT_EQ(run({"solve-exact", star, "-k", "2"}), 0);
  EXPECT_EQ(summary(), "verdict=optimal value=5 certificate=none");
  EXPECT_EQ(run({"solve-exact", star, "-k", "2", "--multiset", "-o", path("w.txt")}), 0);
  EXPECT_EQ(summary(), "verdict=optimal value=2 certificate=" + path("w.txt"));
  EXPECT_EQ(run({"verify", star, path("w.txt"), "-k", "2"}), 0);
  EXPECT_EQ(run({"solve-exact", graph_file("c4.txt", cycle_graph(4)), "-k", "1"}), 0);
  EXPECT_EQ(summary(), "verdict=optimal value=2 certificate=none");

  auto attacks = file("a.txt", "2 3\n4 5\n");
  EXPECT_EQ(run({"solve-exact", star, "--attacks", attacks, "--upper", file("u.txt", "1 2\n")}), 0);
  EXPECT_EQ(summary(), "verdict=optimal value=2 certificate=none");
  EXPECT_EQ(run({"solve-exact", star, "--attacks", attacks, "--upper", file("u1.txt", "1 1\n")}), 1);
  EXPECT_EQ(run({"solve-exact", star, "--attacks", attacks, "--lower", file("l.txt", "2 1\n"), "--upper",
                 path("u1.txt")}),
            2);
}

TEST_F(Cli, Greedy) {
  auto star = file("star.iv", "p intervals 6\n1 0 10\n2 1 2\n3 3 4\n4 5 6\n5 7 8\n6 8.5 9\n");
  EXPECT_EQ(run({"greedy", star, "-k", "2", "--emit-defense", path("d.txt")}), 0);
  EXPECT_EQ(summary(), "verdict=value value=2 certificate=" + path("d.txt"));
  EXPECT_EQ(slurp(path("d.txt")), "1 2\n");
  auto dis = file("dis.iv", "p intervals 5\n1 0 1\n2 2 3\n3 4 5\n4 6 7\n5 8 9\n");
  EXPECT_EQ(run({"greedy", dis, "-k", "1"}), 0);
  EXPECT_EQ(summary(), "verdict=value value=5 certificate=none");
  ASSERT_EQ(run({"gen", "interval", "-n", "10", "--seed", "5", "-o", path("r.iv")}), 0);
  EXPECT_EQ(run({"greedy", path("r.iv"), "-k", "2", "--check"}), 0);
  EXPECT_EQ(run({"greedy", file("touch.iv", "p intervals 2\n1 0 2\n2 2 3\n"), "-k", "1"}), 2);
  EXPECT_NE(log_.str().find("share endpoint"), std::string::npos);
  EXPECT_EQ(run({"greedy", file("tie.iv", "p intervals 2\n1 0 1\n2 0 2\n"), "-k", "1"}), 0);
}

TEST_F(Cli, ReduceAndAudit) {
  Graph k4p(5, std::vector<Edge>{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}, {4, 5}});
  auto src = graph_file("k4p.txt", k4p, {{"s", 1}, {"t", 4}});
  EXPECT_EQ(run({"reduce", "cnd-to-dds", src, "-o", path("dds.txt")}), 0);
  EXPECT_EQ(summary(), "verdict=built value=k=6,ell=39 certificate=" + path("dds.txt"));
  auto dds = read_graph_file(path("dds.txt"));
  EXPECT_EQ(dds.graph.n(), 137);
  EXPECT_EQ(dds.params.at("ell"), 39);
  EXPECT_EQ(run({"reduce", "cnd-to-dds", src, "--ell-mode", "literal", "-o", path("dds2.txt")}), 0);
  EXPECT_EQ(summary(), "verdict=built value=k=6,ell=41 certificate=" + path("dds2.txt"));
  EXPECT_EQ(run({"reduce", "cnd-to-dds", src, "-t", "3", "-o", path("x.txt")}), 2);

  EXPECT_EQ(run({"audit", "dds-forward", src, "--deletion", file("x1.txt", "1\n")}), 0);
  EXPECT_EQ(run({"audit", "dds-forward", src, "--deletion", file("x5.txt", "5\n")}), 1);
  EXPECT_NE(log_.str().find("serious attack"), std::string::npos);
  EXPECT_EQ(run({"audit", "dds-roundtrip", src, "--deletion", path("x1.txt")}), 0);
  EXPECT_EQ(run({"audit", "dds-roundtrip", src, "--deletion", path("x5.txt")}), 1);
  EXPECT_EQ(run({"audit", "dds-forward", src}), 2);
}

TEST_F(Cli, FormulaCommands) {
  auto win = file("win.cnf", kWinning);
  EXPECT_EQ(run({"e2sat", win}), 0);
  EXPECT_EQ(summary(), "verdict=yes value=1 certificate=none");
  std::string seven;
  for (int i = 0; i < 7; ++i) seven += "1 2 3 0\n";
  auto no = file("no.cnf", "p e2cnf 2 1 7\n" + seven);
  EXPECT_EQ(run({"e2sat", no, "-o", path("ref.txt")}), 1);
  EXPECT_EQ(slurp(path("ref.txt")).size(), 4u * 5u);
  EXPECT_EQ(run({"e2sat", file("bad.cnf", "p e2cnf 1 2 1\n1 -1 2 0\n")}), 2);

  EXPECT_EQ(run({"reduce", "e2sat-to-cnd", no, "-o", path("cnd.txt")}), 0);
  EXPECT_EQ(summary(), "verdict=built value=s=35,t=8 certificate=" + path("cnd.txt"));
  auto five = file("five.cnf", "p e2cnf 2 1 5\n1 2 3 0\n1 2 3 0\n1 2 3 0\n1 2 3 0\n1 2 3 0\n");
  EXPECT_EQ(run({"reduce", "e2sat-to-cnd", five, "-o", path("c5.txt")}), 2);

  EXPECT_EQ(run({"audit", "cnd-certificate", win, "--nu", "1"}), 0);
  EXPECT_EQ(run({"audit", "cnd-certificate", win, "--nu", "0", "--mu", "00", "-o", path("q.txt")}), 0);
  auto q = read_vertex_set_file(path("q.txt"));
  EXPECT_EQ(q.size(), 9u);
  EXPECT_EQ(run({"audit", "cnd-certificate", win, "--nu", "0"}), 1);
  EXPECT_EQ(run({"audit", "cnd-certificate", win, "--nu", "1", "--mu", "11"}), 2);

  ASSERT_EQ(run({"reduce", "e2sat-to-cnd", win, "-o", path("w.txt")}), 0);
  EXPECT_EQ(run({"clique", path("w.txt"), "--typed"}), 0);
  EXPECT_EQ(run({"clique", path("w.txt"), "--typed", "--deletion", path("q.txt")}), 0);
}

TEST_F(Cli, CliqueAndTypedAudit) {
  auto small = file("small.cnf", "p e2cnf 1 2 3\n1 2 3 0\n-1 -2 3 0\n1 -2 -3 0\n");
  ASSERT_EQ(run({"reduce", "e2sat-to-cnd", small, "--allow-small", "-o", path("g.txt")}), 0);
  EXPECT_EQ(run({"audit", "clique-typed", path("g.txt")}), 0);
  EXPECT_EQ(summary(), "verdict=pass value=clique certificate=none");
  EXPECT_EQ(run({"audit", "clique-typed", graph_file("plain.txt", complete_graph(4)), "-t", "3"}), 2);

  auto pet = graph_file("pet.txt", petersen_graph());
  EXPECT_EQ(run({"clique", pet, "-t", "3"}), 1);
  EXPECT_EQ(run({"clique", pet, "-t", "2", "-o", path("e.txt")}), 0);
  EXPECT_EQ(run({"solve-cnd", graph_file("k5.txt", complete_graph(5)), "-s", "2", "-t", "4"}), 0);
  EXPECT_EQ(summary(), "verdict=yes value=1,2 certificate=none");
  EXPECT_EQ(run({"solve-cnd", path("k5.txt"), "-s", "1", "-t", "4"}), 1);
}

TEST_F(Cli, Generators) {
  ASSERT_EQ(run({"gen", "interval", "-n", "10", "--seed", "1", "-o", path("a.iv")}), 0);
  ASSERT_EQ(run({"gen", "interval", "-n", "10", "--seed", "1", "-o", path("b.iv")}), 0);
  EXPECT_EQ(slurp(path("a.iv")), slurp(path("b.iv")));
  EXPECT_NE(log_.str().find("seed 1"), std::string::npos);
  ASSERT_EQ(run({"gen", "star", "-n", "5", "-o", path("s.txt")}), 0);
  auto s = read_graph_file(path("s.txt"));
  EXPECT_EQ(s.graph.edges(), star_graph(5).edges());
  ASSERT_EQ(run({"gen", "random", "-n", "10", "-p", "0.4", "--seed", "3", "-o", path("r.txt")}), 0);
  EXPECT_EQ(read_graph_file(path("r.txt")).graph.n(), 10);
  ASSERT_EQ(run({"gen", "formula", "-a", "2", "-b", "2", "-c", "7", "--seed", "2", "-o", path("f.cnf")}), 0);
  EXPECT_EQ(read_formula_file(path("f.cnf")).c(), 7);
  EXPECT_EQ(run({"gen", "hexagon", "-o", path("h.txt")}), 2);
  EXPECT_EQ(run({"gen", "random", "-p", "2", "-o", path("h.txt")}), 2);
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(run({}), 2);
  EXPECT_EQ(run({"frobnicate"}), 2);
  EXPECT_EQ(run({"verify"}), 2);
  EXPECT_EQ(run({"verify", path("missing.txt"), path("missing2.txt"), "-k", "1"}), 2);
  EXPECT_EQ(run({"--help"}), 0);
}

TEST_F(Cli, BinaryExitCodesAndTimeLimit) {
  const char* bin = std::getenv("DEFDOM_BIN");
  if (bin == nullptr) GTEST_SKIP() << "DEFDOM_BIN not set";
  auto star = graph_file("star.txt", star_graph(5));
  auto status = [](int raw) { return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1; };
  std::string b = bin;
  EXPECT_EQ(status(std::system((b + " verify " + star + " " + file("d.txt", "1 2\n") + " -k 2 >/dev/null 2>&1").c_str())), 0);
  EXPECT_EQ(status(std::system((b + " verify " + star + " " + file("e.txt", "1 1\n") + " -k 2 >/dev/null 2>&1").c_str())), 1);
  EXPECT_EQ(status(std::system((b + " nonsense >/dev/null 2>&1").c_str())), 2);
  // An exponential exact search on 40 vertices cannot finish in 0.2 s.
  auto big = graph_file("big.txt", random_graph(40, 0.1, 1));
  auto cmd = b + " --time-limit 0.2 solve-exact " + big + " -k 3 > " + path("out.txt") + " 2>/dev/null";
  EXPECT_EQ(status(std::system(cmd.c_str())), 3);
  EXPECT_NE(slurp(path("out.txt")).find("verdict=timeout"), std::string::npos);
}
