#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "splitclust_cli/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args, const std::string& stdin_text = "") {
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    const int code = splitclust::cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("splitclust_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string file(const std::string& name, const std::string& content) {
        const auto p = dir_ / name;
        std::ofstream(p, std::ios::binary) << content;
        return p.string();
    }
    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    fs::path dir_;
};

const std::string kBadTriangle = "ccg 3 complete\ne 0 1 b\ne 1 2 b\n";

}  // namespace

TEST_F(Cli, LowerBound) {
    const auto r = run({"lb", file("t.ccg", kBadTriangle)});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "1\n");
}

TEST_F(Cli, VerifyValidAndInvalid) {
    const auto g = file("t.ccg", kBadTriangle);
    const auto ok = run({"verify", g, file("ok.clu", "clustering 2\nc 0 1\nc 1 2\n")});
    EXPECT_EQ(ok.code, 0);
    EXPECT_EQ(ok.out, "");
    const auto bad = run({"verify", g, file("bad.clu", "clustering 1\nc 0 1 2\n")});
    EXPECT_EQ(bad.code, 1);
    EXPECT_EQ(bad.out, "unresolved-red 0 2\n");
}

TEST_F(Cli, ReduceCcvsToMcvs) {
    const auto r = run({"reduce", "ccvs-to-mcvs", file("t.ccg", kBadTriangle), "--budget", "1"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "mcvs 3 2 1 1\ne 0 1\ne 1 2\nt 0 2\n");
}

TEST_F(Cli, ReduceRoundTripThroughFiles) {
    const auto inst = file("i.mcvs", "mcvs 3 2 1 1\ne 0 1\ne 1 2\nt 0 2\n");
    const auto sol = file("s.mcsol", "mcsol 3\ns 1 : 0 | 2\n");
    EXPECT_EQ(run({"reduce", "verify-multicut", inst, sol}).code, 0);
    EXPECT_EQ(run({"reduce", "verify-multicut", inst, file("e.mcsol", "mcsol 3\n")}).code, 1);
    const auto clu = run({"reduce", "multicut-to-clustering", inst, sol});
    EXPECT_EQ(clu.code, 0);
    EXPECT_EQ(clu.out, "clustering 2\nc 0 1\nc 1 2\n");
    const auto back = run({"reduce", "mcvs-to-ccvs", inst});
    EXPECT_EQ(back.out, "ccg 3 incomplete\ne 0 1 b\ne 0 2 r\ne 1 2 b\n# budget 1\n");
    const auto g = file("g.ccg", back.out);
    const auto ms = run({"reduce", "clustering-to-multicut", g, file("f.clu", clu.out)});
    EXPECT_EQ(ms.out, "mcsol 3\ns 1 : 0 | 2\n");
    EXPECT_EQ(run({"reduce", "multicut-to-clustering", inst, file("w.mcsol", "mcsol 4\n")}).code, 2);
}

TEST_F(Cli, ExactDecideAndApprox) {
    const auto g = file("t.ccg", kBadTriangle);
    const auto ex = run({"exact", g});
    EXPECT_EQ(ex.code, 0);
    EXPECT_EQ(run({"verify", g, file("x.clu", ex.out)}).code, 0);
    EXPECT_EQ(run({"decide", g, "0"}).out, "no\n");
    EXPECT_EQ(run({"decide", g, "0"}).code, 1);
    EXPECT_EQ(run({"decide", g, "1"}).code, 0);
    EXPECT_EQ(run({"exact", g, "--budget", "0"}).code, 1);

    const auto ap = run({"approx", g});
    EXPECT_EQ(ap.code, 0);
    EXPECT_EQ(run({"verify", g, file("a.clu", ap.out)}).code, 0);
}

TEST_F(Cli, ApproxGuessTable) {
    // Two cliques {3,4} and {5,6} hang off the bad triangle 0-1-2.
    const auto g = file("g.ccg", "ccg 7 complete\ne 0 1 b\ne 1 2 b\ne 0 3 b\ne 3 4 b\ne 2 5 b\ne 5 6 b\n");
    const auto r = run({"approx", g, "--guess-all"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("# path simple-solution\n"), std::string::npos);
    EXPECT_NE(r.out.find("# none "), std::string::npos);
    EXPECT_NE(r.out.find(" *\n"), std::string::npos);
    const auto j = nlohmann::json::parse(run({"approx", g, "--guess-all", "--json"}).out);
    EXPECT_EQ(j["guesses"].size(), 3u);
}

TEST_F(Cli, KernelAndLift) {
    const auto g = file("t.ccg", kBadTriangle);
    const auto ktx = path("t.ktx");
    const auto k = run({"kernel", g, "1", "--transcript", ktx});
    EXPECT_EQ(k.code, 0);
    EXPECT_EQ(k.out, kBadTriangle);
    const auto lifted = run({"lift", file("k.clu", "clustering 2\nc 0 1\nc 1 2\n"), ktx});
    EXPECT_EQ(lifted.code, 0);
    EXPECT_EQ(run({"verify", g, file("l.clu", lifted.out)}).code, 0);

    const auto two = file("two.ccg", "ccg 6 complete\ne 0 1 b\ne 1 2 b\ne 3 4 b\ne 4 5 b\n");
    const auto no = run({"kernel", two, "1"});
    EXPECT_EQ(no.code, 1);
    EXPECT_EQ(no.out, "no\n");
}

TEST_F(Cli, StatsAndJson) {
    const auto g = file("t.ccg", kBadTriangle);
    const auto s = run({"stats", g});
    EXPECT_EQ(s.out,
              "n 3\ncomplete yes\nblue 2\nred 1\nneutral 0\nblue_components 1\ncluster_graph no\nlower_bound 1\n");
    const auto j = nlohmann::json::parse(run({"lb", g, "--json"}).out);
    EXPECT_EQ(j["command"], "lb");
    EXPECT_EQ(j["input"], g);
    EXPECT_EQ(j["bound"], 1);
    const auto v = nlohmann::json::parse(run({"verify", g, file("b.clu", "clustering 1\nc 0 1 2\n"), "--json"}).out);
    EXPECT_EQ(v["valid"], false);
    const auto e = nlohmann::json::parse(run({"exact", g, "--json"}).out);
    EXPECT_EQ(e["cost"], 1);
}

TEST_F(Cli, StdinInput) {
    const auto r = run({"lb", "-"}, kBadTriangle);
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "1\n");
    EXPECT_EQ(run({"verify", "-", "-"}, kBadTriangle).code, 2);
}

TEST_F(Cli, Generators) {
    const auto r = run({"gen", "random", "5", "--seed", "42"});
    EXPECT_EQ(r.out, "ccg 5 complete\ne 0 2 b\ne 0 3 b\ne 0 4 b\ne 1 2 b\ne 1 4 b\ne 2 4 b\n");
    EXPECT_EQ(run({"gen", "random", "4", "--p-blue", "0.3", "--p-red", "0.3", "--incomplete"}).code, 0);
    EXPECT_EQ(run({"gen", "random", "4", "--p-blue", "0.3"}).code, 2);
    const auto dim = file("k3.dim", "p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n");
    EXPECT_EQ(run({"gen", "coloring-gadget", dim, "3"}).out, "mcvs 4 3 3 2\ne 0 3\ne 1 3\ne 2 3\nt 0 1\nt 0 2\nt 1 2\n");
    EXPECT_EQ(run({"gen", "coloring-gadget", dim, "2"}).code, 2);
    const auto vc = run({"gen", "vc-gadget", dim, "1"});
    EXPECT_EQ(vc.code, 0);
    EXPECT_EQ(run({"decide", "-", "1"}, vc.out).code, 1);
}

TEST_F(Cli, UsageAndFormatErrors) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"lb", "--bogus", "x"}).code, 2);
    EXPECT_EQ(run({"lb", path("missing.ccg")}).code, 2);
    const auto bad = run({"lb", file("bad.ccg", "ccg 3 complete\ne 0 1 b\ne 0 1 r\n")});
    EXPECT_EQ(bad.code, 2);
    EXPECT_NE(bad.err.find("line 3"), std::string::npos);
    EXPECT_EQ(bad.out, "");
    EXPECT_EQ(run({"approx", file("i.ccg", "ccg 3 incomplete\n")}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST_F(Cli, ResourceExhausted) {
    const auto big = run({"gen", "random", "13", "--seed", "3"});
    EXPECT_EQ(run({"exact", "-"}, big.out).code, 3);
    const auto mid = run({"gen", "random", "9", "--seed", "3"});
    EXPECT_EQ(run({"decide", "-", "4", "--node-limit", "5"}, mid.out).code, 3);
}

TEST_F(Cli, Deterministic) {
    const auto g = file("r.ccg", run({"gen", "random", "7", "--seed", "11"}).out);
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"approx", g, "--guess-all"}, {"exact", g}, {"stats", g, "--json"}, {"kernel", g, "2"}}) {
        EXPECT_EQ(run(args).out, run(args).out);
    }
}
