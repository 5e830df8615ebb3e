#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>

namespace {

struct Result {
    int code = -1;
    std::string out;
};

Result run(const std::string& args, bool merge_stderr = false) {
    std::string cmd = std::string(COBWEB_EXE) + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
    Result r;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
    int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string tmp(const std::string& name) { return ::testing::TempDir() + "cobweb_cli_" + name; }

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string gen(const std::string& name, const std::string& args) {
    std::string path = tmp(name + ".json");
    Result r = run("gen " + args + " -o " + path);
    EXPECT_EQ(r.code, 0) << args;
    return path;
}

}  // namespace

TEST(Cli, Fnomial) {
    Result r = run("fnomial --seq fib 4 2");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "6\n");
    EXPECT_EQ(run("fnomial --seq nat 10 3").out, "120\n");
}

TEST(Cli, Admissible) {
    EXPECT_EQ(run("admissible --seq fib --up-to 8").out, "admissible\n");
    std::string f = tmp("seq.txt");
    std::ofstream(f) << "2\n3\n";
    EXPECT_EQ(run("admissible --seq file:" + f + " --up-to 2").out, "first_failure 2 1\n");
}

TEST(Cli, Kroton) {
    EXPECT_EQ(run("kroton --seq nat 1 5").out, "6\n");
    EXPECT_EQ(run("kroton --seq nat 3 3").out, "0\n");
}

TEST(Cli, CodingJsonAndCsv) {
    Result j = run("coding --seq nat --levels 6");
    ASSERT_EQ(j.code, 0);
    auto c = nlohmann::json::parse(j.out)["c"];
    ASSERT_EQ(c.size(), 6u);
    EXPECT_EQ(c[0][4], 6);
    EXPECT_EQ(c[0][3], -2);
    EXPECT_EQ(c[1][3], 2);
    Result csv = run("coding --seq nat --levels 3 --format csv");
    EXPECT_EQ(csv.out, "1,-1,1\n0,1,-1\n0,0,1\n");
}

TEST(Cli, GenAndMatrices) {
    std::string p = gen("nat3", "--seq nat --levels 3");
    EXPECT_EQ(slurp(p).rfind(R"({"level_sizes":[1,2,3],)", 0), 0u);
    Result z = run("zeta " + p);
    ASSERT_EQ(z.code, 0);
    EXPECT_EQ(z.out.substr(0, 12), "1,1,1,1,1,1\n");
    Result m = run("mobius " + p + " --method recurrence --format json");
    ASSERT_EQ(m.code, 0);
    auto mj = nlohmann::json::parse(m.out);
    EXPECT_EQ(mj["entries"][0][1], -1);
    EXPECT_EQ(mj["entries"][0][3], 1);
    EXPECT_EQ(run("mobius " + p + " --method closed-form").out, run("mobius " + p + " --method invert").out);
    EXPECT_EQ(run("max " + p).out.substr(0, 12), "1,1,1,2,2,2\n");
    EXPECT_EQ(run("max " + p + " --inverse").out.substr(0, 15), "1,-1,-1,0,0,0\n0");
    EXPECT_EQ(run("eta " + p + " --inverse").out.substr(0, 14), "1,-1,-1,2,2,2\n");
    EXPECT_EQ(run("zeta " + p + " --method label-s").out, z.out);
    EXPECT_EQ(run("zeta " + p + " --format ascii").out, run("lascala " + p).out);
}

TEST(Cli, RootedInvariants) {
    std::string p = gen("c2", "--seq const:2 --levels 3 --root");
    EXPECT_EQ(run("charpoly " + p).out, "[1,-2,2,-2]\n");
    EXPECT_EQ(run("charpoly " + p + " --format text").out, "t^3 - 2t^2 + 2t - 2\n");
    EXPECT_EQ(run("whitney " + p).out, "{\"first\":[1,-2,2,-2],\"second\":[1,2,2,2]}\n");
    std::string q = gen("unrooted", "--seq const:2 --levels 3");
    Result bad = run("whitney " + q, true);
    EXPECT_EQ(bad.code, 1);
    EXPECT_NE(bad.out.find("error:"), std::string::npos);
}

TEST(Cli, Chains) {
    std::string p = gen("nat3c", "--seq nat --levels 3");
    EXPECT_EQ(run("chains " + p + " --from 1 --to 3 --count-only").out, "6\n");
    EXPECT_EQ(run("chains " + p + " --from 2 --to 3 --count-only").out, "6\n");
    auto all = nlohmann::json::parse(run("chains " + p + " --from 1 --to 3").out);
    ASSERT_EQ(all.size(), 6u);
    EXPECT_EQ(all[0], nlohmann::json::parse("[[1,1],[2,1],[3,1]]"));
    EXPECT_EQ(run("chains " + p + " --interval 1 5").out, "2\n");
    EXPECT_EQ(run("chains " + p).code, 1);
}

TEST(Cli, CustomBlocks) {
    std::string b = tmp("blocks.json");
    std::ofstream(b) << "[[[1]],[[1,0]]]";
    std::string p = gen("custom", "--seq fib --levels 3 --blocks " + b);
    auto j = nlohmann::json::parse(slurp(p));
    EXPECT_EQ(j["flags"]["cobweb"], false);
    EXPECT_EQ(j["flags"]["no_mute"], false);
    Result d = run("dot " + p);
    EXPECT_NE(d.out.find("v2_1 -> v3_1;"), std::string::npos);
    EXPECT_EQ(d.out.find("v2_1 -> v3_2;"), std::string::npos);
    EXPECT_EQ(run("lascala " + p).out, "1110\n 110\n  1.\n   1\n");
}

TEST(Cli, CheckExitCodes) {
    std::string p = gen("nat5", "--seq nat --levels 5");
    Result ok = run("check " + p);
    EXPECT_EQ(ok.code, 0);
    EXPECT_NE(ok.out.find("PASS zeta/"), std::string::npos);
    EXPECT_EQ(ok.out.find("FAIL "), std::string::npos);
    EXPECT_EQ(run("check " + p + " --suite mobius").code, 0);
    EXPECT_EQ(run("check " + p + " --suite bogus").code, 1);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run("frobnicate").code, 1);
    EXPECT_EQ(run("").code, 1);
    EXPECT_EQ(run("--help").code, 0);
    EXPECT_EQ(run("fnomial --seq lucas 3 1").code, 1);
    EXPECT_EQ(run("zeta /nonexistent/poset.json").code, 1);
    std::string bad = tmp("bad.json");
    std::ofstream(bad) << R"({"level_sizes":[1,2],"blocks":[[[1,7]]]})";
    Result r = run("zeta " + bad, true);
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("/blocks/0/0/1"), std::string::npos);
}

TEST(Cli, LevelCap) {
    EXPECT_EQ(run("gen --seq nat --levels 13").code, 1);
    EXPECT_EQ(run("coding --seq nat --levels 40").code, 1);
    EXPECT_EQ(run("coding --seq nat --levels 13").code, 1);
    std::string cmd = std::string("COBWEB_MAX_LEVELS=40 ") + COBWEB_EXE + " coding --seq nat --levels 40 >/dev/null 2>&1";
    EXPECT_EQ(WEXITSTATUS(std::system(cmd.c_str())), 0);
}

TEST(Cli, OutputFileAndDeterminism) {
    std::string a = tmp("m1.csv"), b = tmp("m2.csv");
    std::string p = gen("fib6", "--seq fib --levels 6");
    EXPECT_EQ(run("mobius " + p + " -o " + a).code, 0);
    EXPECT_EQ(run("mobius " + p + " -o " + b).code, 0);
    EXPECT_FALSE(slurp(a).empty());
    EXPECT_EQ(slurp(a), slurp(b));
    EXPECT_EQ(slurp(a), run("mobius " + p).out);
}
