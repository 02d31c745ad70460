#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include <json.hpp>

#include "oracles.hpp"
#include "qmatball/factor_matrix.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
};

Result run(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + " " + QMATBALL_CLI_PATH + std::string(" ") + args + " 2>/dev/null";
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (!pipe) return {-1, ""};
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    const int status = ::pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

class Cli : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() / ("qmatball_cli_" + std::to_string(::getpid()) + "_" +
                                            ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string file(const std::string& name, const json& content) {
        const auto p = dir_ / name;
        std::ofstream(p) << content.dump();
        return p.string();
    }
    fs::path dir_;
};

json string_json(int n, std::vector<std::pair<int, double>> pairs) {
    json p = json::array();
    for (auto [k, phi] : pairs) p.push_back({k, phi});
    return {{"n", n}, {"pairs", p}};
}

std::vector<std::string> glyphs(const std::string& text) {
    std::vector<std::string> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        const auto tok = line.substr(0, line.find(' '));
        if (!tok.empty() && tok.find_first_not_of(".o#") == std::string::npos) rows.push_back(tok);
    }
    return rows;
}

int inversions(const std::vector<int>& p) { return oracle::inversions(p); }

}  // namespace

TEST_F(Cli, CountMatchesSequence) {
    EXPECT_EQ(run("count --n 0").out, "1 1 OK\n");
    EXPECT_EQ(run("count --n 2").out, "7 7 OK\n");
    const auto five = run("count --n 5");
    EXPECT_EQ(five.code, 0);
    EXPECT_EQ(five.out, "1546 1546 OK\n");
    EXPECT_EQ(run("count --n 9").code, 2);
}

TEST_F(Cli, Enumerate) {
    const auto r = run("enumerate --n 2");
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(json::parse(r.out).size(), 7u);
}

TEST_F(Cli, MinimizeExamples) {
    auto id = json::parse(run("minimize --perm " + file("id.json", {{"m", 4}, {"images", {1, 2, 3, 4}}})).out);
    EXPECT_EQ(id["w"], json({1, 2, 3, 4}));
    EXPECT_EQ(id["g"], json({1, 2, 3, 4}));
    EXPECT_EQ(id["h"], json({1, 2, 3, 4}));

    const auto swap = run("minimize --oracle --perm " + file("swap.json", {{"m", 4}, {"images", {3, 4, 1, 2}}}));
    EXPECT_EQ(swap.code, 0);
    auto sj = json::parse(swap.out);
    EXPECT_EQ(sj["w"], json({3, 4, 1, 2}));
    EXPECT_EQ(sj["lengths"]["g"], 0);
    EXPECT_EQ(sj["lengths"]["h"], 0);

    std::mt19937 rng(6);
    for (int t = 0; t < 5; ++t) {
        std::vector<int> p = oracle::identity(6);
        std::shuffle(p.begin(), p.end(), rng);
        const auto r = run("minimize --oracle --perm " + file("r.json", {{"m", 6}, {"images", p}}));
        ASSERT_EQ(r.code, 0);
        const auto j = json::parse(r.out);
        EXPECT_EQ(inversions(p), inversions(j["w"].get<std::vector<int>>()) + inversions(j["g"].get<std::vector<int>>()) +
                                     inversions(j["h"].get<std::vector<int>>()));
        EXPECT_EQ(j["w"], j["oracle_w"]);
    }
    EXPECT_EQ(run("minimize --perm " + file("bad.json", {{"m", 3}, {"images", {1, 1, 2}}})).code, 2);
    EXPECT_EQ(run("minimize --perm " + (dir_ / "missing.json").string()).code, 2);
}

TEST_F(Cli, BuildFockOneIsT22) {
    const auto r = run("build --fock 1 --trunc 4");
    ASSERT_EQ(r.code, 0);
    const auto j = json::parse(r.out);
    ASSERT_EQ(j["generators"].size(), 1u);
    const auto& terms = j["generators"][0]["operator"]["terms"];
    ASSERT_EQ(terms.size(), 1u);
    const auto t22 = qmatball::t_block(2, 2, 0.5, 4)->entries();
    const auto& rows = terms[0]["factors"][0];
    for (int r_ = 0; r_ < 4; ++r_)
        for (int c = 0; c < 4; ++c) EXPECT_NEAR(rows[r_][c][0].get<double>(), t22(r_, c).real(), 1e-15);
}

TEST_F(Cli, BuildStrings) {
    const double phi = 0.9;
    const auto coherent = run("build --trunc 4 --emit matrix-elements --string " + file("c.json", string_json(3, {{3, 0}, {3, 0}, {2, phi}})));
    ASSERT_EQ(coherent.code, 0);
    bool found = false;
    const auto parsed = json::parse(coherent.out);
    for (const auto& g : parsed["generators"]) {
        const std::complex<double> v(g["vacuum"][0].get<double>(), g["vacuum"][1].get<double>());
        if (std::abs(v - std::polar(1.0, phi)) < 1e-12) found = g["k"] == 1 && g["j"] == 1;
    }
    EXPECT_TRUE(found);

    const auto two = json::parse(run("build --string " + file("t.json", string_json(2, {{2, 0}, {2, 0}}))).out);
    EXPECT_EQ(two["f"], 4);
    for (const auto& g : two["generators"]) EXPECT_EQ(g["operator"]["f"], 4);
}

TEST_F(Cli, InadmissibleStringExitsTwo) {
    const auto bad = file("bad.json", string_json(3, {{0, 1.0}, {3, 0}, {1, 0}}));
    EXPECT_EQ(run("build --string " + bad).code, 2);
    EXPECT_EQ(run("render --string " + bad).code, 2);
    EXPECT_EQ(run("verify --string " + bad).code, 2);
    const std::string cmd = std::string(QMATBALL_CLI_PATH) + " render --string " + bad + " 2>&1";
    FILE* pipe = ::popen(cmd.c_str(), "r");
    char buf[512] = {};
    std::string msg(buf, std::fread(buf, 1, sizeof buf - 1, pipe));
    ::pclose(pipe);
    EXPECT_NE(msg.find("k_2"), std::string::npos) << msg;
}

TEST_F(Cli, VerifySuites) {
    for (const char* n : {"1", "2"}) {
        const auto r = run(std::string("verify --fock ") + n);
        EXPECT_EQ(r.code, 0);
        const auto j = json::parse(r.out);
        EXPECT_TRUE(j["summary"]["pass"].get<bool>());
        EXPECT_LT(j["summary"]["max_residual"].get<double>(), 1e-10);
        EXPECT_EQ(j["summary"]["tol"], 1e-10);
        for (const auto& rep : j["reports"]) {
            EXPECT_TRUE(rep.contains("relation"));
            EXPECT_TRUE(rep.contains("indices"));
            EXPECT_GE(rep["residual"].get<double>(), 0.0);
        }
    }
    const auto bad = run("verify --fock 2 --perturb 1e-3");
    EXPECT_EQ(bad.code, 1);
    EXPECT_FALSE(json::parse(bad.out)["summary"]["pass"].get<bool>());
    EXPECT_EQ(run("verify --oracle --trunc 5 --string " + file("s.json", string_json(2, {{1, 0.7}, {1, 0}}))).code, 0);
}

TEST_F(Cli, Render) {
    EXPECT_EQ(glyphs(run("render --string " + file("w.json", string_json(2, {{2, 0}, {2, 0}}))).out), (std::vector<std::string>{"..", ".."}));
    EXPECT_EQ(glyphs(run("render --string " + file("e.json", string_json(3, {{0, 1.0}, {2, 0}, {2, 0}}))).out),
              (std::vector<std::string>{"#..", "#..", "##o"}));
    EXPECT_EQ(glyphs(run("render --string " + file("c.json", string_json(3, {{3, 0}, {3, 0}, {2, 0.5}}))).out),
              (std::vector<std::string>{"o..", "...", "..."}));
}

TEST_F(Cli, Paths) {
    const auto r = run("paths --n 3 --k 1 --j 1");
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(json::parse(r.out).size(), 6u);
    EXPECT_EQ(run("paths --n 3 --k 4 --j 1").code, 2);
}

TEST_F(Cli, FlagValidation) {
    EXPECT_EQ(run("verify --fock 1 --q 0").code, 2);
    EXPECT_EQ(run("verify --fock 1 --q 1").code, 2);
    EXPECT_EQ(run("verify --fock 1 --trunc 2").code, 2);
    EXPECT_EQ(run("verify --fock 1 --tol -1").code, 2);
    EXPECT_EQ(run("").code, 2);
    EXPECT_EQ(run("frobnicate").code, 2);
}

TEST_F(Cli, OutFileAndDeterminism) {
    const auto out = (dir_ / "report.json").string();
    EXPECT_EQ(run("verify --fock 2 --out " + out).code, 0);
    std::ifstream in(out);
    const std::string written((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    const auto a = run("verify --fock 2");
    const auto b = run("verify --fock 2", "QMATBALL_THREADS=1");
    const auto c = run("verify --fock 2", "QMATBALL_THREADS=3");
    EXPECT_EQ(written, a.out);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.out, c.out);
    EXPECT_EQ(run("build --fock 2").out, run("build --fock 2").out);
}
