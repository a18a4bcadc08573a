#include <app.hpp>

#include <gtest/gtest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    args.insert(args.begin(), "deltasets");
    std::vector<const char*> argv;
    for (const std::string& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = deltasets::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("deltasets_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string write(const std::string& name, const std::string& text) {
        const fs::path p = dir_ / name;
        std::ofstream(p) << text;
        return p.string();
    }

    fs::path dir_;
};

std::vector<json> lines(const std::string& text) {
    std::vector<json> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) out.push_back(json::parse(line));
    return out;
}

const char* kC5 = "p edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n";

}  // namespace

TEST_F(Cli, AnalyzeC5) {
    const Outcome r = run({"analyze", "--input", write("c5.dimacs", kC5), "--emit", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = lines(r.out);
    ASSERT_EQ(j.size(), 1u);
    EXPECT_EQ(j[0]["phi"], 2);
    EXPECT_EQ(j[0]["alpha_k"][0], 3);
    EXPECT_EQ(j[0]["all_satisfied"], true);
}

TEST_F(Cli, AnalyzeEdgeListAutoDetected) {
    const Outcome r = run({"analyze", "--input", write("star.txt", "0 1\n0 2\n0 3\n"), "--emit", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(lines(r.out)[0]["n"], 4);
}

TEST_F(Cli, AnalyzeK10WithChiLimit) {
    const Outcome r = run({"analyze", "--regular", "n=10,r=9,count=1", "--chi-limit", "8", "--emit", "human"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("skipped: size limit"), std::string::npos);
}

TEST_F(Cli, MalformedInputExitsOneWithLine) {
    const Outcome r = run({"analyze", "--input", write("bad.dimacs", "p edge 3 1\ne 1 x\n"), "--format", "dimacs"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("line 2"), std::string::npos) << r.err;
}

TEST_F(Cli, UsageErrors) {
    EXPECT_EQ(run({}).code, 1);
    EXPECT_EQ(run({"analyze"}).code, 1);
    EXPECT_EQ(run({"analyze", "--gnp", "n=5,p=0.5", "--exhaustive", "3"}).code, 1);
    EXPECT_EQ(run({"verify", "--gnp", "n=5,q=0.5"}).code, 1);
    EXPECT_EQ(run({"fuzz-lemma", "--r", "3", "--k", "5"}).code, 1);
    EXPECT_EQ(run({"analyze", "--gnp", "n=5", "--emit", "xml"}).code, 1);
    EXPECT_EQ(run({"analyze", "--input", (dir_ / "missing.dimacs").string()}).code, 1);
}

TEST_F(Cli, LimitsExitTwo) {
    EXPECT_EQ(run({"verify", "--exhaustive", "9"}).code, 2);
    EXPECT_EQ(run({"analyze", "--gnp", "n=10,p=0.5", "--exact-limit", "40"}).code, 2);
}

TEST_F(Cli, VerifyIsDeterministic) {
    const std::vector<std::string> args = {"verify", "--gnp", "n=10,p=0.5,count=100,seed=7", "--emit", "json"};
    const Outcome a = run(args);
    const Outcome b = run(args);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.code, b.code);
    const auto j = lines(a.out);
    ASSERT_EQ(j.size(), 101u);
    EXPECT_EQ(j.back()["summary"]["graphs"], 100);
}

TEST_F(Cli, VerifyEmptyCorpus) {
    const Outcome r = run({"verify", "--gnp", "n=6,p=0.5,count=0", "--emit", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = lines(r.out);
    ASSERT_EQ(j.size(), 1u);
    EXPECT_EQ(j[0]["summary"]["checks"], 0);
}

TEST_F(Cli, VerifyExhaustiveFive) {
    const Outcome r = run({"verify", "--exhaustive", "5", "--emit", "json"});
    const auto j = lines(r.out);
    ASSERT_EQ(j.size(), 1025u);
    const json& s = j.back()["summary"];
    EXPECT_EQ(s["graphs"], 1024);
    // Every failure lies in the Cor 4.1 rows with k > s.
    ASSERT_GT(s["failed"].get<int>(), 0);
    EXPECT_EQ(s["failed_by_tag"].size(), 1u);
    EXPECT_EQ(s["failed"], s["failed_by_tag"]["Cor 4.1 (k > s)"]);
    EXPECT_EQ(r.code, s["confirmed"] == 0 ? 0 : 3);
}

TEST_F(Cli, FindingPrintsReproducer) {
    const Outcome r = run({"verify", "--input", write("paw.edges", "0 1\n0 2\n0 3\n1 2\n"), "--emit", "json"});
    EXPECT_EQ(r.code, 3);
    EXPECT_NE(r.err.find("FINDING"), std::string::npos);
    EXPECT_NE(r.err.find("p edge 4 4"), std::string::npos);
}

TEST_F(Cli, Scan) {
    const Outcome r = run({"scan", "--input", write("c5.dimacs", kC5)});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(lines(r.out)[0]["matched_k"], 1);
    const Outcome all = run({"scan", "--exhaustive", "4"});
    ASSERT_EQ(all.code, 0);
    EXPECT_EQ(lines(all.out).size(), 64u);
}

TEST_F(Cli, ResumeSkipsFinishedGraphs) {
    const std::string out = (dir_ / "scan.jsonl").string();
    ASSERT_EQ(run({"scan", "--exhaustive", "3", "--out", out}).code, 0);
    std::ifstream in(out);
    std::string first;
    std::getline(in, first);
    in.close();
    std::ofstream(out) << first << '\n';
    ASSERT_EQ(run({"scan", "--exhaustive", "3", "--out", out, "--resume-from", out}).code, 0);
    std::ifstream again(out);
    std::string all((std::istreambuf_iterator<char>(again)), std::istreambuf_iterator<char>());
    EXPECT_EQ(lines(all).size(), 8u);
}

TEST_F(Cli, FuzzLemma) {
    const Outcome r = run({"fuzz-lemma", "--r", "2..5", "--trials", "500", "--emit", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_FALSE(lines(r.out).empty());
    const Outcome empty = run({"fuzz-lemma", "--r", "3", "--trials", "0", "--emit", "json"});
    EXPECT_EQ(empty.code, 0);
    const Outcome above = run({"fuzz-lemma", "--r", "3", "--k", "4", "--trials", "500", "--allow-k-above-r"});
    EXPECT_EQ(above.code, 0) << above.err;
}

TEST_F(Cli, GenRoundTrip) {
    const Outcome one = run({"gen", "--regular", "n=8,r=3,seed=3"});
    ASSERT_EQ(one.code, 0) << one.err;
    EXPECT_EQ(one.out.rfind("p edge 8 12", 0), 0u);
    const Outcome many = run({"gen", "--gnp", "n=6,p=0.5,count=3", "--out", dir_.string()});
    ASSERT_EQ(many.code, 0) << many.err;
    std::size_t files = 0;
    for (const auto& e : fs::directory_iterator(dir_)) files += e.path().extension() == ".dimacs";
    EXPECT_EQ(files, 3u);
    const std::string path = write("g.dimacs", one.out);
    EXPECT_EQ(run({"analyze", "--input", path}).code, 0);
}
