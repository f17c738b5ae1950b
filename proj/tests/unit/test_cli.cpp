#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "kevac/io.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
    int code = 0;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "kevac");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out;
    std::ostringstream err;
    const int code = kevac::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("kevac_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    void write(const std::string& name, const std::string& text) const {
        std::ofstream(path(name)) << text;
    }

    fs::path dir_;
};

const char* kTwoVertex = R"({"capacity": 1, "tau": 1, "vertices": [
    {"x": 0, "w_min": 1, "w_max": 2}, {"x": 1, "w_min": 1, "w_max": 2}]})";

const char* kUnitPath = R"({"capacity": 1, "tau": 1, "vertices": [
    {"x": 0, "w_min": 1, "w_max": 1}, {"x": 1, "w_min": 1, "w_max": 1},
    {"x": 2, "w_min": 1, "w_max": 1}]})";

}  // namespace

TEST_F(CliTest, GenIsDeterministic) {
    const auto a = run({"gen", "--n", "20", "--seed", "7", "--out", path("a.json")});
    const auto b = run({"gen", "--n", "20", "--seed", "7", "--out", path("b.json")});
    ASSERT_EQ(a.code, 0) << a.err;
    ASSERT_EQ(b.code, 0) << b.err;
    EXPECT_EQ(kevac::read_text_file(path("a.json")), kevac::read_text_file(path("b.json")));
    EXPECT_EQ(kevac::instance_from_json(kevac::read_text_file(path("a.json"))).n(), 20);
}

TEST_F(CliTest, SolveOptReportsObjectiveAndWritesPlan) {
    write("inst.json", kUnitPath);
    auto r = run({"solve-opt", "--instance", path("inst.json"), "--k", "1", "--cost-model",
                  "simplified", "--out", path("plan.json")});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("objective: 2"), std::string::npos);
    const auto rec = kevac::plan_from_json(kevac::read_text_file(path("plan.json")));
    EXPECT_EQ(rec.objective, 2);
    EXPECT_EQ(rec.kind, kevac::ObjectiveKind::EvacTime);

    r = run({"solve-opt", "--instance", path("inst.json"), "--k", "3", "--out", path("p3.json")});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("objective: 0"), std::string::npos);

    r = run({"verify", "--instance", path("inst.json"), "--plan", path("plan.json"), "--cost-model",
             "simplified"});
    EXPECT_EQ(r.code, 0) << r.out << r.err;
}

TEST_F(CliTest, SolveMmrAlgorithmsAgreeAndVerify) {
    write("inst.json", kTwoVertex);
    const auto dp = run({"solve-mmr", "--instance", path("inst.json"), "--k", "1", "--algo", "dp",
                         "--out", path("dp.json")});
    const auto bs = run({"solve-mmr", "--instance", path("inst.json"), "--k", "1", "--algo", "bs",
                         "--out", path("bs.json")});
    ASSERT_EQ(dp.code, 0) << dp.err;
    ASSERT_EQ(bs.code, 0) << bs.err;
    EXPECT_NE(dp.out.find("objective: 1"), std::string::npos);
    EXPECT_NE(bs.out.find("objective: 1"), std::string::npos);
    const auto v = run({"verify", "--instance", path("inst.json"), "--plan", path("dp.json")});
    EXPECT_EQ(v.code, 0) << v.out;
    EXPECT_NE(v.out.find("verified"), std::string::npos);
}

TEST_F(CliTest, VerifyDetectsWrongObjective) {
    write("inst.json", kTwoVertex);
    write("plan.json", R"({"parts": [{"l": 0, "r": 1, "sink": 0}], "objective": 5,
                           "objective_kind": "max_regret"})");
    const auto r = run({"verify", "--instance", path("inst.json"), "--plan", path("plan.json")});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("FAIL"), std::string::npos);
}

TEST_F(CliTest, VerifyGuardExitCode) {
    ASSERT_EQ(run({"gen", "--n", "9", "--seed", "1", "--out", path("inst.json")}).code, 0);
    write("plan.json", R"({"parts": [{"l": 0, "r": 9, "sink": 0}], "objective": 0,
                           "objective_kind": "max_regret"})");
    const auto r = run({"verify", "--instance", path("inst.json"), "--plan", path("plan.json")});
    EXPECT_EQ(r.code, 3);
    EXPECT_NE(r.err.find("size guard exceeded"), std::string::npos);
}

TEST_F(CliTest, MalformedInstanceListsViolations) {
    write("bad.json", R"({"capacity": 1, "tau": 1, "vertices": [
        {"x": 0, "w_min": 1, "w_max": 1}, {"x": 0, "w_min": 2, "w_max": 1}]})");
    const auto r = run({"solve-opt", "--instance", path("bad.json"), "--k", "1"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("coords not strictly increasing at index 1"), std::string::npos);
    EXPECT_NE(r.err.find("weight interval empty at index 1"), std::string::npos);
}

TEST_F(CliTest, UsageErrors) {
    EXPECT_EQ(run({"solve-mmr", "--k", "1"}).code, 2);
    EXPECT_EQ(run({"nonsense"}).code, 2);
    EXPECT_EQ(run({"solve-mmr", "--instance", "x", "--k", "1", "--algo", "magic"}).code, 2);
}

TEST_F(CliTest, BenchEmitsJsonLines) {
    const auto r = run({"bench", "--algo", "opt", "--n-list", "20,30", "--k-list", "2", "--reps", "2"});
    ASSERT_EQ(r.code, 0) << r.err;
    std::istringstream lines(r.out);
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) {
        const auto j = nlohmann::json::parse(line);
        EXPECT_EQ(j.at("algo"), "opt");
        EXPECT_TRUE(j.contains("wall_ms"));
        EXPECT_TRUE(j.contains("counters"));
        ++count;
    }
    EXPECT_EQ(count, 4);
}
