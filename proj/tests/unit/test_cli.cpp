#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "hqdeform/config.hpp"
#include "json.hpp"

using namespace hqdeform;
using nlohmann::json;

namespace {

struct Run {
    int status;
    std::string out, err;
    json report() const { return json::parse(out); }
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int s = cli::run_command(args, out, err);
    return {s, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const json& j) {
    std::string path = ::testing::TempDir() + name;
    std::ofstream(path) << j.dump(2);
    return path;
}

}  // namespace

TEST(Cli, ValidateFixtureFileListsEveryCondition) {
    auto r = run({"validate", std::string(HQDEFORM_FIXTURE_DIR) + "/dihedral-h1.json"});
    ASSERT_EQ(r.status, 0) << r.out;
    auto j = r.report();
    EXPECT_TRUE(j["pass"].get<bool>());
    std::vector<std::string> ids;
    for (const auto& c : j["validation"]["checks"]) ids.push_back(c["id"]);
    for (const char* id : {"cor2.item2", "cor2.item3", "cor2.item5"})
        EXPECT_NE(std::find(ids.begin(), ids.end(), id), ids.end()) << id;
}

TEST(Cli, MutatedConfigExitsOneNamingTheCondition) {
    auto j = fixture_json("dihedral-h1");
    j["chi_sigma"]["s"] = "1";
    auto r = run({"validate", write_temp("mutated.json", j)});
    EXPECT_EQ(r.status, 1);
    auto failed = r.report()["validation"]["failed"];
    EXPECT_NE(std::find(failed.begin(), failed.end(), "cor2.item3"), failed.end()) << r.out;
}

TEST(Cli, ConfigAndUsageErrorsExitTwo) {
    auto j = fixture_json("dihedral-h1");
    j["delta1"][1]["g"] = "r";
    auto bad = run({"validate", write_temp("bad.json", j)});
    EXPECT_EQ(bad.status, 2);
    EXPECT_EQ(bad.report()["field"], "delta1[1].g");
    EXPECT_EQ(run({}).status, 2);
    EXPECT_EQ(run({"frobnicate"}).status, 2);
    EXPECT_EQ(run({"deform", "dihedral-h1", "--a", "x1"}).status, 2);
    EXPECT_EQ(run({"deform", "dihedral-h1", "--a", "x1*w[r]", "--b", "1"}).status, 2);
    EXPECT_EQ(run({"assoc-check", "dihedral-h1", "--samples", "many"}).status, 2);
    EXPECT_EQ(run({"validate", "no-such-fixture"}).status, 2);
}

TEST(Cli, DeformPrintsTheSeries) {
    auto r = run({"deform", "dihedral-h1", "--a", "x1", "--b", "x2"});
    ASSERT_EQ(r.status, 0) << r.err;
    auto c = r.report()["coefficients"];
    ASSERT_EQ(c.size(), 2u);
    EXPECT_EQ(c[0], "(x1*x2)*w[e]");
    EXPECT_EQ(c[1], "(1)*w[t] + (1)*w[t^3]");
}

TEST(Cli, SeedsAreRecordedAndRunsAreByteIdentical) {
    auto a = run({"assoc-check", "cyclic-recipe", "--samples", "20", "--seed", "7"});
    auto b = run({"assoc-check", "cyclic-recipe", "--samples", "20", "--seed", "7"});
    ASSERT_EQ(a.status, 0) << a.out;
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.report()["seed"], 7);
    auto r = run({"resolution-check", "dihedral-h1", "--max-total-degree", "2"});
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.report()["seed"], 0x5eed);
}

TEST(Cli, HopfCheckOverAPrimeField) {
    auto r = run({"hopf-check", "--field", "fp:7", "--q", "2", "--bound", "3", "--order", "6"});
    ASSERT_EQ(r.status, 0) << r.out;
    EXPECT_EQ(r.report()["order_of_q"], 3);
}

TEST(Cli, NontrivialReportsCertificate) {
    auto r = run({"nontrivial", "dihedral-h1", "--degree-bound", "3"});
    ASSERT_EQ(r.status, 0) << r.out;
    auto v = r.report()["verdict"];
    EXPECT_EQ(v["conclusion"], "proof");
    EXPECT_EQ(v["coboundary"]["status"], "infeasible");
    EXPECT_TRUE(v["coboundary"]["certificate"]["verified"].get<bool>());
    EXPECT_EQ(v["obstruction"]["status"], "applies");
}

TEST(Cli, ExamplesReproduceRecordedVerdicts) {
    auto list = run({"examples", "list"});
    ASSERT_EQ(list.status, 0);
    ASSERT_EQ(list.report().size(), fixture_names().size());
    for (const auto& name : fixture_names()) {
        auto r = run({"examples", "run", name});
        EXPECT_EQ(r.status, 0) << name << "\n" << r.out;
        for (const auto& c : r.report()["recorded"]) EXPECT_TRUE(c["match"].get<bool>()) << name << " " << c.dump();
    }
    auto shown = run({"examples", "show", "dihedral-hm1"});
    EXPECT_EQ(shown.report(), fixture_json("dihedral-hm1"));
}
