#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <regex>
#include <sstream>

#include "hecke/report_io.hpp"

using namespace hecke;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Run cli(const std::string& args) {
    static int counter = 0;
    std::string base = testing::TempDir() + "hecke_cli_" + std::to_string(++counter);
    std::string cmd = std::string(HECKE_CLI_PATH) + " " + args + " >" + base + ".out 2>" + base + ".err";
    int status = std::system(cmd.c_str());
    Run r{WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(base + ".out"), slurp(base + ".err")};
    return r;
}

std::string strip_elapsed(const std::string& s) { return std::regex_replace(s, std::regex("\"elapsed_ms\": [0-9]+"), ""); }

}  // namespace

TEST(Cli, TableauxLevelOne) {
    auto r = cli("tableaux --ell 1 --n 3 --format json");
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["shapes_count"], 3);
    std::vector<int> counts;
    for (const auto& s : j["shapes"]) counts.push_back(s["count"]);
    EXPECT_EQ(counts, (std::vector<int>{1, 2, 1}));
}

TEST(Cli, TableauxLevelTwo) {
    auto r = cli("tableaux --ell 2 --n 2 --format json --full");
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["shapes_count"], 5);
    EXPECT_EQ(j["sum_f_squared"], 8);
    EXPECT_EQ(j["shapes"][0]["tableaux"].size(), 1u);
    auto text = cli("tableaux --ell 2 --n 2");
    EXPECT_EQ(text.code, 0);
    EXPECT_NE(text.out.find("sum f^2 = 8"), std::string::npos);
}

TEST(Cli, TableauxEmpty) {
    auto r = cli("tableaux --ell 2 --n 0 --format json");
    ASSERT_EQ(r.code, 0);
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["shapes_count"], 1);
    EXPECT_EQ(j["shapes"][0]["count"], 1);
}

TEST(Cli, GammaCsv) {
    auto r = cli("gamma --ell 1 --n 2 --q 3 --Q 1");
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "lambda,tableau,value\n(2),\"(1,1,1);(1,2,1)\",4\n\"(1,1)\",\"(1,1,1);(2,1,1)\",1\n");
}

TEST(Cli, GammaDegenerate) {
    auto r = cli("gamma --variant deg --ell 1 --n 3 --u 0 --format json");
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["table"], "r");
    EXPECT_EQ(j["values"][0]["lambda"], "(3)");
    EXPECT_EQ(j["values"][0]["value"], "6");
}

TEST(Cli, GammaPrimeMatchesSubstitution) {
    auto r = cli("gamma --ell 2 --n 2 --prime --format json");
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = nlohmann::json::parse(r.out);
    auto p = Params::defaults(Variant::nondegenerate, 2, 2);
    auto direct = gamma_table(p.primed());
    ASSERT_EQ(j["values"].size(), direct.size());
    for (std::size_t i = 0; i < direct.size(); ++i)
        EXPECT_EQ(j["values"][i]["value"], to_string(direct.at(direct.tableaux()[i])));
}

TEST(Cli, VerifyPasses) {
    auto r = cli("verify --ell 2 --n 3 --suites alpha,products,relations");
    EXPECT_EQ(r.code, 0) << r.err;
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["suites"].size(), 3u);
    EXPECT_EQ(j["params"]["variant"], "nondeg");
    for (const auto& s : j["suites"]) EXPECT_EQ(s["total"], s["passed"]);
    auto d = cli("verify --variant deg --ell 2 --n 3 --suites alpha,beta");
    EXPECT_EQ(d.code, 0) << d.err;
}

TEST(Cli, VerifyIsByteStable) {
    auto a = cli("verify --ell 2 --n 2 --jobs 1");
    auto b = cli("verify --ell 2 --n 2 --jobs 2");
    ASSERT_EQ(a.code, 0);
    ASSERT_EQ(b.code, 0);
    EXPECT_EQ(strip_elapsed(a.out), strip_elapsed(b.out));
}

TEST(Cli, VerifyCsvAndFile) {
    std::string path = testing::TempDir() + "hecke_report.csv";
    auto r = cli("verify --n 2 --suites alpha --format csv --output " + path);
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "");
    auto csv = slurp(path);
    EXPECT_EQ(csv.rfind("suite,total,passed,failed\nalpha,", 0), 0u) << csv;
}

TEST(Cli, ConfigErrors) {
    auto bad = cli("verify --ell 2 --n 2 --q 2 --Q 1,2");
    EXPECT_EQ(bad.code, 2);
    EXPECT_NE(bad.err.find("q^1·Q_1 − Q_2 = 0"), std::string::npos) << bad.err;
    EXPECT_EQ(bad.out, "");
    EXPECT_EQ(cli("verify --suites nope").code, 2);
    EXPECT_EQ(cli("verify --ell 2 --Q 1").code, 2);
    EXPECT_EQ(cli("verify --q 1.5").code, 2);
    EXPECT_EQ(cli("verify --variant deg --q 3").code, 2);
    EXPECT_EQ(cli("verify --variant other").code, 2);
    EXPECT_EQ(cli("frobnicate").code, 2);
    EXPECT_EQ(cli("").code, 2);
}

TEST(ReportIo, CsvQuoting) {
    EXPECT_EQ(csv_field("plain"), "plain");
    EXPECT_EQ(csv_field("a,b"), "\"a,b\"");
    EXPECT_EQ(csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
}

TEST(ReportIo, JsonShape) {
    VerificationReport r{Params::defaults(Variant::degenerate, 2, 1), {}, 17};
    SuiteReport s{"alpha", {}, {}};
    s.results.push_back(bool_check("c1", "i1", true, "x", "x"));
    s.results.push_back(bool_check("c2", "i2", false, "1", "2"));
    r.suites.push_back(s);
    auto j = report_json(r);
    EXPECT_EQ(j.dump(),
              R"({"params":{"variant":"deg","ell":2,"n":1,"u":["0","3"]},"suites":[{"name":"alpha","total":2,"passed":1,)"
              R"("failures":[{"instance":"c2: i2","expected":"1","actual":"2"}]}],"elapsed_ms":17})");
}
