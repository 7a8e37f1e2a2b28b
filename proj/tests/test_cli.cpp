// The command-line front end through cli::run.

#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>

#include "antimagic/bounds.hpp"
#include "antimagic/cli.hpp"

using namespace antimagic;
using nlohmann::json;

namespace {

cli::CommandOutcome run(std::vector<std::string> args, const std::string& input = "") {
    std::istringstream in(input);
    return cli::run(args, in);
}

int count_lines_starting(const std::string& text, const std::string& prefix) {
    std::istringstream is(text);
    int n = 0;
    for (std::string line; std::getline(is, line);) n += line.rfind(prefix, 0) == 0 ? 1 : 0;
    return n;
}

}  // namespace

TEST(Cli, Tau) {
    auto r = run({"tau", "--a", "7", "--b", "21"});
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_NE(r.payload.find("= 63 [tau_5]"), std::string::npos);
    r = run({"tau", "--a", "7", "--b", "21", "--json"});
    const auto doc = json::parse(r.payload);
    EXPECT_EQ(doc["tau"], 63);
    EXPECT_EQ(doc["case"], "tau_5");
    EXPECT_EQ(doc["tau0"], 65);
    EXPECT_EQ(doc["lemma_upb3"], 63);
    EXPECT_TRUE(doc["lemma_upb2"].is_null());
    EXPECT_EQ(run({"tau", "--a", "3", "--b", "2"}).exit_code, 1);
}

TEST(Cli, ConstructOutOfRange) {
    const auto r = run({"construct", "--a", "1", "--b", "1", "--c", "3"});
    EXPECT_EQ(r.exit_code, 4);
    EXPECT_NE(r.payload.find("tau(S(1,1)) = 2"), std::string::npos);
    const auto j = run({"construct", "--a", "1", "--b", "1", "--c", "3", "--json"});
    EXPECT_EQ(j.exit_code, 4);
    EXPECT_EQ(json::parse(j.payload)["error"], "out-of-range");
}

TEST(Cli, ConstructFormats) {
    auto r = run({"construct", "--a", "1", "--b", "2", "--c", "5", "--trace"});
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_NE(r.payload.find("E_A = {13}"), std::string::npos);
    EXPECT_NE(r.payload.find("case: c3_5"), std::string::npos);
    r = run({"construct", "--a", "1", "--b", "2", "--c", "5", "--format", "dot"});
    EXPECT_EQ(r.payload.rfind("graph", 0), 0u);
    r = run({"construct", "--a", "3", "--b", "12", "--c", "34", "--json", "--trace"});
    const auto doc = json::parse(r.payload);
    EXPECT_EQ(doc["trace"]["case"], "high_W");
    EXPECT_EQ(doc["trace"]["W"], json::array({3, 14, 50, 51}));
    EXPECT_EQ(doc["labels"].size(), 84u);
    EXPECT_EQ(run({"construct", "--a", "1", "--b", "2", "--c", "5", "--format", "svg"}).exit_code, 1);
}

TEST(Cli, ConstructVerifyRoundTrip) {
    for (int m = 3; m <= 14; ++m) {
        for (int a = 1; 2 * a <= m - 1; ++a) {
            const int b = m - 1 - a;
            const auto tau = tau_double_star(a, b).value;
            for (int c = 0; c <= tau; c += 3) {
                const auto built = run({"construct", "--a", std::to_string(a), "--b", std::to_string(b), "--c",
                                        std::to_string(c), "--format", "json"});
                ASSERT_EQ(built.exit_code, 0);
                const auto checked = run({"verify", "-"}, built.payload);
                EXPECT_EQ(checked.exit_code, 0) << a << "," << b << "," << c;
            }
        }
    }
}

TEST(Cli, VerifyExitCodes) {
    const std::string fig = run({"construct", "--a", "1", "--b", "2", "--c", "5", "--json"}).payload;
    EXPECT_EQ(run({"verify", "-", "--expect-ad", "1,1"}, fig).exit_code, 0);
    EXPECT_EQ(run({"verify", "-", "--expect-ad", "2,1"}, fig).exit_code, 3);
    EXPECT_EQ(run({"verify", "-", "--expect-ad", "x"}, fig).exit_code, 1);
    const std::string clash = R"({"edges":[[0,1],[1,2],[3,4],[4,5]],"labels":[1,2,3,4]})";
    const auto r = run({"verify", "-", "--json"}, clash);
    EXPECT_EQ(r.exit_code, 2);
    const auto doc = json::parse(r.payload);
    EXPECT_FALSE(doc["antimagic"]);
    EXPECT_EQ(doc["duplicate"]["sum"], 3);
    EXPECT_EQ(run({"verify", "-"}, "{not json").exit_code, 1);
    EXPECT_EQ(run({"verify", "/nonexistent.json"}).exit_code, 1);
    EXPECT_EQ(run({"verify", "-"}, R"({"edges":[[0,1],[1,2]],"labels":[1,1]})").exit_code, 2);
}

TEST(Cli, Figure2) {
    const auto r = run({"figure2"});
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(count_lines_starting(r.payload, "PASS "), 6);
    EXPECT_EQ(count_lines_starting(r.payload, "FAIL "), 0);
    EXPECT_EQ(run({"figure2", "--dir", "/nonexistent"}).exit_code, 1);
}

TEST(Cli, SearchAndTauExhaustive) {
    auto r = run({"search", "--graph", "S(1,1)+3*P3", "--json"});
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(json::parse(r.payload)["verdict"], "refuted");
    r = run({"search", "--graph", "S(1,1)+3*P3", "--budget-nodes", "5"});
    EXPECT_EQ(r.exit_code, 4);
    r = run({"search", "--graph", "S(1,2)+5*P3", "--mode", "one-one", "--json"});
    const auto doc = json::parse(r.payload);
    EXPECT_EQ(doc["verdict"], "found");
    EXPECT_EQ(run({"verify", "-", "--expect-ad", "1,1"}, doc["labeling"].dump()).exit_code, 0);
    r = run({"search", "--graph", "10*P3"});
    EXPECT_EQ(r.exit_code, 4);
    r = run({"tau-exhaustive", "--graph", "S(1,1)", "--c-limit", "3", "--json"});
    EXPECT_EQ(json::parse(r.payload)["tau"], 2);
    r = run({"tau-exhaustive", "--graph", "2*P3", "--c-limit", "1", "--json"});
    EXPECT_EQ(json::parse(r.payload)["tau"], "-inf");
}

TEST(Cli, PellAndCensus) {
    auto r = run({"pell", "--max-n", "1000", "--screen", "--json"});
    auto doc = json::parse(r.payload);
    ASSERT_EQ(doc["solutions"].size(), 4u);
    EXPECT_EQ(doc["solutions"][3]["double_star"]["feasible"], false);
    EXPECT_EQ(doc["solutions"][3]["double_star"]["c"], 203);
    EXPECT_EQ(run({"pell", "--max-n", "2"}).exit_code, 1);
    r = run({"census", "--n", "20", "--m", "14", "--check-one-one", "--json"});
    doc = json::parse(r.payload);
    ASSERT_EQ(doc["forests"].size(), 6u);
    for (const auto& f : doc["forests"]) EXPECT_EQ(f["one_one"]["verdict"], "found");
    EXPECT_EQ(run({"census", "--n", "6", "--m", "6"}).exit_code, 4);
}

TEST(Cli, Table1) {
    const auto r = run({"table1", "--json"});
    const auto doc = json::parse(r.payload);
    ASSERT_EQ(doc["rows"].size(), 27u);
    EXPECT_EQ(doc["rows"][0]["tau0"], 2);
    EXPECT_EQ(doc["rows"][26]["cells"][6]["tau"], 63);
}

TEST(Cli, Usage) {
    EXPECT_EQ(run({"bogus"}).exit_code, 1);
    EXPECT_EQ(run({}).exit_code, 1);
    const auto help = run({"--help"});
    EXPECT_EQ(help.exit_code, 0);
    EXPECT_NE(help.payload.find("construct"), std::string::npos);
}
