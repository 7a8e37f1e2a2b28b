// Exhaustive search: verdicts against brute force, serial/parallel agreement,
// budgets and caps.

#include <gtest/gtest.h>

#include "antimagic/bounds.hpp"
#include "antimagic/constructor.hpp"
#include "antimagic/error.hpp"
#include "antimagic/oracle.hpp"
#include "antimagic/verifier.hpp"
#include "oracles.hpp"

using namespace antimagic;

namespace {

SearchOptions with(Execution e) {
    SearchOptions o;
    o.execution = e;
    return o;
}

bool labeling_ok(const Forest& g, const SearchOutcome& r) {
    if (!r.labeling) return false;
    const std::vector<int> labels(r.labeling->labels().begin(), r.labeling->labels().end());
    return oracle::is_bijection(labels) && oracle::distinct(oracle::sums(g, labels));
}

}  // namespace

TEST(Exhaustive, Examples) {
    auto r = exhaustive_antimagic(make_path(3));
    EXPECT_EQ(r.verdict, Verdict::found);
    EXPECT_TRUE(labeling_ok(make_path(3), r));
    EXPECT_EQ(exhaustive_antimagic(parse_forest("2*P3")).verdict, Verdict::refuted);
    EXPECT_EQ(exhaustive_antimagic(parse_forest("S(1,1)+3*P3")).verdict, Verdict::refuted);
}

TEST(Exhaustive, MatchesBruteForce) {
    const std::vector<std::string> specs{"P3",        "2*P3",      "P4",         "S3",        "P5",
                                         "S4",        "S(1,2)",    "P3+P4",      "P3+S3",     "S(1,1)+P3",
                                         "S(1,1)+2*P3", "3*P3",    "2*P4",       "S(1,2)+P3", "P5+P3",
                                         "S3+2*P3",   "P4+2*P3",   "S(2,2)+P3",  "P6+P3",     "4*P3",
                                         "S(1,2)+2*P3", "2*S3+P3", "S(1,1)+P4+P3"};
    for (const auto& spec : specs) {
        const Forest g = parse_forest(spec);
        ASSERT_LE(g.edge_count(), 8) << spec;
        const bool expected = oracle::any_antimagic(g);
        for (auto e : {Execution::serial, Execution::parallel}) {
            const auto r = exhaustive_antimagic(g, with(e));
            EXPECT_EQ(r.verdict, expected ? Verdict::found : Verdict::refuted) << spec;
            if (expected) EXPECT_TRUE(labeling_ok(g, r)) << spec;
        }
    }
}

TEST(Exhaustive, SerialAndParallelAgree) {
    const std::vector<std::string> specs{"2*P3", "S(1,1)+3*P3", "S(1,2)+4*P3", "P5+3*P3", "3*P3",
                                         "S(2,2)+3*P3", "2*S3+2*P3", "5*P3"};
    for (const auto& spec : specs) {
        const Forest g = parse_forest(spec);
        const auto s = exhaustive_antimagic(g, with(Execution::serial));
        const auto p = exhaustive_antimagic(g, with(Execution::parallel));
        EXPECT_EQ(s.verdict, p.verdict) << spec;
        if (s.verdict == Verdict::refuted) EXPECT_EQ(s.nodes_explored, p.nodes_explored) << spec;
        if (s.labeling) {
            ASSERT_TRUE(p.labeling);
            EXPECT_TRUE(std::ranges::equal(s.labeling->labels(), p.labeling->labels())) << spec;
        }
    }
}

TEST(Exhaustive, RefutedCountsAreStable) {
    const Forest g = parse_forest("S(1,1)+3*P3");
    const auto first = exhaustive_antimagic(g, with(Execution::serial));
    for (int rep = 0; rep < 3; ++rep) {
        EXPECT_EQ(exhaustive_antimagic(g, with(Execution::parallel)).nodes_explored, first.nodes_explored);
    }
}

TEST(Exhaustive, BudgetGivesExhaustedNotRefuted) {
    SearchOptions o;
    o.budget_nodes = 10;
    for (auto e : {Execution::serial, Execution::parallel}) {
        o.execution = e;
        const auto r = exhaustive_antimagic(parse_forest("S(1,1)+3*P3"), o);
        EXPECT_EQ(r.verdict, Verdict::exhausted);
        EXPECT_FALSE(r.labeling);
    }
    o.budget_nodes.reset();
    o.wall_budget = std::chrono::milliseconds(0);
    EXPECT_NE(exhaustive_antimagic(parse_forest("6*P3"), o).verdict, Verdict::refuted);
}

TEST(Exhaustive, CapAndDomain) {
    try {
        exhaustive_antimagic(parse_forest("8*P3"));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::refuse_to_run);
    }
    SearchOptions small;
    small.edge_cap = 3;
    EXPECT_THROW(exhaustive_antimagic(parse_forest("2*P3"), small), Error);
    small.budget_nodes = 1000;
    EXPECT_NO_THROW(exhaustive_antimagic(parse_forest("2*P3"), small));
    try {
        exhaustive_antimagic(parse_forest("P2+P3"));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::out_of_domain);
    }
}

TEST(Exhaustive, EdgeCapFromEnvironment) {
    ::setenv("ANTIMAGIC_EDGE_CAP", "5", 1);
    EXPECT_EQ(default_edge_cap(), 5);
    ::setenv("ANTIMAGIC_EDGE_CAP", "junk", 1);
    EXPECT_EQ(default_edge_cap(), 14);
    ::unsetenv("ANTIMAGIC_EDGE_CAP");
    EXPECT_EQ(default_edge_cap(), 14);
}

TEST(ExhaustiveTau, Examples) {
    auto t = exhaustive_tau(make_double_star(1, 1), 3);
    ASSERT_TRUE(t.tau);
    EXPECT_EQ(*t.tau, 2);
    EXPECT_FALSE(t.reached_limit);
    EXPECT_EQ(*t.tau, tau_double_star(1, 1).value);

    t = exhaustive_tau(make_path(3), 1);
    ASSERT_TRUE(t.tau);
    EXPECT_EQ(*t.tau, 0);
    EXPECT_EQ(*t.tau, beta(make_path(3)));

    t = exhaustive_tau(make_double_star(1, 2), 2);
    ASSERT_TRUE(t.tau);
    EXPECT_EQ(*t.tau, 2);
    EXPECT_TRUE(t.reached_limit);

    t = exhaustive_tau(parse_forest("2*P3"), 1);
    EXPECT_FALSE(t.tau);
    EXPECT_THROW(exhaustive_tau(make_double_star(1, 1), 6), Error);
}

TEST(ExhaustiveTau, ConstructionsAreInTheFoundSpace) {
    for (int m = 3; m <= 12; ++m) {
        for (int a = 1; 2 * a <= m - 1; ++a) {
            const int b = m - 1 - a;
            const auto tau = tau_double_star(a, b).value;
            for (int c = 0; c <= tau && m + 2 * c <= 12; ++c) {
                const DoubleStarInstance inst(a, b, c);
                const auto r = exhaustive_antimagic(inst.forest());
                EXPECT_EQ(r.verdict, Verdict::found) << a << "," << b << "," << c;
                const Labeling f = partition_to_labeling(inst, construct(a, b, c).partition);
                EXPECT_TRUE(is_antimagic(inst.forest(), f).antimagic);
            }
        }
    }
}

TEST(Search11, Examples) {
    auto r = search_11(make_path(3));
    EXPECT_EQ(r.verdict, Verdict::found);
    ASSERT_TRUE(r.labeling);
    EXPECT_EQ(detect_ad(make_path(3), *r.labeling), (Progression{1, 1}));

    r = search_11(parse_forest("S3+P3"));
    EXPECT_EQ(r.verdict, Verdict::refuted);
    EXPECT_TRUE(r.screened_out);
    EXPECT_EQ(r.nodes_explored, 0u);

    const Forest g = parse_forest("S(1,2)+5*P3");
    for (auto e : {Execution::serial, Execution::parallel}) {
        r = search_11(g, with(e));
        EXPECT_EQ(r.verdict, Verdict::found);
        ASSERT_TRUE(r.labeling);
        EXPECT_EQ(detect_ad(g, *r.labeling), (Progression{1, 1}));
    }
}
