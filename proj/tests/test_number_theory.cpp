// Pell pairs, tree canonical forms, the forest census and the screens.

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "antimagic/error.hpp"
#include "antimagic/number_theory.hpp"
#include "antimagic/oracle.hpp"
#include "antimagic/tree_canon.hpp"
#include "antimagic/verifier.hpp"

using namespace antimagic;

namespace {

// Free trees on n vertices, n = 1..12 (OEIS A000055).
const std::vector<std::size_t> kTreeCounts{1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551};

Forest from_pruefer(const std::vector<int>& code, int n) {
    std::vector<int> degree(static_cast<std::size_t>(n), 1);
    for (const int v : code) ++degree[v];
    std::vector<Edge> edges;
    for (const int v : code) {
        int leaf = 0;
        while (degree[leaf] != 1) ++leaf;
        edges.push_back({leaf, v});
        --degree[leaf];
        --degree[v];
    }
    int u = -1;
    for (int v = 0; v < n; ++v) {
        if (degree[v] == 1) {
            if (u < 0) {
                u = v;
            } else {
                edges.push_back({u, v});
            }
        }
    }
    return Forest(n, edges);
}

Forest relabel(const Forest& g, const std::vector<int>& perm) {
    std::vector<Edge> edges;
    for (const auto& e : g.edges()) edges.push_back({perm[e.u], perm[e.v]});
    return Forest(g.vertex_count(), edges);
}

}  // namespace

TEST(Pell, Solutions) {
    const auto s = pell_solutions(1000);
    EXPECT_EQ(s, (std::vector<PellSolution>{{3, 2}, {20, 14}, {119, 84}, {696, 492}}));
    EXPECT_EQ(pell_solutions(3), (std::vector<PellSolution>{{3, 2}}));
    const auto more = pell_solutions(5000);
    ASSERT_EQ(more.size(), 5u);
    EXPECT_EQ(more.back(), (PellSolution{4059, 2870}));
    for (const auto& p : pell_solutions(std::int64_t{1} << 60)) {
        const __int128 x = p.x();
        const __int128 y = p.y();
        EXPECT_TRUE(x * x - 2 * y * y == -1);
        EXPECT_TRUE(ad_feasible(p.n, p.m, 1, 1));
    }
    EXPECT_THROW(pell_solutions(2), Error);
}

TEST(Pell, NonSolutionsRejected) {
    EXPECT_FALSE(satisfies_pell({4, 3}));
    EXPECT_THROW(screen_double_star_pell({4, 3}), Error);
}

TEST(TreeCanon, CountsMatchKnownSequence) {
    for (int n = 1; n <= 12; ++n) EXPECT_EQ(unlabeled_trees(n).size(), kTreeCounts[n - 1]) << n;
}

TEST(TreeCanon, LabeledTreesCollapseToKnownCounts) {
    for (int n = 3; n <= 7; ++n) {
        std::set<std::string> codes;
        std::vector<int> code(static_cast<std::size_t>(n - 2), 0);
        while (true) {
            codes.insert(forest_canonical_form(from_pruefer(code, n)));
            int j = n - 3;
            while (j >= 0 && ++code[j] == n) code[j--] = 0;
            if (j < 0) break;
        }
        EXPECT_EQ(codes.size(), kTreeCounts[n - 1]) << n;
    }
}

TEST(TreeCanon, InvariantUnderRelabeling) {
    std::mt19937 rng(7);
    for (const auto& spec : {"S(2,3)+P4+2*P3", "P7+S4", "S(1,5)+S(2,2)"}) {
        const Forest g = parse_forest(spec);
        std::vector<int> perm(static_cast<std::size_t>(g.vertex_count()));
        std::iota(perm.begin(), perm.end(), 0);
        for (int rep = 0; rep < 20; ++rep) {
            std::shuffle(perm.begin(), perm.end(), rng);
            EXPECT_EQ(forest_canonical_form(relabel(g, perm)), forest_canonical_form(g)) << spec;
        }
    }
    EXPECT_NE(forest_canonical_form(parse_forest("P4+S3")), forest_canonical_form(parse_forest("2*P4")));
    EXPECT_EQ(forest_canonical_form(parse_forest("S(1,1)")), forest_canonical_form(parse_forest("P4")));
}

TEST(TreeCanon, Names) {
    EXPECT_EQ(describe_forest(parse_forest("S(1,2)+5*P3")), "S(1,2)+5*P3");
    EXPECT_EQ(describe_forest(parse_forest("P3+S4")), "S4+P3");
    EXPECT_EQ(describe_forest(parse_forest("S(1,1)")), "P4");
    EXPECT_EQ(describe_forest(parse_forest("S2")), "P3");
    EXPECT_EQ(describe_forest(make_path(1) + make_path(3)), "P3+P1");
}

TEST(Census, PellPairOfTwenty) {
    const auto shapes = census_shapes(20, 14);
    std::set<std::string> got;
    for (const auto& g : shapes) {
        EXPECT_EQ(g.vertex_count(), 20);
        EXPECT_EQ(g.edge_count(), 14);
        EXPECT_FALSE(g.has_degenerate_component());
        got.insert(forest_canonical_form(g));
    }
    EXPECT_EQ(got.size(), shapes.size());
    std::set<std::string> expected;
    for (const auto* spec : {"P5+5*P3", "S4+5*P3", "S(1,2)+5*P3", "2*P4+4*P3", "2*S3+4*P3", "P4+S3+4*P3"}) {
        expected.insert(forest_canonical_form(parse_forest(spec)));
    }
    EXPECT_EQ(got, expected);
}

TEST(Census, SmallCases) {
    const auto three = census_shapes(3, 2);
    ASSERT_EQ(three.size(), 1u);
    EXPECT_EQ(describe_forest(three[0]), "P3");
    const auto eight = census_shapes(8, 6);
    EXPECT_EQ(eight.size(), 6u);
    std::set<std::string> codes;
    for (const auto& g : eight) codes.insert(forest_canonical_form(g));
    EXPECT_EQ(codes.size(), 6u);
    EXPECT_TRUE(census_shapes(8, 7).size() == 23u);  // single trees on 8 vertices
    EXPECT_TRUE(census_shapes(5, 3).empty());         // two parts of size >= 3 need 6 vertices
}

TEST(Census, Errors) {
    try {
        census_shapes(6, 6);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::out_of_domain);
    }
    EXPECT_TRUE(census_shapes(20, 1).empty());  // 19 components cannot all have 3 vertices
    try {
        census_shapes(20, 19);  // one tree on 20 vertices
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::refuse_to_run);
    }
}

TEST(Census, EveryTwentyVertexShapeIsOneOne) {
    for (const auto& g : census_shapes(20, 14)) {
        const auto r = search_11(g);
        ASSERT_EQ(r.verdict, Verdict::found) << describe_forest(g);
        EXPECT_EQ(detect_ad(g, *r.labeling), (Progression{1, 1}));
    }
}

TEST(Screens, Density) {
    EXPECT_FALSE(screen_density(20, 14));
    EXPECT_TRUE(screen_density(4, 3));
    EXPECT_FALSE(screen_density(119, 84));
    for (const auto& p : pell_solutions(100000)) EXPECT_FALSE(screen_density(p.n, p.m));
    EXPECT_THROW(screen_density(2, 1), Error);
}

TEST(Screens, DoubleStarPell) {
    auto r = screen_double_star_pell({696, 492});
    EXPECT_TRUE(r.has_candidate);
    EXPECT_EQ(r.m_ds, 86);
    EXPECT_EQ(r.c, 203);
    EXPECT_EQ(r.cap, 178);
    EXPECT_FALSE(r.feasible);
    EXPECT_NE(r.reason.find("203 > 178"), std::string::npos);

    r = screen_double_star_pell({119, 84});
    EXPECT_EQ(r.m_ds, 16);
    EXPECT_EQ(r.c, 34);
    EXPECT_TRUE(r.feasible);
    EXPECT_EQ(r.witness_a, (std::vector<int>{3, 4, 5, 6, 7}));

    r = screen_double_star_pell({20, 14});
    EXPECT_EQ(r.m_ds, 4);
    EXPECT_EQ(r.c, 5);
    EXPECT_TRUE(r.feasible);
    EXPECT_EQ(r.witness_a, (std::vector<int>{1}));

    r = screen_double_star_pell({3, 2});
    EXPECT_FALSE(r.has_candidate);
}
