// Constructions for S(a,b) + cP3, case by case.

#include <gtest/gtest.h>

#include "antimagic/bounds.hpp"
#include "antimagic/constructor.hpp"
#include "antimagic/error.hpp"
#include "antimagic/verifier.hpp"
#include "oracles.hpp"

using namespace antimagic;

namespace {

std::vector<int> labels_of(const DoubleStarInstance& inst, const LabelPartition& part) {
    const Labeling f = partition_to_labeling(inst, part);
    return {f.labels().begin(), f.labels().end()};
}

// Antimagic by the naive oracle, not the library verifier.
bool naive_antimagic(int a, int b, int c, const LabelPartition& part) {
    const DoubleStarInstance inst(a, b, c);
    const auto labels = labels_of(inst, part);
    return oracle::is_bijection(labels) && oracle::distinct(oracle::sums(inst.forest(), labels));
}

std::vector<std::int64_t> sorted_sums(int a, int b, int c, const LabelPartition& part) {
    const DoubleStarInstance inst(a, b, c);
    auto s = oracle::sums(inst.forest(), labels_of(inst, part));
    std::sort(s.begin(), s.end());
    return s;
}

}  // namespace

TEST(Construct, BareDoubleStar) {
    auto p = construct_c0(1, 1);
    EXPECT_EQ(p.a_side, (LabelSet{1}));
    EXPECT_EQ(p.b_side, (LabelSet{2}));
    EXPECT_EQ(p.internal, (LabelSet{3}));
    EXPECT_EQ(sorted_sums(1, 1, 0, p), (std::vector<std::int64_t>{1, 2, 4, 5}));
    p = construct_c0(2, 2);
    EXPECT_EQ(p.a_side, (LabelSet{1, 2}));
    EXPECT_EQ(p.b_side, (LabelSet{3, 4}));
    EXPECT_EQ(sorted_sums(2, 2, 0, p), (std::vector<std::int64_t>{1, 2, 3, 4, 8, 12}));
    EXPECT_EQ(sorted_sums(1, 3, 0, construct_c0(1, 3)), (std::vector<std::int64_t>{1, 2, 3, 4, 6, 14}));
}

TEST(Construct, SmallC) {
    auto p = construct_small(1, 2, 1);
    EXPECT_EQ(p.p3, (std::vector<LabelSet>{{1, 5}}));
    EXPECT_EQ(p.internal, (LabelSet{6}));
    EXPECT_EQ(p.a_side, (LabelSet{2}));
    EXPECT_EQ(p.b_side, (LabelSet{3, 4}));
    EXPECT_EQ(sorted_sums(1, 2, 1, p), (std::vector<std::int64_t>{1, 2, 3, 4, 5, 6, 8, 13}));

    p = construct_small(2, 2, 2);
    EXPECT_EQ(p.p3, (std::vector<LabelSet>{{1, 8}, {3, 7}}));
    EXPECT_EQ(p.internal, (LabelSet{9}));
    EXPECT_EQ(p.a_side, (LabelSet{2, 4}));
    EXPECT_EQ(p.b_side, (LabelSet{5, 6}));
    EXPECT_TRUE(naive_antimagic(2, 2, 2, p));

    p = construct_small(1, 1, 1);
    EXPECT_EQ(p.p3, (std::vector<LabelSet>{{1, 4}}));
    EXPECT_EQ(p.internal, (LabelSet{5}));
    EXPECT_EQ(p.a_side, (LabelSet{2}));
    EXPECT_EQ(p.b_side, (LabelSet{3}));
}

TEST(Construct, ThreeToFive) {
    auto built = construct_c3_5(1, 2, 3);
    EXPECT_EQ(built.partition.p3, (std::vector<LabelSet>{{1, 9}, {3, 8}, {5, 7}}));
    EXPECT_EQ(built.partition.internal, (LabelSet{10}));
    EXPECT_EQ(built.partition.a_side, (LabelSet{4}));
    EXPECT_EQ(built.partition.b_side, (LabelSet{2, 6}));

    built = construct_c3_5(2, 2, 4);
    EXPECT_EQ(built.partition.p3, (std::vector<LabelSet>{{1, 12}, {3, 11}, {5, 10}, {7, 9}}));
    EXPECT_EQ(built.partition.internal, (LabelSet{13}));
    EXPECT_EQ(built.partition.a_side, (LabelSet{2, 4}));
    EXPECT_EQ(built.partition.b_side, (LabelSet{6, 8}));
    EXPECT_TRUE(naive_antimagic(2, 2, 4, built.partition));
}

TEST(Construct, FigureTwoPartition) {
    const Construction built = construct(1, 2, 5);
    const auto& p = built.partition;
    EXPECT_EQ(p.p3, (std::vector<LabelSet>{{1, 2}, {4, 11}, {7, 10}, {6, 12}, {5, 14}}));
    EXPECT_EQ(p.internal, (LabelSet{3}));
    EXPECT_EQ(p.a_side, (LabelSet{13}));
    EXPECT_EQ(p.b_side, (LabelSet{8, 9}));
    EXPECT_FALSE(built.trace.swap_applied);
    std::vector<std::int64_t> one_to_twenty(20);
    std::iota(one_to_twenty.begin(), one_to_twenty.end(), 1);
    EXPECT_EQ(sorted_sums(1, 2, 5, p), one_to_twenty);
}

TEST(Construct, SwapRepairAtFive) {
    int swaps = 0;
    for (int m = 4; m <= 60; ++m) {
        for (int a = 1; 2 * a <= m - 1; ++a) {
            const int b = m - 1 - a;
            if (tau_double_star(a, b).value < 5) continue;
            const Construction built = construct(a, b, 5);
            if (!built.trace.swap_applied) continue;
            ++swaps;
            const DoubleStarInstance inst(a, b, 5);
            auto s = oracle::sums(inst.forest(), labels_of(inst, built.partition));
            EXPECT_EQ(s[inst.center(6)], s[inst.center(7)] + 2);
            // Undo the exchange: the two centers collide.
            LabelPartition before = built.partition;
            std::replace(before.a_side.begin(), before.a_side.end(), 9, 8);
            std::replace(before.b_side.begin(), before.b_side.end(), 8, 9);
            std::sort(before.a_side.begin(), before.a_side.end());
            std::sort(before.b_side.begin(), before.b_side.end());
            s = oracle::sums(inst.forest(), labels_of(inst, before));
            EXPECT_EQ(s[inst.center(6)], s[inst.center(7)]);
            EXPECT_TRUE(naive_antimagic(a, b, 5, built.partition));
        }
    }
    EXPECT_GE(swaps, 1);
}

TEST(Construct, MidRange) {
    auto built = construct(1, 4, 6);
    EXPECT_EQ(built.trace.case_tag, ConstructionCase::mid_a1);
    ASSERT_TRUE(built.trace.chosen_index);
    const auto fam = pair_family(18);
    EXPECT_EQ(*built.trace.chosen_index, min_alpha_index(fam, 6));
    EXPECT_EQ(built.partition.internal, (LabelSet{fam.alpha_at(*built.trace.chosen_index)}));
    EXPECT_TRUE(naive_antimagic(1, 4, 6, built.partition));

    built = construct(2, 2, 6);
    EXPECT_EQ(built.trace.case_tag, ConstructionCase::mid_p_ge_c1);
    EXPECT_EQ(built.partition.internal, (LabelSet{3}));
    EXPECT_EQ(built.partition.p3.back(), (LabelSet{1, 2}));
    EXPECT_TRUE(naive_antimagic(2, 2, 6, built.partition));

    // (3,3,13) lies beyond tau(S(3,3)) = tau_0(7) = 12; (3,3,12) is the
    // nearest instance with p = c.
    EXPECT_THROW(construct(3, 3, 13), Error);
    built = construct(3, 3, 12);
    EXPECT_EQ(p_of(31), 12);
    EXPECT_TRUE(built.trace.case_tag == ConstructionCase::mid_cond1 ||
                built.trace.case_tag == ConstructionCase::mid_cond2 ||
                built.trace.case_tag == ConstructionCase::mid_cond3);
    EXPECT_TRUE(naive_antimagic(3, 3, 12, built.partition));
}

TEST(Construct, EveryConditionBranchFires) {
    std::set<ConstructionCase> seen;
    for (int m = 5; m <= 40; ++m) {
        for (int a = 2; 2 * a <= m - 1; ++a) {
            const int b = m - 1 - a;
            const auto tau = tau_double_star(a, b).value;
            for (int c = 6; c <= std::min<std::int64_t>(tau, 2 * m + 1); ++c) {
                const auto built = construct(a, b, c);
                seen.insert(built.trace.case_tag);
                if (built.trace.case_tag == ConstructionCase::mid_cond1 ||
                    built.trace.case_tag == ConstructionCase::mid_cond2 ||
                    built.trace.case_tag == ConstructionCase::mid_cond3) {
                    EXPECT_EQ(p_of(m + 2 * c), c);
                }
            }
        }
    }
    EXPECT_TRUE(seen.count(ConstructionCase::mid_cond1));
    EXPECT_TRUE(seen.count(ConstructionCase::mid_cond2));
    EXPECT_TRUE(seen.count(ConstructionCase::mid_cond3));
    EXPECT_TRUE(seen.count(ConstructionCase::mid_p_ge_c1));
}

TEST(Construct, HighRange) {
    auto built = construct(3, 12, 34);
    EXPECT_EQ(built.trace.case_tag, ConstructionCase::high_W);
    EXPECT_EQ(built.trace.W, (LabelSet{3, 14, 50, 51}));
    EXPECT_EQ(built.partition.p3.back(), (LabelSet{1, 2}));
    EXPECT_EQ(built.partition.internal, (LabelSet{3}));
    EXPECT_EQ(built.partition.a_side, (LabelSet{14, 50, 51}));
    EXPECT_TRUE(naive_antimagic(3, 12, 34, built.partition));
    std::vector<std::int64_t> all(119);
    std::iota(all.begin(), all.end(), 1);
    EXPECT_EQ(sorted_sums(3, 12, 34, built.partition), all);

    EXPECT_EQ(high_range_free_labels(26, 58), integer_range(1, 28));
    built = construct(8, 17, 58);
    ASSERT_TRUE(built.trace.W);
    EXPECT_EQ(built.trace.W->size(), 9u);
    EXPECT_TRUE(naive_antimagic(8, 17, 58, built.partition));

    LabelSet x = integer_range(1, 19);
    x.push_back(40);
    x.push_back(61);
    EXPECT_EQ(high_range_free_labels(19, 41), x);
    built = construct(4, 14, 41);
    EXPECT_TRUE(naive_antimagic(4, 14, 41, built.partition));
}

TEST(ChooseW, Examples) {
    auto w = choose_W(3, 16, 34);
    EXPECT_EQ(w.W, (LabelSet{3, 14, 50, 51}));
    EXPECT_TRUE(w.hits_target);
    EXPECT_EQ(set_sum(w.W), 7 * 16 + 6);

    w = choose_W(6, 24, 53);
    EXPECT_EQ(w.W.size(), 7u);
    EXPECT_EQ(set_sum(w.W), 183);
    EXPECT_TRUE(std::binary_search(w.W.begin(), w.W.end(), 52));

    w = choose_W(10, 21, 44);
    EXPECT_EQ(w.W.size(), 11u);
    EXPECT_EQ(set_sum(w.W), 153);
    EXPECT_GE(w.W.front(), 3);
    EXPECT_LE(w.W.back(), 21);
}

TEST(ChooseW, SubsetOfFreeLabels) {
    for (int m = 16; m <= 60; ++m) {
        for (int a = 3; 2 * a <= m - 1; ++a) {
            const int b = m - 1 - a;
            const auto tau = tau_double_star(a, b).value;
            for (int c = 2 * m + 2; c <= tau; ++c) {
                const auto w = choose_W(a, m, c);
                const auto x = high_range_free_labels(m, c);
                EXPECT_EQ(static_cast<int>(w.W.size()), a + 1);
                EXPECT_TRUE(std::includes(x.begin(), x.end(), w.W.begin(), w.W.end()));
                if (w.hits_target) EXPECT_EQ(set_sum(w.W), m + 3 * c);
                else EXPECT_GT(set_sum(w.W), m + 3 * c);
            }
        }
    }
}

TEST(Construct, OutOfRangeNamesBound) {
    try {
        construct(1, 1, 3);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::out_of_range);
        EXPECT_NE(std::string(e.what()).find("tau(S(1,1)) = 2"), std::string::npos);
    }
    EXPECT_THROW(construct(2, 1, 0), Error);
    EXPECT_THROW(construct(1, 2, -1), Error);
}

TEST(Construct, AllCasesSmallRange) {
    for (int m = 3; m <= 24; ++m) {
        for (int a = 1; 2 * a <= m - 1; ++a) {
            const int b = m - 1 - a;
            const auto tau = tau_double_star(a, b).value;
            for (int c = 0; c <= tau; ++c) {
                const auto built = construct(a, b, c);
                ASSERT_TRUE(naive_antimagic(a, b, c, built.partition)) << a << "," << b << "," << c;
            }
        }
    }
}
