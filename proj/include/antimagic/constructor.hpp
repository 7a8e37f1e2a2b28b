// antimagic/constructor.hpp - antimagic labelings of S(a,b) + cP3 for 0 <= c <= tau
//
// Strategy shared by the c >= 6 cases: the P3 centers get sums k+1, ..., k+c
// from label pairs with prescribed sums, except one P3 whose center sum equals
// the label on the double-star internal edge. Leaf sums are their own labels
// (at most k), so only the two double-star centers need separate care.

#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "antimagic/forest.hpp"
#include "antimagic/pair_subsets.hpp"

namespace antimagic {

enum class ConstructionCase {
    c0,           // bare double star
    c1_2,         // c in {1, 2}
    c3_5,         // c in {3, 4, 5}
    mid_a1,       // 6 <= c <= 2m+1, a = 1
    mid_p_ge_c1,  // 6 <= c <= 2m+1, a >= 2, p >= c+1
    mid_cond1,    // p = c, condition (1)
    mid_cond2,    // p = c, condition (2)
    mid_cond3,    // p = c, condition (3)
    high_W,       // 2m+2 <= c <= 2m+6
};

std::string_view to_string(ConstructionCase tag) noexcept;

struct ConstructionTrace {
    ConstructionCase case_tag = ConstructionCase::c0;
    // i_0 (mid_a1), i_1 (mid_cond1) or i_2 (mid_cond2); 1-based.
    std::optional<int> chosen_index;
    std::optional<LabelSet> W;
    std::string W_rule;  // which sub-range of a produced W
    bool swap_applied = false;
    // The center sums u_1..u_{c+1} are exactly f(E_I) together with [k+1, k+c].
    bool proposition_case = false;
};

struct Construction {
    LabelPartition partition;
    ConstructionTrace trace;
};

// Throws invalid_parameters unless 1 <= a <= b, out_of_range when c exceeds
// tau(S(a,b)) (the message names the binding bound).
Construction construct(int a, int b, int c);

LabelPartition construct_c0(int a, int b);
LabelPartition construct_small(int a, int b, int c);
Construction construct_c3_5(int a, int b, int c);
Construction construct_mid(int a, int b, int c);
Construction construct_high(int a, int b, int c);

struct WChoice {
    LabelSet W;
    bool hits_target = false;  // sum(W) == k + c; otherwise W is the a+1 smallest of Z
    std::string rule;
};

// The (a+1)-set for 2m+2 <= c <= 2m+6, a subset of X = [1,k] minus the first
// c-1 pairs. Throws invalid_parameters outside the per-c preconditions.
WChoice choose_W(int a, int m, int c);

// X for the high range as given in closed form (used to cross-check the pair family).
LabelSet high_range_free_labels(int m, int c);

}  // namespace antimagic
