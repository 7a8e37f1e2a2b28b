// antimagic/number_theory.hpp - Pell pairs, forest census and feasibility screens

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "antimagic/forest.hpp"

namespace antimagic {

// n vertices and m edges with (2n+1)^2 - 2(2m+1)^2 = -1.
struct PellSolution {
    std::int64_t n = 0;
    std::int64_t m = 0;

    std::int64_t x() const { return 2 * n + 1; }
    std::int64_t y() const { return 2 * m + 1; }
    bool operator==(const PellSolution&) const = default;
};

bool satisfies_pell(const PellSolution& s);

// All solutions with n <= max_n in ascending order. Throws invalid_parameters
// when max_n < 3.
std::vector<PellSolution> pell_solutions(std::int64_t max_n);

// Forests on n vertices and m < n edges whose components all have at least
// three vertices, one per isomorphism class. Throws out_of_domain when m >= n,
// refuse_to_run when a part would exceed the tree enumeration limit.
std::vector<Forest> census_shapes(int n, int m);

// 4m >= 3n. Throws invalid_parameters when n < 3.
bool screen_density(std::int64_t n, std::int64_t m);

struct DoubleStarPellScreen {
    bool has_candidate = false;  // an S(a,b) + cP3 with these counts exists
    std::int64_t m_ds = 0;       // edges of the double star
    std::int64_t c = 0;          // P3 copies
    std::int64_t cap = 0;        // 2 m_ds + 6
    bool feasible = false;       // c <= cap
    std::vector<int> witness_a;  // a with tau(S(a, m_ds-1-a)) >= c
    std::string reason;
};

DoubleStarPellScreen screen_double_star_pell(const PellSolution& s);

}  // namespace antimagic
