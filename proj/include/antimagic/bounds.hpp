// antimagic/bounds.hpp - tolerance of double stars and the general upper bound
//
// tau(S(a,b)) is the largest c such that S(a,b) + c'P3 is antimagic for all
// 0 <= c' <= c. It is min(tau_0, 2m + i) where m = a+b+1 and the cap index i
// depends on a (and on b when a = 7). All floors involving sqrt(2) are
// computed with integer square roots; no floating point is involved.

#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "antimagic/forest.hpp"

namespace antimagic {

// floor((1+sqrt 2)(m - 3/2)) - 1, for m >= 2.
std::int64_t tau_zero(std::int64_t m);

// floor((2m - 5 + sqrt(8m^2 - 24m + 17)) / 2), for m >= 2. Equal to tau_zero.
std::int64_t tau_zero_alt(std::int64_t m);

// Which argument of the minimum attains tau: 0 for tau_0, i for 2m+i.
// Ties are reported as the cap (i > 0).
struct TauResult {
    std::int64_t value = 0;
    int attained_case = 0;
    std::int64_t tau0 = 0;
    std::int64_t tau_cap = 0;
    int cap_index = 0;
};

std::string case_name(int attained_case);  // "tau_0" ... "tau_6"

// Index i of the competing 2m+i term for S(a,b).
int cap_index(int a, int b);

TauResult tau_double_star(int a, int b);

// min{ floor((3+2 sqrt 2)(m-n) + (1+sqrt 2)(m+1/2)), 2m + 5(l-t) + 1 }.
// Throws out_of_domain when g has an isolated vertex or a K2 component.
std::int64_t beta(const Forest& g);

struct BoundReport {
    std::int64_t beta = 0;
    std::optional<std::int64_t> lemma_upb2;  // a = 1: 2m+1
    std::optional<std::int64_t> lemma_upb3;  // 2 <= a <= 6: 2m+a-1; a = 7, b <= 21: 2m+5
};

BoundReport lemma_upper_bounds(int a, int b);

}  // namespace antimagic
