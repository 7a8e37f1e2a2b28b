// antimagic/verifier.hpp - antimagic and (a,d)-antimagic checks

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "antimagic/forest.hpp"

namespace antimagic {

struct DuplicateWitness {
    int first_vertex = 0;
    int second_vertex = 0;
    std::int64_t sum = 0;
};

struct Progression {
    std::int64_t initial = 0;
    std::int64_t difference = 0;
    friend bool operator==(const Progression&, const Progression&) = default;
};

struct VerificationReport {
    bool antimagic = false;
    // First colliding pair after sorting vertices by (sum, id).
    std::optional<DuplicateWitness> duplicate_witness;
    std::vector<std::int64_t> sums;  // ascending
    std::optional<Progression> ad_progression;
};

// Throws invalid_labeling when f is not a bijection onto [1, m].
VerificationReport is_antimagic(const Forest& g, const Labeling& f);

// (a, d) when the sorted sums are a, a+d, ..., a+(n-1)d with distinct terms.
std::optional<Progression> detect_ad(const Forest& g, const Labeling& f);
std::optional<Progression> detect_ad(const std::vector<std::int64_t>& sorted_sums);

// 2an + n(n-1)d == 2m(m+1), the counting condition for an (a,d)-antimagic labeling.
bool ad_feasible(std::int64_t n, std::int64_t m, std::int64_t a, std::int64_t d);

// c <= tau_0(m) and {phi(u_1), ..., phi(u_{c+1})} = f(E_I) + [k+1, k+c].
bool check_proposition_hypothesis(const DoubleStarInstance& inst, const LabelPartition& part);

}  // namespace antimagic
