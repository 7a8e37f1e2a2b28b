// antimagic/sweeps.hpp - bulk checks over parameter ranges
//
// Each sweep has a serial reference path and an OpenMP path. Work is split
// into fixed units whose partial results merge in unit order, so both paths
// return identical reports.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "antimagic/constructor.hpp"
#include "antimagic/oracle.hpp"
#include "antimagic/pair_subsets.hpp"

namespace antimagic {

struct Triple {
    int a = 0;
    int b = 0;
    int c = 0;
    friend bool operator==(const Triple&, const Triple&) = default;
};

struct ConstructionSweep {
    std::uint64_t instances = 0;
    std::uint64_t antimagic_failures = 0;
    std::uint64_t proposition_cases = 0;
    std::uint64_t proposition_failures = 0;  // tagged proposition case, hypothesis false
    std::uint64_t hypothesis_true = 0;
    std::uint64_t implication_failures = 0;  // hypothesis true, labeling not antimagic
    std::uint64_t ad_inconsistencies = 0;    // detected (a,d) violating the counting identity
    std::uint64_t swaps = 0;
    std::uint64_t errors = 0;                // construct threw
    std::array<std::uint64_t, 9> per_case{};  // indexed by ConstructionCase
    std::vector<Triple> failures;             // first few, ascending

    bool clean() const {
        return antimagic_failures == 0 && proposition_failures == 0 && implication_failures == 0 &&
               ad_inconsistencies == 0 && errors == 0;
    }
    friend bool operator==(const ConstructionSweep&, const ConstructionSweep&) = default;
};

// All 1 <= a <= b with a+b+1 <= max_m and 0 <= c <= tau(S(a,b)).
ConstructionSweep sweep_constructions(int max_m, Execution execution = Execution::parallel);

struct IdentitySweep {
    std::uint64_t checked = 0;
    std::optional<std::int64_t> first_mismatch;
    friend bool operator==(const IdentitySweep&, const IdentitySweep&) = default;
};

// tau_zero(m) == tau_zero_alt(m) for lo <= m <= hi.
IdentitySweep sweep_tau_identity(std::int64_t lo, std::int64_t hi, Execution execution = Execution::parallel);

// Distinct entries, alpha_i + beta_i = k + i, min alpha = floor((p+1)/2),
// betas exactly [k-p+1, k]. Checked by direct scan.
bool pair_family_well_formed(const PairFamily& fam);

struct PairFamilySweep {
    std::uint64_t checked = 0;
    std::optional<int> first_failure;
    friend bool operator==(const PairFamilySweep&, const PairFamilySweep&) = default;
};

PairFamilySweep sweep_pair_families(int lo, int hi, Execution execution = Execution::parallel);

// For every 1 <= m <= max_m: p(m+2c) >= c when c <= 2m+1 and p(m+2c) = c-1
// when 2m+2 <= c <= 2m+6. Returns the first failing (m, c).
std::optional<std::pair<int, int>> check_pair_count_regimes(int max_m);

struct StSweep {
    std::uint64_t queries = 0;
    std::uint64_t feasible = 0;
    std::optional<std::array<long long, 4>> first_failure;  // lo, hi, s, t
    friend bool operator==(const StSweep&, const StSweep&) = default;
};

// find_st_subset against subset enumeration for lo in [1, max_lo],
// 0 <= hi - lo <= max_width, every s and every t from one below the smallest
// to one above the largest s-sum.
StSweep sweep_st_subsets(int max_lo, int max_width, Execution execution = Execution::parallel);

}  // namespace antimagic
