// sweeps.cpp

#include "antimagic/sweeps.hpp"

#include <algorithm>
#include <bit>

#include "antimagic/bounds.hpp"
#include "antimagic/error.hpp"
#include "antimagic/verifier.hpp"

namespace antimagic {

namespace {

constexpr std::size_t kFailureSamples = 16;

template <class Result, class Unit, class Merge>
Result run_units(int unit_count, Execution execution, Unit unit, Merge merge) {
    std::vector<Result> parts(static_cast<std::size_t>(unit_count));
    if (execution == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
        for (int i = 0; i < unit_count; ++i) parts[i] = unit(i);
    } else {
        for (int i = 0; i < unit_count; ++i) parts[i] = unit(i);
    }
    Result total{};
    for (auto& p : parts) merge(total, p);
    return total;
}

ConstructionSweep sweep_star(int a, int b) {
    ConstructionSweep r;
    const auto tau = tau_double_star(a, b).value;
    for (int c = 0; c <= tau; ++c) {
        ++r.instances;
        bool failed = false;
        try {
            const Construction built = construct(a, b, c);
            const DoubleStarInstance inst(a, b, c);
            const Labeling f = partition_to_labeling(inst, built.partition);
            const VerificationReport report = is_antimagic(inst.forest(), f);
            ++r.per_case[static_cast<std::size_t>(built.trace.case_tag)];
            if (built.trace.swap_applied) ++r.swaps;
            if (!report.antimagic) {
                ++r.antimagic_failures;
                failed = true;
            }
            const bool hypothesis = check_proposition_hypothesis(inst, built.partition);
            if (hypothesis) {
                ++r.hypothesis_true;
                if (!report.antimagic) {
                    ++r.implication_failures;
                    failed = true;
                }
            }
            if (built.trace.proposition_case) {
                ++r.proposition_cases;
                if (!hypothesis) {
                    ++r.proposition_failures;
                    failed = true;
                }
            }
            if (report.ad_progression &&
                !ad_feasible(inst.forest().vertex_count(), inst.forest().edge_count(),
                             report.ad_progression->initial, report.ad_progression->difference)) {
                ++r.ad_inconsistencies;
                failed = true;
            }
        } catch (const Error&) {
            ++r.errors;
            failed = true;
        }
        if (failed && r.failures.size() < kFailureSamples) r.failures.push_back({a, b, c});
    }
    return r;
}

void merge_into(ConstructionSweep& total, const ConstructionSweep& part) {
    total.instances += part.instances;
    total.antimagic_failures += part.antimagic_failures;
    total.proposition_cases += part.proposition_cases;
    total.proposition_failures += part.proposition_failures;
    total.hypothesis_true += part.hypothesis_true;
    total.implication_failures += part.implication_failures;
    total.ad_inconsistencies += part.ad_inconsistencies;
    total.swaps += part.swaps;
    total.errors += part.errors;
    for (std::size_t j = 0; j < total.per_case.size(); ++j) total.per_case[j] += part.per_case[j];
    for (const auto& t : part.failures) {
        if (total.failures.size() < kFailureSamples) total.failures.push_back(t);
    }
}

}  // namespace

ConstructionSweep sweep_constructions(int max_m, Execution execution) {
    if (max_m < 3) throw Error(ErrorKind::invalid_parameters, "max_m must be at least 3");
    std::vector<std::pair<int, int>> stars;
    for (int m = 3; m <= max_m; ++m) {
        for (int a = 1; 2 * a <= m - 1; ++a) stars.emplace_back(a, m - 1 - a);
    }
    return run_units<ConstructionSweep>(
        static_cast<int>(stars.size()), execution,
        [&](int i) { return sweep_star(stars[i].first, stars[i].second); }, merge_into);
}

IdentitySweep sweep_tau_identity(std::int64_t lo, std::int64_t hi, Execution execution) {
    if (lo < 2 || hi < lo) throw Error(ErrorKind::invalid_parameters, "need 2 <= lo <= hi");
    constexpr std::int64_t chunk = 1 << 14;
    const auto units = static_cast<int>((hi - lo) / chunk + 1);
    return run_units<IdentitySweep>(
        units, execution,
        [&](int i) {
            IdentitySweep r;
            const std::int64_t from = lo + i * chunk;
            const std::int64_t to = std::min(hi, from + chunk - 1);
            for (std::int64_t m = from; m <= to; ++m) {
                ++r.checked;
                if (!r.first_mismatch && tau_zero(m) != tau_zero_alt(m)) r.first_mismatch = m;
            }
            return r;
        },
        [](IdentitySweep& total, const IdentitySweep& part) {
            total.checked += part.checked;
            if (!total.first_mismatch) total.first_mismatch = part.first_mismatch;
        });
}

namespace {

// stamp[v] == k marks v as seen for the family of k; the buffer is reused across k.
bool well_formed(const PairFamily& fam, std::vector<int>& stamp) {
    const int k = fam.k;
    const int p = fam.p;
    if (static_cast<int>(fam.alpha.size()) != p || static_cast<int>(fam.beta.size()) != p) return false;
    if (static_cast<int>(stamp.size()) <= k) stamp.resize(static_cast<std::size_t>(k) + 1, 0);
    int min_alpha = k + 1;
    for (int i = 0; i < p; ++i) {
        const int x = fam.alpha[i];
        const int y = fam.beta[i];
        if (x + y != k + i + 1) return false;
        if (x < 1 || x > k || stamp[x] == k) return false;
        stamp[x] = k;
        if (y < k - p + 1 || y > k || stamp[y] == k) return false;
        stamp[y] = k;
        min_alpha = std::min(min_alpha, x);
    }
    // p distinct betas inside [k-p+1, k] fill it.
    return p == 0 || min_alpha == (p + 1) / 2;
}

}  // namespace

bool pair_family_well_formed(const PairFamily& fam) {
    std::vector<int> stamp;
    return well_formed(fam, stamp);
}

PairFamilySweep sweep_pair_families(int lo, int hi, Execution execution) {
    if (lo < 2 || hi < lo) throw Error(ErrorKind::invalid_parameters, "need 2 <= lo <= hi");
    constexpr int chunk = 512;
    const int units = (hi - lo) / chunk + 1;
    return run_units<PairFamilySweep>(
        units, execution,
        [&](int i) {
            PairFamilySweep r;
            std::vector<int> stamp;
            const int from = lo + i * chunk;
            const int to = std::min(hi, from + chunk - 1);
            for (int k = from; k <= to; ++k) {
                ++r.checked;
                if (!r.first_failure && !well_formed(pair_family(k), stamp)) r.first_failure = k;
            }
            return r;
        },
        [](PairFamilySweep& total, const PairFamilySweep& part) {
            total.checked += part.checked;
            if (!total.first_failure) total.first_failure = part.first_failure;
        });
}

std::optional<std::pair<int, int>> check_pair_count_regimes(int max_m) {
    for (int m = 1; m <= max_m; ++m) {
        for (int c = 1; c <= 2 * m + 6; ++c) {
            const int p = p_of(m + 2 * c);
            const bool ok = c <= 2 * m + 1 ? p >= c : p == c - 1;
            if (!ok) return std::make_pair(m, c);
        }
    }
    return std::nullopt;
}

StSweep sweep_st_subsets(int max_lo, int max_width, Execution execution) {
    if (max_lo < 1 || max_width < 0 || max_width > 20) {
        throw Error(ErrorKind::invalid_parameters, "need max_lo >= 1 and 0 <= max_width <= 20");
    }
    const int units = max_lo * (max_width + 1);
    return run_units<StSweep>(
        units, execution,
        [&](int i) {
            StSweep r;
            const int lo = 1 + i / (max_width + 1);
            const int size = 1 + i % (max_width + 1);
            const int hi = lo + size - 1;
            // reachable[s] holds every sum of an s-subset, by enumeration.
            const long long top = static_cast<long long>(size) * hi;
            std::vector<std::vector<char>> reachable(size + 1, std::vector<char>(top + 2, 0));
            for (unsigned mask = 0; mask < (1u << size); ++mask) {
                long long sum = 0;
                for (int j = 0; j < size; ++j) {
                    if (mask >> j & 1u) sum += lo + j;
                }
                reachable[std::popcount(mask)][sum] = 1;
            }
            for (int s = 1; s <= size; ++s) {
                const long long smallest = static_cast<long long>(s) * (2LL * lo + s - 1) / 2;
                const long long largest = static_cast<long long>(s) * (2LL * hi - s + 1) / 2;
                for (long long t = smallest - 1; t <= largest + 1; ++t) {
                    ++r.queries;
                    const bool expected = t >= 0 && t <= top && reachable[s][t];
                    const auto y = find_st_subset(lo, hi, s, t);
                    bool ok = y.has_value() == expected;
                    if (ok && y) {
                        ++r.feasible;
                        ok = static_cast<int>(y->size()) == s && set_sum(*y) == t &&
                             std::is_sorted(y->begin(), y->end()) &&
                             std::adjacent_find(y->begin(), y->end()) == y->end() && y->front() >= lo &&
                             y->back() <= hi;
                    }
                    if (!ok && !r.first_failure) r.first_failure = std::array<long long, 4>{lo, hi, s, t};
                }
            }
            return r;
        },
        [](StSweep& total, const StSweep& part) {
            total.queries += part.queries;
            total.feasible += part.feasible;
            if (!total.first_failure) total.first_failure = part.first_failure;
        });
}

}  // namespace antimagic
