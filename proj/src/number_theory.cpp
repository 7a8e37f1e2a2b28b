// number_theory.cpp

#include "antimagic/number_theory.hpp"

#include <algorithm>
#include <functional>
#include <limits>

#include "antimagic/bounds.hpp"
#include "antimagic/error.hpp"
#include "antimagic/tree_canon.hpp"

namespace antimagic {

bool satisfies_pell(const PellSolution& s) {
    const __int128 x = s.x();
    const __int128 y = s.y();
    return s.n > 0 && s.m > 0 && x * x - 2 * y * y == -1;
}

std::vector<PellSolution> pell_solutions(std::int64_t max_n) {
    if (max_n < 3) throw Error(ErrorKind::invalid_parameters, "max_n must be at least 3");
    std::vector<PellSolution> out;
    // (x, y) = (1, 1) is the fundamental solution; it corresponds to n = 0.
    __int128 x = 1;
    __int128 y = 1;
    constexpr __int128 limit = std::numeric_limits<std::int64_t>::max() / 8;
    while (true) {
        const __int128 nx = 3 * x + 4 * y;
        const __int128 ny = 2 * x + 3 * y;
        x = nx;
        y = ny;
        if (x > limit) break;
        const PellSolution s{static_cast<std::int64_t>((x - 1) / 2), static_cast<std::int64_t>((y - 1) / 2)};
        if (s.n > max_n) break;
        if (!satisfies_pell(s)) {
            throw Error(ErrorKind::internal_consistency, "recurrence produced a non-solution at n=" + std::to_string(s.n));
        }
        out.push_back(s);
    }
    return out;
}

namespace {

// Nonincreasing partitions of n into exactly parts parts, each at least 3.
void partitions(int n, int parts, int max_part, std::vector<int>& current, std::vector<std::vector<int>>& out) {
    if (parts == 0) {
        if (n == 0) out.push_back(current);
        return;
    }
    for (int p = std::min(max_part, n - 3 * (parts - 1)); p >= 3; --p) {
        if (p * parts < n) break;
        current.push_back(p);
        partitions(n - p, parts - 1, p, current, out);
        current.pop_back();
    }
}

// Multisets of size r over [0, count), as nondecreasing index vectors.
std::vector<std::vector<int>> multisets(int count, int r) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int from) {
        if (static_cast<int>(cur.size()) == r) {
            out.push_back(cur);
            return;
        }
        for (int j = from; j < count; ++j) {
            cur.push_back(j);
            rec(j);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

std::vector<Forest> forests_for_partition(const std::vector<int>& parts,
                                          const std::vector<std::vector<Forest>>& trees) {
    // Group equal part sizes; each group contributes a multiset of trees.
    std::vector<std::pair<int, int>> groups;
    for (const int p : parts) {
        if (!groups.empty() && groups.back().first == p) {
            ++groups.back().second;
        } else {
            groups.emplace_back(p, 1);
        }
    }
    std::vector<std::vector<std::vector<int>>> choices;
    for (const auto& [size, r] : groups) choices.push_back(multisets(static_cast<int>(trees[size].size()), r));

    std::vector<Forest> out;
    std::vector<std::size_t> pick(groups.size(), 0);
    while (true) {
        std::optional<Forest> acc;
        for (std::size_t gi = 0; gi < groups.size(); ++gi) {
            for (const int t : choices[gi][pick[gi]]) {
                const Forest& tree = trees[groups[gi].first][t];
                acc = acc ? *acc + tree : tree;
            }
        }
        out.push_back(std::move(*acc));
        std::size_t gi = groups.size();
        while (gi > 0) {
            --gi;
            if (++pick[gi] < choices[gi].size()) break;
            pick[gi] = 0;
            if (gi == 0) return out;
        }
        if (groups.empty()) return out;
    }
}

}  // namespace

std::vector<Forest> census_shapes(int n, int m) {
    if (n < 1 || m < 0) throw Error(ErrorKind::invalid_parameters, "n and m must be positive");
    if (m >= n) throw Error(ErrorKind::out_of_domain, "m >= n is not a forest regime");
    const int c = n - m;
    std::vector<std::vector<int>> parts;
    std::vector<int> current;
    partitions(n, c, n, current, parts);
    if (parts.empty()) return {};

    const int largest = parts.front().front();
    std::vector<std::vector<Forest>> trees(static_cast<std::size_t>(largest) + 1);
    for (int s = 3; s <= largest; ++s) trees[s] = unlabeled_trees(s);

    std::vector<std::vector<Forest>> per_partition(parts.size());
    const int count = static_cast<int>(parts.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (int i = 0; i < count; ++i) per_partition[i] = forests_for_partition(parts[i], trees);

    std::vector<Forest> out;
    for (auto& batch : per_partition) {
        for (auto& f : batch) out.push_back(std::move(f));
    }
    return out;
}

bool screen_density(std::int64_t n, std::int64_t m) {
    if (n < 3) throw Error(ErrorKind::invalid_parameters, "n must be at least 3");
    return 4 * m >= 3 * n;
}

DoubleStarPellScreen screen_double_star_pell(const PellSolution& s) {
    if (!satisfies_pell(s)) throw Error(ErrorKind::invalid_parameters, "not a solution of the Pell equation");
    DoubleStarPellScreen r;
    // n - m counts components: the double star plus c copies of P3.
    r.c = s.n - s.m - 1;
    r.m_ds = s.m - 2 * r.c;
    if (r.c < 0 || r.m_ds < 3) {
        r.reason = "no double star S(a,b) with a >= 1 has " + std::to_string(r.m_ds) + " edges";
        return r;
    }
    r.has_candidate = true;
    r.cap = 2 * r.m_ds + 6;
    r.feasible = r.c <= r.cap;
    if (!r.feasible) {
        r.reason = std::to_string(r.c) + " > " + std::to_string(r.cap) + " = 2|E(S(a,b))| + 6";
        return r;
    }
    for (std::int64_t a = 1; 2 * a <= r.m_ds - 1; ++a) {
        const auto b = r.m_ds - 1 - a;
        if (tau_double_star(static_cast<int>(a), static_cast<int>(b)).value >= r.c) r.witness_a.push_back(static_cast<int>(a));
    }
    r.reason = std::to_string(r.c) + " <= " + std::to_string(r.cap) + " = 2|E(S(a,b))| + 6";
    return r;
}

}  // namespace antimagic
