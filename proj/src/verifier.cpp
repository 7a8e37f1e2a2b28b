// verifier.cpp

#include "antimagic/verifier.hpp"

#include <algorithm>
#include <numeric>

#include "antimagic/bounds.hpp"
#include "antimagic/error.hpp"

namespace antimagic {

VerificationReport is_antimagic(const Forest& g, const Labeling& f) {
    const auto by_vertex = vertex_sums(g, f);

    const std::int64_t m = g.edge_count();
    const std::int64_t total = std::accumulate(by_vertex.begin(), by_vertex.end(), std::int64_t{0});
    if (total != m * (m + 1)) {
        throw Error(ErrorKind::internal_consistency, "vertex sums do not double-count the labels");
    }

    std::vector<int> order(by_vertex.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        return by_vertex[x] != by_vertex[y] ? by_vertex[x] < by_vertex[y] : x < y;
    });

    VerificationReport report;
    report.sums.reserve(order.size());
    for (const int v : order) report.sums.push_back(by_vertex[v]);
    for (std::size_t j = 1; j < order.size(); ++j) {
        if (by_vertex[order[j]] == by_vertex[order[j - 1]]) {
            report.duplicate_witness = DuplicateWitness{order[j - 1], order[j], by_vertex[order[j]]};
            break;
        }
    }
    report.antimagic = !report.duplicate_witness.has_value();
    if (report.antimagic) report.ad_progression = detect_ad(report.sums);
    return report;
}

std::optional<Progression> detect_ad(const std::vector<std::int64_t>& sorted_sums) {
    if (sorted_sums.size() < 2) return std::nullopt;
    const std::int64_t d = sorted_sums[1] - sorted_sums[0];
    if (d <= 0) return std::nullopt;
    for (std::size_t j = 2; j < sorted_sums.size(); ++j) {
        if (sorted_sums[j] - sorted_sums[j - 1] != d) return std::nullopt;
    }
    return Progression{sorted_sums[0], d};
}

std::optional<Progression> detect_ad(const Forest& g, const Labeling& f) {
    auto sums = vertex_sums(g, f);
    std::sort(sums.begin(), sums.end());
    return detect_ad(sums);
}

bool ad_feasible(std::int64_t n, std::int64_t m, std::int64_t a, std::int64_t d) {
    const __int128 lhs = static_cast<__int128>(2) * a * n + static_cast<__int128>(n) * (n - 1) * d;
    const __int128 rhs = static_cast<__int128>(2) * m * (m + 1);
    return lhs == rhs;
}

bool check_proposition_hypothesis(const DoubleStarInstance& inst, const LabelPartition& part) {
    validate_partition(inst, part);
    const int c = inst.c();
    if (c < 1 || c > tau_zero(inst.m())) return false;

    const Labeling f = partition_to_labeling(inst, part);
    const auto sums = vertex_sums(inst.forest(), f);
    std::vector<std::int64_t> centers;
    for (int i = 1; i <= c + 1; ++i) centers.push_back(sums[inst.center(i)]);
    std::sort(centers.begin(), centers.end());

    std::vector<std::int64_t> expected{part.internal.front()};
    for (int j = 1; j <= c; ++j) expected.push_back(inst.k() + j);
    std::sort(expected.begin(), expected.end());
    return centers == expected;
}

}  // namespace antimagic
