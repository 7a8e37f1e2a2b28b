// constructor.cpp

#include "antimagic/constructor.hpp"

#include <algorithm>

#include "antimagic/bounds.hpp"
#include "antimagic/error.hpp"

namespace antimagic {

namespace {

[[noreturn]] void inconsistent(int a, int b, int c, const std::string& why) {
    throw Error(ErrorKind::internal_consistency, "S(" + std::to_string(a) + "," + std::to_string(b) + ")+" +
                                                     std::to_string(c) + "P3: " + why);
}

void require_pair(int a, int b) {
    if (a < 1 || b < a) {
        throw Error(ErrorKind::invalid_parameters,
                    "need 1 <= a <= b (got a=" + std::to_string(a) + ", b=" + std::to_string(b) + ")");
    }
}

// Fills E_B with every label of [1,k] not used elsewhere and sorts all groups.
LabelPartition complete(int k, std::vector<LabelSet> p3, LabelSet internal, LabelSet a_side) {
    LabelPartition part;
    for (auto& g : p3) std::sort(g.begin(), g.end());
    std::sort(internal.begin(), internal.end());
    std::sort(a_side.begin(), a_side.end());
    LabelSet used = internal;
    used.insert(used.end(), a_side.begin(), a_side.end());
    for (const auto& g : p3) used.insert(used.end(), g.begin(), g.end());
    part.b_side = set_minus(integer_range(1, k), used);
    part.p3 = std::move(p3);
    part.internal = std::move(internal);
    part.a_side = std::move(a_side);
    return part;
}

LabelSet unused_labels(int k, const std::vector<LabelSet>& p3, const LabelSet& internal) {
    LabelSet used = internal;
    for (const auto& g : p3) used.insert(used.end(), g.begin(), g.end());
    return set_minus(integer_range(1, k), used);
}

std::vector<LabelSet> pairs_except(const PairFamily& fam, int count, int skip) {
    std::vector<LabelSet> p3;
    for (int i = 1; i <= count; ++i) {
        if (i != skip) p3.push_back({fam.alpha_at(i), fam.beta_at(i)});
        else p3.emplace_back();
    }
    return p3;
}

}  // namespace

std::string_view to_string(ConstructionCase tag) noexcept {
    switch (tag) {
        case ConstructionCase::c0: return "c0";
        case ConstructionCase::c1_2: return "c1_2";
        case ConstructionCase::c3_5: return "c3_5";
        case ConstructionCase::mid_a1: return "mid_a1";
        case ConstructionCase::mid_p_ge_c1: return "mid_p_ge_c1";
        case ConstructionCase::mid_cond1: return "mid_cond1";
        case ConstructionCase::mid_cond2: return "mid_cond2";
        case ConstructionCase::mid_cond3: return "mid_cond3";
        case ConstructionCase::high_W: return "high_W";
    }
    return "unknown";
}

LabelPartition construct_c0(int a, int b) {
    require_pair(a, b);
    const int m = a + b + 1;
    return complete(m, {}, {m}, integer_range(1, a));
}

LabelPartition construct_small(int a, int b, int c) {
    require_pair(a, b);
    const int k = a + b + 1 + 2 * c;
    if (c == 1) return complete(k, {{1, k - 1}}, {k}, integer_range(2, a + 1));
    if (c == 2) {
        LabelSet a_side{2};
        for (int l = 4; l <= a + 2; ++l) a_side.push_back(l);
        return complete(k, {{1, k - 1}, {3, k - 2}}, {k}, std::move(a_side));
    }
    throw Error(ErrorKind::invalid_parameters, "construct_small handles c in {1, 2}");
}

Construction construct_c3_5(int a, int b, int c) {
    require_pair(a, b);
    const int m = a + b + 1;
    const int k = m + 2 * c;
    if (c < 3 || c > 5) throw Error(ErrorKind::invalid_parameters, "construct_c3_5 handles c in {3, 4, 5}");
    if (m < 4) throw Error(ErrorKind::invalid_parameters, "construct_c3_5 needs m >= 4");

    Construction out;
    out.trace.case_tag = ConstructionCase::c3_5;
    if (c <= 4) {
        std::vector<LabelSet> p3{{1, k - 1}, {3, k - 2}, {5, k - 3}};
        if (c == 4) p3.push_back({7, k - 4});
        const LabelSet internal{k};
        LabelSet a_side = (a == 1) ? LabelSet{4} : slice_min(unused_labels(k, p3, internal), a);
        out.partition = complete(k, std::move(p3), internal, std::move(a_side));
        return out;
    }

    // c = 5: E_A starts with k-1, then labels 8..k-5 alternate between E_A and
    // E_B until E_A is full; the rest go to E_B.
    std::vector<LabelSet> p3{{1, 2}, {4, k - 3}, {7, k - 4}, {6, k - 2}, {5, k}};
    LabelSet a_side{k - 1};
    bool to_a = true;
    for (int l = 8; l <= k - 5 && static_cast<int>(a_side.size()) < a; ++l, to_a = !to_a) {
        if (to_a) a_side.push_back(l);
    }
    if (static_cast<int>(a_side.size()) != a) inconsistent(a, b, c, "too few labels to alternate into E_A");
    out.partition = complete(k, std::move(p3), {3}, std::move(a_side));

    auto& part = out.partition;
    if (set_sum(part.a_side) == set_sum(part.b_side)) {
        auto in_a = std::find(part.a_side.begin(), part.a_side.end(), 8);
        auto in_b = std::find(part.b_side.begin(), part.b_side.end(), 9);
        if (in_a == part.a_side.end() || in_b == part.b_side.end()) {
            inconsistent(a, b, c, "center sums collide but 8/9 cannot be exchanged");
        }
        *in_a = 9;
        *in_b = 8;
        std::sort(part.a_side.begin(), part.a_side.end());
        std::sort(part.b_side.begin(), part.b_side.end());
        out.trace.swap_applied = true;
    }
    return out;
}

Construction construct_mid(int a, int b, int c) {
    require_pair(a, b);
    const int m = a + b + 1;
    const int k = m + 2 * c;
    if (c < 6 || c > 2 * m + 1 || m < 5) {
        throw Error(ErrorKind::invalid_parameters, "construct_mid needs 6 <= c <= 2m+1 and m >= 5");
    }
    const PairFamily fam = pair_family(k);
    const int p = fam.p;
    if (p < c) inconsistent(a, b, c, "p(k) < c");

    Construction out;
    auto& trace = out.trace;

    if (a == 1) {
        const int i0 = min_alpha_index(fam, c);
        const int low = fam.alpha_at(i0);
        if (low < 3) inconsistent(a, b, c, "smallest alpha below 3");
        auto p3 = pairs_except(fam, c, i0);
        p3[i0 - 1] = {1, low - 1};
        out.partition = complete(k, std::move(p3), {low}, {fam.beta_at(i0)});
        trace.case_tag = ConstructionCase::mid_a1;
        trace.chosen_index = i0;
        trace.proposition_case = true;
        return out;
    }

    auto free_after = [&](int pairs) {
        LabelSet used;
        for (int i = 1; i <= pairs; ++i) {
            used.push_back(fam.alpha_at(i));
            used.push_back(fam.beta_at(i));
        }
        return set_minus(integer_range(4, k), used);
    };

    if (p >= c + 1) {
        const LabelSet x = free_after(c + 1);
        if (static_cast<int>(x.size()) != a + b - 4) inconsistent(a, b, c, "unexpected |X| with p >= c+1");
        auto p3 = pairs_except(fam, c - 1, 0);
        p3.push_back({1, 2});
        LabelSet a_side = slice_min(x, a - 2);
        a_side.push_back(fam.alpha_at(c));
        a_side.push_back(fam.beta_at(c));
        out.partition = complete(k, std::move(p3), {3}, std::move(a_side));
        trace.case_tag = ConstructionCase::mid_p_ge_c1;
        return out;
    }

    // p == c
    const LabelSet x = free_after(c);
    if (static_cast<int>(x.size()) != a + b - 2) inconsistent(a, b, c, "unexpected |X| with p = c");
    const int top = x.back();
    const LabelSet low_a2 = slice_min(x, a - 2);
    const LabelSet low_a1 = slice_min(x, a - 1);
    const long long v1 = 3 + top + set_sum(low_a2);
    const long long v2 = 3 + top + set_sum(low_a1);

    if (v1 <= k) {
        // v1 is a pair value; its partner joins E_A so that sum(E_A) + 3 = k + i_1.
        int i1 = 0;
        for (int i = 1; i <= c; ++i) {
            if (fam.alpha_at(i) == v1 || fam.beta_at(i) == v1) {
                i1 = i;
                break;
            }
        }
        if (i1 == 0) inconsistent(a, b, c, "condition (1) label is not a pair value");
        const long long partner = static_cast<long long>(k) + i1 - v1;
        if (partner != fam.alpha_at(i1) && partner != fam.beta_at(i1)) {
            inconsistent(a, b, c, "condition (1) replacement label is not in the pair");
        }
        auto p3 = pairs_except(fam, c, i1);
        p3[i1 - 1] = {1, 2};
        LabelSet a_side = low_a2;
        a_side.push_back(top);
        a_side.push_back(static_cast<int>(partner));
        out.partition = complete(k, std::move(p3), {3}, std::move(a_side));
        trace.case_tag = ConstructionCase::mid_cond1;
        trace.chosen_index = i1;
        trace.proposition_case = true;
        return out;
    }

    LabelSet a_side = low_a1;
    a_side.push_back(top);
    if (v2 <= static_cast<long long>(k) + c) {
        const int i2 = static_cast<int>(v2 - k);
        if (i2 < 1) inconsistent(a, b, c, "condition (2) sum not above k");
        auto p3 = pairs_except(fam, c, i2);
        p3[i2 - 1] = {1, 2};
        out.partition = complete(k, std::move(p3), {3}, std::move(a_side));
        trace.case_tag = ConstructionCase::mid_cond2;
        trace.chosen_index = i2;
        trace.proposition_case = true;
        return out;
    }

    auto p3 = pairs_except(fam, c - 1, 0);
    p3.push_back({1, 2});
    out.partition = complete(k, std::move(p3), {3}, std::move(a_side));
    trace.case_tag = ConstructionCase::mid_cond3;
    return out;
}

LabelSet high_range_free_labels(int m, int c) {
    LabelSet x;
    switch (c - 2 * m) {
        case 2: x = integer_range(1, m); x.insert(x.end(), {3 * m + 2, 3 * m + 3}); break;
        case 3: x = integer_range(1, m); x.insert(x.end(), {2 * m + 2, 3 * m + 4}); break;
        case 4: x = integer_range(1, m + 1); x.push_back(3 * m + 5); break;
        case 5: x = integer_range(1, m + 1); x.push_back(2 * m + 4); break;
        case 6: x = integer_range(1, m + 2); break;
        default: throw Error(ErrorKind::invalid_parameters, "c must lie in [2m+2, 2m+6]");
    }
    return x;
}

WChoice choose_W(int a, int m, int c) {
    const int offset = c - 2 * m;
    const int k = m + 2 * c;
    const long long target = static_cast<long long>(k) + c;

    // A tier builds W as an (s, t)-subset of Z plus fixed large labels from X.
    struct Tier {
        int a_lo, a_hi, s;
        long long t;
        LabelSet extra;
    };
    int min_a = 0, min_m = 0, z_hi = 0;
    std::vector<Tier> tiers;
    switch (offset) {
        case 2:
            min_a = 3, min_m = 16, z_hi = m;
            tiers = {{3, 4, a - 1, m + 1LL, {3 * m + 2, 3 * m + 3}}, {5, 9, a, 4LL * m + 4, {3 * m + 2}}};
            break;
        case 3:
            min_a = 4, min_m = 19, z_hi = m;
            tiers = {{4, 7, a - 1, 2LL * m + 3, {2 * m + 2, 3 * m + 4}}, {8, 12, a, 5LL * m + 7, {2 * m + 2}}};
            break;
        case 4:
            min_a = 5, min_m = 21, z_hi = m + 1;
            tiers = {{5, 11, a, 4LL * m + 7, {3 * m + 5}}};
            break;
        case 5:
            min_a = 6, min_m = 24, z_hi = m + 1;
            tiers = {{6, 13, a, 5LL * m + 11, {2 * m + 4}}};
            break;
        case 6:
            min_a = 7, min_m = (a == 7) ? 30 : 26, z_hi = m + 2;
            break;
        default:
            throw Error(ErrorKind::invalid_parameters, "choose_W needs 2m+2 <= c <= 2m+6");
    }
    if (a < min_a || m < min_m || a > (m - 1) / 2) {
        throw Error(ErrorKind::invalid_parameters, "choose_W preconditions fail for a=" + std::to_string(a) +
                                                       ", m=" + std::to_string(m) + ", c=" + std::to_string(c));
    }

    const std::string where = "c=2m+" + std::to_string(offset) + ", ";
    for (const auto& tier : tiers) {
        if (a < tier.a_lo || a > tier.a_hi) continue;
        auto y = find_st_subset(3, z_hi, tier.s, tier.t);
        if (!y) {
            throw Error(ErrorKind::internal_consistency, where + "no (s,t)-set for tier " +
                                                             std::to_string(tier.a_lo) + ".." +
                                                             std::to_string(tier.a_hi));
        }
        WChoice out;
        out.W = *y;
        out.W.insert(out.W.end(), tier.extra.begin(), tier.extra.end());
        std::sort(out.W.begin(), out.W.end());
        out.hits_target = set_sum(out.W) == target;
        out.rule = where + std::to_string(tier.a_lo) + "<=a<=" + std::to_string(tier.a_hi) + ": (" +
                   std::to_string(tier.s) + "," + std::to_string(tier.t) + ")-set plus fixed labels";
        if (!out.hits_target) throw Error(ErrorKind::internal_consistency, where + "tier W misses k+c");
        return out;
    }

    WChoice out;
    if (auto y = find_st_subset(3, z_hi, a + 1, target)) {
        out.W = *y;
        out.hits_target = true;
        out.rule = where + "(a+1, k+c)-set in Z";
    } else {
        out.W = integer_range(3, 3 + a);
        if (set_sum(out.W) <= target) {
            throw Error(ErrorKind::internal_consistency, where + "k+c exceeds every (a+1)-subset of Z");
        }
        out.rule = where + "a+1 smallest of Z";
    }
    return out;
}

Construction construct_high(int a, int b, int c) {
    require_pair(a, b);
    const int m = a + b + 1;
    const int k = m + 2 * c;
    if (c < 2 * m + 2 || c > 2 * m + 6) throw Error(ErrorKind::invalid_parameters, "construct_high needs 2m+2 <= c <= 2m+6");

    const PairFamily fam = pair_family(k);
    if (fam.p != c - 1) inconsistent(a, b, c, "p(k) != c-1");
    LabelSet used;
    for (int i = 1; i < c; ++i) {
        used.push_back(fam.alpha_at(i));
        used.push_back(fam.beta_at(i));
    }
    const LabelSet x = set_minus(integer_range(1, k), used);
    if (x != high_range_free_labels(m, c)) inconsistent(a, b, c, "free labels differ from the closed form");

    WChoice w = choose_W(a, m, c);
    if (!std::includes(x.begin(), x.end(), w.W.begin(), w.W.end())) inconsistent(a, b, c, "W is not inside X");
    const int low = w.W.front();
    if (low < 3 || std::binary_search(w.W.begin(), w.W.end(), low - 1)) inconsistent(a, b, c, "min(W)-1 unusable");

    auto p3 = pairs_except(fam, c - 1, 0);
    p3.push_back({1, low - 1});
    LabelSet a_side(w.W.begin() + 1, w.W.end());

    Construction out;
    out.partition = complete(k, std::move(p3), {low}, std::move(a_side));
    out.trace.case_tag = ConstructionCase::high_W;
    out.trace.proposition_case = w.hits_target;
    out.trace.W = w.W;
    out.trace.W_rule = std::move(w.rule);
    return out;
}

Construction construct(int a, int b, int c) {
    require_pair(a, b);
    if (c < 0) throw Error(ErrorKind::invalid_parameters, "c must be non-negative");
    const TauResult tau = tau_double_star(a, b);
    if (c > tau.value) {
        throw Error(ErrorKind::out_of_range,
                    "c=" + std::to_string(c) + " exceeds tau(S(" + std::to_string(a) + "," + std::to_string(b) +
                        ")) = " + std::to_string(tau.value) + " (binding bound " + case_name(tau.attained_case) +
                        " = " + std::to_string(tau.attained_case == 0 ? tau.tau0 : tau.tau_cap) + ")");
    }
    const int m = a + b + 1;
    Construction out;
    if (c == 0) {
        out.partition = construct_c0(a, b);
        out.trace.case_tag = ConstructionCase::c0;
    } else if (c <= 2) {
        out.partition = construct_small(a, b, c);
        out.trace.case_tag = ConstructionCase::c1_2;
    } else if (c <= 5) {
        out = construct_c3_5(a, b, c);
    } else if (c <= 2 * m + 1) {
        out = construct_mid(a, b, c);
    } else {
        out = construct_high(a, b, c);
    }
    validate_partition(DoubleStarInstance(a, b, c), out.partition);
    return out;
}

}  // namespace antimagic
