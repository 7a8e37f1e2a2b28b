// pair_subsets.cpp

#include "antimagic/pair_subsets.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "antimagic/error.hpp"

namespace antimagic {

int p_of(int k) {
    if (k < 2) throw Error(ErrorKind::invalid_parameters, "p(k) needs k >= 2");
    return (2 * k + 1) / 5;
}

PairFamily pair_family(int k) {
    PairFamily fam;
    fam.k = k;
    fam.p = p_of(k);
    const int p = fam.p;
    const int half = p / 2;
    const int even = (p % 2 == 0) ? 1 : 0;  // (1 + (-1)^p) / 2
    fam.alpha.reserve(static_cast<std::size_t>(p));
    fam.beta.reserve(static_cast<std::size_t>(p));
    for (int i = 1; i <= p; ++i) {
        if (i <= half) {
            fam.alpha.push_back(p - i);
            fam.beta.push_back(k - p + 2 * i);
        } else {
            fam.alpha.push_back(2 * p + even - i);
            fam.beta.push_back(k - 2 * p - even + 2 * i);
        }
    }
    return fam;
}

int min_alpha_index(const PairFamily& fam, int c) {
    if (c < 1 || c > fam.p) {
        throw Error(ErrorKind::invalid_parameters,
                    "c=" + std::to_string(c) + " outside [1, p=" + std::to_string(fam.p) + "]");
    }
    const auto first = fam.alpha.begin();
    return static_cast<int>(std::min_element(first, first + c) - first) + 1;
}

std::optional<LabelSet> find_st_subset(int lo, int hi, int s, long long t) {
    if (s < 1 || hi - lo + 1 < s) {
        throw Error(ErrorKind::invalid_parameters, "need 1 <= s <= hi - lo + 1");
    }
    const long long smallest = static_cast<long long>(s) * (2LL * lo + s - 1) / 2;
    const long long largest = static_cast<long long>(s) * (2LL * hi - s + 1) / 2;
    if (t < smallest || t > largest) return std::nullopt;

    LabelSet y(static_cast<std::size_t>(s));
    std::iota(y.begin(), y.end(), lo);
    long long sum = smallest;
    // y stays sorted: an element may rise only into a gap below its successor.
    while (sum < t) {
        int j = s - 1;
        while (j >= 0) {
            const int ceiling = (j == s - 1) ? hi : y[j + 1] - 1;
            if (y[j] < ceiling) break;
            --j;
        }
        if (j < 0) throw Error(ErrorKind::internal_consistency, "(s,t) search stalled below the maximum");
        // Jump as far as the gap and the remaining deficit allow; same end state as unit steps.
        const int ceiling = (j == s - 1) ? hi : y[j + 1] - 1;
        const long long step = std::min<long long>(ceiling - y[j], t - sum);
        y[j] += static_cast<int>(step);
        sum += step;
    }
    return y;
}

LabelSet slice_min(const LabelSet& set, int n) {
    if (n < 0 || n > static_cast<int>(set.size())) {
        throw Error(ErrorKind::invalid_parameters, "slice_min size exceeds the set");
    }
    return LabelSet(set.begin(), set.begin() + n);
}

LabelSet slice_max(const LabelSet& set, int n) {
    if (n < 0 || n > static_cast<int>(set.size())) {
        throw Error(ErrorKind::invalid_parameters, "slice_max size exceeds the set");
    }
    return LabelSet(set.end() - n, set.end());
}

long long set_sum(const LabelSet& set) { return std::accumulate(set.begin(), set.end(), 0LL); }

LabelSet set_minus(const LabelSet& from, const LabelSet& remove) {
    LabelSet sorted_remove = remove;
    std::sort(sorted_remove.begin(), sorted_remove.end());
    LabelSet out;
    std::set_difference(from.begin(), from.end(), sorted_remove.begin(), sorted_remove.end(),
                        std::back_inserter(out));
    return out;
}

LabelSet integer_range(int lo, int hi) {
    LabelSet out;
    if (hi >= lo) {
        out.resize(static_cast<std::size_t>(hi - lo + 1));
        std::iota(out.begin(), out.end(), lo);
    }
    return out;
}

}  // namespace antimagic
