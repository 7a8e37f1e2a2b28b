// antimagic/pair_subsets.hpp - label pairs with prescribed sums, (s,t)-sets
//
// Sets are sorted vectors of distinct integers throughout.

#pragma once

#include <optional>
#include <vector>

namespace antimagic {

using LabelSet = std::vector<int>;

// p(k) = floor((2k+1)/5) pairs (alpha_i, beta_i) drawn from [1,k], all 2p
// values distinct, alpha_i + beta_i = k + i. Index i is 1-based in accessors.
struct PairFamily {
    int k = 0;
    int p = 0;
    std::vector<int> alpha;  // alpha[i-1] = alpha_i
    std::vector<int> beta;

    int alpha_at(int i) const { return alpha.at(static_cast<std::size_t>(i - 1)); }
    int beta_at(int i) const { return beta.at(static_cast<std::size_t>(i - 1)); }
};

int p_of(int k);

PairFamily pair_family(int k);

// Index i_0 in [1,c] of the smallest alpha among the first c pairs; the
// smallest such index on ties.
int min_alpha_index(const PairFamily& fam, int c);

// An s-subset of [lo,hi] with sum t, or nullopt when t lies outside
// [sum of the s smallest, sum of the s largest]. Starts from the s smallest
// values and repeatedly raises the largest element that can move up by one
// without leaving the range or colliding, until the sum reaches t.
std::optional<LabelSet> find_st_subset(int lo, int hi, int s, long long t);

LabelSet slice_min(const LabelSet& set, int n);
LabelSet slice_max(const LabelSet& set, int n);

long long set_sum(const LabelSet& set);

// Sorted set difference.
LabelSet set_minus(const LabelSet& from, const LabelSet& remove);

LabelSet integer_range(int lo, int hi);

}  // namespace antimagic
