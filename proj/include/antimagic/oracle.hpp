// antimagic/oracle.hpp - exhaustive search over labelings of small forests
//
// Edges are grouped into slots searched in order: internal edges one at a
// time, then each P3 as a pair, then the pendant edges of every other support
// vertex as one set. Labels inside a slot are increasing (leaves of a common
// neighbour are interchangeable) and consecutive P3 slots have increasing
// minimum labels (P3 components are interchangeable). A branch dies as soon as
// a vertex whose edges are all labeled repeats an earlier final sum.
//
// The parallel path splits on the assignments of the first slot; each work
// unit owns its search state and results merge by unit index, so the labeling
// it returns is the one the serial reference finds first.

#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "antimagic/forest.hpp"

namespace antimagic {

enum class Verdict { found, refuted, exhausted };

const char* to_string(Verdict v) noexcept;

enum class Execution { serial, parallel };

struct SearchOptions {
    std::optional<std::uint64_t> budget_nodes;
    std::optional<std::chrono::milliseconds> wall_budget;
    Execution execution = Execution::parallel;
    // Largest edge count searched without a budget; nullopt reads
    // ANTIMAGIC_EDGE_CAP and falls back to 14.
    std::optional<int> edge_cap;
};

struct SearchOutcome {
    Verdict verdict = Verdict::refuted;
    std::optional<Labeling> labeling;  // present iff found
    std::uint64_t nodes_explored = 0;  // labels placed without an immediate collision
    // search_11 only: rejected by the counting condition before any search.
    bool screened_out = false;
};

int default_edge_cap();

// Throws out_of_domain on degenerate forests, refuse_to_run when the edge
// count exceeds the cap and no budget is given.
SearchOutcome exhaustive_antimagic(const Forest& g, const SearchOptions& options = {});

// Searches for vertex sums exactly 1..n. Returns refuted with screened_out
// set when 2n + n(n-1) != 2m(m+1).
SearchOutcome search_11(const Forest& g, const SearchOptions& options = {});

struct ExhaustiveTau {
    std::optional<int> tau;  // nullopt stands for -infinity
    bool reached_limit = false;  // every c' up to the limit was found: tau >= limit
    std::vector<SearchOutcome> outcomes;  // index c'
};

// Largest c <= c_limit with base + c'P3 antimagic for every 0 <= c' <= c.
ExhaustiveTau exhaustive_tau(const Forest& base, int c_limit, const SearchOptions& options = {});

}  // namespace antimagic
