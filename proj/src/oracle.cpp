// oracle.cpp

#include "antimagic/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <cstdlib>
#include <string>

#include "antimagic/error.hpp"
#include "antimagic/verifier.hpp"

namespace antimagic {

const char* to_string(Verdict v) noexcept {
    switch (v) {
        case Verdict::found: return "found";
        case Verdict::refuted: return "refuted";
        case Verdict::exhausted: return "exhausted";
    }
    return "unknown";
}

int default_edge_cap() {
    if (const char* env = std::getenv("ANTIMAGIC_EDGE_CAP")) {
        try {
            const int cap = std::stoi(env);
            if (cap > 0) return cap;
        } catch (const std::exception&) {
        }
    }
    return 14;
}

namespace {

constexpr int max_searchable_edges = 63;  // labels live in a 64-bit mask

struct Slot {
    std::vector<int> edges;
    int prev_p3 = -1;  // previous P3 slot whose minimum label must be smaller
};

struct Plan {
    const Forest* g = nullptr;
    int m = 0;
    int n = 0;
    bool one_one = false;
    std::vector<Slot> slots;
};

Plan make_plan(const Forest& g, bool one_one) {
    Plan plan;
    plan.g = &g;
    plan.m = g.edge_count();
    plan.n = g.vertex_count();
    plan.one_one = one_one;

    std::vector<Slot> internal, p3, pendant;
    std::vector<std::vector<int>> leaves_at(static_cast<std::size_t>(g.vertex_count()));
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto [u, v] = g.edges()[e];
        if (g.degree(u) >= 2 && g.degree(v) >= 2) {
            internal.push_back({{e}});
        } else {
            leaves_at[g.degree(u) == 1 ? v : u].push_back(e);
        }
    }
    for (const auto& comp : g.components()) {
        for (const int v : comp.vertices) {
            if (leaves_at[v].empty()) continue;
            (comp.vertices.size() == 3 ? p3 : pendant).push_back({leaves_at[v]});
        }
    }
    plan.slots = std::move(internal);
    const int first_p3 = static_cast<int>(plan.slots.size());
    for (std::size_t j = 0; j < p3.size(); ++j) {
        p3[j].prev_p3 = j == 0 ? -1 : first_p3 + static_cast<int>(j) - 1;
        plan.slots.push_back(std::move(p3[j]));
    }
    for (auto& s : pendant) plan.slots.push_back(std::move(s));
    return plan;
}

struct Shared {
    std::optional<std::uint64_t> budget_nodes;
    std::optional<std::chrono::steady_clock::time_point> deadline;
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> out_of_budget{false};
    std::atomic<int> best_unit{INT_MAX};
};

class Searcher {
public:
    Searcher(const Plan& plan, Shared& shared, int unit)
        : plan_(plan),
          shared_(shared),
          unit_(unit),
          sums_(static_cast<std::size_t>(plan.n), 0),
          remaining_(static_cast<std::size_t>(plan.n), 0),
          taken_(static_cast<std::size_t>(plan.m) * (plan.m + 1) / 2 + 2, 0),
          labels_(static_cast<std::size_t>(plan.m), 0),
          slot_min_(plan.slots.size(), 0) {
        for (int v = 0; v < plan.n; ++v) remaining_[v] = plan.g->degree(v);
    }

    // Full depth-first search from the given slot position.
    bool run(int slot, int pos, int next_min) { return dfs(slot, pos, next_min); }

    // Collects every complete assignment of slot 0, without descending further.
    void enumerate_first_slot(int pos, int next_min, std::vector<std::vector<int>>& out) {
        const Slot& slot = plan_.slots.front();
        if (pos == static_cast<int>(slot.edges.size())) {
            std::vector<int> combo;
            for (const int e : slot.edges) combo.push_back(labels_[e]);
            out.push_back(std::move(combo));
            return;
        }
        const int need = static_cast<int>(slot.edges.size()) - pos;
        for (int l = next_min; l <= plan_.m - need + 1; ++l) {
            if (used_ >> l & 1) continue;
            const int e = slot.edges[pos];
            if (!place(e, l)) continue;
            count_node();
            if (pos == 0) slot_min_[0] = l;
            enumerate_first_slot(pos + 1, l + 1, out);
            unplace(e, l);
        }
    }

    // Replays a slot-0 assignment produced by enumerate_first_slot.
    void apply_first_slot(const std::vector<int>& combo) {
        const Slot& slot = plan_.slots.front();
        for (std::size_t j = 0; j < combo.size(); ++j) {
            if (!place(slot.edges[j], combo[j])) {
                throw Error(ErrorKind::internal_consistency, "replayed work unit collides");
            }
        }
        slot_min_[0] = combo.front();
    }

    int start_label(int slot) const {
        const int prev = plan_.slots[slot].prev_p3;
        return prev >= 0 ? slot_min_[prev] + 1 : 1;
    }

    std::uint64_t local_nodes() const noexcept { return nodes_; }
    bool stopped() const noexcept { return stopped_; }
    const std::vector<int>& labels() const noexcept { return labels_; }

    void flush_nodes() {
        shared_.nodes.fetch_add(nodes_ - flushed_, std::memory_order_relaxed);
        flushed_ = nodes_;
    }

private:
    bool dfs(int s, int pos, int next_min) {
        if (s == static_cast<int>(plan_.slots.size())) return true;
        const Slot& slot = plan_.slots[s];
        if (pos == static_cast<int>(slot.edges.size())) {
            return s + 1 == static_cast<int>(plan_.slots.size()) || dfs(s + 1, 0, start_label(s + 1));
        }
        const int need = static_cast<int>(slot.edges.size()) - pos;
        const int e = slot.edges[pos];
        for (int l = next_min; l <= plan_.m - need + 1; ++l) {
            if (used_ >> l & 1) continue;
            if (should_stop()) return false;
            if (!place(e, l)) continue;
            count_node();
            if (pos == 0) slot_min_[s] = l;
            if (dfs(s, pos + 1, l + 1)) return true;
            unplace(e, l);
        }
        return false;
    }

    bool place(int e, int l) {
        const auto [u, v] = plan_.g->edges()[e];
        sums_[u] += l;
        sums_[v] += l;
        --remaining_[u];
        --remaining_[v];
        bool ok = !plan_.one_one || (sums_[u] <= plan_.n && sums_[v] <= plan_.n);
        bool took_u = false;
        if (ok && remaining_[u] == 0) {
            if (taken_[sums_[u]]) ok = false;
            else taken_[sums_[u]] = took_u = true;
        }
        if (ok && remaining_[v] == 0) {
            if (taken_[sums_[v]]) ok = false;
            else taken_[sums_[v]] = true;
        }
        if (!ok) {
            if (took_u) taken_[sums_[u]] = false;
            sums_[u] -= l;
            sums_[v] -= l;
            ++remaining_[u];
            ++remaining_[v];
            return false;
        }
        used_ |= std::uint64_t{1} << l;
        labels_[e] = l;
        return true;
    }

    void unplace(int e, int l) {
        const auto [u, v] = plan_.g->edges()[e];
        if (remaining_[u] == 0) taken_[sums_[u]] = false;
        if (remaining_[v] == 0) taken_[sums_[v]] = false;
        sums_[u] -= l;
        sums_[v] -= l;
        ++remaining_[u];
        ++remaining_[v];
        used_ &= ~(std::uint64_t{1} << l);
        labels_[e] = 0;
    }

    void count_node() {
        ++nodes_;
        if ((nodes_ & 63) == 0) flush_nodes();
    }

    bool should_stop() {
        if (stopped_) return true;
        if (shared_.best_unit.load(std::memory_order_relaxed) < unit_ ||
            shared_.out_of_budget.load(std::memory_order_relaxed)) {
            stopped_ = true;
            return true;
        }
        if (shared_.budget_nodes &&
            shared_.nodes.load(std::memory_order_relaxed) + (nodes_ - flushed_) >= *shared_.budget_nodes) {
            shared_.out_of_budget = true;
            stopped_ = true;
            return true;
        }
        if (shared_.deadline && (nodes_ & 4095) == 0 && std::chrono::steady_clock::now() > *shared_.deadline) {
            shared_.out_of_budget = true;
            stopped_ = true;
            return true;
        }
        return false;
    }

    const Plan& plan_;
    Shared& shared_;
    int unit_;
    std::vector<std::int64_t> sums_;
    std::vector<int> remaining_;
    std::vector<char> taken_;
    std::vector<int> labels_;
    std::vector<int> slot_min_;
    std::uint64_t used_ = 0;
    std::uint64_t nodes_ = 0;
    std::uint64_t flushed_ = 0;
    bool stopped_ = false;
};

void check_searchable(const Forest& g, const SearchOptions& options) {
    if (g.has_degenerate_component() || g.edge_count() == 0) {
        throw Error(ErrorKind::out_of_domain, "search needs every component to have at least two edges");
    }
    if (g.edge_count() > max_searchable_edges) {
        throw Error(ErrorKind::refuse_to_run, "search supports at most " + std::to_string(max_searchable_edges) + " edges");
    }
    const int cap = options.edge_cap.value_or(default_edge_cap());
    if (g.edge_count() > cap && !options.budget_nodes && !options.wall_budget) {
        throw Error(ErrorKind::refuse_to_run, std::to_string(g.edge_count()) + " edges exceeds the cap of " +
                                                  std::to_string(cap) + " without a budget");
    }
}

SearchOutcome finish(const Forest& g, Shared& shared, std::optional<std::vector<int>> labels) {
    SearchOutcome out;
    out.nodes_explored = shared.nodes.load();
    if (labels) {
        out.verdict = Verdict::found;
        out.labeling = Labeling(std::move(*labels));
        if (!is_antimagic(g, *out.labeling).antimagic) {
            throw Error(ErrorKind::internal_consistency, "search returned a labeling with repeated sums");
        }
    } else {
        out.verdict = shared.out_of_budget ? Verdict::exhausted : Verdict::refuted;
    }
    return out;
}

SearchOutcome run_search(const Forest& g, bool one_one, const SearchOptions& options) {
    check_searchable(g, options);
    const Plan plan = make_plan(g, one_one);
    Shared shared;
    shared.budget_nodes = options.budget_nodes;
    if (options.wall_budget) shared.deadline = std::chrono::steady_clock::now() + *options.wall_budget;

    if (options.execution == Execution::serial) {
        Searcher searcher(plan, shared, 0);
        const bool found = searcher.run(0, 0, 1);
        searcher.flush_nodes();
        return finish(g, shared, found ? std::optional(searcher.labels()) : std::nullopt);
    }

    std::vector<std::vector<int>> units;
    {
        Searcher root(plan, shared, 0);
        root.enumerate_first_slot(0, 1, units);
        root.flush_nodes();
    }
    const int unit_count = static_cast<int>(units.size());
    std::vector<std::optional<std::vector<int>>> results(units.size());

#pragma omp parallel for schedule(dynamic, 1)
    for (int i = 0; i < unit_count; ++i) {
        if (shared.best_unit.load() < i || shared.out_of_budget.load()) continue;
        Searcher searcher(plan, shared, i);
        searcher.apply_first_slot(units[i]);
        const int next_start = plan.slots.size() > 1 ? searcher.start_label(1) : 1;
        if (searcher.run(1, 0, next_start)) {
            results[i] = searcher.labels();
            int expected = shared.best_unit.load();
            while (i < expected && !shared.best_unit.compare_exchange_weak(expected, i)) {
            }
        }
        searcher.flush_nodes();
    }

    for (auto& r : results) {
        if (r) return finish(g, shared, std::move(r));
    }
    return finish(g, shared, std::nullopt);
}

}  // namespace

SearchOutcome exhaustive_antimagic(const Forest& g, const SearchOptions& options) {
    return run_search(g, false, options);
}

SearchOutcome search_11(const Forest& g, const SearchOptions& options) {
    if (!ad_feasible(g.vertex_count(), g.edge_count(), 1, 1)) {
        SearchOutcome out;
        out.verdict = Verdict::refuted;
        out.screened_out = true;
        return out;
    }
    SearchOutcome out = run_search(g, true, options);
    if (out.labeling) {
        const auto ad = detect_ad(g, *out.labeling);
        if (!ad || ad->initial != 1 || ad->difference != 1) {
            throw Error(ErrorKind::internal_consistency, "(1,1) search returned sums other than 1..n");
        }
    }
    return out;
}

ExhaustiveTau exhaustive_tau(const Forest& base, int c_limit, const SearchOptions& options) {
    if (c_limit < 0) throw Error(ErrorKind::invalid_parameters, "c_limit must be non-negative");
    const int cap = options.edge_cap.value_or(default_edge_cap());
    if (base.edge_count() + 2 * c_limit > cap) {
        throw Error(ErrorKind::refuse_to_run, "base + " + std::to_string(c_limit) + "P3 has " +
                                                  std::to_string(base.edge_count() + 2 * c_limit) +
                                                  " edges, over the cap of " + std::to_string(cap));
    }
    ExhaustiveTau out;
    const Forest p3 = make_path(3);
    Forest g = base;
    for (int c = 0; c <= c_limit; ++c) {
        if (c > 0) g = g + p3;
        out.outcomes.push_back(exhaustive_antimagic(g, options));
        const Verdict v = out.outcomes.back().verdict;
        if (v == Verdict::exhausted) {
            throw Error(ErrorKind::refuse_to_run, "budget ran out at c=" + std::to_string(c));
        }
        if (v == Verdict::refuted) {
            if (c > 0) out.tau = c - 1;
            return out;
        }
    }
    out.tau = c_limit;
    out.reached_limit = true;
    return out;
}

}  // namespace antimagic
