// cli.cpp

#include "antimagic/cli.hpp"

#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "antimagic/bounds.hpp"
#include "antimagic/constructor.hpp"
#include "antimagic/error.hpp"
#include "antimagic/figure2.hpp"
#include "antimagic/io.hpp"
#include "antimagic/number_theory.hpp"
#include "antimagic/oracle.hpp"
#include "antimagic/tree_canon.hpp"
#include "antimagic/verifier.hpp"

namespace antimagic::cli {

namespace {

using nlohmann::json;

std::string join(const std::vector<int>& xs) {
    std::string out;
    for (std::size_t j = 0; j < xs.size(); ++j) out += (j ? "," : "") + std::to_string(xs[j]);
    return out;
}

std::string join(const std::vector<std::int64_t>& xs) {
    std::string out;
    for (std::size_t j = 0; j < xs.size(); ++j) out += (j ? " " : "") + std::to_string(xs[j]);
    return out;
}

json null_or(const std::optional<std::int64_t>& v) { return v ? json(*v) : json(nullptr); }

CommandOutcome emit(bool as_json, const json& doc, const std::string& text, int code = exit_ok) {
    return {code, as_json ? doc.dump(1) + "\n" : text};
}

int code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::out_of_range:
        case ErrorKind::out_of_domain:
        case ErrorKind::refuse_to_run:
            return exit_refused;
        case ErrorKind::invalid_labeling:
        case ErrorKind::internal_consistency:
            return exit_verify_failed;
        default:
            return exit_usage;
    }
}

// ---- tau ----

struct TauArgs {
    int a = 0;
    int b = 0;
};

CommandOutcome cmd_tau(const TauArgs& args, bool as_json) {
    const TauResult t = tau_double_star(args.a, args.b);
    const BoundReport bounds = lemma_upper_bounds(args.a, args.b);
    const int m = args.a + args.b + 1;
    json doc = {{"a", args.a},
                {"b", args.b},
                {"m", m},
                {"tau", t.value},
                {"case", case_name(t.attained_case)},
                {"tau0", t.tau0},
                {"cap", t.tau_cap},
                {"cap_index", t.cap_index},
                {"beta", bounds.beta},
                {"lemma_upb2", null_or(bounds.lemma_upb2)},
                {"lemma_upb3", null_or(bounds.lemma_upb3)}};
    std::ostringstream text;
    text << "tau(S(" << args.a << "," << args.b << ")) = " << t.value << " [" << case_name(t.attained_case) << "]\n"
         << "m = " << m << "\ntau_0 = " << t.tau0 << "\ncap = " << t.tau_cap << " [" << case_name(t.cap_index)
         << "]\nbeta = " << bounds.beta << "\n";
    if (bounds.lemma_upb2) text << "upper bound (a = 1) = " << *bounds.lemma_upb2 << "\n";
    if (bounds.lemma_upb3) text << "upper bound (2 <= a <= 7) = " << *bounds.lemma_upb3 << "\n";
    return emit(as_json, doc, text.str());
}

// ---- construct ----

struct ConstructArgs {
    int a = 0;
    int b = 0;
    int c = 0;
    std::string format = "text";
    bool trace = false;
};

json trace_json(const ConstructionTrace& t) {
    return {{"case", std::string(to_string(t.case_tag))},
            {"chosen_index", t.chosen_index ? json(*t.chosen_index) : json(nullptr)},
            {"W", t.W ? json(*t.W) : json(nullptr)},
            {"W_rule", t.W_rule},
            {"swap_applied", t.swap_applied},
            {"proposition_case", t.proposition_case}};
}

std::string graph_name(int a, int b, int c) {
    std::string name = "S(" + std::to_string(a) + "," + std::to_string(b) + ")";
    if (c == 1) name += "+P3";
    if (c > 1) name += "+" + std::to_string(c) + "*P3";
    return name;
}

CommandOutcome cmd_construct(const ConstructArgs& args, bool as_json) {
    const Construction built = construct(args.a, args.b, args.c);
    const DoubleStarInstance inst(args.a, args.b, args.c);
    const Labeling f = partition_to_labeling(inst, built.partition);
    const std::string format = as_json ? "json" : args.format;

    if (format == "json") {
        json doc = labeling_to_json(inst.forest(), f);
        doc["graph"] = graph_name(args.a, args.b, args.c);
        if (args.trace) doc["trace"] = trace_json(built.trace);
        return {exit_ok, doc.dump() + "\n"};
    }
    if (format == "dot") return {exit_ok, to_dot(inst.forest(), f, "G")};

    std::ostringstream text;
    const auto& part = built.partition;
    text << graph_name(args.a, args.b, args.c) << "  (m = " << inst.m() << ", k = " << inst.k() << ")\n";
    for (std::size_t i = 0; i < part.p3.size(); ++i) text << "E_" << i + 1 << " = {" << join(part.p3[i]) << "}\n";
    text << "E_I = {" << join(part.internal) << "}\nE_A = {" << join(part.a_side) << "}\nE_B = {"
         << join(part.b_side) << "}\n";
    text << "sums: " << join(is_antimagic(inst.forest(), f).sums) << "\n";
    if (args.trace) {
        const auto& t = built.trace;
        text << "case: " << to_string(t.case_tag) << "\n";
        if (t.chosen_index) text << "chosen index: " << *t.chosen_index << "\n";
        if (t.W) text << "W = {" << join(*t.W) << "} (" << t.W_rule << ")\n";
        text << "swap applied: " << (t.swap_applied ? "yes" : "no") << "\n";
        text << "proposition case: " << (t.proposition_case ? "yes" : "no") << "\n";
    }
    return {exit_ok, text.str()};
}

// ---- verify ----

struct VerifyArgs {
    std::string file;
    std::string expect_ad;
};

CommandOutcome cmd_verify(const VerifyArgs& args, bool as_json, std::istream& in) {
    json doc;
    if (args.file == "-") {
        try {
            doc = json::parse(in);
        } catch (const json::exception& e) {
            throw Error(ErrorKind::parse_error, std::string("stdin: ") + e.what());
        }
    } else {
        doc = read_json_file(args.file);
    }
    const auto [g, f] = labeling_from_json(doc);
    const VerificationReport report = is_antimagic(g, f);

    std::optional<Progression> expected;
    if (!args.expect_ad.empty()) {
        Progression p;
        char comma = 0;
        std::istringstream is(args.expect_ad);
        if (!(is >> p.initial >> comma >> p.difference) || comma != ',' || !is.eof()) {
            throw Error(ErrorKind::parse_error, "--expect-ad wants a,d");
        }
        expected = p;
    }

    int code = exit_ok;
    if (!report.antimagic) {
        code = exit_verify_failed;
    } else if (expected && report.ad_progression != expected) {
        code = exit_mismatch;
    }

    json out = {{"antimagic", report.antimagic}, {"sums", report.sums}, {"vertices", g.vertex_count()},
                {"edges", g.edge_count()}};
    out["duplicate"] = report.duplicate_witness
                           ? json{{"first_vertex", report.duplicate_witness->first_vertex},
                                  {"second_vertex", report.duplicate_witness->second_vertex},
                                  {"sum", report.duplicate_witness->sum}}
                           : json(nullptr);
    out["ad"] = report.ad_progression ? json::array({report.ad_progression->initial, report.ad_progression->difference})
                                      : json(nullptr);
    out["ad_matches"] = expected ? json(report.ad_progression == expected) : json(nullptr);

    std::ostringstream text;
    text << "antimagic: " << (report.antimagic ? "yes" : "no") << "\n";
    if (report.duplicate_witness) {
        text << "duplicate sum " << report.duplicate_witness->sum << " at vertices "
             << report.duplicate_witness->first_vertex << " and " << report.duplicate_witness->second_vertex << "\n";
    }
    text << "sums: " << join(report.sums) << "\n";
    if (report.ad_progression) {
        text << "(a,d) = (" << report.ad_progression->initial << "," << report.ad_progression->difference << ")\n";
    } else {
        text << "(a,d) = none\n";
    }
    if (code == exit_mismatch) text << "expected (a,d) = (" << expected->initial << "," << expected->difference << ")\n";
    return emit(as_json, out, text.str(), code);
}

// ---- search / tau-exhaustive ----

struct SearchArgs {
    std::string graph;
    std::string mode = "antimagic";
    std::optional<std::uint64_t> budget_nodes;
    bool serial = false;
    int c_limit = 0;
};

SearchOptions options_from(const SearchArgs& args) {
    SearchOptions o;
    o.budget_nodes = args.budget_nodes;
    o.execution = args.serial ? Execution::serial : Execution::parallel;
    return o;
}

json outcome_json(const Forest& g, const SearchOutcome& r) {
    json doc = {{"verdict", to_string(r.verdict)}, {"nodes_explored", r.nodes_explored}};
    doc["labeling"] = r.labeling ? labeling_to_json(g, *r.labeling) : json(nullptr);
    if (r.screened_out) doc["screened_out"] = true;
    return doc;
}

CommandOutcome cmd_search(const SearchArgs& args, bool as_json) {
    const Forest g = parse_forest(args.graph);
    const SearchOptions o = options_from(args);
    const SearchOutcome r = args.mode == "one-one" ? search_11(g, o) : exhaustive_antimagic(g, o);
    json doc = outcome_json(g, r);
    doc["graph"] = args.graph;
    doc["mode"] = args.mode;

    std::ostringstream text;
    text << args.graph << " [" << args.mode << "]: " << to_string(r.verdict) << " after " << r.nodes_explored
         << " nodes\n";
    if (r.screened_out) text << "rejected by the counting condition\n";
    if (r.labeling) {
        text << "labels: " << join(std::vector<int>(r.labeling->labels().begin(), r.labeling->labels().end()))
             << "\nsums: " << join(is_antimagic(g, *r.labeling).sums) << "\n";
    }
    return emit(as_json, doc, text.str(), r.verdict == Verdict::exhausted ? exit_refused : exit_ok);
}

CommandOutcome cmd_tau_exhaustive(const SearchArgs& args, bool as_json) {
    const Forest base = parse_forest(args.graph);
    const ExhaustiveTau r = exhaustive_tau(base, args.c_limit, options_from(args));
    json per = json::array();
    std::ostringstream text;
    bool exhausted = false;
    for (std::size_t c = 0; c < r.outcomes.size(); ++c) {
        per.push_back({{"c", c}, {"verdict", to_string(r.outcomes[c].verdict)}, {"nodes_explored", r.outcomes[c].nodes_explored}});
        text << "c = " << c << ": " << to_string(r.outcomes[c].verdict) << " (" << r.outcomes[c].nodes_explored
             << " nodes)\n";
        exhausted = exhausted || r.outcomes[c].verdict == Verdict::exhausted;
    }
    const std::string tau = r.tau ? std::to_string(*r.tau) : "-inf";
    text << "tau(" << args.graph << ") " << (r.reached_limit ? ">= " : "= ") << tau << "\n";
    json doc = {{"graph", args.graph},
                {"c_limit", args.c_limit},
                {"tau", r.tau ? json(*r.tau) : json("-inf")},
                {"reached_limit", r.reached_limit},
                {"outcomes", per}};
    return emit(as_json, doc, text.str(), exhausted ? exit_refused : exit_ok);
}

// ---- pell / census ----

CommandOutcome cmd_pell(std::int64_t max_n, bool screen, bool as_json) {
    json rows = json::array();
    std::ostringstream text;
    for (const auto& s : pell_solutions(max_n)) {
        json row = {{"n", s.n}, {"m", s.m}, {"x", s.x()}, {"y", s.y()}, {"density", screen_density(s.n, s.m)}};
        text << "n = " << s.n << ", m = " << s.m << "  (" << s.x() << "^2 - 2*" << s.y() << "^2 = -1)";
        if (screen) {
            const auto r = screen_double_star_pell(s);
            row["double_star"] = {{"has_candidate", r.has_candidate}, {"m_ds", r.m_ds},       {"c", r.c},
                                  {"cap", r.cap},                     {"feasible", r.feasible}, {"witness_a", r.witness_a},
                                  {"reason", r.reason}};
            text << "\n  4m >= 3n: " << (screen_density(s.n, s.m) ? "yes" : "no");
            if (r.has_candidate) {
                text << "\n  S(a,b) + " << r.c << "*P3 with |E(S(a,b))| = " << r.m_ds << ": "
                     << (r.feasible ? "feasible" : "infeasible") << ", " << r.reason;
                if (!r.witness_a.empty()) text << "\n  constructible for a in {" << join(r.witness_a) << "}";
            } else {
                text << "\n  " << r.reason;
            }
        }
        text << "\n";
        rows.push_back(std::move(row));
    }
    return emit(as_json, json{{"max_n", max_n}, {"solutions", rows}}, text.str());
}

CommandOutcome cmd_census(int n, int m, bool check, const SearchArgs& search, bool as_json) {
    json rows = json::array();
    std::ostringstream text;
    const auto shapes = census_shapes(n, m);
    for (const auto& g : shapes) {
        const std::string name = describe_forest(g);
        json row = {{"graph", name}, {"canonical", forest_canonical_form(g)}};
        text << name;
        if (check) {
            const SearchOutcome r = search_11(g, options_from(search));
            row["one_one"] = outcome_json(g, r);
            text << "  (1,1): " << to_string(r.verdict);
        }
        text << "\n";
        rows.push_back(std::move(row));
    }
    text << shapes.size() << " forest(s)\n";
    return emit(as_json, json{{"n", n}, {"m", m}, {"forests", rows}}, text.str());
}

// ---- table1 / figure2 ----

CommandOutcome cmd_table1(int max_m, bool as_json) {
    if (max_m < 3) throw Error(ErrorKind::invalid_parameters, "--max-m must be at least 3");
    json rows = json::array();
    std::ostringstream text;
    for (int m = 3; m <= max_m; ++m) {
        json cells = json::array();
        text << "m=" << m << " tau_0=" << tau_zero(m) << ":";
        for (int a = 1; 2 * a <= m - 1; ++a) {
            const TauResult t = tau_double_star(a, m - 1 - a);
            // Starred when the value is tau_0 and also of the form 2m+i.
            const std::int64_t i = t.tau0 - 2 * m;
            const bool starred = t.value == t.tau0 && i >= 1 && i <= 6;
            const std::string tag = starred ? case_name(static_cast<int>(i)) + "*" : case_name(t.attained_case);
            cells.push_back({{"a", a},
                             {"b", m - 1 - a},
                             {"tau", t.value},
                             {"case", case_name(t.attained_case)},
                             {"tag", tag},
                             {"tie", t.attained_case != 0 && t.tau0 == t.tau_cap}});
            text << " " << tag << "=" << t.value;
        }
        text << "\n";
        rows.push_back({{"m", m}, {"tau0", tau_zero(m)}, {"cells", cells}});
    }
    return emit(as_json, json{{"rows", rows}}, text.str());
}

CommandOutcome cmd_figure2(const std::string& dir, bool as_json) {
    json rows = json::array();
    std::ostringstream text;
    bool all = true;
    const auto fixtures = load_fixtures(dir);
    for (const auto& fx : fixtures) {
        const FixtureCheck r = check_fixture(fx);
        all = all && r.passed();
        rows.push_back({{"name", fx.name},
                        {"graph", fx.graph},
                        {"passed", r.passed()},
                        {"shape_matches", r.shape_matches},
                        {"antimagic", r.report.antimagic},
                        {"ad", r.ad ? json::array({r.ad->initial, r.ad->difference}) : json(nullptr)},
                        {"figure_sum_discrepancies", fx.figure_sum_discrepancies}});
        text << (r.passed() ? "PASS " : "FAIL ") << fx.name << " " << fx.graph << "\n";
        for (const auto& note : fx.figure_sum_discrepancies) text << "  note: " << note << "\n";
    }
    if (fixtures.empty()) all = false;
    return emit(as_json, json{{"fixtures", rows}, {"all_passed", all}}, text.str(), all ? exit_ok : exit_verify_failed);
}

}  // namespace

CommandOutcome run(const std::vector<std::string>& args, std::istream& in) {
    CLI::App app{"antimagic labelings of forests"};
    app.name("antimagic");
    app.require_subcommand(1);

    bool as_json = false;
    auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", as_json, "machine-readable output"); };

    TauArgs tau_args;
    auto* tau = app.add_subcommand("tau", "tau(S(a,b)) with its case tag and bounds");
    tau->add_option("--a", tau_args.a)->required();
    tau->add_option("--b", tau_args.b)->required();
    add_json(tau);

    ConstructArgs con;
    auto* construct_cmd = app.add_subcommand("construct", "antimagic labeling of S(a,b) + cP3");
    construct_cmd->add_option("--a", con.a)->required();
    construct_cmd->add_option("--b", con.b)->required();
    construct_cmd->add_option("--c", con.c)->required();
    construct_cmd->add_option("--format", con.format)->check(CLI::IsMember({"json", "dot", "text"}));
    construct_cmd->add_flag("--trace", con.trace, "report the construction case and choices");
    add_json(construct_cmd);

    VerifyArgs ver;
    auto* verify = app.add_subcommand("verify", "check a labeling JSON file ('-' for stdin)");
    verify->add_option("file", ver.file)->required();
    verify->add_option("--expect-ad", ver.expect_ad, "expected (a,d) as a,d");
    add_json(verify);

    SearchArgs sa;
    std::uint64_t budget = 0;
    auto* search = app.add_subcommand("search", "exhaustive labeling search");
    search->add_option("--graph", sa.graph)->required();
    search->add_option("--mode", sa.mode)->check(CLI::IsMember({"antimagic", "one-one"}));
    auto* budget_opt = search->add_option("--budget-nodes", budget);
    search->add_flag("--serial", sa.serial, "use the serial reference search");
    add_json(search);

    SearchArgs te;
    std::uint64_t te_budget = 0;
    auto* tau_ex = app.add_subcommand("tau-exhaustive", "largest c with base + c'P3 antimagic for all c' <= c");
    tau_ex->add_option("--graph", te.graph)->required();
    tau_ex->add_option("--c-limit", te.c_limit)->required()->check(CLI::NonNegativeNumber);
    auto* te_budget_opt = tau_ex->add_option("--budget-nodes", te_budget);
    tau_ex->add_flag("--serial", te.serial, "use the serial reference search");
    add_json(tau_ex);

    std::int64_t max_n = 1000;
    bool screen = false;
    auto* pell = app.add_subcommand("pell", "vertex/edge counts allowing (1,1)-antimagic forests");
    pell->add_option("--max-n", max_n);
    pell->add_flag("--screen", screen, "double-star and density screens");
    add_json(pell);

    int census_n = 0;
    int census_m = 0;
    bool check_11 = false;
    SearchArgs census_search;
    auto* census = app.add_subcommand("census", "forests with n vertices and m edges, components of order >= 3");
    census->add_option("--n", census_n)->required();
    census->add_option("--m", census_m)->required();
    census->add_flag("--check-one-one", check_11, "search each forest for a (1,1)-antimagic labeling");
    census->add_flag("--serial", census_search.serial, "use the serial reference search");
    add_json(census);

    int max_m = 29;
    auto* table1 = app.add_subcommand("table1", "tau(S(a,b)) for 3 <= m <= max-m");
    table1->add_option("--max-m", max_m);
    add_json(table1);

    std::string fixture_dir = default_fixture_dir();
    auto* figure2 = app.add_subcommand("figure2", "verify the bundled (1,1)-antimagic fixtures");
    figure2->add_option("--dir", fixture_dir);
    add_json(figure2);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        return {exit_ok, app.help()};
    } catch (const CLI::CallForAllHelp&) {
        return {exit_ok, app.help("", CLI::AppFormatMode::All)};
    } catch (const CLI::ParseError& e) {
        return {exit_usage, std::string(e.what()) + "\n" + app.help()};
    }
    if (budget_opt->count() > 0) sa.budget_nodes = budget;
    if (te_budget_opt->count() > 0) te.budget_nodes = te_budget;

    try {
        if (tau->parsed()) return cmd_tau(tau_args, as_json);
        if (construct_cmd->parsed()) return cmd_construct(con, as_json);
        if (verify->parsed()) return cmd_verify(ver, as_json, in);
        if (search->parsed()) return cmd_search(sa, as_json);
        if (tau_ex->parsed()) return cmd_tau_exhaustive(te, as_json);
        if (pell->parsed()) return cmd_pell(max_n, screen, as_json);
        if (census->parsed()) return cmd_census(census_n, census_m, check_11, census_search, as_json);
        if (table1->parsed()) return cmd_table1(max_m, as_json);
        if (figure2->parsed()) return cmd_figure2(fixture_dir, as_json);
    } catch (const Error& e) {
        const json doc = {{"error", std::string(to_string(e.kind()))}, {"message", e.what()}};
        return emit(as_json, doc, std::string(e.what()) + "\n", code_for(e.kind()));
    }
    return {exit_usage, app.help()};
}

CommandOutcome run(const std::vector<std::string>& args) { return run(args, std::cin); }

}  // namespace antimagic::cli
