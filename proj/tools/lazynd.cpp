#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "lazynd/lazynd.hpp"
#include "tree_json.hpp"

using nlohmann::json;
using namespace lazynd;

namespace {

struct Output {
    std::string command;
    json config = json::object();
    json result = json::object();
    SearchStats stats;
    std::string text;
    bool ok = true;
};

std::string prob_text(double p) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", p);
    return buf;
}

json stats_json(const SearchStats& s) {
    return {{"choice_expansions", s.choice_expansions},
            {"leaves", s.leaves},
            {"failures", s.failures},
            {"consistent_follows", s.consistent_follows}};
}

std::string stats_text(const SearchStats& s) {
    return "choice_expansions=" + std::to_string(s.choice_expansions) + " leaves=" + std::to_string(s.leaves) +
           " failures=" + std::to_string(s.failures) + " consistent_follows=" + std::to_string(s.consistent_follows) +
           "\n";
}

const std::map<std::string, SortAlgorithm> algorithms = {
    {"insertion", SortAlgorithm::insertion},       {"selection", SortAlgorithm::selection},
    {"bubble", SortAlgorithm::bubble},             {"quick-filter", SortAlgorithm::quick_filter},
    {"quick-split", SortAlgorithm::quick_split},   {"merge", SortAlgorithm::merge}};

struct PermsOptions {
    std::string algo;
    int n = 3;
    std::string mode = "lazy";
    bool count_only = false;
    bool head_only = false;
    bool stats = false;
};

void run_perms(const PermsOptions& o, const SearchConfig& cfg, Output& out) {
    SortAlgorithm algo = algorithms.at(o.algo);
    Strictness mode = o.mode == "strict" ? Strictness::strict : Strictness::lazy;
    out.config.update({{"algo", o.algo}, {"n", o.n}, {"mode", o.mode}, {"count_only", o.count_only},
                       {"head_only", o.head_only}});
    auto input = from_host(iota_list(o.n));
    if (o.head_only) {
        std::vector<int> heads;
        auto sorted = sort(algo, coin_cmp<int>(), input, mode);
        input = {};
        out.stats = search(head(std::move(sorted)), cfg, [&](int&& h) {
            if (!o.count_only)
                heads.push_back(h);
        });
        out.result["count"] = out.stats.leaves;
        if (!o.count_only) {
            out.result["heads"] = heads;
            for (int h : heads)
                out.text += std::to_string(h) + "\n";
        }
    } else {
        std::vector<std::vector<int>> perms;
        auto sorted = nf(sort(algo, coin_cmp<int>(), input, mode));
        input = {};
        out.stats = search(std::move(sorted), cfg, [&](std::vector<int>&& p) {
            if (!o.count_only)
                perms.push_back(std::move(p));
        });
        out.result["count"] = out.stats.leaves;
        if (!o.count_only) {
            out.result["permutations"] = perms;
            for (const auto& p : perms)
                out.text += show(p) + "\n";
        }
    }
    if (o.count_only)
        out.text += std::to_string(out.stats.leaves) + "\n";
    if (o.stats)
        out.text += stats_text(out.stats);
}

struct DistOptions {
    std::string model;
    int n = 2;
    std::string query;
    std::string variant = "naive";
    int players = 3;
    int limit = 5;
    std::string bind = "lazy";
};

void run_dist(const DistOptions& o, const SearchConfig& cfg, Output& out) {
    using namespace lazynd::studies;
    BindMode mode = o.bind == "strict" ? BindMode::strict : BindMode::lazy;
    out.config.update({{"model", o.model}});
    QueryResult r;
    std::string what;
    if (o.model == "allsix" || o.model == "fiveorsix") {
        out.config.update({{"n", o.n}, {"bind", o.bind}});
        auto n = static_cast<std::size_t>(o.n);
        r = o.model == "allsix" ? all_six(n, mode, cfg) : all_five_or_six(n, mode, cfg);
        what = o.model == "allsix" ? "all dice show six" : "all dice show five or six";
    } else if (o.model == "grass") {
        std::string q = o.query.empty() ? "wet-and-rain" : o.query;
        out.config.update({{"query", q}});
        if (q == "wet-and-rain")
            r = grass_wet_and_rain(cfg);
        else if (q == "wet")
            r = grass_wet_prob(cfg);
        else if (q == "rain")
            r = query_stats<GrassModel>(is_raining, grass_model(), cfg);
        else if (q == "cond-rain-given-wet")
            r = rain_given_wet(cfg);
        else
            throw CLI::ValidationError("--query", "unknown grass query: " + q);
        what = q;
    } else if (o.model == "palindrome" || o.model == "bb") {
        out.config.update({{"n", o.n}});
        auto n = static_cast<std::size_t>(o.n);
        r = o.model == "palindrome" ? palindrome_prob(n, cfg) : consecutive_bs_prob(n, cfg);
        what = o.model == "palindrome" ? "random string is a palindrome" : "random string contains bb";
    } else if (o.model == "santa") {
        static const std::map<std::string, SantaVariant> variants = {{"naive", SantaVariant::naive},
                                                                     {"no-self-pick", SantaVariant::no_self_pick},
                                                                     {"pick-and-check", SantaVariant::pick_and_check},
                                                                     {"repeat", SantaVariant::repeat}};
        auto it = variants.find(o.variant);
        if (it == variants.end())
            throw CLI::ValidationError("--variant", "unknown santa variant: " + o.variant);
        if (o.players < 2)
            throw CLI::ValidationError("--players", "a game needs at least two players");
        out.config.update({{"variant", o.variant}, {"players", o.players}});
        if (it->second == SantaVariant::repeat)
            out.config["limit"] = o.limit;
        r = santa_failure_prob(it->second, o.players, o.limit, cfg);
        what = "game fails";
    }
    out.stats = r.stats;
    out.result = {{"event", what}, {"probability", r.probability}};
    out.text = "P(" + what + ") = " + prob_text(r.probability) + "\n";
}

struct TreeOptions {
    std::string preset;
    int n = 2;
    std::string from_json;
};

DecisionTree preset_tree(const TreeOptions& o) {
    auto c = coin_cmp<int>();
    if (o.preset == "filter-coin") {
        auto p = [c](const Eff<int>& y) { return c(pure(42), y); };
        return build_decision_tree(nf(filter_nd<int, ND>(p, from_host(iota_list(o.n)))));
    }
    auto l3 = from_host(std::vector<int>{1, 2, 3});
    if (o.preset == "insertion-sort-3")
        return build_decision_tree(nf(insertion_sort(c, l3)));
    if (o.preset == "selection-pickmin-3")
        return build_decision_tree(nf(pick_min(c, l3)));
    if (o.preset == "selection-sort-3")
        return build_decision_tree(nf(selection_sort(c, l3)));
    throw CLI::ValidationError("preset", "unknown tree preset: " + o.preset);
}

void run_tree(const TreeOptions& o, Output& out) {
    DecisionTree t;
    if (!o.from_json.empty()) {
        std::ifstream in(o.from_json);
        if (!in)
            throw CLI::ValidationError("--from-json", "cannot read " + o.from_json);
        json j = json::parse(in);
        t = tree_from_json(j.contains("result") ? j.at("result") : j);
        out.config["from_json"] = o.from_json;
    } else {
        out.config.update({{"preset", o.preset}});
        if (o.preset == "filter-coin")
            out.config["n"] = o.n;
        t = preset_tree(o);
    }
    out.result = to_json(t);
    out.text = render_text(t);
}

struct LawsOptions {
    std::string suite;
    std::uint64_t seed = 42;
    std::size_t budget = 200;
};

void run_laws(const LawsOptions& o, Output& out) {
    out.config.update({{"suite", o.suite}, {"seed", o.seed}, {"budget", o.budget}});
    json reports = json::array();
    for (const auto& r : run_law_suite(o.suite, o.budget, o.seed)) {
        reports.push_back({{"law", r.law},
                           {"cases", r.cases},
                           {"passed", r.passed},
                           {"rejected", r.rejected},
                           {"premise_holds", r.premise_holds},
                           {"ok", r.ok()},
                           {"counterexamples", r.counterexamples}});
        out.ok = out.ok && r.ok();
        out.text += std::string(r.ok() ? "PASS " : "FAIL ") + r.law + " (" + std::to_string(r.passed) + "/" +
                    std::to_string(r.cases) + ")\n";
        for (const auto& c : r.counterexamples)
            out.text += "  counterexample: " + c + "\n";
    }
    out.result = {{"reports", reports}, {"ok", out.ok}};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lazy non-determinism toolkit: sorting with coin comparisons, probabilistic queries, laws"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string strategy = "dfs", format = "text";
    std::size_t depth_cap = env_depth_cap();
    app.add_option("--strategy", strategy, "search strategy")->check(CLI::IsMember({"dfs", "bfs"}));
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--depth-cap", depth_cap, "maximum forced nodes along one path")->check(CLI::PositiveNumber);

    PermsOptions perms;
    auto* perms_cmd = app.add_subcommand("perms", "permutations from sorting [1..n] with a coin comparison");
    perms_cmd->add_option("--algo", perms.algo, "sorting algorithm")
        ->required()
        ->check(CLI::IsMember({"insertion", "selection", "bubble", "quick-filter", "quick-split", "merge"}));
    perms_cmd->add_option("--n", perms.n, "list length")->check(CLI::Range(0, 12));
    perms_cmd->add_option("--mode", perms.mode, "lazy or strict (monadic) algorithm")
        ->check(CLI::IsMember({"lazy", "strict"}));
    perms_cmd->add_flag("--count-only", perms.count_only, "print only the number of results");
    perms_cmd->add_flag("--head-only", perms.head_only, "demand only the head of each result");
    perms_cmd->add_flag("--stats", perms.stats, "print search statistics");

    DistOptions dist;
    auto* dist_cmd = app.add_subcommand("dist", "probabilistic queries");
    dist_cmd->add_option("model", dist.model, "model")
        ->required()
        ->check(CLI::IsMember({"allsix", "fiveorsix", "grass", "palindrome", "bb", "santa"}));
    dist_cmd->add_option("--n", dist.n, "number of dice / string length")->check(CLI::Range(0, 100000));
    dist_cmd->add_option("--query", dist.query, "grass query: wet-and-rain, wet, rain, cond-rain-given-wet");
    dist_cmd->add_option("--variant", dist.variant, "santa variant: naive, no-self-pick, pick-and-check, repeat");
    dist_cmd->add_option("--players", dist.players, "santa players")->check(CLI::Range(2, 9));
    dist_cmd->add_option("--limit", dist.limit, "retry budget for the repeat variant")->check(CLI::Range(0, 1000));
    dist_cmd->add_option("--bind", dist.bind, "dice: lazy or strict bind")->check(CLI::IsMember({"lazy", "strict"}));

    TreeOptions tree;
    auto* tree_cmd = app.add_subcommand("tree", "render a decision tree");
    tree_cmd->add_option("preset", tree.preset, "filter-coin, insertion-sort-3, selection-pickmin-3, selection-sort-3")
        ->check(CLI::IsMember({"filter-coin", "insertion-sort-3", "selection-pickmin-3", "selection-sort-3"}));
    tree_cmd->add_option("--n", tree.n, "list length for filter-coin")->check(CLI::Range(0, 8));
    tree_cmd->add_option("--from-json", tree.from_json, "render a tree previously printed with --format json");

    LawsOptions laws;
    auto* laws_cmd = app.add_subcommand("laws", "randomised law checks");
    laws_cmd->add_option("suite", laws.suite, "suite")
        ->required()
        ->check(CLI::IsMember({"monad", "pulltab", "append", "sharing", "all"}));
    laws_cmd->add_option("--seed", laws.seed, "random seed");
    laws_cmd->add_option("--budget", laws.budget, "cases per law")->check(CLI::Range(1, 100000));

    try {
        app.parse(argc, argv);
        if (tree_cmd->parsed() && tree.preset.empty() && tree.from_json.empty())
            throw CLI::RequiredError("tree needs a preset or --from-json");
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    SearchConfig cfg;
    cfg.strategy = strategy == "bfs" ? SearchStrategy::bfs : SearchStrategy::dfs;
    cfg.depth_cap = depth_cap;

    Output out;
    out.config = {{"strategy", strategy}, {"format", format}, {"depth_cap", depth_cap}};
    auto start = std::chrono::steady_clock::now();
    int exit_code = 0;
    try {
        if (perms_cmd->parsed()) {
            out.command = "perms";
            run_perms(perms, cfg, out);
        } else if (dist_cmd->parsed()) {
            out.command = "dist";
            run_dist(dist, cfg, out);
        } else if (tree_cmd->parsed()) {
            out.command = "tree";
            run_tree(tree, out);
        } else if (laws_cmd->parsed()) {
            out.command = "laws";
            run_laws(laws, out);
        }
        if (!out.ok)
            exit_code = 1;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const depth_cap_exceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        out.ok = false;
        out.stats = e.stats();
        out.result = {{"error", e.what()}};
        out.text = "error: " + std::string(e.what()) + "\n" + stats_text(e.stats());
        exit_code = 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    double elapsed =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    if (format == "json") {
        json j = {{"command", out.command},
                  {"config", out.config},
                  {"result", out.result},
                  {"stats", stats_json(out.stats)},
                  {"elapsed_ms", elapsed}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << out.text;
    }
    return exit_code;
}
