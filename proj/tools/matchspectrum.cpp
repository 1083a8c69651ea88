// matchspectrum command line: count perfect matchings of bipartite graphs,
// dump cut-weight distributions, apply the odd transformation, benchmark
// engines against each other, and run a seeded cross-engine verification.
//
// Exit status: 0 on success, 1 on any error or verification failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <matchspectrum/matchspectrum.hpp>

namespace ms = matchspectrum;
using nlohmann::json;

namespace {

struct Caps {
    int brute = 24;
    int enumerate_left = 14;
};

// MATCHSPECTRUM_CAPS=brute=<k>,enum=<k>
Caps caps_from_env() {
    Caps c;
    const char* raw = std::getenv("MATCHSPECTRUM_CAPS");
    if (!raw) return c;
    std::stringstream ss{std::string(raw)};
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("MATCHSPECTRUM_CAPS: expected key=value, got '" + item + "'");
        const std::string key = item.substr(0, eq);
        const int value = std::stoi(item.substr(eq + 1));
        if (key == "brute")
            c.brute = value;
        else if (key == "enum")
            c.enumerate_left = value;
        else
            throw std::runtime_error("MATCHSPECTRUM_CAPS: unknown key '" + key + "'");
    }
    return c;
}

ms::BipartiteGraph load_graph(const std::string& path) {
    if (path == "-") return ms::parse_graph(std::cin);
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    return ms::parse_graph(in);
}

std::vector<int> parse_u1(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    return out;
}

ms::SplitStrategy parse_strategy(const std::string& s) {
    if (s == "paper") return ms::SplitStrategy::Formula;
    if (s == "greedy") return ms::SplitStrategy::Greedy;
    throw std::runtime_error("unknown strategy: " + s);
}

json stats_to_json(const ms::OpReport& r) {
    return json{{"sigma_applications", r.sigma_applications},
                {"vector_additions", r.vector_additions},
                {"classes", r.class_count}};
}

struct CountArgs {
    std::string input = "-";
    std::string engine = "auto";
    std::string u1;
    std::string strategy = "paper";
    std::string format = "json";
    bool checked = false;
};

ms::CountOptions make_options(const CountArgs& a, const Caps& caps) {
    ms::CountOptions opts;
    opts.engine.checked = a.checked;
    opts.engine.bruteforce_cap = caps.brute;
    opts.enumeration_cap = caps.enumerate_left;
    opts.strategy = parse_strategy(a.strategy);
    if (!a.u1.empty()) opts.explicit_u1 = parse_u1(a.u1);
    return opts;
}

int run_count(const CountArgs& a, const Caps& caps) {
    ms::BipartiteGraph g = load_graph(a.input);
    ms::CountOptions opts = make_options(a, caps);

    json out;
    if (a.engine == "ryser") {
        ms::BigInt c = g.is_balanced() ? ms::ryser_permanent(ms::biadjacency(g)) : ms::BigInt(0);
        out = json{{"count", c.get_str()}, {"algorithm", "ryser"}};
    } else if (a.engine == "enumerate") {
        ms::BigInt c = ms::enumerate_perfect_matchings(g, caps.enumerate_left);
        out = json{{"count", c.get_str()}, {"algorithm", "enumerate"}};
    } else {
        ms::CountEngine e;
        if (a.engine == "bruteforce")
            e = ms::CountEngine::Bruteforce;
        else if (a.engine == "halfenum")
            e = ms::CountEngine::Halfenum;
        else if (a.engine == "split")
            e = ms::CountEngine::Split;
        else if (a.engine == "auto")
            e = ms::CountEngine::Auto;
        else
            throw std::runtime_error("unknown engine: " + a.engine);
        ms::CountResult r = ms::count_perfect_matchings(g, e, opts);
        out = json{{"count", r.count.get_str()},
                   {"algorithm", r.algorithm},
                   {"transformed", r.transformed},
                   {"target_weight", r.target_weight},
                   {"stats", stats_to_json(r.stats)}};
    }

    if (a.format == "csv") {
        std::cout << "count,algorithm\n"
                  << out["count"].get<std::string>() << ',' << out["algorithm"].get<std::string>()
                  << '\n';
    } else {
        std::cout << out.dump(2) << '\n';
    }
    return 0;
}

int run_cutdist(const CountArgs& a, const Caps& caps) {
    ms::BipartiteGraph g = load_graph(a.input);
    ms::EngineOptions eopts;
    eopts.checked = a.checked;
    eopts.bruteforce_cap = caps.brute;

    ms::WeightDistribution w;
    if (a.engine == "bruteforce") {
        w = ms::cutdist_bruteforce(g, eopts);
    } else if (a.engine == "halfenum") {
        w = ms::cutdist_halfenum(g, eopts);
    } else if (a.engine == "split") {
        ms::SplitPlan plan = a.u1.empty() ? ms::plan_split(g, parse_strategy(a.strategy))
                                          : ms::plan_split_explicit(g, parse_u1(a.u1));
        w = ms::cutdist_split(g, plan, eopts);
    } else if (a.engine == "auto") {
        bool split_ok = false;
        ms::SplitPlan plan;
        if (g.left_count >= 1) {
            plan = ms::plan_split(g, parse_strategy(a.strategy));
            split_ok = static_cast<int>(plan.u1.size()) >= 2 && plan.h < g.right_count;
        }
        w = split_ok ? ms::cutdist_split(g, plan, eopts) : ms::cutdist_halfenum(g, eopts);
    } else {
        throw std::runtime_error("unknown engine: " + a.engine);
    }

    auto strings = ms::decimal_strings(w);
    if (a.format == "csv") {
        for (size_t i = 0; i < strings.size(); ++i)
            std::cout << strings[i] << (i + 1 < strings.size() ? "," : "");
        std::cout << '\n';
    } else {
        std::cout << json(strings).dump() << '\n';
    }
    return 0;
}

int run_transform(const std::string& input) {
    ms::BipartiteGraph g = load_graph(input);
    ms::OddTransformResult r = ms::to_odd_graph(g);
    if (r.was_already_odd) {
        std::cout << "# input already odd, returned unchanged\n";
    } else {
        std::cout << "# odd transformation: left hub=" << r.added_left[0]
                  << " left pendant=" << r.added_left[1] << " right hub=" << r.added_right[0]
                  << " right pendant=" << r.added_right[1]
                  << " added_edges=" << r.added_edge_count
                  << " bridge=" << (r.bridge_edge_present ? "yes" : "no") << '\n';
    }
    std::cout << ms::serialize_edge_list(r.graph);
    return 0;
}

struct BenchArgs {
    std::uint64_t seed = 1;
    int n_min = 16;
    int n_max = 17;
    int per_n = 3;
    double delta = 3.0;
    std::string engines = "halfenum,split";
    std::string strategy = "paper";
    std::string format = "csv";
    bool checked = false;
};

int run_bench_cmd(const BenchArgs& a, const Caps& caps) {
    std::vector<std::string> engines;
    {
        std::stringstream ss(a.engines);
        std::string item;
        while (std::getline(ss, item, ',')) engines.push_back(item);
    }
    ms::CountOptions opts;
    opts.engine.checked = a.checked;
    opts.engine.bruteforce_cap = caps.brute;
    opts.enumeration_cap = caps.enumerate_left;
    opts.strategy = parse_strategy(a.strategy);

    std::mt19937_64 seeder(a.seed);
    bool digests_agree = true;
    json rows = json::array();
    if (a.format == "csv") std::cout << ms::bench_csv_header() << '\n';

    for (int n = a.n_min; n <= a.n_max; ++n) {
        for (int i = 0; i < a.per_n; ++i) {
            const std::uint64_t instance_seed = seeder();
            ms::BipartiteGraph g = ms::gen_random_bipartite(n, a.delta, instance_seed);
            std::string id = "n" + std::to_string(n) + "s" + std::to_string(instance_seed);

            std::uint64_t first_mod = 0;
            std::size_t first_digits = 0;
            bool have_first = false;
            for (const std::string& engine : engines) {
                ms::BenchRecord rec = ms::run_bench(g, id, engine, opts);
                if (!have_first) {
                    first_mod = rec.count_mod64;
                    first_digits = rec.count_digits;
                    have_first = true;
                } else if (rec.count_mod64 != first_mod || rec.count_digits != first_digits) {
                    digests_agree = false;
                    std::cerr << "bench: digest mismatch on " << id << " engine " << engine
                              << '\n';
                }
                if (a.format == "csv")
                    std::cout << ms::bench_csv_row(rec) << '\n';
                else
                    rows.push_back(json{{"instance", rec.instance_id},
                                        {"n", rec.n},
                                        {"m", rec.m},
                                        {"delta", rec.delta},
                                        {"engine", rec.engine},
                                        {"u1_size", rec.u1_size},
                                        {"h", rec.h},
                                        {"classes", rec.classes},
                                        {"sigma_ops", rec.sigma_ops},
                                        {"vector_adds", rec.vector_adds},
                                        {"wall_ms", rec.wall_ms},
                                        {"count_mod64", rec.count_mod64},
                                        {"count_digits", rec.count_digits}});
            }
        }
    }
    if (a.format != "csv") std::cout << rows.dump(2) << '\n';
    return digests_agree ? 0 : 1;
}

struct VerifyArgs {
    std::uint64_t seed = 1;
    int max_n = 6;
    int trials = 50;
    bool checked = false;
    bool verbose = false;
};

int run_verify(const VerifyArgs& a, const Caps& caps) {
    std::mt19937_64 rng(a.seed);
    int failures = 0;

    for (int t = 0; t < a.trials; ++t) {
        const int n = 1 + static_cast<int>(ms::bounded_uniform(rng, a.max_n));
        const double delta = static_cast<double>(ms::bounded_uniform(rng, n + 1));
        const std::uint64_t gseed = rng();
        ms::BipartiteGraph g = ms::gen_random_bipartite(n, delta, gseed);

        ms::CountOptions opts;
        opts.engine.checked = a.checked;
        opts.engine.bruteforce_cap = caps.brute;
        opts.enumeration_cap = caps.enumerate_left;

        std::vector<std::pair<std::string, ms::BigInt>> counts;
        counts.emplace_back("halfenum",
                            ms::count_perfect_matchings(g, ms::CountEngine::Halfenum, opts).count);
        counts.emplace_back("split",
                            ms::count_perfect_matchings(g, ms::CountEngine::Split, opts).count);
        counts.emplace_back("auto",
                            ms::count_perfect_matchings(g, ms::CountEngine::Auto, opts).count);
        if (2 * n + 4 <= caps.brute)
            counts.emplace_back(
                "bruteforce",
                ms::count_perfect_matchings(g, ms::CountEngine::Bruteforce, opts).count);
        counts.emplace_back("ryser", ms::ryser_permanent(ms::biadjacency(g)));
        if (n <= caps.enumerate_left)
            counts.emplace_back("enumerate",
                                ms::enumerate_perfect_matchings(g, caps.enumerate_left));

        bool trial_ok = true;
        for (const auto& [name, value] : counts)
            if (value != counts.front().second) trial_ok = false;

        // engine equivalence on the raw cut distribution
        ms::EngineOptions eopts = opts.engine;
        ms::WeightDistribution wh = ms::cutdist_halfenum(g, eopts);
        ms::WeightDistribution ws = ms::cutdist_split(g, ms::plan_split(g), eopts);
        if (!(wh == ws)) trial_ok = false;
        if (2 * n <= caps.brute && !(ms::cutdist_bruteforce(g, eopts) == wh)) trial_ok = false;
        if (wh.mass() != ms::pow2(static_cast<unsigned long>(2 * n))) trial_ok = false;

        if (!trial_ok) {
            ++failures;
            std::cerr << "verify: FAIL trial " << t << " n=" << n << " delta=" << delta
                      << " seed=" << gseed << ':';
            for (const auto& [name, value] : counts) std::cerr << ' ' << name << '=' << value.get_str();
            std::cerr << '\n';
        } else if (a.verbose) {
            std::cout << "trial " << t << ": n=" << n << " delta=" << delta
                      << " count=" << counts.front().second.get_str() << " ok\n";
        }
    }

    if (failures == 0) {
        std::cout << "verify: " << a.trials << " trials, all engines and oracles agree\n";
        return 0;
    }
    std::cout << "verify: " << failures << "/" << a.trials << " trials FAILED\n";
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact perfect-matching counting via cut/cycle-space weight distributions"};
    app.require_subcommand(1);

    CountArgs count_args;
    auto* count = app.add_subcommand("count", "count perfect matchings of a bipartite graph");
    count->add_option("--input", count_args.input, "edge-list or JSON graph file, '-' for stdin");
    count->add_option("--engine", count_args.engine,
                      "bruteforce|halfenum|split|auto|ryser|enumerate");
    count->add_option("--u1", count_args.u1,
                      "comma-separated left vertices forcing an explicit split plan");
    count->add_option("--strategy", count_args.strategy, "split planning: paper|greedy");
    count->add_option("--format", count_args.format, "json|csv");
    count->add_flag("--checked", count_args.checked, "enable mass-truncation assertions");

    CountArgs cutdist_args;
    auto* cutdist = app.add_subcommand("cutdist",
                                       "cut-weight distribution over all vertex partitions");
    cutdist->add_option("--input", cutdist_args.input, "edge-list or JSON graph file");
    cutdist->add_option("--engine", cutdist_args.engine, "bruteforce|halfenum|split|auto");
    cutdist->add_option("--u1", cutdist_args.u1, "explicit split plan");
    cutdist->add_option("--strategy", cutdist_args.strategy, "paper|greedy");
    cutdist->add_option("--format", cutdist_args.format, "json|csv");
    cutdist->add_flag("--checked", cutdist_args.checked, "enable mass-truncation assertions");

    std::string transform_input = "-";
    auto* transform = app.add_subcommand("transform", "odd transformation, edge-list output");
    transform->add_option("--input", transform_input, "edge-list or JSON graph file");

    BenchArgs bench_args;
    auto* bench = app.add_subcommand("bench", "seeded engine benchmark, CSV output");
    bench->add_option("--seed", bench_args.seed, "family seed");
    bench->add_option("--n-min", bench_args.n_min, "smallest side size");
    bench->add_option("--n-max", bench_args.n_max, "largest side size");
    bench->add_option("--per-n", bench_args.per_n, "instances per size");
    bench->add_option("--delta", bench_args.delta, "target average degree");
    bench->add_option("--engines", bench_args.engines, "comma-separated engine list");
    bench->add_option("--strategy", bench_args.strategy, "paper|greedy");
    bench->add_option("--format", bench_args.format, "csv|json");
    bench->add_flag("--checked", bench_args.checked, "enable mass-truncation assertions");

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "seeded cross-engine/oracle agreement suite");
    verify->add_option("--seed", verify_args.seed, "suite seed");
    verify->add_option("--max-n", verify_args.max_n, "largest side size");
    verify->add_option("--trials", verify_args.trials, "number of random instances");
    verify->add_flag("--checked", verify_args.checked, "enable mass-truncation assertions");
    verify->add_flag("--verbose", verify_args.verbose, "one line per trial");

    CLI11_PARSE(app, argc, argv);

    try {
        const Caps caps = caps_from_env();
        if (count->parsed()) return run_count(count_args, caps);
        if (cutdist->parsed()) return run_cutdist(cutdist_args, caps);
        if (transform->parsed()) return run_transform(transform_input);
        if (bench->parsed()) return run_bench_cmd(bench_args, caps);
        if (verify->parsed()) return run_verify(verify_args, caps);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
