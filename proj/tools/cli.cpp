#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <nlohmann/json.hpp>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "kevac/biheap.hpp"
#include "kevac/evac.hpp"
#include "kevac/generate.hpp"
#include "kevac/io.hpp"
#include "kevac/minmax.hpp"
#include "kevac/optk.hpp"
#include "kevac/oracle.hpp"
#include "kevac/regret.hpp"

namespace kevac::cli {

namespace {

constexpr int kExitInvalid = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;

class GuardExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

PathInstance load_instance(const std::string& path) {
    PathInstance inst = instance_from_json(read_text_file(path));
    require_valid(inst);
    return inst;
}

struct ScenarioChoice {
    std::string file;
    bool all_minus = false;
    bool all_plus = false;

    Scenario resolve(const PathInstance& inst) const {
        if (!file.empty()) {
            Scenario s = scenario_from_json(read_text_file(file));
            if (!in_scenario_space(inst, s))
                throw InvalidInput("scenario " + file + " is outside the instance weight intervals");
            return s;
        }
        return all_plus ? kevac::all_plus(inst) : kevac::all_minus(inst);
    }
};

void add_scenario_options(CLI::App* cmd, ScenarioChoice& sc) {
    auto* file = cmd->add_option("--scenario", sc.file, "scenario file ({\"weights\": [...]})");
    auto* minus = cmd->add_flag("--all-minus", sc.all_minus, "every vertex at its lower weight (default)");
    auto* plus = cmd->add_flag("--all-plus", sc.all_plus, "every vertex at its upper weight");
    file->excludes(minus, plus);
    minus->excludes(plus);
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t used = 0;
        const int v = std::stoi(item, &used);
        if (used != item.size()) throw InvalidInput("bad integer '" + item + "' in list");
        out.push_back(v);
    }
    if (out.empty()) throw InvalidInput("empty list '" + text + "'");
    return out;
}

template <class T>
std::uint64_t sum(const std::vector<T>& v) {
    return std::accumulate(v.begin(), v.end(), std::uint64_t{0});
}

void print_plan(std::ostream& out, const Plan& plan) {
    out << "parts:";
    for (const Part& p : plan.parts()) out << " [" << p.l << "," << p.r << "]@" << p.sink;
    out << "\n";
}

// ---- subcommands ----

struct GenArgs {
    GenOptions opts;
    bool coord_max_set = false;
    std::string out_file;
};

int cmd_gen(GenArgs& a, std::ostream& out) {
    if (!a.coord_max_set) a.opts.coord_max = 10 * (static_cast<Coord>(a.opts.n) + 1);
    const std::string text = instance_to_json(generate_instance(a.opts));
    if (a.out_file.empty())
        out << text;
    else
        write_text_file(a.out_file, text);
    return 0;
}

struct SolveOptArgs {
    std::string instance;
    int k = 1;
    ScenarioChoice scenario;
    std::string cost_model = "discrete";
    std::string plan_out = "plan.json";
};

int cmd_solve_opt(const SolveOptArgs& a, std::ostream& out) {
    const PathInstance inst = load_instance(a.instance);
    const Scenario s = a.scenario.resolve(inst);
    const CostModel cm = cost_model_from_string(a.cost_model);
    const OptKSinkResult res = optimal_k_sink(inst, s, a.k, cm);
    write_text_file(a.plan_out, plan_to_json(PlanRecord{res.plan, res.time, ObjectiveKind::EvacTime}));
    out << "objective: " << res.time << "\n";
    print_plan(out, res.plan);
    return 0;
}

struct SolveMmrArgs {
    std::string instance;
    int k = 1;
    std::string algo = "dp";
    std::string plan_out = "plan.json";
};

int cmd_solve_mmr(const SolveMmrArgs& a, std::ostream& out) {
    const PathInstance inst = load_instance(a.instance);
    const MmrResult res = a.algo == "bs" ? minmax_regret_bs(inst, a.k) : minmax_regret_dp(inst, a.k);
    write_text_file(a.plan_out, plan_to_json(PlanRecord{res.plan, res.value, ObjectiveKind::MaxRegret}));
    out << "objective: " << res.value << "\n";
    print_plan(out, res.plan);
    return 0;
}

struct VerifyArgs {
    std::string instance;
    std::string plan;
    ScenarioChoice scenario;
    std::string cost_model = "discrete";
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
    const PathInstance inst = load_instance(a.instance);
    const PlanRecord rec = plan_from_json(read_text_file(a.plan));
    if (rec.plan.n() != inst.n())
        throw InvalidInput("plan covers [0," + std::to_string(rec.plan.n()) + "], instance is [0," +
                           std::to_string(inst.n()) + "]");
    const int n = inst.n();
    const int k = rec.plan.k();
    bool ok = true;
    auto check = [&](const std::string& what, Time expected, Time got) {
        const bool pass = expected == got;
        ok = ok && pass;
        out << (pass ? "PASS " : "FAIL ") << what << ": expected " << expected << ", got " << got
            << "\n";
    };

    if (rec.kind == ObjectiveKind::EvacTime) {
        if (n > 12 || k > 4) throw GuardExceeded("verify of evacuation plans needs n <= 12 and k <= 4");
        const Scenario s = a.scenario.resolve(inst);
        const CostModel cm = cost_model_from_string(a.cost_model);
        check("plan evaluation", rec.objective, eval_plan(inst, s, rec.plan, cm).time);
        check("brute-force optimum", rec.objective, brute_optimal_k_sink(inst, s, k, cm).value);
    } else {
        if (n > 8 || k > 3) throw GuardExceeded("verify of regret plans needs n <= 8 and k <= 3");
        ScenarioOptCache cache(inst, k, CostModel::Simplified);
        check("max regret over structured candidates", rec.objective,
              max_regret_of_plan(inst, rec.plan, cache).value);
        check("max regret over corner scenarios", rec.objective,
              brute_max_regret_corners(inst, rec.plan));
        check("brute-force minimax regret", rec.objective, brute_minmax_regret(inst, k).value);
    }
    out << (ok ? "verified" : "verification failed") << "\n";
    return ok ? 0 : kExitInvalid;
}

struct BenchArgs {
    std::string algo = "opt";
    std::string n_list = "100";
    std::string k_list = "2";
    std::uint64_t seed = 1;
    int reps = 1;
    Weight w_max = 20;
    std::int64_t capacity = 2;
};

nlohmann::json run_bench_once(const BenchArgs& a, int n, int k, std::uint64_t seed, Time& value) {
    nlohmann::json counters = nlohmann::json::object();
    if (a.algo == "biheap") {
        BiHeap h(k);
        Rng rng(seed);
        std::vector<BiHeap::Handle> live;
        for (int op = 0; op < n; ++op) {
            const std::int64_t r = rng.uniform(0, 9);
            if (r < 4 || live.empty()) {
                live.push_back(h.insert(rng.uniform(-1000, 1000), rng.uniform(-1000, 1000)));
            } else if (r < 6) {
                const auto pick = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(live.size()) - 1));
                h.erase(live[pick]);
                live[pick] = live.back();
                live.pop_back();
            } else if (r < 8) {
                h.add_w(rng.uniform(-1000, 1000));
            } else {
                h.add_l(rng.uniform(-1000, 1000));
            }
        }
        const auto m = h.max();
        value = m ? m->cost : 0;
        counters["node_touches"] = h.node_touches();
        counters["final_size"] = h.size();
        return counters;
    }

    GenOptions g;
    g.n = n;
    g.coord_max = 10 * (static_cast<Coord>(n) + 1);
    g.w_max = a.w_max;
    g.capacity = a.capacity;
    g.seed = seed;
    const PathInstance inst = generate_instance(g);
    if (a.algo == "opt") {
        const OptKSinkResult r = optimal_k_sink(inst, all_plus(inst), k, CostModel::Discrete);
        value = r.time;
        counters["j_increments"] = sum(r.stats.j_increments);
        counters["j_probes"] = sum(r.stats.j_probes);
        counters["heap_node_touches"] = r.stats.heap_node_touches;
        counters["sink_moves"] = r.stats.sink_moves;
    } else if (a.algo == "mmr-dp" || a.algo == "mmr-bs") {
        const MmrResult r = a.algo == "mmr-dp" ? minmax_regret_dp(inst, k) : minmax_regret_bs(inst, k);
        value = r.value;
        counters["j_increments"] = sum(r.stats.j_increments);
        counters["j_probes"] = sum(r.stats.j_probes);
        counters["opt_computations"] = r.stats.opt_computations;
        counters["rji_sink_evaluations"] = r.stats.rji_sink_evaluations;
        counters["placements"] = r.stats.placements;
        counters["precompute_ms"] = r.stats.precompute_ms;
    } else {
        throw InvalidInput("unknown bench algorithm '" + a.algo + "' (opt|mmr-dp|mmr-bs|biheap)");
    }
    return counters;
}

int cmd_bench(const BenchArgs& a, std::ostream& out) {
    const std::vector<int> ns = parse_int_list(a.n_list);
    const std::vector<int> ks = parse_int_list(a.k_list);
    for (int n : ns) {
        for (int k : ks) {
            for (int rep = 0; rep < a.reps; ++rep) {
                const std::uint64_t seed = a.seed + static_cast<std::uint64_t>(rep);
                Time value = 0;
                const auto start = std::chrono::steady_clock::now();
                nlohmann::json counters = run_bench_once(a, n, k, seed, value);
                const double ms = std::chrono::duration<double, std::milli>(
                                      std::chrono::steady_clock::now() - start)
                                      .count();
                nlohmann::json rec;
                rec["algo"] = a.algo;
                rec["n"] = n;
                rec["k"] = k;
                rec["seed"] = seed;
                rec["value"] = value;
                rec["wall_ms"] = ms;
                rec["counters"] = std::move(counters);
                out << rec.dump() << "\n" << std::flush;
            }
        }
    }
    return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"k-sink evacuation planning on dynamic path networks"};
    app.require_subcommand(1);

    GenArgs gen;
    auto* c_gen = app.add_subcommand("gen", "generate a random instance");
    c_gen->add_option("--n", gen.opts.n, "index of the last vertex")->required()->check(CLI::NonNegativeNumber);
    c_gen->add_option("--coord-max", gen.opts.coord_max, "largest coordinate (default 10(n+1))")
        ->each([&](const std::string&) { gen.coord_max_set = true; });
    c_gen->add_option("--w-max", gen.opts.w_max, "largest weight")->capture_default_str();
    c_gen->add_option("--capacity", gen.opts.capacity, "edge capacity")->capture_default_str();
    c_gen->add_option("--tau", gen.opts.tau, "travel time per unit distance")->capture_default_str();
    c_gen->add_option("--seed", gen.opts.seed, "random seed")->capture_default_str();
    c_gen->add_option("--degenerate-percent", gen.opts.degenerate_percent,
                      "chance of a fixed weight per vertex")
        ->check(CLI::Range(0, 100));
    c_gen->add_option("--out", gen.out_file, "output file (stdout if absent)");

    SolveOptArgs sopt;
    auto* c_opt = app.add_subcommand("solve-opt", "optimal k-sink plan for one scenario");
    c_opt->add_option("--instance", sopt.instance, "instance file")->required();
    c_opt->add_option("--k", sopt.k, "number of sinks")->required();
    add_scenario_options(c_opt, sopt.scenario);
    c_opt->add_option("--cost-model", sopt.cost_model, "discrete|simplified")
        ->check(CLI::IsMember({"discrete", "simplified"}))
        ->capture_default_str();
    c_opt->add_option("--out", sopt.plan_out, "plan file to write")->capture_default_str();

    SolveMmrArgs smmr;
    auto* c_mmr = app.add_subcommand("solve-mmr", "minimax-regret k-sink plan");
    c_mmr->add_option("--instance", smmr.instance, "instance file")->required();
    c_mmr->add_option("--k", smmr.k, "number of sinks")->required();
    c_mmr->add_option("--algo", smmr.algo, "dp|bs")->check(CLI::IsMember({"dp", "bs"}))->capture_default_str();
    c_mmr->add_option("--out", smmr.plan_out, "plan file to write")->capture_default_str();

    VerifyArgs ver;
    auto* c_ver = app.add_subcommand("verify", "check a plan file against brute-force references");
    c_ver->add_option("--instance", ver.instance, "instance file")->required();
    c_ver->add_option("--plan", ver.plan, "plan file")->required();
    add_scenario_options(c_ver, ver.scenario);
    c_ver->add_option("--cost-model", ver.cost_model, "discrete|simplified (evacuation plans)")
        ->check(CLI::IsMember({"discrete", "simplified"}))
        ->capture_default_str();

    BenchArgs bench;
    auto* c_bench = app.add_subcommand("bench", "timed runs, one JSON record per line");
    c_bench->add_option("--algo", bench.algo, "opt|mmr-dp|mmr-bs|biheap")
        ->check(CLI::IsMember({"opt", "mmr-dp", "mmr-bs", "biheap"}))
        ->capture_default_str();
    c_bench->add_option("--n-list", bench.n_list, "comma-separated sizes (op counts for biheap)")
        ->capture_default_str();
    c_bench->add_option("--k-list", bench.k_list, "comma-separated k values (capacity for biheap)")
        ->capture_default_str();
    c_bench->add_option("--seed", bench.seed, "first seed")->capture_default_str();
    c_bench->add_option("--reps", bench.reps, "runs per (n, k), seeds seed..seed+reps-1")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    c_bench->add_option("--w-max", bench.w_max, "largest weight")->capture_default_str();
    c_bench->add_option("--capacity", bench.capacity, "edge capacity")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : kExitUsage;
    }

    try {
        if (c_gen->parsed()) return cmd_gen(gen, out);
        if (c_opt->parsed()) return cmd_solve_opt(sopt, out);
        if (c_mmr->parsed()) return cmd_solve_mmr(smmr, out);
        if (c_ver->parsed()) return cmd_verify(ver, out);
        if (c_bench->parsed()) return cmd_bench(bench, out);
    } catch (const GuardExceeded& e) {
        err << "error: size guard exceeded: " << e.what() << "\n";
        return kExitGuard;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    return 0;
}

}  // namespace kevac::cli
