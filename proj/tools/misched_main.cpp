// misched CLI: threshold sweeps, target solving, policy simulation, baseline
// comparisons, guarantee checks and fading experiments over the scenario
// library or scenario files.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "misched/channel.hpp"
#include "misched/graph.hpp"
#include "misched/guarantees.hpp"
#include "misched/library.hpp"
#include "misched/mis.hpp"
#include "misched/scenario_io.hpp"
#include "misched/scheduler.hpp"
#include "misched/target.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;
using namespace misched;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitInfeasible = 2;
constexpr const char* kVersion = "0.1.0";

std::string fmt9(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

struct CommonOpts {
    std::string scenario = "pentagon";
    std::string file;
    std::string out_dir;
    double spacing = 4.74;
    int int_param = 0;
    std::optional<double> delta_override;
    std::optional<std::string> criterion_override;
    bool allow_unsafe_delta = false;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--scenario", o.scenario,
                    "built-in scenario: pentagon, three_floor, grid3x3, grid3x3_fading, "
                    "gridk, rooms12");
    cmd->add_option("--file", o.file, "scenario file (overrides --scenario)");
    cmd->add_option("--spacing", o.spacing, "grid3x3 BS spacing in meters");
    cmd->add_option("--param", o.int_param, "gridk side K / rooms12 UEs per room");
    cmd->add_option("--delta", o.delta_override, "discount factor override");
    cmd->add_option("--criterion", o.criterion_override, "max_min or weighted_sum");
    cmd->add_option("--out", o.out_dir, "output directory (default ./out, or MISCHED_OUT)");
    cmd->add_flag("--allow-unsafe-delta", o.allow_unsafe_delta,
                  "permit delta below the scheduling threshold 1 - 1/s");
}

NetworkScenario load(const CommonOpts& o) {
    NetworkScenario sc = o.file.empty() ? make_scenario(o.scenario, o.spacing, o.int_param)
                                        : load_scenario(o.file);
    if (o.delta_override) sc.delta = *o.delta_override;
    if (o.criterion_override) {
        if (*o.criterion_override == "max_min") sc.criterion = Criterion::max_min();
        else if (*o.criterion_override == "weighted_sum") sc.criterion = Criterion::weighted_sum();
        else throw std::invalid_argument("unknown criterion '" + *o.criterion_override + "'");
    }
    sc.validate();
    return sc;
}

fs::path out_dir(const CommonOpts& o) {
    std::string dir = o.out_dir;
    if (dir.empty()) {
        if (const char* env = std::getenv("MISCHED_OUT")) dir = env;
        else dir = "out";
    }
    fs::create_directories(dir);
    return dir;
}

std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

void write_file(const fs::path& p, const std::string& text) {
    std::ofstream f(p);
    if (!f) throw std::runtime_error("cannot write " + p.string());
    f << text;
}

void write_manifest(const fs::path& dir, const std::string& command,
                    const NetworkScenario& sc, std::optional<std::uint64_t> seed,
                    const json& params) {
    json m;
    m["command"] = command;
    m["scenario"] = sc.name;
    m["scenario_hash"] = fnv1a64(write_scenario(sc));
    m["params"] = params;
    if (seed) m["seed"] = *seed;
    m["version"] = kVersion;
    write_file(dir / "manifest.json", m.dump(2) + "\n");
}

InterferenceGraph graph_for(const NetworkScenario& sc, std::optional<double> d) {
    if (d) return build_graph(sc, *d);
    if (!sc.explicit_edges.empty() || !sc.has_geometry()) return explicit_graph(sc);
    throw std::invalid_argument("no threshold given and no explicit adjacency");
}

// Full pipeline for one graph: MIS set, rates, targets.
struct Design {
    InterferenceGraph graph;
    MisSet mis;
    RateMatrix rates;
    TargetSolution target;
};

Design design_on_graph(const NetworkScenario& sc, const ChannelMatrix& ch,
                       const InterferenceGraph& g, MisMode mode) {
    Design d;
    d.graph = g;
    d.mis = mode == MisMode::Exact ? enumerate_all_mis(g)
                                   : approx_mis_subset(g, max_rate_weights(ch, sc.p_max));
    d.rates = rate_matrix(d.mis, ch, sc);
    d.target = solve_targets(d.rates, sc.r_min, sc.criterion);
    d.target.mode = mode;
    return d;
}

// Picks the graph: sweep when geometry exists, explicit adjacency otherwise.
Design auto_design(const NetworkScenario& sc, const ChannelMatrix& ch, MisMode mode) {
    if (sc.has_geometry()) {
        auto sweep = select_optimal_threshold(sc, ch, mode);
        if (sweep.best < 0) throw std::runtime_error("every candidate graph is infeasible");
        Design d;
        d.graph = sweep.best_graph;
        d.mis = sweep.best_mis;
        d.rates = rate_matrix(d.mis, ch, sc);
        d.target = sweep.best_solution;
        return d;
    }
    return design_on_graph(sc, ch, explicit_graph(sc), mode);
}

void check_delta(const NetworkScenario& sc, const MisSet& mis, bool allow_unsafe) {
    const double bar = min_discount(mis);
    if (sc.delta < bar - 1e-12 && !allow_unsafe)
        throw std::runtime_error("delta " + fmt9(sc.delta) + " is below the scheduling threshold " +
                                 fmt9(bar) + "; pass --allow-unsafe-delta to proceed");
}

std::string sweep_csv(const SweepResult& sw) {
    std::string s = "threshold,edges,num_sets,mode,feasible,objective,objective_relaxed\n";
    for (const auto& row : sw.rows) {
        s += fmt9(row.threshold);
        s += ',' + std::to_string(row.edges);
        s += ',' + std::to_string(row.num_sets);
        s += std::string(",") + (row.mode == MisMode::Exact ? "exact" : "approx");
        s += std::string(",") + (row.feasible ? "yes" : "no");
        s += ',' + (row.feasible ? fmt9(row.objective) : std::string("nan"));
        s += ',' + fmt9(row.objective_relaxed);
        s += '\n';
    }
    return s;
}

json target_json(const TargetSolution& t) {
    json j;
    j["feasible"] = t.feasible;
    if (t.feasible) {
        j["objective"] = t.objective;
        j["y"] = t.y;
        j["alpha"] = t.alpha;
    }
    if (t.threshold) j["threshold"] = *t.threshold;
    j["mode"] = t.mode == MisMode::Exact ? "exact" : "approx";
    return j;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"interference-graph MIS scheduling toolkit"};
    app.require_subcommand(1);

    CommonOpts o;
    std::string mode_str = "exact";
    std::optional<double> thr;
    long horizon = 0;
    std::vector<int> cyclic_lengths{5, 7};
    long long budget = 1'000'000;
    std::optional<std::uint64_t> seed;
    double epsilon = 0.2, zeta = 0.15, kappa = 0.17, eta = 0.1;
    int sli_levels = 5;
    double beta = 0.1;
    long block_len = 50, total_slots = 10'000;

    auto* cmd_graph = app.add_subcommand("build-graph", "write the interference graph for a threshold");
    add_common(cmd_graph, o);
    cmd_graph->add_option("--d", thr, "distance threshold in meters");

    auto* cmd_sweep = app.add_subcommand("sweep-thresholds", "per-candidate table over all thresholds");
    add_common(cmd_sweep, o);
    cmd_sweep->add_option("--mode", mode_str, "exact or approx");

    auto* cmd_solve = app.add_subcommand("solve-targets", "optimal target throughput and weights");
    add_common(cmd_solve, o);
    cmd_solve->add_option("--d", thr, "distance threshold (default: sweep for the best)");
    cmd_solve->add_option("--mode", mode_str, "exact or approx");

    auto* cmd_sim = app.add_subcommand("simulate", "run the non-stationary policy and export the trace");
    add_common(cmd_sim, o);
    cmd_sim->add_option("--d", thr, "distance threshold (default: sweep for the best)");
    cmd_sim->add_option("--mode", mode_str, "exact or approx");
    cmd_sim->add_option("--horizon", horizon, "slots to simulate (default: convergence horizon)");

    auto* cmd_cmp = app.add_subcommand("compare-baselines",
                                       "proposed vs cyclic, coloring bound and constant power");
    add_common(cmd_cmp, o);
    cmd_cmp->add_option("--d", thr, "distance threshold (default: sweep for the best)");
    cmd_cmp->add_option("--mode", mode_str, "exact or approx");
    cmd_cmp->add_option("--cyclic-lengths", cyclic_lengths, "cycle lengths to search");
    cmd_cmp->add_option("--budget", budget, "schedule-search budget");
    cmd_cmp->add_option("--seed", seed, "master seed (required)")->required();

    auto* cmd_guar = app.add_subcommand("check-guarantees",
                                        "interference-level and competitive-ratio checks");
    add_common(cmd_guar, o);
    cmd_guar->add_option("--d", thr, "distance threshold (default: sweep for the best)");
    cmd_guar->add_option("--epsilon", epsilon, "weak-interference level to test");
    cmd_guar->add_option("--zeta", zeta, "ratio-guarantee interference level");
    cmd_guar->add_option("--kappa", kappa, "ratio-guarantee slack in (0,1)");
    cmd_guar->add_option("--eta", eta, "max-weight approximation factor");
    cmd_guar->add_option("--sli-levels", sli_levels, "power levels per UE for the SLI probe");

    auto* cmd_fade = app.add_subcommand("fading-experiment",
                                        "fixed graph vs per-block reselection under fading");
    add_common(cmd_fade, o);
    cmd_fade->add_option("--beta", beta, "Rayleigh scale");
    cmd_fade->add_option("--block-len", block_len, "slots per fading block");
    cmd_fade->add_option("--slots", total_slots, "total slots");
    cmd_fade->add_option("--seed", seed, "master seed (required)")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        const auto sc = load(o);
        const auto ch = build_channel(sc);
        const auto dir = out_dir(o);
        const MisMode mode = mode_str == "approx" ? MisMode::Approx : MisMode::Exact;

        if (cmd_graph->parsed()) {
            const auto g = graph_for(sc, thr);
            write_file(dir / "graph_edges.csv", to_edge_csv(g));
            write_file(dir / "graph_adjacency.txt", to_adjacency_text(g));
            write_manifest(dir, "build-graph", sc, seed,
                           {{"d", thr ? json(*thr) : json(nullptr)}});
            std::cout << "vertices " << g.n << " edges " << g.edge_count() << " max_degree "
                      << g.max_degree() << "\n"
                      << to_adjacency_text(g);
            return kExitOk;
        }

        if (cmd_sweep->parsed()) {
            const auto sw = select_optimal_threshold(sc, ch, mode);
            write_file(dir / "sweep.csv", sweep_csv(sw));
            write_manifest(dir, "sweep-thresholds", sc, seed, {{"mode", mode_str}});
            std::cout << sweep_csv(sw);
            if (sw.best < 0) {
                std::cerr << "every candidate graph is infeasible\n";
                return kExitInfeasible;
            }
            std::cout << "best threshold " << fmt9(sw.rows[sw.best].threshold) << " objective "
                      << fmt9(sw.rows[sw.best].objective) << "\n";
            return kExitOk;
        }

        if (cmd_solve->parsed()) {
            Design d = thr.has_value() || !sc.has_geometry()
                           ? design_on_graph(sc, ch, graph_for(sc, thr), mode)
                           : auto_design(sc, ch, mode);
            write_manifest(dir, "solve-targets", sc, seed,
                           {{"mode", mode_str}, {"d", thr ? json(*thr) : json(nullptr)}});
            write_file(dir / "targets.json", target_json(d.target).dump(2) + "\n");
            std::cout << target_json(d.target).dump(2) << "\n";
            return d.target.feasible ? kExitOk : kExitInfeasible;
        }

        if (cmd_sim->parsed()) {
            Design d = thr.has_value() || !sc.has_geometry()
                           ? design_on_graph(sc, ch, graph_for(sc, thr), mode)
                           : auto_design(sc, ch, mode);
            if (!d.target.feasible) {
                std::cerr << "targets infeasible\n";
                return kExitInfeasible;
            }
            check_delta(sc, d.mis, o.allow_unsafe_delta);
            const auto tr = run_proposed(d.target, d.mis, ch, sc, horizon);
            std::string csv = "t,selected_mis";
            for (int i = 0; i < sc.n(); ++i) csv += ",rate_" + std::to_string(i);
            csv += '\n';
            for (long t = 0; t < tr.horizon; ++t) {
                csv += std::to_string(t) + ',' + std::to_string(tr.selected[t]);
                for (double r : tr.rates[t]) csv += ',' + fmt9(r);
                csv += '\n';
            }
            write_file(dir / "trace.csv", csv);
            json s;
            s["discounted"] = tr.discounted;
            s["tail_bound"] = tr.tail_bound;
            s["horizon"] = tr.horizon;
            s["delta"] = tr.delta;
            s["decentralized_consistent"] = tr.decentralized_consistent;
            s["negative_alpha"] = tr.negative_alpha;
            s["target"] = target_json(d.target);
            write_file(dir / "summary.json", s.dump(2) + "\n");
            write_manifest(dir, "simulate", sc, seed, {{"horizon", tr.horizon}});
            std::cout << "discounted throughput per UE:";
            for (double v : tr.discounted) std::cout << ' ' << fmt9(v);
            std::cout << "\n";
            return kExitOk;
        }

        if (cmd_cmp->parsed()) {
            Design d = thr.has_value() || !sc.has_geometry()
                           ? design_on_graph(sc, ch, graph_for(sc, thr), mode)
                           : auto_design(sc, ch, mode);
            if (!d.target.feasible) {
                std::cerr << "targets infeasible on the selected graph\n";
                return kExitInfeasible;
            }
            check_delta(sc, d.mis, o.allow_unsafe_delta);
            std::string csv = "policy,value,detail\n";
            const auto tr = run_proposed(d.target, d.mis, ch, sc, 0);
            const double proposed = sc.criterion.value(tr.discounted);
            csv += "proposed," + fmt9(proposed) + ",horizon=" + std::to_string(tr.horizon) + '\n';
            std::cout << "proposed                 " << fmt9(proposed) << "\n";
            for (int L : cyclic_lengths) {
                const auto cs = search_cyclic(d.mis, L, d.rates, sc, sc.criterion, budget, *seed);
                const std::string detail = std::string(cs.exhaustive ? "exhaustive" : "sampled") +
                                           ";nontrivial=" + std::to_string(cs.nontrivial_count);
                csv += "cyclic_L" + std::to_string(L) + ',' +
                       (cs.found ? fmt9(cs.value) : std::string("nan")) + ',' + detail + '\n';
                std::cout << "cyclic L=" << L << "              "
                          << (cs.found ? fmt9(cs.value) : std::string("infeasible")) << " ("
                          << detail << ")\n";
            }
            const auto cb = coloring_tdma_bound(d.graph, ch, sc, sc.criterion);
            csv += std::string("coloring_bound,") + (cb.feasible ? fmt9(cb.value) : "nan") +
                   ",colors=" + std::to_string(cb.colors) + '\n';
            std::cout << "coloring TDMA bound      "
                      << (cb.feasible ? fmt9(cb.value) : std::string("infeasible")) << "\n";
            const auto cp = constant_power_search(sc, ch, sc.criterion);
            csv += std::string("constant_power,") + (cp.feasible ? fmt9(cp.value) : "nan") + ',' +
                   (cp.heuristic ? "heuristic" : "exhaustive") + '\n';
            std::cout << "constant power           "
                      << (cp.feasible ? fmt9(cp.value) : std::string("infeasible")) << " ("
                      << (cp.heuristic ? "heuristic" : "exhaustive") << ")\n";
            write_file(dir / "baselines.csv", csv);
            write_manifest(dir, "compare-baselines", sc, seed,
                           {{"budget", budget}, {"lengths", cyclic_lengths}});
            return kExitOk;
        }

        if (cmd_guar->parsed()) {
            Design d = thr.has_value() || !sc.has_geometry()
                           ? design_on_graph(sc, ch, graph_for(sc, thr), MisMode::Exact)
                           : auto_design(sc, ch, MisMode::Exact);
            json out;
            const auto wni = check_wni(d.graph, ch, sc, epsilon);
            out["wni"] = {{"epsilon", epsilon},
                          {"pass", wni.all_pass},
                          {"epsilon_min", wni.epsilon_min},
                          {"int_max", wni.int_max}};
            std::cout << "weak non-neighbor interference at eps=" << fmt9(epsilon) << ": "
                      << (wni.all_pass ? "pass" : "FAIL") << " (boundary eps_min="
                      << fmt9(wni.epsilon_min) << ")\n";
            if (sc.n() <= 12) {
                const auto sli = check_sli(d.graph, ch, sc, sli_levels);
                out["sli"] = {{"levels", sli.levels_per_ue},
                              {"falsified", sli.falsified},
                              {"profiles_checked", sli.profiles_checked},
                              {"counterexamples", sli.counterexamples.size()}};
                std::cout << "strong local interference probe: "
                          << (sli.falsified ? "FALSIFIED" : "not falsified") << " at "
                          << sli_levels << " levels/UE\n";
                if (sc.criterion.kind == CriterionKind::WeightedSum) {
                    const auto gap = optimality_gap(sc, d.graph, epsilon, sli_levels);
                    out["optimality_gap"] = {{"upper_bound", gap.upper_bound},
                                             {"achieved", gap.achieved},
                                             {"preconditions_hold", gap.preconditions_hold},
                                             {"bound_holds", gap.bound_holds}};
                    std::cout << "optimality gap: achieved " << fmt9(gap.achieved)
                              << " vs upper bound " << fmt9(gap.upper_bound) << " -> "
                              << (gap.bound_holds ? "within eps" : "OUTSIDE eps") << "\n";
                }
            }
            try {
                const auto rg = ratio_guarantee(sc, d.graph, zeta, kappa, eta);
                out["ratio_guarantee"] = {{"rho", rg.rho},
                                          {"gamma", rg.gamma},
                                          {"ratio_bound", rg.ratio_bound},
                                          {"eligible", rg.eligible},
                                          {"wni_pass", rg.wni_pass}};
                std::cout << "competitive ratio bound: " << fmt9(rg.ratio_bound)
                          << " (gamma=" << fmt9(rg.gamma) << ", "
                          << (rg.eligible ? "eligible" : "NOT eligible") << ")\n";
            } catch (const std::exception& e) {
                out["ratio_guarantee"] = {{"error", e.what()}};
                std::cout << "competitive ratio bound: skipped (" << e.what() << ")\n";
            }
            write_file(dir / "guarantees.json", out.dump(2) + "\n");
            write_manifest(dir, "check-guarantees", sc, seed,
                           {{"epsilon", epsilon}, {"zeta", zeta}, {"kappa", kappa}, {"eta", eta}});
            return kExitOk;
        }

        if (cmd_fade->parsed()) {
            const auto summary = run_fading_experiment(sc, beta, block_len, total_slots, *seed);
            json out;
            out["value_fixed"] = summary.value_fixed;
            out["value_reselect"] = summary.value_reselect;
            out["loss"] = summary.loss;
            out["blocks"] = summary.blocks;
            out["fixed_graph_edges"] = summary.fixed_graph_edges;
            out["reselect_graph_changes"] = summary.reselect_graph_changes;
            write_file(dir / "fading.json", out.dump(2) + "\n");
            std::string csv = "beta,block_len,slots,value_fixed,value_reselect,loss\n";
            csv += fmt9(beta) + ',' + std::to_string(block_len) + ',' +
                   std::to_string(summary.slots) + ',' + fmt9(summary.value_fixed) + ',' +
                   fmt9(summary.value_reselect) + ',' + fmt9(summary.loss) + '\n';
            write_file(dir / "fading.csv", csv);
            write_manifest(dir, "fading-experiment", sc, seed,
                           {{"beta", beta}, {"block_len", block_len}, {"slots", total_slots}});
            std::cout << "fixed-graph value " << fmt9(summary.value_fixed) << ", reselect "
                      << fmt9(summary.value_reselect) << ", loss " << fmt9(summary.loss) << "\n";
            return kExitOk;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
