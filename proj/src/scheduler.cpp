#include "misched/scheduler.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "misched/simplex.hpp"

namespace misched {

namespace {

int argmax_lowest(const std::vector<double>& a) {
    int r = 0;
    for (int j = 1; j < static_cast<int>(a.size()); ++j)
        if (a[j] > a[r]) r = j;
    return r;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// uniform integer in [0, s) without implementation-defined distributions
int uniform_index(std::mt19937_64& rng, int s) {
    const std::uint64_t su = static_cast<std::uint64_t>(s);
    const std::uint64_t lim = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % su;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= lim);
    return static_cast<int>(x % su);
}

} // namespace

int step(SchedulerState& st) {
    if (st.alpha.empty()) throw std::invalid_argument("empty weight vector");
    if (!(st.delta > 0.0 && st.delta < 1.0))
        throw std::invalid_argument("delta must lie in (0,1) to step the policy");
    const int r = argmax_lowest(st.alpha);
    const double d = st.delta;
    for (int j = 0; j < static_cast<int>(st.alpha.size()); ++j)
        st.alpha[j] = (j == r) ? (st.alpha[j] - (1.0 - d)) / d : st.alpha[j] / d;

    for (double a : st.alpha)
        if (a < -1e-9) st.negative_detected = true;

    double sum = 0.0;
    for (double a : st.alpha) sum += a;
    st.max_sum_drift = std::max(st.max_sum_drift, std::abs(sum - 1.0));
    if (std::abs(sum - 1.0) > 1e-12 && sum > 0.5)
        for (double& a : st.alpha) a /= sum; // uniform rescale keeps the argmax order
    ++st.t;
    return r;
}

long convergence_horizon(double eps, double theta_bd, double delta) {
    if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
    if (!(theta_bd > 0.0)) throw std::invalid_argument("theta bound must be positive");
    if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("delta must lie in (0,1)");
    if (eps >= theta_bd) return 0;
    const double t = std::log(eps / theta_bd) / std::log(delta) - 1.0;
    const long T = static_cast<long>(std::ceil(t - 1e-12));
    return std::max(T, 0L);
}

PolicyTrace run_proposed(const TargetSolution& target, const MisSet& mis,
                         const ChannelMatrix& ch, const NetworkScenario& sc, long horizon) {
    if (!target.feasible) throw std::invalid_argument("target solution is infeasible");
    if (static_cast<int>(target.alpha.size()) != mis.size())
        throw std::invalid_argument("target weights do not match the MIS list");

    const auto rm = rate_matrix(mis, ch, sc);
    const double delta = sc.delta;
    PolicyTrace tr;
    tr.delta = delta;
    tr.unsafe_delta = delta < min_discount(mis) - 1e-12;
    if (horizon <= 0) horizon = convergence_horizon(1e-3, rm.theta_bound(), delta) + 1;
    tr.horizon = horizon;

    SchedulerState st{target.alpha, delta};
    // every UE runs the same recursion on its own copy; selections must agree
    std::vector<SchedulerState> replicas(sc.n(), st);

    tr.selected.reserve(horizon);
    tr.rates.reserve(horizon);
    for (long t = 0; t < horizon; ++t) {
        const int r = step(st);
        for (auto& rep : replicas)
            if (step(rep) != r) tr.decentralized_consistent = false;
        tr.selected.push_back(r);
        tr.rates.push_back(rm.column(r));
    }
    tr.negative_alpha = st.negative_detected;
    const auto summary = discounted_throughput(tr.rates, delta);
    tr.discounted = summary.value;
    tr.tail_bound = summary.tail_bound;
    return tr;
}

PolicyTrace run_cyclic(const CyclicSchedule& sched, const MisSet& mis, const ChannelMatrix& ch,
                       const NetworkScenario& sc, long horizon) {
    if (sched.cycle.empty()) throw std::invalid_argument("empty cycle");
    for (int j : sched.cycle)
        if (j < 0 || j >= mis.size()) throw std::invalid_argument("cycle index out of range");
    if (horizon <= 0) throw std::invalid_argument("horizon must be positive");

    const auto rm = rate_matrix(mis, ch, sc);
    PolicyTrace tr;
    tr.delta = sc.delta;
    tr.horizon = horizon;
    const long L = static_cast<long>(sched.cycle.size());
    for (long t = 0; t < horizon; ++t) {
        const int j = sched.cycle[t % L];
        tr.selected.push_back(j);
        tr.rates.push_back(rm.column(j));
    }
    const auto summary = discounted_throughput(tr.rates, sc.delta);
    tr.discounted = summary.value;
    tr.tail_bound = summary.tail_bound;
    return tr;
}

std::vector<double> cyclic_closed_form(const CyclicSchedule& sched, const RateMatrix& rm,
                                       double delta) {
    const int L = static_cast<int>(sched.cycle.size());
    if (L == 0) throw std::invalid_argument("empty cycle");
    std::vector<double> y(rm.n, 0.0);
    double w = 1.0;
    for (int t = 0; t < L; ++t) {
        const int j = sched.cycle[t];
        for (int i = 0; i < rm.n; ++i) y[i] += w * rm.at(i, j);
        w *= delta;
    }
    const double f = (1.0 - delta) / (1.0 - std::pow(delta, L));
    for (double& v : y) v *= f;
    return y;
}

namespace {

long long surjection_count(int L, int s) {
    // number of length-L sequences over s symbols using every symbol
    long double total = 0.0L;
    long double binom = 1.0L; // C(s, k)
    for (int k = 0; k <= s; ++k) {
        const long double term = binom * std::pow(static_cast<long double>(s - k),
                                                  static_cast<long double>(L));
        total += (k % 2 == 0) ? term : -term;
        binom = binom * (s - k) / (k + 1);
    }
    if (total > 9.0e18L) return std::numeric_limits<long long>::max();
    return static_cast<long long>(std::llroundl(total));
}

} // namespace

CyclicSearchResult search_cyclic(const MisSet& mis, int L, const RateMatrix& rm,
                                 const NetworkScenario& sc, const Criterion& criterion,
                                 long long budget, std::uint64_t seed) {
    if (L < 1) throw std::invalid_argument("cycle length must be at least 1");
    const int s = mis.size();
    if (rm.s != s) throw std::invalid_argument("rate matrix does not match the MIS list");

    CyclicSearchResult out;
    out.nontrivial_count = surjection_count(L, s);

    bool enforce_min = false;
    for (double r : sc.r_min) enforce_min |= r > 0.0;

    std::vector<double> pow_delta(L);
    double w = 1.0;
    for (int t = 0; t < L; ++t) {
        pow_delta[t] = w;
        w *= sc.delta;
    }
    const double f = (1.0 - sc.delta) / (1.0 - std::pow(sc.delta, L));

    std::vector<double> y(rm.n);
    auto consider = [&](const std::vector<int>& cycle) {
        std::fill(y.begin(), y.end(), 0.0);
        for (int t = 0; t < L; ++t) {
            const int j = cycle[t];
            for (int i = 0; i < rm.n; ++i) y[i] += pow_delta[t] * rm.at(i, j);
        }
        for (double& v : y) v *= f;
        ++out.evaluated;
        if (enforce_min) {
            for (int i = 0; i < rm.n; ++i)
                if (y[i] < sc.r_min[i] - 1e-9) return;
        }
        ++out.feasible_count;
        const double v = criterion.value(y);
        if (!out.found || v > out.value) {
            out.found = true;
            out.value = v;
            out.best.cycle = cycle;
            out.best.nontrivial = true;
        }
    };

    const double space = std::pow(static_cast<double>(s), static_cast<double>(L));
    const bool exhaustive = out.nontrivial_count <= budget &&
                            space <= static_cast<double>(std::max(budget * 64, 1'000'000LL));
    out.exhaustive = exhaustive;

    if (exhaustive) {
        std::vector<int> cycle(L, 0);
        std::vector<int> seen(s, 0);
        long long surjective_seen = 0;
        while (true) {
            std::fill(seen.begin(), seen.end(), 0);
            int distinct = 0;
            for (int t = 0; t < L; ++t)
                if (!seen[cycle[t]]++) ++distinct;
            if (distinct == s) {
                ++surjective_seen;
                consider(cycle);
            }
            int pos = L - 1;
            while (pos >= 0 && cycle[pos] == s - 1) cycle[pos--] = 0;
            if (pos < 0) break;
            ++cycle[pos];
        }
        out.nontrivial_count = surjective_seen; // enumeration is the ground truth
    } else {
        std::mt19937_64 rng(splitmix64(seed));
        std::vector<int> cycle(L);
        std::vector<int> seen(s);
        long long accepted = 0;
        long long attempts = 0;
        const long long attempt_cap = std::max<long long>(budget * 512, 10'000'000LL);
        while (accepted < budget && attempts < attempt_cap) {
            ++attempts;
            std::fill(seen.begin(), seen.end(), 0);
            int distinct = 0;
            for (int t = 0; t < L; ++t) {
                cycle[t] = uniform_index(rng, s);
                if (!seen[cycle[t]]++) ++distinct;
            }
            if (distinct != s) continue;
            ++accepted;
            consider(cycle);
        }
    }
    return out;
}

ConstantPowerResult constant_power_search(const NetworkScenario& sc, const ChannelMatrix& ch,
                                          const Criterion& criterion, long long cap) {
    const int n = sc.n();
    std::vector<std::vector<double>> grids(n);
    double total = 1.0;
    for (int i = 0; i < n; ++i) {
        grids[i] = sc.power_grid(i);
        total *= static_cast<double>(grids[i].size());
    }

    ConstantPowerResult out;
    std::vector<double> p(n, 0.0);

    auto feas_slack = [&](const std::vector<double>& prof) {
        const auto r = throughput_all(prof, ch);
        double slack = std::numeric_limits<double>::infinity();
        for (int i = 0; i < n; ++i) slack = std::min(slack, r[i] - sc.r_min[i]);
        return std::pair<double, double>(slack, criterion.value(r));
    };
    auto consider = [&](const std::vector<double>& prof) {
        ++out.evaluated;
        const auto [slack, value] = feas_slack(prof);
        if (slack < -1e-9) return;
        if (!out.feasible || value > out.value) {
            out.feasible = true;
            out.value = value;
            out.profile = prof;
        }
    };

    if (total <= static_cast<double>(cap)) {
        std::vector<std::size_t> idx(n, 0);
        while (true) {
            for (int i = 0; i < n; ++i) p[i] = grids[i][idx[i]];
            consider(p);
            int pos = n - 1;
            while (pos >= 0 && idx[pos] + 1 == grids[pos].size()) idx[pos--] = 0;
            if (pos < 0) break;
            ++idx[pos];
        }
        return out;
    }

    // coordinate ascent from all-max: first chase feasibility (max min slack),
    // then improve the criterion along feasible moves
    out.heuristic = true;
    for (int i = 0; i < n; ++i) p[i] = sc.p_max[i];
    auto [slack, value] = feas_slack(p);
    ++out.evaluated;
    for (int phase = 0; phase < 2; ++phase) {
        const bool feasibility_phase = phase == 0;
        bool improved = true;
        int rounds = 0;
        while (improved && rounds++ < 60) {
            improved = false;
            for (int i = 0; i < n; ++i) {
                const double keep = p[i];
                double best_level = keep;
                for (double level : grids[i]) {
                    if (level == keep) continue;
                    p[i] = level;
                    const auto [sl, va] = feas_slack(p);
                    ++out.evaluated;
                    const bool better = feasibility_phase
                                            ? sl > slack + 1e-12
                                            : (sl >= -1e-9 && va > value + 1e-12);
                    if (better) {
                        slack = sl;
                        value = va;
                        best_level = level;
                    }
                    p[i] = keep;
                }
                if (best_level != keep) {
                    p[i] = best_level;
                    improved = true;
                }
            }
        }
        if (feasibility_phase && slack < -1e-9) return out; // nothing feasible found
    }
    if (slack >= -1e-9) {
        out.feasible = true;
        out.value = value;
        out.profile = p;
    }
    return out;
}

ColoringBound coloring_tdma_bound(const InterferenceGraph& g, const ChannelMatrix& ch,
                                  const NetworkScenario& sc, const Criterion& criterion) {
    const auto coloring = color_graph(g);
    const int c = color_count(coloring);
    MisSet classes;
    classes.mode = MisMode::Approx;
    classes.coloring_size = c;
    for (int cls = 0; cls < c; ++cls) {
        std::vector<int> members;
        for (int v = 0; v < g.n; ++v)
            if (coloring[v] == cls) members.push_back(v);
        classes.sets.push_back(std::move(members));
    }
    const auto rm = rate_matrix(classes, ch, sc);
    const auto sol = solve_targets(rm, sc.r_min, criterion);
    return {sol.feasible, sol.feasible ? sol.objective : 0.0, c};
}

FadingSummary run_fading_experiment(const NetworkScenario& sc, double beta, long block_len,
                                    long total_slots, std::uint64_t seed) {
    if (block_len < 1) throw std::invalid_argument("block length must be at least 1");
    if (total_slots < block_len) throw std::invalid_argument("need at least one block");

    const auto base = build_channel(sc);
    const MisMode mode = sc.n() <= 25 ? MisMode::Exact : MisMode::Approx;

    // candidate graphs and their MIS sets are fixed by geometry; only the
    // per-block rates change
    struct Candidate {
        InterferenceGraph graph;
        MisSet mis;
    };
    std::vector<Candidate> cands;
    for (double d : candidate_thresholds(sc)) {
        Candidate c;
        c.graph = build_graph(sc, d);
        c.mis = (mode == MisMode::Exact)
                    ? enumerate_all_mis(c.graph)
                    : approx_mis_subset(c.graph, max_rate_weights(base, sc.p_max));
        cands.push_back(std::move(c));
    }

    auto best_on = [&](const ChannelMatrix& ch) {
        int best = -1;
        double best_obj = -std::numeric_limits<double>::infinity();
        for (int k = 0; k < static_cast<int>(cands.size()); ++k) {
            const auto rm = rate_matrix(cands[k].mis, ch, sc);
            auto sol = solve_targets(rm, sc.r_min, sc.criterion);
            if (!sol.feasible) continue;
            if (sol.objective > best_obj) {
                best_obj = sol.objective;
                best = k;
            }
        }
        return best;
    };

    const int fixed_idx = best_on(base);
    if (fixed_idx < 0) throw std::runtime_error("no feasible graph under path loss");

    FadingSummary out;
    out.fixed_graph_edges = static_cast<int>(cands[fixed_idx].graph.edge_count());
    const std::vector<double> no_min(sc.n(), 0.0);

    auto block_rates = [&](int cand_idx, const ChannelMatrix& ch, std::vector<double>& acc) {
        const auto& c = cands[cand_idx];
        const auto rm = rate_matrix(c.mis, ch, sc);
        auto sol = solve_targets(rm, sc.r_min, sc.criterion);
        if (!sol.feasible) sol = solve_targets(rm, no_min, sc.criterion);
        if (!sol.feasible) return;
        SchedulerState st{sol.alpha, sc.delta};
        for (long t = 0; t < block_len; ++t) {
            const int r = step(st);
            for (int i = 0; i < sc.n(); ++i) acc[i] += rm.at(i, r);
        }
    };

    std::vector<double> acc_fixed(sc.n(), 0.0), acc_res(sc.n(), 0.0);
    const long blocks = total_slots / block_len;
    for (long b = 0; b < blocks; ++b) {
        const auto faded = apply_fading(base, beta, splitmix64(seed + 0x51ed270b * b + 1));
        block_rates(fixed_idx, faded, acc_fixed);
        int re = best_on(faded);
        if (re < 0) re = fixed_idx;
        if (!cands[re].graph.same_edges(cands[fixed_idx].graph)) ++out.reselect_graph_changes;
        block_rates(re, faded, acc_res);
    }
    out.blocks = blocks;
    out.slots = blocks * block_len;
    for (double& v : acc_fixed) v /= static_cast<double>(out.slots);
    for (double& v : acc_res) v /= static_cast<double>(out.slots);
    out.value_fixed = sc.criterion.value(acc_fixed);
    out.value_reselect = sc.criterion.value(acc_res);
    out.loss = (out.value_reselect - out.value_fixed) /
               std::max(out.value_reselect, std::numeric_limits<double>::min());
    return out;
}

} // namespace misched
