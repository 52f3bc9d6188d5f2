#include "misched/guarantees.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "misched/simplex.hpp"

namespace misched {

WniReport check_wni(const InterferenceGraph& g, const ChannelMatrix& ch,
                    const NetworkScenario& sc, double epsilon) {
    if (epsilon < 0.0) throw std::invalid_argument("epsilon must be nonnegative");
    const int n = sc.n();
    WniReport out;
    out.epsilon = epsilon;
    out.int_max.assign(n, 0.0);
    out.pass.assign(n, 0);
    out.all_pass = true;
    out.epsilon_min = 0.0;
    for (int i = 0; i < n; ++i) {
        double acc = 0.0;
        for (int j = 0; j < n; ++j)
            if (j != i && !g.edge(i, j)) acc += ch.gain(j, i) * sc.p_max[j];
        out.int_max[i] = acc;
        const bool ok = acc <= (std::pow(2.0, epsilon) - 1.0) * ch.noise[i];
        out.pass[i] = ok;
        out.all_pass &= ok;
        out.epsilon_min = std::max(out.epsilon_min, std::log2(1.0 + acc / ch.noise[i]));
    }
    return out;
}

namespace {

// true when some convex combination of the columns weakly dominates v
bool hull_dominates(const std::vector<std::vector<double>>& cols, const std::vector<double>& v) {
    const int s = static_cast<int>(cols.size());
    const int n = static_cast<int>(v.size());
    lp::Problem prob(s + 1); // theta, t ; maximize t s.t. cols*theta - t >= v
    prob.c[s] = 1.0;
    for (int i = 0; i < n; ++i) {
        std::vector<double> row(s + 1, 0.0);
        for (int j = 0; j < s; ++j) row[j] = cols[j][i];
        row[s] = -1.0;
        prob.add(row, 1, v[i]);
    }
    {
        std::vector<double> row(s + 1, 0.0);
        for (int j = 0; j < s; ++j) row[j] = 1.0;
        prob.add(row, 0, 1.0);
    }
    const auto res = lp::solve(prob);
    if (res.status == lp::Status::Unbounded) return true;
    return res.status == lp::Status::Optimal && res.x[s] >= -1e-9;
}

} // namespace

SliReport check_sli(const InterferenceGraph& g, const ChannelMatrix& ch,
                    const NetworkScenario& sc, int levels_per_ue, long long budget) {
    if (levels_per_ue < 2) throw std::invalid_argument("need at least two power levels");
    const int n = sc.n();
    double total = 1.0;
    for (int i = 0; i < n; ++i) total *= static_cast<double>(levels_per_ue);
    if (total > static_cast<double>(budget))
        throw std::runtime_error("SLI grid exceeds the evaluation budget; coarsen the grid");

    // neighbor-only rates of the MIS profiles span the comparison hull
    const auto mis = enumerate_all_mis(g);
    const auto profiles = mis_power_profiles(mis, sc);
    std::vector<std::vector<double>> cols;
    cols.reserve(profiles.size());
    for (const auto& p : profiles) cols.push_back(neighbor_only_throughput_all(p, ch, g));

    SliReport out;
    out.levels_per_ue = levels_per_ue;

    std::vector<std::vector<double>> grids(n);
    for (int i = 0; i < n; ++i) {
        grids[i].resize(levels_per_ue);
        for (int k = 0; k < levels_per_ue; ++k)
            grids[i][k] = sc.p_max[i] * static_cast<double>(k) / (levels_per_ue - 1);
    }
    std::vector<std::size_t> idx(n, 0);
    std::vector<double> p(n, 0.0);
    while (true) {
        for (int i = 0; i < n; ++i) p[i] = grids[i][idx[i]];
        const auto v = neighbor_only_throughput_all(p, ch, g);
        ++out.profiles_checked;
        if (!hull_dominates(cols, v)) out.counterexamples.push_back(p);
        int pos = n - 1;
        while (pos >= 0 && idx[pos] + 1 == grids[pos].size()) idx[pos--] = 0;
        if (pos < 0) break;
        ++idx[pos];
    }
    out.falsified = !out.counterexamples.empty();
    return out;
}

OptimalityGapReport optimality_gap(const NetworkScenario& sc, const InterferenceGraph& g,
                                   double epsilon, int levels_per_ue) {
    if (sc.criterion.kind != CriterionKind::WeightedSum)
        throw std::invalid_argument("the gap certificate applies to weighted-sum criteria");
    const auto ch = build_channel(sc);
    const int n = sc.n();

    OptimalityGapReport out;
    out.epsilon = epsilon;
    out.wni = check_wni(g, ch, sc, epsilon);
    out.sli = check_sli(g, ch, sc, levels_per_ue);
    out.preconditions_hold = out.wni.all_pass && !out.sli.falsified;

    const auto mis = enumerate_all_mis(g);
    const auto rm = rate_matrix(mis, ch, sc);
    const auto sol = solve_targets(rm, sc.r_min, sc.criterion);
    out.achieved = sol.feasible ? sol.objective : 0.0;

    // upper bound: time-share neighbor-only rate columns over the power grid,
    // minimum rates relaxed by epsilon
    std::vector<std::vector<double>> cols;
    std::vector<std::vector<double>> grids(n);
    for (int i = 0; i < n; ++i) {
        grids[i].resize(levels_per_ue);
        for (int k = 0; k < levels_per_ue; ++k)
            grids[i][k] = sc.p_max[i] * static_cast<double>(k) / (levels_per_ue - 1);
    }
    std::vector<std::size_t> idx(n, 0);
    std::vector<double> p(n, 0.0);
    while (true) {
        for (int i = 0; i < n; ++i) p[i] = grids[i][idx[i]];
        cols.push_back(neighbor_only_throughput_all(p, ch, g));
        int pos = n - 1;
        while (pos >= 0 && idx[pos] + 1 == grids[pos].size()) idx[pos--] = 0;
        if (pos < 0) break;
        ++idx[pos];
    }
    const int s = static_cast<int>(cols.size());
    const auto w = sc.criterion.effective_weights(static_cast<std::size_t>(n));
    lp::Problem prob(s);
    for (int j = 0; j < s; ++j) {
        double cj = 0.0;
        for (int i = 0; i < n; ++i) cj += w[i] * cols[j][i];
        prob.c[j] = cj;
    }
    for (int i = 0; i < n; ++i) {
        const double bound = sc.r_min[i] - epsilon;
        if (bound <= 0.0) continue;
        std::vector<double> row(s, 0.0);
        for (int j = 0; j < s; ++j) row[j] = cols[j][i];
        prob.add(row, 1, bound);
    }
    {
        std::vector<double> row(s, 1.0);
        prob.add(row, 0, 1.0);
    }
    const auto ub = lp::solve(prob);
    out.upper_bound = ub.status == lp::Status::Optimal ? ub.objective : 0.0;
    out.bound_holds = out.achieved >= out.upper_bound - epsilon - 1e-9;
    return out;
}

RatioGuaranteeReport ratio_guarantee(const NetworkScenario& sc, const InterferenceGraph& g,
                                     double zeta, double kappa, double eta) {
    const int n = sc.n();
    for (int i = 1; i < n; ++i) {
        if (std::abs(sc.p_max[i] - sc.p_max[0]) > 1e-12 ||
            std::abs(sc.sigma2[i] - sc.sigma2[0]) > 1e-12 ||
            std::abs(sc.r_min[i] - sc.r_min[0]) > 1e-12)
            throw std::invalid_argument("heterogeneous scenario: ratio guarantee inapplicable");
    }
    if (!sc.has_geometry())
        throw std::invalid_argument("ratio guarantee needs geometry for the UE-BS distances");
    if (!(zeta > 0.0) || !(eta >= 0.0)) throw std::invalid_argument("zeta > 0 and eta >= 0 required");

    RatioGuaranteeReport out;
    out.zeta = zeta;
    out.kappa = kappa;
    out.eta = eta;
    out.rho = g.max_degree();
    out.delta_max = 0.0;
    for (const auto& c : sc.cells) out.delta_max = std::max(out.delta_max, dist(c.bs, c.ue));

    const double p = sc.p_max[0], s2 = sc.sigma2[0], rmin = sc.r_min[0];
    const double dnp = std::pow(out.delta_max, sc.np);
    const double cap_tight = std::log2(1.0 + p / (dnp * std::pow(2.0, zeta) * s2));
    const double cap_plain = std::log2(1.0 + p / (dnp * s2));

    out.term1 = rmin > 0.0 ? cap_tight / (3.0 * rmin)
                           : std::numeric_limits<double>::infinity();
    out.term2 = kappa / (zeta * (1.0 + eta)) * cap_plain;
    out.gamma = rmin > 0.0 ? 3.0 * (out.rho + 1) * rmin / cap_tight : 0.0;
    out.ratio_bound = (1.0 - out.gamma) * (1.0 - kappa) / (1.0 + eta);

    const auto ch = build_channel(sc);
    out.wni_pass = check_wni(g, ch, sc, zeta).all_pass;
    out.eligible = kappa > 0.0 && kappa < 1.0 && out.wni_pass &&
                   static_cast<double>(out.rho + 1) < std::min(out.term1, out.term2);
    return out;
}

double observed_ratio(const TargetSolution& approx, const TargetSolution& exact) {
    if (!approx.feasible || !exact.feasible)
        throw std::invalid_argument("both solutions must be feasible");
    if (!(exact.objective > 0.0))
        throw std::invalid_argument("exact optimum must be positive");
    return approx.objective / exact.objective;
}

} // namespace misched
