#include "misched/target.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "misched/simplex.hpp"

namespace misched {

std::vector<double> RateMatrix::column(int j) const {
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) out[i] = at(i, j);
    return out;
}

std::vector<double> RateMatrix::apply(const std::vector<double>& alpha) const {
    if (static_cast<int>(alpha.size()) != s)
        throw std::invalid_argument("alpha length does not match set count");
    std::vector<double> y(n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < s; ++j) y[i] += at(i, j) * alpha[j];
    return y;
}

double RateMatrix::column_norm(int j) const {
    double s2 = 0.0;
    for (int i = 0; i < n; ++i) s2 += at(i, j) * at(i, j);
    return std::sqrt(s2);
}

double RateMatrix::theta_bound() const {
    double m = 0.0;
    for (int j = 0; j < s; ++j) m = std::max(m, column_norm(j));
    return m;
}

RateMatrix rate_matrix(const MisSet& mis, const ChannelMatrix& ch, const NetworkScenario& sc) {
    if (ch.n != sc.n()) throw std::invalid_argument("channel and scenario sizes differ");
    const auto profiles = mis_power_profiles(mis, sc);
    RateMatrix rm(sc.n(), mis.size());
    for (int j = 0; j < rm.s; ++j) {
        const auto r = throughput_all(profiles[j], ch);
        for (int i = 0; i < rm.n; ++i) rm.at(i, j) = r[i];
    }
    return rm;
}

TargetSolution solve_targets(const RateMatrix& rm, const std::vector<double>& r_min,
                             const Criterion& criterion) {
    if (static_cast<int>(r_min.size()) != rm.n)
        throw std::invalid_argument("r_min length does not match UE count");

    const int s = rm.s;
    const bool maxmin = criterion.kind == CriterionKind::MaxMin;
    const int nvar = maxmin ? s + 1 : s;

    lp::Problem prob(nvar);
    if (maxmin) {
        prob.c[s] = 1.0;
        for (int i = 0; i < rm.n; ++i) {
            std::vector<double> row(nvar, 0.0);
            for (int j = 0; j < s; ++j) row[j] = rm.at(i, j);
            row[s] = -1.0;
            prob.add(row, 1, 0.0); // R alpha - t >= 0
        }
    } else {
        const auto w = criterion.effective_weights(static_cast<std::size_t>(rm.n));
        for (int j = 0; j < s; ++j) {
            double cj = 0.0;
            for (int i = 0; i < rm.n; ++i) cj += w[i] * rm.at(i, j);
            prob.c[j] = cj;
        }
    }
    for (int i = 0; i < rm.n; ++i) {
        if (r_min[i] <= 0.0) continue;
        std::vector<double> row(nvar, 0.0);
        for (int j = 0; j < s; ++j) row[j] = rm.at(i, j);
        prob.add(row, 1, r_min[i]);
    }
    {
        std::vector<double> row(nvar, 0.0);
        for (int j = 0; j < s; ++j) row[j] = 1.0;
        prob.add(row, 0, 1.0);
    }

    const auto sol = lp::solve(prob);
    TargetSolution out;
    if (sol.status != lp::Status::Optimal) {
        out.feasible = false;
        out.objective = std::numeric_limits<double>::quiet_NaN();
        return out;
    }
    out.feasible = true;
    out.alpha.assign(sol.x.begin(), sol.x.begin() + s);
    double sum = 0.0;
    for (double& a : out.alpha) {
        if (a < 0.0 && a > -1e-9) a = 0.0;
        sum += a;
    }
    if (std::abs(sum - 1.0) > 1e-9)
        throw std::runtime_error("simplex weights drifted off the simplex");
    for (double& a : out.alpha) a /= sum;
    out.y = rm.apply(out.alpha);
    out.objective = criterion.value(out.y);
    return out;
}

double min_discount(const MisSet& mis) {
    if (mis.size() < 1) throw std::invalid_argument("empty MIS set");
    if (mis.mode == MisMode::Exact) return 1.0 - 1.0 / static_cast<double>(mis.size());
    return 1.0 - 1.0 / static_cast<double>(mis.coloring_size + 1);
}

namespace {

SweepResult sweep_impl(const NetworkScenario& sc, const ChannelMatrix& ch, MisMode mode) {
    SweepResult out;
    const auto cands = candidate_thresholds(sc);
    const auto weights = max_rate_weights(ch, sc.p_max);
    const std::vector<double> no_min(sc.n(), 0.0);
    double best_obj = -std::numeric_limits<double>::infinity();

    for (double d : cands) {
        const auto g = build_graph(sc, d);
        MisSet mis = (mode == MisMode::Exact) ? enumerate_all_mis(g)
                                              : approx_mis_subset(g, weights);
        const auto rm = rate_matrix(mis, ch, sc);
        auto sol = solve_targets(rm, sc.r_min, sc.criterion);
        auto relaxed = solve_targets(rm, no_min, sc.criterion);

        SweepRow row;
        row.threshold = d;
        row.edges = g.edge_count();
        row.num_sets = mis.size();
        row.mode = mode;
        row.feasible = sol.feasible;
        row.objective = sol.feasible ? sol.objective : std::numeric_limits<double>::quiet_NaN();
        row.objective_relaxed = relaxed.feasible ? relaxed.objective
                                                 : std::numeric_limits<double>::quiet_NaN();
        out.rows.push_back(row);

        if (sol.feasible && sol.objective > best_obj) {
            best_obj = sol.objective;
            out.best = static_cast<int>(out.rows.size()) - 1;
            sol.mode = mode;
            sol.threshold = d;
            out.best_graph = g;
            out.best_mis = std::move(mis);
            out.best_solution = std::move(sol);
        }
    }
    return out;
}

} // namespace

SweepResult select_optimal_threshold(const NetworkScenario& sc, MisMode mode) {
    return sweep_impl(sc, build_channel(sc), mode);
}

SweepResult select_optimal_threshold(const NetworkScenario& sc, const ChannelMatrix& ch,
                                     MisMode mode) {
    return sweep_impl(sc, ch, mode);
}

} // namespace misched
