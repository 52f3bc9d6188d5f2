#pragma once

#include <optional>
#include <vector>

#include "misched/channel.hpp"
#include "misched/graph.hpp"
#include "misched/mis.hpp"
#include "misched/scenario.hpp"

namespace misched {

/// r(i, j) = throughput of UE i when set j transmits at max power.
struct RateMatrix {
    int n = 0; // UEs
    int s = 0; // sets
    std::vector<double> r; // row-major, r[i*s + j]

    RateMatrix() = default;
    RateMatrix(int nn, int ss) : n(nn), s(ss), r(static_cast<std::size_t>(nn) * ss, 0.0) {}

    double at(int i, int j) const { return r[static_cast<std::size_t>(i) * s + j]; }
    double& at(int i, int j) { return r[static_cast<std::size_t>(i) * s + j]; }

    std::vector<double> column(int j) const;
    std::vector<double> apply(const std::vector<double>& alpha) const; // R * alpha
    double column_norm(int j) const;
    double theta_bound() const; // max column 2-norm
};

RateMatrix rate_matrix(const MisSet& mis, const ChannelMatrix& ch, const NetworkScenario& sc);

/// Optimal target throughput y* and time-share weights alpha* of the
/// time-sharing program over the MIS rate columns. y is recomputed as
/// R*alpha rather than read from the solver.
struct TargetSolution {
    bool feasible = false;
    std::vector<double> y;
    std::vector<double> alpha;
    double objective = 0.0; // criterion value of y; meaningless when infeasible
    MisMode mode = MisMode::Exact;
    std::optional<double> threshold;
};

TargetSolution solve_targets(const RateMatrix& rm, const std::vector<double>& r_min,
                             const Criterion& criterion);

/// Smallest discount factor under which every point of the rate hull is
/// attainable: 1 - 1/s exact, 1 - 1/(C+1) approximate.
double min_discount(const MisSet& mis);

struct SweepRow {
    double threshold = 0.0;
    long edges = 0;
    int num_sets = 0;
    MisMode mode = MisMode::Exact;
    bool feasible = false;
    double objective = 0.0;         // NaN when infeasible
    double objective_relaxed = 0.0; // minimum-rate constraints dropped
};

struct SweepResult {
    std::vector<SweepRow> rows;
    int best = -1; // index into rows; -1 when every candidate is infeasible
    InterferenceGraph best_graph;
    MisSet best_mis;
    TargetSolution best_solution;
};

/// Runs the distance-threshold sweep: per candidate graph compute the MIS
/// set (per mode), solve the targets, and keep the feasible argmax.
SweepResult select_optimal_threshold(const NetworkScenario& sc, MisMode mode);
SweepResult select_optimal_threshold(const NetworkScenario& sc, const ChannelMatrix& ch,
                                     MisMode mode);

} // namespace misched
