#pragma once

#include <cstdint>
#include <vector>

#include "misched/channel.hpp"
#include "misched/mis.hpp"
#include "misched/scenario.hpp"
#include "misched/target.hpp"

namespace misched {

/// Per-slot state of the non-stationary policy: the current time-share
/// weights over the MIS list. The sum stays at one; weights stay nonnegative
/// whenever delta >= min_discount.
struct SchedulerState {
    std::vector<double> alpha;
    double delta = 0.0;
    long t = 0;
    bool negative_detected = false;
    double max_sum_drift = 0.0;
};

/// One slot: pick r* = argmax alpha (lowest index on ties), transmit that
/// set, and rebalance: alpha[r*] <- (alpha[r*] - (1-delta))/delta, all others
/// divided by delta. Returns r*.
int step(SchedulerState& st);

/// Smallest integer T >= log(eps/theta_bd)/log(delta) - 1; after slots
/// 0..T the remaining gap to the target is at most eps.
long convergence_horizon(double eps, double theta_bd, double delta);

struct PolicyTrace {
    std::vector<int> selected;              // per slot: index into the MIS list
    std::vector<std::vector<double>> rates; // per slot
    std::vector<double> discounted;         // per UE
    std::vector<double> tail_bound;
    double delta = 0.0;
    long horizon = 0;
    bool negative_alpha = false;
    bool unsafe_delta = false;         // delta below min_discount
    bool decentralized_consistent = true;
};

/// Runs the argmax-weight policy from alpha*. horizon <= 0 picks the default
/// convergence horizon for eps = 1e-3. Every UE's independent replica of the
/// recursion is simulated alongside and must select identical sets.
PolicyTrace run_proposed(const TargetSolution& target, const MisSet& mis,
                         const ChannelMatrix& ch, const NetworkScenario& sc,
                         long horizon = 0);

struct CyclicSchedule {
    std::vector<int> cycle;  // MIS indices, length L
    bool nontrivial = false; // every MIS appears at least once
};

PolicyTrace run_cyclic(const CyclicSchedule& sched, const MisSet& mis,
                       const ChannelMatrix& ch, const NetworkScenario& sc, long horizon);

/// Infinite-horizon discounted value of a cyclic schedule, in closed form:
/// R_i = (1-delta)/(1-delta^L) * sum_{t<L} delta^t r_i(cycle[t]).
std::vector<double> cyclic_closed_form(const CyclicSchedule& sched, const RateMatrix& rm,
                                       double delta);

struct CyclicSearchResult {
    CyclicSchedule best;
    double value = 0.0;
    bool found = false;
    bool exhaustive = false;
    long long nontrivial_count = 0; // number of length-L schedules using every MIS
    long long evaluated = 0;
    long long feasible_count = 0;   // schedules meeting the minimum rates
};

/// Best nontrivial cyclic schedule of length L. Exhaustive when the
/// schedule space fits the budget, otherwise seeded uniform sampling
/// (rejection) of nontrivial schedules. Minimum-rate constraints are
/// enforced when the scenario has any.
CyclicSearchResult search_cyclic(const MisSet& mis, int L, const RateMatrix& rm,
                                 const NetworkScenario& sc, const Criterion& criterion,
                                 long long budget, std::uint64_t seed);

struct ConstantPowerResult {
    bool feasible = false;
    std::vector<double> profile;
    double value = 0.0;
    bool heuristic = false; // coordinate ascent instead of the full grid
    long long evaluated = 0;
};

/// Best time-invariant power profile on the per-UE grids, subject to the
/// stationary rates meeting r_min. Exhaustive when the grid product fits
/// the cap; coordinate ascent beyond it (flagged, result is a lower bound
/// and "infeasible" then only means the search found nothing).
ConstantPowerResult constant_power_search(const NetworkScenario& sc, const ChannelMatrix& ch,
                                          const Criterion& criterion, long long cap = 2'000'000);

struct ColoringBound {
    bool feasible = false;
    double value = 0.0;
    int colors = 0;
};

/// Fractional time-sharing over the color classes (members at max power):
/// an upper bound on every coloring-based TDMA or frequency-reuse policy.
ColoringBound coloring_tdma_bound(const InterferenceGraph& g, const ChannelMatrix& ch,
                                  const NetworkScenario& sc, const Criterion& criterion);

struct FadingSummary {
    double value_fixed = 0.0;    // criterion on time-averaged rates, fixed graph
    double value_reselect = 0.0; // graph re-chosen every block
    double loss = 0.0;           // (reselect - fixed) / reselect
    long blocks = 0;
    long slots = 0;
    int fixed_graph_edges = 0;
    int reselect_graph_changes = 0; // blocks where the re-chosen graph differed
};

/// Redraws Rayleigh fading every block_len slots. The "fixed" arm keeps the
/// graph chosen from path loss alone and re-solves only the target weights
/// per block; the "reselect" arm redoes the full threshold sweep per block.
FadingSummary run_fading_experiment(const NetworkScenario& sc, double beta, long block_len,
                                    long total_slots, std::uint64_t seed);

} // namespace misched
