#pragma once

#include <vector>

#include "misched/channel.hpp"
#include "misched/graph.hpp"
#include "misched/scenario.hpp"
#include "misched/target.hpp"

namespace misched {

/// Weak non-neighboring interference report. UE i passes at level eps when
/// its worst-case interference from non-neighbors stays below
/// (2^eps - 1) * sigma_i^2. epsilon_min is the exact pass/fail boundary.
struct WniReport {
    double epsilon = 0.0;
    std::vector<double> int_max; // per UE, mW
    std::vector<char> pass;
    bool all_pass = false;
    double epsilon_min = 0.0;
};

WniReport check_wni(const InterferenceGraph& g, const ChannelMatrix& ch,
                    const NetworkScenario& sc, double epsilon);

/// Strong-local-interference falsification probe: samples constant power
/// profiles on a grid and asks, per profile, whether some convex combination
/// of the MIS neighbor-only rate columns weakly dominates its neighbor-only
/// rates. A clean pass is evidence at the stated resolution, not a proof.
struct SliReport {
    int levels_per_ue = 0;
    long long profiles_checked = 0;
    std::vector<std::vector<double>> counterexamples; // undominated profiles
    bool falsified = false;
};

SliReport check_sli(const InterferenceGraph& g, const ChannelMatrix& ch,
                    const NetworkScenario& sc, int levels_per_ue,
                    long long budget = 1'000'000);

/// Certified near-optimality of the weighted-sum design on a graph with weak
/// non-neighbor interference and strong local interference: upper-bounds the
/// unrestricted optimum by time-sharing neighbor-only rate columns over the
/// power grid (constraints relaxed by eps) and checks the achieved value
/// lands within eps of it.
struct OptimalityGapReport {
    WniReport wni;
    SliReport sli;
    double epsilon = 0.0;
    double upper_bound = 0.0; // on the unrestricted optimum, at grid resolution
    double achieved = 0.0;    // W(y*) of the exact pipeline on this graph
    bool preconditions_hold = false; // wni pass and sli not falsified
    bool bound_holds = false;        // achieved >= upper_bound - epsilon
};

OptimalityGapReport optimality_gap(const NetworkScenario& sc, const InterferenceGraph& g,
                                   double epsilon, int levels_per_ue = 5);

/// Eligibility and competitive-ratio bound of the approximate (coloring +
/// max-weight) pipeline on homogeneous networks with bounded degree and
/// zeta-weak non-neighbor interference:
///   gamma      = 3(rho+1) R_min / log2(1 + p_max/(Delta^np 2^zeta sigma^2))
///   ratio      = (1-gamma)(1-kappa)/(1+eta)
/// eligible when rho+1 < min of the two slack terms and the WNI check passes.
struct RatioGuaranteeReport {
    int rho = 0;
    double zeta = 0.0, kappa = 0.0, eta = 0.0;
    double delta_max = 0.0; // max own UE-BS distance
    double term1 = 0.0;     // log2(1 + p/(D^np 2^zeta s2)) / (3 R_min)
    double term2 = 0.0;     // kappa/(zeta(1+eta)) * log2(1 + p/(D^np s2))
    double gamma = 0.0;
    double ratio_bound = 0.0;
    bool wni_pass = false;
    bool eligible = false;
};

/// Throws on heterogeneous scenarios (unequal p_max, sigma2 or r_min).
RatioGuaranteeReport ratio_guarantee(const NetworkScenario& sc, const InterferenceGraph& g,
                                     double zeta, double kappa, double eta);

/// W_approx / W_exact for two solutions of the same weighted-sum instance.
/// Throws when the exact optimum is missing or nonpositive.
double observed_ratio(const TargetSolution& approx, const TargetSolution& exact);

} // namespace misched
