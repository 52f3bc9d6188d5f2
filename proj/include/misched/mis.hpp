#pragma once

#include <optional>
#include <vector>

#include "misched/graph.hpp"
#include "misched/scenario.hpp"

namespace misched {

enum class MisMode { Exact, Approx };

/// Ordered collection of maximal independent sets. Exact mode lists every
/// MIS of the graph in lexicographic order; approx mode lists one MIS per
/// color class followed by the (approximate) max-weight MIS, duplicates
/// retained because indices carry the time-share bookkeeping.
struct MisSet {
    std::vector<std::vector<int>> sets; // each ascending
    MisMode mode = MisMode::Exact;
    int coloring_size = 0;              // C, approx mode only

    int size() const { return static_cast<int>(sets.size()); }
};

struct MisLimits {
    int max_vertices = 25;
    long max_sets = 1'000'000;
};

bool is_independent(const InterferenceGraph& g, const std::vector<int>& set);
bool is_maximal_independent(const InterferenceGraph& g, const std::vector<int>& set);

/// Every MIS of the graph, exactly once. Throws when the vertex or output
/// cap is exceeded (use the approximate pipeline instead).
MisSet enumerate_all_mis(const InterferenceGraph& g, const MisLimits& limits = {});

/// Proper coloring by the smallest-last greedy ordering; returns vertex ->
/// color in 0..C-1. Uses at most max_degree+1 colors.
std::vector<int> color_graph(const InterferenceGraph& g);
int color_count(const std::vector<int>& coloring);

/// Greedy augmentation of an independent set to a maximal one: repeatedly add
/// the heaviest eligible vertex (lowest index on ties) and drop its
/// neighbors. Throws when the input is not independent.
std::vector<int> extend_to_mis(const InterferenceGraph& g, std::vector<int> independent,
                               const std::vector<double>& weights);

struct MaxWeightMis {
    std::vector<int> set;
    double weight = 0.0;
    std::optional<double> eta; // 0 when exact; empty when the greedy fallback ran
};

/// Max-weight MIS: exact branch and bound up to the vertex cap, greedy
/// descending-weight fallback beyond it (approximation factor unknown).
MaxWeightMis approx_max_weight_mis(const InterferenceGraph& g,
                                   const std::vector<double>& weights,
                                   const MisLimits& limits = {});

/// The polynomial-time MIS subset: one MIS per color class plus the
/// max-weight MIS appended last. The first C sets jointly cover all vertices.
MisSet approx_mis_subset(const InterferenceGraph& g, const std::vector<double>& weights,
                         const MisLimits& limits = {});

/// Power profile per set: members at p_max, everyone else silent.
std::vector<std::vector<double>> mis_power_profiles(const MisSet& mis,
                                                    const NetworkScenario& sc);

} // namespace misched
