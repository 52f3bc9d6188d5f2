#pragma once

#include <cstdint>
#include <vector>

#include "misched/graph.hpp"
#include "misched/scenario.hpp"

namespace misched {

/// Pairwise power gains plus per-receiver noise. gain(j, i) is the linear
/// power gain from UE j to BS i; noise[i] is sigma_i^2 in mW.
struct ChannelMatrix {
    int n = 0;
    std::vector<double> g;      // row-major, g[j*n + i]
    std::vector<double> noise;

    ChannelMatrix() = default;
    explicit ChannelMatrix(int nv)
        : n(nv), g(static_cast<std::size_t>(nv) * nv, 0.0), noise(nv, 0.0) {}

    double gain(int j, int i) const { return g[static_cast<std::size_t>(j) * n + i]; }
    double& gain(int j, int i) { return g[static_cast<std::size_t>(j) * n + i]; }
};

/// Gains from geometry (1 / (dist^np * wall^walls)) or the explicit matrix.
/// Throws on coincident UE/BS positions ("degenerate geometry").
ChannelMatrix build_channel(const NetworkScenario& sc);

/// Received signal over interference-plus-noise at BS i under profile p.
double sinr(const std::vector<double>& p, const ChannelMatrix& ch, int i);

/// r_i = log2(1 + sinr_i), bits/s/Hz.
double throughput(const std::vector<double>& p, const ChannelMatrix& ch, int i);
std::vector<double> throughput_all(const std::vector<double>& p, const ChannelMatrix& ch);

/// Like throughput but counting only interference from neighbors in g.
/// Never below the plain throughput.
double neighbor_only_throughput(const std::vector<double>& p, const ChannelMatrix& ch,
                                const InterferenceGraph& g, int i);
std::vector<double> neighbor_only_throughput_all(const std::vector<double>& p,
                                                 const ChannelMatrix& ch,
                                                 const InterferenceGraph& g);

struct DiscountedSummary {
    std::vector<double> value;      // (1-delta) * sum_t delta^t r_i(t)
    std::vector<double> tail_bound; // delta^T * max_t r_i(t), truncation certificate
    long horizon = 0;
    double delta = 0.0;
};

/// Discounted average of a finite per-slot rate sequence. Throws on an empty
/// sequence.
DiscountedSummary discounted_throughput(const std::vector<std::vector<double>>& rates,
                                        double delta);

/// Each gain multiplied by an independent Rayleigh(beta) draw. Deterministic
/// for a fixed seed. beta must be positive.
ChannelMatrix apply_fading(const ChannelMatrix& ch, double beta, std::uint64_t seed);

/// r_i^max: throughput of i when everyone else is silent. Used as vertex
/// weights for the approximate max-weight MIS.
std::vector<double> max_rate_weights(const ChannelMatrix& ch, const std::vector<double>& p_max);

} // namespace misched
