#include "misched/channel.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace misched {

ChannelMatrix build_channel(const NetworkScenario& sc) {
    sc.validate();
    const int n = sc.n();
    ChannelMatrix ch(n);
    ch.noise = sc.sigma2;

    if (sc.has_explicit_gains()) {
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i) ch.gain(j, i) = sc.explicit_gains[j][i];
        return ch;
    }

    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            const double d = dist(sc.cells[j].ue, sc.cells[i].bs);
            if (d <= 0.0) throw std::invalid_argument("degenerate geometry: zero UE-BS distance");
            double wall = 1.0;
            if (sc.wall_attenuation && !sc.walls.empty())
                wall = std::pow(*sc.wall_attenuation, sc.walls[j][i]);
            ch.gain(j, i) = 1.0 / (std::pow(d, sc.np) * wall);
        }
    }
    return ch;
}

double sinr(const std::vector<double>& p, const ChannelMatrix& ch, int i) {
    double interf = 0.0;
    for (int j = 0; j < ch.n; ++j)
        if (j != i) interf += ch.gain(j, i) * p[j];
    return ch.gain(i, i) * p[i] / (interf + ch.noise[i]);
}

double throughput(const std::vector<double>& p, const ChannelMatrix& ch, int i) {
    return std::log2(1.0 + sinr(p, ch, i));
}

std::vector<double> throughput_all(const std::vector<double>& p, const ChannelMatrix& ch) {
    std::vector<double> out(ch.n);
    for (int i = 0; i < ch.n; ++i) out[i] = throughput(p, ch, i);
    return out;
}

double neighbor_only_throughput(const std::vector<double>& p, const ChannelMatrix& ch,
                                const InterferenceGraph& g, int i) {
    double interf = 0.0;
    for (int j : g.neighbors(i)) interf += ch.gain(j, i) * p[j];
    return std::log2(1.0 + ch.gain(i, i) * p[i] / (interf + ch.noise[i]));
}

std::vector<double> neighbor_only_throughput_all(const std::vector<double>& p,
                                                 const ChannelMatrix& ch,
                                                 const InterferenceGraph& g) {
    std::vector<double> out(ch.n);
    for (int i = 0; i < ch.n; ++i) out[i] = neighbor_only_throughput(p, ch, g, i);
    return out;
}

DiscountedSummary discounted_throughput(const std::vector<std::vector<double>>& rates,
                                        double delta) {
    if (rates.empty()) throw std::invalid_argument("empty rate sequence");
    if (!(delta >= 0.0 && delta < 1.0)) throw std::invalid_argument("delta must lie in [0,1)");
    const std::size_t n = rates.front().size();
    DiscountedSummary out;
    out.delta = delta;
    out.horizon = static_cast<long>(rates.size());
    out.value.assign(n, 0.0);
    std::vector<double> rmax(n, 0.0);
    double w = 1.0; // delta^t
    for (const auto& r : rates) {
        if (r.size() != n) throw std::invalid_argument("ragged rate sequence");
        for (std::size_t i = 0; i < n; ++i) {
            out.value[i] += w * r[i];
            rmax[i] = std::max(rmax[i], r[i]);
        }
        w *= delta;
    }
    for (std::size_t i = 0; i < n; ++i) out.value[i] *= (1.0 - delta);
    // w is now delta^horizon; the dropped tail is at most w * max observed rate
    out.tail_bound.assign(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) out.tail_bound[i] = w * rmax[i];
    return out;
}

namespace {

// Fixed uniform/(0,1] mapping so fading draws are bit-reproducible across
// standard libraries.
inline double u01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

} // namespace

ChannelMatrix apply_fading(const ChannelMatrix& ch, double beta, std::uint64_t seed) {
    if (!(beta > 0.0)) throw std::invalid_argument("fading scale beta must be positive");
    std::mt19937_64 rng(seed);
    ChannelMatrix out = ch;
    for (int j = 0; j < ch.n; ++j) {
        for (int i = 0; i < ch.n; ++i) {
            const double u = u01(rng);                    // in [0, 1)
            const double f = beta * std::sqrt(-2.0 * std::log1p(-u));
            out.gain(j, i) = ch.gain(j, i) * f;
        }
    }
    return out;
}

std::vector<double> max_rate_weights(const ChannelMatrix& ch, const std::vector<double>& p_max) {
    std::vector<double> w(ch.n);
    for (int i = 0; i < ch.n; ++i)
        w[i] = std::log2(1.0 + ch.gain(i, i) * p_max[i] / ch.noise[i]);
    return w;
}

} // namespace misched
