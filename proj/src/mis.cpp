#include "misched/mis.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

namespace misched {

namespace {

using Mask = std::uint64_t;

std::vector<Mask> nonneighbor_masks(const InterferenceGraph& g) {
    // row v: vertices independent of v (excluding v itself)
    const int n = g.n;
    std::vector<Mask> m(n, 0);
    for (int v = 0; v < n; ++v)
        for (int u = 0; u < n; ++u)
            if (u != v && !g.edge(v, u)) m[v] |= Mask{1} << u;
    return m;
}

std::vector<int> mask_to_set(Mask m) {
    std::vector<int> out;
    while (m) {
        const int v = std::countr_zero(m);
        out.push_back(v);
        m &= m - 1;
    }
    return out;
}

// Maximal independent sets of g are the maximal cliques of the complement;
// enumerate them with pivoting on the complement adjacency.
void enumerate_rec(const std::vector<Mask>& nb, Mask r, Mask p, Mask x,
                   std::vector<std::vector<int>>& out, long max_sets) {
    if (p == 0 && x == 0) {
        if (static_cast<long>(out.size()) >= max_sets)
            throw std::runtime_error("MIS count cap exceeded; use the approximate pipeline");
        out.push_back(mask_to_set(r));
        return;
    }
    // pivot: vertex of p|x with the most candidates among p
    Mask px = p | x;
    int pivot = -1, best = -1;
    for (Mask t = px; t; t &= t - 1) {
        const int v = std::countr_zero(t);
        const int cnt = std::popcount(p & nb[v]);
        if (cnt > best) {
            best = cnt;
            pivot = v;
        }
    }
    Mask cand = p & ~nb[pivot];
    for (Mask t = cand; t; t &= t - 1) {
        const int v = std::countr_zero(t);
        const Mask bit = Mask{1} << v;
        enumerate_rec(nb, r | bit, p & nb[v], x & nb[v], out, max_sets);
        p &= ~bit;
        x |= bit;
    }
}

} // namespace

bool is_independent(const InterferenceGraph& g, const std::vector<int>& set) {
    for (std::size_t a = 0; a < set.size(); ++a)
        for (std::size_t b = a + 1; b < set.size(); ++b)
            if (g.edge(set[a], set[b])) return false;
    return true;
}

bool is_maximal_independent(const InterferenceGraph& g, const std::vector<int>& set) {
    if (!is_independent(g, set)) return false;
    std::vector<char> in(g.n, 0);
    for (int v : set) in[v] = 1;
    for (int v = 0; v < g.n; ++v) {
        if (in[v]) continue;
        bool blocked = false;
        for (int u : set)
            if (g.edge(v, u)) {
                blocked = true;
                break;
            }
        if (!blocked) return false;
    }
    return true;
}

MisSet enumerate_all_mis(const InterferenceGraph& g, const MisLimits& limits) {
    if (g.n > limits.max_vertices)
        throw std::runtime_error("exact MIS enumeration capped at " +
                                 std::to_string(limits.max_vertices) +
                                 " vertices; use the approximate pipeline");
    if (g.n > 63) throw std::runtime_error("exact MIS enumeration supports up to 63 vertices");
    MisSet out;
    out.mode = MisMode::Exact;
    const auto nb = nonneighbor_masks(g);
    Mask all = (g.n == 63) ? ~Mask{0} >> 1 : (Mask{1} << g.n) - 1;
    enumerate_rec(nb, 0, all, 0, out.sets, limits.max_sets);
    std::sort(out.sets.begin(), out.sets.end());
    return out;
}

std::vector<int> color_graph(const InterferenceGraph& g) {
    const int n = g.n;
    // smallest-last ordering: repeatedly remove a minimum-degree vertex
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    std::vector<char> removed(n, 0);
    std::vector<int> order;
    order.reserve(n);
    for (int it = 0; it < n; ++it) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!removed[v] && (best < 0 || deg[v] < deg[best])) best = v;
        removed[best] = 1;
        order.push_back(best);
        for (int u = 0; u < n; ++u)
            if (!removed[u] && g.edge(best, u)) --deg[u];
    }
    std::reverse(order.begin(), order.end());

    std::vector<int> color(n, -1);
    std::vector<char> used;
    for (int v : order) {
        used.assign(n + 1, 0);
        for (int u = 0; u < n; ++u)
            if (g.edge(v, u) && color[u] >= 0) used[color[u]] = 1;
        int c = 0;
        while (used[c]) ++c;
        color[v] = c;
    }
    return color;
}

int color_count(const std::vector<int>& coloring) {
    int c = 0;
    for (int v : coloring) c = std::max(c, v + 1);
    return c;
}

std::vector<int> extend_to_mis(const InterferenceGraph& g, std::vector<int> independent,
                               const std::vector<double>& weights) {
    if (!is_independent(g, independent))
        throw std::invalid_argument("input set is not independent");
    if (static_cast<int>(weights.size()) != g.n)
        throw std::invalid_argument("weight count does not match vertex count");

    std::vector<char> excluded(g.n, 0);
    for (int v : independent) {
        excluded[v] = 1;
        for (int u : g.neighbors(v)) excluded[u] = 1;
    }
    while (true) {
        int pick = -1;
        for (int v = 0; v < g.n; ++v) {
            if (excluded[v]) continue;
            if (pick < 0 || weights[v] > weights[pick]) pick = v; // ties keep lowest index
        }
        if (pick < 0) break;
        independent.push_back(pick);
        excluded[pick] = 1;
        for (int u : g.neighbors(pick)) excluded[u] = 1;
    }
    std::sort(independent.begin(), independent.end());
    return independent;
}

namespace {

struct BnB {
    const std::vector<Mask>& nb;
    const std::vector<double>& w;
    Mask best_set = 0;
    double best_w = -1.0;

    void run(Mask r, double rw, Mask p) {
        if (p == 0) {
            if (rw > best_w) {
                best_w = rw;
                best_set = r;
            }
            return;
        }
        double ub = rw;
        for (Mask t = p; t; t &= t - 1) ub += w[std::countr_zero(t)];
        if (ub <= best_w) return; // first optimum found is kept
        const int v = std::countr_zero(p);
        const Mask bit = Mask{1} << v;
        run(r | bit, rw + w[v], p & nb[v]); // include v first: earliest-vertex preference
        run(r, rw, p & ~bit);
    }
};

} // namespace

MaxWeightMis approx_max_weight_mis(const InterferenceGraph& g, const std::vector<double>& weights,
                                   const MisLimits& limits) {
    if (static_cast<int>(weights.size()) != g.n)
        throw std::invalid_argument("weight count does not match vertex count");
    MaxWeightMis out;
    if (g.n <= limits.max_vertices && g.n <= 63) {
        const auto nb = nonneighbor_masks(g);
        BnB bnb{nb, weights};
        Mask all = (g.n == 63) ? ~Mask{0} >> 1 : (Mask{1} << g.n) - 1;
        bnb.run(0, 0.0, all);
        out.set = mask_to_set(bnb.best_set);
        out.eta = 0.0;
    } else {
        // greedy by descending weight with neighbor elimination
        out.set = extend_to_mis(g, {}, weights);
        out.eta = std::nullopt;
    }
    // positive weights make a maximum-weight set maximal already; keep the
    // augmentation as a guard for zero-weight vertices
    out.set = extend_to_mis(g, out.set, weights);
    out.weight = 0.0;
    for (int v : out.set) out.weight += weights[v];
    return out;
}

MisSet approx_mis_subset(const InterferenceGraph& g, const std::vector<double>& weights,
                         const MisLimits& limits) {
    const auto coloring = color_graph(g);
    const int c = color_count(coloring);
    MisSet out;
    out.mode = MisMode::Approx;
    out.coloring_size = c;
    for (int cls = 0; cls < c; ++cls) {
        std::vector<int> members;
        for (int v = 0; v < g.n; ++v)
            if (coloring[v] == cls) members.push_back(v);
        out.sets.push_back(extend_to_mis(g, members, weights));
    }
    out.sets.push_back(approx_max_weight_mis(g, weights, limits).set);
    return out;
}

std::vector<std::vector<double>> mis_power_profiles(const MisSet& mis,
                                                    const NetworkScenario& sc) {
    const int n = sc.n();
    std::vector<std::vector<double>> out;
    out.reserve(mis.sets.size());
    for (const auto& set : mis.sets) {
        if (set.empty() && n > 0)
            throw std::invalid_argument("empty set cannot be maximal on a nonempty graph");
        std::vector<double> p(n, 0.0);
        for (int v : set) p[v] = sc.p_max[v];
        out.push_back(std::move(p));
    }
    return out;
}

} // namespace misched
