#include "misched/graph.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace misched {

void InterferenceGraph::set_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("self loops are not allowed");
    adj[static_cast<std::size_t>(u) * n + v] = 1;
    adj[static_cast<std::size_t>(v) * n + u] = 1;
}

int InterferenceGraph::degree(int v) const {
    int d = 0;
    for (int u = 0; u < n; ++u) d += edge(v, u) ? 1 : 0;
    return d;
}

int InterferenceGraph::max_degree() const {
    int m = 0;
    for (int v = 0; v < n; ++v) m = std::max(m, degree(v));
    return m;
}

std::vector<int> InterferenceGraph::neighbors(int v) const {
    std::vector<int> out;
    for (int u = 0; u < n; ++u)
        if (edge(v, u)) out.push_back(u);
    return out;
}

long InterferenceGraph::edge_count() const {
    long c = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) c += edge(u, v) ? 1 : 0;
    return c;
}

bool InterferenceGraph::same_edges(const InterferenceGraph& other) const {
    return n == other.n && adj == other.adj;
}

InterferenceGraph build_graph(const NetworkScenario& sc, double d) {
    if (!sc.has_geometry())
        throw std::invalid_argument("distance-rule graph needs geometry");
    if (d < 0.0) throw std::invalid_argument("threshold must be nonnegative");
    const int n = sc.n();
    InterferenceGraph g(n, d);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (dist(sc.cells[u].bs, sc.cells[v].bs) < d) g.set_edge(u, v);
    return g;
}

InterferenceGraph explicit_graph(const NetworkScenario& sc) {
    // An empty edge list is a valid edge-free graph.
    InterferenceGraph g(sc.n(), InterferenceGraph::kExplicit);
    for (const auto& [u, v] : sc.explicit_edges) g.set_edge(u, v);
    return g;
}

std::vector<double> candidate_thresholds(const NetworkScenario& sc, double eps) {
    if (!sc.has_geometry())
        throw std::invalid_argument("threshold candidates need geometry");
    const int n = sc.n();
    std::vector<double> dists;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            dists.push_back(dist(sc.cells[u].bs, sc.cells[v].bs));
    std::sort(dists.begin(), dists.end());

    std::vector<double> out{0.0};
    long prev_edges = 0;
    for (double dv : dists) {
        const double cand = dv + eps;
        const long e = build_graph(sc, cand).edge_count();
        if (e != prev_edges) { // distance rule is monotone, edge count identifies the set
            out.push_back(cand);
            prev_edges = e;
        }
    }
    return out;
}

double clique_density(const InterferenceGraph& g) {
    const int n = g.n;
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (int v = 0; v < n; ++v) {
        if (comp[v] >= 0) continue;
        std::vector<int> stack{v};
        comp[v] = ncomp;
        std::vector<int> members;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            members.push_back(u);
            for (int w = 0; w < n; ++w)
                if (g.edge(u, w) && comp[w] < 0) {
                    comp[w] = ncomp;
                    stack.push_back(w);
                }
        }
        for (std::size_t a = 0; a < members.size(); ++a)
            for (std::size_t b = a + 1; b < members.size(); ++b)
                if (!g.edge(members[a], members[b]))
                    throw std::invalid_argument("not clique-partitioned");
        ++ncomp;
    }
    std::vector<int> sizes(ncomp, 0);
    for (int v = 0; v < n; ++v) ++sizes[comp[v]];
    for (int c = 1; c < ncomp; ++c)
        if (sizes[c] != sizes[0]) throw std::invalid_argument("not clique-partitioned");
    return static_cast<double>(n) / ncomp - 1.0;
}

std::string to_adjacency_text(const InterferenceGraph& g) {
    std::ostringstream os;
    for (int v = 0; v < g.n; ++v) {
        os << v << ":";
        for (int u : g.neighbors(v)) os << ' ' << u;
        os << '\n';
    }
    return os.str();
}

std::string to_edge_csv(const InterferenceGraph& g) {
    std::ostringstream os;
    os << "u,v\n";
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (g.edge(u, v)) os << u << ',' << v << '\n';
    return os.str();
}

} // namespace misched
