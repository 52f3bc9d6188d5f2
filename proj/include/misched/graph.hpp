#pragma once

#include <string>
#include <vector>

#include "misched/scenario.hpp"

namespace misched {

/// Undirected interference graph over the cells. Irreflexive and symmetric.
/// threshold < 0 marks a graph that was supplied explicitly rather than
/// built from the BS-distance rule.
struct InterferenceGraph {
    static constexpr double kExplicit = -1.0;

    int n = 0;
    std::vector<char> adj; // n*n, symmetric, zero diagonal
    double threshold = kExplicit;

    InterferenceGraph() = default;
    explicit InterferenceGraph(int nv, double thr = kExplicit)
        : n(nv), adj(static_cast<std::size_t>(nv) * nv, 0), threshold(thr) {}

    bool edge(int u, int v) const { return adj[static_cast<std::size_t>(u) * n + v] != 0; }
    void set_edge(int u, int v);

    int degree(int v) const;
    int max_degree() const;
    std::vector<int> neighbors(int v) const;
    long edge_count() const;
    bool same_edges(const InterferenceGraph& other) const;
};

/// Distance rule: edge between u and v iff the BS-BS distance is strictly
/// below d. Requires geometry.
InterferenceGraph build_graph(const NetworkScenario& sc, double d);

/// Graph from the scenario's explicit edge list.
InterferenceGraph explicit_graph(const NetworkScenario& sc);

/// One representative threshold per distinct graph the distance rule can
/// produce: 0 plus each distinct pairwise BS distance nudged up by eps so the
/// strict comparison includes that edge. Deduplicated by edge set.
std::vector<double> candidate_thresholds(const NetworkScenario& sc, double eps = 1e-9);

/// Density d = (N+M)/H - 1 for a disjoint union of H equal-size cliques.
/// Throws when the graph is not partitioned that way.
double clique_density(const InterferenceGraph& g);

std::string to_adjacency_text(const InterferenceGraph& g);
std::string to_edge_csv(const InterferenceGraph& g);

} // namespace misched
