#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace misched {

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

double dist(const Vec3& a, const Vec3& b);

enum class CellKind { Femto, Macro };

struct CellGeometry {
    Vec3 bs;
    Vec3 ue;
    CellKind kind = CellKind::Femto;
};

enum class CriterionKind { WeightedSum, MaxMin };

/// Network performance criterion. WeightedSum with empty weights means the
/// uniform average; explicit weights are normalized to sum to one.
struct Criterion {
    CriterionKind kind = CriterionKind::MaxMin;
    std::vector<double> weights;

    static Criterion max_min() { return {CriterionKind::MaxMin, {}}; }
    static Criterion weighted_sum(std::vector<double> w = {}) {
        return {CriterionKind::WeightedSum, std::move(w)};
    }
    std::vector<double> effective_weights(std::size_t n) const;
    double value(const std::vector<double>& y) const;
};

/// A full problem instance: one UE per cell, uplink. Channel gains come
/// either from geometry (path loss over UE->BS distance, optional per-wall
/// attenuation) or from an explicit gain matrix. Adjacency for the
/// interference graph comes from BS distances or from explicit edges.
/// Units: mW, meters, bits/s/Hz.
struct NetworkScenario {
    std::string name;

    std::vector<CellGeometry> cells;                 // empty when gains explicit
    std::vector<std::vector<double>> explicit_gains; // row j: gain UE j -> BS i
    std::vector<std::vector<int>> walls;             // wall counts n_ji, optional
    std::vector<std::pair<int, int>> explicit_edges; // user-supplied adjacency

    std::vector<double> p_max;  // mW
    std::vector<double> sigma2; // mW
    std::vector<double> r_min;  // bits/s/Hz

    double delta = 0.0; // discount factor, [0,1)
    double np = 2.0;    // path loss exponent
    std::optional<double> wall_attenuation; // linear factor per wall

    Criterion criterion;
    int power_levels = 11; // grid size for constant-power baselines

    int n() const { return static_cast<int>(p_max.size()); }
    bool has_geometry() const { return !cells.empty(); }
    bool has_explicit_gains() const { return !explicit_gains.empty(); }

    /// Uniform power grid for cell i: power_levels points from 0 to p_max[i].
    std::vector<double> power_grid(int i) const;

    /// Throws std::invalid_argument when an invariant is violated.
    void validate() const;
};

} // namespace misched
