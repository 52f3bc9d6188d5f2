#include "misched/scenario.hpp"

#include <cmath>
#include <stdexcept>

namespace misched {

double dist(const Vec3& a, const Vec3& b) {
    const double dx = a.x - b.x, dy = a.y - b.y, dz = a.z - b.z;
    return std::sqrt(dx * dx + dy * dy + dz * dz);
}

std::vector<double> Criterion::effective_weights(std::size_t n) const {
    if (kind == CriterionKind::MaxMin)
        throw std::logic_error("max_min criterion has no weights");
    if (weights.empty())
        return std::vector<double>(n, 1.0 / static_cast<double>(n));
    if (weights.size() != n)
        throw std::invalid_argument("criterion weight count does not match cell count");
    double sum = 0.0;
    for (double w : weights) {
        if (w < 0.0) throw std::invalid_argument("criterion weights must be nonnegative");
        sum += w;
    }
    if (sum <= 0.0) throw std::invalid_argument("criterion weights sum to zero");
    std::vector<double> out(weights);
    for (double& w : out) w /= sum;
    return out;
}

double Criterion::value(const std::vector<double>& y) const {
    if (y.empty()) throw std::invalid_argument("empty throughput vector");
    if (kind == CriterionKind::MaxMin) {
        double m = y[0];
        for (double v : y) m = std::min(m, v);
        return m;
    }
    const auto w = effective_weights(y.size());
    double s = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) s += w[i] * y[i];
    return s;
}

std::vector<double> NetworkScenario::power_grid(int i) const {
    if (power_levels < 2) throw std::invalid_argument("power_levels must be at least 2");
    std::vector<double> g(power_levels);
    for (int k = 0; k < power_levels; ++k)
        g[k] = p_max[i] * static_cast<double>(k) / (power_levels - 1);
    return g;
}

void NetworkScenario::validate() const {
    const int nn = n();
    if (nn < 1) throw std::invalid_argument("scenario needs at least one cell");
    if (static_cast<int>(sigma2.size()) != nn || static_cast<int>(r_min.size()) != nn)
        throw std::invalid_argument("p_max, sigma2 and r_min must have one entry per cell");
    for (int i = 0; i < nn; ++i) {
        if (!(p_max[i] > 0.0)) throw std::invalid_argument("p_max must be positive");
        if (!(sigma2[i] > 0.0)) throw std::invalid_argument("sigma2 must be positive");
        if (r_min[i] < 0.0) throw std::invalid_argument("r_min must be nonnegative");
        if (!std::isfinite(p_max[i]) || !std::isfinite(sigma2[i]) || !std::isfinite(r_min[i]))
            throw std::invalid_argument("scenario parameters must be finite");
    }
    if (!(delta >= 0.0 && delta < 1.0))
        throw std::invalid_argument("delta must lie in [0, 1)");
    if (!(np > 0.0)) throw std::invalid_argument("path loss exponent must be positive");
    if (wall_attenuation && !(*wall_attenuation > 0.0))
        throw std::invalid_argument("wall attenuation must be positive");

    if (!has_geometry() && !has_explicit_gains())
        throw std::invalid_argument("scenario needs geometry or an explicit gain matrix");
    if (has_geometry()) {
        if (static_cast<int>(cells.size()) != nn)
            throw std::invalid_argument("cell geometry count does not match cell count");
        for (const auto& c : cells) {
            for (double v : {c.bs.x, c.bs.y, c.bs.z, c.ue.x, c.ue.y, c.ue.z})
                if (!std::isfinite(v)) throw std::invalid_argument("positions must be finite");
            if (dist(c.bs, c.ue) <= 0.0)
                throw std::invalid_argument("degenerate geometry: UE coincides with its BS");
        }
    }
    if (has_explicit_gains()) {
        if (static_cast<int>(explicit_gains.size()) != nn)
            throw std::invalid_argument("explicit gain matrix must be square");
        for (const auto& row : explicit_gains) {
            if (static_cast<int>(row.size()) != nn)
                throw std::invalid_argument("explicit gain matrix must be square");
            for (double v : row)
                if (!(v >= 0.0) || !std::isfinite(v))
                    throw std::invalid_argument("gains must be finite and nonnegative");
        }
    }
    if (!walls.empty()) {
        if (static_cast<int>(walls.size()) != nn)
            throw std::invalid_argument("wall count matrix must be square");
        for (const auto& row : walls) {
            if (static_cast<int>(row.size()) != nn)
                throw std::invalid_argument("wall count matrix must be square");
            for (int v : row)
                if (v < 0) throw std::invalid_argument("wall counts must be nonnegative");
        }
    }
    for (const auto& [u, v] : explicit_edges) {
        if (u < 0 || v < 0 || u >= nn || v >= nn || u == v)
            throw std::invalid_argument("explicit edge endpoints out of range");
    }
    if (criterion.kind == CriterionKind::WeightedSum)
        criterion.effective_weights(static_cast<std::size_t>(nn)); // validates
}

} // namespace misched
