#include "misched/library.hpp"

#include <cmath>
#include <stdexcept>

namespace misched {

NetworkScenario pentagon() {
    NetworkScenario sc;
    sc.name = "pentagon";
    const int n = 5;
    sc.p_max.assign(n, 30.0);
    sc.sigma2.assign(n, 2.0);
    sc.r_min.assign(n, 1.2);
    sc.delta = 0.8;
    sc.criterion = Criterion::max_min();
    sc.explicit_gains.assign(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i) {
        sc.explicit_gains[i][i] = 1.0;
        sc.explicit_gains[i][(i + 1) % n] = 0.25;
        sc.explicit_gains[i][(i + n - 1) % n] = 0.25;
    }
    for (int i = 0; i < n; ++i) sc.explicit_edges.emplace_back(i, (i + 1) % n);
    sc.validate();
    return sc;
}

NetworkScenario three_floor() {
    NetworkScenario sc;
    sc.name = "three_floor";
    const int n = 3;
    sc.p_max.assign(n, 100.0);
    sc.sigma2.assign(n, 2.0);
    sc.r_min.assign(n, 1.2);
    sc.delta = 0.8;
    sc.criterion = Criterion::weighted_sum();
    sc.explicit_gains.assign(n, std::vector<double>(n, 0.0));
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            const int gap = std::abs(i - j);
            sc.explicit_gains[j][i] = gap == 0 ? 0.5 : (gap == 1 ? 0.25 : 0.0032);
        }
    // stacked floors 2 m apart; positions only drive the distance rule
    sc.cells.resize(n);
    for (int i = 0; i < n; ++i) {
        sc.cells[i].bs = {0.0, 0.0, 2.0 * i};
        sc.cells[i].ue = {1.0, 0.0, 2.0 * i};
    }
    sc.validate();
    return sc;
}

NetworkScenario grid3x3(double spacing, double p_max) {
    if (!(spacing > 0.0)) throw std::invalid_argument("grid spacing must be positive");
    NetworkScenario sc;
    sc.name = "grid3x3";
    const int n = 9;
    sc.p_max.assign(n, p_max);
    sc.sigma2.assign(n, 1.0);
    sc.r_min.assign(n, 0.0);
    sc.delta = 0.89;
    sc.np = 2.0;
    sc.criterion = Criterion::max_min();
    sc.cells.resize(n);
    for (int row = 0; row < 3; ++row)
        for (int col = 0; col < 3; ++col) {
            auto& c = sc.cells[row * 3 + col];
            c.bs = {col * spacing, row * spacing, 3.16};
            c.ue = {col * spacing, row * spacing, 0.0};
        }
    sc.validate();
    return sc;
}

NetworkScenario grid3x3_fading() {
    auto sc = grid3x3(4.74, 1000.0);
    sc.name = "grid3x3_fading";
    return sc;
}

NetworkScenario grid_k(int k) {
    if (k < 1) throw std::invalid_argument("grid side must be at least 1");
    NetworkScenario sc;
    sc.name = "gridk";
    const int n = k * k;
    sc.p_max.assign(n, 100.0);
    sc.sigma2.assign(n, 3.0);
    sc.r_min.assign(n, 0.1);
    sc.delta = 0.95;
    sc.np = 4.0;
    sc.criterion = Criterion::weighted_sum();
    sc.cells.resize(n);
    for (int row = 0; row < k; ++row)
        for (int col = 0; col < k; ++col) {
            auto& c = sc.cells[row * k + col];
            c.bs = {col * 5.0, row * 5.0, 1.0};
            c.ue = {col * 5.0, row * 5.0, 0.0};
        }
    sc.validate();
    return sc;
}

NetworkScenario rooms12(int ues_per_room) {
    if (ues_per_room < 1) throw std::invalid_argument("need at least one UE per room");
    NetworkScenario sc;
    sc.name = "rooms12";
    const int rooms = 12, p = ues_per_room, n = rooms * p;
    sc.p_max.assign(n, 1000.0);
    sc.sigma2.assign(n, 1.0);
    sc.r_min.assign(n, 0.05);
    sc.delta = 0.97;
    sc.np = 2.0;
    sc.wall_attenuation = std::pow(10.0, 0.25);
    sc.criterion = Criterion::max_min();
    sc.cells.resize(n);
    std::vector<int> room_of(n);
    const double step = 6.0 / (p + 1);
    for (int r = 0; r < rooms; ++r)
        for (int k = 1; k <= p; ++k) {
            const int i = r * p + (k - 1);
            room_of[i] = r;
            // each UE gets its own cell; the receiving BS is the room's FBS,
            // so same-room cells have BS distance zero
            sc.cells[i].bs = {6.0 * r, 0.0, 2.0};
            sc.cells[i].ue = {6.0 * r + k * step, 0.0, 0.0};
        }
    sc.walls.assign(n, std::vector<int>(n, 0));
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) sc.walls[j][i] = std::abs(room_of[j] - room_of[i]);
    sc.validate();
    return sc;
}

std::vector<std::string> scenario_names() {
    return {"pentagon", "three_floor", "grid3x3", "grid3x3_fading", "gridk", "rooms12"};
}

NetworkScenario make_scenario(const std::string& name, double spacing, int int_param) {
    if (name == "pentagon") return pentagon();
    if (name == "three_floor") return three_floor();
    if (name == "grid3x3") return grid3x3(spacing);
    if (name == "grid3x3_fading") return grid3x3_fading();
    if (name == "gridk") return grid_k(int_param > 0 ? int_param : 3);
    if (name == "rooms12") return rooms12(int_param > 0 ? int_param : 5);
    throw std::invalid_argument("unknown scenario '" + name + "'");
}

} // namespace misched
