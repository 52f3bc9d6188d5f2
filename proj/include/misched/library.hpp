#pragma once

#include <string>
#include <vector>

#include "misched/scenario.hpp"

namespace misched {

/// Built-in scenarios.
///
/// pentagon        five symmetric femtocells on a ring, explicit gains
///                 (direct 1, ring-neighbor 0.25, else 0), 30 mW, noise 2 mW,
///                 r_min 1.2, delta 0.8, max-min; explicit C5 adjacency.
/// three_floor     three stacked cells 2 m apart, explicit gains
///                 (0.5 / 0.25 / 0.0032), 100 mW, noise 2 mW, r_min 1.2,
///                 uniform weighted sum.
/// grid3x3         3x3 BS grid with spacing d, BS 3.16 m above its UE,
///                 path-loss exponent 2, 200 mW, noise 1 mW, delta 0.89,
///                 max-min.
/// grid3x3_fading  same grid at d = 4.74 with 1000 mW (fading experiments).
/// gridk           K x K grid, 5 m spacing, UE 1 m below BS, exponent 4,
///                 100 mW, noise 3 mW, r_min 0.1 (ratio-guarantee setting).
/// rooms12         12 rooms in a row, 6 m each, P UEs per room, FBS on the
///                 left wall 2 m high, wall factor 10^0.25, 1000 mW, noise
///                 1 mW, r_min 0.05, delta 0.97; co-located receiving BSs
///                 make same-room UEs mutually adjacent for every d > 0.
NetworkScenario pentagon();
NetworkScenario three_floor();
NetworkScenario grid3x3(double spacing = 4.74, double p_max = 200.0);
NetworkScenario grid3x3_fading();
NetworkScenario grid_k(int k);
NetworkScenario rooms12(int ues_per_room = 5);

std::vector<std::string> scenario_names();

/// Factory by name; "gridk" and "rooms12" use the int parameter (K and UEs
/// per room), "grid3x3" the double (spacing). Throws on unknown names.
NetworkScenario make_scenario(const std::string& name, double spacing = 4.74,
                              int int_param = 0);

} // namespace misched
