#pragma once

#include <iosfwd>
#include <string>

#include "misched/scenario.hpp"

namespace misched {

/// Line-oriented key/value scenario format ('#' comments). Keys:
///   name, criterion (max_min | weighted_sum [w...]), delta, np,
///   wall_attenuation, power_levels, cells, p_max, sigma2, r_min (arrays),
///   bs x y z / ue x y z (one per cell, in order), kind (femto|macro ...),
///   gain_row (explicit gains, one row per line), wall_row, edge u v.
/// Units are fixed: mW, meters, bits/s/Hz.
NetworkScenario parse_scenario(std::istream& in);
NetworkScenario parse_scenario_string(const std::string& text);
NetworkScenario load_scenario(const std::string& path);

std::string write_scenario(const NetworkScenario& sc);

} // namespace misched
