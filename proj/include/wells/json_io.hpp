#pragma once

#include <vector>

#include "json.hpp"
#include "wells/sweep.hpp"

namespace wells {

/// Well-pair spec:
///   {"wells": [{"center": -1.0, "half_width": 0.5, "depth": "inf"},
///              {"center":  1.0, "half_width": 0.5, "depth": 50.0}],
///    "n": 1, "hbar": 1.0, "mass": 1.0}
/// "depth" is a positive number or the string "inf"; n/hbar/mass are
/// optional and default to 1.
WellPair parse_well_pair(const nlohmann::json& j);

/// Sweep spec: {"base": <well-pair spec>, "separations": [...],
/// "depths": [...]} where depths may mix numbers and "inf".
struct SweepSpec {
  WellPair base;
  std::vector<double> separations;
  std::vector<double> depths;
};

SweepSpec parse_sweep_spec(const nlohmann::json& j);

}  // namespace wells
