#pragma once

#include "core/types.hpp"

namespace rsm {

/// First-order jet turbine model parameters.
struct TurbineParams {
    double thrust_max = 0.0;   // [N]
    double thrust_idle = 0.0;  // [N]
    double tau = 1.0;          // spool time constant [s]
};

/// One explicit-Euler lag step toward the commanded thrust
/// T_idle + throttle * (T_max - T_idle), clamped to [T_idle, T_max].
double turbine_step(double throttle, double thrust_now, const TurbineParams& params, double dt);

}  // namespace rsm
