#include "core/propulsion.hpp"

#include <algorithm>

namespace rsm {

double turbine_step(double throttle, double thrust_now, const TurbineParams& params, double dt) {
    if (params.tau <= 0.0) {
        throw ConfigError("turbine spool time constant tau must be positive");
    }
    const double cmd = params.thrust_idle + throttle * (params.thrust_max - params.thrust_idle);
    const double next = thrust_now + (dt / params.tau) * (cmd - thrust_now);
    return std::clamp(next, params.thrust_idle, params.thrust_max);
}

}  // namespace rsm
