#pragma once

#include "core/smc.hpp"
#include "core/types.hpp"

namespace rsm {

/// Adaptive controller gains with their caps and per-axis adaptation rates.
/// Invariants maintained by the update law: k0 <= k <= k_cap, k never
/// decreases, and k freezes while |s_i| stays inside the boundary layer.
struct AdaptiveGains {
    Vec3 k{Vec3::Ones()};      // current gains [rad/s^2]
    Vec3 k_cap{Vec3::Zero()};  // k_d from solve_gain_bounds
    Vec3 rate{Vec3::Ones()};   // gamma_i > 0
    Vec3 k0{Vec3::Ones()};     // initial gains
};

/// Explicit-Euler step of the boundary-layer gain adaptation law:
/// k_i grows at (1 - B_ii) |s_i| / gamma_i while k_i < cap and
/// |s_i| > sigma_i, clamped to the cap; otherwise it is left untouched.
AdaptiveGains adapt_gains(const AdaptiveGains& gains, const Vec3& s, const Vec3& sigma,
                          const Vec3& bound_xi_diag, double dt);

/// One adaptive controller step: forms the sliding variable from the
/// current state, integrates the gains with it, then evaluates the control
/// law with the updated gains.
struct RasmcStepResult {
    Vec3 deflections{Vec3::Zero()};
    AdaptiveGains gains;
    SlidingState sliding;
    Vec3 pi_term{Vec3::Zero()};
    Vec3 mu_term{Vec3::Zero()};
};

RasmcStepResult rasmc_step(const BodyState& state, const AttitudeReference& refs,
                           const AdaptiveGains& gains, const SmcConfig& cfg,
                           const Vec3& m_a0, const Mat3& m_delta0,
                           const AirframeParams& params, double dt);

}  // namespace rsm
