#include "core/rasmc.hpp"

#include <algorithm>
#include <cmath>

namespace rsm {

AdaptiveGains adapt_gains(const AdaptiveGains& gains, const Vec3& s, const Vec3& sigma,
                          const Vec3& bound_xi_diag, double dt) {
    AdaptiveGains out = gains;
    for (int i = 0; i < 3; ++i) {
        if (gains.rate[i] <= 0.0) {
            throw ConfigError("adaptation rate gamma_" + std::to_string(i + 1) +
                              " must be positive");
        }
        if (out.k[i] < out.k_cap[i] && std::abs(s[i]) > sigma[i]) {
            const double k_dot = (1.0 - bound_xi_diag[i]) * std::abs(s[i]) / gains.rate[i];
            out.k[i] = std::min(out.k[i] + dt * k_dot, out.k_cap[i]);
        }
    }
    return out;
}

RasmcStepResult rasmc_step(const BodyState& state, const AttitudeReference& refs,
                           const AdaptiveGains& gains, const SmcConfig& cfg,
                           const Vec3& m_a0, const Mat3& m_delta0,
                           const AirframeParams& params, double dt) {
    const Mat3 psi = euler_rate_matrix(state.attitude, params.theta_margin);
    const SlidingState sliding =
        sliding_variable(state.attitude, psi * state.rates, refs.angles, refs.rates, cfg.lambda);

    RasmcStepResult out;
    out.gains = adapt_gains(gains, sliding.s, cfg.boundary_layer,
                            cfg.bound_xi.diagonal(), dt);

    const AttitudeControlOutput ctrl =
        attitude_control(state, refs, out.gains.k, cfg, m_a0, m_delta0, params);
    out.deflections = ctrl.deflections;
    out.sliding = ctrl.sliding;
    out.pi_term = ctrl.pi_term;
    out.mu_term = ctrl.mu_term;
    return out;
}

}  // namespace rsm
