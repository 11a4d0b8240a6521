#pragma once

#include "core/flightdyn.hpp"
#include "core/types.hpp"

namespace rsm {

/// Sliding-mode controller configuration. `bound_xi` (B) and `bound_iota`
/// (a) are user-supplied uncertainty bounds; the verification harness
/// audits them against the ground-truth damage model.
struct SmcConfig {
    Mat3 lambda{Mat3::Identity()};       // Lambda, -Lambda must be Hurwitz
    Vec3 epsilon{Vec3::Zero()};          // reaching margins, > 0 [rad/s^2]
    Mat3 bound_xi{Mat3::Zero()};         // B_ij >= 0, B_ii < 1
    Vec3 bound_iota{Vec3::Zero()};       // a_i >= 0 [rad/s^2]
    Vec3 boundary_layer{Vec3::Zero()};   // sigma_i > 0 [rad/s]
    bool use_signum = false;             // pure switching, test-only
};

struct SlidingState {
    Vec3 s{Vec3::Zero()};         // sliding variable [rad/s]
    Vec3 att_err{Vec3::Zero()};   // wrapped attitude error [rad]
    Vec3 rate_err{Vec3::Zero()};  // attitude-rate error [rad/s]
};

/// True when -Lambda is Hurwitz, i.e. all eigenvalues of Lambda have
/// positive real part (Routh test on the characteristic polynomial).
bool lambda_admissible(const Mat3& lambda);

/// s = rate_err + Lambda * att_err, with the attitude error wrapped
/// per axis into (-pi, pi].
SlidingState sliding_variable(const Vec3& attitude, const Vec3& att_rate,
                              const Vec3& att_ref, const Vec3& rate_ref, const Mat3& lambda);

/// The comparison system of the gain bounds: D has zero diagonal and
/// off-diagonal entries B_ij/(1-B_ii); z_i = (a_i + eps_i)/(1-B_ii).
/// Throws AdmissibilityError when any B_ii >= 1.
struct UncertaintySystem {
    Mat3 d{Mat3::Zero()};
    Vec3 z{Vec3::Zero()};
};

UncertaintySystem uncertainty_system(const Mat3& bound_xi, const Vec3& bound_iota,
                                     const Vec3& epsilon);

/// Largest eigenvalue modulus of a nonnegative 3x3 matrix, from the
/// closed-form roots of the characteristic cubic.
double spectral_radius(const Mat3& d);

/// Solves (I - D) k = z by direct elimination. Requires rho(D) < 1 and
/// z >= 0; the solution is then entrywise nonnegative.
Vec3 solve_gain_bounds(const Mat3& d, const Vec3& z);

/// Feedforward term Pi = -Psi J^-1 m_a0 + Psi J^-1 (omega x J omega)
/// - Psi_dot omega.
Vec3 control_pi(const BodyState& state, const Vec3& m_a0, const AirframeParams& params);

/// Per-axis saturation: clamp(s_i / sigma_i, -1, 1).
Vec3 saturation(const Vec3& s, const Vec3& sigma);

/// Reaching term mu = ref_acc - Lambda * rate_err - K sat(s) (or K sgn(s)
/// in signum mode).
Vec3 control_mu(const Vec3& ref_acc, const Vec3& rate_err, const Vec3& s, const Vec3& gains,
                const Mat3& lambda, const Vec3& sigma, bool use_signum = false);

/// Full attitude control law: deflections = m_delta0^-1 J Psi^-1 (Pi + mu).
struct AttitudeControlOutput {
    Vec3 deflections{Vec3::Zero()};
    SlidingState sliding;
    Vec3 pi_term{Vec3::Zero()};
    Vec3 mu_term{Vec3::Zero()};
};

AttitudeControlOutput attitude_control(const BodyState& state, const AttitudeReference& refs,
                                       const Vec3& gains, const SmcConfig& cfg,
                                       const Vec3& m_a0, const Mat3& m_delta0,
                                       const AirframeParams& params);

}  // namespace rsm
