#pragma once

#include "core/types.hpp"

namespace rsm {

/// Physical constants and reference geometry of the airframe.
struct AirframeParams {
    double mass = 0.0;             // [kg]
    Mat3 inertia{Mat3::Zero()};    // [kg m^2], symmetric positive definite
    Mat3 inertia_inv{Mat3::Zero()};
    double wing_area = 0.0;        // S_ref [m^2]
    double chord = 0.0;            // C_ref [m]
    double span = 0.0;             // B_ref [m]
    double air_density = 1.225;    // [kg/m^3]
    double gravity = 9.80665;      // [m/s^2]
    double oswald = 0.0;           // e0 [-]
    double aspect_ratio = 0.0;     // AR [-]
    double v_eps = 1.0;            // airspeed clamp [m/s]
    double theta_margin = 0.05;    // pitch singularity guard [rad]

    /// Recompute the cached inertia inverse; call after filling `inertia`.
    void finalize() { inertia_inv = inertia.inverse(); }
};

/// Velocity-derived air quantities plus normalized body rates.
struct AirdataQuantities {
    double v_tas = 0.0;   // true airspeed, clamped to >= v_eps [m/s]
    double alpha = 0.0;   // angle of attack [rad]
    double beta = 0.0;    // sideslip [rad]
    double qbar = 0.0;    // dynamic pressure [Pa]
    double p_norm = 0.0;  // B_ref/(2 v_tas) * p
    double q_norm = 0.0;  // C_ref/(2 v_tas) * q
    double r_norm = 0.0;  // B_ref/(2 v_tas) * r
};

/// Euler angle rate transformation matrix (Theta_dot = Psi * omega).
/// Throws SingularityError when |theta| >= pi/2 - theta_margin.
Mat3 euler_rate_matrix(const Vec3& attitude, double theta_margin);

/// Analytic time derivative of the Euler rate matrix along the trajectory
/// Theta_dot = Psi * omega (chain rule over phi and theta).
Mat3 euler_rate_matrix_derivative(const Vec3& attitude, const Vec3& rates,
                                  double theta_margin);

/// Rotation from the aerodynamic frame to the body frame.
Mat3 aero_to_body(double alpha, double beta);

/// Airspeed, flow angles, dynamic pressure and normalized rates. The
/// airspeed is clamped to v_eps so the normalized-rate and TECS divisions
/// stay finite at rest.
AirdataQuantities airdata(const Vec3& velocity, const Vec3& rates,
                          const AirframeParams& params);

/// Newton-Euler state derivative for given total body force and moment,
/// with the flat-earth altitude/course kinematics appended.
StateDerivative rigid_body_derivative(const BodyState& state, const Vec3& force,
                                      const Vec3& moment, const AirframeParams& params);

}  // namespace rsm
