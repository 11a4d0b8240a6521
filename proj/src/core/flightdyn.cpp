#include "core/flightdyn.hpp"

#include <cmath>

namespace rsm {

namespace {

void check_pitch(double theta, double theta_margin) {
    if (std::abs(theta) >= kPi / 2.0 - theta_margin) {
        throw SingularityError("euler_rate_matrix: |theta|=" + std::to_string(std::abs(theta)) +
                               " rad inside the pitch singularity guard (margin " +
                               std::to_string(theta_margin) + " rad)");
    }
}

}  // namespace

Mat3 euler_rate_matrix(const Vec3& attitude, double theta_margin) {
    const double phi = attitude[0];
    const double theta = attitude[1];
    check_pitch(theta, theta_margin);

    const double sphi = std::sin(phi), cphi = std::cos(phi);
    const double ttheta = std::tan(theta), ctheta = std::cos(theta);

    Mat3 psi;
    psi << 1.0, sphi * ttheta, cphi * ttheta,
           0.0, cphi,          -sphi,
           0.0, sphi / ctheta, cphi / ctheta;
    return psi;
}

Mat3 euler_rate_matrix_derivative(const Vec3& attitude, const Vec3& rates,
                                  double theta_margin) {
    const double phi = attitude[0];
    const double theta = attitude[1];
    check_pitch(theta, theta_margin);

    const double sphi = std::sin(phi), cphi = std::cos(phi);
    const double stheta = std::sin(theta), ctheta = std::cos(theta);
    const double ttheta = stheta / ctheta;
    const double sec2 = 1.0 / (ctheta * ctheta);

    Mat3 dpsi_dphi;
    dpsi_dphi << 0.0, cphi * ttheta,  -sphi * ttheta,
                 0.0, -sphi,          -cphi,
                 0.0, cphi / ctheta,  -sphi / ctheta;

    Mat3 dpsi_dtheta;
    dpsi_dtheta << 0.0, sphi * sec2,            cphi * sec2,
                   0.0, 0.0,                    0.0,
                   0.0, sphi * stheta * sec2,   cphi * stheta * sec2;

    const Vec3 attitude_dot = euler_rate_matrix(attitude, theta_margin) * rates;
    return dpsi_dphi * attitude_dot[0] + dpsi_dtheta * attitude_dot[1];
}

Mat3 aero_to_body(double alpha, double beta) {
    const double sa = std::sin(alpha), ca = std::cos(alpha);
    const double sb = std::sin(beta), cb = std::cos(beta);

    Mat3 t;
    t << ca * cb, -ca * sb, -sa,
         sb,      cb,       0.0,
         sa * cb, -sa * sb, ca;
    return t;
}

AirdataQuantities airdata(const Vec3& velocity, const Vec3& rates,
                          const AirframeParams& params) {
    const double u = velocity[0], v = velocity[1], w = velocity[2];

    AirdataQuantities air;
    air.v_tas = std::max(velocity.norm(), params.v_eps);
    air.alpha = std::atan2(w, u);
    air.beta = std::atan2(v, std::sqrt(u * u + w * w));
    air.qbar = 0.5 * params.air_density * air.v_tas * air.v_tas;
    air.p_norm = params.span / (2.0 * air.v_tas) * rates[0];
    air.q_norm = params.chord / (2.0 * air.v_tas) * rates[1];
    air.r_norm = params.span / (2.0 * air.v_tas) * rates[2];
    return air;
}

StateDerivative rigid_body_derivative(const BodyState& state, const Vec3& force,
                                      const Vec3& moment, const AirframeParams& params) {
    const Vec3& v = state.velocity;
    const Vec3& omega = state.rates;
    const double phi = state.attitude[0];
    const double theta = state.attitude[1];

    StateDerivative d;
    d.velocity_dot = -omega.cross(v) + force / params.mass;
    d.attitude_dot = euler_rate_matrix(state.attitude, params.theta_margin) * omega;
    d.rates_dot = params.inertia_inv * (moment - omega.cross(params.inertia * omega));
    d.altitude_dot = v[0] * std::sin(theta) - v[1] * std::sin(phi) * std::cos(theta) -
                     v[2] * std::cos(phi) * std::cos(theta);
    d.course_dot = d.attitude_dot[2];
    return d;
}

}  // namespace rsm
