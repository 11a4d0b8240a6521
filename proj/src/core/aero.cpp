#include "core/aero.hpp"

#include "core/smc.hpp"

#include <cmath>

namespace rsm {

namespace {

// lambda .* C, entrywise.
DerivSet scaled(const DerivSet& lambda, const DerivSet& c) {
    return {lambda.bias * c.bias, lambda.alpha * c.alpha, lambda.beta * c.beta,
            lambda.p * c.p,       lambda.q * c.q,         lambda.r * c.r,
            lambda.xi * c.xi,     lambda.eta * c.eta,     lambda.zeta * c.zeta};
}

// Non-control part of a coefficient family: bias/alpha/beta/rate terms plus
// the asymmetric damage bias.
double base_coefficient(const DerivSet& eff, const AirdataQuantities& air, double asym) {
    return eff.bias + eff.alpha * air.alpha + eff.beta * air.beta + eff.p * air.p_norm +
           eff.q * air.q_norm + eff.r * air.r_norm + asym;
}

double control_contribution(const DerivSet& eff, const Vec3& d) {
    return eff.xi * d[0] + eff.eta * d[1] + eff.zeta * d[2];
}

double induced_drag(double cl, const AirframeParams& params) {
    return cl * cl / (kPi * params.oswald * params.aspect_ratio);
}

}  // namespace

EffectiveLambdas damage_factors(const DamageConfig& config, double t) {
    EffectiveLambdas eff;
    if (t < config.onset_time) {
        return eff;  // H = 0: multipliers 1, biases 0
    }
    auto apply = [](const DerivSet& d) {
        return DerivSet{1.0 - d.bias, 1.0 - d.alpha, 1.0 - d.beta,
                        1.0 - d.p,    1.0 - d.q,     1.0 - d.r,
                        1.0 - d.xi,   1.0 - d.eta,   1.0 - d.zeta};
    };
    eff.lift = apply(config.scale_lift);
    eff.side = apply(config.scale_side);
    eff.roll = apply(config.scale_roll);
    eff.pitch = apply(config.scale_pitch);
    eff.yaw = apply(config.scale_yaw);
    eff.asym_lift = config.asym_lift;
    eff.asym_side = config.asym_side;
    eff.asym_drag = config.asym_drag;
    eff.asym_roll = config.asym_roll;
    eff.asym_pitch = config.asym_pitch;
    eff.asym_yaw = config.asym_yaw;
    return eff;
}

ForceCoefficients force_coefficients(const AirdataQuantities& air, const Vec3& deflections,
                                     const EffectiveLambdas& lambdas,
                                     const AeroCoefficientSet& coeffs,
                                     const AirframeParams& params) {
    const DerivSet lift_eff = scaled(lambdas.lift, coeffs.lift);
    const DerivSet side_eff = scaled(lambdas.side, coeffs.side);

    ForceCoefficients out;
    out.lift = base_coefficient(lift_eff, air, lambdas.asym_lift) +
               control_contribution(lift_eff, deflections);
    out.side = base_coefficient(side_eff, air, lambdas.asym_side) +
               control_contribution(side_eff, deflections);

    double cl_for_induced = out.lift;
    if (!coeffs.induced_drag_uses_damaged_cl) {
        cl_for_induced = base_coefficient(coeffs.lift, air, 0.0) +
                         control_contribution(coeffs.lift, deflections);
    }
    out.drag = coeffs.drag_zero + induced_drag(cl_for_induced, params) + lambdas.asym_drag;
    return out;
}

MomentCoefficients moment_coefficients(const AirdataQuantities& air, const Vec3& deflections,
                                       const EffectiveLambdas& lambdas,
                                       const AeroCoefficientSet& coeffs) {
    const DerivSet roll_eff = scaled(lambdas.roll, coeffs.roll);
    const DerivSet pitch_eff = scaled(lambdas.pitch, coeffs.pitch);
    const DerivSet yaw_eff = scaled(lambdas.yaw, coeffs.yaw);

    MomentCoefficients out;
    out.roll = base_coefficient(roll_eff, air, lambdas.asym_roll) +
               control_contribution(roll_eff, deflections);
    out.pitch = base_coefficient(pitch_eff, air, lambdas.asym_pitch) +
                control_contribution(pitch_eff, deflections);
    out.yaw = base_coefficient(yaw_eff, air, lambdas.asym_yaw) +
              control_contribution(yaw_eff, deflections);
    return out;
}

ForceBuild total_forces(const BodyState& state, const AirdataQuantities& air,
                        const Vec3& deflections, double thrust,
                        const EffectiveLambdas& lambdas, const AeroCoefficientSet& coeffs,
                        const AirframeParams& params) {
    const double phi = state.attitude[0];
    const double theta = state.attitude[1];
    const double mg = params.mass * params.gravity;
    const Vec3 grav{-std::sin(theta) * mg, std::sin(phi) * std::cos(theta) * mg,
                    std::cos(phi) * std::cos(theta) * mg};

    const Mat3 t_fa = aero_to_body(air.alpha, air.beta);
    const double qs = air.qbar * params.wing_area;
    const ForceCoefficients c = force_coefficients(air, deflections, lambdas, coeffs, params);

    const DerivSet lift_eff = scaled(lambdas.lift, coeffs.lift);
    const DerivSet side_eff = scaled(lambdas.side, coeffs.side);
    const double lift_base = c.lift - control_contribution(lift_eff, deflections);
    const double side_base = c.side - control_contribution(side_eff, deflections);

    ForceBuild out;
    out.f_a = grav + t_fa * (qs * Vec3{-c.drag, side_base, -lift_base});
    Mat3 ctrl;
    ctrl << 0.0,           0.0,           0.0,
            side_eff.xi,   side_eff.eta,  side_eff.zeta,
            -lift_eff.xi,  -lift_eff.eta, -lift_eff.zeta;
    out.f_delta = t_fa * (qs * ctrl);
    out.f_thrust = Vec3{1.0, 0.0, 0.0};
    out.total = grav + Vec3{thrust, 0.0, 0.0} + t_fa * (qs * Vec3{-c.drag, c.side, -c.lift});
    return out;
}

MomentBuild total_moments(const AirdataQuantities& air, const Vec3& deflections,
                          const EffectiveLambdas& lambdas, const AeroCoefficientSet& coeffs,
                          const AirframeParams& params) {
    const Mat3 t_fa = aero_to_body(air.alpha, air.beta);
    const double qs = air.qbar * params.wing_area;
    const double b = params.span, cbar = params.chord;

    const DerivSet roll_eff = scaled(lambdas.roll, coeffs.roll);
    const DerivSet pitch_eff = scaled(lambdas.pitch, coeffs.pitch);
    const DerivSet yaw_eff = scaled(lambdas.yaw, coeffs.yaw);

    const MomentCoefficients c = moment_coefficients(air, deflections, lambdas, coeffs);
    const double roll_base = c.roll - control_contribution(roll_eff, deflections);
    const double pitch_base = c.pitch - control_contribution(pitch_eff, deflections);
    const double yaw_base = c.yaw - control_contribution(yaw_eff, deflections);

    MomentBuild out;
    out.m_a = t_fa * (qs * Vec3{b * roll_base, cbar * pitch_base, b * yaw_base});
    Mat3 ctrl;
    ctrl << b * roll_eff.xi,     b * roll_eff.eta,     b * roll_eff.zeta,
            cbar * pitch_eff.xi, cbar * pitch_eff.eta, cbar * pitch_eff.zeta,
            b * yaw_eff.xi,      b * yaw_eff.eta,      b * yaw_eff.zeta;
    out.m_delta = t_fa * (qs * ctrl);
    out.total = t_fa * (qs * Vec3{b * c.roll, cbar * c.pitch, b * c.yaw});
    return out;
}

NominalMomentTerms nominal_moment_terms(const AirdataQuantities& air,
                                        const AeroCoefficientSet& coeffs,
                                        const AirframeParams& params) {
    const MomentBuild nominal =
        total_moments(air, Vec3::Zero(), EffectiveLambdas::nominal(), coeffs, params);

    const Eigen::JacobiSVD<Mat3> svd(nominal.m_delta);
    const double smin = svd.singularValues()(2);
    const double smax = svd.singularValues()(0);
    if (!(smin > 0.0) || smax / smin > 1e8) {
        throw SingularityError(
            "nominal control effectiveness matrix is singular or ill-conditioned (cond > 1e8)");
    }

    return {nominal.m_a, nominal.m_delta};
}

TrueUncertainty true_uncertainty(const BodyState& state, const AirdataQuantities& air,
                                 const EffectiveLambdas& lambdas,
                                 const AeroCoefficientSet& coeffs, const AirframeParams& params,
                                 const Mat3& lambda_gain, const AttitudeReference& refs,
                                 const Vec3& trim_deflections) {
    const NominalMomentTerms nominal = nominal_moment_terms(air, coeffs, params);
    const MomentBuild damaged = total_moments(air, Vec3::Zero(), lambdas, coeffs, params);

    // Both sides shifted by the trim deflection so they match what the
    // incremental controller treats as its nominal model.
    const Vec3 m_a0 = nominal.m_a0 + nominal.m_delta0 * trim_deflections;
    const Vec3 m_a = damaged.m_a + damaged.m_delta * trim_deflections;
    const Vec3 delta_m_a = m_a - m_a0;
    const Mat3 delta_m_delta =
        (damaged.m_delta - nominal.m_delta0) * nominal.m_delta0.inverse();

    const Mat3 psi = euler_rate_matrix(state.attitude, params.theta_margin);
    const Mat3 psi_jinv = psi * params.inertia_inv;

    TrueUncertainty out;
    out.xi = psi_jinv * delta_m_delta * params.inertia * psi.inverse();

    const Vec3 pi = control_pi(state, m_a0, params);
    const Vec3 att_rate = psi * state.rates;
    const Vec3 rate_err = att_rate - refs.rates;
    out.iota = psi_jinv * delta_m_a + out.xi * (pi + refs.accels - lambda_gain * rate_err);
    return out;
}

}  // namespace rsm
