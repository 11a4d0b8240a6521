#pragma once

#include "core/flightdyn.hpp"
#include "core/types.hpp"

namespace rsm {

/// Derivatives of one aerodynamic coefficient family with respect to
/// {1, alpha, beta, p_norm, q_norm, r_norm, xi, eta, zeta}.
struct DerivSet {
    double bias = 0.0;   // C_*,0
    double alpha = 0.0;
    double beta = 0.0;
    double p = 0.0;
    double q = 0.0;
    double r = 0.0;
    double xi = 0.0;
    double eta = 0.0;
    double zeta = 0.0;

    static DerivSet constant(double value) {
        return {value, value, value, value, value, value, value, value, value};
    }
};

/// Nominal stability and control derivatives. Drag is modeled as
/// C_D0 + C_L^2/(pi e0 AR) and carries no control derivatives.
struct AeroCoefficientSet {
    DerivSet lift;   // C_L,*
    DerivSet side;   // C_Y,*
    DerivSet roll;   // C_l,*
    DerivSet pitch;  // C_m,*
    DerivSet yaw;    // C_n,*
    double drag_zero = 0.0;  // C_D,0
    // Induced-drag C_L^2 term: true (default) evaluates it with the damaged
    // lift coefficient, false with the nominal one.
    bool induced_drag_uses_damaged_cl = true;
    double cl_max = 1.5;  // stall-equivalent gate used by the trim solver
};

/// Damage description: onset time, per-derivative scaling D in [0,1]
/// (effectiveness multiplier becomes 1 - H*D), and additive asymmetric
/// coefficient biases applied after onset.
struct DamageConfig {
    double onset_time = 0.0;  // t_d [s]
    DerivSet scale_lift;      // D_L,*
    DerivSet scale_side;      // D_Y,*
    DerivSet scale_roll;      // D_l,*
    DerivSet scale_pitch;     // D_m,*
    DerivSet scale_yaw;       // D_n,*
    double asym_lift = 0.0;   // dC_L^asym
    double asym_side = 0.0;   // dC_Y^asym
    double asym_drag = 0.0;   // dC_D^asym
    double asym_roll = 0.0;   // dC_l^asym
    double asym_pitch = 0.0;  // dC_m^asym
    double asym_yaw = 0.0;    // dC_n^asym
};

/// Effective multipliers (1 - H*D) and biases (H*dC) at a given time.
struct EffectiveLambdas {
    DerivSet lift = DerivSet::constant(1.0);
    DerivSet side = DerivSet::constant(1.0);
    DerivSet roll = DerivSet::constant(1.0);
    DerivSet pitch = DerivSet::constant(1.0);
    DerivSet yaw = DerivSet::constant(1.0);
    double asym_lift = 0.0;
    double asym_side = 0.0;
    double asym_drag = 0.0;
    double asym_roll = 0.0;
    double asym_pitch = 0.0;
    double asym_yaw = 0.0;

    static EffectiveLambdas nominal() { return {}; }
};

/// Heaviside onset: H(t) = 1 for t >= t_d (right-continuous).
EffectiveLambdas damage_factors(const DamageConfig& config, double t);

struct ForceCoefficients {
    double lift = 0.0;  // C_L
    double side = 0.0;  // C_Y
    double drag = 0.0;  // C_D
};

struct MomentCoefficients {
    double roll = 0.0;   // C_l
    double pitch = 0.0;  // C_m
    double yaw = 0.0;    // C_n
};

ForceCoefficients force_coefficients(const AirdataQuantities& air, const Vec3& deflections,
                                     const EffectiveLambdas& lambdas,
                                     const AeroCoefficientSet& coeffs,
                                     const AirframeParams& params);

MomentCoefficients moment_coefficients(const AirdataQuantities& air, const Vec3& deflections,
                                       const EffectiveLambdas& lambdas,
                                       const AeroCoefficientSet& coeffs);

/// Total body force with its affine split F = f_a + f_delta * deflections
/// + f_thrust * T. The drag entry of f_a carries the full C_D (including
/// the deflection-dependent induced term), so split and direct buildup
/// agree identically.
struct ForceBuild {
    Vec3 total{Vec3::Zero()};
    Vec3 f_a{Vec3::Zero()};
    Mat3 f_delta{Mat3::Zero()};
    Vec3 f_thrust{Vec3::Zero()};
};

ForceBuild total_forces(const BodyState& state, const AirdataQuantities& air,
                        const Vec3& deflections, double thrust,
                        const EffectiveLambdas& lambdas, const AeroCoefficientSet& coeffs,
                        const AirframeParams& params);

/// Total body moment with its affine split M = m_a + m_delta * deflections.
struct MomentBuild {
    Vec3 total{Vec3::Zero()};
    Vec3 m_a{Vec3::Zero()};
    Mat3 m_delta{Mat3::Zero()};
};

MomentBuild total_moments(const AirdataQuantities& air, const Vec3& deflections,
                          const EffectiveLambdas& lambdas, const AeroCoefficientSet& coeffs,
                          const AirframeParams& params);

/// Moment split evaluated with all multipliers at 1 and all biases at 0
/// (the model the controller knows). Throws SingularityError when the
/// nominal effectiveness matrix has condition number above 1e8.
struct NominalMomentTerms {
    Vec3 m_a0{Vec3::Zero()};
    Mat3 m_delta0{Mat3::Zero()};
};

NominalMomentTerms nominal_moment_terms(const AirdataQuantities& air,
                                        const AeroCoefficientSet& coeffs,
                                        const AirframeParams& params);

/// Ground-truth uncertainty terms of the attitude error dynamics:
///   Xi   = Psi J^-1 dM_delta J Psi^-1,  dM_delta = (M_delta - M_delta0) M_delta0^-1
///   iota = Psi J^-1 dM_a + Xi (Pi + ref_acc - Lambda * rate_err)
/// Verification-harness quantity; the controller never sees it. When the
/// controller runs in increments about a trim deflection, pass that
/// deflection so dM_a includes the (M_delta - M_delta0) * delta_trim shift.
struct TrueUncertainty {
    Mat3 xi{Mat3::Zero()};
    Vec3 iota{Vec3::Zero()};
};

TrueUncertainty true_uncertainty(const BodyState& state, const AirdataQuantities& air,
                                 const EffectiveLambdas& lambdas,
                                 const AeroCoefficientSet& coeffs, const AirframeParams& params,
                                 const Mat3& lambda_gain, const AttitudeReference& refs,
                                 const Vec3& trim_deflections = Vec3::Zero());

}  // namespace rsm
