#include "core/smc.hpp"

#include <algorithm>
#include <cmath>

namespace rsm {

namespace {

// Largest root modulus of x^3 + a x^2 + b x + c.
double cubic_max_modulus(double a, double b, double c) {
    const double p = b - a * a / 3.0;
    const double q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;
    const double shift = -a / 3.0;
    const double disc = q * q / 4.0 + p * p * p / 27.0;

    if (disc > 0.0) {
        // One real root, one complex-conjugate pair.
        const double sq = std::sqrt(disc);
        const double t1 = std::cbrt(-q / 2.0 + sq) + std::cbrt(-q / 2.0 - sq);
        const double real_root = t1 + shift;
        if (t1 == 0.0) {
            // q == 0 and p > 0: pair is +-i sqrt(p).
            return std::max(std::abs(real_root), std::hypot(shift, std::sqrt(p)));
        }
        const double re = -t1 / 2.0 + shift;
        const double im2 = std::max(0.0, -q / t1 - t1 * t1 / 4.0);
        const double pair_mod = std::sqrt(re * re + im2);
        return std::max(std::abs(real_root), pair_mod);
    }

    // Three real roots (trigonometric form).
    if (p >= 0.0) {
        // disc <= 0 with p >= 0 forces p ~ q ~ 0: triple root at the shift.
        return std::abs(shift);
    }
    const double m = 2.0 * std::sqrt(-p / 3.0);
    const double arg = std::clamp(3.0 * q / (p * m), -1.0, 1.0);
    const double theta = std::acos(arg) / 3.0;
    double worst = 0.0;
    for (int k = 0; k < 3; ++k) {
        const double root = m * std::cos(theta - 2.0 * kPi * k / 3.0) + shift;
        worst = std::max(worst, std::abs(root));
    }
    return worst;
}

}  // namespace

bool lambda_admissible(const Mat3& lambda) {
    // char(-Lambda): mu^3 + tr(L) mu^2 + m2(L) mu + det(L); Routh: all
    // coefficients positive and a2*a1 > a0.
    const double a2 = lambda.trace();
    const double m2 = lambda(0, 0) * lambda(1, 1) - lambda(0, 1) * lambda(1, 0) +
                      lambda(0, 0) * lambda(2, 2) - lambda(0, 2) * lambda(2, 0) +
                      lambda(1, 1) * lambda(2, 2) - lambda(1, 2) * lambda(2, 1);
    const double a0 = lambda.determinant();
    return a2 > 0.0 && m2 > 0.0 && a0 > 0.0 && a2 * m2 > a0;
}

SlidingState sliding_variable(const Vec3& attitude, const Vec3& att_rate,
                              const Vec3& att_ref, const Vec3& rate_ref, const Mat3& lambda) {
    SlidingState out;
    out.att_err = wrap_pi(attitude - att_ref);
    out.rate_err = att_rate - rate_ref;
    out.s = out.rate_err + lambda * out.att_err;
    return out;
}

UncertaintySystem uncertainty_system(const Mat3& bound_xi, const Vec3& bound_iota,
                                     const Vec3& epsilon) {
    UncertaintySystem out;
    for (int i = 0; i < 3; ++i) {
        const double denom = 1.0 - bound_xi(i, i);
        if (denom <= 0.0) {
            throw AdmissibilityError("uncertainty bound B_" + std::to_string(i + 1) +
                                     std::to_string(i + 1) + " = " +
                                     std::to_string(bound_xi(i, i)) +
                                     " violates the B_ii < 1 hypothesis");
        }
        for (int j = 0; j < 3; ++j) {
            out.d(i, j) = (i == j) ? 0.0 : bound_xi(i, j) / denom;
        }
        out.z[i] = (bound_iota[i] + epsilon[i]) / denom;
    }
    return out;
}

double spectral_radius(const Mat3& d) {
    const double a = -d.trace();
    const double b = d(0, 0) * d(1, 1) - d(0, 1) * d(1, 0) + d(0, 0) * d(2, 2) -
                     d(0, 2) * d(2, 0) + d(1, 1) * d(2, 2) - d(1, 2) * d(2, 1);
    const double c = -d.determinant();
    return cubic_max_modulus(a, b, c);
}

Vec3 solve_gain_bounds(const Mat3& d, const Vec3& z) {
    const double rho = spectral_radius(d);
    if (rho >= 1.0) {
        throw AdmissibilityError("spectral radius rho(D) = " + std::to_string(rho) +
                                 " violates the rho(D) < 1 admissibility condition");
    }

    // Direct 3x3 Gaussian elimination with partial pivoting on (I - D).
    double m[3][4];
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            m[i][j] = (i == j ? 1.0 : 0.0) - d(i, j);
        }
        m[i][3] = z[i];
    }
    for (int col = 0; col < 3; ++col) {
        int pivot = col;
        for (int row = col + 1; row < 3; ++row) {
            if (std::abs(m[row][col]) > std::abs(m[pivot][col])) pivot = row;
        }
        std::swap(m[col], m[pivot]);
        for (int row = col + 1; row < 3; ++row) {
            const double f = m[row][col] / m[col][col];
            for (int j = col; j < 4; ++j) m[row][j] -= f * m[col][j];
        }
    }
    Vec3 k;
    for (int i = 2; i >= 0; --i) {
        double acc = m[i][3];
        for (int j = i + 1; j < 3; ++j) acc -= m[i][j] * k[j];
        k[i] = acc / m[i][i];
    }

    for (int i = 0; i < 3; ++i) {
        if (k[i] < -1e-12) {
            throw InternalError("gain bound solution has negative component k_" +
                                std::to_string(i + 1) + " = " + std::to_string(k[i]) +
                                "; inputs are outside the nonnegative cone");
        }
        k[i] = std::max(k[i], 0.0);
    }
    return k;
}

Vec3 control_pi(const BodyState& state, const Vec3& m_a0, const AirframeParams& params) {
    const Mat3 psi = euler_rate_matrix(state.attitude, params.theta_margin);
    const Mat3 psi_dot =
        euler_rate_matrix_derivative(state.attitude, state.rates, params.theta_margin);
    const Vec3& omega = state.rates;
    return -psi * (params.inertia_inv * m_a0) +
           psi * (params.inertia_inv * omega.cross(params.inertia * omega)) - psi_dot * omega;
}

Vec3 saturation(const Vec3& s, const Vec3& sigma) {
    Vec3 out;
    for (int i = 0; i < 3; ++i) {
        out[i] = std::clamp(s[i] / sigma[i], -1.0, 1.0);
    }
    return out;
}

Vec3 control_mu(const Vec3& ref_acc, const Vec3& rate_err, const Vec3& s, const Vec3& gains,
                const Mat3& lambda, const Vec3& sigma, bool use_signum) {
    Vec3 switching;
    if (use_signum) {
        for (int i = 0; i < 3; ++i) {
            switching[i] = (s[i] > 0.0) ? 1.0 : (s[i] < 0.0 ? -1.0 : 0.0);
        }
    } else {
        switching = saturation(s, sigma);
    }
    return ref_acc - lambda * rate_err - gains.cwiseProduct(switching);
}

AttitudeControlOutput attitude_control(const BodyState& state, const AttitudeReference& refs,
                                       const Vec3& gains, const SmcConfig& cfg,
                                       const Vec3& m_a0, const Mat3& m_delta0,
                                       const AirframeParams& params) {
    const Mat3 psi = euler_rate_matrix(state.attitude, params.theta_margin);

    AttitudeControlOutput out;
    out.sliding =
        sliding_variable(state.attitude, psi * state.rates, refs.angles, refs.rates, cfg.lambda);
    out.pi_term = control_pi(state, m_a0, params);
    out.mu_term = control_mu(refs.accels, out.sliding.rate_err, out.sliding.s, gains,
                             cfg.lambda, cfg.boundary_layer, cfg.use_signum);

    const Eigen::PartialPivLU<Mat3> lu(m_delta0);
    if (std::abs(lu.determinant()) < 1e-300) {
        throw SingularityError("attitude_control: nominal effectiveness matrix is singular");
    }
    out.deflections =
        lu.solve(params.inertia * psi.lu().solve(out.pi_term + out.mu_term));
    return out;
}

}  // namespace rsm
