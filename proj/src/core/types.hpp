#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>
#include <string>

namespace rsm {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

inline constexpr double kPi = 3.14159265358979323846;

/// Wrap an angle into (-pi, pi].
inline double wrap_pi(double angle) {
    double r = std::remainder(angle, 2.0 * kPi);
    return (r <= -kPi) ? r + 2.0 * kPi : r;
}

inline Vec3 wrap_pi(const Vec3& angles) {
    return {wrap_pi(angles[0]), wrap_pi(angles[1]), wrap_pi(angles[2])};
}

/// Failure classes surfaced across the library boundary. Numeric values of
/// the run/startup classes match the CLI exit codes.
enum class ErrorKind {
    io = 1,
    config = 2,
    admissibility = 3,  // theorem-hypothesis gates (B_ii, spectral radius, Hurwitz)
    trim = 4,
    divergence = 5,
    verification = 6,
    singularity = 7,  // Euler-angle pitch guard, singular effectiveness matrix
    internal = 8,
};

class SimError : public std::runtime_error {
public:
    SimError(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

class ConfigError : public SimError {
public:
    explicit ConfigError(const std::string& what) : SimError(ErrorKind::config, what) {}
};

class AdmissibilityError : public SimError {
public:
    explicit AdmissibilityError(const std::string& what)
        : SimError(ErrorKind::admissibility, what) {}
};

class SingularityError : public SimError {
public:
    explicit SingularityError(const std::string& what)
        : SimError(ErrorKind::singularity, what) {}
};

class TrimError : public SimError {
public:
    explicit TrimError(const std::string& what) : SimError(ErrorKind::trim, what) {}
};

class DivergenceError : public SimError {
public:
    explicit DivergenceError(const std::string& what)
        : SimError(ErrorKind::divergence, what) {}
};

class IoError : public SimError {
public:
    explicit IoError(const std::string& what) : SimError(ErrorKind::io, what) {}
};

class InternalError : public SimError {
public:
    explicit InternalError(const std::string& what) : SimError(ErrorKind::internal, what) {}
};

/// Rigid-body state: body velocities, Euler angles, body rates, plus the
/// flat-earth navigation augmentation (altitude, course) used by the outer
/// control loops.
struct BodyState {
    Vec3 velocity{Vec3::Zero()};  // u, v, w [m/s]
    Vec3 attitude{Vec3::Zero()};  // phi, theta, psi [rad]
    Vec3 rates{Vec3::Zero()};     // p, q, r [rad/s]
    double altitude = 0.0;        // h [m]
    double course = 0.0;          // chi [rad]
};

struct StateDerivative {
    Vec3 velocity_dot{Vec3::Zero()};
    Vec3 attitude_dot{Vec3::Zero()};
    Vec3 rates_dot{Vec3::Zero()};
    double altitude_dot = 0.0;
    double course_dot = 0.0;
};

/// Smooth attitude reference with consistent first and second derivatives.
struct AttitudeReference {
    Vec3 angles{Vec3::Zero()};  // Theta_r [rad]
    Vec3 rates{Vec3::Zero()};   // dTheta_r/dt [rad/s]
    Vec3 accels{Vec3::Zero()};  // d2Theta_r/dt2 [rad/s^2]
};

}  // namespace rsm
