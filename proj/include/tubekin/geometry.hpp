#pragma once

#include <Eigen/Dense>
#include <optional>

#include "tubekin/errors.hpp"

namespace tubekin {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using VecX = Eigen::VectorXd;
using MatX = Eigen::MatrixXd;

// Cross-sectional admissible region for the centerline of a tube running
// inside a larger bore: an ellipse in the bore's cross-section plane, shrunk
// by the tube's own footprint at crossing angle theta.
struct ContactEllipse {
    Vec3 major_dir;   // q1, unit, in the cross-section plane
    Vec3 minor_dir;   // q2 = q1 x t_out, unit
    double major_len = 0.0;  // d1 [m]
    double minor_len = 0.0;  // d2 [m], d2 <= d1
    double theta = 0.0;      // crossing angle actually used [rad]
    bool theta_clamped = false;

    Mat3 quadratic_form() const {
        return major_dir * major_dir.transpose() / (major_len * major_len) +
               minor_dir * minor_dir.transpose() / (minor_len * minor_len);
    }
};

struct ContactEllipseOptions {
    // Clamp theta into [0, theta_max - theta_margin] instead of failing when
    // the crossing angle is too steep for the tube to fit. Solvers enable
    // this and surface the clamp as a warning.
    bool clamp_theta = false;
    double theta_margin = 1e-6;
    double eps_geom = 1e-9;  // [m] degeneracy threshold on the axes
};

// Skew-symmetric matrix of v: hat(v) * w == v.cross(w).
Mat3 hat(const Vec3& v);

// P = I - t*t^T, the orthogonal projector onto the plane normal to t.
// Throws NonUnitTangent if |t| deviates from 1 by more than 1e-6.
Mat3 tangent_projection(const Vec3& t);

// Ellipse of admissible centerline offsets in the bore cross-section at
// crossing angle theta = angle(bore_tangent, tube_tangent).
//   bore_radius: inner radius of the outer member [m]
//   tube_radius: outer radius of the inner member [m]
ContactEllipse contact_ellipse(const Vec3& bore_tangent, const Vec3& tube_tangent,
                               double bore_radius, double tube_radius,
                               const ContactEllipseOptions& opts = {});

// h = (p_out - p_in)^T P^T Q P (p_out - p_in) - 1; h <= 0 iff the inner
// centerline point is inside the admissible ellipse.
double ellipse_constraint_value(const Vec3& p_in, const Vec3& p_out,
                                const Mat3& projection, const Mat3& quadratic_form);

// Largest admissible crossing angle for the given radii.
inline double max_crossing_angle(double bore_radius, double tube_radius) {
    return std::acos(tube_radius / bore_radius);
}

}  // namespace tubekin
