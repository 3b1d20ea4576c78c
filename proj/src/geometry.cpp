#include "tubekin/geometry.hpp"

#include <cmath>

namespace tubekin {

Mat3 hat(const Vec3& v) {
    Mat3 m;
    m << 0.0, -v.z(), v.y(),
         v.z(), 0.0, -v.x(),
        -v.y(), v.x(), 0.0;
    return m;
}

Mat3 tangent_projection(const Vec3& t) {
    if (std::abs(t.norm() - 1.0) > 1e-6) {
        throw NonUnitTangent("tangent_projection: |t| = " + std::to_string(t.norm()));
    }
    return Mat3::Identity() - t * t.transpose();
}

namespace {

// Unit in-plane direction for the degenerate parallel case: project a fixed
// reference axis, falling back to y when the bore tangent is parallel to x.
Vec3 reference_major_dir(const Vec3& bore_tangent) {
    Vec3 ref = Vec3::UnitX();
    Vec3 q = ref - bore_tangent.dot(ref) * bore_tangent;
    if (q.norm() < 1e-6) {
        ref = Vec3::UnitY();
        q = ref - bore_tangent.dot(ref) * bore_tangent;
    }
    return q.normalized();
}

}  // namespace

ContactEllipse contact_ellipse(const Vec3& bore_tangent, const Vec3& tube_tangent,
                               double bore_radius, double tube_radius,
                               const ContactEllipseOptions& opts) {
    if (std::abs(bore_tangent.norm() - 1.0) > 1e-6 || std::abs(tube_tangent.norm() - 1.0) > 1e-6) {
        throw NonUnitTangent("contact_ellipse: tangents must be unit vectors");
    }
    if (bore_radius <= tube_radius + opts.eps_geom) {
        throw DegenerateEllipse("contact_ellipse: tube does not fit the bore");
    }

    const double cos_theta = std::clamp(bore_tangent.dot(tube_tangent), -1.0, 1.0);
    double theta = std::acos(cos_theta);
    const double theta_max = max_crossing_angle(bore_radius, tube_radius);

    ContactEllipse e;
    if (theta > theta_max - opts.theta_margin) {
        if (!opts.clamp_theta) {
            throw DegenerateEllipse("contact_ellipse: crossing angle too steep, theta = " +
                                    std::to_string(theta));
        }
        theta = theta_max - opts.theta_margin;
        e.theta_clamped = true;
    }

    e.theta = theta;
    e.major_len = bore_radius - tube_radius;
    e.minor_len = bore_radius - tube_radius / std::cos(theta);
    if (e.minor_len <= opts.eps_geom) {
        throw DegenerateEllipse("contact_ellipse: minor axis collapsed, d2 = " +
                                std::to_string(e.minor_len));
    }

    Vec3 in_plane = tube_tangent - bore_tangent.dot(tube_tangent) * bore_tangent;
    if (in_plane.norm() < 1e-9) {
        e.major_dir = reference_major_dir(bore_tangent);
    } else {
        e.major_dir = in_plane.normalized();
    }
    e.minor_dir = e.major_dir.cross(bore_tangent).normalized();
    return e;
}

double ellipse_constraint_value(const Vec3& p_in, const Vec3& p_out,
                                const Mat3& projection, const Mat3& quadratic_form) {
    const Vec3 v = projection * (p_out - p_in);
    return v.dot(quadratic_form * v) - 1.0;
}

}  // namespace tubekin
