#include "tubekin/rod.hpp"

#include <cmath>

namespace tubekin {

void TubeSpec::validate() const {
    if (length <= 0.0) throw ConfigError(name + ".length", "must be positive");
    if (outer_radius <= 0.0) throw ConfigError(name + ".outer_radius", "must be positive");
    if (inner_radius < 0.0 || (inner_radius != 0.0 && inner_radius >= outer_radius)) {
        throw ConfigError(name + ".inner_radius", "must be zero (solid) or less than outer_radius");
    }
    if (!rigid && bending_stiffness <= 0.0) {
        throw ConfigError(name + ".bending_stiffness", "must be positive for elastic tubes");
    }
    for (const auto& span : precurvature) {
        if (span.s_end <= span.s_begin) {
            throw ConfigError(name + ".precurvature", "span must have s_end > s_begin");
        }
    }
}

Vec3 TubeSpec::precurvature_at(double s) const {
    for (const auto& span : precurvature) {
        if (s >= span.s_begin && s < span.s_end) return span.value;
    }
    if (!precurvature.empty() && s >= precurvature.back().s_end - 1e-12) {
        return precurvature.back().value;
    }
    return Vec3::Zero();
}

Mat3 stiffness_matrix(const TubeSpec& spec) {
    if (spec.rigid) throw RigidTube("stiffness_matrix: " + spec.name + " is rigid");
    const double ei = spec.bending_stiffness;
    const double gj = ei / (1.0 + spec.poisson_ratio);
    return Vec3(ei, ei, gj).asDiagonal();
}

VecX stacked_stiffness_diag(const TubeSpec& spec, int samples) {
    const Mat3 k3 = stiffness_matrix(spec);
    VecX d(3 * samples);
    for (int j = 0; j < samples; ++j) {
        d.segment<3>(3 * j) = k3.diagonal();
    }
    return d;
}

Mat3 rotation_exp(const Vec3& axis_angle) {
    const double phi = axis_angle.norm();
    const Mat3 s = hat(axis_angle);
    double a, b;
    if (phi < 1e-6) {
        a = 1.0 - phi * phi / 6.0;
        b = 0.5 - phi * phi / 24.0;
    } else {
        a = std::sin(phi) / phi;
        b = (1.0 - std::cos(phi)) / (phi * phi);
    }
    return Mat3::Identity() + a * s + b * s * s;
}

Mat3 rotation_exp_integral(const Vec3& u, double h) {
    const double w = u.norm();
    const double phi = w * h;
    const Mat3 s = hat(u);
    double c1, c2;
    if (phi < 1e-6) {
        c1 = h * h / 2.0 - h * h * phi * phi / 24.0;
        c2 = h * h * h / 6.0 - h * h * h * phi * phi / 120.0;
    } else {
        c1 = (1.0 - std::cos(phi)) / (w * w);
        c2 = (h - std::sin(phi) / w) / (w * w);
    }
    return h * Mat3::Identity() + c1 * s + c2 * s * s;
}

void integrate_shape(const std::vector<Vec3>& u, const Frame& base, double ds,
                     std::vector<Vec3>& p_out, std::vector<Mat3>& R_out) {
    const int n = static_cast<int>(u.size());
    p_out.resize(n);
    R_out.resize(n);
    if (n == 0) return;
    p_out[0] = base.p;
    R_out[0] = base.R;
    for (int j = 0; j + 1 < n; ++j) {
        const Mat3 v = rotation_exp_integral(u[j], ds);
        p_out[j + 1] = p_out[j] + R_out[j] * (v * Vec3::UnitZ());
        R_out[j + 1] = R_out[j] * rotation_exp(u[j] * ds);
    }
}

RodState RodState::from_curvatures(std::vector<Vec3> u, const Frame& base, double ds) {
    RodState st;
    st.ds = ds;
    st.u = std::move(u);
    st.base = base;
    st.refresh();
    return st;
}

void RodState::refresh() { integrate_shape(u, base, ds, p, R); }

VecX RodState::flat_u() const {
    VecX v(3 * samples());
    for (int j = 0; j < samples(); ++j) v.segment<3>(3 * j) = u[j];
    return v;
}

void RodState::set_flat_u(const VecX& v) {
    for (int j = 0; j < samples(); ++j) u[j] = v.segment<3>(3 * j);
    refresh();
}

double elastic_energy(const std::vector<Vec3>& u, const std::vector<Vec3>& uhat,
                      const Mat3& stiffness, double ds) {
    if (u.size() != uhat.size()) {
        throw DimensionMismatch("elastic_energy: curvature sequences differ in length");
    }
    double e = 0.0;
    for (size_t j = 0; j < u.size(); ++j) {
        const Vec3 d = u[j] - uhat[j];
        e += 0.5 * ds * d.dot(stiffness * d);
    }
    return e;
}

namespace {

// 5-point Gauss-Legendre nodes/weights on [0, 1].
constexpr double kGaussX[5] = {0.046910077030668074, 0.230765344947158450, 0.5,
                               0.769234655052841550, 0.953089922969331926};
constexpr double kGaussW[5] = {0.118463442528094544, 0.239314335249683234, 0.284444444444444444,
                               0.239314335249683234, 0.118463442528094544};

// Y = integral over the segment of [y(t)]x E(t) dt, with y(t) the in-segment
// displacement and E(t) the in-segment rotation. Together with the segment's
// integrated rotation G this makes the position Jacobian exact for the
// piecewise-exponential integrator.
Mat3 segment_moment_integral(const Vec3& u, double h) {
    Mat3 y = Mat3::Zero();
    for (int g = 0; g < 5; ++g) {
        const double t = kGaussX[g] * h;
        const Vec3 disp = rotation_exp_integral(u, t) * Vec3::UnitZ();
        y += (kGaussW[g] * h) * hat(disp) * rotation_exp(u * t);
    }
    return y;
}

}  // namespace

MatX shape_jacobian(const RodState& state) {
    const int n = state.samples();
    MatX jac = MatX::Zero(3 * n, 3 * n);
    for (int j = 0; j + 1 < n; ++j) {
        const Mat3 g = state.R[j] * rotation_exp_integral(state.u[j], state.ds);
        const Mat3 w = state.R[j] * segment_moment_integral(state.u[j], state.ds);
        for (int k = j + 1; k < n; ++k) {
            jac.block<3, 3>(3 * k, 3 * j) = hat(state.p[j] - state.p[k]) * g + w;
        }
    }
    return jac;
}

int StackedState::dim() const {
    int d = 0;
    for (const auto& t : tubes) d += 3 * t.samples();
    return d;
}

int StackedState::offset(int tube) const {
    int off = 0;
    for (int i = 0; i < tube; ++i) off += 3 * tubes[i].samples();
    return off;
}

VecX StackedState::flat_u() const {
    VecX v(dim());
    int off = 0;
    for (const auto& t : tubes) {
        v.segment(off, 3 * t.samples()) = t.flat_u();
        off += 3 * t.samples();
    }
    return v;
}

void StackedState::set_flat_u(const VecX& v) {
    int off = 0;
    for (auto& t : tubes) {
        t.set_flat_u(v.segment(off, 3 * t.samples()));
        off += 3 * t.samples();
    }
}

}  // namespace tubekin
