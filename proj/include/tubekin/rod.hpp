#pragma once

#include <vector>

#include "tubekin/geometry.hpp"

namespace tubekin {

// Right-handed frame: position + rotation (columns are the body axes,
// third column is the tangent).
struct Frame {
    Vec3 p = Vec3::Zero();
    Mat3 R = Mat3::Identity();
};

// Piecewise-constant precurvature over an arclength span [s_begin, s_end).
struct PrecurvatureSpan {
    double s_begin = 0.0;
    double s_end = 0.0;
    Vec3 value = Vec3::Zero();  // [1/m], body frame
};

// Geometry and material description of one elastic tube.
struct TubeSpec {
    std::string name;
    double inner_radius = 0.0;      // [m]
    double outer_radius = 0.0;      // [m]
    double length = 0.0;            // [m]
    double bending_stiffness = 0.0; // EI [N m^2]
    double poisson_ratio = 0.0;
    std::vector<PrecurvatureSpan> precurvature;  // empty means straight
    bool rigid = false;

    void validate() const;
    Vec3 precurvature_at(double s) const;
};

// diag(EI, EI, GJ) with GJ = EI / (1 + nu). Throws RigidTube on rigid specs.
Mat3 stiffness_matrix(const TubeSpec& spec);

// Block-diagonal stack of n copies of stiffness_matrix, stored as the
// diagonal (the 3x3 blocks are themselves diagonal).
VecX stacked_stiffness_diag(const TubeSpec& spec, int samples);

// Discretized centerline state of one rod over a uniform arclength grid.
// p and R are always the integral of u from the base frame; construct via
// integrate_shape or RodState::from_curvatures.
struct RodState {
    double ds = 0.0;                 // grid spacing [m]
    std::vector<Vec3> u;             // curvature per sample, u[j] rules segment [s_j, s_j+ds)
    std::vector<Vec3> p;             // positions
    std::vector<Mat3> R;             // frames
    Frame base;

    int samples() const { return static_cast<int>(u.size()); }
    double arclength(int k) const { return ds * k; }
    double total_length() const { return ds * (samples() - 1); }
    const Vec3& tip() const { return p.back(); }
    Vec3 tangent(int k) const { return R[k].col(2); }

    static RodState from_curvatures(std::vector<Vec3> u, const Frame& base, double ds);

    // Re-integrate p, R after changing u.
    void refresh();

    VecX flat_u() const;
    void set_flat_u(const VecX& v);
};

// Integrates p' = R e3, R' = R hat(u) with u piecewise constant per segment,
// using the closed-form per-segment exponential. Returns n = u.size() samples;
// the final curvature entry has no segment of its own and does not move any
// sample.
void integrate_shape(const std::vector<Vec3>& u, const Frame& base, double ds,
                     std::vector<Vec3>& p_out, std::vector<Mat3>& R_out);

// 0.5 * ds * sum_j (u_j - uhat_j)^T K3 (u_j - uhat_j)   [J]
double elastic_energy(const std::vector<Vec3>& u, const std::vector<Vec3>& uhat,
                      const Mat3& stiffness, double ds);

// Derivative of the stacked positions w.r.t. the stacked curvatures for the
// exact per-segment exponential integrator. Block lower-triangular with zero
// diagonal blocks: curvature on segment j moves only samples k > j.
MatX shape_jacobian(const RodState& state);

// Exponential-map helpers (axis-angle vector a = u * t).
Mat3 rotation_exp(const Vec3& axis_angle);
// integral of rotation_exp(u * t) dt over [0, h]
Mat3 rotation_exp_integral(const Vec3& u, double h);

// Concatenation of the elastic tubes' states, innermost tube first. Rigid
// members never appear here; their geometry lives in the channel.
struct StackedState {
    std::vector<RodState> tubes;

    int tube_count() const { return static_cast<int>(tubes.size()); }
    int dim() const;
    int offset(int tube) const;  // index of tube's first scalar variable
    VecX flat_u() const;
    void set_flat_u(const VecX& v);
};

}  // namespace tubekin
