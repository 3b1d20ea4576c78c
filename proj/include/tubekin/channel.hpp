#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tubekin/rod.hpp"

namespace tubekin {

enum class SectionKind { Straight, Arc };

// One smooth piece of the outer environment: a straight run or a planar
// constant-curvature arc, with a uniform circular bore.
struct ChannelSection {
    SectionKind kind = SectionKind::Straight;
    Frame start;
    double length = 0.0;        // [m]
    double inner_radius = 0.0;  // [m]
    Vec3 curvature = Vec3::Zero();  // body frame, zero for straight

    Vec3 point_at(double s) const;
    Vec3 tangent_at(double s) const;

    // Closest point of the section's centerline, extended by [ext_lo, ext_hi]
    // beyond its ends. Returns the (possibly extended) arclength parameter.
    Vec3 closest_point(const Vec3& p, double ext_lo, double ext_hi, double* s_out = nullptr) const;
    double axis_distance(const Vec3& p, double ext_lo, double ext_hi) const;
};

// Two straight sections meeting at an angle; the bore is modeled as the
// union of the two cylinders clipped by two cut planes through M.
struct ElbowJoint {
    int upstream_section = -1;
    int downstream_section = -1;
    Vec3 corner = Vec3::Zero();       // centerline intersection point
    double interior_angle = 0.0;      // [rad]; pi would be a straight joint
    double inner_radius = 0.0;
    Vec3 upstream_tangent = Vec3::UnitZ();
    Vec3 downstream_tangent = Vec3::UnitZ();
    // Outward cut-plane normals; each plane is tangent to the named section's
    // cylinder and perpendicular to the longitudinal plane.
    Vec3 upstream_plane_normal = Vec3::Zero();
    Vec3 downstream_plane_normal = Vec3::Zero();

    double deflection() const { return M_PI - interior_angle; }
    // How far each axis reaches past the corner before exiting the other
    // cylinder of radius r.
    double axis_extension(double r) const { return r / std::sin(deflection()); }
};

struct CornerPlanes {
    Vec3 anchor;           // M, on the intersection line of the two planes
    Vec3 upstream_normal;  // v for the plane tangent to the upstream cylinder
    Vec3 downstream_normal;
};

// Cut planes of an elbow for bore radius r (defaults to the elbow's own).
// Feasible side: (p - anchor) . normal <= 0 for both planes.
CornerPlanes corner_planes(const ElbowJoint& elbow, double r = -1.0);

struct Channel {
    std::vector<ChannelSection> sections;
    std::vector<ElbowJoint> elbows;
    double inner_radius = 0.0;
    bool rigid = true;
    std::optional<TubeSpec> elastic;  // deforming outer member (no sections then)

    std::vector<Vec3> polyline;
    std::vector<Vec3> polyline_tangent;
    std::vector<int> polyline_section;
    std::vector<double> polyline_arclength;

    double total_length() const {
        double l = 0.0;
        for (const auto& s : sections) l += s.length;
        return l;
    }
    bool has_elbows() const { return !elbows.empty(); }

    // Point-in-bore test at radius r (true geometric region: union of the
    // section bores minus the elbow cut wedges).
    bool contains(const Vec3& p, double r, double tol = 0.0) const;

    Frame entrance_frame() const;
};

// Index of the closest polyline sample; ties break toward the smaller index.
int nearest_outer_point(const Vec3& p, const Channel& channel);

enum class Branch { Upstream, Downstream };

struct SampleRegion {
    int section = -1;        // home section
    int elbow = -1;          // >= 0: sample sits in this elbow's overlap band
    int nearest_index = -1;  // closest channel polyline sample
};

struct RegionTags {
    std::vector<SampleRegion> samples;
};

// Assign each inner-tube sample to a section or to an elbow overlap band.
// A sample is overlap iff it is inside both adjacent cylinders (within
// margin) near an elbow. Throws OutsideChannel for samples farther than
// inner_radius + margin outside every cylinder.
RegionTags classify_regions(const std::vector<Vec3>& p_inner, const Channel& channel,
                            double margin);

// Straight legs joined by elbows, or arc legs continuing tangentially.
struct ChannelLeg {
    SectionKind kind = SectionKind::Straight;
    double length = 0.0;      // arclength [m]
    double arc_radius = 0.0;  // [m], arcs only
    // Joint to the previous leg; interior_angle == pi means tangent
    // continuation (no elbow). out_of_plane rotates the bend plane about the
    // previous tangent.
    double interior_angle = M_PI;
    double out_of_plane = 0.0;
};

Channel channel_from_segments(const std::vector<ChannelLeg>& legs, double inner_radius,
                              double sample_ds);

// Channel whose bore is an elastic tube (no rigid geometry).
Channel elastic_channel(const TubeSpec& outer);

}  // namespace tubekin
