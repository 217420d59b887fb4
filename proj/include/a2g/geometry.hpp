#pragma once

#include <utility>

namespace a2g {

// Elliptical ground footprint served by the UAV, centered on the UAV nadir.
struct CoverageEllipse {
    double semi_major_m = 0.0;  // a_i
    double semi_minor_m = 0.0;  // b_i
};

// A device on (or above) the ground plane.
struct GroundPoint {
    double x_m = 0.0;
    double y_m = 0.0;
    double z_m = 0.0;
};

// Hovering UAV position. Altitude must be positive.
struct UavPose {
    double x_m = 0.0;
    double y_m = 0.0;
    double altitude_m = 0.0;
};

// Inputs of the elevation-footprint formula.
struct FootprintParams {
    double antenna_height_m = 0.0;     // effective antenna height
    double boundary_distance_m = 0.0;  // max horizontal distance of the target area
    double beam_width_rad = 0.0;       // elevation beam width, in (0, pi/2)
};

// The two x intercepts (+x, -x) of the ellipse boundary at ordinate y_m.
// Throws DomainError if |y_m| exceeds the semi-minor axis.
std::pair<double, double> boundary_x(const CoverageEllipse& e, double y_m);

// Inclusive membership test of p against the ellipse centered on the UAV.
bool contains(const CoverageEllipse& e, const GroundPoint& p, const UavPose& center);

// Distance from a user to the boundary reference point selected by the
// ellipse parameters (param_x_m, param_y_m), taking the positive roots of
// both boundary coordinates. Note the reference point mixes the two
// parameters: it is (a*sqrt(1 - py^2/b^2), b*sqrt(1 - px^2/a^2)).
// slant_distance() is the primitive actually used by the channel stack.
double boundary_distance(const CoverageEllipse& e, double param_x_m, double param_y_m,
                         const GroundPoint& user);

// 3D distance between UAV and user: sqrt(dx^2 + dy^2 + altitude^2).
double slant_distance(const UavPose& uav, const GroundPoint& user);

// Elevation angle of the UAV seen from the user, in degrees within [0, 90].
// 90 iff the user sits at the nadir. Throws DomainError when UAV and user
// coincide (degenerate geometry, not a 90-degree default).
double elevation_angle_deg(const UavPose& uav, const GroundPoint& user);

// Elevation footprint (h^2 + r^2)tan(beta) / (h + r tan(beta)).
// Throws DomainError for beam widths outside (0, pi/2) or invalid h/r.
double elevation_footprint(const FootprintParams& p);

}  // namespace a2g
