#include "a2g/geometry.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "a2g/errors.hpp"

namespace a2g {

namespace {

void require_ellipse(const CoverageEllipse& e) {
    if (!(e.semi_major_m > 0.0) || !(e.semi_minor_m > 0.0)) {
        std::ostringstream msg;
        msg << "ellipse semi-axes must be > 0 (got " << e.semi_major_m << ", "
            << e.semi_minor_m << ")";
        throw DomainError(msg.str());
    }
}

}  // namespace

std::pair<double, double> boundary_x(const CoverageEllipse& e, double y_m) {
    require_ellipse(e);
    if (std::abs(y_m) > e.semi_minor_m) {
        std::ostringstream msg;
        msg << "point outside ellipse extent: |y| = " << std::abs(y_m) << " > "
            << e.semi_minor_m;
        throw DomainError(msg.str());
    }
    const double t = y_m / e.semi_minor_m;
    const double x = e.semi_major_m * std::sqrt(1.0 - t * t);
    return {x, -x};
}

bool contains(const CoverageEllipse& e, const GroundPoint& p, const UavPose& center) {
    require_ellipse(e);
    const double u = (p.x_m - center.x_m) / e.semi_major_m;
    const double v = (p.y_m - center.y_m) / e.semi_minor_m;
    return u * u + v * v <= 1.0;
}

double boundary_distance(const CoverageEllipse& e, double param_x_m, double param_y_m,
                         const GroundPoint& user) {
    require_ellipse(e);
    if (std::abs(param_y_m) > e.semi_minor_m || std::abs(param_x_m) > e.semi_major_m) {
        std::ostringstream msg;
        msg << "ellipse parameter outside extent: (" << param_x_m << ", " << param_y_m
            << ") vs semi-axes (" << e.semi_major_m << ", " << e.semi_minor_m << ")";
        throw DomainError(msg.str());
    }
    const double ty = param_y_m / e.semi_minor_m;
    const double tx = param_x_m / e.semi_major_m;
    const double ref_x = e.semi_major_m * std::sqrt(1.0 - ty * ty);
    const double ref_y = e.semi_minor_m * std::sqrt(1.0 - tx * tx);
    const double dx = user.x_m - ref_x;
    const double dy = user.y_m - ref_y;
    return std::sqrt(dx * dx + dy * dy + user.z_m * user.z_m);
}

double slant_distance(const UavPose& uav, const GroundPoint& user) {
    const double dx = user.x_m - uav.x_m;
    const double dy = user.y_m - uav.y_m;
    const double h = uav.altitude_m;
    return std::sqrt(dx * dx + dy * dy + h * h);
}

double elevation_angle_deg(const UavPose& uav, const GroundPoint& user) {
    const double d = slant_distance(uav, user);
    if (d == 0.0) {
        throw DomainError("undefined elevation angle: UAV and user coincide");
    }
    constexpr double rad_to_deg = 180.0 / std::numbers::pi;
    return rad_to_deg * std::asin(uav.altitude_m / d);
}

double elevation_footprint(const FootprintParams& p) {
    if (!(p.beam_width_rad > 0.0) || !(p.beam_width_rad < std::numbers::pi / 2.0)) {
        std::ostringstream msg;
        msg << "beam width out of range (0, pi/2): " << p.beam_width_rad;
        throw DomainError(msg.str());
    }
    if (!(p.antenna_height_m > 0.0)) {
        throw DomainError("antenna height must be > 0");
    }
    if (!(p.boundary_distance_m >= 0.0)) {
        throw DomainError("boundary distance must be >= 0");
    }
    const double h = p.antenna_height_m;
    const double r = p.boundary_distance_m;
    const double t = std::tan(p.beam_width_rad);
    return (h * h + r * r) * t / (h + r * t);
}

}  // namespace a2g
