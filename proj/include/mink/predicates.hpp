#pragma once

// Exact planar orientation predicates (filtered, with an expansion-arithmetic fallback).

#include <Eigen/Core>

namespace mink {

/// Sign of the orientation determinant of (a, b, c): +1 counterclockwise,
/// -1 clockwise, 0 collinear. Exact for all finite double inputs.
int orient2d(const Eigen::Vector2d& a, const Eigen::Vector2d& b, const Eigen::Vector2d& c);

/// Closed segments [p1,p2] and [q1,q2] share at least one point (exact).
bool segments_intersect(const Eigen::Vector2d& p1, const Eigen::Vector2d& p2,
    const Eigen::Vector2d& q1, const Eigen::Vector2d& q2);

/// Sign of the incircle determinant: +1 if d lies strictly inside the circle
/// through the counterclockwise triangle (a, b, c). Filtered; long double fallback.
int incircle(const Eigen::Vector2d& a, const Eigen::Vector2d& b, const Eigen::Vector2d& c, const Eigen::Vector2d& d);

} // namespace mink
