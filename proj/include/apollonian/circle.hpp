#pragma once

#include <optional>
#include <utility>

#include "apollonian/mat4.hpp"

namespace apollonian::circle {

// One oriented circle or line in augmented curvature-center coordinates
// (co-curvature, curvature, curvature*x, curvature*y). Row invariant:
// w1^2 + w2^2 - cocurv*curv = 1 exactly.
using AccRow = Vec4Q;

struct CircleShape {
    Vec2Q center;
    Rational oriented_radius;  // sign encodes the normal direction
};

struct LineShape {
    Vec2Q unit_normal;  // points into the interior half-plane
    Rational offset;    // x . n = offset
};

struct CircleGeometry {
    bool is_line = false;
    CircleShape circle;  // valid when !is_line
    LineShape line;      // valid when is_line
};

bool row_invariant_holds(const AccRow& r);

AccRow circle_to_acc(const Vec2Q& center, const Rational& oriented_radius);

/// The normal must be exactly unit length: cos^2 + sin^2 = 1.
AccRow line_to_acc(const Vec2Q& unit_normal, const Rational& offset);

CircleGeometry acc_to_geometry(const AccRow& row);

/// Swaps the first two coordinates; an involution.
AccRow invert_in_unit_circle(const AccRow& row);

/// a Q_W^{-1} b^T = -(a1 b2 + a2 b1)/4 + (a3 b3 + a4 b4)/2.
/// 1/2 on a valid row paired with itself, -1/2 for distinct rows of one
/// Descartes configuration.
Rational tangency_value(const AccRow& a, const AccRow& b);

/// Curvature-weighted tangency point of two tangent circles. Throws when
/// the curvature sum vanishes (parallel lines / a circle and its mirror).
Vec2Q tangency_point(const AccRow& a, const AccRow& b);

}  // namespace apollonian::circle
