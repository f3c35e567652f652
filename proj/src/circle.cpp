#include "apollonian/circle.hpp"

#include <stdexcept>

namespace apollonian::circle {

bool row_invariant_holds(const AccRow& r) {
    return r[2] * r[2] + r[3] * r[3] - r[0] * r[1] == 1;
}

AccRow circle_to_acc(const Vec2Q& center, const Rational& oriented_radius) {
    if (oriented_radius == 0) throw std::invalid_argument("degenerate circle");
    const Rational& x = center[0];
    const Rational& y = center[1];
    Rational b = 1 / oriented_radius;
    Rational cocurv = (x * x + y * y - oriented_radius * oriented_radius) / oriented_radius;
    return {cocurv, b, b * x, b * y};
}

AccRow line_to_acc(const Vec2Q& unit_normal, const Rational& offset) {
    if (unit_normal[0] * unit_normal[0] + unit_normal[1] * unit_normal[1] != 1)
        throw std::invalid_argument("line normal is not unit length");
    return {2 * offset, 0, unit_normal[0], unit_normal[1]};
}

CircleGeometry acc_to_geometry(const AccRow& row) {
    if (!row_invariant_holds(row)) throw std::invalid_argument("not a circle row");
    CircleGeometry g;
    if (row[1] != 0) {
        g.is_line = false;
        g.circle.center = {row[2] / row[1], row[3] / row[1]};
        g.circle.oriented_radius = 1 / row[1];
    } else {
        g.is_line = true;
        g.line.unit_normal = {row[2], row[3]};
        g.line.offset = row[0] / 2;
    }
    return g;
}

AccRow invert_in_unit_circle(const AccRow& row) {
    return {row[1], row[0], row[2], row[3]};
}

Rational tangency_value(const AccRow& a, const AccRow& b) {
    return Rational(-1, 4) * (a[0] * b[1] + a[1] * b[0]) +
           Rational(1, 2) * (a[2] * b[2] + a[3] * b[3]);
}

Vec2Q tangency_point(const AccRow& a, const AccRow& b) {
    Rational curv_sum = a[1] + b[1];
    if (curv_sum == 0)
        throw std::domain_error("tangency at infinity or parallel lines");
    return {(a[2] + b[2]) / curv_sum, (a[3] + b[3]) / curv_sum};
}

}  // namespace apollonian::circle
