#pragma once

#include <array>
#include <vector>

#include "apollonian/circle.hpp"
#include "apollonian/forms.hpp"
#include "apollonian/mat4.hpp"

namespace apollonian::config {

// Connected-component classification of an ordered, oriented Descartes
// configuration: sign of det(W) and sign of the curvature sum.
struct ConfigClass {
    int det_sign = 0;
    int total_orientation = 0;
};

/// Checks W^T Q_D W = Q_W exactly, det = +-8, nonzero curvature sum.
/// Throws std::invalid_argument on failure.
ConfigClass validate_acc(const Mat4Q& w);

bool is_valid_acc(const Mat4Q& w);

/// Eq-(209)-style check for 4x3 curvature-center matrices:
/// M^T Q_D M = diag(0, 2, 2) and the first column is not identically zero.
bool validate_ccm(const Mat43Q& m);

/// Extends a valid curvature-center matrix to the unique augmented matrix
/// whose last three columns equal M. Constructive: conjugate to the Lorentz
/// frame, normalize with the upper-triangular T, assemble the lifted matrix,
/// then undo T by the exact dilation/translation right action.
Mat4Q lift_ccm_to_acc(const Mat43Q& m);

Mat43Q last_three_columns(const Mat4Q& w);

/// Sign of the curvature sum; throws if zero.
int total_orientation(const Mat4Q& w);

/// D * W with D = -Q_D; involution mapping a configuration to the
/// perpendicular one through its six tangency points.
Mat4Q dual_configuration(const Mat4Q& w);

Mat4Q duality_operator();

/// b^T Q_D b = 0, the Descartes circle theorem for a curvature vector.
bool descartes_circle_check(const Vec4Q& curvatures);

Mat4Q permute_rows(const Mat4Q& w, const std::array<int, 4>& sigma);

Mat4Q reverse_orientation(const Mat4Q& w);

/// Canonical representative of the unordered, unoriented configuration:
/// orientation normalized to positive curvature sum, rows sorted.
Mat4Q canonical_form(const Mat4Q& w);

Vec4Q curvatures(const Mat4Q& w);

/// All six pairwise tangency points that are finite; pairs of parallel
/// lines (curvature sum zero) are counted separately.
struct TangencyPoints {
    std::vector<Vec2Q> points;
    int at_infinity_pairs = 0;
};
TangencyPoints config_tangency_points(const Mat4Q& w);

/// Test-oracle lift: recovers the first column by exact linear solve of
/// M^T (Q_D x) = (-4,0,0)^T plus the isotropic null correction. Independent
/// of the constructive path in lift_ccm_to_acc.
Mat4Q lift_by_linear_solve(const Mat43Q& m);

}  // namespace apollonian::config
