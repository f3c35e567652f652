#pragma once

#include <tuple>

#include "apollonian/mat4.hpp"

namespace apollonian::forms {

/// Matrix of the Descartes quadratic form, I - (1/2) 11^T. An involution.
Mat4Q q_descartes();

/// Matrix of the Wilker form -8 x1 x2 + 2 x3^2 + 2 x4^2.
Mat4Q q_wilker();

/// Matrix of the Lorentz form diag(-1, 1, 1, 1).
Mat4Q q_lorentz();

/// Symmetric involution J0 with Q_D = J0^T Q_L J0.
Mat4Q j0();

/// Base strip configuration: two horizontal lines y = +-1 and two unit
/// circles centered at (+-1, 0), all entries integers.
Mat4Q base_configuration_w0();

/// A = J0 * W0, the integral intertwiner with Q_W = A^T Q_L A.
Mat4Q intertwiner_a();

/// W^T Q W, computed exactly.
Mat4Q congruence(const Mat4Q& w, const Mat4Q& q);

/// True iff U^T Q U = Q exactly.
bool is_automorph(const Mat4Q& u, const Mat4Q& q);

/// (det Q_D, det Q_L, det Q_W), computed rather than hard-coded.
std::tuple<Rational, Rational, Rational> form_determinants();

}  // namespace apollonian::forms
