#include "apollonian/forms.hpp"

namespace apollonian::forms {

Mat4Q q_descartes() {
    Mat4Q q;
    Rational half(1, 2);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) q(i, j) = (i == j ? Rational(1) : Rational(0)) - half;
    return q;
}

Mat4Q q_wilker() {
    Mat4Q q;
    q(0, 1) = q(1, 0) = -4;
    q(2, 2) = q(3, 3) = 2;
    return q;
}

Mat4Q q_lorentz() {
    Mat4Q q = Mat4Q::identity();
    q(0, 0) = -1;
    return q;
}

Mat4Q j0() {
    static const int s[4][4] = {{1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1}};
    Mat4Q m;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m(i, j) = Rational(s[i][j], 2);
    return m;
}

Mat4Q base_configuration_w0() {
    return Mat4Q{2, 0, 0, 1,
                 2, 0, 0, -1,
                 0, 1, 1, 0,
                 0, 1, -1, 0};
}

Mat4Q intertwiner_a() { return j0() * base_configuration_w0(); }

Mat4Q congruence(const Mat4Q& w, const Mat4Q& q) { return w.transpose() * q * w; }

bool is_automorph(const Mat4Q& u, const Mat4Q& q) { return congruence(u, q) == q; }

std::tuple<Rational, Rational, Rational> form_determinants() {
    return {q_descartes().det(), q_lorentz().det(), q_wilker().det()};
}

}  // namespace apollonian::forms
