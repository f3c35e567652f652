#include "apollonian/config.hpp"

#include <algorithm>
#include <stdexcept>

namespace apollonian::config {

namespace {

const Mat4Q& qd() {
    static const Mat4Q q = forms::q_descartes();
    return q;
}

const Mat4Q& qw() {
    static const Mat4Q q = forms::q_wilker();
    return q;
}

// Right-action matrix of a translation by (x0, y0), Appendix-A form.
Mat4Q translation_right(const Rational& x0, const Rational& y0) {
    Mat4Q v = Mat4Q::identity();
    v(1, 0) = x0 * x0 + y0 * y0;
    v(1, 2) = x0;
    v(1, 3) = y0;
    v(2, 0) = 2 * x0;
    v(3, 0) = 2 * y0;
    return v;
}

// Right-action matrix of a dilation by a nonzero real lambda (negative
// lambda folds in the rotation by pi).
Mat4Q dilation_right(const Rational& lambda) {
    if (lambda == 0) throw std::invalid_argument("zero dilation");
    Mat4Q v;
    Rational r = lambda > 0 ? lambda : Rational(-lambda);
    Rational c = lambda > 0 ? 1 : -1;
    v(0, 0) = r;
    v(1, 1) = 1 / r;
    v(2, 2) = c;
    v(3, 3) = c;
    return v;
}

}  // namespace

ConfigClass validate_acc(const Mat4Q& w) {
    if (forms::congruence(w, qd()) != qw())
        throw std::invalid_argument("not a Descartes configuration");
    Rational bsum = w(0, 1) + w(1, 1) + w(2, 1) + w(3, 1);
    if (bsum == 0) throw std::invalid_argument("invalid orientation sum");
    Rational d = w.det();
    if (d != 8 && d != -8) throw std::invalid_argument("determinant is not +-8");
    return {d > 0 ? 1 : -1, bsum > 0 ? 1 : -1};
}

bool is_valid_acc(const Mat4Q& w) {
    try {
        validate_acc(w);
        return true;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

bool validate_ccm(const Mat43Q& m) {
    bool first_col_zero = true;
    for (int i = 0; i < 4; ++i)
        if (m(i, 0) != 0) first_col_zero = false;
    if (first_col_zero) return false;
    auto g = congruence43(m, qd());
    static const long want[9] = {0, 0, 0, 0, 2, 0, 0, 0, 2};
    for (int k = 0; k < 9; ++k)
        if (g[k] != want[k]) return false;
    return true;
}

Mat43Q last_three_columns(const Mat4Q& w) {
    Mat43Q m;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 3; ++j) m(i, j) = w(i, j + 1);
    return m;
}

Mat4Q lift_ccm_to_acc(const Mat43Q& m) {
    if (!validate_ccm(m)) throw std::invalid_argument("invalid CCM");
    const Mat4Q j = forms::j0();
    Mat43Q mt = j * m;  // Lorentz frame
    if (mt(0, 0) == 0) throw std::domain_error("inconsistent input");

    // T = [[a, b, c], [0,1,0], [0,0,1]] making row 1 of Mt*T equal (1,0,0).
    Rational a = 1 / mt(0, 0);
    Rational b = -mt(0, 1) / mt(0, 0);
    Rational c = -mt(0, 2) / mt(0, 0);
    Mat43Q nt;  // Mt * T
    for (int i = 0; i < 4; ++i) {
        nt(i, 0) = a * mt(i, 0);
        nt(i, 1) = b * mt(i, 0) + mt(i, 1);
        nt(i, 2) = c * mt(i, 0) + mt(i, 2);
    }
    if (nt(0, 0) != 1 || nt(0, 1) != 0 || nt(0, 2) != 0)
        throw std::domain_error("inconsistent input");

    // Orthogonality of the proof's V block, checked without materializing
    // any sqrt(2): B^T B = diag(1, 2, 2) where B is rows 2..4 of Mt*T.
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k) {
            Rational s = 0;
            for (int r = 1; r < 4; ++r) s += nt(r, i) * nt(r, k);
            Rational want = (i == k) ? (i == 0 ? Rational(1) : Rational(2)) : Rational(0);
            if (s != want) throw std::invalid_argument("invalid CCM");
        }

    Mat4Q wt;  // lifted matrix in the Lorentz frame, columns [c0 | Mt*T]
    wt(0, 0) = 2;
    for (int i = 1; i < 4; ++i) wt(i, 0) = -2 * nt(i, 0);
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 3; ++k) wt(i, k + 1) = nt(i, k);
    Mat4Q lifted = j * wt;

    // lifted is the ACC matrix of the configuration with CC coordinates
    // M*T, i.e. the target translated by (b, c) then dilated by 1/a (with a
    // global orientation flip when a < 0). Undo that by the exact right
    // action: W = sign(a) * lifted * V_d * V_t.
    Mat4Q vd_inv = dilation_right(1 / a);
    Mat4Q vt_inv = translation_right(b, c);
    Mat4Q w = lifted * vd_inv.inverse() * vt_inv.inverse();
    if (a < 0) w = -w;

    if (forms::congruence(w, qd()) != qw())
        throw std::domain_error("lift failed congruence check");
    if (!(last_three_columns(w) == m))
        throw std::domain_error("lift failed to reproduce input columns");
    return w;
}

Mat4Q lift_by_linear_solve(const Mat43Q& m) {
    if (!validate_ccm(m)) throw std::invalid_argument("invalid CCM");
    // Want x with M^T y = (-4, 0, 0)^T for y = Q_D x, and y^T Q_D y = 0.
    // Gaussian elimination on the 3x4 system [M^T | rhs].
    Rational aug[3][5];
    for (int i = 0; i < 3; ++i) {
        for (int k = 0; k < 4; ++k) aug[i][k] = m(k, i);
        aug[i][4] = (i == 0) ? Rational(-4) : Rational(0);
    }
    int pivot_col[3];
    int r = 0;
    for (int c = 0; c < 4 && r < 3; ++c) {
        int p = -1;
        for (int i = r; i < 3; ++i)
            if (aug[i][c] != 0) { p = i; break; }
        if (p < 0) continue;
        std::swap_ranges(aug[p], aug[p] + 5, aug[r]);
        Rational pv = aug[r][c];
        for (int k = 0; k < 5; ++k) aug[r][k] /= pv;
        for (int i = 0; i < 3; ++i) {
            if (i == r || aug[i][c] == 0) continue;
            Rational f = aug[i][c];
            for (int k = 0; k < 5; ++k) aug[i][k] -= f * aug[r][k];
        }
        pivot_col[r++] = c;
    }
    if (r != 3) throw std::domain_error("CCM has rank < 3");
    int free_col = 0 + 1 + 2 + 3;
    for (int i = 0; i < 3; ++i) free_col -= pivot_col[i];

    Vec4Q yp{}, n{};
    n[free_col] = 1;
    for (int i = 0; i < 3; ++i) {
        yp[pivot_col[i]] = aug[i][4];
        n[pivot_col[i]] = -aug[i][free_col];
    }
    const Mat4Q& q = qd();
    auto quad = [&](const Vec4Q& u, const Vec4Q& v) {
        Rational s = 0;
        for (int i = 0; i < 4; ++i)
            for (int k = 0; k < 4; ++k) s += u[i] * q(i, k) * v[k];
        return s;
    };
    if (quad(n, n) != 0) throw std::domain_error("null direction is not isotropic");
    Rational cross = quad(n, yp);
    if (cross == 0) throw std::domain_error("degenerate lift system");
    Rational t = -quad(yp, yp) / (2 * cross);
    Vec4Q y = yp + t * n;
    Vec4Q x = q * y;

    Mat4Q w;
    for (int i = 0; i < 4; ++i) {
        w(i, 0) = x[i];
        for (int k = 0; k < 3; ++k) w(i, k + 1) = m(i, k);
    }
    if (forms::congruence(w, qd()) != qw())
        throw std::domain_error("linear-solve lift failed congruence");
    return w;
}

int total_orientation(const Mat4Q& w) {
    Rational bsum = w(0, 1) + w(1, 1) + w(2, 1) + w(3, 1);
    if (bsum == 0) throw std::invalid_argument("invalid orientation sum");
    return bsum > 0 ? 1 : -1;
}

Mat4Q duality_operator() { return -forms::q_descartes(); }

Mat4Q dual_configuration(const Mat4Q& w) { return duality_operator() * w; }

bool descartes_circle_check(const Vec4Q& b) {
    const Mat4Q& q = qd();
    Rational s = 0;
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) s += b[i] * q(i, k) * b[k];
    return s == 0;
}

Mat4Q permute_rows(const Mat4Q& w, const std::array<int, 4>& sigma) {
    Mat4Q p;
    for (int i = 0; i < 4; ++i) p.set_row(i, w.row(sigma[i]));
    return p;
}

Mat4Q reverse_orientation(const Mat4Q& w) { return -w; }

Mat4Q canonical_form(const Mat4Q& w) {
    Mat4Q v = (total_orientation(w) > 0) ? w : -w;
    std::array<Vec4Q, 4> rows{v.row(0), v.row(1), v.row(2), v.row(3)};
    std::sort(rows.begin(), rows.end(), [](const Vec4Q& a, const Vec4Q& b) {
        for (int k = 0; k < 4; ++k) {
            int c = cmp(a[k], b[k]);
            if (c != 0) return c < 0;
        }
        return false;
    });
    return Mat4Q::from_rows(rows[0], rows[1], rows[2], rows[3]);
}

Vec4Q curvatures(const Mat4Q& w) { return w.col(1); }

TangencyPoints config_tangency_points(const Mat4Q& w) {
    TangencyPoints out;
    for (int i = 0; i < 4; ++i)
        for (int k = i + 1; k < 4; ++k) {
            Vec4Q a = w.row(i), b = w.row(k);
            if (a[1] + b[1] == 0) {
                ++out.at_infinity_pairs;
                continue;
            }
            out.points.push_back(circle::tangency_point(a, b));
        }
    return out;
}

}  // namespace apollonian::config
