#include "apollonian/moebius.hpp"

#include <cmath>
#include <stdexcept>

#include "apollonian/forms.hpp"

namespace apollonian::moebius {

Mat4d Mat4d::identity() {
    Mat4d m;
    for (int i = 0; i < 4; ++i) m(i, i) = 1.0;
    return m;
}

Mat4d Mat4d::from_exact(const Mat4Q& m) {
    Mat4d d;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) d(i, j) = to_double(m(i, j));
    return d;
}

Mat4d Mat4d::transpose() const {
    Mat4d t;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Mat4d operator*(const Mat4d& a, const Mat4d& b) {
    Mat4d c;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            double s = 0;
            for (int k = 0; k < 4; ++k) s += a(i, k) * b(k, j);
            c(i, j) = s;
        }
    return c;
}

Mat4d operator-(const Mat4d& a) {
    Mat4d c;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) c(i, j) = -a(i, j);
    return c;
}

double Mat4d::max_abs_diff(const Mat4d& o) const {
    double m = 0;
    for (int k = 0; k < 16; ++k) m = std::max(m, std::fabs(e_[k] - o.e_[k]));
    return m;
}

double Mat4d::max_abs() const {
    double m = 0;
    for (double v : e_) m = std::max(m, std::fabs(v));
    return m;
}

MoebiusElement identity_element() { return {}; }

Complex apply_to_point(const MoebiusElement& g, Complex z) {
    Complex zz = g.conjugation ? std::conj(z) : z;
    return (g.a * zz + g.b) / (g.c * zz + g.d);
}

MoebiusElement compose(const MoebiusElement& g, const MoebiusElement& h) {
    // (g o h)(z): conjugation flags combine as xor; when g conjugates, the
    // coefficients of h pass through conjugated.
    MoebiusElement r;
    Complex ha = h.a, hb = h.b, hc = h.c, hd = h.d;
    if (g.conjugation) {
        ha = std::conj(ha);
        hb = std::conj(hb);
        hc = std::conj(hc);
        hd = std::conj(hd);
    }
    r.a = g.a * ha + g.b * hc;
    r.b = g.a * hb + g.b * hd;
    r.c = g.c * ha + g.d * hc;
    r.d = g.c * hb + g.d * hd;
    r.conjugation = g.conjugation != h.conjugation;
    r.reflection_sign = g.reflection_sign * h.reflection_sign;
    return r;
}

Mat4Q translation_matrix_exact(const Rational& x0, const Rational& y0) {
    Mat4Q v = Mat4Q::identity();
    v(1, 0) = x0 * x0 + y0 * y0;
    v(1, 2) = x0;
    v(1, 3) = y0;
    v(2, 0) = 2 * x0;
    v(3, 0) = 2 * y0;
    return v;
}

Mat4Q dilation_matrix_exact(const Rational& r, const Rational& cos_t,
                            const Rational& sin_t) {
    if (r <= 0) throw std::invalid_argument("dilation needs r > 0");
    if (cos_t * cos_t + sin_t * sin_t != 1)
        throw std::invalid_argument("rotation part is not on the unit circle");
    Mat4Q v;
    v(0, 0) = r;
    v(1, 1) = 1 / r;
    v(2, 2) = cos_t;
    v(2, 3) = sin_t;
    v(3, 2) = -sin_t;
    v(3, 3) = cos_t;
    return v;
}

Mat4Q conjugation_matrix() {
    Mat4Q v = Mat4Q::identity();
    v(3, 3) = -1;
    return v;
}

Mat4Q inversion_matrix() {
    Mat4Q v;
    v(0, 1) = v(1, 0) = v(2, 2) = v(3, 3) = 1;
    return v;
}

Mat4d translation_matrix(Complex z0) {
    Mat4d v = Mat4d::identity();
    double x0 = z0.real(), y0 = z0.imag();
    v(1, 0) = x0 * x0 + y0 * y0;
    v(1, 2) = x0;
    v(1, 3) = y0;
    v(2, 0) = 2 * x0;
    v(3, 0) = 2 * y0;
    return v;
}

Mat4d dilation_matrix(Complex lambda) {
    double r = std::abs(lambda);
    if (r == 0) throw std::invalid_argument("zero dilation");
    double c = lambda.real() / r, s = lambda.imag() / r;
    Mat4d v;
    v(0, 0) = r;
    v(1, 1) = 1 / r;
    v(2, 2) = c;
    v(2, 3) = s;
    v(3, 2) = -s;
    v(3, 3) = c;
    return v;
}

namespace {

// Right-action matrix of z -> 1/z (inversion composed with conjugation).
Mat4d reciprocal_matrix() {
    Mat4d m;
    m(0, 1) = m(1, 0) = m(2, 2) = 1;
    m(3, 3) = -1;
    return m;
}

Mat4d conjugation_matrix_d() {
    Mat4d m = Mat4d::identity();
    m(3, 3) = -1;
    return m;
}

// Verifies the linear-fractional decomposition by evaluating both sides on
// a few test points away from the poles.
void check_decomposition(const MoebiusElement& holo, Complex ta, Complex lam,
                         bool use_reciprocal, Complex tb) {
    static const Complex probes[] = {{0, 0}, {1, 0}, {0, 1}, {2, -1}, {-3, 2}};
    int checked = 0;
    for (Complex z : probes) {
        Complex denom = holo.c * z + holo.d;
        if (std::abs(denom) < 1e-6) continue;
        Complex want = (holo.a * z + holo.b) / denom;
        Complex got = z;
        if (use_reciprocal) {
            got += tb;
            if (std::abs(got) < 1e-6) continue;
            got = lam / got + ta;
        } else {
            got = lam * got + ta;
        }
        if (std::abs(got - want) > 1e-6 * std::max(1.0, std::abs(want)))
            throw std::runtime_error("moebius decomposition self-check failed");
        if (++checked >= 3) break;
    }
    if (checked == 0) throw std::runtime_error("moebius decomposition unprobeable");
}

}  // namespace

Mat4d right_action_matrix(const MoebiusElement& g) {
    if (std::abs(g.a * g.d - g.b * g.c - Complex(1, 0)) > 1e-9)
        throw std::invalid_argument("determinant is not normalized to 1");
    Mat4d m = Mat4d::identity();
    if (g.conjugation) m = m * conjugation_matrix_d();
    // decompose the holomorphic part; innermost factor multiplies first
    if (std::abs(g.c) < 1e-300) {
        // z -> (a/d) z + b/d
        Complex lam = g.a / g.d, t = g.b / g.d;
        check_decomposition(g, t, lam, false, {});
        m = m * dilation_matrix(lam) * translation_matrix(t);
    } else {
        // z -> a/c - (1/c^2) / (z + d/c)
        Complex ta = g.a / g.c, lam = -1.0 / (g.c * g.c), tb = g.d / g.c;
        check_decomposition(g, ta, lam, true, tb);
        m = m * translation_matrix(tb) * reciprocal_matrix() * dilation_matrix(lam) *
            translation_matrix(ta);
    }
    if (g.reflection_sign < 0) m = -m;
    return m;
}

Mat4d moebius_to_autqw(const MoebiusElement& g) {
    // V = M^{-1} via the automorph identity V^{-1} = Q_W^{-1} V^T Q_W.
    Mat4d m = right_action_matrix(g);
    static const Mat4d qw = Mat4d::from_exact(forms::q_wilker());
    static const Mat4d qw_inv = Mat4d::from_exact(forms::q_wilker().inverse());
    return qw_inv * m.transpose() * qw;
}

double congruence_error(const Mat4d& v, const Mat4Q& q) {
    Mat4d qd = Mat4d::from_exact(q);
    Mat4d g = v.transpose() * qd * v;
    return g.max_abs_diff(qd);
}

Mat4d apply_moebius(const MoebiusElement& g, const Mat4Q& w, double tol) {
    Mat4d m = right_action_matrix(g);
    Mat4d wd = Mat4d::from_exact(w);
    Mat4d out = wd * m;
    static const Mat4d qd = Mat4d::from_exact(forms::q_descartes());
    static const Mat4d qw = Mat4d::from_exact(forms::q_wilker());
    Mat4d cong = out.transpose() * qd * out;
    double scale = std::max(1.0, out.max_abs());
    if (cong.max_abs_diff(qw) > tol * scale * scale)
        throw std::runtime_error("moebius action lost validity (numeric instability)");
    return out;
}

MoebiusElement inversion_in_circle(const circle::AccRow& row) {
    circle::CircleGeometry geo = circle::acc_to_geometry(row);
    MoebiusElement g;
    g.conjugation = true;
    if (!geo.is_line) {
        Complex z0(to_double(geo.circle.center[0]), to_double(geo.circle.center[1]));
        double r = std::fabs(to_double(geo.circle.oriented_radius));
        // z -> (z0 conj(z) + r^2 - |z0|^2) / (conj(z) - conj(z0)), det -r^2
        Complex norm = Complex(0, 1) * r;  // sqrt of -r^2
        g.a = z0 / norm;
        g.b = (r * r - std::norm(z0)) / norm;
        g.c = 1.0 / norm;
        g.d = -std::conj(z0) / norm;
    } else {
        double nx = to_double(geo.line.unit_normal[0]);
        double ny = to_double(geo.line.unit_normal[1]);
        double m = to_double(geo.line.offset);
        Complex n(nx, ny);
        // reflection across x.n = m: z -> 2 m n - n^2 conj(z), normalized
        g.a = Complex(0, 1) * n;
        g.b = Complex(0, -2) * m;
        g.c = 0;
        g.d = Complex(0, -1) * std::conj(n);
    }
    return g;
}

Mat4d wilker_lorentz_map(const MoebiusElement& g) {
    if (g.conjugation) throw std::invalid_argument("wilker map needs a holomorphic element");
    Complex a = g.a, b = g.b, c = g.c, d = g.d;
    auto Re = [](Complex z) { return z.real(); };
    auto Im = [](Complex z) { return z.imag(); };
    double na = std::norm(a), nb = std::norm(b), nc = std::norm(c), nd = std::norm(d);
    Complex ac = a * std::conj(c), bd = b * std::conj(d);
    Complex ab = a * std::conj(b), cd = c * std::conj(d);
    Complex ad = a * std::conj(d), bc = b * std::conj(c);
    Mat4d m;
    m(0, 0) = 0.5 * (na + nb + nc + nd);
    m(0, 1) = Im(ac + bd);
    m(0, 2) = 0.5 * (na + nb - nc - nd);
    m(0, 3) = Re(ac + bd);
    m(1, 0) = Im(-ab - cd);
    m(1, 1) = Re(ad - bc);
    m(1, 2) = Im(-ab + cd);
    m(1, 3) = Im(-ad + bc);
    m(2, 0) = 0.5 * (na - nb + nc - nd);
    m(2, 1) = Im(ac - bd);
    m(2, 2) = 0.5 * (na - nb - nc + nd);
    m(2, 3) = Re(ac - bd);
    m(3, 0) = Re(ab + cd);
    m(3, 1) = Im(ad + bc);
    m(3, 2) = Re(ab - cd);
    m(3, 3) = Re(ad + bc);
    return m;
}

ChainReport verify_conjugacy_chain(int samples, unsigned rng_seed) {
    ChainReport rep;
    rep.samples = samples;
    // Z = sqrt(2) K; the scalar cancels in Z V Z^{-1}.
    Mat4Q k;
    k(0, 0) = 1; k(0, 1) = 1;
    k(1, 3) = -1;
    k(2, 0) = 1; k(2, 1) = -1;
    k(3, 2) = -1;
    Mat4d kd = Mat4d::from_exact(k);
    Mat4d kd_inv = Mat4d::from_exact(k.inverse());
    std::mt19937_64 rng(rng_seed);
    for (int s = 0; s < samples; ++s) {
        MoebiusElement g = (s == 0) ? identity_element() : random_conformal(rng);
        Mat4d v = moebius_to_autqw(g);
        Mat4d l = kd * v * kd_inv;
        if (congruence_error(l, forms::q_lorentz()) > 1e-9 * std::max(1.0, l.max_abs() * l.max_abs())) {
            rep.ok = false;
            rep.detail = "conjugated matrix left O(3,1)";
            return rep;
        }
        Mat4d w = wilker_lorentz_map(g);
        double same = l.max_abs_diff(w);
        double flip = (-l).max_abs_diff(w);
        if (std::min(same, flip) > 1e-9 * std::max(1.0, w.max_abs())) {
            rep.ok = false;
            rep.detail = "conjugation disagrees with the Wilker map";
            return rep;
        }
    }
    return rep;
}

MoebiusElement random_conformal(std::mt19937_64& rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    for (;;) {
        MoebiusElement g;
        g.a = {n(rng), n(rng)};
        g.b = {n(rng), n(rng)};
        g.c = {n(rng), n(rng)};
        g.d = {n(rng), n(rng)};
        Complex det = g.a * g.d - g.b * g.c;
        if (std::abs(det) < 1e-3) continue;
        Complex s = std::sqrt(det);
        g.a /= s;
        g.b /= s;
        g.c /= s;
        g.d /= s;
        return g;
    }
}

int total_orientation_sign(const Mat4d& w) {
    double s = w(0, 1) + w(1, 1) + w(2, 1) + w(3, 1);
    return s > 0 ? 1 : (s < 0 ? -1 : 0);
}

}  // namespace apollonian::moebius
