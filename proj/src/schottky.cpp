#include "apollonian/schottky.hpp"

#include <cmath>
#include <stdexcept>

#include "apollonian/config.hpp"
#include "apollonian/group.hpp"
#include "apollonian/moebius.hpp"

namespace apollonian::schottky {

std::pair<Mat2CQ, Mat2CQ> schottky_generators() {
    Mat2CQ p1{CQ(1, -1), CQ(1), CQ(1), CQ(1, 1)};
    Mat2CQ p2{CQ(1), CQ(0), CQ(0, -2), CQ(1)};
    return {p1, p2};
}

Mat2CQ commutator(const Mat2CQ& a, const Mat2CQ& b) {
    if (!(a.det() == CQ(1)) || !(b.det() == CQ(1)))
        throw std::invalid_argument("commutator needs unimodular inputs");
    return a * b * a.inverse_unimodular() * b.inverse_unimodular();
}

std::array<Mat2CQ, 4> inversive_generators() {
    Mat2CQ p1{CQ(1, -1), CQ(0, -1), CQ(0, 1), CQ(1, 1)};
    Mat2CQ p2{CQ(1, 1), CQ(0, -1), CQ(0, 1), CQ(1, -1)};
    Mat2CQ p3{CQ(1), CQ(0), CQ(0, 4), CQ(1)};
    Mat2CQ p4 = Mat2CQ::identity();
    return {p1, p2, p3, p4};
}

RelationReport verify_relations() {
    RelationReport rep;
    auto [P1, P2] = schottky_generators();
    auto p = inversive_generators();
    auto fail = [&](const std::string& why) {
        rep.ok = false;
        rep.detail = why;
    };

    if (!(P1.det() == CQ(1)) || !(P2.det() == CQ(1))) fail("generator determinant != 1");
    if (rep.ok && !(P1.trace() == CQ(2))) fail("trace(P1) != 2");
    if (rep.ok && !(P2.trace() == CQ(2))) fail("trace(P2) != 2");
    Mat2CQ comm = commutator(P1, P2);
    if (rep.ok && !(comm.trace() == CQ(-2))) fail("trace([P1,P2]) != -2");
    Mat2CQ comm_printed{CQ(-1, -2), CQ(0, 2), CQ(0, -2), CQ(-1, 2)};
    if (rep.ok && !(comm == comm_printed)) fail("commutator differs from printed matrix");

    Mat2CQ p2_inv_sq = P2.inverse_unimodular() * P2.inverse_unimodular();
    if (rep.ok && !(p[2] == p2_inv_sq)) fail("p3 != P2^-2");

    Mat2CQ p1_inv_sq = P1.inverse_unimodular() * P1.inverse_unimodular();
    Mat2CQ corrected = p[0] * p[1].inverse_unimodular();  // p1 p2^{-1}
    if (rep.ok && !(corrected == -p1_inv_sq)) fail("p1 p2^-1 != -P1^-2");
    Mat2CQ printed = p[0].inverse_unimodular() * p[1];  // the displayed p1^{-1} p2
    rep.printed_form_is_conjugate = (printed == (-p1_inv_sq).conj());
    if (rep.ok && !rep.printed_form_is_conjugate)
        fail("displayed relation is not the conjugate of the corrected one");

    Mat2CQ p2sq = p[1] * p[1];
    if (rep.ok && !(p2sq == -comm)) fail("p2^2 != -[P1,P2]");
    return rep;
}

Mat4Q w_d0() {
    return Mat4Q{1, -1, 0, 0,
                 0, 2, 1, 0,
                 0, 2, -1, 0,
                 1, 3, 0, -2};
}

Mat4Q w_d0_dual() { return config::dual_configuration(w_d0()); }

Mat4Q w_d0_dual_printed_corrected() {
    // As printed but with the row-3 sign typo fixed: (1,1,1,1) -> (1,1,1,-1).
    return Mat4Q{0, 0, 0, 1,
                 1, 1, -1, -1,
                 1, 1, 1, -1,
                 0, 4, 0, -1};
}

namespace {

using std::complex;

complex<double> to_cd(const CQ& z) { return {to_double(z.re), to_double(z.im)}; }

complex<double> apply(const Mat2CQ& m, bool conj_first, complex<double> z) {
    complex<double> zz = conj_first ? std::conj(z) : z;
    return (to_cd(m.a) * zz + to_cd(m.b)) / (to_cd(m.c) * zz + to_cd(m.d));
}

// Distance from a point to the circle/line given by an exact row.
double distance_to_circle(const circle::AccRow& row, complex<double> z) {
    circle::CircleGeometry g = circle::acc_to_geometry(row);
    if (g.is_line) {
        double nx = to_double(g.line.unit_normal[0]);
        double ny = to_double(g.line.unit_normal[1]);
        double m = to_double(g.line.offset);
        return std::fabs(nx * z.real() + ny * z.imag() - m);
    }
    complex<double> c(to_double(g.circle.center[0]), to_double(g.circle.center[1]));
    double r = std::fabs(to_double(g.circle.oriented_radius));
    return std::fabs(std::abs(z - c) - r);
}

// Points on the circle/line for the pointwise fixed check.
std::vector<complex<double>> sample_on_circle(const circle::AccRow& row, int n) {
    circle::CircleGeometry g = circle::acc_to_geometry(row);
    std::vector<complex<double>> pts;
    if (g.is_line) {
        double nx = to_double(g.line.unit_normal[0]);
        double ny = to_double(g.line.unit_normal[1]);
        double m = to_double(g.line.offset);
        complex<double> base(nx * m, ny * m), dir(-ny, nx);
        for (int k = 0; k < n; ++k) pts.push_back(base + (k - n / 2.0) * dir);
    } else {
        complex<double> c(to_double(g.circle.center[0]), to_double(g.circle.center[1]));
        double r = std::fabs(to_double(g.circle.oriented_radius));
        for (int k = 0; k < n; ++k) {
            double t = 2 * M_PI * k / n;
            pts.push_back(c + r * complex<double>(std::cos(t), std::sin(t)));
        }
    }
    return pts;
}

}  // namespace

InversionGeometryReport verify_inversion_geometry() {
    InversionGeometryReport rep;
    auto p = inversive_generators();
    Mat4Q w = w_d0();
    Mat4Q dual = w_d0_dual();
    const double tol = 1e-9;

    for (int i = 0; i < 4; ++i) {
        // which dual circle does s_{i+1} fix pointwise?
        int fixed = -1;
        for (int r = 0; r < 4; ++r) {
            bool all_on = true;
            for (auto z : sample_on_circle(dual.row(r), 8))
                if (distance_to_circle(dual.row(r), apply(p[i], true, z)) > tol) {
                    all_on = false;
                    break;
                }
            if (all_on) {
                fixed = r;
                break;
            }
        }
        if (fixed < 0) {
            rep.ok = false;
            rep.detail = "s_" + std::to_string(i + 1) + " fixes no dual circle";
            return rep;
        }
        rep.fixed_dual_row[i] = fixed + 1;

        // inversion in dual row j acts on W_D0 as the left generator S_{j+1}
        Mat4Q expected = group::generator_matrix(group::make_gen(fixed, false)) * w;
        moebius::MoebiusElement s;
        // build s_i directly from the printed p_i, conjugation first
        s.a = to_cd(p[i].a);
        s.b = to_cd(p[i].b);
        s.c = to_cd(p[i].c);
        s.d = to_cd(p[i].d);
        s.conjugation = true;
        moebius::Mat4d acted = moebius::apply_moebius(s, w);
        moebius::Mat4d want = moebius::Mat4d::from_exact(expected);
        if (acted.max_abs_diff(want) > 1e-9 * std::max(1.0, want.max_abs())) {
            rep.ok = false;
            rep.detail = "s_" + std::to_string(i + 1) + " does not act as S_" +
                         std::to_string(fixed + 1);
            return rep;
        }
        rep.induced_generator[i] = fixed + 1;
    }
    return rep;
}

LimitSample sample_limit_set(int depth, const std::vector<std::complex<double>>& seeds,
                             int cap) {
    if (depth < 0 || depth > cap) throw std::invalid_argument("depth over cap");
    LimitSample out;
    out.depth = depth;

    auto [P1, P2] = schottky_generators();
    struct M2d {
        complex<double> a, b, c, d;
    };
    auto lift = [&](const Mat2CQ& m) {
        return M2d{to_cd(m.a), to_cd(m.b), to_cd(m.c), to_cd(m.d)};
    };
    const M2d gens[4] = {lift(P1), lift(P1.inverse_unimodular()), lift(P2),
                         lift(P2.inverse_unimodular())};
    const char* names[4] = {"A", "a", "B", "b"};
    auto inverse_of = [](int k) { return k ^ 1; };

    // parabolic fixed points: P1 at -i, P2 at 0, [P1,P2] at 1
    std::vector<complex<double>> pts =
        seeds.empty() ? std::vector<complex<double>>{{0, -1}, {0, 0}, {1, 0}} : seeds;

    struct Node {
        M2d m;
        int last;
        std::string word;
    };
    std::vector<Node> frontier{{M2d{1, 0, 0, 1}, -1, ""}};
    for (int level = 1; level <= depth; ++level) {
        std::vector<Node> next;
        next.reserve(frontier.size() * 3);
        for (const Node& f : frontier)
            for (int k = 0; k < 4; ++k) {
                if (f.last >= 0 && k == inverse_of(f.last)) continue;
                M2d g = gens[k];
                // word matrix grows on the left: new = g * old
                M2d nm{g.a * f.m.a + g.b * f.m.c, g.a * f.m.b + g.b * f.m.d,
                       g.c * f.m.a + g.d * f.m.c, g.c * f.m.b + g.d * f.m.d};
                next.push_back({nm, k, names[k] + f.word});
            }
        frontier = std::move(next);
    }
    for (const Node& f : frontier)
        for (auto z : pts) {
            complex<double> w = (f.m.a * z + f.m.b) / (f.m.c * z + f.m.d);
            out.points.push_back(w);
            out.words.push_back(f.word);
        }
    return out;
}

}  // namespace apollonian::schottky
