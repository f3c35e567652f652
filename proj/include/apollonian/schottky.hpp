#pragma once

#include <array>
#include <complex>
#include <string>
#include <vector>

#include "apollonian/mat4.hpp"
#include "apollonian/rational.hpp"

namespace apollonian::schottky {

// Gaussian rational a + b i with exact arithmetic.
struct CQ {
    Rational re, im;

    CQ() : re(0), im(0) {}
    CQ(long r, long i = 0) : re(r), im(i) {}
    CQ(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    friend CQ operator+(const CQ& a, const CQ& b) { return {a.re + b.re, a.im + b.im}; }
    friend CQ operator-(const CQ& a, const CQ& b) { return {a.re - b.re, a.im - b.im}; }
    friend CQ operator-(const CQ& a) { return {-a.re, -a.im}; }
    friend CQ operator*(const CQ& a, const CQ& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(const CQ& a, const CQ& b) {
        return a.re == b.re && a.im == b.im;
    }
    CQ conj() const { return {re, -im}; }
};

// 2x2 complex-rational matrix, determinant 1 throughout (projective class
// modulo +-I tracked explicitly where it matters).
struct Mat2CQ {
    CQ a, b, c, d;

    friend Mat2CQ operator*(const Mat2CQ& x, const Mat2CQ& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
    friend Mat2CQ operator-(const Mat2CQ& x) { return {-x.a, -x.b, -x.c, -x.d}; }
    friend bool operator==(const Mat2CQ& x, const Mat2CQ& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }

    CQ det() const { return a * d - b * c; }
    CQ trace() const { return a + d; }
    Mat2CQ inverse_unimodular() const { return {d, -b, -c, a}; }  // det must be 1
    Mat2CQ conj() const { return {a.conj(), b.conj(), c.conj(), d.conj()}; }
    static Mat2CQ identity() { return {CQ(1), CQ(0), CQ(0), CQ(1)}; }
};

/// The parabolic Schottky pair P1 = [[1-i, 1], [1, 1+i]], P2 = [[1, 0], [-2i, 1]].
std::pair<Mat2CQ, Mat2CQ> schottky_generators();

/// A B A^{-1} B^{-1} (inputs must be unimodular).
Mat2CQ commutator(const Mat2CQ& a, const Mat2CQ& b);

/// The holomorphic parts p1..p4 of the inversive generators s_i = p_i o conj.
std::array<Mat2CQ, 4> inversive_generators();

struct RelationReport {
    bool ok = true;
    std::string detail;
    // The displayed p1^{-1} p2 = -P1^{-2} does not hold as a matrix identity;
    // the identity that does is p1 p2^{-1} = -P1^{-2}, and the displayed form
    // equals its complex conjugate. Both facts are checked.
    bool printed_form_is_conjugate = false;
};

RelationReport verify_relations();

struct InversionGeometryReport {
    bool ok = true;
    std::string detail;
    // fixed_dual_row[i] = row of D * W_D0 fixed by s_{i+1} (0-based)
    std::array<int, 4> fixed_dual_row{};
    // induced_generator[i] = j such that s_{i+1} acts on W_D0 as S_j (1-based)
    std::array<int, 4> induced_generator{};
};

/// Checks that each s_i = p_i o conj fixes one circle of the dual
/// configuration of D0 pointwise-on-circle and induces a left generator
/// action on W_D0; records the empirical index correspondence.
InversionGeometryReport verify_inversion_geometry();

/// The Appendix configuration: curvatures (-1, 2, 2, 3).
Mat4Q w_d0();

/// Its dual D * W_D0, and the corrected printed variant (rows 1 and 4
/// exchanged; the row-3 sign typo fixed).
Mat4Q w_d0_dual();
Mat4Q w_d0_dual_printed_corrected();

struct LimitSample {
    std::vector<std::complex<double>> points;
    std::vector<std::string> words;
    int depth = 0;
};

/// Images of the parabolic fixed points under all reduced words of exactly
/// the given length in P1^{+-1}, P2^{+-1}; deterministic lexicographic order.
LimitSample sample_limit_set(int depth, const std::vector<std::complex<double>>& seeds = {},
                             int cap = 10);

}  // namespace apollonian::schottky
