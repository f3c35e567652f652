#pragma once

#include <array>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>

#include "apollonian/rational.hpp"

namespace apollonian {

using Vec4Q = std::array<Rational, 4>;

inline Vec4Q operator+(const Vec4Q& a, const Vec4Q& b) {
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
}

inline Vec4Q operator-(const Vec4Q& a) { return {-a[0], -a[1], -a[2], -a[3]}; }

inline Vec4Q operator*(const Rational& s, const Vec4Q& a) {
    return {s * a[0], s * a[1], s * a[2], s * a[3]};
}

// Dense exact-rational 4x4 matrix, row major. Rows and columns are indexed
// 0..3 internally; the circle ordering 1..4 of the coordinate convention
// maps to rows 0..3.
class Mat4Q {
public:
    Mat4Q() = default;

    explicit Mat4Q(std::initializer_list<long> ints) {
        if (ints.size() != 16) throw std::invalid_argument("Mat4Q needs 16 entries");
        std::size_t k = 0;
        for (long v : ints) e_[k++] = Rational(v);
    }

    static Mat4Q identity() {
        Mat4Q m;
        for (int i = 0; i < 4; ++i) m(i, i) = 1;
        return m;
    }

    static Mat4Q from_rows(const Vec4Q& r0, const Vec4Q& r1, const Vec4Q& r2,
                           const Vec4Q& r3) {
        Mat4Q m;
        const Vec4Q* rows[4] = {&r0, &r1, &r2, &r3};
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) m(i, j) = (*rows[i])[j];
        return m;
    }

    Rational& operator()(int i, int j) { return e_[i * 4 + j]; }
    const Rational& operator()(int i, int j) const { return e_[i * 4 + j]; }

    Vec4Q row(int i) const { return {e_[i * 4], e_[i * 4 + 1], e_[i * 4 + 2], e_[i * 4 + 3]}; }
    Vec4Q col(int j) const { return {e_[j], e_[4 + j], e_[8 + j], e_[12 + j]}; }

    void set_row(int i, const Vec4Q& r) {
        for (int j = 0; j < 4; ++j) e_[i * 4 + j] = r[j];
    }

    Mat4Q transpose() const {
        Mat4Q t;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend Mat4Q operator*(const Mat4Q& a, const Mat4Q& b) {
        Mat4Q c;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                Rational s = 0;
                for (int k = 0; k < 4; ++k) s += a(i, k) * b(k, j);
                c(i, j) = s;
            }
        return c;
    }

    friend Mat4Q operator+(const Mat4Q& a, const Mat4Q& b) {
        Mat4Q c;
        for (int k = 0; k < 16; ++k) c.e_[k] = a.e_[k] + b.e_[k];
        return c;
    }

    friend Mat4Q operator-(const Mat4Q& a, const Mat4Q& b) {
        Mat4Q c;
        for (int k = 0; k < 16; ++k) c.e_[k] = a.e_[k] - b.e_[k];
        return c;
    }

    friend Mat4Q operator*(const Rational& s, const Mat4Q& a) {
        Mat4Q c;
        for (int k = 0; k < 16; ++k) c.e_[k] = s * a.e_[k];
        return c;
    }

    friend Mat4Q operator-(const Mat4Q& a) { return Rational(-1) * a; }

    friend Vec4Q operator*(const Mat4Q& a, const Vec4Q& v) {
        Vec4Q r{};
        for (int i = 0; i < 4; ++i) {
            Rational s = 0;
            for (int k = 0; k < 4; ++k) s += a(i, k) * v[k];
            r[i] = s;
        }
        return r;
    }

    // Row vector times matrix (the right action on coordinate rows).
    friend Vec4Q operator*(const Vec4Q& v, const Mat4Q& a) {
        Vec4Q r{};
        for (int j = 0; j < 4; ++j) {
            Rational s = 0;
            for (int k = 0; k < 4; ++k) s += v[k] * a(k, j);
            r[j] = s;
        }
        return r;
    }

    bool operator==(const Mat4Q& o) const {
        for (int k = 0; k < 16; ++k)
            if (e_[k] != o.e_[k]) return false;
        return true;
    }
    bool operator!=(const Mat4Q& o) const { return !(*this == o); }

    Rational det() const {
        // Laplace expansion via 2x2 minors of the first two rows.
        auto m2 = [&](int c0, int c1) {
            return (*this)(0, c0) * (*this)(1, c1) - (*this)(0, c1) * (*this)(1, c0);
        };
        auto n2 = [&](int c0, int c1) {
            return (*this)(2, c0) * (*this)(3, c1) - (*this)(2, c1) * (*this)(3, c0);
        };
        return m2(0, 1) * n2(2, 3) - m2(0, 2) * n2(1, 3) + m2(0, 3) * n2(1, 2) +
               m2(1, 2) * n2(0, 3) - m2(1, 3) * n2(0, 2) + m2(2, 3) * n2(0, 1);
    }

    Mat4Q inverse() const {
        // Gauss-Jordan with exact pivots.
        Mat4Q a = *this;
        Mat4Q inv = identity();
        for (int col = 0; col < 4; ++col) {
            int piv = -1;
            for (int r = col; r < 4; ++r)
                if (a(r, col) != 0) { piv = r; break; }
            if (piv < 0) throw std::domain_error("Mat4Q::inverse: singular matrix");
            if (piv != col)
                for (int j = 0; j < 4; ++j) {
                    swap(a(piv, j), a(col, j));
                    swap(inv(piv, j), inv(col, j));
                }
            Rational p = a(col, col);
            for (int j = 0; j < 4; ++j) { a(col, j) /= p; inv(col, j) /= p; }
            for (int r = 0; r < 4; ++r) {
                if (r == col || a(r, col) == 0) continue;
                Rational f = a(r, col);
                for (int j = 0; j < 4; ++j) {
                    a(r, j) -= f * a(col, j);
                    inv(r, j) -= f * inv(col, j);
                }
            }
        }
        return inv;
    }

    bool is_integral() const {
        for (const auto& q : e_)
            if (!is_integer(q)) return false;
        return true;
    }

    std::string to_string() const {
        std::string s;
        for (int i = 0; i < 4; ++i) {
            s += '[';
            for (int j = 0; j < 4; ++j) {
                s += apollonian::to_string((*this)(i, j));
                if (j < 3) s += ' ';
            }
            s += ']';
            if (i < 3) s += '\n';
        }
        return s;
    }

private:
    std::array<Rational, 16> e_{};
};

// 4x3 exact-rational matrix (curvature-center coordinates).
class Mat43Q {
public:
    Mat43Q() = default;

    Rational& operator()(int i, int j) { return e_[i * 3 + j]; }
    const Rational& operator()(int i, int j) const { return e_[i * 3 + j]; }

    bool operator==(const Mat43Q& o) const {
        for (int k = 0; k < 12; ++k)
            if (e_[k] != o.e_[k]) return false;
        return true;
    }

    friend Mat43Q operator*(const Mat4Q& a, const Mat43Q& b) {
        Mat43Q c;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 3; ++j) {
                Rational s = 0;
                for (int k = 0; k < 4; ++k) s += a(i, k) * b(k, j);
                c(i, j) = s;
            }
        return c;
    }

private:
    std::array<Rational, 12> e_{};
};

// M^T Q M for the 4x3 case; result is symmetric 3x3 returned densely.
inline std::array<Rational, 9> congruence43(const Mat43Q& m, const Mat4Q& q) {
    std::array<Rational, 9> out{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Rational s = 0;
            for (int a = 0; a < 4; ++a)
                for (int b = 0; b < 4; ++b) s += m(a, i) * q(a, b) * m(b, j);
            out[i * 3 + j] = s;
        }
    return out;
}

}  // namespace apollonian
