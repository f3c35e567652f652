#pragma once

#include <array>
#include <complex>
#include <random>
#include <string>

#include "apollonian/circle.hpp"
#include "apollonian/mat4.hpp"

namespace apollonian::moebius {

using Complex = std::complex<double>;

// Double-precision 4x4 matrix for the generic (irrational) part of the
// right action.
class Mat4d {
public:
    Mat4d() = default;
    static Mat4d identity();
    static Mat4d from_exact(const Mat4Q& m);

    double& operator()(int i, int j) { return e_[i * 4 + j]; }
    double operator()(int i, int j) const { return e_[i * 4 + j]; }

    Mat4d transpose() const;
    friend Mat4d operator*(const Mat4d& a, const Mat4d& b);
    friend Mat4d operator-(const Mat4d& a);

    double max_abs_diff(const Mat4d& o) const;
    double max_abs() const;

private:
    std::array<double, 16> e_{};
};

// A general Moebius transformation together with the {I, -I} factor:
// z maps through (a z' + b) / (c z' + d) where z' is conj(z) when the
// conjugation flag is set; ad - bc = 1.
struct MoebiusElement {
    Complex a{1}, b{0}, c{0}, d{1};
    bool conjugation = false;
    int reflection_sign = 1;
};

MoebiusElement identity_element();

Complex apply_to_point(const MoebiusElement& g, Complex z);

MoebiusElement compose(const MoebiusElement& g, const MoebiusElement& h);  // g after h

// Exact right-action matrices (the printed V^{-1} forms) for rational data.
Mat4Q translation_matrix_exact(const Rational& x0, const Rational& y0);
/// Rotation part must satisfy cos^2 + sin^2 = 1 exactly; r > 0.
Mat4Q dilation_matrix_exact(const Rational& r, const Rational& cos_t,
                            const Rational& sin_t);
Mat4Q conjugation_matrix();  // diag(1, 1, 1, -1)
Mat4Q inversion_matrix();    // permutation swapping the first two coordinates

// Floating-point right-action matrices.
Mat4d translation_matrix(Complex z0);
Mat4d dilation_matrix(Complex lambda);

/// Right-action matrix V_g^{-1} with W_{g(D)} = W_D V_g^{-1}, built from the
/// linear-fractional decomposition; includes conjugation and the +-I factor.
Mat4d right_action_matrix(const MoebiusElement& g);

/// The automorph V_g = pi(g) in Aut(Q_W).
Mat4d moebius_to_autqw(const MoebiusElement& g);

/// W * V_g^{-1}; throws if the result drifts off the Q_W congruence.
Mat4d apply_moebius(const MoebiusElement& g, const Mat4Q& w, double tol = 1e-9);

/// Anti-holomorphic inversion fixing the given circle (or reflection across
/// the given line).
MoebiusElement inversion_in_circle(const circle::AccRow& row);

/// Wilker's explicit 4x4 image of +-(a b; c d) in the proper orthochronous
/// Lorentz group. Requires conjugation = false.
Mat4d wilker_lorentz_map(const MoebiusElement& g);

double congruence_error(const Mat4d& v, const Mat4Q& q);  // |V^T Q V - Q|_max

struct ChainReport {
    bool ok = true;
    std::string detail;
    int samples = 0;
};

/// Z pi(g) Z^{-1} lies in O(3,1) and agrees with the Wilker map up to an
/// overall sign; the sqrt(2) factor of Z cancels, so its integer part is
/// used exactly.
ChainReport verify_conjugacy_chain(int samples, unsigned rng_seed);

MoebiusElement random_conformal(std::mt19937_64& rng);

int total_orientation_sign(const Mat4d& w);

}  // namespace apollonian::moebius
