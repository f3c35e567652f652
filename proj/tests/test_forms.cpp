#include <doctest.h>

#include <random>

#include "apollonian/forms.hpp"
#include "apollonian/group.hpp"

using namespace apollonian;

TEST_SUITE("forms") {

TEST_CASE("the three forms and their conjugators") {
    Mat4Q qd = forms::q_descartes();
    Mat4Q qw = forms::q_wilker();
    Mat4Q ql = forms::q_lorentz();
    Mat4Q j = forms::j0();

    SUBCASE("symmetry") {
        CHECK(qd == qd.transpose());
        CHECK(qw == qw.transpose());
        CHECK(ql == ql.transpose());
    }
    SUBCASE("J0 is a symmetric involution") {
        CHECK(j == j.transpose());
        CHECK(j * j == Mat4Q::identity());
        CHECK(j == j.inverse());
    }
    SUBCASE("Q_D is an involution") { CHECK(qd * qd == Mat4Q::identity()); }
    SUBCASE("A = J0 W0 matches the printed integral intertwiner") {
        Mat4Q a = forms::intertwiner_a();
        Mat4Q printed{2, 1, 0, 0,
                      2, -1, 0, 0,
                      0, 0, 1, 1,
                      0, 0, -1, 1};
        CHECK(a == printed);
    }
}

TEST_CASE("congruence") {
    Mat4Q qd = forms::q_descartes();
    Mat4Q qw = forms::q_wilker();
    Mat4Q ql = forms::q_lorentz();

    CHECK(forms::congruence(Mat4Q::identity(), qd) == qd);
    CHECK(forms::congruence(forms::j0(), ql) == qd);
    CHECK(forms::congruence(forms::intertwiner_a(), ql) == qw);
}

TEST_CASE("is_automorph") {
    Mat4Q qd = forms::q_descartes();
    CHECK(forms::is_automorph(Mat4Q::identity(), qd));
    CHECK(forms::is_automorph(group::generator_matrix(group::Gen::S1), qd));

    Mat4Q stretch = Mat4Q::identity();
    stretch(0, 0) = 2;
    CHECK_FALSE(forms::is_automorph(stretch, qd));
}

TEST_CASE("determinants computed exactly") {
    auto [dd, dl, dw] = forms::form_determinants();
    CHECK(dd == -1);
    CHECK(dl == -1);
    CHECK(dw == -64);
    CHECK(Mat4Q::identity().det() == 1);
    // det(Q_D)^2 = 1, consistent with Q_D^2 = I
    CHECK(dd * dd == 1);
}

TEST_CASE("automorph closure under products") {
    Mat4Q qd = forms::q_descartes();
    std::mt19937_64 rng(1234);
    std::uniform_int_distribution<int> pick(0, 7);
    for (int trial = 0; trial < 25; ++trial) {
        Mat4Q u = group::generator_matrix(static_cast<group::Gen>(pick(rng)));
        Mat4Q v = group::generator_matrix(static_cast<group::Gen>(pick(rng)));
        for (int k = 0; k < 3; ++k)
            v = v * group::generator_matrix(static_cast<group::Gen>(pick(rng)));
        REQUIRE(forms::is_automorph(u, qd));
        REQUIRE(forms::is_automorph(v, qd));
        CHECK(forms::is_automorph(u * v, qd));
    }
}

}  // TEST_SUITE
