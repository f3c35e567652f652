#include <doctest.h>

#include <random>
#include <stdexcept>

#include "apollonian/circle.hpp"
#include "apollonian/config.hpp"
#include "apollonian/forms.hpp"
#include "apollonian/group.hpp"
#include "apollonian/schottky.hpp"

using namespace apollonian;

namespace {

Mat4Q random_orbit_config(std::mt19937_64& rng, const Mat4Q& seed, int letters) {
    std::uniform_int_distribution<int> pick(0, 7);
    Mat4Q w = seed;
    for (int k = 0; k < letters; ++k)
        w = group::generator_matrix(static_cast<group::Gen>(pick(rng))) * w;
    return w;
}

}  // namespace

TEST_SUITE("config") {

TEST_CASE("validate_acc on the two reference configurations") {
    Mat4Q w0 = forms::base_configuration_w0();
    config::ConfigClass c0 = config::validate_acc(w0);
    CHECK(c0.total_orientation == 1);
    CHECK(w0.det() == 8);

    config::ConfigClass cn = config::validate_acc(-w0);
    CHECK(cn.total_orientation == -1);
    CHECK((-w0).det() == 8);  // negating all 16 entries keeps the determinant

    Mat4Q wd0 = schottky::w_d0();
    config::ConfigClass cd = config::validate_acc(wd0);
    CHECK(cd.total_orientation == 1);
    Vec4Q b = config::curvatures(wd0);
    CHECK(b == Vec4Q{Rational(-1), Rational(2), Rational(2), Rational(3)});

    Mat4Q bad = w0;
    bad(0, 0) = 3;
    CHECK_THROWS_WITH_AS(config::validate_acc(bad), "not a Descartes configuration",
                         std::invalid_argument);
}

TEST_CASE("total_orientation") {
    Mat4Q w0 = forms::base_configuration_w0();
    CHECK(config::total_orientation(w0) == 1);
    CHECK(config::total_orientation(-w0) == -1);
    CHECK(config::total_orientation(schottky::w_d0()) == 1);
    Mat4Q zero_sum;  // all-zero curvature column
    CHECK_THROWS_WITH_AS(config::total_orientation(zero_sum), "invalid orientation sum",
                         std::invalid_argument);
}

TEST_CASE("validate_ccm") {
    Mat4Q w0 = forms::base_configuration_w0();
    Mat43Q m = config::last_three_columns(w0);
    CHECK(config::validate_ccm(m));

    Mat43Q zero;
    CHECK_FALSE(config::validate_ccm(zero));

    // zeroing the first (curvature) column keeps the quadratic relation but
    // is rejected by the nonzero-first-column rule
    Mat43Q hollow = m;
    for (int i = 0; i < 4; ++i) hollow(i, 0) = 0;
    auto g = congruence43(hollow, forms::q_descartes());
    CHECK(g[0] == 0);
    CHECK(g[4] == 2);
    CHECK(g[8] == 2);
    CHECK_FALSE(config::validate_ccm(hollow));
}

TEST_CASE("lift_ccm_to_acc round trips") {
    Mat4Q w0 = forms::base_configuration_w0();
    CHECK(config::lift_ccm_to_acc(config::last_three_columns(w0)) == w0);

    // T != identity here: curvature sum is 6 and the y-moment is nonzero
    Mat4Q wd0 = schottky::w_d0();
    CHECK(config::lift_ccm_to_acc(config::last_three_columns(wd0)) == wd0);

    std::mt19937_64 rng(7);
    for (int t = 0; t < 20; ++t) {
        Mat4Q w = random_orbit_config(rng, t % 2 ? wd0 : w0, 4);
        CHECK(config::lift_ccm_to_acc(config::last_three_columns(w)) == w);
    }

    CHECK_THROWS_AS(config::lift_ccm_to_acc(Mat43Q{}), std::invalid_argument);
}

TEST_CASE("lift agrees with the independent linear-solve oracle") {
    Mat4Q w0 = forms::base_configuration_w0();
    Mat4Q wd0 = schottky::w_d0();
    std::mt19937_64 rng(8);
    for (int t = 0; t < 12; ++t) {
        Mat4Q w = random_orbit_config(rng, t % 2 ? wd0 : w0, 3);
        Mat43Q m = config::last_three_columns(w);
        CHECK(config::lift_ccm_to_acc(m) == config::lift_by_linear_solve(m));
    }
}

TEST_CASE("dual_configuration") {
    Mat4Q w0 = forms::base_configuration_w0();
    Mat4Q wd0 = schottky::w_d0();

    SUBCASE("involution") {
        CHECK(config::dual_configuration(config::dual_configuration(w0)) == w0);
        CHECK(config::dual_configuration(config::dual_configuration(wd0)) == wd0);
    }
    SUBCASE("first dual row of the strip configuration") {
        Mat4Q d = config::dual_configuration(w0);
        CHECK(d.row(0) == Vec4Q{Rational(0), Rational(1), Rational(0), Rational(-1)});
        CHECK(config::is_valid_acc(d));
    }
    SUBCASE("dual of the Appendix configuration") {
        // The printed dual matrix has a sign typo in row 3 and carries rows
        // 1 and 4 exchanged; compare against the corrected forms.
        Mat4Q d = config::dual_configuration(wd0);
        CHECK(d == schottky::w_d0_dual());
        Mat4Q printed = schottky::w_d0_dual_printed_corrected();
        CHECK(config::is_valid_acc(printed));
        CHECK(config::permute_rows(printed, {3, 1, 2, 0}) == d);
    }
    SUBCASE("dual circles pass through the tangency points") {
        for (const Mat4Q& w : {w0, wd0}) {
            Mat4Q d = config::dual_configuration(w);
            auto tp = config::config_tangency_points(w);
            for (const auto& pt : tp.points) {
                double px = to_double(pt[0]), py = to_double(pt[1]);
                double best = 1e9;
                for (int i = 0; i < 4; ++i) {
                    auto g = circle::acc_to_geometry(d.row(i));
                    double dist;
                    if (g.is_line) {
                        dist = std::fabs(to_double(g.line.unit_normal[0]) * px +
                                         to_double(g.line.unit_normal[1]) * py -
                                         to_double(g.line.offset));
                    } else {
                        double cx = to_double(g.circle.center[0]);
                        double cy = to_double(g.circle.center[1]);
                        double r = std::fabs(to_double(g.circle.oriented_radius));
                        dist = std::fabs(std::hypot(px - cx, py - cy) - r);
                    }
                    best = std::min(best, dist);
                }
                CHECK(best < 1e-9);
            }
        }
    }
}

TEST_CASE("descartes_circle_check") {
    CHECK(config::descartes_circle_check({Rational(-1), Rational(2), Rational(2), Rational(3)}));
    CHECK(config::descartes_circle_check({Rational(0), Rational(0), Rational(1), Rational(1)}));
    CHECK_FALSE(config::descartes_circle_check({Rational(1), Rational(1), Rational(1), Rational(1)}));
}

TEST_CASE("permutations and orientation reversal stay valid") {
    Mat4Q w0 = forms::base_configuration_w0();
    CHECK(config::permute_rows(w0, {0, 1, 2, 3}) == w0);
    Mat4Q swapped = config::permute_rows(w0, {1, 0, 2, 3});
    CHECK(swapped.row(0) == w0.row(1));
    CHECK(config::is_valid_acc(swapped));
    CHECK(config::reverse_orientation(config::reverse_orientation(w0)) == w0);
}

TEST_CASE("canonical_form identifies unordered unoriented configurations") {
    Mat4Q w0 = forms::base_configuration_w0();
    Mat4Q canon = config::canonical_form(w0);
    std::array<int, 4> sigma{0, 1, 2, 3};
    do {
        CHECK(config::canonical_form(config::permute_rows(w0, sigma)) == canon);
        CHECK(config::canonical_form(-config::permute_rows(w0, sigma)) == canon);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
}

TEST_CASE("every orbit configuration satisfies the full row contract") {
    Mat4Q wd0 = schottky::w_d0();
    std::mt19937_64 rng(5);
    for (int t = 0; t < 10; ++t) {
        Mat4Q w = random_orbit_config(rng, wd0, 5);
        config::validate_acc(w);
        Vec4Q b = config::curvatures(w);
        CHECK(config::descartes_circle_check(b));
        for (int i = 0; i < 4; ++i) {
            CHECK(circle::tangency_value(w.row(i), w.row(i)) == Rational(1, 2));
            for (int j = i + 1; j < 4; ++j)
                CHECK(circle::tangency_value(w.row(i), w.row(j)) == Rational(-1, 2));
        }
    }
}

}  // TEST_SUITE
