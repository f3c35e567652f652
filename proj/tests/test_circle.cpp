#include <doctest.h>

#include <random>

#include "apollonian/circle.hpp"
#include "apollonian/forms.hpp"

using namespace apollonian;
using circle::AccRow;

namespace {

AccRow row(long a, long b, long c, long d) {
    return {Rational(a), Rational(b), Rational(c), Rational(d)};
}

}  // namespace

TEST_SUITE("circle") {

TEST_CASE("circle_to_acc") {
    CHECK(circle::circle_to_acc({Rational(1), Rational(1)}, Rational(1)) == row(1, 1, 1, 1));
    CHECK(circle::circle_to_acc({Rational(0), Rational(0)}, Rational(1)) == row(-1, 1, 0, 0));
    CHECK(circle::circle_to_acc({Rational(0), Rational(1, 2)}, Rational(1, 2)) ==
          row(0, 2, 0, 1));
    CHECK_THROWS_AS(circle::circle_to_acc({Rational(0), Rational(0)}, Rational(0)),
                    std::invalid_argument);
}

TEST_CASE("line_to_acc") {
    CHECK(circle::line_to_acc({Rational(0), Rational(1)}, Rational(0)) == row(0, 0, 0, 1));
    CHECK(circle::line_to_acc({Rational(0), Rational(-1)}, Rational(0)) == row(0, 0, 0, -1));
    CHECK(circle::line_to_acc({Rational(0), Rational(1)}, Rational(1)) == row(2, 0, 0, 1));
    CHECK_THROWS_AS(circle::line_to_acc({Rational(1), Rational(1)}, Rational(0)),
                    std::invalid_argument);
    // exact rational point on the unit circle
    CHECK(circle::line_to_acc({Rational(3, 5), Rational(4, 5)}, Rational(2)) ==
          AccRow{Rational(4), Rational(0), Rational(3, 5), Rational(4, 5)});
}

TEST_CASE("acc_to_geometry inverts the constructors") {
    auto g = circle::acc_to_geometry(row(1, 1, 1, 1));
    REQUIRE_FALSE(g.is_line);
    CHECK(g.circle.center[0] == 1);
    CHECK(g.circle.center[1] == 1);
    CHECK(g.circle.oriented_radius == 1);

    auto l = circle::acc_to_geometry(row(2, 0, 0, 1));
    REQUIRE(l.is_line);
    CHECK(l.line.unit_normal[1] == 1);
    CHECK(l.line.offset == 1);

    auto c = circle::acc_to_geometry(row(0, 2, 0, 1));
    REQUIRE_FALSE(c.is_line);
    CHECK(c.circle.center[0] == 0);
    CHECK(c.circle.center[1] == Rational(1, 2));
    CHECK(c.circle.oriented_radius == Rational(1, 2));

    CHECK_THROWS_AS(circle::acc_to_geometry(row(1, 1, 1, 2)), std::invalid_argument);
}

TEST_CASE("round trip on random rational circles") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long> num(-20, 20), den(1, 9);
    for (int t = 0; t < 50; ++t) {
        Rational x = make_rational(num(rng), den(rng));
        Rational y = make_rational(num(rng), den(rng));
        Rational r = make_rational(num(rng), den(rng));
        if (r == 0) continue;
        AccRow a = circle::circle_to_acc({x, y}, r);
        CHECK(circle::row_invariant_holds(a));
        auto g = circle::acc_to_geometry(a);
        REQUIRE_FALSE(g.is_line);
        CHECK(g.circle.center[0] == x);
        CHECK(g.circle.center[1] == y);
        CHECK(g.circle.oriented_radius == r);
    }
}

TEST_CASE("invert_in_unit_circle") {
    CHECK(circle::invert_in_unit_circle(row(1, 1, 1, 1)) == row(1, 1, 1, 1));
    CHECK(circle::invert_in_unit_circle(row(2, 0, 0, 1)) == row(0, 2, 0, 1));
    AccRow a = row(4, 3, 2, 3);
    CHECK(circle::invert_in_unit_circle(circle::invert_in_unit_circle(a)) == a);
    // geometric cross-check: the line y = 1 inverts to the circle through
    // the origin of radius 1/2 centered at (0, 1/2)
    auto g = circle::acc_to_geometry(circle::invert_in_unit_circle(row(2, 0, 0, 1)));
    CHECK(g.circle.center[1] == Rational(1, 2));
}

TEST_CASE("tangency_value") {
    Mat4Q w0 = forms::base_configuration_w0();
    for (int i = 0; i < 4; ++i) CHECK(circle::tangency_value(w0.row(i), w0.row(i)) == Rational(1, 2));
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            CHECK(circle::tangency_value(w0.row(i), w0.row(j)) == Rational(-1, 2));
}

TEST_CASE("tangency_point") {
    CHECK(circle::tangency_point(row(0, 2, 0, 1), row(0, 2, 0, -1)) ==
          Vec2Q{Rational(0), Rational(0)});
    Mat4Q w0 = forms::base_configuration_w0();
    CHECK(circle::tangency_point(w0.row(0), w0.row(2)) == Vec2Q{Rational(1), Rational(1)});
    CHECK(circle::tangency_point(w0.row(1), w0.row(2)) == Vec2Q{Rational(1), Rational(-1)});
    // parallel lines: curvature sum is zero
    CHECK_THROWS_AS(circle::tangency_point(w0.row(0), w0.row(1)), std::domain_error);
}

}  // TEST_SUITE
