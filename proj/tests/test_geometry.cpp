#include "doctest.h"
#include "fixtures.hpp"

#include "homarea/errors.hpp"
#include "homarea/geometry.hpp"

using namespace homarea;
using fixtures::path;

TEST_CASE("parse_rational accepts decimals and fractions exactly") {
    CHECK(*parse_rational("3") == Rational(3));
    CHECK(*parse_rational("-2.5") == Rational(-5, 2));
    CHECK(*parse_rational("0.1") == Rational(1, 10));
    CHECK(*parse_rational("1e2") == Rational(100));
    CHECK(*parse_rational("1.5e-1") == Rational(3, 20));
    CHECK(*parse_rational("-7/21") == Rational(-1, 3));
    CHECK_FALSE(parse_rational("1/0"));
    CHECK_FALSE(parse_rational("abc"));
    CHECK_FALSE(parse_rational(""));
    CHECK(to_string(*parse_rational("6/4")) == "3/2");
}

TEST_CASE("orientation and sectors") {
    Point o = make_point(0, 0), a = make_point(1, 0), b = make_point(0, 1);
    CHECK(orient(o, a, b) == 1);
    CHECK(orient(o, b, a) == -1);
    CHECK(orient(o, a, make_point(2, 0)) == 0);
    CHECK(in_ccw_sector(a, b, make_point(1, 1)));
    CHECK_FALSE(in_ccw_sector(a, b, make_point(1, -1)));
    CHECK(in_ccw_sector(b, a, make_point(-1, -1)));
    CHECK(in_ccw_sector(a, make_point(-1, 0), make_point(0, 1)));
    CHECK_FALSE(in_ccw_sector(a, make_point(-1, 0), make_point(0, -1)));
}

TEST_CASE("segment intersection classification") {
    auto seg = [](long ax, long ay, long bx, long by) { return Segment{make_point(ax, ay), make_point(bx, by)}; };
    auto x = segment_intersection(seg(0, 0, 2, 2), seg(0, 2, 2, 0));
    REQUIRE(x);
    CHECK(x->kind == HitKind::transversal_interior);
    CHECK(*x->point == make_point(1, 1));
    CHECK(x->t == Rational(1, 2));

    auto shared = segment_intersection(seg(0, 0, 1, 0), seg(1, 0, 1, 1));
    REQUIRE(shared);
    CHECK(shared->kind == HitKind::endpoint_shared);

    auto tee = segment_intersection(seg(0, 0, 2, 0), seg(1, 0, 1, 1));
    REQUIRE(tee);
    CHECK(tee->kind == HitKind::degenerate);

    auto overlap = segment_intersection(seg(0, 0, 2, 0), seg(1, 0, 3, 0));
    REQUIRE(overlap);
    CHECK(overlap->kind == HitKind::degenerate);

    CHECK_FALSE(segment_intersection(seg(0, 0, 1, 0), seg(0, 1, 1, 1)));
    CHECK_FALSE(segment_intersection(seg(0, 0, 1, 0), seg(2, 0, 3, 0)));
}

TEST_CASE("signed area and crossing prefixes") {
    std::vector<Point> pentagon{make_point(0, 0), make_point(4, 0), make_point(3, -3), make_point(6, 0),
                                make_point(3, 3)};
    CHECK(abs(signed_area(pentagon)) == 12);
    std::vector<Point> square{make_point(0, 0), make_point(1, 0), make_point(1, 1), make_point(0, 1)};
    CHECK(signed_area(square) == 1);

    Polyline l = path({{0, 0}, {1, 0}, {1, 1}});
    auto s = cross_prefix(l);
    REQUIRE(s.size() == 3);
    CHECK(s[0] == 0);
    CHECK(s[1] == 0);
    CHECK(s[2] == 1);
    CHECK(path_cross(l, s, {0, 0}, {2, 0}) == 1);
    CHECK(path_cross(l, s, {0, Rational(1, 2)}, {1, Rational(1, 2)}) == Rational(1, 2));
    CHECK(path_cross(l, s, {1, 0}, {1, Rational(1, 2)}) == Rational(1, 2));
}

TEST_CASE("polyline construction rejects repeated vertices") {
    CHECK_THROWS_AS(path({{0, 0}}), InputError);
    CHECK_THROWS_AS(path({{0, 0}, {0, 0}, {1, 1}}), InputError);
    CHECK_THROWS_AS(fixtures::cycle({{0, 0}, {1, 0}}), InputError);
    CHECK_THROWS_AS(fixtures::cycle({{0, 0}, {1, 0}, {1, 1}, {0, 0}}), InputError);
    Polyline p = path({{0, 0}, {2, 0}, {2, 2}});
    CHECK(p.segment_count() == 2);
    CHECK(p.point_at({1, Rational(1, 2)}) == make_point(2, 1));
    CHECK(p.point_at({2, 0}) == make_point(2, 2));
    CHECK(p.reversed().front() == make_point(2, 2));
}
