#include "doctest.h"
#include "fixtures.hpp"

#include "homarea/arrangement.hpp"
#include "homarea/errors.hpp"

using namespace homarea;
using namespace fixtures;

namespace {

Rational bounded_total(const Arrangement &arr) {
    Rational s = 0;
    for (const Cell &c : arr.cells())
        if (!c.unbounded) s += c.area;
    return s;
}

std::size_t bounded_count(const Arrangement &arr) {
    std::size_t n = 0;
    for (const Cell &c : arr.cells()) n += c.unbounded ? 0 : 1;
    return n;
}

} // namespace

TEST_CASE("triangulation covers the box and honours constraints") {
    std::vector<Point> pts{make_point(0, 0), make_point(4, 0), make_point(2, 2), make_point(2, 1)};
    Triangulation tri(pts, {{0, 1}, {1, 2}, {2, 0}}, Rational(2));
    Rational total = 0;
    for (std::size_t t = 0; t < tri.triangle_count(); ++t) total += tri.area(static_cast<int>(t));
    CHECK(total == (tri.box_max().x - tri.box_min().x) * (tri.box_max().y - tri.box_min().y));
    for (auto [u, v] : std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 0}}) {
        auto e = tri.find_edge(u, v);
        CHECK(e.tri >= 0);
        CHECK(tri.constrained(e.tri, e.index));
    }
    CHECK(tri.locate(make_point(100, 100)) == -1);
    CHECK(tri.locate(make_point(1, 1) ) >= 0);
}

TEST_CASE("constraint insertion through many crossing edges") {
    std::vector<Point> pts;
    for (long i = 0; i < 10; ++i) {
        pts.push_back(make_point(i, 1));
        pts.push_back(make_point(i, -1));
    }
    pts.push_back(make_point(-1, 0));
    pts.push_back(make_point(10, 0));
    int a = static_cast<int>(pts.size()) - 2, b = a + 1;
    Triangulation tri(pts, {{a, b}}, Rational(2));
    auto e = tri.find_edge(a, b);
    CHECK(tri.constrained(e.tri, e.index));
}

TEST_CASE("single lobe") {
    Arrangement arr(fix_a_p(), fix_a_q(), QFrame{0, 2});
    CHECK(arr.events().size() == 2);
    CHECK(bounded_count(arr) == 1);
    CHECK(bounded_total(arr) == 4);
    CHECK(arr.euler_characteristic() == 2);
    CHECK(arr.locate(make_point(2, 1)) != arr.unbounded_cell());
    CHECK(arr.locate(make_point(2, 5)) == arr.unbounded_cell());
    CHECK(arr.locate(make_point(100, 5)) == arr.unbounded_cell());
    CHECK_THROWS_AS(arr.locate(make_point(1, 0)), OnBoundary);
    CHECK_THROWS_AS(arr.locate(make_point(1, 1)), OnBoundary);
    const Arc &pa = arr.arcs()[arr.p_arcs()[0]];
    CHECK(pa.left_cell != arr.unbounded_cell());
    CHECK(pa.right_cell == arr.unbounded_cell());
}

TEST_CASE("two lobes") {
    Arrangement arr(fix_b_p(), fix_b_q(), QFrame{0, 3});
    REQUIRE(arr.events().size() == 3);
    CHECK(arr.events()[1].point == make_point(2, 0));
    CHECK(arr.events()[1].pos_p.t == Rational(1, 2));
    CHECK(arr.events()[1].crossing_sign != 0);
    CHECK(bounded_count(arr) == 2);
    for (const Cell &c : arr.cells())
        if (!c.unbounded) CHECK(c.area == 2);
    CHECK(arr.euler_characteristic() == 2);
    CHECK(arr.p_arcs().size() == 2);
}

TEST_CASE("wrapping lobe") {
    Arrangement arr(fix_c_p(), fix_c_q(), QFrame{0, 4});
    CHECK(bounded_count(arr) == 1);
    CHECK(bounded_total(arr) == 12);
    CHECK(arr.euler_characteristic() == 2);
}

TEST_CASE("input validation") {
    CHECK_NOTHROW(validate_inputs(fix_b_p(), fix_b_q()));
    CHECK_THROWS_AS(validate_inputs(path({{0, 0}, {4, 0}}), path({{0, 0}, {2, 2}, {5, 0}})), EndpointMismatch);
    CHECK_THROWS_AS(validate_inputs(path({{0, 0}, {4, 0}, {4, 2}, {2, -1}}), path({{0, 0}, {2, -1}})), NotSimple);
    // vertex of Q on P
    CHECK_THROWS_AS(validate_inputs(path({{0, 0}, {4, 0}}), path({{0, 0}, {1, 1}, {2, 0}, {3, -1}, {4, 0}})),
                    DegenerateInput);
    // collinear overlap
    CHECK_THROWS_AS(validate_inputs(path({{0, 0}, {4, 0}}), path({{0, 0}, {1, 0}, {2, 2}, {4, 0}})), DegenerateInput);
    // based loops only when allowed
    Polyline loop = path({{0, 0}, {2, 0}, {2, 2}, {0, 0}});
    CHECK_THROWS_AS(validate_simple(loop, "P"), NotSimple);
    CHECK_NOTHROW(validate_simple(loop, "P", true));
    CHECK_THROWS_AS(validate_simple(path({{0, 0}, {2, 0}, {1, 0}}), "P"), NotSimple);
}

TEST_CASE("extension reaches the unbounded cell and keeps Q's events genuine") {
    for (auto [p, q] : std::vector<std::pair<Polyline, Polyline>>{
             {fix_a_p(), fix_a_q()}, {fix_b_p(), fix_b_q()}, {fix_c_p(), fix_c_q()}}) {
        ExtendedQ ext = extend_q(p, q);
        const Arrangement &arr = *ext.arrangement;
        CHECK(arr.euler_characteristic() == 2);
        std::size_t genuine = 0;
        for (const auto &e : arr.events()) genuine += e.genuine ? 1 : 0;
        CHECK(genuine == compute_intersections(p, q).size());
        CHECK(arr.bounded_area() >= Arrangement(p, q, QFrame{0, q.segment_count()}).bounded_area());
        for (std::uint64_t seed : {1u, 2u, 3u}) CHECK_NOTHROW(extend_q(p, q, seed));
    }
    // an end buried inside a ring of lobes forces the extension across P
    Polyline p = path({{0, 0}, {10, 0}});
    Polyline q = path({{0, 0}, {2, 3}, {12, 3}, {12, -3}, {4, -3}, {6, 1}, {8, -1}, {10, 0}});
    ExtendedQ buried = extend_q(p, q);
    CHECK(buried.extension_events.size() >= 1);
    for (const auto &e : buried.extension_events) CHECK_FALSE(e.genuine);
}
