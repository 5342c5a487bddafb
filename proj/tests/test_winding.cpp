#include "doctest.h"
#include "fixtures.hpp"

#include "homarea/errors.hpp"
#include "homarea/winding.hpp"

using namespace homarea;
using namespace fixtures;

namespace {

std::vector<Point> square(long x0, long y0, long s) {
    return {make_point(x0, y0), make_point(x0 + s, y0), make_point(x0 + s, y0 + s), make_point(x0, y0 + s)};
}

Rational shoelace_of(const Arrangement &arr, std::size_t u) {
    // P forward from u to u+1, then the second curve back, as an explicit polygon
    const auto &ev = arr.events();
    std::vector<Point> poly{ev[u].point};
    for (std::size_t s = ev[u].pos_p.segment + 1; s <= ev[u + 1].pos_p.segment && s < arr.p().size(); ++s)
        if (!(CurvePosition{s, 0} == ev[u + 1].pos_p)) poly.push_back(arr.p()[s]);
    poly.push_back(ev[u + 1].point);
    const auto &a = ev[u + 1].pos_q, &b = ev[u].pos_q;
    if (a < b) {
        for (std::size_t s = a.segment + 1; s <= b.segment; ++s)
            if (!(CurvePosition{s, 0} == b)) poly.push_back(arr.q()[s]);
    } else {
        for (std::size_t s = a.segment; s > b.segment; --s)
            if (!(CurvePosition{s, 0} == a)) poly.push_back(arr.q()[s]);
    }
    return signed_area(poly);
}

} // namespace

TEST_CASE("winding number of points") {
    auto sq = square(0, 0, 2);
    CHECK(winding_number(make_point(1, 1), sq) == 1);
    CHECK(winding_number(make_point(3, 1), sq) == 0);
    std::vector<Point> rev(sq.rbegin(), sq.rend());
    CHECK(winding_number(make_point(1, 1), rev) == -1);
    std::vector<Point> twice = sq;
    twice.insert(twice.end(), sq.begin(), sq.end());
    // a doubled traversal is not a simple polygon but the crossing rule still applies
    CHECK(winding_number(make_point(1, 1), twice, make_point(1, 3)) == 2);
    CHECK_THROWS_AS(winding_number(make_point(1, 0), sq), OnCurve);
    CHECK_THROWS_AS(winding_number(make_point(2, 2), sq), OnCurve);
    for (long k = 0; k < 6; ++k) {
        Point d = make_point(k - 3, 2 * k + 1);
        Point x = make_point(1, 1);
        x.x += Rational(1, 7);
        CHECK(winding_number(x, sq, d) == 1);
    }
}

TEST_CASE("cell windings and total winding of fixtures") {
    Arrangement a(fix_a_p(), fix_a_q(), QFrame{0, 2});
    auto wa = cell_windings(a);
    CHECK(std::abs(wa.values[a.locate(make_point(2, 1))]) == 1);
    CHECK(wa.values[a.unbounded_cell()] == 0);
    CHECK(abs(total_winding(wa, a)) == 4);

    Arrangement b(fix_b_p(), fix_b_q(), QFrame{0, 3});
    auto wb = cell_windings(b);
    int up = wb.values[b.locate(Point{1, Rational(1, 2)})];
    int down = wb.values[b.locate(Point{3, Rational(-1, 2)})];
    CHECK(up * down == -1);
    CHECK(total_winding(wb, b) == 0);

    Arrangement c(fix_c_p(), fix_c_q(), QFrame{0, 4});
    auto wc = cell_windings(c);
    CHECK(abs(total_winding(wc, c)) == 12);
    CHECK(std::abs(wc.values[c.locate(make_point(3, 1))]) == 1);
}

TEST_CASE("cell windings agree with ray shooting") {
    Polyline p = path({{0, 0}, {2, 3}, {5, -1}, {8, 1}, {10, 0}});
    Polyline q = path({{0, 0}, {1, -2}, {4, 4}, {6, -3}, {7, 3}, {10, 0}});
    validate_inputs(p, q);
    Arrangement arr(p, q, QFrame{0, q.segment_count()});
    auto w = cell_windings(arr);
    std::vector<Point> loop(p.vertices().begin(), p.vertices().end());
    for (std::size_t k = q.size() - 2; k >= 1; --k) loop.push_back(q[k]);
    for (std::size_t c = 0; c < arr.cells().size(); ++c)
        CHECK(w.values[c] == winding_number(arr.cells()[c].sample, loop));
    CHECK(total_winding(w, arr) == signed_area(loop));
}

TEST_CASE("region table") {
    Arrangement b(fix_b_p(), fix_b_q(), QFrame{0, 3});
    auto ru = ru_table(b);
    REQUIRE(ru.size() == 2);
    CHECK(ru[0].area == 2);
    CHECK(ru[0].alpha == 1);
    CHECK(ru[1].area == 2);
    CHECK(ru[1].alpha == -1);
    CHECK(ru[0].side == Side::right);
    CHECK(ru[1].side == Side::left);

    Arrangement a(fix_a_p(), fix_a_q(), QFrame{0, 2});
    auto ra = ru_table(a);
    REQUIRE(ra.size() == 1);
    CHECK(ra[0].area == 4);
    CHECK(ra[0].alpha == 1);
}

TEST_CASE("region updates match recomputed total windings") {
    Polyline p = path({{0, 0}, {2, 3}, {5, -1}, {8, 1}, {10, 0}});
    Polyline q = path({{0, 0}, {1, -2}, {4, 4}, {6, -3}, {7, 3}, {10, 0}});
    ExtendedQ ext = extend_q(p, q);
    const Arrangement &arr = *ext.arrangement;
    auto ru = ru_table(arr);
    for (std::size_t u = 0; u < ru.size(); ++u) CHECK(ru[u].alpha * ru[u].area * 2 == shoelace_of(arr, u) * 2);
    for (std::size_t r = 0; r < arr.events().size(); ++r) {
        Rational prev = 0;
        for (std::size_t i = r + 1; i < arr.events().size(); ++i) {
            Rational now = total_winding(cell_windings(arr, r, i), arr);
            CHECK(now - prev == ru[i - 1].alpha * ru[i - 1].area);
            prev = now;
        }
    }
}
