#include "doctest.h"
#include "fixtures.hpp"

#include "homarea/homotopy.hpp"

using namespace homarea;
using namespace fixtures;

TEST_CASE("winding index range updates") {
    std::vector<Representative> reps;
    for (int k = 0; k < 7; ++k) {
        Representative r;
        r.id = k;
        r.key = 3 * k;
        reps.push_back(r);
    }
    WindingIndex idx(reps);
    auto m = idx.query_minmax();
    CHECK(m.w_min == 0);
    CHECK(m.w_max == 0);
    CHECK(m.arg_min == 0);
    CHECK(m.arg_max == 0);
    idx.range_add(-1, 100, 1);
    m = idx.query_minmax();
    CHECK(m.w_min == 1);
    CHECK(m.w_max == 1);
    idx.range_add(2, 10, 1); // keys 3, 6, 9
    m = idx.query_minmax();
    CHECK(m.w_min == 1);
    CHECK(m.w_max == 2);
    CHECK(m.arg_max == 1);
    CHECK(m.arg_min == 0);
    idx.range_add(2, 10, -1);
    idx.range_add(-1, 100, -1);
    for (std::size_t k = 0; k < 7; ++k) CHECK(idx.value_at(k) == 0);
    idx.range_add(3, 6, 5); // open interval: nothing strictly between
    CHECK(idx.query_minmax().w_max == 0);
    idx.range_add(6, 18, -2);
    CHECK(idx.value_at(2) == 0);
    CHECK(idx.value_at(3) == -2);
    CHECK(idx.value_at(5) == -2);
    CHECK(idx.value_at(6) == 0);
    CHECK(idx.query_minmax().arg_min == 3);
}

TEST_CASE("winding index against brute force") {
    std::vector<Representative> reps;
    for (int k = 0; k < 37; ++k) {
        Representative r;
        r.id = k;
        r.key = 2 * k + (k % 3 == 0);
        reps.push_back(r);
    }
    WindingIndex idx(reps);
    std::vector<int> brute(reps.size(), 0);
    unsigned state = 12345;
    auto rnd = [&](int n) {
        state = state * 1103515245u + 12345u;
        return static_cast<int>((state >> 16) % static_cast<unsigned>(n));
    };
    for (int step = 0; step < 500; ++step) {
        std::int64_t lo = rnd(80) - 2, hi = lo + rnd(40);
        int d = rnd(2) ? 1 : -1;
        idx.range_add(lo, hi, d);
        for (std::size_t k = 0; k < reps.size(); ++k)
            if (reps[k].key > lo && reps[k].key < hi) brute[k] += d;
        auto m = idx.query_minmax();
        int mn = *std::min_element(brute.begin(), brute.end());
        int mx = *std::max_element(brute.begin(), brute.end());
        REQUIRE(m.w_min == mn);
        REQUIRE(m.w_max == mx);
        REQUIRE(brute[m.arg_min] == mn);
        REQUIRE(brute[m.arg_max] == mx);
        REQUIRE(std::find(brute.begin(), brute.end(), mn) - brute.begin() == m.arg_min);
        REQUIRE(std::find(brute.begin(), brute.end(), mx) - brute.begin() == m.arg_max);
    }
}

TEST_CASE("four representatives around an interior crossing") {
    Arrangement arr(fix_b_p(), fix_b_q(), QFrame{0, 3});
    auto reps = build_representatives(arr);
    // curve ends only have representatives on their inner side
    CHECK(reps.count() == 2 + 4 + 2);
    std::vector<int> cells;
    for (const auto *side : {&reps.left, &reps.right})
        for (const Representative &r : *side)
            if (r.event == 1) cells.push_back(r.cell);
    REQUIRE(cells.size() == 4);
    int upper = arr.locate(Point{1, Rational(1, 2)}), lower = arr.locate(Point{3, Rational(-1, 2)});
    CHECK(std::count(cells.begin(), cells.end(), upper) == 1);
    CHECK(std::count(cells.begin(), cells.end(), lower) == 1);
    CHECK(std::count(cells.begin(), cells.end(), arr.unbounded_cell()) == 2);
}

TEST_CASE("representatives cover every bounded cell") {
    for (auto [p, q] : std::vector<std::pair<Polyline, Polyline>>{
             {fix_a_p(), fix_a_q()}, {fix_b_p(), fix_b_q()}, {fix_c_p(), fix_c_q()}}) {
        ExtendedQ ext = extend_q(p, q);
        auto reps = build_representatives(*ext.arrangement);
        for (int c : uncovered_cells(*ext.arrangement, reps)) CHECK(c == ext.arrangement->unbounded_cell());
    }
}

TEST_CASE("sweep rows of the fixtures") {
    ExtendedQ b = extend_q(fix_b_p(), fix_b_q());
    SweepContext ctx(b.arrangement);
    REQUIRE(ctx.genuine().size() == 3);
    SweepRow row = ctx.sweep_from(ctx.genuine()[0]);
    REQUIRE(row.entries.size() == 2);
    CHECK(row.entries[1].W == 0);
    CHECK_FALSE(row.entries[1].valid);
    CHECK(row.entries[1].minmax.w_min == -1);
    CHECK(row.entries[1].minmax.w_max == 1);
    CHECK(abs(row.entries[0].W) == 2);
    CHECK(row.entries[0].valid);
    SweepRow mid = ctx.sweep_from(ctx.genuine()[1]);
    REQUIRE(mid.entries.size() == 1);
    CHECK(abs(mid.entries[0].W) == 2);
    CHECK(mid.entries[0].valid);

    ExtendedQ a = extend_q(fix_a_p(), fix_a_q());
    SweepContext actx(a.arrangement);
    SweepRow arow = actx.sweep_from(actx.genuine()[0]);
    REQUIRE(arow.entries.size() == 1);
    CHECK(abs(arow.entries[0].W) == 4);
    CHECK(arow.entries[0].valid);
}

TEST_CASE("representative windings match recomputed cell windings") {
    Polyline p = path({{0, 0}, {2, 3}, {5, -1}, {8, 1}, {10, 0}});
    Polyline q = path({{0, 0}, {1, -2}, {4, 4}, {6, -3}, {7, 3}, {10, 0}});
    ExtendedQ ext = extend_q(p, q);
    SweepContext ctx(ext.arrangement);
    const auto &arr = *ext.arrangement;
    std::vector<Representative> all = ctx.representatives().left;
    all.insert(all.end(), ctx.representatives().right.begin(), ctx.representatives().right.end());
    for (std::size_t r : ctx.genuine()) {
        ctx.sweep_from(r, [&](const SweepEntry &e) {
            auto cells = cell_windings(arr, r, e.i);
            auto reps = ctx.representative_windings();
            for (const Representative &rep : all) CHECK(reps[rep.id] == cells.values[rep.cell]);
            CHECK(ctx.unscale(e.scaled_W) == total_winding(cells, arr));
        });
    }
}
