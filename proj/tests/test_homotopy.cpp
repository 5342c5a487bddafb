#include "doctest.h"
#include "fixtures.hpp"

#include "homarea/errors.hpp"
#include "homarea/homotopy.hpp"

using namespace homarea;
using namespace fixtures;

TEST_CASE("fixture areas and anchors") {
    auto a = min_homotopy_area(fix_a_p(), fix_a_q());
    CHECK(a.sigma == 4);
    CHECK(a.decomposition.anchors.empty());

    auto b = min_homotopy_area(fix_b_p(), fix_b_q());
    CHECK(b.sigma == 4);
    REQUIRE(b.decomposition.anchors.size() == 1);
    CHECK(b.decomposition.anchors[0].point == make_point(2, 0));
    CHECK(b.decomposition.segment_costs.size() == 2);
    CHECK(b.decomposition.segment_costs[0] + b.decomposition.segment_costs[1] == 4);

    auto c = min_homotopy_area(fix_c_p(), fix_c_q());
    CHECK(c.sigma == 12);
    CHECK(c.decomposition.anchors.empty());
}

TEST_CASE("symmetry on fixtures") {
    CHECK(min_homotopy_area(fix_b_q(), fix_b_p()).sigma == 4);
    CHECK(min_homotopy_area(fix_c_q(), fix_c_p()).sigma == 12);
}

TEST_CASE("degenerate inputs are rejected") {
    CHECK_THROWS_AS(min_homotopy_area(path({{0, 0}, {4, 0}}), path({{0, 0}, {2, 0}, {2, 2}, {4, 0}})),
                    DegenerateInput);
    CHECK_THROWS_AS(min_homotopy_area(path({{0, 0}, {4, 0}, {4, 2}, {2, -1}}), path({{0, 0}, {2, -1}})), NotSimple);
}

TEST_CASE("cycles") {
    auto nested = min_homotopy_area_cycles(cycle({{0, 0}, {4, 0}, {4, 4}, {0, 4}}),
                                           cycle({{1, 1}, {3, 1}, {3, 3}, {1, 3}}));
    CHECK(nested.sigma == 12);
    CHECK(nested.kind == CycleCase::nested);
    CHECK_FALSE(nested.infimum);

    auto apart = min_homotopy_area_cycles(cycle({{0, 0}, {1, 0}, {1, 1}, {0, 1}}),
                                          cycle({{11, 0}, {12, 0}, {12, 1}, {11, 1}}));
    CHECK(apart.sigma == 2);
    CHECK(apart.kind == CycleCase::disjoint);
    CHECK(apart.infimum);

    // orientation of the input does not matter
    auto flipped = min_homotopy_area_cycles(cycle({{0, 0}, {0, 4}, {4, 4}, {4, 0}}),
                                            cycle({{1, 1}, {3, 1}, {3, 3}, {1, 3}}));
    CHECK(flipped.sigma == 12);

    // a plus sign made of two crossing rectangles
    auto cross = min_homotopy_area_cycles(cycle({{0, 1}, {3, 1}, {3, 2}, {0, 2}}),
                                          cycle({{1, 0}, {2, 0}, {2, 3}, {1, 3}}));
    CHECK(cross.kind == CycleCase::crossing);
    CHECK(cross.cut.has_value());
    CHECK(cross.sigma == 4);
}
