#include "homarea/sphere.hpp"

#include "homarea/errors.hpp"

#include <algorithm>

namespace homarea {

Rational sphere_wstar(const Rational &W, int w_min, int w_max, const Rational &A) {
    Rational low = abs(W - A * w_min), high = abs(W - A * w_max);
    return std::min(low, high);
}

HomotopyResult min_homotopy_area_sphere(const Polyline &p, const Polyline &q, const Rational &A,
                                        SolveOptions options) {
    validate_inputs(p, q);
    Rational bounded = Arrangement(p, q, QFrame{0, q.segment_count()}).bounded_area();
    if (A <= bounded)
        throw SphereAreaTooSmall("A = " + to_string(A) + " but the curves enclose " + to_string(bounded));
    ExtendedQ ext = extend_q(p, q, options.seed);
    SweepContext ctx(ext.arrangement, {A});
    const int pinned = ctx.representatives().count();
    const mpz_class scaled_A = A.get_num() * (ctx.scale() / A.get_den());
    mpz_class low, high;
    return solve_chain(ctx, [&](const SweepEntry &e) -> std::optional<mpz_class> {
        if (!e.order_ok) return std::nullopt;
        MinMax m = combine(e.minmax, MinMax{0, 0, pinned, pinned});
        // sphere_wstar in scaled units
        low = e.scaled_W - scaled_A * m.w_min;
        high = e.scaled_W - scaled_A * m.w_max;
        return mpz_class(std::min(abs(low), abs(high)));
    });
}

} // namespace homarea
