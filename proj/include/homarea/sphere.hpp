#ifndef HOMAREA_SPHERE_HPP
#define HOMAREA_SPHERE_HPP

#include "homarea/homotopy.hpp"

namespace homarea {

/// Cost of an anchor-free deformation on a sphere of area A, given the planar
/// total winding and the extreme windings (both bracketing 0).
Rational sphere_wstar(const Rational &W, int w_min, int w_max, const Rational &A);

/// The sphere is the plane plus one point at infinity; the unbounded cell
/// carries area A minus the bounded areas of arr(P+Q). Throws SphereAreaTooSmall.
HomotopyResult min_homotopy_area_sphere(const Polyline &p, const Polyline &q, const Rational &A,
                                        SolveOptions options = {});

} // namespace homarea

#endif
