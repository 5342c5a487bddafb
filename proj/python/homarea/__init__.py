"""Exact minimum homotopy area between polygonal curves.

Coordinates may be ints, Fractions, decimal strings or "p/q" strings.
Floats are taken at their exact binary value. All areas come back as Fractions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Tuple, Union

from . import _core
from ._core import Error, InputError

Number = Union[int, Fraction, str, float]
Coord = Tuple[Number, Number]

__all__ = [
    "Anchor",
    "Error",
    "InputError",
    "Result",
    "CycleResult",
    "min_homotopy_area",
    "min_homotopy_area_sphere",
    "min_homotopy_area_cycles",
    "oracle_dp",
    "oracle_sphere",
    "oracle_cycles",
    "parse_curve_file",
    "run",
]


def _text(v: Number) -> str:
    if isinstance(v, str):
        return v.strip()
    f = Fraction(v)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def _coords(curve: Iterable[Sequence[Number]]):
    return [(_text(x), _text(y)) for x, y in curve]


def _point(p) -> Tuple[Fraction, Fraction]:
    return Fraction(p[0]), Fraction(p[1])


@dataclass(frozen=True)
class Anchor:
    point: Tuple[Fraction, Fraction]
    p_segment: int
    p_t: Fraction
    q_segment: int
    q_t: Fraction


@dataclass(frozen=True)
class Result:
    sigma: Fraction
    anchors: Tuple[Anchor, ...]
    segment_costs: Tuple[Fraction, ...]
    stats: dict = field(compare=False, default_factory=dict)


@dataclass(frozen=True)
class CycleResult(Result):
    kind: str = "crossing"
    infimum: bool = False
    cut: Optional[Tuple[Fraction, Fraction]] = None


def _result(raw: dict, cls=Result, **extra):
    anchors = tuple(
        Anchor(
            _point(a["point"]),
            a["pos_p"]["segment"],
            Fraction(a["pos_p"]["t"]),
            a["pos_q"]["segment"],
            Fraction(a["pos_q"]["t"]),
        )
        for a in raw["anchors"]
    )
    costs = tuple(Fraction(c) for c in raw["segment_costs"])
    return cls(Fraction(raw["sigma"]), anchors, costs, dict(raw["stats"]), **extra)


def min_homotopy_area(p, q, seed: Optional[int] = None) -> Result:
    """Minimum homotopy area between two paths with common endpoints."""
    return _result(_core.min_homotopy_area(_coords(p), _coords(q), seed))


def min_homotopy_area_sphere(p, q, area: Number) -> Result:
    """Same, for paths drawn on a sphere of the given total area."""
    return _result(_core.min_homotopy_area_sphere(_coords(p), _coords(q), _text(area)))


def min_homotopy_area_cycles(p, q) -> CycleResult:
    """Minimum homotopy area between two closed curves (vertex lists, not repeated)."""
    raw = _core.min_homotopy_area_cycles(_coords(p), _coords(q))
    cut = _point(raw["cut"]) if raw["cut"] is not None else None
    return _result(raw, CycleResult, kind=raw["kind"], infimum=raw["infimum"], cut=cut)


def oracle_dp(p, q) -> Fraction:
    return Fraction(_core.oracle_dp(_coords(p), _coords(q)))


def oracle_sphere(p, q, area: Number) -> Fraction:
    return Fraction(_core.oracle_sphere(_coords(p), _coords(q), _text(area)))


def oracle_cycles(p, q) -> Tuple[Fraction, bool]:
    sigma, infimum = _core.oracle_cycles(_coords(p), _coords(q))
    return Fraction(sigma), infimum


def parse_curve_file(text: str) -> dict:
    raw = _core.parse_curve_file(text)
    return {
        "kind": raw["kind"],
        "p": [_point(v) for v in raw["p"]],
        "q": [_point(v) for v in raw["q"]],
        "sphere_area": Fraction(raw["sphere_area"]) if raw["sphere_area"] is not None else None,
    }


def run(*args: str) -> Tuple[int, str, str]:
    """Run the command-line interface in-process; returns (exit code, stdout, stderr)."""
    return _core.run_command(list(args))
