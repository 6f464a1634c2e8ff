"""Closed-form bounds for curves forced to avoid a unit ball.

The central quantity is the length of the shortest arc joining two points
at radii r and s from the origin, with central angle theta, that stays
outside the open unit ball.  Below the tangency threshold the straight
chord works; above it the optimum runs along the two tangent lines and
wraps the sphere between them:

    min_arc_length(r, s, theta) =
        sqrt(r^2 + s^2 - 2 r s cos theta)                 theta <= wrap_angle
        sqrt(r^2 - 1) + sqrt(s^2 - 1) + theta - wrap_angle  otherwise

with wrap_angle(r, s) = arcsec r + arcsec s.  Minimizing over the first
radius gives min_arc_length_over_r.  All angles are radians; a chord
argument of c is measured in units of the shortest essential secant.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "BoundEval",
    "DomainError",
    "arcsec",
    "wrap_angle",
    "min_arc_length",
    "min_arc_length_over_r",
    "quarter_circle_bound",
    "secant_length_bound",
    "curvature_distortion_bound",
    "ropelength_distortion_bound",
    "knot_distortion_lower_constant",
    "KNOT_DISTORTION_LOWER",
]

_CLAMP_TOL = 1e-12


class DomainError(ValueError):
    """Argument outside the bound function's domain."""


@dataclass(frozen=True)
class BoundEval:
    """A bound value plus the tag of the piecewise case that produced it."""

    value: float
    branch: str

    def __float__(self):
        return self.value


def arcsec(x: float) -> float:
    """arcsec(x) = arccos(1/x) for x >= 1; inputs within 1e-12 of 1 are
    clamped so rounding at the tangency radius cannot produce NaN."""
    if x < 1.0 - _CLAMP_TOL:
        raise DomainError(f"arcsec needs x >= 1, got {x}")
    return math.acos(1.0 / max(x, 1.0))


def _check_radius(name: str, value: float) -> float:
    if value < 1.0 - _CLAMP_TOL:
        raise DomainError(f"{name} must be >= 1, got {value}")
    return max(value, 1.0)


def _check_angle(theta: float) -> float:
    if not -_CLAMP_TOL <= theta <= math.pi + _CLAMP_TOL:
        raise DomainError(f"angle must lie in [0, pi], got {theta}")
    return min(max(theta, 0.0), math.pi)


def wrap_angle(r: float, s: float) -> float:
    """Central angle at which the shortest ball-avoiding arc stops being a
    straight chord and starts wrapping the sphere: arcsec r + arcsec s."""
    return arcsec(_check_radius("r", r)) + arcsec(_check_radius("s", s))


def min_arc_length(r: float, s: float, theta: float) -> BoundEval:
    """Length of the shortest arc from radius r to radius s with central
    angle theta staying outside the open unit ball."""
    r = _check_radius("r", r)
    s = _check_radius("s", s)
    theta = _check_angle(theta)
    t0 = wrap_angle(r, s)
    if theta <= t0:
        value = math.sqrt(max(r * r + s * s - 2.0 * r * s * math.cos(theta), 0.0))
        return BoundEval(value, "chord-case")
    value = math.sqrt(r * r - 1.0) + math.sqrt(s * s - 1.0) + theta - t0
    return BoundEval(value, "wrap-case")


def min_arc_length_over_r(s: float, theta: float) -> BoundEval:
    """min_arc_length minimized over the first radius r >= 1.

    Continuous, nondecreasing in s and theta, concave in theta; equals
    s*sin(theta) while the perpendicular foot stays outside the ball and
    switches to the r = 1 tangent-wrap expression at theta = arcsec s.
    """
    s = _check_radius("s", s)
    theta = _check_angle(theta)
    split = arcsec(s)
    if theta <= split:
        return BoundEval(s * math.sin(theta), "small-angle")
    return BoundEval(math.sqrt(s * s - 1.0) + theta - split, "large-angle")


def quarter_circle_bound(s: float) -> float:
    """Length of the comparison path that leaves along a quarter circle of
    radius 1 and then cuts straight to the far point: sqrt(s^2+1) + pi/2.
    Strictly below min_arc_length_over_r(s, pi) for every s >= 1."""
    s = _check_radius("s", s)
    return math.sqrt(s * s + 1.0) + 0.5 * math.pi


def secant_length_bound(c: float) -> float:
    """Lower bound on the arc distance across a length-c essential secant
    (c in units of the shortest essential secant): 2*pi - 2*arcsin(c/2).
    Decreasing in c on (0, 2]."""
    if not 0.0 < c <= 2.0 + _CLAMP_TOL:
        raise DomainError(f"chord must lie in (0, 2], got {c}")
    return 2.0 * math.pi - 2.0 * math.asin(min(c, 2.0) / 2.0)


def curvature_distortion_bound(alpha: float) -> float:
    """Distortion of an arc of total curvature alpha < pi is at most
    sec(alpha/2)."""
    if not 0.0 <= alpha < math.pi:
        raise DomainError(f"total curvature must lie in [0, pi), got {alpha}")
    return 1.0 / math.cos(0.5 * alpha)


def ropelength_distortion_bound(rope: float) -> float:
    """Distortion of a closed curve of ropelength R is at most R/2."""
    if rope <= 0.0:
        raise DomainError(f"ropelength must be positive, got {rope}")
    return 0.5 * rope


KNOT_DISTORTION_LOWER = 5.0 * math.pi / 3.0


def knot_distortion_lower_constant() -> float:
    """Distortion lower bound shared by every nontrivial tame knot: 5*pi/3."""
    return KNOT_DISTORTION_LOWER
