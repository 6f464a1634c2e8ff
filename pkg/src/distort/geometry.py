"""Polygonal space curves with exact arclength, chord and clearance queries.

A curve is an ordered list of 3D vertices, open or closed.  All queries are
read-only; "mutation" means building a new curve.  Arclength coordinates are
the canonical way to address points; (segment, local parameter) is the
storage form.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "PolyCurve",
    "CurvePoint",
    "ArcInterval",
    "segment_pair_distance",
    "point_segment_distance",
]


class GeometryError(ValueError):
    """Invalid curve construction or query."""


@dataclass(frozen=True)
class CurvePoint:
    """A location on a curve: segment index, local parameter, arclength.

    ``arclen`` is the cumulative length of segments 0..seg-1 plus
    ``t`` times the length of segment ``seg``.  ``t`` lies in [0, 1); the
    single exception is the far endpoint of an open curve, stored as t = 1
    on the last segment.
    """

    seg: int
    t: float
    arclen: float


@dataclass(frozen=True)
class ArcInterval:
    """An arclength interval [lo, hi]; hi < lo encodes wraparound on a
    closed curve.  Width must not exceed the curve length."""

    lo: float
    hi: float

    def width(self, total_length: float) -> float:
        w = self.hi - self.lo
        if w < 0:
            w += total_length
        return w


class PolyCurve:
    """Immutable polygonal curve in R^3.

    Open curves need >= 2 vertices, closed ones >= 3.  Consecutive
    coincident vertices are rejected rather than repaired: a zero-length
    segment almost always means a generator bug upstream.
    """

    def __init__(self, vertices, closed: bool):
        v = np.asarray(vertices, dtype=float)
        if v.ndim != 2 or v.shape[1] != 3:
            raise GeometryError(f"vertices must be (n, 3), got {v.shape}")
        n = v.shape[0]
        if closed and n < 3:
            raise GeometryError("closed curve needs at least 3 vertices")
        if not closed and n < 2:
            raise GeometryError("open curve needs at least 2 vertices")
        if closed and np.array_equal(v[0], v[-1]):
            raise GeometryError("closed curve must not repeat the first vertex")

        self.vertices = v
        self.vertices.setflags(write=False)
        self.closed = bool(closed)

        starts = v
        ends = np.roll(v, -1, axis=0) if closed else v[1:]
        if not closed:
            starts = v[:-1]
        self.seg_start = starts
        self.seg_vec = ends - starts
        self.seg_len = np.linalg.norm(self.seg_vec, axis=1)
        if np.any(self.seg_len == 0.0):
            raise GeometryError("coincident consecutive vertices")
        self.n_segments = len(self.seg_len)
        # cum[i] = arclength at the start of segment i; cum[-1] = total length
        self.cum = np.concatenate(([0.0], np.cumsum(self.seg_len)))
        self.length = float(self.cum[-1])

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    # -- point addressing ------------------------------------------------

    def point_at(self, s: float) -> CurvePoint:
        """Curve point at arclength s (taken mod L on closed curves)."""
        L = self.length
        if self.closed:
            s = float(s) % L
        else:
            if s < 0 or s > L * (1 + 1e-12):
                raise GeometryError(f"arclength {s} outside [0, {L}]")
            s = min(float(s), L)
            if s == L:
                return CurvePoint(self.n_segments - 1, 1.0, L)
        seg = int(np.searchsorted(self.cum, s, side="right") - 1)
        seg = min(max(seg, 0), self.n_segments - 1)
        t = (s - self.cum[seg]) / self.seg_len[seg]
        if t >= 1.0:  # numerical spill into the next segment
            if seg + 1 < self.n_segments:
                seg, t = seg + 1, 0.0
            else:
                t = 1.0 if not self.closed else 0.0
        return CurvePoint(seg, float(t), float(s))

    def curve_point(self, seg: int, t: float) -> CurvePoint:
        if not 0 <= seg < self.n_segments:
            raise GeometryError(f"segment index {seg} out of range")
        if not 0.0 <= t <= 1.0:
            raise GeometryError(f"local parameter {t} outside [0, 1]")
        return CurvePoint(seg, float(t), float(self.cum[seg] + t * self.seg_len[seg]))

    def position(self, p: CurvePoint) -> np.ndarray:
        return self.seg_start[p.seg] + p.t * self.seg_vec[p.seg]

    def position_at(self, s) -> np.ndarray:
        """Embedded position(s) at arclength(s) s; vectorized."""
        s = np.atleast_1d(np.asarray(s, dtype=float))
        L = self.length
        if self.closed:
            s = np.mod(s, L)
        else:
            s = np.clip(s, 0.0, L)
        seg = np.clip(np.searchsorted(self.cum, s, side="right") - 1, 0, self.n_segments - 1)
        t = (s - self.cum[seg]) / self.seg_len[seg]
        pos = self.seg_start[seg] + t[:, None] * self.seg_vec[seg]
        return pos if pos.shape[0] > 1 else pos[0]

    # -- metric queries ----------------------------------------------------

    def arc_distance(self, p: CurvePoint, q: CurvePoint) -> float:
        """Shorter arclength distance between two points of the curve."""
        if p.arclen == q.arclen:
            raise GeometryError("arc distance of coincident points")
        d = abs(p.arclen - q.arclen)
        if self.closed:
            d = min(d, self.length - d)
        return d

    def chord(self, p: CurvePoint, q: CurvePoint) -> float:
        return float(np.linalg.norm(self.position(p) - self.position(q)))

    def turning_angles(self) -> np.ndarray:
        """Exterior angle at each vertex (closed) or interior vertex (open).

        Returned per vertex index for closed curves; for open curves entry i
        is the angle at vertex i+1 (the first and last vertices have none).
        """
        d = self.seg_vec / self.seg_len[:, None]
        if self.closed:
            a, b = d, np.roll(d, -1, axis=0)
        else:
            a, b = d[:-1], d[1:]
        cosk = np.clip(np.einsum("ij,ij->i", a, b), -1.0, 1.0)
        return np.arccos(cosk)

    # -- derived curves ------------------------------------------------------

    def resample(self, n: int) -> "PolyCurve":
        """New curve with n vertices equally spaced in arclength along this
        one, anchored at the first vertex.  New vertices lie exactly on the
        old curve, so the total length can only shrink.
        """
        if n < (3 if self.closed else 2):
            raise GeometryError("too few vertices to resample")
        L = self.length
        if self.closed:
            s = np.arange(n) * (L / n)
        else:
            s = np.linspace(0.0, L, n)
        verts = np.atleast_2d(self.position_at(s))
        if not self.closed:
            verts[-1] = self.vertices[-1]
        out = PolyCurve(verts, self.closed)
        if not out.is_simple():
            raise GeometryError(f"resampling to {n} vertices breaks simplicity")
        return out

    def scaled(self, factor: float) -> "PolyCurve":
        return PolyCurve(self.vertices * factor, self.closed)

    # -- simplicity ------------------------------------------------------

    def is_simple(self, clearance: float | None = None) -> bool:
        """True iff non-adjacent segments keep ``clearance`` apart and
        adjacent segments meet only at their shared vertex.

        The default clearance, 1e-9 * length, separates genuine crossings
        from floating-point grazing.
        """
        if clearance is None:
            clearance = 1e-9 * self.length
        n = self.n_segments
        # Fold-back at a shared vertex: outgoing direction opposite to the
        # incoming one means the two segments overlap along a line.
        d = self.seg_vec / self.seg_len[:, None]
        if self.closed:
            pairs = zip(d, np.roll(d, -1, axis=0))
        else:
            pairs = zip(d[:-1], d[1:])
        for a, b in pairs:
            if np.dot(a, b) < -1.0 + 1e-12 and np.linalg.norm(np.cross(a, b)) < 1e-12:
                return False

        p1 = self.seg_start
        q1 = p1 + self.seg_vec
        for i in range(n - 2):
            j0 = i + 2
            j1 = n if not (self.closed and i == 0) else n - 1
            if j0 >= j1:
                continue
            dmin = segment_pair_distance(
                p1[i], q1[i], p1[j0:j1], q1[j0:j1]
            )
            if np.min(dmin) < clearance:
                return False
        return True

    def min_clearance(self) -> float:
        """Smallest distance between non-adjacent segments."""
        n = self.n_segments
        p1 = self.seg_start
        q1 = p1 + self.seg_vec
        best = np.inf
        for i in range(n - 2):
            j0 = i + 2
            j1 = n if not (self.closed and i == 0) else n - 1
            if j0 >= j1:
                continue
            d = segment_pair_distance(p1[i], q1[i], p1[j0:j1], q1[j0:j1])
            best = min(best, float(np.min(d)))
        return best

    def __repr__(self):
        kind = "closed" if self.closed else "open"
        return f"PolyCurve({kind}, {self.n_vertices} vertices, L={self.length:.6g})"


def segment_pair_distance(p1, q1, p2, q2):
    """Minimum distance between segment (p1, q1) and segments (p2, q2).

    (p2, q2) may be arrays of shape (m, 3); the result is then length m.
    Uses the clamped closest-point parametrization; parallel pairs fall
    through the denominator guard to an endpoint minimum, so the result is
    exact to machine precision in every configuration.
    """
    p1 = np.asarray(p1, dtype=float)
    q1 = np.asarray(q1, dtype=float)
    p2 = np.atleast_2d(np.asarray(p2, dtype=float))
    q2 = np.atleast_2d(np.asarray(q2, dtype=float))

    d1 = q1 - p1
    d2 = q2 - p2
    r = p1 - p2
    a = float(np.dot(d1, d1))
    e = np.einsum("ij,ij->i", d2, d2)
    f = np.einsum("ij,ij->i", d2, r)
    c = np.einsum("j,ij->i", d1, r)
    b = np.einsum("j,ij->i", d1, d2)
    denom = a * e - b * b

    with np.errstate(divide="ignore", invalid="ignore"):
        s = np.where(denom > 0.0, np.clip((b * f - c * e) / denom, 0.0, 1.0), 0.0)
        t = np.where(e > 0.0, (b * s + f) / e, 0.0)
        s_lo = np.clip(-c / a, 0.0, 1.0) if a > 0 else np.zeros_like(t)
        s_hi = np.clip((b - c) / a, 0.0, 1.0) if a > 0 else np.zeros_like(t)
    s = np.where(t < 0.0, s_lo, np.where(t > 1.0, s_hi, s))
    t = np.clip(t, 0.0, 1.0)

    c1 = p1 + s[:, None] * d1
    c2 = p2 + t[:, None] * d2
    out = np.linalg.norm(c1 - c2, axis=1)
    return out if out.shape[0] > 1 else float(out[0])


def point_segment_distance(x, p, q):
    """Distance from point(s) x to the segment (p, q); x may be (m, 3)."""
    x = np.atleast_2d(np.asarray(x, dtype=float))
    p = np.asarray(p, dtype=float)
    d = np.asarray(q, dtype=float) - p
    dd = float(np.dot(d, d))
    if dd == 0.0:
        out = np.linalg.norm(x - p, axis=1)
    else:
        t = np.clip((x - p) @ d / dd, 0.0, 1.0)
        out = np.linalg.norm(x - (p + t[:, None] * d), axis=1)
    return out if out.shape[0] > 1 else float(out[0])
