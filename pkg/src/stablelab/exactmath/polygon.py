"""Newton polygons, plain and parametric.

Sign convention, fixed once for the whole package and asserted in tests: a
lower-hull segment of slope sigma and horizontal length L certifies L roots
of valuation -sigma.  (Equivalently: for an Eisenstein-type polynomial with
v(a_0) = 1, v(a_n) = 0 the single segment has slope -1/n and the roots have
valuation 1/n.)

The parametric variant handles coefficient valuations that are minima of
affine functions of a parameter lambda.  A cell decomposition of the lambda
interval is computed so that on each open cell the combinatorial hull is
constant; each cell carries an exact certificate (hull constraints are affine
in lambda and are checked at both cell endpoints, which bounds them on the
whole cell).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .valuation import INF, Affine, ExtValuation, envelope_min, is_finite


@dataclass(frozen=True)
class NewtonPolygon:
    points: tuple[tuple[int, ExtValuation], ...]
    hull_vertices: tuple[tuple[int, Fraction], ...]
    segments: tuple[tuple[Fraction, int], ...]  # (slope, horizontal length)

    def root_valuations(self) -> tuple[tuple[Fraction, int], ...]:
        """Multiset of root valuations: (valuation, count), by convention -slope."""
        return tuple(sorted((-s, n) for s, n in self.segments))

    def width(self) -> int:
        return self.hull_vertices[-1][0] - self.hull_vertices[0][0]


def lower_hull(points: Sequence[tuple[int, Fraction]]) -> list[tuple[int, Fraction]]:
    """Lower convex hull of points sorted by abscissa; collinear points dropped."""
    hull: list[tuple[int, Fraction]] = []
    for pt in points:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            # keep only strictly convex turns: (x2,y2) must lie strictly
            # below the chord from (x1,y1) to pt
            if (y2 - y1) * (pt[0] - x1) >= (pt[1] - y1) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append(pt)
    return hull


def newton_polygon(vals: Sequence[ExtValuation]) -> NewtonPolygon:
    """Lower convex hull of {(i, vals[i]) : vals[i] finite}."""
    points = tuple(
        (i, Fraction(v) if is_finite(v) else INF) for i, v in enumerate(vals)
    )
    finite = [(i, v) for i, v in points if is_finite(v)]
    if len(finite) < 2:
        raise ValueError("need at least two finite valuations")
    hull = lower_hull(finite)
    segments = tuple(
        (Fraction(b[1] - a[1], b[0] - a[0]), b[0] - a[0])
        for a, b in zip(hull, hull[1:])
    )
    slopes = [s for s, _ in segments]
    assert all(s1 < s2 for s1, s2 in zip(slopes, slopes[1:]))
    assert sum(n for _, n in segments) == finite[-1][0] - finite[0][0]
    return NewtonPolygon(points, tuple(hull), segments)


@dataclass(frozen=True)
class PolygonCell:
    """Combinatorial hull data valid on an open lambda-cell.

    ``vertices`` are hull vertex indices; ``values`` the per-vertex affine
    valuations; ``segments`` pairs (affine slope, length).  Root valuations at
    a given lambda are -slope(lambda) with the segment lengths as counts.
    """

    lo: Fraction
    hi: Fraction
    vertices: tuple[int, ...]
    values: tuple[Affine, ...]
    segments: tuple[tuple[Affine, int], ...]

    def root_valuations_at(self, lam) -> tuple[tuple[Fraction, int], ...]:
        lam = Fraction(lam)
        if not self.lo <= lam <= self.hi:
            raise ValueError(f"lambda {lam} outside cell [{self.lo}, {self.hi}]")
        merged: dict[Fraction, int] = {}
        for fn, n in self.segments:  # slopes may collide at a cell boundary
            v = -fn(lam)
            merged[v] = merged.get(v, 0) + n
        return tuple(sorted(merged.items()))


@dataclass(frozen=True)
class ParamPolygon:
    """Newton polygon of a family, as a certified cell decomposition.

    ``breakpoints`` are exactly the interior lambda values where the hull's
    vertex set changes; ``cells`` cover the interval in order.  Adjacent cells
    sharing a boundary that is not a breakpoint have equal vertex sets.
    """

    lo: Fraction
    hi: Fraction
    breakpoints: tuple[Fraction, ...]
    cells: tuple[PolygonCell, ...]

    def cell_at(self, lam) -> PolygonCell:
        lam = Fraction(lam)
        if not self.lo < lam < self.hi:
            raise ValueError(f"lambda {lam} outside open interval ({self.lo}, {self.hi})")
        if lam in self.breakpoints:
            raise ValueError(f"lambda {lam} is a breakpoint; no single cell applies")
        for cell in self.cells:
            if cell.lo <= lam <= cell.hi:
                return cell
        raise AssertionError("cell decomposition does not cover the interval")

    def vertex_sets(self) -> tuple[tuple[int, ...], ...]:
        seen = [self.cells[0].vertices]
        for cell in self.cells[1:]:
            if cell.vertices != seen[-1]:
                seen.append(cell.vertices)
        return tuple(seen)


def _normalize_pvals(
    pvals: Sequence[Affine | Sequence[Affine] | None],
) -> list[tuple[int, tuple[Affine, ...]]]:
    out = []
    for i, entry in enumerate(pvals):
        if entry is None:
            continue
        if isinstance(entry, Affine):
            out.append((i, (entry,)))
            continue
        pieces = tuple(entry)
        if pieces:
            out.append((i, pieces))
    return out


def parametric_polygon(
    pvals: Sequence[Affine | Sequence[Affine] | None],
    interval: tuple[Fraction, Fraction],
) -> ParamPolygon:
    """Certified parametric Newton polygon on an open interval.

    ``pvals[i]`` is the valuation of coefficient i: a single Affine, a
    sequence of Affine pieces (the valuation is their minimum), or None/empty
    for +infinity.  Cells are split until, on each one, a midpoint hull is
    certified over the whole cell by endpoint checks of affine inequalities.
    """
    lo, hi = Fraction(interval[0]), Fraction(interval[1])
    if not lo < hi:
        raise ValueError("empty interval")
    indexed = _normalize_pvals(pvals)
    if len(indexed) < 2:
        raise ValueError("need at least two indices with finite valuations")

    cells: list[PolygonCell] = []
    work = [(lo, hi)]
    guard = 0
    while work:
        guard += 1
        if guard > 10_000:
            raise RuntimeError("cell refinement did not terminate")
        a, b = work.pop()
        cell_or_split = _certify_cell(indexed, a, b)
        if isinstance(cell_or_split, PolygonCell):
            cells.append(cell_or_split)
        else:
            rho = cell_or_split
            work.append((a, rho))
            work.append((rho, b))
    cells.sort(key=lambda c: c.lo)

    breakpoints = tuple(
        c2.lo for c1, c2 in zip(cells, cells[1:]) if c1.vertices != c2.vertices
    )
    return ParamPolygon(lo, hi, breakpoints, tuple(cells))


def _certify_cell(indexed, a: Fraction, b: Fraction):
    """Either a certified PolygonCell on [a, b] or a split point inside."""
    mid = (a + b) / 2
    actives: dict[int, Affine] = {}
    for i, pieces in indexed:
        _, wit = envelope_min(pieces, mid)
        actives[i] = wit[0]

    hull_pts = lower_hull([(i, actives[i](mid)) for i, _ in indexed])
    vertices = tuple(i for i, _ in hull_pts)

    constraints: list[Affine] = []
    # (1) the active piece is minimal within its own index
    for i, pieces in indexed:
        for piece in pieces:
            if piece != actives[i]:
                constraints.append(piece - actives[i])
    # (2) every point lies weakly above every hull segment's supporting line:
    #     (j-i)*v_k - (k-i)*v_j + (k-j)*v_i >= 0 for segment (i, j), point k
    for (i, _), (j, _) in zip(hull_pts, hull_pts[1:]):
        vi, vj = actives[i], actives[j]
        for k, _ in indexed:
            if k == i or k == j:
                continue
            vk = actives[k]
            fn = Affine(
                (j - i) * vk.constant - (k - i) * vj.constant + (k - j) * vi.constant,
                (j - i) * vk.slope - (k - i) * vj.slope + (k - j) * vi.slope,
            )
            constraints.append(fn)

    for fn in constraints:
        if fn(a) < 0 or fn(b) < 0:
            rho = fn.root()
            if rho is None or not a < rho < b:
                # piece order flips outside the cell; midpoint choice was
                # tied at an endpoint, split at the midpoint instead
                rho = mid
            return rho

    values = tuple(actives[i] for i in vertices)
    segments = tuple(
        (
            Affine(
                Fraction(actives[j].constant - actives[i].constant, j - i),
                Fraction(actives[j].slope - actives[i].slope, j - i),
            ),
            j - i,
        )
        for i, j in zip(vertices, vertices[1:])
    )
    return PolygonCell(a, b, vertices, values, segments)
