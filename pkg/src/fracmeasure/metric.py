"""Finite metric spaces, point measures, balls and product constructions.

A space is a finite point set with a validated distance matrix and a
resolution floor ``epsilon_net``: the set is treated as an
``epsilon_net``-net of a continuum, so no covering ball is ever allowed
a radius below that floor.  Balls are closed and identified by their
(center, radius) pair, never by their member set; two balls with equal
members but different radii are distinct objects (dilations such as
``2 B`` must stay well defined).

``enumerate_centered_balls`` produces, for each admissible center, the
finite lossless radius grid: every realized distance from the center in
``(0, delta]`` together with the floor ``epsilon_net``.  Shrinking any
off-grid radius to the next realized distance below it keeps the member
set, so for monotone premeasures this finite family contains a
cost-dominating counterpart of every centered delta-cover.

Products carry the max metric; covers of product targets use axis
rectangles (pairs of factor balls with independent radii) rather than
product-metric balls.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterable, Mapping, Sequence

import numpy as np

from .errors import (
    AsymmetricDistance,
    CoordsMismatch,
    DegenerateDistance,
    DeltaBelowResolution,
    EpsilonAboveResolution,
    NonPositiveEpsilon,
    SpaceValidationError,
    TriangleViolation,
    UnknownCenter,
)
from .extended import INVARIANT_TOL

__all__ = [
    "FiniteMetricSpace",
    "PointMeasure",
    "Ball",
    "Rectangle",
    "ProductSpace",
    "validate_space",
    "ball_members",
    "ball_mass",
    "dilate",
    "enumerate_centered_balls",
    "product_space",
    "product_measure",
    "enumerate_centered_rectangles",
    "point_measure",
    "uniform_measure",
]

# Beyond this size the cubic triangle scan is skipped for spaces whose
# matrix was derived from coordinates (the metric axioms then hold by
# construction, up to rounding far below the stated tolerance).
_TRIANGLE_SCAN_LIMIT = 512


@dataclass(frozen=True, eq=False)
class FiniteMetricSpace:
    """Validated finite metric space with a resolution floor."""

    point_ids: tuple
    dist: np.ndarray
    epsilon_net: float
    coords: np.ndarray | None = None
    _index: dict = field(init=False, repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "_index", {p: i for i, p in enumerate(self.point_ids)})
        self.dist.setflags(write=False)
        if self.coords is not None:
            self.coords.setflags(write=False)

    @property
    def n(self) -> int:
        return len(self.point_ids)

    def index_of(self, point) -> int:
        try:
            return self._index[point]
        except KeyError:
            raise UnknownCenter(point) from None

    def __contains__(self, point) -> bool:
        return point in self._index


@dataclass(frozen=True, eq=False)
class PointMeasure:
    """Nonnegative masses per point id, summing to 1."""

    mass: Mapping[Any, float]

    def mass_of(self, point) -> float:
        return self.mass.get(point, 0.0)

    @property
    def support(self) -> frozenset:
        return frozenset(p for p, m in self.mass.items() if m > 0.0)


@dataclass(frozen=True)
class Ball:
    """Closed ball identified by its (center, radius) pair."""

    center: Any
    radius: float


@dataclass(frozen=True)
class Rectangle:
    """Product of one ball per factor; the covering unit on products.

    The nominal diameter is max(2 r_left, 2 r_right), the diameter the
    pair would have in the max metric if both factors were full balls.
    """

    left: Ball
    right: Ball

    @property
    def nominal_diameter(self) -> float:
        return max(2.0 * self.left.radius, 2.0 * self.right.radius)


@dataclass(frozen=True, eq=False)
class ProductSpace:
    """Two factor spaces glued with the max metric.

    ``space`` is the combined finite metric space on id pairs
    ``(left_id, right_id)``; its epsilon_net is the max of the factor
    floors, which is the coarsest scale at which both factors resolve.
    """

    left: FiniteMetricSpace
    right: FiniteMetricSpace
    space: FiniteMetricSpace

    @property
    def epsilon_net(self) -> float:
        return self.space.epsilon_net


# --- construction and validation ---------------------------------------


def validate_space(
    dist: Sequence[Sequence[float]] | np.ndarray | None = None,
    coords: Sequence[Sequence[float]] | np.ndarray | None = None,
    epsilon_net: float = 0.0,
    point_ids: Sequence | None = None,
) -> FiniteMetricSpace:
    """Check every space invariant and return the validated space.

    Accepts a raw distance matrix, coordinate rows (Euclidean), or both
    (then their consistency is checked to 1e-12).  All violations are
    collected and raised together in one SpaceValidationError.
    """
    if dist is None and coords is None:
        raise ValueError("need a distance matrix or coordinates")

    violations: list = []
    c_arr = None
    if coords is not None:
        c_arr = np.asarray(coords, dtype=float)
        if c_arr.ndim == 1:
            c_arr = c_arr[:, None]
        diff = c_arr[:, None, :] - c_arr[None, :, :]
        euclid = np.sqrt((diff * diff).sum(axis=2))
    if dist is None:
        d_arr = euclid
    else:
        d_arr = np.array(dist, dtype=float)
        if d_arr.ndim != 2 or d_arr.shape[0] != d_arr.shape[1]:
            raise ValueError("distance matrix must be square")
        if c_arr is not None:
            if c_arr.shape[0] != d_arr.shape[0]:
                raise ValueError("coords and matrix sizes disagree")
            bad = np.argwhere(np.abs(d_arr - euclid) > INVARIANT_TOL)
            for i, j in bad[:8]:
                violations.append(CoordsMismatch(int(i), int(j)))

    n = d_arr.shape[0]
    if point_ids is None:
        point_ids = tuple(str(i) for i in range(n))
    else:
        point_ids = tuple(point_ids)
        if len(point_ids) != n:
            raise ValueError("point_ids length does not match the matrix")
        if len(set(point_ids)) != n:
            raise ValueError("point_ids must be distinct")

    if np.any(np.abs(np.diag(d_arr)) > 0.0):
        i = int(np.argmax(np.abs(np.diag(d_arr))))
        violations.append(DegenerateDistance(i, i))
    asym = np.argwhere(np.abs(d_arr - d_arr.T) > INVARIANT_TOL)
    for i, j in asym[:8]:
        if i < j:
            violations.append(AsymmetricDistance(int(i), int(j)))
    off = ~np.eye(n, dtype=bool)
    dgn = np.argwhere((d_arr <= 0.0) & off)
    for i, j in dgn[:8]:
        if i < j:
            violations.append(DegenerateDistance(int(i), int(j)))

    # Triangle scan; for coordinate-backed spaces the inequality holds by
    # construction, so large instances skip the cubic check.
    if c_arr is None or n <= _TRIANGLE_SCAN_LIMIT:
        best = np.full_like(d_arr, np.inf)
        arg = np.zeros(d_arr.shape, dtype=int)
        for j in range(n):  # best[i, k] = min over pivots j of d(i,j)+d(j,k)
            via_j = d_arr[:, j : j + 1] + d_arr[j : j + 1, :]
            better = via_j < best
            best = np.where(better, via_j, best)
            arg[better] = j
        bad = np.argwhere(best - d_arr < -INVARIANT_TOL)
        for i, k in bad[:8]:
            violations.append(TriangleViolation(int(i), int(arg[i, k]), int(k)))

    if not epsilon_net > 0.0:
        violations.append(NonPositiveEpsilon(float(epsilon_net)))
    else:
        pos = d_arr[off & (d_arr > 0.0)]
        if pos.size and float(epsilon_net) > float(pos.min()) + INVARIANT_TOL:
            violations.append(EpsilonAboveResolution(float(epsilon_net), float(pos.min())))

    if violations:
        raise SpaceValidationError(violations)
    return FiniteMetricSpace(
        point_ids=point_ids, dist=d_arr, epsilon_net=float(epsilon_net), coords=c_arr
    )


def point_measure(space: FiniteMetricSpace, masses: Mapping[Any, float]) -> PointMeasure:
    """Validate masses against a space: nonnegative, total 1, nonempty support."""
    unknown = [p for p in masses if p not in space]
    if unknown:
        raise UnknownCenter(unknown[0])
    vals = {p: float(m) for p, m in masses.items()}
    if any(m < 0.0 for m in vals.values()):
        raise ValueError("masses must be nonnegative")
    total = sum(vals.values())
    if abs(total - 1.0) > INVARIANT_TOL:
        raise ValueError(f"masses sum to {total!r}, expected 1 within {INVARIANT_TOL}")
    if not any(m > 0.0 for m in vals.values()):
        raise ValueError("support must be nonempty")
    return PointMeasure(mass=vals)


def uniform_measure(space: FiniteMetricSpace) -> PointMeasure:
    w = 1.0 / space.n
    return PointMeasure(mass={p: w for p in space.point_ids})


# --- balls --------------------------------------------------------------


def _member_indices(space: FiniteMetricSpace, center_idx: int, radius: float) -> np.ndarray:
    # Closed membership, tolerance free on the stored reals.
    return np.flatnonzero(space.dist[center_idx] <= radius)


def ball_members(space: FiniteMetricSpace | ProductSpace, ball: Ball | Rectangle) -> frozenset:
    """Member ids of a ball, or member id pairs of a rectangle."""
    if isinstance(ball, Rectangle):
        if not isinstance(space, ProductSpace):
            raise TypeError("rectangle members need a product space")
        left = ball_members(space.left, ball.left)
        right = ball_members(space.right, ball.right)
        return frozenset((a, b) for a in left for b in right)
    if isinstance(space, ProductSpace):
        space = space.space
    idx = space.index_of(ball.center)
    return frozenset(space.point_ids[int(i)] for i in _member_indices(space, idx, ball.radius))


def ball_mass(
    space: FiniteMetricSpace | ProductSpace,
    measure: PointMeasure,
    ball: Ball | Rectangle,
) -> float:
    """Total mass of the members of a ball or rectangle."""
    return float(sum(measure.mass_of(p) for p in ball_members(space, ball)))


def dilate(ball: Ball | Rectangle, factor: float) -> Ball | Rectangle:
    """Scale the radius (both radii, for a rectangle) by ``factor``."""
    if isinstance(ball, Rectangle):
        return Rectangle(left=dilate(ball.left, factor), right=dilate(ball.right, factor))
    return Ball(center=ball.center, radius=ball.radius * factor)


def enumerate_centered_balls(
    space: FiniteMetricSpace, centers: Iterable, delta: float
) -> list[Ball]:
    """Finite lossless candidate family for covers at scale ``delta``.

    For each center the radius grid is every realized distance from the
    center in (0, delta] plus the floor epsilon_net, intersected with
    [epsilon_net, delta].  Requires delta >= epsilon_net.
    """
    if delta < space.epsilon_net:
        raise DeltaBelowResolution(float(delta), space.epsilon_net)
    balls: list[Ball] = []
    seen: set[tuple] = set()
    order = sorted({space.index_of(c) for c in centers})
    for ci in order:
        row = space.dist[ci]
        realized = np.unique(row[(row > 0.0) & (row <= delta)])
        radii = np.unique(np.concatenate([[space.epsilon_net], realized]))
        cid = space.point_ids[ci]
        for r in radii:
            key = (ci, float(r))
            if key not in seen:
                seen.add(key)
                balls.append(Ball(center=cid, radius=float(r)))
    return balls


# --- products -----------------------------------------------------------


def product_space(left: FiniteMetricSpace, right: FiniteMetricSpace) -> ProductSpace:
    """Glue two spaces with the max metric on id pairs."""
    nl, nr = left.n, right.n
    ids = tuple((a, b) for a in left.point_ids for b in right.point_ids)
    d = np.maximum(
        left.dist[:, None, :, None], right.dist[None, :, None, :]
    ).reshape(nl * nr, nl * nr)
    eps = max(left.epsilon_net, right.epsilon_net)
    combined = FiniteMetricSpace(point_ids=ids, dist=d, epsilon_net=eps, coords=None)
    return ProductSpace(left=left, right=right, space=combined)


def product_measure(mu: PointMeasure, nu: PointMeasure) -> PointMeasure:
    """Product measure on id pairs: mass (a, b) = mu(a) * nu(b)."""
    mass = {
        (a, b): ma * mb
        for a, ma in mu.mass.items()
        for b, mb in nu.mass.items()
    }
    return PointMeasure(mass=mass)


def enumerate_centered_rectangles(
    product: ProductSpace,
    left_centers: Iterable,
    right_centers: Iterable,
    delta: float,
) -> list[Rectangle]:
    """All pairs of factor candidate balls at scale ``delta``.

    Radii are chosen independently per factor, so the family is the full
    cross product of the factor grids; nominal diameters stay <= 2 delta.
    """
    if delta < product.epsilon_net:
        raise DeltaBelowResolution(float(delta), product.epsilon_net)
    lballs = enumerate_centered_balls(product.left, left_centers, delta)
    rballs = enumerate_centered_balls(product.right, right_centers, delta)
    return [Rectangle(left=a, right=b) for a in lballs for b in rballs]
