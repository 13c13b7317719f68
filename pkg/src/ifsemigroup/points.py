"""Intuitionistic fuzzy points and the grid-restricted point semigroup.

A point ``x_(a,b)`` carries an element and a degree pair with ``a > 0`` and
``b < 1``.  Restricting the degrees to the ``1/D`` grid makes the point
semigroup finite, so it is materialized as an ordinary
:class:`~ifsemigroup.semigroup.FiniteSemigroup` over point indices and every
crisp predicate is reused unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from . import semigroup as sg
from .ifs import DegreePair, IFSubset
from .semigroup import FiniteSemigroup

DEFAULT_MAX_POINTS = 512


class SizeCapExceeded(ValueError):
    pass


@dataclass(frozen=True, order=True)
class FuzzyPoint:
    element: int
    pair: DegreePair

    def __post_init__(self) -> None:
        if self.pair.mu <= 0 or self.pair.nu >= self.pair.resolution:
            raise ValueError(f"a fuzzy point needs mu > 0 and nu < 1, got {self.pair}")

    @property
    def resolution(self) -> int:
        return self.pair.resolution

    def __str__(self) -> str:
        return f"{self.element}_{self.pair}"


def point_product(S: FiniteSemigroup, p: FuzzyPoint, q: FuzzyPoint) -> FuzzyPoint:
    """``x_(a,b) o y_(c,d) = (xy)_(min(a,c), max(b,d))``."""
    if p.resolution != q.resolution:
        raise ValueError(f"resolution mismatch: {p.resolution} vs {q.resolution}")
    for e in (p.element, q.element):
        if not 0 <= e < S.order:
            raise ValueError(f"point element {e} is not in a semigroup of order {S.order}")
    pair = DegreePair(min(p.pair.mu, q.pair.mu), max(p.pair.nu, q.pair.nu), p.resolution)
    return FuzzyPoint(S.table[p.element][q.element], pair)


def grid_pairs(D: int) -> list[DegreePair]:
    """Every point label ``(a/D, b/D)`` with ``a >= 1``, ``b <= D-1``, ``a + b <= D``."""
    if D < 1:
        raise ValueError("resolution must be at least 1")
    return [DegreePair(a, b, D) for a in range(1, D + 1) for b in range(0, D - a + 1)]


@dataclass(frozen=True, eq=False)
class PointSemigroup:
    base: FiniteSemigroup
    resolution: int
    points: tuple[FuzzyPoint, ...]
    semigroup: FiniteSemigroup

    @property
    def order(self) -> int:
        return len(self.points)

    @property
    def table(self) -> tuple[tuple[int, ...], ...]:
        return self.semigroup.table

    def index(self, p: FuzzyPoint) -> int:
        """Position of ``p`` in :attr:`points` (points are sorted by element, then label)."""
        if p.resolution != self.resolution:
            raise ValueError(f"point has resolution {p.resolution}, expected {self.resolution}")
        k = len(grid_pairs(self.resolution))
        return p.element * k + _label_rank(p.pair)

    def point_set(self, members: Iterable[int | FuzzyPoint]) -> "PointSet":
        idx = frozenset(m if isinstance(m, int) else self.index(m) for m in members)
        for i in idx:
            if not 0 <= i < self.order:
                raise ValueError(f"point index {i} out of range 0..{self.order - 1}")
        return PointSet(self, idx)

    @property
    def everything(self) -> "PointSet":
        return PointSet(self, self.semigroup.full)


def _label_rank(pair: DegreePair) -> int:
    # position of (a, b) in grid_pairs order: a-major, b-minor
    D, a, b = pair.resolution, pair.mu, pair.nu
    before = sum(D - i + 1 for i in range(1, a))
    return before + b


def materialize(S: FiniteSemigroup, D: int, max_points: int = DEFAULT_MAX_POINTS) -> PointSemigroup:
    labels = grid_pairs(D)
    size = S.order * len(labels)
    if size > max_points:
        raise SizeCapExceeded(
            f"point semigroup would have {size} points (order {S.order} x {len(labels)} labels),"
            f" cap is {max_points}")
    points = tuple(FuzzyPoint(x, lab) for x in S.elements for lab in labels)
    k = len(labels)
    # label part of a product depends only on the two labels
    label_table = [[_label_rank(DegreePair(min(p.mu, q.mu), max(p.nu, q.nu), D)) for q in labels]
                   for p in labels]
    t = S.table
    table = [[t[i // k][j // k] * k + label_table[i % k][j % k] for j in range(size)]
             for i in range(size)]
    return PointSemigroup(S, D, points, FiniteSemigroup(table))


@dataclass(frozen=True)
class PointSet:
    host: PointSemigroup
    members: frozenset[int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "members", frozenset(self.members))

    def __iter__(self):
        return iter(sorted(self.members))

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, p: object) -> bool:
        if isinstance(p, FuzzyPoint):
            return self.host.index(p) in self.members
        return p in self.members

    def __le__(self, other: "PointSet") -> bool:
        _same_host(self, other)
        return self.members <= other.members

    @property
    def points(self) -> list[FuzzyPoint]:
        return [self.host.points[i] for i in sorted(self.members)]

    def classify(self, kind: str) -> bool:
        return sg.classify_crisp(self.host.semigroup, self.members, kind)

    def is_prime(self) -> bool:
        """Elementwise prime ideal of the point semigroup."""
        return (self.classify("ideal")
                and sg.is_prime_elementwise(self.host.semigroup, self.members))

    def is_semiprime(self) -> bool:
        return (self.classify("ideal")
                and sg.is_semiprime_elementwise(self.host.semigroup, self.members))


def _same_host(X: PointSet, Y: PointSet) -> None:
    if X.host is not Y.host:
        raise ValueError("point sets belong to different point semigroups")


def underline(A: IFSubset, P: PointSemigroup) -> PointSet:
    """All points ``x_(a,b)`` of ``P`` with ``a <= mu_A(x)`` and ``b >= nu_A(x)``."""
    if A.carrier != P.base:
        raise ValueError("IFS and point semigroup have different base semigroups")
    if A.resolution != P.resolution:
        raise ValueError(f"resolution mismatch: IFS {A.resolution} vs points {P.resolution}")
    mu, nu = A.mu, A.nu
    return PointSet(P, frozenset(
        i for i, p in enumerate(P.points)
        if p.pair.mu <= mu[p.element] and p.pair.nu >= nu[p.element]))


def pointset_product(X: PointSet, Y: PointSet) -> PointSet:
    _same_host(X, Y)
    return PointSet(X.host, sg.product_of_subsets(X.host.semigroup, X.members, Y.members))


def pointset_union(X: PointSet, Y: PointSet) -> PointSet:
    _same_host(X, Y)
    return PointSet(X.host, X.members | Y.members)


def pointset_intersection(X: PointSet, Y: PointSet) -> PointSet:
    _same_host(X, Y)
    return PointSet(X.host, X.members & Y.members)


def embed(S: FiniteSemigroup, D: int, pair: DegreePair) -> dict[int, FuzzyPoint]:
    """The map ``x -> x_(a,b)`` for a fixed valid grid label."""
    if pair.resolution != D:
        raise ValueError(f"label {pair} is not on the 1/{D} grid")
    return {x: FuzzyPoint(x, pair) for x in S.elements}


def embedding_failure(S: FiniteSemigroup, f: dict[int, FuzzyPoint]) -> tuple | None:
    """First reason ``f`` is not an injective homomorphism, or None."""
    for x in S.elements:
        for y in S.elements:
            if f[S.table[x][y]] != point_product(S, f[x], f[y]):
                return ("homomorphism", x, y)
    seen: dict[FuzzyPoint, int] = {}
    for x, p in f.items():
        if p in seen:
            return ("injectivity", seen[p], x)
        seen[p] = x
    return None


def same_label_prime_violation(X: PointSet) -> tuple[FuzzyPoint, FuzzyPoint] | None:
    """Pair ``x_(a,b), y_(a,b)`` with product in X but neither factor in X.

    Only equally-labelled factors are tried, which is weaker than the
    elementwise prime condition over all pairs of points.
    """
    P = X.host
    t = P.table
    k = len(grid_pairs(P.resolution))
    for i in range(P.order):
        if i in X.members:
            continue
        for x in P.base.elements:
            j = x * k + i % k
            if j not in X.members and t[i][j] in X.members:
                return (P.points[i], P.points[j])
    return None


def to_sg_text(P: PointSemigroup) -> str:
    from .data import serialize_semigroup
    return serialize_semigroup(P.semigroup)


def to_index_text(P: PointSemigroup) -> str:
    lines = ["# idx: point_id element mu_num nu_num D"]
    for i, p in enumerate(P.points):
        lines.append(f"{i} {p.element} {p.pair.mu} {p.pair.nu} {P.resolution}")
    return "\n".join(lines) + "\n"
