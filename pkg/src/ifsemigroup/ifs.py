"""Intuitionistic fuzzy subsets of a finite semigroup with exact grid degrees.

All degrees of one subset share a resolution ``D`` and are stored as integer
numerators ``0..D``, so membership ``mu(x) = mu_num / D``.  Sup and inf over
factorization sets are then plain ``max`` and ``min`` on integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Sequence, Union

from .semigroup import FiniteSemigroup

IFS_KINDS = (
    "subsemigroup",
    "interior_ideal",
    "bi_ideal",
    "left_ideal",
    "right_ideal",
    "ideal",
    "ideal_alt",
    "semiprime",
    "prime",
)


@dataclass(frozen=True, order=True)
class DegreePair:
    """A (membership, non-membership) pair ``(mu/D, nu/D)`` with ``mu + nu <= D``."""

    mu: int
    nu: int
    resolution: int

    def __post_init__(self) -> None:
        D = self.resolution
        if not isinstance(D, int) or D < 1:
            raise ValueError(f"resolution must be a positive integer, got {D!r}")
        if not (0 <= self.mu <= D and 0 <= self.nu <= D):
            raise ValueError(f"degrees ({self.mu}, {self.nu}) outside 0..{D}")
        if self.mu + self.nu > D:
            raise ValueError(f"mu + nu = ({self.mu} + {self.nu})/{D} exceeds 1")

    @classmethod
    def from_fractions(cls, mu, nu, resolution: int) -> "DegreePair":
        m, v = Fraction(mu) * resolution, Fraction(nu) * resolution
        if m.denominator != 1 or v.denominator != 1:
            raise ValueError(f"({mu}, {nu}) is not aligned to the 1/{resolution} grid")
        return cls(int(m), int(v), resolution)

    @property
    def mu_value(self) -> Fraction:
        return Fraction(self.mu, self.resolution)

    @property
    def nu_value(self) -> Fraction:
        return Fraction(self.nu, self.resolution)

    def __str__(self) -> str:
        return f"({self.mu_value}, {self.nu_value})"


PairLike = Union[DegreePair, Sequence[int]]


class IFSubset:
    """An intuitionistic fuzzy subset ``A = (mu_A, nu_A)`` of ``carrier``."""

    __slots__ = ("carrier", "mu", "nu", "resolution")

    def __init__(self, carrier: FiniteSemigroup, mu: Sequence[int], nu: Sequence[int],
                 resolution: int):
        n = carrier.order
        if len(mu) != n or len(nu) != n:
            raise ValueError(f"expected {n} degree pairs, got {len(mu)}/{len(nu)}")
        if not isinstance(resolution, int) or resolution < 1:
            raise ValueError(f"resolution must be a positive integer, got {resolution!r}")
        for x, (m, v) in enumerate(zip(mu, nu)):
            if not (0 <= m <= resolution and 0 <= v <= resolution):
                raise ValueError(f"element {x}: degrees ({m}, {v}) outside 0..{resolution}")
            if m + v > resolution:
                raise ValueError(f"element {x}: mu + nu = ({m} + {v})/{resolution} exceeds 1")
        self.carrier = carrier
        self.mu: tuple[int, ...] = tuple(mu)
        self.nu: tuple[int, ...] = tuple(nu)
        self.resolution = resolution

    def pair(self, x: int) -> DegreePair:
        return DegreePair(self.mu[x], self.nu[x], self.resolution)

    @property
    def pairs(self) -> list[DegreePair]:
        return [self.pair(x) for x in self.carrier.elements]

    def as_numerators(self) -> list[list[int]]:
        return [[m, v] for m, v in zip(self.mu, self.nu)]

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, IFSubset) and self.carrier == other.carrier
                and self.resolution == other.resolution
                and self.mu == other.mu and self.nu == other.nu)

    def __hash__(self) -> int:
        return hash((self.carrier, self.resolution, self.mu, self.nu))

    def __repr__(self) -> str:
        body = ", ".join(f"{x}:({m},{v})" for x, (m, v) in enumerate(zip(self.mu, self.nu)))
        return f"IFSubset(D={self.resolution}, {body})"


def make_ifs(S: FiniteSemigroup, pairs: Iterable[PairLike], D: int) -> IFSubset:
    """Build an IFS from ``DegreePair`` objects or ``(mu_num, nu_num)`` tuples."""
    mu, nu = [], []
    for p in pairs:
        if isinstance(p, DegreePair):
            if p.resolution != D:
                raise ValueError(f"pair {p} has resolution {p.resolution}, expected {D}")
            mu.append(p.mu)
            nu.append(p.nu)
        else:
            m, v = p
            mu.append(m)
            nu.append(v)
    return IFSubset(S, mu, nu, D)


def characteristic(S: FiniteSemigroup, D: int, members: Iterable[int] | None = None) -> IFSubset:
    """``(1, 0)`` on ``members`` (all of S by default) and ``(0, 1)`` elsewhere."""
    inside = S.full if members is None else frozenset(members)
    return IFSubset(S, [D if x in inside else 0 for x in S.elements],
                    [0 if x in inside else D for x in S.elements], D)


def empty_ifs(S: FiniteSemigroup, D: int) -> IFSubset:
    return IFSubset(S, [0] * S.order, [D] * S.order, D)


def constant_ifs(S: FiniteSemigroup, mu: int, nu: int, D: int) -> IFSubset:
    return IFSubset(S, [mu] * S.order, [nu] * S.order, D)


def is_nonempty(A: IFSubset) -> bool:
    D = A.resolution
    return any(m > 0 or v < D for m, v in zip(A.mu, A.nu))


def is_consistent(A: IFSubset) -> bool:
    """True when mu(x) = 0 forces nu(x) = 1 at every element."""
    D = A.resolution
    return all(m > 0 or v == D for m, v in zip(A.mu, A.nu))


def _check_compatible(A: IFSubset, B: IFSubset) -> None:
    if A.carrier != B.carrier:
        raise ValueError("IFSs live on different semigroups")
    if A.resolution != B.resolution:
        raise ValueError(f"resolution mismatch: {A.resolution} vs {B.resolution}")


def union(A: IFSubset, B: IFSubset) -> IFSubset:
    _check_compatible(A, B)
    return IFSubset(A.carrier, tuple(map(max, A.mu, B.mu)), tuple(map(min, A.nu, B.nu)),
                    A.resolution)


def intersection(A: IFSubset, B: IFSubset) -> IFSubset:
    _check_compatible(A, B)
    return IFSubset(A.carrier, tuple(map(min, A.mu, B.mu)), tuple(map(max, A.nu, B.nu)),
                    A.resolution)


def compose(A: IFSubset, B: IFSubset) -> IFSubset:
    """The convolution product: sup-min of memberships, inf-max of non-memberships.

    An element with no factorization gets ``(0, 1)``.
    """
    _check_compatible(A, B)
    D = A.resolution
    am, an, bm, bn = A.mu, A.nu, B.mu, B.nu
    mu, nu = [], []
    for facts in A.carrier.factorizations:
        m, v = 0, D
        for u, w in facts:
            m = max(m, min(am[u], bm[w]))
            v = min(v, max(an[u], bn[w]))
        # sup of mins plus inf of maxes stays within the simplex
        assert m + v <= D
        mu.append(m)
        nu.append(v)
    return IFSubset(A.carrier, mu, nu, D)


def ifs_leq(A: IFSubset, B: IFSubset) -> bool:
    _check_compatible(A, B)
    return (all(a <= b for a, b in zip(A.mu, B.mu))
            and all(a >= b for a, b in zip(A.nu, B.nu)))


def _subsemigroup(A: IFSubset) -> bool:
    t, mu, nu = A.carrier.table, A.mu, A.nu
    return all(mu[t[x][y]] >= min(mu[x], mu[y]) and nu[t[x][y]] <= max(nu[x], nu[y])
               for x, y in product(A.carrier.elements, repeat=2))


def _left(A: IFSubset) -> bool:
    t, mu, nu = A.carrier.table, A.mu, A.nu
    return all(mu[t[x][y]] >= mu[y] and nu[t[x][y]] <= nu[y]
               for x, y in product(A.carrier.elements, repeat=2))


def _right(A: IFSubset) -> bool:
    t, mu, nu = A.carrier.table, A.mu, A.nu
    return all(mu[t[x][y]] >= mu[x] and nu[t[x][y]] <= nu[x]
               for x, y in product(A.carrier.elements, repeat=2))


def _ideal_alt(A: IFSubset) -> bool:
    t, mu, nu = A.carrier.table, A.mu, A.nu
    return all(mu[t[x][y]] >= max(mu[x], mu[y]) and nu[t[x][y]] <= min(nu[x], nu[y])
               for x, y in product(A.carrier.elements, repeat=2))


def _interior(A: IFSubset) -> bool:
    S, mu, nu = A.carrier, A.mu, A.nu
    return all(mu[S.product(x, a, y)] >= mu[a] and nu[S.product(x, a, y)] <= nu[a]
               for x, a, y in product(S.elements, repeat=3))


def _bi(A: IFSubset) -> bool:
    S, mu, nu = A.carrier, A.mu, A.nu
    return all(mu[S.product(x, w, y)] >= min(mu[x], mu[y])
               and nu[S.product(x, w, y)] <= max(nu[x], nu[y])
               for x, w, y in product(S.elements, repeat=3))


def _semiprime_condition(A: IFSubset) -> bool:
    t, mu, nu = A.carrier.table, A.mu, A.nu
    return all(mu[x] >= mu[t[x][x]] and nu[x] <= nu[t[x][x]] for x in A.carrier.elements)


def _prime_condition(A: IFSubset) -> bool:
    t, mu, nu = A.carrier.table, A.mu, A.nu
    return all(mu[t[x][y]] == max(mu[x], mu[y]) and nu[t[x][y]] == min(nu[x], nu[y])
               for x, y in product(A.carrier.elements, repeat=2))


def classify_ifs(A: IFSubset, kind: str) -> bool:
    if kind not in IFS_KINDS:
        raise ValueError(f"unknown IFS kind {kind!r}")
    if not is_nonempty(A):
        return False
    if kind == "subsemigroup":
        return _subsemigroup(A)
    if kind == "interior_ideal":
        return _subsemigroup(A) and _interior(A)
    if kind == "bi_ideal":
        return _subsemigroup(A) and _bi(A)
    if kind == "left_ideal":
        return _left(A)
    if kind == "right_ideal":
        return _right(A)
    if kind == "ideal":
        return _left(A) and _right(A)
    if kind == "ideal_alt":
        return _ideal_alt(A)
    if kind == "semiprime":
        return _left(A) and _right(A) and _semiprime_condition(A)
    return _left(A) and _right(A) and _prime_condition(A)
