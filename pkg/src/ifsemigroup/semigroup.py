"""Finite semigroups given by Cayley tables, and crisp ideal theory.

Elements are the integers ``0..n-1`` and ``table[i][j]`` is the product
``i*j``.  Subsets of a semigroup are plain ``frozenset`` objects of element
indices; every predicate takes the semigroup explicitly.
"""

from __future__ import annotations

import itertools
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .report import CONFIRMED, COUNTEREXAMPLE, VerificationReport

CRISP_KINDS = (
    "subsemigroup",
    "interior_ideal",
    "bi_ideal",
    "left_ideal",
    "right_ideal",
    "ideal",
)

DEFAULT_SUBSET_CAP = 4


class AssociativityError(ValueError):
    def __init__(self, triple: tuple[int, int, int]):
        self.triple = triple
        i, j, k = triple
        super().__init__(f"table is not associative at (i, j, k) = ({i}, {j}, {k})")


class FiniteSemigroup:
    """An associative Cayley table.  Immutable once constructed."""

    def __init__(self, table: Sequence[Sequence[int]]):
        n = len(table)
        if n == 0:
            raise ValueError("a semigroup needs at least one element")
        rows = []
        for i, row in enumerate(table):
            if len(row) != n:
                raise ValueError(f"row {i} has {len(row)} entries, expected {n}")
            for j, v in enumerate(row):
                if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < n:
                    raise ValueError(f"entry ({i}, {j}) = {v!r} is outside 0..{n - 1}")
            rows.append(tuple(row))
        self.table: tuple[tuple[int, ...], ...] = tuple(rows)
        bad = first_nonassociative_triple(self.table)
        if bad is not None:
            raise AssociativityError(bad)

    @property
    def order(self) -> int:
        return len(self.table)

    @property
    def elements(self) -> range:
        return range(len(self.table))

    def mul(self, x: int, y: int) -> int:
        return self.table[x][y]

    def product(self, *xs: int) -> int:
        """Left-to-right product of one or more elements."""
        acc = xs[0]
        for x in xs[1:]:
            acc = self.table[acc][x]
        return acc

    @cached_property
    def factorizations(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """For each x, every pair (u, v) with uv = x."""
        out: list[list[tuple[int, int]]] = [[] for _ in self.elements]
        for u in self.elements:
            for v in self.elements:
                out[self.table[u][v]].append((u, v))
        return tuple(tuple(f) for f in out)

    @cached_property
    def full(self) -> frozenset[int]:
        return frozenset(self.elements)

    def is_associative(self) -> bool:
        return first_nonassociative_triple(self.table) is None

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FiniteSemigroup) and self.table == other.table

    def __hash__(self) -> int:
        return hash(self.table)

    def __repr__(self) -> str:
        return f"FiniteSemigroup({[list(r) for r in self.table]})"


def first_nonassociative_triple(table: Sequence[Sequence[int]]) -> tuple[int, int, int] | None:
    n = len(table)
    for i in range(n):
        ti = table[i]
        for j in range(n):
            tij = table[ti[j]]
            tj = table[j]
            for k in range(n):
                if tij[k] != ti[tj[k]]:
                    return (i, j, k)
    return None


def from_table(n: int, entries: Sequence[Sequence[int]]) -> FiniteSemigroup:
    if n < 1:
        raise ValueError("order must be positive")
    if len(entries) != n:
        raise ValueError(f"expected {n} rows, got {len(entries)}")
    return FiniteSemigroup(entries)


def subset(S: FiniteSemigroup, members: Iterable[int]) -> frozenset[int]:
    """Validate ``members`` against ``S`` and return them as a frozenset."""
    out = frozenset(members)
    for x in out:
        if not 0 <= x < S.order:
            raise ValueError(f"element {x} is not in a semigroup of order {S.order}")
    return out


def product_of_subsets(S: FiniteSemigroup, X: Iterable[int], Y: Iterable[int]) -> frozenset[int]:
    t = S.table
    Y = tuple(Y)
    return frozenset(t[x][y] for x in X for y in Y)


def classify_crisp(S: FiniteSemigroup, I: Iterable[int], kind: str) -> bool:
    if kind not in CRISP_KINDS:
        raise ValueError(f"unknown crisp kind {kind!r}")
    I = frozenset(I)
    if not I:
        return False
    if kind == "left_ideal":
        return product_of_subsets(S, S.full, I) <= I
    if kind == "right_ideal":
        return product_of_subsets(S, I, S.full) <= I
    if kind == "ideal":
        return (product_of_subsets(S, S.full, I) <= I
                and product_of_subsets(S, I, S.full) <= I)
    if not product_of_subsets(S, I, I) <= I:
        return False
    if kind == "subsemigroup":
        return True
    if kind == "interior_ideal":
        return product_of_subsets(S, product_of_subsets(S, S.full, I), S.full) <= I
    # bi_ideal
    return product_of_subsets(S, product_of_subsets(S, I, S.full), I) <= I


def all_nonempty_subsets(S: FiniteSemigroup, cap: int | None = None) -> Iterator[frozenset[int]]:
    if cap is not None and S.order > cap:
        raise ValueError(f"refusing to enumerate 2^{S.order} subsets (cap is order {cap})")
    elems = list(S.elements)
    for r in range(1, len(elems) + 1):
        for combo in itertools.combinations(elems, r):
            yield frozenset(combo)


def crisp_ideals(S: FiniteSemigroup, kind: str = "ideal",
                 cap: int | None = None) -> list[frozenset[int]]:
    return [I for I in all_nonempty_subsets(S, cap) if classify_crisp(S, I, kind)]


def is_prime_idealwise(S: FiniteSemigroup, I: Iterable[int], cap: int | None = None) -> bool:
    I = frozenset(I)
    if not classify_crisp(S, I, "ideal"):
        return False
    ideals = crisp_ideals(S, cap=cap)
    for A in ideals:
        if A <= I:
            continue
        for B in ideals:
            if not B <= I and product_of_subsets(S, A, B) <= I:
                return False
    return True


def is_semiprime_idealwise(S: FiniteSemigroup, I: Iterable[int], cap: int | None = None) -> bool:
    I = frozenset(I)
    if not classify_crisp(S, I, "ideal"):
        return False
    return all(A <= I or not product_of_subsets(S, A, A) <= I
               for A in crisp_ideals(S, cap=cap))


def prime_elementwise_violation(S: FiniteSemigroup, I: Iterable[int]) -> tuple[int, int] | None:
    """A pair (x, y) with xy in I but neither x nor y in I, if one exists."""
    I = frozenset(I)
    t = S.table
    for x in S.elements:
        if x in I:
            continue
        for y in S.elements:
            if y not in I and t[x][y] in I:
                return (x, y)
    return None


def is_prime_elementwise(S: FiniteSemigroup, I: Iterable[int]) -> bool:
    """``xy in I`` implies ``x in I`` or ``y in I``.

    Only the element condition is tested; callers that need a prime *ideal*
    check :func:`classify_crisp` with ``"ideal"`` as well.
    """
    return prime_elementwise_violation(S, I) is None


def is_semiprime_elementwise(S: FiniteSemigroup, I: Iterable[int]) -> bool:
    """``x*x in I`` implies ``x in I``; the ideal condition is not tested."""
    I = frozenset(I)
    t = S.table
    return all(x in I or t[x][x] not in I for x in S.elements)


def regular_witnesses(S: FiniteSemigroup) -> dict[int, int] | None:
    """Map each a to some x with axa = a, or None if S is not regular."""
    t = S.table
    out = {}
    for a in S.elements:
        x = next((x for x in S.elements if t[t[a][x]][a] == a), None)
        if x is None:
            return None
        out[a] = x
    return out


def is_regular(S: FiniteSemigroup) -> bool:
    return regular_witnesses(S) is not None


def is_intra_regular(S: FiniteSemigroup) -> bool:
    t = S.table
    for x in S.elements:
        x2 = t[x][x]
        if x not in product_of_subsets(S, product_of_subsets(S, S.full, (x2,)), S.full):
            return False
    return True


def _lattice_witnesses(S: FiniteSemigroup, cap: int):
    lefts = crisp_ideals(S, "left_ideal", cap)
    rights = crisp_ideals(S, "right_ideal", cap)
    intra_bad = regular_bad = None
    for L in lefts:
        for R in rights:
            meet = L & R
            if intra_bad is None and not meet <= product_of_subsets(S, L, R):
                intra_bad = (L, R)
            if regular_bad is None and meet != product_of_subsets(S, R, L):
                regular_bad = (L, R)
    return intra_bad, regular_bad, len(lefts) * len(rights)


def check_ideal_lattice(S: FiniteSemigroup, cap: int = DEFAULT_SUBSET_CAP) -> VerificationReport:
    """Check both ideal-lattice characterizations on one semigroup.

    Intra-regular iff ``L & R <= LR`` for every left ideal L and right ideal R;
    regular iff ``R & L == RL``.  When either condition fails the first
    failing (L, R) is attached as a witness even if the biconditional holds.
    """
    if S.order > cap:
        raise ValueError(f"order {S.order} exceeds subset enumeration cap {cap}")
    intra_bad, regular_bad, pairs = _lattice_witnesses(S, cap)
    intra, regular = is_intra_regular(S), is_regular(S)
    agree = (intra == (intra_bad is None)) and (regular == (regular_bad is None))
    witness = None
    if intra_bad is not None or regular_bad is not None or not agree:
        witness = {"table": [list(r) for r in S.table]}
        if intra_bad is not None:
            witness["intra_regular_LR"] = [sorted(intra_bad[0]), sorted(intra_bad[1])]
        if regular_bad is not None:
            witness["regular_LR"] = [sorted(regular_bad[0]), sorted(regular_bad[1])]
    notes = f"intra_regular={intra} regular={regular}"
    return VerificationReport(
        "crisp-ideal-lattice", pairs, CONFIRMED if agree else COUNTEREXAMPLE, witness, notes)


check_lemma_L_cap_R = check_ideal_lattice
