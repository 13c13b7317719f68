"""Semigroup enumeration, IFS generation, and the ``.sg`` / ``.ifs`` text formats.

``.sg``: first line ``n``, then ``n`` rows of ``n`` space-separated products.
``.ifs``: first line ``D n``, then ``n`` lines ``x mu_num nu_num``.
Lines starting with ``#`` and blank lines are ignored by both parsers.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator

from .ifs import IFSubset
from .semigroup import FiniteSemigroup, first_nonassociative_triple

MASK64 = (1 << 64) - 1


class BudgetExceeded(RuntimeError):
    pass


class ParseError(ValueError):
    def __init__(self, lineno: int, message: str):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {message}")


class SplitMix64:
    """SplitMix64 (Steele, Lea, Flood 2014).  Tiny, portable, fully specified."""

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform integer in ``0..bound-1`` by rejection of the biased tail."""
        if bound < 1:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - ((1 << 64) % bound)
        while True:
            r = self.next_u64()
            if r < limit:
                return r % bound


# ---------------------------------------------------------------- enumeration

@dataclass(frozen=True)
class EnumerationConfig:
    max_order: int
    up_to_iso: bool = False
    budget: int = 100_000
    min_order: int = 1

    def __post_init__(self) -> None:
        if self.max_order < 1:
            raise ValueError("max_order must be at least 1")
        if not 1 <= self.min_order <= self.max_order:
            raise ValueError("need 1 <= min_order <= max_order")


def relabel(table, perm) -> tuple[tuple[int, ...], ...]:
    """Table of the isomorphic copy under ``x -> perm[x]``."""
    n = len(table)
    inv = [0] * n
    for x, px in enumerate(perm):
        inv[px] = x
    return tuple(tuple(perm[table[inv[i]][inv[j]]] for j in range(n)) for i in range(n))


def canonical_form(table) -> tuple[tuple[int, ...], ...]:
    """Lexicographically least relabeling of ``table`` over all n! permutations."""
    n = len(table)
    return min(relabel(table, p) for p in itertools.permutations(range(n)))


def enumerate_semigroups(cfg: EnumerationConfig) -> Iterator[FiniteSemigroup]:
    """Yield every associative table of order ``min_order..max_order``.

    With ``up_to_iso`` the canonical representative of each isomorphism class
    is yielded once, in the order its first member is met.
    """
    examined = 0
    for n in range(cfg.min_order, cfg.max_order + 1):
        seen: set = set()
        for flat in itertools.product(range(n), repeat=n * n):
            examined += 1
            if examined > cfg.budget:
                raise BudgetExceeded(f"examined more than {cfg.budget} tables")
            table = tuple(flat[i * n:(i + 1) * n] for i in range(n))
            if first_nonassociative_triple(table) is not None:
                continue
            if cfg.up_to_iso:
                table = canonical_form(table)
                if table in seen:
                    continue
                seen.add(table)
            yield FiniteSemigroup(table)


def table_count(n: int) -> int:
    return n ** (n * n)


def ifs_pairs(D: int, consistent_only: bool = False) -> list[tuple[int, int]]:
    """Every valid ``(mu_num, nu_num)`` on the 1/D grid, lexicographic."""
    return [(m, v) for m in range(D + 1) for v in range(D - m + 1)
            if not consistent_only or m > 0 or v == D]


def enumerate_ifs(S: FiniteSemigroup, D: int, consistent_only: bool = False,
                  budget: int | None = None) -> Iterator[IFSubset]:
    pairs = ifs_pairs(D, consistent_only)
    if budget is not None and len(pairs) ** S.order > budget:
        raise BudgetExceeded(
            f"{len(pairs)}^{S.order} IFSs at D={D} exceeds budget {budget}")
    for combo in itertools.product(pairs, repeat=S.order):
        yield IFSubset(S, [m for m, _ in combo], [v for _, v in combo], D)


def sample_ifs(S: FiniteSemigroup, D: int, seed: int, count: int,
               consistent_only: bool = False) -> list[IFSubset]:
    if count < 1:
        raise ValueError("count must be at least 1")
    rng = SplitMix64(seed)
    pairs = ifs_pairs(D, consistent_only)
    out = []
    for _ in range(count):
        combo = [pairs[rng.below(len(pairs))] for _ in S.elements]
        out.append(IFSubset(S, [m for m, _ in combo], [v for _, v in combo], D))
    return out


# ---------------------------------------------------------------- text formats

def _content_lines(text: str) -> list[tuple[int, list[str]]]:
    out = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        s = line.strip()
        if s and not s.startswith("#"):
            out.append((lineno, s.split()))
    return out


def _ints(lineno: int, fields: list[str]) -> list[int]:
    try:
        return [int(f) for f in fields]
    except ValueError:
        raise ParseError(lineno, f"expected integers, got {' '.join(fields)!r}") from None


def parse_semigroup(text: str) -> FiniteSemigroup:
    lines = _content_lines(text)
    if not lines:
        raise ParseError(1, "empty semigroup file")
    lineno, head = lines[0]
    if len(head) != 1:
        raise ParseError(lineno, "first line must be the order n")
    (n,) = _ints(lineno, head)
    if n < 1:
        raise ParseError(lineno, f"order must be positive, got {n}")
    rows = lines[1:]
    if len(rows) != n:
        last = rows[-1][0] if rows else lineno
        raise ParseError(last, f"expected {n} table rows, found {len(rows)}")
    table = []
    for lineno, fields in rows:
        row = _ints(lineno, fields)
        if len(row) != n:
            raise ParseError(lineno, f"expected {n} entries, found {len(row)}")
        bad = [v for v in row if not 0 <= v < n]
        if bad:
            raise ParseError(lineno, f"entry {bad[0]} outside 0..{n - 1}")
        table.append(row)
    return FiniteSemigroup(table)


def serialize_semigroup(S: FiniteSemigroup) -> str:
    return "\n".join([str(S.order)] + [" ".join(map(str, row)) for row in S.table]) + "\n"


def parse_ifs(text: str, S: FiniteSemigroup) -> IFSubset:
    lines = _content_lines(text)
    if not lines:
        raise ParseError(1, "empty IFS file")
    lineno, head = lines[0]
    if len(head) != 2:
        raise ParseError(lineno, "first line must be 'D n'")
    D, n = _ints(lineno, head)
    if D < 1:
        raise ParseError(lineno, f"resolution must be positive, got {D}")
    if n != S.order:
        raise ParseError(lineno, f"IFS has {n} elements but the semigroup has order {S.order}")
    mu: list[int | None] = [None] * n
    nu: list[int | None] = [None] * n
    for lineno, fields in lines[1:]:
        if len(fields) != 3:
            raise ParseError(lineno, "expected 'x mu_num nu_num'")
        x, m, v = _ints(lineno, fields)
        if not 0 <= x < n:
            raise ParseError(lineno, f"element {x} outside 0..{n - 1}")
        if mu[x] is not None:
            raise ParseError(lineno, f"element {x} given twice")
        if not (0 <= m <= D and 0 <= v <= D) or m + v > D:
            raise ParseError(lineno, f"invalid degrees ({m}, {v}) at resolution {D}")
        mu[x], nu[x] = m, v
    missing = [x for x in range(n) if mu[x] is None]
    if missing:
        raise ParseError(lines[-1][0], f"no degrees given for element {missing[0]}")
    return IFSubset(S, mu, nu, D)


def serialize_ifs(A: IFSubset) -> str:
    lines = [f"{A.resolution} {A.carrier.order}"]
    lines += [f"{x} {m} {v}" for x, (m, v) in enumerate(zip(A.mu, A.nu))]
    return "\n".join(lines) + "\n"


def read_semigroup(path) -> FiniteSemigroup:
    return parse_semigroup(Path(path).read_text())


def read_ifs(path, S: FiniteSemigroup) -> IFSubset:
    return parse_ifs(Path(path).read_text(), S)


def read_manifest(path) -> list[FiniteSemigroup]:
    """Load every ``.sg`` file listed in a manifest, one path per line.

    Relative paths are resolved against the manifest's directory.
    """
    path = Path(path)
    out = []
    for lineno, fields in _content_lines(path.read_text()):
        target = Path(" ".join(fields))
        if not target.is_absolute():
            target = path.parent / target
        try:
            out.append(read_semigroup(target))
        except OSError as exc:
            raise ParseError(lineno, f"cannot read {target}: {exc}") from None
    return out
