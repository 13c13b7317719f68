"""Brute-force verification of the fuzzy-point correspondence theorems.

Every check compares a fuzzy-side predicate on ``S`` with a crisp-side
predicate on the materialized point semigroup and returns a
:class:`VerificationReport`.  Counterexample witnesses are plain JSON data
that :func:`recheck_witness` can replay in isolation.

IFSs outside the consistent class (some ``mu(x) = 0`` with ``nu(x) < 1``)
are checked under a separate ``@unrestricted`` check id and reported as
informational only.
"""

from __future__ import annotations

import itertools
from typing import Any, Iterable, Sequence

from . import ifs as F
from . import points as pts
from . import semigroup as sg
from .data import (BudgetExceeded, EnumerationConfig, SplitMix64, enumerate_ifs,
                   enumerate_semigroups, sample_ifs)
from .ifs import IFSubset
from .points import PointSemigroup, PointSet, SizeCapExceeded
from .report import (CONFIRMED, COUNTEREXAMPLE, INFORMATIONAL, SKIPPED,
                     VerificationReport, merge)
from .semigroup import FiniteSemigroup

UNDERLINE_KINDS = (
    "subsemigroup",
    "bi_ideal",
    "interior_ideal",
    "left_ideal",
    "right_ideal",
    "ideal",
    "semiprime",
    "prime",
)
POLICIES = ("exhaustive_consistent", "exhaustive_all", "sampled")

UNRESTRICTED_NOTE = f"{INFORMATIONAL}: IFS outside the consistent class"
SAME_LABEL_NOTE = (f"{INFORMATIONAL}: crisp prime restricted to equally-labelled factors"
                   " x_(a,b), y_(a,b)")

DEFAULT_IFS_BUDGET = 50_000
DEFAULT_PAIR_BUDGET = 250_000


def _table(S: FiniteSemigroup) -> list[list[int]]:
    return [list(r) for r in S.table]


def _ifs(A: IFSubset) -> dict[str, Any]:
    return {"resolution": A.resolution, "pairs": A.as_numerators()}


def _points(ps: Iterable[pts.FuzzyPoint]) -> list[list[int]]:
    return [[p.element, p.pair.mu, p.pair.nu] for p in ps]


def _check_resolution(A: IFSubset, D: int) -> None:
    if A.resolution != D:
        raise ValueError(f"IFS has resolution {A.resolution}, expected {D}")


def _host(S: FiniteSemigroup, D: int, P: PointSemigroup | None) -> PointSemigroup:
    if P is None:
        return pts.materialize(S, D)
    if P.base != S or P.resolution != D:
        raise ValueError("point semigroup does not match (S, D)")
    return P


def _tagged(check_id: str, A: IFSubset) -> tuple[str, str]:
    if F.is_consistent(A):
        return check_id, ""
    return check_id + "@unrestricted", UNRESTRICTED_NOTE


def crisp_image(U: PointSet, kind: str) -> bool:
    """The crisp predicate on a point set that matches fuzzy ``kind``."""
    if kind == "semiprime":
        return U.is_semiprime()
    if kind == "prime":
        return U.is_prime()
    return U.classify(kind)


# --------------------------------------------------------------- single checks

def verify_underline_correspondence(S: FiniteSemigroup, D: int, A: IFSubset, kind: str,
                                    P: PointSemigroup | None = None) -> VerificationReport:
    if kind not in UNDERLINE_KINDS:
        raise ValueError(f"unknown kind {kind!r}")
    _check_resolution(A, D)
    check_id, notes = _tagged(f"underline/{kind}", A)
    if not F.is_nonempty(A):
        return VerificationReport(check_id, 0, SKIPPED, None, notes or "empty IFS")
    P = _host(S, D, P)
    U = pts.underline(A, P)
    fuzzy, crisp = F.classify_ifs(A, kind), crisp_image(U, kind)
    if fuzzy == crisp:
        return VerificationReport(check_id, 1, CONFIRMED, None, notes)
    witness = {"check": "underline", "kind": kind, "table": _table(S), "ifs": _ifs(A),
               "fuzzy": fuzzy, "crisp": crisp, "underline": _points(U.points)}
    if kind == "prime" and U.classify("ideal"):
        bad = sg.prime_elementwise_violation(P.semigroup, U.members)
        if bad is not None:
            witness["factors"] = _points(P.points[i] for i in bad)
    return VerificationReport(check_id, 1, COUNTEREXAMPLE, witness, notes)


def verify_prime_same_label(S: FiniteSemigroup, D: int, A: IFSubset,
                            P: PointSemigroup | None = None) -> VerificationReport:
    """Prime correspondence with the crisp side read over equally-labelled factors."""
    _check_resolution(A, D)
    check_id = "underline/prime-same-label"
    if not F.is_consistent(A):
        check_id += "@unrestricted"
    if not F.is_nonempty(A):
        return VerificationReport(check_id, 0, SKIPPED, None, SAME_LABEL_NOTE)
    U = pts.underline(A, _host(S, D, P))
    fuzzy = F.classify_ifs(A, "prime")
    crisp = U.classify("ideal") and pts.same_label_prime_violation(U) is None
    if fuzzy == crisp:
        return VerificationReport(check_id, 1, CONFIRMED, None, SAME_LABEL_NOTE)
    witness = {"check": "prime-same-label", "table": _table(S), "ifs": _ifs(A),
               "fuzzy": fuzzy, "crisp": crisp}
    return VerificationReport(check_id, 1, COUNTEREXAMPLE, witness, SAME_LABEL_NOTE)


def verify_underline_operations(S: FiniteSemigroup, D: int, A: IFSubset, B: IFSubset,
                    P: PointSemigroup | None = None) -> VerificationReport:
    """Underline of a union/intersection/product against the point-set operation.

    Union and intersection must match exactly; the product only needs
    ``underline(A) o underline(B) <= underline(A o B)``.  Strict inclusion
    is noted but is not a failure.
    """
    _check_resolution(A, D)
    _check_resolution(B, D)
    check_id = "underline-operations"
    notes = ""
    if not (F.is_consistent(A) and F.is_consistent(B)):
        check_id, notes = check_id + "@unrestricted", UNRESTRICTED_NOTE
    P = _host(S, D, P)
    UA, UB = pts.underline(A, P), pts.underline(B, P)
    failures = []
    if pts.underline(F.union(A, B), P) != pts.pointset_union(UA, UB):
        failures.append("union")
    if pts.underline(F.intersection(A, B), P) != pts.pointset_intersection(UA, UB):
        failures.append("intersection")
    prod, image = pts.pointset_product(UA, UB), pts.underline(F.compose(A, B), P)
    if not prod <= image:
        failures.append("product")
    elif prod != image:
        notes = f"{notes}; product inclusion strict" if notes else "product inclusion strict"
    if not failures:
        return VerificationReport(check_id, 1, CONFIRMED, None, notes)
    witness = {"check": "underline-operations", "table": _table(S), "ifs": _ifs(A),
               "ifs_b": _ifs(B), "failed": failures}
    return VerificationReport(check_id, 1, COUNTEREXAMPLE, witness, notes)


def strict_product_witness(S: FiniteSemigroup, D: int, family: Sequence[IFSubset],
                           P: PointSemigroup | None = None) -> tuple[IFSubset, IFSubset] | None:
    """First (A, B) in ``family`` with ``underline(A) o underline(B) != underline(A o B)``."""
    P = _host(S, D, P)
    under = [pts.underline(A, P) for A in family]
    for (A, UA), (B, UB) in itertools.product(zip(family, under), repeat=2):
        if pts.pointset_product(UA, UB) != pts.underline(F.compose(A, B), P):
            return A, B
    return None


def _transfer(S, D, P, check_id, predicate) -> VerificationReport:
    try:
        P = _host(S, D, P)
    except SizeCapExceeded as exc:
        return VerificationReport(check_id, 0, SKIPPED, None, f"size cap: {exc}")
    base, lifted = predicate(S), predicate(P.semigroup)
    if base == lifted:
        return VerificationReport(check_id, 1, CONFIRMED, None, "")
    witness = {"check": check_id, "table": _table(S), "resolution": D,
               "base": base, "points": lifted}
    return VerificationReport(check_id, 1, COUNTEREXAMPLE, witness, "")


def verify_regular_transfer(S: FiniteSemigroup, D: int,
                            P: PointSemigroup | None = None) -> VerificationReport:
    return _transfer(S, D, P, "regular-transfer", sg.is_regular)


def verify_intra_regular_transfer(S: FiniteSemigroup, D: int,
                                  P: PointSemigroup | None = None) -> VerificationReport:
    return _transfer(S, D, P, "intra-regular-transfer", sg.is_intra_regular)


_MODE_TEST = {"regular": sg.is_regular, "intra_regular": sg.is_intra_regular}


def verify_interior_ideal_collapse(S: FiniteSemigroup, D: int, A: IFSubset, mode: str,
                                   P: PointSemigroup | None = None) -> VerificationReport:
    """On a (intra-)regular S: A is an IF ideal iff underline(A) is an interior ideal."""
    if mode not in _MODE_TEST:
        raise ValueError(f"mode must be one of {sorted(_MODE_TEST)}")
    _check_resolution(A, D)
    check_id, notes = _tagged(f"interior-collapse/{mode}", A)
    if not _MODE_TEST[mode](S):
        return VerificationReport(check_id, 0, SKIPPED, None, notes or f"semigroup not {mode}")
    if not F.is_nonempty(A):
        return VerificationReport(check_id, 0, SKIPPED, None, notes or "empty IFS")
    U = pts.underline(A, _host(S, D, P))
    fuzzy, crisp = F.classify_ifs(A, "ideal"), U.classify("interior_ideal")
    if fuzzy == crisp:
        return VerificationReport(check_id, 1, CONFIRMED, None, notes)
    witness = {"check": "interior-collapse", "mode": mode, "table": _table(S), "ifs": _ifs(A),
               "fuzzy": fuzzy, "crisp": crisp}
    return VerificationReport(check_id, 1, COUNTEREXAMPLE, witness, notes)


def verify_semiprime_ideal_collapse(S: FiniteSemigroup, D: int, A: IFSubset,
                                    P: PointSemigroup | None = None) -> VerificationReport:
    """On an intra-regular S: A is an IF ideal iff underline(A) is a semiprime ideal."""
    _check_resolution(A, D)
    check_id, notes = _tagged("semiprime-collapse/intra_regular", A)
    if not sg.is_intra_regular(S):
        return VerificationReport(check_id, 0, SKIPPED, None, notes or "semigroup not intra_regular")
    if not F.is_nonempty(A):
        return VerificationReport(check_id, 0, SKIPPED, None, notes or "empty IFS")
    U = pts.underline(A, _host(S, D, P))
    fuzzy, crisp = F.classify_ifs(A, "ideal"), U.is_semiprime()
    if fuzzy == crisp:
        return VerificationReport(check_id, 1, CONFIRMED, None, notes)
    witness = {"check": "semiprime-collapse", "table": _table(S), "ifs": _ifs(A),
               "fuzzy": fuzzy, "crisp": crisp}
    return VerificationReport(check_id, 1, COUNTEREXAMPLE, witness, notes)


def verify_ideal_product_characterization(
        S: FiniteSemigroup, D: int, P: PointSemigroup | None = None,
        budget: int = DEFAULT_PAIR_BUDGET) -> VerificationReport:
    """Characterize (intra-)regularity by IF left/right ideal pairs.

    Over every consistent IF left ideal ``A`` and IF right ideal ``B`` on the
    grid, computes

    * ``meet_in_product``: ``underline(A) & underline(B) <= underline(A) o underline(B)``
    * ``fuzzy_meet_in_compose``: ``A & B <= A o B``
    * ``meet_is_product``: ``underline(B) & underline(A) == underline(B) o underline(A)``
    * ``fuzzy_meet_is_compose``: ``B & A == B o A``
    * ``ideals_semiprime``: every IF ideal is IF semiprime

    and confirms the first, second and fifth equal intra-regularity and the
    third and fourth equal regularity.  ``B o A <= B & A`` must also hold for
    every pair.  The first failing pair of each condition goes in the witness.
    """
    check_id = "ideal-product-characterization"
    family = list(enumerate_ifs(S, D, consistent_only=True, budget=budget))
    family = [A for A in family if F.is_nonempty(A)]
    lefts = [A for A in family if F.classify_ifs(A, "left_ideal")]
    rights = [B for B in family if F.classify_ifs(B, "right_ideal")]
    if len(lefts) * len(rights) > budget:
        return VerificationReport(check_id, 0, SKIPPED, None,
                                  f"budget exceeded: {len(lefts) * len(rights)} pairs")
    P = _host(S, D, P)
    UL = [pts.underline(A, P) for A in lefts]
    UR = [pts.underline(B, P) for B in rights]

    first: dict[str, tuple[IFSubset, IFSubset]] = {}

    def fail(name, A, B):
        first.setdefault(name, (A, B))

    for (A, UA), (B, UB) in itertools.product(zip(lefts, UL), zip(rights, UR)):
        meet = pts.pointset_intersection(UA, UB)
        if not meet <= pts.pointset_product(UA, UB):
            fail("meet_in_product", A, B)
        if not F.ifs_leq(F.intersection(A, B), F.compose(A, B)):
            fail("fuzzy_meet_in_compose", A, B)
        if meet != pts.pointset_product(UB, UA):
            fail("meet_is_product", A, B)
        BA, meet_f = F.compose(B, A), F.intersection(B, A)
        if BA != meet_f:
            fail("fuzzy_meet_is_compose", A, B)
        if not F.ifs_leq(BA, meet_f):
            fail("compose_below_meet", A, B)
    for A in family:
        if F.classify_ifs(A, "ideal") and not F.classify_ifs(A, "semiprime"):
            fail("ideals_semiprime", A, A)
            break

    intra, regular = sg.is_intra_regular(S), sg.is_regular(S)
    expected = {
        "meet_in_product": intra,
        "fuzzy_meet_in_compose": intra,
        "meet_is_product": regular,
        "fuzzy_meet_is_compose": regular,
        "ideals_semiprime": intra,
        "compose_below_meet": True,
    }
    observed = {name: name not in first for name in expected}
    disagree = sorted(n for n in expected if expected[n] != observed[n])
    notes = f"intra_regular={intra} regular={regular} " + " ".join(
        f"{n}={observed[n]}" for n in expected)
    witness = None
    if first or disagree:
        witness = {"check": "ideal-product", "table": _table(S), "resolution": D,
                   "disagree": disagree,
                   "pairs": {n: [A.as_numerators(), B.as_numerators()]
                             for n, (A, B) in sorted(first.items())}}
    return VerificationReport(check_id, len(lefts) * len(rights),
                              COUNTEREXAMPLE if disagree else CONFIRMED, witness, notes)


def verify_embedding(S: FiniteSemigroup, D: int) -> VerificationReport:
    for pair in pts.grid_pairs(D):
        bad = pts.embedding_failure(S, pts.embed(S, D, pair))
        if bad is not None:
            witness = {"check": "embedding", "table": _table(S),
                       "label": [pair.mu, pair.nu, D], "failure": list(bad)}
            return VerificationReport("embedding", 1, COUNTEREXAMPLE, witness, "")
    return VerificationReport("embedding", len(pts.grid_pairs(D)), CONFIRMED, None, "")


# --------------------------------------------------------------- witness replay

def recheck_witness(witness: dict[str, Any]) -> bool:
    """Replay a counterexample witness; True if the disagreement reproduces."""
    S = FiniteSemigroup(witness["table"])

    def load(key="ifs"):
        spec = witness[key]
        return F.make_ifs(S, [tuple(p) for p in spec["pairs"]], spec["resolution"])

    check = witness["check"]
    if check == "underline":
        A = load()
        U = pts.underline(A, pts.materialize(S, A.resolution))
        return F.classify_ifs(A, witness["kind"]) != crisp_image(U, witness["kind"])
    if check == "prime-same-label":
        A = load()
        U = pts.underline(A, pts.materialize(S, A.resolution))
        crisp = U.classify("ideal") and pts.same_label_prime_violation(U) is None
        return F.classify_ifs(A, "prime") != crisp
    if check == "interior-collapse":
        A = load()
        U = pts.underline(A, pts.materialize(S, A.resolution))
        return (_MODE_TEST[witness["mode"]](S)
                and F.classify_ifs(A, "ideal") != U.classify("interior_ideal"))
    if check == "semiprime-collapse":
        A = load()
        U = pts.underline(A, pts.materialize(S, A.resolution))
        return sg.is_intra_regular(S) and F.classify_ifs(A, "ideal") != U.is_semiprime()
    if check == "underline-operations":
        return verify_underline_operations(S, witness["ifs"]["resolution"], load(), load("ifs_b")).outcome \
            == COUNTEREXAMPLE
    if check in ("regular-transfer", "intra-regular-transfer"):
        pred = sg.is_regular if check == "regular-transfer" else sg.is_intra_regular
        return pred(S) != pred(pts.materialize(S, witness["resolution"]).semigroup)
    if check == "ideal-product":
        return verify_ideal_product_characterization(S, witness["resolution"]).outcome \
            == COUNTEREXAMPLE
    if check == "embedding":
        mu, nu, D = witness["label"]
        return pts.embedding_failure(S, pts.embed(S, D, F.DegreePair(mu, nu, D))) is not None
    raise ValueError(f"unknown witness kind {check!r}")


# --------------------------------------------------------------- suite driver

def _ifs_family(S: FiniteSemigroup, D: int, policy: str, rng: SplitMix64, count: int,
                budget: int) -> list[IFSubset]:
    if policy == "exhaustive_consistent":
        return list(enumerate_ifs(S, D, consistent_only=True, budget=budget))
    if policy == "exhaustive_all":
        return list(enumerate_ifs(S, D, budget=budget))
    return sample_ifs(S, D, rng.next_u64(), count)


def _pairs(family: list[IFSubset], S: FiniteSemigroup, rng: SplitMix64, exhaustive: bool,
           pair_count: int) -> list[tuple[IFSubset, IFSubset]]:
    if exhaustive:
        return list(itertools.product(family, repeat=2))
    k = len(family)
    return [(family[rng.below(k)], family[rng.below(k)]) for _ in range(pair_count)]


def run_suite(orders: Iterable[int], D: int, ifs_policy: str = "exhaustive_consistent",
              seed: int = 0, count: int = 200, pair_count: int = 500,
              max_points: int = pts.DEFAULT_MAX_POINTS, ifs_budget: int = DEFAULT_IFS_BUDGET,
              extra: Sequence[FiniteSemigroup] = ()) -> list[VerificationReport]:
    """Run every check over the up-to-iso semigroups of the given orders.

    ``extra`` semigroups (e.g. loaded from a manifest) are checked too.  The
    result has one aggregated report per check id, sorted by id, and is a
    deterministic function of the arguments.
    """
    if ifs_policy not in POLICIES:
        raise ValueError(f"policy must be one of {POLICIES}")
    orders = sorted(set(orders))
    semigroups: list[FiniteSemigroup] = []
    for n in orders:
        semigroups += enumerate_semigroups(EnumerationConfig(n, up_to_iso=True, min_order=n,
                                                             budget=10 ** 6))
    semigroups += list(extra)
    rng = SplitMix64(seed)
    reports: list[VerificationReport] = []
    for S in semigroups:
        reports += _check_semigroup(S, D, ifs_policy, rng, count, pair_count, max_points,
                                    ifs_budget)
    return merge(reports)


def _check_semigroup(S, D, policy, rng, count, pair_count, max_points, ifs_budget):
    out: list[VerificationReport] = []
    out.append(verify_embedding(S, D))
    if S.order <= sg.DEFAULT_SUBSET_CAP:
        out.append(sg.check_ideal_lattice(S))
    else:
        out.append(VerificationReport("crisp-ideal-lattice", 0, SKIPPED, None,
                                      "order above subset cap"))
    try:
        P = pts.materialize(S, D, max_points)
    except SizeCapExceeded as exc:
        note = f"size cap: {exc}"
        return out + [VerificationReport(c, 0, SKIPPED, None, note) for c in (
            "regular-transfer", "intra-regular-transfer", "underline-operations",
            "ideal-product-characterization", *(f"underline/{k}" for k in UNDERLINE_KINDS))]
    out.append(verify_regular_transfer(S, D, P))
    out.append(verify_intra_regular_transfer(S, D, P))
    try:
        family = _ifs_family(S, D, policy, rng, count, ifs_budget)
    except BudgetExceeded as exc:
        return out + [VerificationReport(f"underline/{k}", 0, SKIPPED, None,
                                         f"budget exceeded: {exc}") for k in UNDERLINE_KINDS]
    for A in family:
        for kind in UNDERLINE_KINDS:
            out.append(verify_underline_correspondence(S, D, A, kind, P))
        out.append(verify_prime_same_label(S, D, A, P))
        for mode in ("regular", "intra_regular"):
            out.append(verify_interior_ideal_collapse(S, D, A, mode, P))
        out.append(verify_semiprime_ideal_collapse(S, D, A, P))
    exhaustive = policy != "sampled" and S.order <= 2
    for A, B in _pairs(family, S, rng, exhaustive, pair_count):
        out.append(verify_underline_operations(S, D, A, B, P))
    try:
        out.append(verify_ideal_product_characterization(S, D, P))
    except BudgetExceeded as exc:
        out.append(VerificationReport("ideal-product-characterization", 0, SKIPPED, None,
                                      f"budget exceeded: {exc}"))
    return out



verify_prop_3_1 = verify_underline_operations
