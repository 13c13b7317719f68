from fractions import Fraction

import pytest
from hypothesis import given

from ifsemigroup import ifs as F
from ifsemigroup.ifs import DegreePair, IFSubset
from tests.strategies import ifs_family


def oracle_compose(A, B):
    """Sup-min / inf-max over explicitly listed factorizations, in Fractions."""
    S, D = A.carrier, A.resolution
    out = []
    for x in S.elements:
        facts = [(u, v) for u in S.elements for v in S.elements if S.mul(u, v) == x]
        if not facts:
            out.append((Fraction(0), Fraction(1)))
            continue
        mu = max(min(Fraction(A.mu[u], D), Fraction(B.mu[v], D)) for u, v in facts)
        nu = min(max(Fraction(A.nu[u], D), Fraction(B.nu[v], D)) for u, v in facts)
        out.append((mu, nu))
    return out


def as_fractions(A):
    return [(p.mu_value, p.nu_value) for p in A.pairs]


class TestDegreePair:
    def test_valid(self):
        p = DegreePair(1, 1, 2)
        assert (p.mu_value, p.nu_value) == (Fraction(1, 2), Fraction(1, 2))

    def test_sum_exceeds_one(self):
        with pytest.raises(ValueError, match="exceeds 1"):
            DegreePair(1, 1, 1)

    def test_from_fractions(self):
        assert DegreePair.from_fractions(Fraction(1, 2), Fraction(1, 4), 4) == DegreePair(2, 1, 4)
        with pytest.raises(ValueError, match="grid"):
            DegreePair.from_fractions(Fraction(1, 3), 0, 4)


class TestMakeIfs:
    def test_characteristic(self, null2):
        A = F.make_ifs(null2, [(2, 0), (2, 0)], 2)
        assert A == F.characteristic(null2, 2)

    def test_rejects_one_plus_one(self, null2):
        with pytest.raises(ValueError, match="exceeds 1"):
            F.make_ifs(null2, [(1, 1), (0, 1)], 1)

    def test_half_half(self, null2):
        A = F.make_ifs(null2, [DegreePair(1, 1, 2), DegreePair(2, 0, 2)], 2)
        assert as_fractions(A) == [(Fraction(1, 2), Fraction(1, 2)), (1, 0)]

    def test_length_mismatch(self, null2):
        with pytest.raises(ValueError, match="expected 2"):
            F.make_ifs(null2, [(1, 0)], 1)

    def test_mixed_denominators(self, null2):
        with pytest.raises(ValueError, match="resolution"):
            F.make_ifs(null2, [DegreePair(1, 0, 2), DegreePair(1, 0, 3)], 2)


class TestEmptiness:
    def test_examples(self, null2):
        assert not F.is_nonempty(F.empty_ifs(null2, 2))
        assert F.is_nonempty(F.make_ifs(null2, [(0, 1), (0, 2)], 2))
        assert F.is_nonempty(F.characteristic(null2, 2))

    def test_consistency(self, null2):
        assert F.is_consistent(F.empty_ifs(null2, 2))
        assert not F.is_consistent(F.make_ifs(null2, [(0, 1), (0, 2)], 2))


class TestLatticeOps:
    def test_direct(self, trivial):
        A = F.make_ifs(trivial, [(1, 1)], 2)
        B = F.make_ifs(trivial, [(2, 0)], 2)
        assert F.union(A, B).pair(0) == DegreePair(2, 0, 2)
        assert F.intersection(A, B).pair(0) == DegreePair(1, 1, 2)

    @given(ifs_family(1))
    def test_identities(self, case):
        S, D, A = case
        assert F.union(A, F.empty_ifs(S, D)) == A
        assert F.intersection(A, A) == A

    def test_mismatch(self, null2, left_zero):
        with pytest.raises(ValueError):
            F.union(F.empty_ifs(null2, 2), F.empty_ifs(left_zero, 2))
        with pytest.raises(ValueError, match="resolution"):
            F.intersection(F.empty_ifs(null2, 2), F.empty_ifs(null2, 3))


class TestCompose:
    def test_null_example(self, null2):
        A = F.make_ifs(null2, [(0, 1), (1, 0)], 1)
        C = F.compose(A, A)
        assert C.pair(0) == DegreePair(1, 0, 1)
        assert C.pair(1) == DegreePair(0, 1, 1)

    @given(ifs_family(1))
    def test_empty_absorbs(self, case):
        S, D, B = case
        E = F.empty_ifs(S, D)
        assert F.compose(E, B) == E
        assert F.compose(B, E) == E

    def test_trivial_semigroup(self, trivial):
        A = F.make_ifs(trivial, [(3, 1)], 4)
        B = F.make_ifs(trivial, [(2, 2)], 4)
        assert F.compose(A, B).pair(0) == DegreePair(2, 2, 4)

    @given(ifs_family(2))
    def test_matches_oracle(self, case):
        S, D, A, B = case
        assert as_fractions(F.compose(A, B)) == oracle_compose(A, B)

    @given(ifs_family(3))
    def test_associative(self, case):
        S, D, A, B, C = case
        assert F.compose(F.compose(A, B), C) == F.compose(A, F.compose(B, C))

    @given(ifs_family(3))
    def test_monotone(self, case):
        S, D, A, B, C = case
        lo, hi = F.intersection(A, B), F.union(A, B)
        assert F.ifs_leq(lo, hi)
        assert F.ifs_leq(F.compose(lo, C), F.compose(hi, C))
        assert F.ifs_leq(F.compose(C, lo), F.compose(C, hi))


class TestLeq:
    def test_examples(self, trivial):
        A = F.make_ifs(trivial, [(2, 0)], 2)
        B = F.make_ifs(trivial, [(1, 1)], 2)
        assert F.ifs_leq(F.empty_ifs(trivial, 2), A)
        assert F.ifs_leq(A, A)
        assert not F.ifs_leq(A, B)


class TestClassifyIfs:
    @pytest.mark.parametrize("kind", F.IFS_KINDS)
    def test_characteristic(self, small_semigroups, kind):
        for S in small_semigroups:
            assert F.classify_ifs(F.characteristic(S, 2), kind)

    @pytest.mark.parametrize("kind", F.IFS_KINDS)
    def test_constant_half(self, small_semigroups, kind):
        for S in small_semigroups:
            assert F.classify_ifs(F.constant_ifs(S, 1, 1, 2), kind)

    @pytest.mark.parametrize("kind", F.IFS_KINDS)
    def test_empty(self, null2, kind):
        assert not F.classify_ifs(F.empty_ifs(null2, 2), kind)

    def test_null_left_ideal(self, null2):
        A = F.make_ifs(null2, [(2, 0), (0, 2)], 2)
        assert F.classify_ifs(A, "left_ideal")
        assert F.classify_ifs(A, "ideal")

    def test_unknown_kind(self, null2):
        with pytest.raises(ValueError):
            F.classify_ifs(F.characteristic(null2, 1), "fuzzy")

    @given(ifs_family(1))
    def test_two_ideal_definitions_agree(self, case):
        S, D, A = case
        assert F.classify_ifs(A, "ideal") == F.classify_ifs(A, "ideal_alt")

    @given(ifs_family(1))
    def test_ideal_is_interior_ideal(self, case):
        S, D, A = case
        if F.classify_ifs(A, "ideal"):
            assert F.classify_ifs(A, "interior_ideal")

    @given(ifs_family(2))
    def test_right_times_left_below_meet(self, case):
        S, D, A, B = case
        if F.classify_ifs(A, "right_ideal") and F.classify_ifs(B, "left_ideal"):
            assert F.ifs_leq(F.compose(A, B), F.intersection(A, B))

    def test_characteristic_matches_crisp(self, small_semigroups):
        from ifsemigroup import semigroup as sg
        for S in small_semigroups:
            for I in sg.all_nonempty_subsets(S):
                A = F.characteristic(S, 1, I)
                for kind in sg.CRISP_KINDS:
                    assert F.classify_ifs(A, kind) == sg.classify_crisp(S, I, kind)
                if sg.classify_crisp(S, I, "ideal"):
                    assert F.classify_ifs(A, "semiprime") == sg.is_semiprime_elementwise(S, I)
                    assert F.classify_ifs(A, "prime") == sg.is_prime_elementwise(S, I)


def test_ifsubset_is_hashable(null2):
    A = IFSubset(null2, [1, 0], [0, 1], 1)
    assert len({A, F.make_ifs(null2, [(1, 0), (0, 1)], 1)}) == 1
