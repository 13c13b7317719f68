import pytest

from ifsemigroup import harness as H
from ifsemigroup import ifs as F
from ifsemigroup import points as pts
from ifsemigroup.report import COUNTEREXAMPLE, SKIPPED, VerificationReport
from ifsemigroup.semigroup import FiniteSemigroup


class TestUnderlineCorrespondence:
    @pytest.mark.parametrize("kind", H.UNDERLINE_KINDS)
    def test_characteristic_confirmed(self, null2, kind):
        r = H.verify_underline_correspondence(null2, 2, F.characteristic(null2, 2), kind)
        assert r.outcome == "confirmed" and r.check_id == f"underline/{kind}"

    def test_empty_skipped(self, null2):
        r = H.verify_underline_correspondence(null2, 2, F.empty_ifs(null2, 2), "ideal")
        assert r.outcome == SKIPPED and r.instances_checked == 0

    def test_unrestricted_is_informational(self, trivial):
        # nonempty but with an empty underline set
        A = F.make_ifs(trivial, [(0, 0)], 2)
        r = H.verify_underline_correspondence(trivial, 2, A, "subsemigroup")
        assert r.check_id == "underline/subsemigroup@unrestricted"
        assert r.outcome == COUNTEREXAMPLE and r.informational and not r.failed

    def test_prime_counterexample(self, semilattice2):
        A = F.make_ifs(semilattice2, [(1, 0), (0, 2)], 2)
        r = H.verify_underline_correspondence(semilattice2, 2, A, "prime")
        assert r.failed
        assert r.witness["fuzzy"] is True and r.witness["crisp"] is False
        assert r.witness["factors"] == [[0, 2, 0], [1, 1, 0]]
        assert H.recheck_witness(r.witness)

    def test_same_label_confirms_that_case(self, semilattice2):
        A = F.make_ifs(semilattice2, [(1, 0), (0, 2)], 2)
        r = H.verify_prime_same_label(semilattice2, 2, A)
        assert r.outcome == "confirmed" and r.informational

    def test_same_label_fails_at_d3(self):
        S = FiniteSemigroup([[0, 0, 0], [0, 1, 0], [0, 0, 2]])
        A = F.make_ifs(S, [(2, 0), (1, 0), (2, 1)], 3)
        r = H.verify_prime_same_label(S, 3, A)
        assert r.outcome == COUNTEREXAMPLE and not r.failed
        assert H.recheck_witness(r.witness)

    def test_rejects_bad_inputs(self, null2):
        with pytest.raises(ValueError):
            H.verify_underline_correspondence(null2, 2, F.characteristic(null2, 2), "quasi")
        with pytest.raises(ValueError):
            H.verify_underline_correspondence(null2, 3, F.characteristic(null2, 2), "ideal")
        with pytest.raises(ValueError):
            H.verify_underline_correspondence(null2, 2, F.characteristic(null2, 2), "ideal",
                                              pts.materialize(null2, 3))


class TestOperations:
    def test_confirmed(self, null2):
        A = F.make_ifs(null2, [(1, 1), (2, 0)], 2)
        r = H.verify_underline_operations(null2, 2, A, A)
        assert r.outcome == "confirmed" and r.check_id == "underline-operations"

    def test_union_failure_witness(self, trivial):
        A = F.make_ifs(trivial, [(2, 1)], 3)
        B = F.make_ifs(trivial, [(1, 0)], 3)
        r = H.verify_underline_operations(trivial, 3, A, B)
        assert r.failed and r.witness["failed"] == ["union"]
        assert H.recheck_witness(r.witness)

    def test_no_strict_product_consistent_d2(self, small_semigroups):
        from ifsemigroup.data import enumerate_ifs
        for S in small_semigroups:
            if S.order > 2:
                continue
            family = list(enumerate_ifs(S, 2, consistent_only=True))
            assert H.strict_product_witness(S, 2, family) is None

    def test_strict_product_unrestricted(self, null2):
        from ifsemigroup.data import enumerate_ifs
        family = list(enumerate_ifs(null2, 2))
        A, B = H.strict_product_witness(null2, 2, family)
        P = pts.materialize(null2, 2)
        lhs = pts.pointset_product(pts.underline(A, P), pts.underline(B, P))
        assert lhs <= pts.underline(F.compose(A, B), P)
        assert lhs != pts.underline(F.compose(A, B), P)


class TestTransfers:
    @pytest.mark.parametrize("D", [1, 2])
    def test_small(self, small_semigroups, D):
        for S in small_semigroups:
            assert H.verify_regular_transfer(S, D).outcome == "confirmed"
            assert H.verify_intra_regular_transfer(S, D).outcome == "confirmed"

    def test_size_cap_skips(self, null2):
        r = H._transfer(null2, 40, None, "regular-transfer", lambda S: True)
        assert r.outcome == SKIPPED and "size cap" in r.notes


class TestCollapse:
    def test_skipped_when_not_regular(self, null2):
        A = F.characteristic(null2, 2)
        for mode in ("regular", "intra_regular"):
            r = H.verify_interior_ideal_collapse(null2, 2, A, mode)
            assert r.outcome == SKIPPED and mode in r.notes
        assert H.verify_semiprime_ideal_collapse(null2, 2, A).outcome == SKIPPED

    def test_confirmed_on_regular(self, left_zero):
        from ifsemigroup.data import enumerate_ifs
        for A in enumerate_ifs(left_zero, 2, consistent_only=True):
            for mode in ("regular", "intra_regular"):
                r = H.verify_interior_ideal_collapse(left_zero, 2, A, mode)
                assert r.outcome in ("confirmed", SKIPPED)
            assert H.verify_semiprime_ideal_collapse(left_zero, 2, A).outcome in (
                "confirmed", SKIPPED)

    def test_bad_mode(self, left_zero):
        with pytest.raises(ValueError):
            H.verify_interior_ideal_collapse(left_zero, 2, F.characteristic(left_zero, 2), "x")


class TestIdealProduct:
    def test_null_has_witness_pairs(self, null2):
        r = H.verify_ideal_product_characterization(null2, 2)
        assert r.outcome == "confirmed"
        assert {"meet_in_product", "fuzzy_meet_in_compose", "meet_is_product",
                "fuzzy_meet_is_compose", "ideals_semiprime"} <= set(r.witness["pairs"])
        assert "compose_below_meet" not in r.witness["pairs"]

    def test_z2_no_witness(self, z2):
        r = H.verify_ideal_product_characterization(z2, 2)
        assert r.outcome == "confirmed" and r.witness is None
        assert "regular=True" in r.notes

    def test_budget_skips(self, null2):
        r = H.verify_ideal_product_characterization(null2, 2, budget=20)
        assert r.outcome == SKIPPED


def test_embedding(small_semigroups):
    for S in small_semigroups:
        r = H.verify_embedding(S, 3)
        assert r.outcome == "confirmed" and r.instances_checked == 6


def test_recheck_rejects_unknown():
    with pytest.raises(ValueError):
        H.recheck_witness({"check": "nope", "table": [[0]]})


class TestRunSuite:
    def test_order_one_all_clean(self):
        reports = H.run_suite([1], 1)
        assert not any(r.failed for r in reports)
        ids = {r.check_id for r in reports}
        assert {"embedding", "crisp-ideal-lattice", "regular-transfer",
                "ideal-product-characterization", "underline/prime"} <= ids

    def test_sorted_unique_ids(self):
        reports = H.run_suite([1, 2], 1)
        ids = [r.check_id for r in reports]
        assert ids == sorted(set(ids))

    def test_sampled_deterministic(self):
        run = lambda seed: [r.to_json() for r in H.run_suite(
            [2], 2, "sampled", seed=seed, count=20, pair_count=30)]
        assert run(5) == run(5)
        assert all(VerificationReport.from_json(line) for line in run(5))

    def test_every_counterexample_replays(self):
        # collect unmerged reports so every witness is checked, not just the first
        from ifsemigroup.data import EnumerationConfig, SplitMix64, enumerate_semigroups
        rng = SplitMix64(0)
        seen = 0
        for S in enumerate_semigroups(EnumerationConfig(2, up_to_iso=True)):
            for r in H._check_semigroup(S, 2, "exhaustive_all", rng, 0, 0, 512, 10 ** 4):
                if r.outcome == COUNTEREXAMPLE:
                    assert H.recheck_witness(r.witness), r.check_id
                    seen += 1
        assert seen > 0

    def test_budget_skip(self):
        reports = H.run_suite([3], 2, "exhaustive_all", ifs_budget=10)
        r = next(r for r in reports if r.check_id == "underline/ideal")
        assert r.outcome == SKIPPED and "budget" in r.notes

    def test_manifest_extra(self, left_zero):
        reports = H.run_suite([1], 1, extra=[left_zero])
        emb = next(r for r in reports if r.check_id == "embedding")
        assert emb.instances_checked == 2

    def test_bad_policy(self):
        with pytest.raises(ValueError):
            H.run_suite([1], 1, "all")
