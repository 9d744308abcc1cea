from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from agfuzzy.catalog import catalog
from agfuzzy.fixtures import five_element, left_zero, six_element, trivial
from agfuzzy.fuzzy import characteristic, constant, truncate_k
from agfuzzy.groupoid import enumerate_crisp
from agfuzzy.ideals import check_classic, check_threshold_k
from agfuzzy.theorems import (
    COARSE_GRID,
    DEFAULT_GRID,
    REGISTRY,
    SPECIAL_SEARCHES,
    THEOREM_IDS,
    BudgetExceeded,
    CounterexampleReport,
    GradeGrid,
    HypothesisNotMet,
    Lab,
    UnknownTheorem,
    Violation,
    enumerate_fuzzy,
    find_variant,
    get_theorem,
    hypothesis_filter,
    sample_fuzzy,
    search_counterexample,
    side_conditions_met,
    verify_theorem,
)

SPEC_IDS = (
    "T2.1-level T3.1-inin S3-support S3-construct P4.2-mono P4.3-meet L4.2-onesided P4.4-idem-sub "
    "P4.5-sandwich-sub T4.3-sandwich-eq L4.4-prod-bi T4.4-i-idem-eq T4.4-ii-meet-eq TH5-subgroupoid "
    "TH-LR-k TH10-prod-ideal LEM-genbi-bi LEM-quasi-bi LEM-ideal-interior LEM-k-combinators LEM-char-k "
    "TH22 TH23 TH24 TH25 TH26 TH27 TH28 TH-final CRISP-th1 CRISP-th2 CRISP-th3"
).split()


class TestGrid:
    def test_default(self):
        assert DEFAULT_GRID.values == (F(0), F(1, 4), F(1, 2), F(3, 4), F(1))

    def test_parse(self):
        assert GradeGrid.parse("0,1/2,1") == COARSE_GRID
        assert GradeGrid.parse("0, 0.5, 1") == COARSE_GRID

    @pytest.mark.parametrize("text", ["0,1/2", "1/2,1", "0,1/2,1/2,1", "0,3/4,1/2,1"])
    def test_rejects(self, text):
        with pytest.raises(ValueError):
            GradeGrid.parse(text)


class TestPopulations:
    def test_order_one(self):
        assert len(list(enumerate_fuzzy(trivial(), DEFAULT_GRID))) == 5

    def test_counts(self):
        G2 = catalog(2)[1]
        assert len(list(enumerate_fuzzy(G2, DEFAULT_GRID))) == 25
        assert len(list(enumerate_fuzzy(six_element(), COARSE_GRID))) == 729

    def test_lexicographic(self):
        fs = [f.grades for f in enumerate_fuzzy(catalog(2)[1], COARSE_GRID)]
        assert fs == sorted(fs)

    def test_budget(self):
        with pytest.raises(BudgetExceeded):
            list(enumerate_fuzzy(six_element(), DEFAULT_GRID, budget=1000))

    def test_sample_deterministic(self):
        G = five_element()
        a = [f.grades for f in sample_fuzzy(G, DEFAULT_GRID, 7, 3)]
        b = [f.grades for f in sample_fuzzy(G, DEFAULT_GRID, 7, 3)]
        assert a == b and len(a) == 3
        assert all(g in DEFAULT_GRID.values for f in a for g in f)

    def test_seeds_differ(self):
        G = five_element()
        a = [f.grades for f in sample_fuzzy(G, DEFAULT_GRID, 1, 100)]
        b = [f.grades for f in sample_fuzzy(G, DEFAULT_GRID, 2, 100)]
        assert a != b

    def test_sample_count(self):
        with pytest.raises(ValueError):
            list(sample_fuzzy(five_element(), DEFAULT_GRID, 0, 0))

    def test_filter_examples(self):
        G = five_element()
        consts = [constant(G, g) for g in DEFAULT_GRID.values]
        assert list(hypothesis_filter(G, consts, "left-ideal", 0)) == consts
        chars = [truncate_k(characteristic(G, A), 0) for A in enumerate_crisp(G, "left-ideal")]
        assert list(hypothesis_filter(G, chars, "left-ideal", 0)) == chars
        c = characteristic(G, {G.index("c")})
        assert list(hypothesis_filter(G, [c], "subgroupoid", 0)) == []


class TestRegistry:
    def test_all_ids_present(self):
        assert set(SPEC_IDS) <= set(THEOREM_IDS)
        for tid in SPEC_IDS:
            th = get_theorem(tid)
            assert th.citation and th.variants
            assert any(v.pinned for v in th.variants)

    def test_truncation_ambiguity_carries_both(self):
        for tid in ("T4.3-sandwich-eq", "T4.4-i-idem-eq"):
            names = {v.name: v.pinned for v in get_theorem(tid).variants}
            assert names == {"truncated": True, "literal": False}

    def test_unknown(self):
        with pytest.raises(UnknownTheorem):
            get_theorem("TH99")


class TestVerify:
    @pytest.mark.parametrize("tid", SPEC_IDS)
    @pytest.mark.parametrize("k", [F(0), F(1, 5), F(1, 2)])
    def test_order_one_holds(self, tid, k):
        assert verify_theorem(trivial(), tid, DEFAULT_GRID, k).holds

    def test_hypothesis_not_met(self):
        with pytest.raises(HypothesisNotMet):
            verify_theorem(left_zero(), "TH22", COARSE_GRID, 0)

    def test_th22_on_six_element(self):
        rep = verify_theorem(six_element(), "TH22", COARSE_GRID, 0)
        assert rep.holds
        v = rep.variant("(ii)")
        assert v.checked == v.population[0] * v.population[1] and not v.truncated
        d = rep.as_dict()
        assert d["citation"] == get_theorem("TH22").citation and "finitized" in d["note"]

    def test_literal_idempotence_fails_at_constant_one(self):
        G = six_element()
        lab = Lab(G, 0)
        one = constant(G, 1)
        bad = find_variant("T4.4-i-idem-eq", "literal").check(lab, (one,))
        assert bad is not None and bad.lhs == F(1, 2) and bad.rhs == 1
        assert find_variant("T4.4-i-idem-eq", "truncated").check(lab, (one,)) is None

    def test_literal_variants_reported(self):
        rep = verify_theorem(five_element(), "T4.4-i-idem-eq", COARSE_GRID, 0)
        assert rep.holds
        assert rep.variant("truncated").holds and not rep.variant("literal").holds
        assert rep.variant("literal").counterexample.reproduces()

    def test_deterministic(self):
        a = verify_theorem(five_element(), "T4.3-sandwich-eq", DEFAULT_GRID, F(1, 5)).as_dict()
        b = verify_theorem(five_element(), "T4.3-sandwich-eq", DEFAULT_GRID, F(1, 5)).as_dict()
        assert a == b

    def test_cap_truncates(self):
        rep = verify_theorem(five_element(), "P4.3-meet", COARSE_GRID, 0, max_combinations=10)
        v = rep.variant("closure")
        assert v.truncated and v.checked == 10

    def test_sample_mode(self):
        rep = verify_theorem(six_element(), "TH28", DEFAULT_GRID, 0, mode="sample", seed=3, count=200)
        assert rep.holds and rep.mode.startswith("sample")

    @pytest.mark.parametrize("G", [five_element(), six_element()], ids=["S5", "S6"])
    @pytest.mark.parametrize("k", [F(0), F(1, 5), F(1, 2)])
    def test_forward_checks_on_fixtures(self, G, k):
        # default grid, sampled base population; the heavy pair/triple products are capped
        for tid in SPEC_IDS:
            if not side_conditions_met(G, tid):
                continue
            rep = verify_theorem(G, tid, DEFAULT_GRID, k, mode="sample", seed=11, count=120,
                                 max_combinations=3000)
            assert rep.holds, (tid, [v.as_dict() for v in rep.variants if v.pinned and not v.holds])

    @pytest.mark.parametrize("tid", ["P4.4-idem-sub", "P4.5-sandwich-sub", "TH23", "TH26", "TH27", "TH-final",
                                     "LEM-k-combinators", "LEM-char-k"])
    def test_inequalities_on_catalog(self, tid):
        for G in catalog(3):
            if side_conditions_met(G, tid):
                for k in (F(0), F(1, 2)):
                    assert verify_theorem(G, tid, COARSE_GRID, k).holds, (G, tid, k)


class TestCounterexamples:
    def test_report_replays(self):
        G = catalog(3)[-1]
        v = Violation(0, F(0), F(1), "==")
        cx = CounterexampleReport("LEM-k-combinators", "meet", G, (constant(G, 0), constant(G, 0)), F(0), v)
        assert cx.replay() is None and not cx.reproduces()

    def test_gap_witness(self):
        res = search_counterexample("classic-vs-k-gap", catalog(2), COARSE_GRID, 0)
        cx = res.counterexample
        assert cx is not None and cx.reproduces()
        (f,) = cx.operands
        assert check_threshold_k(f, "left-ideal", 0).holds and not check_classic(f, "left-ideal").holds

    def test_t31_converse(self):
        res = search_counterexample("T3.1-converse", catalog(2), COARSE_GRID, 0)
        assert res.counterexample is not None and res.counterexample.reproduces()

    def test_converse_slice_empty_on_small_catalog(self):
        res = search_counterexample("TH22", catalog(3), COARSE_GRID, 0)
        assert res.exhausted and res.scanned == 0 and res.note == "slice empty"

    def test_non_regular_slice_for_t43(self):
        res = search_counterexample("T4.3-sandwich-eq", catalog(3), COARSE_GRID, 0)
        cx = res.counterexample
        assert cx is not None and cx.reproduces()
        d = cx.as_dict()
        assert d["theorem"] == "T4.3-sandwich-eq" and d["element"] is not None

    @settings(max_examples=25)
    @given(st.sampled_from(catalog(3)), st.sampled_from(["P4.3-meet", "LEM-char-k", "TH5-subgroupoid"]))
    def test_every_failure_replays(self, G, tid):
        rep = verify_theorem(G, tid, COARSE_GRID, F(1, 5))
        for cx in rep.counterexamples():
            assert cx.reproduces()

    def test_specials_registered(self):
        assert set(SPECIAL_SEARCHES) <= set(REGISTRY)
