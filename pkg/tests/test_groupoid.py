import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from agfuzzy.catalog import catalog
from agfuzzy.fixtures import SIX_ELEMENT_WEAK_WITNESSES, cyclic2, five_element, left_zero, six_element, trivial
from agfuzzy.groupoid import (
    IDEAL_KINDS,
    LAWS,
    GroupoidError,
    all_subsets,
    build_groupoid,
    check_law,
    crisp_profile,
    enumerate_crisp,
    find_left_identity,
    from_flat,
    is_intra_regular,
    is_regular,
    is_weakly_regular,
    law_sides,
    left_identities,
    left_identity_search,
    regularity_profile,
    subset_product,
)

import oracles


def tables(max_n=4):
    return st.integers(1, max_n).flatmap(
        lambda n: st.lists(st.integers(0, n - 1), min_size=n * n, max_size=n * n).map(from_flat))


class TestConstruction:
    def test_trivial(self):
        G = build_groupoid(1, [[0]])
        assert G.order == 1 and G(0, 0) == 0

    def test_out_of_range(self):
        with pytest.raises(GroupoidError, match=r"out-of-range entry at \(0,1\)"):
            build_groupoid(2, [[0, 5], [1, 0]])

    def test_bad_shape(self):
        with pytest.raises(GroupoidError):
            build_groupoid(2, [[0, 1], [1]])
        with pytest.raises(GroupoidError):
            build_groupoid(2, [[0, 1]])

    def test_duplicate_names(self):
        with pytest.raises(GroupoidError, match="duplicate"):
            build_groupoid(2, [[0, 1], [1, 0]], names=["x", "x"])

    def test_index_and_labels(self):
        G = five_element()
        assert G.index("d") == 3 and G.label(3) == "d"
        assert G.labels({1, 0}) == ["a", "b"]
        with pytest.raises(GroupoidError):
            G.index("z")


class TestLaws:
    def test_five_element_laws(self):
        G = five_element()
        for law in ("left-invertive", "medial", "paramedial", "left-identity-law4"):
            assert check_law(G, law).holds, law

    def test_six_element_left_invertive(self):
        assert check_law(six_element(), "left-invertive").holds

    def test_cyclic_group(self):
        assert all(check_law(cyclic2(), law).holds for law in LAWS)

    def test_left_zero_witness(self):
        rep = check_law(left_zero(), "left-invertive")
        assert not rep.holds and rep.witness == (0, 0, 1)
        lhs, rhs = law_sides(left_zero(), "left-invertive", rep.witness)
        assert lhs != rhs

    def test_unknown_law(self):
        with pytest.raises(GroupoidError):
            check_law(trivial(), "distributive")

    @given(tables())
    def test_left_invertive_matches_naive(self, G):
        rep = check_law(G, "left-invertive")
        assert rep.witness == oracles.left_invertive_naive(G)

    @given(tables(3), st.sampled_from(LAWS))
    def test_witness_replays(self, G, law):
        rep = check_law(G, law)
        if not rep.holds:
            lhs, rhs = law_sides(G, law, rep.witness)
            assert lhs != rhs

    @given(tables(3), st.sampled_from(LAWS))
    def test_witness_is_first(self, G, law):
        arity = {"commutative": 2, "left-invertive": 3, "associative": 3, "left-identity-law4": 3}.get(law, 4)
        first = next((w for w in itertools.product(range(G.order), repeat=arity)
                      if (lambda s: s[0] != s[1])(law_sides(G, law, w))), None)
        assert check_law(G, law).witness == first

    def test_catalog_consequences(self):
        # medial holds in every AG-groupoid; paramedial and law 4 once there is a left identity
        for G in catalog(3):
            assert check_law(G, "medial").holds
            if find_left_identity(G) is not None:
                assert check_law(G, "paramedial").holds
                assert check_law(G, "left-identity-law4").holds


class TestLeftIdentity:
    def test_fixtures(self):
        assert find_left_identity(five_element()) == 3
        assert six_element().label(find_left_identity(six_element())) == "6"
        assert find_left_identity(left_zero()) is None

    def test_unique_in_ag_groupoids(self):
        for G in catalog(3, up_to_iso=False):
            assert len(left_identities(G)) <= 1
            assert left_identity_search(G).unique

    def test_non_ag_may_have_several(self):
        G = build_groupoid(2, [[0, 1], [0, 1]])
        assert left_identities(G) == [0, 1]
        assert not left_identity_search(G).unique


class TestCrispIdeals:
    def test_five_element_bi_ideals(self):
        G = five_element()
        assert [G.labels(A) for A in enumerate_crisp(G, "bi-ideal")] == [["a"], ["a", "b"], list("abcde")]

    def test_empty_set_is_never_an_ideal(self):
        prof = crisp_profile(five_element(), set())
        assert not any(prof.flags.values())

    def test_singleton_c_not_subgroupoid(self):
        G = five_element()
        assert not crisp_profile(G, {G.index("c")})["subgroupoid"]

    @given(tables(4), st.data())
    def test_profile_matches_naive(self, G, data):
        A = data.draw(st.sets(st.integers(0, G.order - 1)))
        prof = crisp_profile(G, A)
        for kind in IDEAL_KINDS[1:]:
            assert prof[kind] == oracles.crisp_naive(G, A, kind), kind

    def test_subset_order(self):
        subs = list(all_subsets(3))
        assert len(subs) == 7 and subs[0] == frozenset({0}) and subs[-1] == frozenset({0, 1, 2})

    def test_powerset_limit(self):
        G = from_flat([0] * 169)
        with pytest.raises(GroupoidError):
            enumerate_crisp(G, "left-ideal")

    def test_subset_product(self):
        G = five_element()
        assert subset_product(G, {2}, {2}) == frozenset({3})


class TestRegularity:
    def test_six_element(self):
        G = six_element()
        prof = regularity_profile(G)
        assert prof.regular and prof.intra_regular and prof.weakly_regular
        assert prof.left_identity == 5

    def test_six_element_witness_equations(self):
        G = six_element()
        for a, x, y in SIX_ELEMENT_WEAK_WITNESSES:
            i, j, k = G.index(a), G.index(x), G.index(y)
            assert G(G(i, j), G(i, k)) == i

    def test_five_element(self):
        G = five_element()
        assert is_regular(G) and is_intra_regular(G) and is_weakly_regular(G)

    @given(tables(3))
    def test_matches_naive(self, G):
        assert is_regular(G) == oracles.regular_naive(G)
        assert is_intra_regular(G) == oracles.intra_regular_naive(G)
        assert is_weakly_regular(G) == oracles.weakly_regular_naive(G)

    def test_witnesses_check_out(self):
        G = six_element()
        prof = regularity_profile(G)
        for a, x in prof.regular_witnesses.items():
            assert G(G(a, x), a) == a
        for a, (x, y) in prof.intra_regular_witnesses.items():
            assert G(G(x, G(a, a)), y) == a

    def test_left_zero_regular(self):
        assert is_regular(left_zero())
