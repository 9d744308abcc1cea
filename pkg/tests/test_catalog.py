import itertools
from collections import Counter

import pytest
from hypothesis import given
from hypothesis import strategies as st

from agfuzzy.catalog import (
    CatalogError,
    brute_force_count,
    canonical_flat,
    canonical_form,
    catalog,
    classify_structure,
    enumerate_ag_groupoids,
    load_catalog,
    make_entry,
    relabelings,
    save_catalog,
)
from agfuzzy.fixtures import five_element, six_element
from agfuzzy.groupoid import check_law, from_flat

import oracles


def relabel(flat, n, sigma):
    inv = [0] * n
    for i, s in enumerate(sigma):
        inv[s] = i
    return tuple(sigma[flat[inv[p] * n + inv[q]]] for p in range(n) for q in range(n))


class TestEnumeration:
    @pytest.mark.parametrize("n,count", [(1, 1), (2, 6), (3, 105)])
    def test_labelled_counts(self, n, count):
        assert sum(1 for _ in enumerate_ag_groupoids(n)) == count

    @pytest.mark.parametrize("n", [1, 2])
    def test_brute_force_agrees(self, n):
        assert brute_force_count(n) == sum(1 for _ in enumerate_ag_groupoids(n))

    def test_all_left_invertive_and_distinct(self):
        tables = [G.flat() for G in enumerate_ag_groupoids(3)]
        assert len(set(tables)) == len(tables)
        assert tables == sorted(tables)
        for flat in tables:
            assert oracles.left_invertive_naive(from_flat(flat)) is None

    @pytest.mark.parametrize("n,count", [(1, 1), (2, 3), (3, 20)])
    def test_iso_counts(self, n, count):
        assert sum(1 for _ in enumerate_ag_groupoids(n, up_to_iso=True)) == count

    def test_left_identity_filter(self):
        got = [G for G in enumerate_ag_groupoids(3, require_left_identity=True)]
        full = [G for G in enumerate_ag_groupoids(3) if classify_structure(G).has_left_identity]
        assert got == full

    def test_limits(self):
        with pytest.raises(CatalogError):
            next(enumerate_ag_groupoids(5))
        with pytest.raises(CatalogError):
            next(enumerate_ag_groupoids(6, long_running=True))
        with pytest.raises(CatalogError):
            next(enumerate_ag_groupoids(0))

    def test_workers_identical(self):
        one = [G.flat() for G in enumerate_ag_groupoids(3, up_to_iso=True)]
        many = [G.flat() for G in enumerate_ag_groupoids(3, up_to_iso=True, workers=3)]
        assert one == many


class TestCanonicalForm:
    def test_relabelings_match_pointwise(self):
        flat = five_element().flat()
        rows = relabelings(flat, 5)
        perms = list(itertools.permutations(range(5)))
        for sigma, row in zip(perms[:20], rows[:20]):
            assert tuple(int(v) for v in row) == relabel(flat, 5, sigma)

    @given(st.sampled_from(catalog(3, up_to_iso=False)), st.permutations(range(3)))
    def test_invariant_under_relabeling(self, G, sigma):
        n = G.order
        sigma = list(sigma)[:n] if n == 3 else list(range(n))
        assert canonical_flat(relabel(G.flat(), n, sigma), n) == canonical_flat(G.flat(), n)

    def test_iso_stream_expands_to_labelled(self):
        for n in (1, 2, 3):
            expanded = Counter()
            for G in enumerate_ag_groupoids(n, up_to_iso=True):
                expanded.update(set(relabel(G.flat(), n, s) for s in itertools.permutations(range(n))))
            labelled = Counter(G.flat() for G in enumerate_ag_groupoids(n))
            assert expanded == labelled

    def test_canonical_form_rows(self):
        rows = canonical_form(six_element())
        assert len(rows) == 6 and all(len(r) == 6 for r in rows)
        assert check_law(from_flat(sum(rows, ())), "left-invertive").holds


class TestCatalogFile:
    def test_roundtrip(self, tmp_path):
        entries = [make_entry(G) for G in enumerate_ag_groupoids(3, up_to_iso=True)]
        path = tmp_path / "c3.cat"
        save_catalog(entries, path, 3)
        assert load_catalog(path) == entries

    def _write(self, tmp_path, text):
        path = tmp_path / "bad.cat"
        path.write_text(text)
        return path

    def test_rejects_non_ag_table(self, tmp_path):
        entry = make_entry(from_flat((0, 1, 1, 0)))
        path = tmp_path / "ok.cat"
        save_catalog([entry], path, 2)
        text = path.read_text().replace("0 1 1 0 |", "0 0 1 1 |")
        with pytest.raises(CatalogError, match="line 2: table violates"):
            load_catalog(self._write(tmp_path, text))

    def test_rejects_wrong_profile(self, tmp_path):
        path = tmp_path / "ok.cat"
        save_catalog([make_entry(from_flat((0, 1, 1, 0)))], path, 2)
        text = path.read_text().replace("regular=1", "regular=0")
        with pytest.raises(CatalogError, match="line 2: stored profile"):
            load_catalog(self._write(tmp_path, text))

    def test_rejects_bad_count(self, tmp_path):
        path = tmp_path / "ok.cat"
        save_catalog([make_entry(from_flat((0, 1, 1, 0)))], path, 2)
        text = path.read_text().replace("count=1", "count=2")
        with pytest.raises(CatalogError, match="checksum"):
            load_catalog(self._write(tmp_path, text))

    def test_rejects_bad_header(self, tmp_path):
        with pytest.raises(CatalogError, match="line 1"):
            load_catalog(self._write(tmp_path, "hello\ncount=0\n"))

    def test_missing_count(self, tmp_path):
        path = tmp_path / "ok.cat"
        save_catalog([make_entry(from_flat((0, 1, 1, 0)))], path, 2)
        text = "\n".join(path.read_text().splitlines()[:-1]) + "\n"
        with pytest.raises(CatalogError, match="missing count"):
            load_catalog(self._write(tmp_path, text))


class TestClassification:
    def test_six_element(self):
        prof = classify_structure(six_element())
        assert prof.left_identity == 5
        assert prof.regularity.regular and prof.regularity.weakly_regular
        assert prof.laws["left-invertive"] and not prof.laws["associative"]

    def test_five_element_ideal_counts(self):
        prof = classify_structure(five_element())
        assert prof.ideal_counts["bi-ideal"] == 3
