import json
from fractions import Fraction as F
from pathlib import Path

import pytest

from agfuzzy.cli import ParseError, main, parse_fuzzy_file, parse_groupoid_file
from agfuzzy.fixtures import five_element, five_element_grades, six_element
from agfuzzy.groupoid import find_left_identity

FIX = Path(__file__).resolve().parent.parent / "fixtures"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


class TestParsing:
    def test_five_element_file(self):
        G = parse_groupoid_file((FIX / "s5").read_text())
        assert G == five_element()
        assert G.label(find_left_identity(G)) == "d"

    def test_six_element_file(self):
        assert parse_groupoid_file((FIX / "s6").read_text()) == six_element()

    def test_order_one(self):
        G = parse_groupoid_file("1\n0\n")
        assert G.order == 1

    def test_short_row(self):
        text = (FIX / "s5").read_text().replace("a b d e c", "a b d e")
        with pytest.raises(ParseError, match="line 5: 4 entries"):
            parse_groupoid_file(text)

    def test_unknown_name(self):
        with pytest.raises(ParseError, match="line 3, column 2: unknown element 'x'"):
            parse_groupoid_file("2 p r\np p\nr x\n")

    def test_missing_rows(self):
        with pytest.raises(ParseError, match="expected 2 table rows"):
            parse_groupoid_file("2\n0 1\n")

    def test_fuzzy_file(self):
        f = parse_fuzzy_file((FIX / "f5").read_text(), five_element())
        assert f.grades == (F(4, 5), F(7, 10), F(3, 10), F(3, 10), F(3, 10))
        assert f == five_element_grades()

    def test_fuzzy_missing(self):
        with pytest.raises(ParseError, match="unassigned: e"):
            parse_fuzzy_file("a 1\nb 1\nc 1\nd 1\n", five_element())

    def test_fuzzy_range(self):
        with pytest.raises(ParseError, match="outside"):
            parse_fuzzy_file("a 3/2\nb 1\nc 1\nd 1\ne 1\n", five_element())

    def test_fuzzy_duplicate(self):
        with pytest.raises(ParseError, match="duplicate"):
            parse_fuzzy_file("a 1\na 1\nb 1\nc 1\nd 1\ne 1\n", five_element())


class TestCommands:
    def test_demo_paper(self, capsys):
        code, out, _ = run(capsys, "demo-paper")
        assert code == 0
        assert "(3/10,7/10]" in out and "all facts reproduced" in out

    def test_demo_json(self, capsys):
        code, out, _ = run(capsys, "demo-paper", "--format", "json")
        rep = json.loads(out)
        assert code == 0 and rep["reproduced"] and all(f["ok"] for f in rep["facts"])

    def test_check_laws_left_zero(self, capsys):
        code, out, _ = run(capsys, "check-laws", "--g", FIX / "left_zero")
        assert code == 1 and "fails at ('0', '0', '1')" in out

    def test_check_laws_json(self, capsys):
        code, out, _ = run(capsys, "check-laws", "--g", FIX / "s5", "--format", "json")
        assert code == 0 and json.loads(out)["laws"]["medial"]["holds"]

    def test_theorem_th22(self, capsys):
        code, out, _ = run(capsys, "theorem", "TH22", "--g", FIX / "s6", "--k", "0", "--grid", "0,1/2,1",
                           "--format", "json")
        rep = json.loads(out)
        assert code == 0 and rep["holds"]
        assert rep["citation"] and rep["variants"][0]["variant"] == "(ii)"

    def test_theorem_json_stable(self, capsys):
        args = ("theorem", "T4.4-i-idem-eq", "--g", FIX / "s5", "--format", "json")
        _, a, _ = run(capsys, *args)
        _, b, _ = run(capsys, *args)
        assert a == b
        rep = json.loads(a)
        assert {v["variant"] for v in rep["variants"]} == {"truncated", "literal"}

    def test_text_and_json_agree(self, capsys):
        for argv in (["fuzzy-check", "bi-ideal", "--g", FIX / "s5", "--f", FIX / "f5"],
                     ["fuzzy-check", "left-ideal", "--g", FIX / "s5", "--f", FIX / "f5", "--k", "0.2"],
                     ["check-laws", "--g", FIX / "left_zero"],
                     ["theorem", "TH24", "--g", FIX / "s5"]):
            c1, text, _ = run(capsys, *argv)
            c2, js, _ = run(capsys, *argv, "--format", "json")
            assert c1 == c2
            rep = json.loads(js)
            verdict = rep.get("holds", rep.get("ag_groupoid"))
            assert verdict == (c1 == 0)

    def test_fuzzy_check_failure(self, capsys, tmp_path):
        g = tmp_path / "g"
        g.write_text("a 0\nb 0\nc 1\nd 0\ne 0\n")
        code, out, _ = run(capsys, "fuzzy-check", "subgroupoid", "--g", FIX / "s5", "--f", g)
        assert code == 1 and "clause subgroupoid" in out

    def test_level_sets(self, capsys):
        code, out, _ = run(capsys, "level-sets", "--g", FIX / "s5", "--f", FIX / "f5", "--format", "json")
        pieces = json.loads(out)["pieces"]
        assert [p["interval"] for p in pieces] == ["(0,3/10]", "(3/10,7/10]", "(7/10,4/5]", "(4/5,1]"]
        assert [p["set"] for p in pieces] == [list("abcde"), ["a", "b"], ["a"], []]

    def test_ideals(self, capsys):
        code, out, _ = run(capsys, "ideals", "bi-ideal", "--g", FIX / "s5", "--format", "json")
        assert json.loads(out)["ideals"] == [["a"], ["a", "b"], list("abcde")]

    def test_classify(self, capsys):
        code, out, _ = run(capsys, "classify", "--g", FIX / "s6", "--format", "json")
        rep = json.loads(out)
        assert rep["left_identity"] == "6" and rep["weakly_regular"]

    def test_enumerate(self, capsys, tmp_path):
        code, out, _ = run(capsys, "enumerate", "3", "--iso", "--format", "json", "--out", tmp_path / "c")
        assert code == 0 and json.loads(out)["count"] == 20
        assert (tmp_path / "c").read_text().splitlines()[-1] == "count=20"

    def test_search_gap(self, capsys):
        code, out, _ = run(capsys, "search-counterexample", "classic-vs-k-gap", "--order", "2", "--format", "json")
        rep = json.loads(out)
        assert code == 0 and not rep["exhausted"]

    def test_usage_errors(self, capsys):
        assert run(capsys, "theorem", "NOPE", "--g", FIX / "s5")[0] == 2
        assert run(capsys, "theorem", "TH22", "--g", FIX / "left_zero")[0] == 2
        assert run(capsys, "fuzzy-check", "bi-ideal", "--g", FIX / "s5", "--f", FIX / "f5", "--k", "1")[0] == 2
        assert run(capsys, "theorem", "TH22", "--g", FIX / "s6", "--grid", "1/2,1")[0] == 2
        assert run(capsys, "check-laws")[0] == 2
        assert run(capsys, "check-laws", "--g", "/nonexistent")[0] == 2
        assert run(capsys, "no-such-command")[0] == 2

    def test_usage_error_json(self, capsys):
        code, out, _ = run(capsys, "theorem", "NOPE", "--g", FIX / "s5", "--format", "json")
        assert code == 2 and "error" in json.loads(out)

    def test_budget_env(self, capsys, monkeypatch):
        monkeypatch.setenv("AGFUZZY_BUDGET", "10")
        code, out, err = run(capsys, "theorem", "TH22", "--g", FIX / "s6")
        assert code == 2 and "budget" in err
