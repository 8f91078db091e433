import json

import pytest

from neronlab.paperlab import TABLES, cases_for, verify
from neronlab.paperlab.cli import main
from neronlab.paperlab.registry import CHAR2_ROOT, UnknownTableError, _tree_roots, verify_all
from neronlab.localred import tate_reduce


@pytest.mark.parametrize("table", sorted(TABLES))
def test_table_passes(table):
    rep = verify(table)
    assert rep.ok, [(f.id, f.error, f.expected, f.computed) for f in rep.failures()]
    assert rep.total > 0


@pytest.mark.parametrize("table", sorted(TABLES))
def test_case_ids_unique_and_stable(table):
    first = [c.id for c in cases_for(table)]
    assert len(first) == len(set(first))
    assert first == [c.id for c in cases_for(table)]
    assert all(c.kind in ("stated", "derived", "trivial") for c in cases_for(table))
    assert all(c.source for c in cases_for(table))


def test_table_sizes():
    sizes = {t: len(cases_for(t)) for t in TABLES}
    assert sizes["igusa3"] == 19
    assert sizes["char2-tree"] == 24
    assert sizes["family3"] == 6
    assert sizes["swan"] == 7
    assert sizes["frob"] == 40


def test_params_restrict_cases():
    ids = [c.id for c in cases_for("frob", {"p": [13]})]
    assert ids and all(i.startswith("p13-") for i in ids)


def test_unknown_table():
    with pytest.raises(UnknownTableError):
        verify("no-such-table")


def test_verify_all_shape():
    reports = verify_all()
    assert [r.table_id for r in reports] == list(TABLES)
    d = reports[0].to_dict()
    assert d["table"] == reports[0].table_id and "passed" in d


def test_tree_root_frobenius_chain():
    kinds = [str(tate_reduce(E).kodaira) for E in _tree_roots(2, CHAR2_ROOT)]
    assert kinds == ["II*", "III*", "I1*"]


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_cli_reduce_json(capsys):
    code, out = run(capsys, "reduce", "--char", "2", "--eq", "[t,0,0,t^2,0]", "--json")
    assert code == 0
    d = json.loads(out)
    assert (d["kodaira"], d["nu_delta"], d["delta"], d["j"]) == ("I1*", 8, 1, "t^4")


def test_cli_reduce_at_infinity(capsys):
    code, out = run(capsys, "reduce", "--char", "5", "--eq", "[0,0,0,0,t]", "--place", "inf", "--json")
    assert code == 0
    assert json.loads(out)["kodaira"] == "II*"


def test_cli_parse_error(capsys):
    code, out = run(capsys, "reduce", "--char", "3", "--eq", "[t,0,0,t^+,1]")
    assert code == 2
    d = json.loads(out)
    assert d["error"] == "parse" and d["pos"] == 10


def test_cli_singular(capsys):
    code, out = run(capsys, "reduce", "--eq", "[0,0,0,0,0]")
    assert code == 1
    assert "error" in json.loads(out)


def test_cli_frobenius(capsys):
    code, out = run(capsys, "frobenius", "--char", "5", "--eq", "[0,0,0,0,t^5]", "--json")
    d = json.loads(out)
    assert code == 0 and (d["kodaira"], d["pullback_kodaira"]) == ("II*", "II")


def test_cli_twist_and_basechange(capsys):
    code, out = run(capsys, "twist", "--char", "5", "--eq", "[0,0,0,1,1]", "--param", "t", "--json")
    assert code == 0 and json.loads(out)["twist_kodaira"] == "I0*"
    code, out = run(capsys, "basechange", "--char", "3", "--eq", "[0,t,0,0,t]", "--sub", "t^2", "--json")
    assert code == 0 and "kodaira" in json.loads(out)


def test_cli_torsion_point(capsys):
    code, out = run(capsys, "torsion", "--char", "3", "--eq", "[0,t,0,0,t^2]", "--json")
    assert code == 0 and json.loads(out)["hasse"] == "t"


def test_cli_swan_and_phi(capsys):
    code, out = run(capsys, "ramify", "swan", "--group", "sl2f3", "--subgroup", "C4", "--json")
    assert code == 0 and json.loads(out)["subgroup_delta"] == 4
    code, out = run(capsys, "ramify", "swan", "--group", "sl2f3", "--subgroup", "C5")
    assert code == 1
    code, out = run(capsys, "swan", "--orders", "24,8,2,2", "--json")
    assert json.loads(out)["delta"] == "1"
    code, out = run(capsys, "phi", "--orders", "2,2", "--x", "2", "--json")
    assert json.loads(out)["phi"] == "3/2"


def test_cli_groupscheme(capsys):
    code, out = run(capsys, "groupscheme", "h1count", "--char", "5", "--degree-bound", "1", "--json")
    assert code == 0 and json.loads(out)["free_orbits"] == 1
    code, out = run(capsys, "groupscheme", "axioms", "--char", "3", "--tau", "2", "--json")
    assert code == 0 and json.loads(out)["ok"]


def test_cli_verify(capsys):
    code, out = run(capsys, "verify", "swan")
    assert code == 0 and "swan" in out
    code, out = run(capsys, "verify", "frob", "--param", "p=13", "--json")
    d = json.loads(out)
    assert code == 0 and d["ok"] and d["tables"][0]["passed"] == 10
    code, out = run(capsys, "verify", "nonexistent")
    assert code == 1 and json.loads(out)["error"] == "unknown_table"


def test_cli_properties(capsys):
    code, out = run(capsys, "properties", "--seed", "3", "--count", "3", "--json")
    d = json.loads(out)
    assert code == 0 and d["ok"] and len(d["suites"]) == 8
