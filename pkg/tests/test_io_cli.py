import json

import pytest

from skewsol import io
from skewsol.braces import associated_solution
from skewsol.catalog import catalog, get
from skewsol.cli import main
from skewsol.errors import FormatError
from skewsol.morphisms import SolutionMap
from skewsol.permbrace import build_perm_brace
from skewsol.solubility import search_witness
from skewsol.solutions import FiniteSolution, lyubashenko3, twist


def roundtrip(obj):
    if isinstance(obj, FiniteSolution):
        return io.solution_from_dict(json.loads(io.dumps(io.solution_to_dict(obj))))
    return io.brace_from_dict(json.loads(io.dumps(io.brace_to_dict(obj))))


def test_catalog_entries():
    names = list(catalog())
    assert len(names) == len(set(names))
    entry = get("lyubashenko3")
    assert entry.payload == lyubashenko3()
    assert entry.payload.lam[0] == (1, 2, 0) and entry.payload.rho[0] == (2, 0, 1)
    with pytest.raises(KeyError):
        get("nope")


def test_roundtrip_catalog_and_corpus(solution_corpus, brace_corpus):
    for entry in catalog().values():
        assert roundtrip(entry.payload) == entry.payload
    for obj in list(solution_corpus) + list(brace_corpus):
        assert roundtrip(obj) == obj


def test_map_and_witness_roundtrip():
    f = SolutionMap(lyubashenko3(), twist(1), (0, 0, 0))
    assert io.map_from_dict(json.loads(io.dumps(io.map_to_dict(f)))) == f
    sol = associated_solution(get("trivial-S3").payload)
    W = search_witness(sol).witness
    assert io.witness_from_dict(json.loads(io.dumps(io.witness_to_dict(W))), sol) == W


def test_strict_keys():
    d = io.solution_to_dict(twist(2))
    d["extra"] = 1
    with pytest.raises(FormatError):
        io.solution_from_dict(d)
    assert io.solution_from_dict(d, strict=False) == twist(2)
    with pytest.raises(FormatError):
        io.solution_from_dict({"n": 2, "lambda": [[0, 1], [0, 1]]})
    with pytest.raises(FormatError):
        io.solution_from_dict({"n": True, "lambda": [], "rho": []})


def test_permbrace_export():
    d = io.permbrace_to_dict(build_perm_brace(lyubashenko3()))
    assert set(d) == io.PERMBRACE_KEYS
    assert d["witnesses"] == [[], [1], [-1]]
    assert io.brace_from_dict(d, allowed=io.PERMBRACE_KEYS).n == 3


# --- CLI -----------------------------------------------------------------------


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr()


def test_cli_validate(tmp_path, capsys):
    code, out = run(capsys, "validate", "lyubashenko3")
    assert code == 0 and "valid" in out.out
    d = io.solution_to_dict(lyubashenko3())
    d["rho"][1] = [0, 0, 0]
    p = tmp_path / "bad.json"
    p.write_text(json.dumps(d))
    code, out = run(capsys, "validate", str(p))
    assert code == 1 and "non-degeneracy" in out.out
    b = io.brace_to_dict(get("trivial-S3").payload)
    b["add"] = io.brace_to_dict(get("trivial-C6").payload)["add"]
    p = tmp_path / "brace.json"
    p.write_text(json.dumps(b))
    code, _ = run(capsys, "validate", str(p))
    assert code == 1
    p = tmp_path / "garbage.json"
    p.write_text("{not json")
    assert run(capsys, "validate", str(p))[0] == 3
    assert run(capsys, "validate", str(tmp_path / "missing.json"))[0] == 3


def test_cli_analyze(capsys):
    code, out = run(capsys, "analyze", "lyubashenko3", "--simple", "--retract", "--json")
    rep = json.loads(out.out)
    assert code == 0
    assert rep["solution"]["simple"] is True and rep["solution"]["multipermutation_level"] == 1
    code, out = run(capsys, "analyze", "twist2", "--decompose", "--json")
    assert json.loads(out.out)["solution"]["decomposition"] == [[0], [1]]
    code, out = run(capsys, "analyze", "trivial-S3", "--soluble", "--permbrace", "--json")
    rep = json.loads(out.out)
    assert rep["brace"]["soluble_chain"] == [[0], [0, 2, 5], [0, 1, 2, 3, 4, 5]]
    assert rep["solubility"]["verdict"] == "soluble"
    assert rep["permbrace"]["order"] == 6


def test_cli_enumerate(tmp_path, capsys):
    assert run(capsys, "enumerate", "braces", "2", str(tmp_path / "b2"))[0] == 0
    assert len(list((tmp_path / "b2").iterdir())) == 1
    assert run(capsys, "enumerate", "solutions", "1", str(tmp_path / "s1"))[0] == 0
    assert len(list((tmp_path / "s1").iterdir())) == 1
    assert run(capsys, "enumerate", "braces", "7", str(tmp_path / "b7"))[0] == 0
    assert len(list((tmp_path / "b7").iterdir())) == 1
    # idempotent file names
    run(capsys, "enumerate", "solutions", "2", str(tmp_path / "s2"))
    first = sorted(p.name for p in (tmp_path / "s2").iterdir())
    run(capsys, "enumerate", "solutions", "2", str(tmp_path / "s2"))
    assert sorted(p.name for p in (tmp_path / "s2").iterdir()) == first and len(first) == 4
    assert run(capsys, "enumerate", "braces", "8", str(tmp_path / "b8"))[0] == 2
    assert run(capsys, "enumerate", "solutions", "4", str(tmp_path / "s4"))[0] == 2


def test_cli_harness_catalog_permbrace(tmp_path, capsys):
    code, out = run(capsys, "harness", "strong-left-invariance")
    assert code == 0 and "PASS" in out.out
    code, out = run(capsys, "catalog", "--json")
    assert any(e["name"] == "lyubashenko3" for e in json.loads(out.out)["entries"])
    code, out = run(capsys, "catalog", "--export", "twist2")
    assert io.solution_from_dict(json.loads(out.out)) == twist(2)
    p = tmp_path / "pb.json"
    assert run(capsys, "permbrace", "lyubashenko3", "--out", str(p))[0] == 0
    assert json.loads(p.read_text())["n"] == 3
    assert run(capsys, "permbrace", "trivial-S3", "--max-order", "2")[0] == 2


def test_cli_soluble(tmp_path, capsys):
    w = tmp_path / "w.json"
    code, out = run(capsys, "soluble", "trivial-S3", "--out", str(w))
    assert code == 0 and "soluble" in out.out
    code, out = run(capsys, "soluble", "trivial-S3", "--verify", str(w), "--strict")
    assert code == 0 and "pass" in out.out
    code, out = run(capsys, "soluble", "lyubashenko3", "--max-order", "3", "--json")
    assert json.loads(out.out)["verdict"] == "unknown"
    code, out = run(capsys, "soluble", "trivial-A5", "--json")
    assert json.loads(out.out)["reason"] == "permutation brace insoluble"
    # a conditional witness passes only without --strict
    c = tmp_path / "c.json"
    c.write_text(json.dumps({"t": 0, "levels": [{"brace": io.brace_to_dict(get("trivial-C1").payload), "map": [0, 0, 0], "i_kernel": None, "abelian_ideal": None}]}))
    assert run(capsys, "soluble", "lyubashenko3", "--verify", str(c))[0] == 0
    assert run(capsys, "soluble", "lyubashenko3", "--verify", str(c), "--strict")[0] == 1
