import json

import pytest

from toricstack.cli import main

P64 = {"lattice": {"rank": 1, "torsion": [2]}, "beta": [[2, 1], [-3, 0]], "max_cones": [[0], [1]]}
P64_B2 = {"lattice": {"rank": 1, "torsion": [2]}, "beta": [[2, 1], [-3, 1]], "max_cones": [[0], [1]]}
P2 = {"lattice": {"rank": 2, "torsion": []}, "beta": [[1, 0], [0, 1], [-1, -1]],
      "max_cones": [[0, 1], [1, 2], [0, 2]]}
LINE22 = {"lattice": {"rank": 1, "torsion": []}, "beta": [[2], [-2]], "max_cones": [[0], [1]]}


@pytest.fixture
def write(tmp_path):
    def _write(doc, name="doc.json"):
        p = tmp_path / name
        p.write_text(doc if isinstance(doc, str) else json.dumps(doc))
        return str(p)
    return _write


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, (json.loads(out.out) if out.out else None), out.err


def test_validate(capsys, write):
    code, rep, _ = run(capsys, "validate", write(P64))
    assert code == 0 and rep["result"]["valid"] and rep["command"] == "validate"
    bad = dict(P64, beta=[[0, 1], [-3, 0]])
    code, rep, err = run(capsys, "validate", write(bad))
    assert code == 1 and rep["result"]["violation"] == "ZeroFreePart" and "ZeroFreePart" in err
    code, rep, _ = run(capsys, "validate", write('{"lattice": '))
    assert code == 3 and rep is None
    code, _, _ = run(capsys, "validate", write({"lattice": {"rank": "one"}, "beta": [], "max_cones": []}))
    assert code == 3
    code, _, _ = run(capsys, "validate", "/nonexistent/file.json")
    assert code == 3


def test_rays_cross_validation(capsys, write):
    code, _, _ = run(capsys, "validate", write(dict(P64, rays=[[1], [-1]])))
    assert code == 0
    code, rep, _ = run(capsys, "validate", write(dict(P64, rays=[[-1], [1]])))
    assert code == 1 and rep["result"]["violation"] == "RaysMismatch"


def test_invariants(capsys, write):
    code, rep, _ = run(capsys, "invariants", write(P64))
    r = rep["result"]
    assert code == 0
    assert r["pic"] == {"free_rank": 1, "torsion": []}
    assert r["multiplicities"] == [2, 3]
    assert r["torus"] == {"rank": 1, "gerbe_factors": [2]}
    assert not r["orbifold"] and not r["canonical"] and r["complete"] and r["coarse_smooth"]
    _, rep, _ = run(capsys, "invariants", write(P2))
    assert rep["result"]["canonical"] and rep["result"]["multiplicities"] == [1, 1, 1]
    _, rep, _ = run(capsys, "invariants", write(LINE22))
    assert rep["result"]["pic"] == {"free_rank": 1, "torsion": [2]}


def test_decompose_recompose(capsys, write, tmp_path):
    code, rep, _ = run(capsys, "decompose", write(P64))
    res = rep["result"]
    assert code == 0
    assert res["multiplicities"] == [2, 3]
    assert res["gerbe"] == [{"order": 2, "class": [1]}]
    assert res["canonical"]["beta"] == [[1], [-1]]
    report_path = write(rep, "dec.json")
    code, doc, _ = run(capsys, "recompose", report_path)
    assert code == 0
    code, back, _ = run(capsys, "recompose", write(res, "bare.json"))
    assert back == doc
    rebuilt = write(doc, "rebuilt.json")
    _, inv1, _ = run(capsys, "invariants", rebuilt)
    _, inv0, _ = run(capsys, "invariants", write(P64))
    for key in ("pic", "multiplicities", "torus"):
        assert inv1["result"][key] == inv0["result"][key]
    _, cmp_, _ = run(capsys, "compare", rebuilt, write(P64, "orig.json"))
    assert cmp_["result"]["verdict"] == "isomorphic"


def test_canonical_decomposes_trivially(capsys, write):
    _, rep, _ = run(capsys, "decompose", write(P2))
    assert rep["result"]["multiplicities"] == [1, 1, 1] and rep["result"]["gerbe"] == []


def test_compare(capsys, write):
    code, rep, _ = run(capsys, "compare", write(P64, "a.json"), write(P64_B2, "b.json"))
    assert code == 0 and rep["result"]["verdict"] == "isomorphic"
    assert len(rep["input_digest"]) == 2
    code, rep, _ = run(capsys, "compare", write(P64, "a.json"), write(P2, "b.json"))
    assert code == 1


def test_recognize(capsys, write):
    _, doc, _ = run(capsys, "wps", "6", "4")
    code, rep, _ = run(capsys, "recognize", write(doc))
    assert code == 0 and rep["result"]["wps"] == [6, 4]
    code, rep, _ = run(capsys, "recognize", write(LINE22))
    assert code == 0 and rep["result"]["wps"] is None
    assert rep["result"]["line"]["weights"] == [1, 1]


def test_quotient(capsys, write):
    code, rep, _ = run(capsys, "quotient", write(P64))
    r = rep["result"]
    assert code == 0
    assert r["character_group"] == {"free_rank": 1, "torsion": []}
    assert sorted(w[0] for w in r["action_weights"]) == [4, 6]
    assert r["cox_patterns"] == [[0], [1]]


def test_root(capsys, write):
    p32 = {"lattice": {"rank": 1, "torsion": []}, "beta": [[2], [-3]], "max_cones": [[0], [1]]}
    code, doc, _ = run(capsys, "root", write(p32), "--line-bundle", "1,0", "--order", "2")
    assert code == 0 and doc == P64
    p1 = {"lattice": {"rank": 1, "torsion": []}, "beta": [[1], [-1]], "max_cones": [[0], [1]]}
    code, doc, _ = run(capsys, "root", write(p1), "--divisors", "2,3")
    assert doc["beta"] == [[2], [-3]]
    code, _, _ = run(capsys, "root", write(P64), "--divisors", "2,3")
    assert code == 1
    with pytest.raises(SystemExit) as exc:
        main(["root", write(p1), "--line-bundle", "1,0"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit):
        main(["root", write(p1), "--divisors", "1,x"])


def test_generators(capsys):
    code, doc, _ = run(capsys, "line", "2", "3")
    assert code == 0 and doc["beta"] == [[2], [-3]]
    code, doc, _ = run(capsys, "wps", "1", "1", "1")
    assert len(doc["max_cones"]) == 3
    code, _, _ = run(capsys, "wps", "0", "1")
    assert code == 1


def test_output_is_byte_stable(capsys, write):
    path = write(P64)
    main(["invariants", path])
    first = capsys.readouterr().out
    main(["invariants", path])
    assert capsys.readouterr().out == first


def test_stdin(capsys, monkeypatch, write):
    import io
    monkeypatch.setattr("sys.stdin", io.TextIOWrapper(io.BytesIO(json.dumps(P64).encode())))
    code, rep, _ = run(capsys, "validate", "-")
    assert code == 0
