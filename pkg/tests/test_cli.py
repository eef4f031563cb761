import json

import pytest

from conftest import HEXACODE_MATRIX, HEXACODE_MATRIX_REPAIRED
from lcorbits import db
from lcorbits.cli import EXIT_BUDGET, EXIT_PARSE, format_par, main


def run(capsys, *argv):
    rc = main(list(argv))
    out, err = capsys.readouterr()
    return rc, out, err


def test_par_formats(capsys):
    assert run(capsys, "par", "--anf", "01,12,23,34")[:2] == (0, "2^3 (= 8)\n")
    assert run(capsys, "par", "--anf", "01,12,23,34", "--method", "recursive")[1] == "2^3 (= 8)\n"
    assert run(capsys, "par", "--anf", "012,13", "--set", "hn")[1] == "4.5000\n"
    assert format_par(10.25, False) == "10.2500"


def test_par_errors(capsys):
    assert run(capsys, "par", "--anf", "0x1")[0] == EXIT_PARSE
    assert run(capsys, "par", "--anf", "012", "--method", "recursive")[0] == EXIT_PARSE
    assert run(capsys, "par", "--anf", "09")[0] == EXIT_BUDGET


def test_orbit(capsys):
    rc, out, err = run(capsys, "orbit", "--anf", "01,02,03,04,05,12,23,34,45,15")
    assert rc == 0
    assert len(out.split()) == 2
    assert "lambda=2" in err and "distance=4" in err


def test_code(capsys, tmp_path):
    good = tmp_path / "hex.txt"
    good.write_text(HEXACODE_MATRIX_REPAIRED)
    rc, out, _ = run(capsys, "code", "--matrix", str(good))
    assert rc == 0
    assert "distance 4" in out
    assert "weights 1 0 0 0 45 0 18" in out
    bad = tmp_path / "bad.txt"
    bad.write_text(HEXACODE_MATRIX)
    assert run(capsys, "code", "--matrix", str(bad))[0] == EXIT_PARSE
    assert run(capsys, "code", "--matrix", str(tmp_path / "missing"))[0] == EXIT_PARSE


def test_construct(capsys, tmp_path):
    rc, out, _ = run(capsys, "construct", "--example", "hexacode-a")
    assert rc == 0 and "par_ihn 9.0000" in out
    spec = tmp_path / "s.json"
    spec.write_text(json.dumps({"T": [2, 2], "entries": {"0,1": "(0.)(1)", "1,0": "(2)(3)"}}))
    rc, out, _ = run(capsys, "construct", "--spec", str(spec), "--measure", "ih")
    assert rc == 0 and "anf 02,13" in out and "par_ih 2^2 (= 4)" in out
    spec.write_text("{")
    assert run(capsys, "construct", "--spec", str(spec))[0] == EXIT_PARSE


def test_enumerate_tables_lambda(capsys, tmp_path):
    out_db = tmp_path / "db.jsonl"
    assert run(capsys, "enumerate", "--n", "6", "--out", str(out_db))[0] == 0
    recs = db.load_db(out_db)
    assert [len(recs[n]) for n in range(1, 7)] == [1, 2, 3, 6, 11, 26]
    rc, out, _ = run(capsys, "tables", "--max-n", "6", "--db", str(out_db), "--which", "counts")
    assert rc == 0 and out.splitlines()[-2] == "6,11,26"
    assert run(capsys, "lambda", "--n", "6", "--db", str(out_db))[1] == "2\n"
    # Resume keeps stored levels and extends the file.
    assert run(capsys, "enumerate", "--n", "7", "--out", str(out_db), "--resume",
               "--connected-only")[0] == 0
    assert len(db.load_db(out_db)[7]) == 26
    assert run(capsys, "tables", "--max-n", "8", "--db", str(out_db))[0] == EXIT_PARSE
    assert run(capsys, "tables", "--max-n", "3", "--which", "bogus")[0] == EXIT_PARSE


def test_budget_refusals(capsys, tmp_path):
    assert run(capsys, "enumerate", "--n", "10", "--out", str(tmp_path / "x"))[0] == EXIT_BUDGET
    assert run(capsys, "sample", "--n", "10", "--count", "1")[0] == EXIT_BUDGET


def test_sample(capsys):
    rc, out, _ = run(capsys, "sample", "--n", "3", "--count", "50", "--seed", "1")
    assert rc == 0 and out.startswith("min ")


def test_usage_error():
    with pytest.raises(SystemExit) as e:
        main(["par"])
    assert e.value.code == 2


def test_thread_count_does_not_change_output(capsys, tmp_path):
    one, two = tmp_path / "one.jsonl", tmp_path / "two.jsonl"
    assert run(capsys, "enumerate", "--n", "7", "--out", str(one))[0] == 0
    assert run(capsys, "--threads", "2", "enumerate", "--n", "7", "--out", str(two))[0] == 0
    assert one.read_bytes() == two.read_bytes()


def test_orbit_graph6_roundtrip(capsys):
    rc, out, _ = run(capsys, "orbit", "--graph6", "Bg")
    assert rc == 0 and len(out.split()) == 2
    assert run(capsys, "orbit", "--graph6", "B!")[0] == EXIT_PARSE
