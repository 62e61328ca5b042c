import json
import math

import pytest

from entropia import cli
from entropia.cli import canonical_json, main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, "--json", *argv)
    return code, json.loads(out), out


# --- canonical JSON ---------------------------------------------------------


def test_canonical_json_is_idempotent_and_sorted():
    doc = {"b": 1 / 3, "a": [math.pi, {"z": 2, "y": 1e-30}]}
    text = canonical_json(doc)
    assert text == canonical_json(json.loads(text))
    assert text.index('"a"') < text.index('"b"')
    assert " " not in text


def test_round_floats_pins_12_significant_digits():
    assert cli._round_floats(math.pi) == 3.14159265359
    assert cli._round_floats({"x": [0.1 + 0.2]}) == {"x": [0.3]}
    assert cli._round_floats(7) == 7


# --- entropy ----------------------------------------------------------------


def test_entropy_json_golden(capsys):
    code, doc, text = run_json(capsys, "entropy", "24")
    assert code == 0
    assert doc["status"] == "ok"
    r = doc["result"]
    assert r["n"] == 24 and r["bigOmega"] == 4 and r["smallOmega"] == 2
    assert r["tau"] == 8 and r["sigma"] == 60 and r["tauE"] == 2
    assert r["H"] == pytest.approx(math.log(4) - 0.75 * math.log(3), abs=1e-9)
    # emitted text round-trips byte-for-byte
    assert canonical_json(json.loads(text)) == text.rstrip("\n")


def test_entropy_text_output(capsys):
    code, out, _ = run(capsys, "entropy", "6")
    assert code == 0
    assert "0.69314718056" in out  # log 2 at 12 significant digits


def test_entropy_rejects_small_n(capsys):
    code, out, err = run(capsys, "entropy", "1")
    assert code == 2
    assert "error" in err
    code, doc, _ = run_json(capsys, "entropy", "0")
    assert code == 2 and doc["status"] == "error"


# --- edivisors --------------------------------------------------------------


def test_edivisors_golden(capsys):
    code, doc, _ = run_json(capsys, "edivisors", "12")
    assert code == 0
    assert doc["result"]["edivisors"] == [6, 12]
    assert doc["result"]["count"] == 2


def test_edivisors_cap_exceeded(capsys, monkeypatch):
    from entropia import arith

    monkeypatch.setenv(arith.ENUM_CAP_ENV, "1")
    code, doc, _ = run_json(capsys, "edivisors", "12")
    assert code == 2 and doc["status"] == "error"


# --- compare ----------------------------------------------------------------


def test_compare_goldens(capsys):
    code, doc, _ = run_json(capsys, "compare", "22", "105")
    assert code == 0
    assert doc["result"]["relation"] == "LESS"
    assert doc["result"]["gap"] == pytest.approx(math.log(5 / 6), abs=1e-9)
    code, doc, _ = run_json(capsys, "compare", "6", "35")
    assert doc["result"]["relation"] == "EQUAL"


def test_compare_non_coprime_is_usage_error(capsys):
    code, _, err = run(capsys, "compare", "6", "10")
    assert code == 2 and "error" in err


# --- ideal ------------------------------------------------------------------


def test_ideal_goldens(capsys):
    code, doc, _ = run_json(capsys, "ideal", "cubic:2", "31")
    assert code == 0
    r = doc["result"]
    assert r["g"] == 3 and r["factors"] == [[1, 1], [1, 1], [1, 1]]
    assert r["H"] == pytest.approx(math.log(3), abs=1e-9)
    code, doc, _ = run_json(capsys, "ideal", "cyclo:5", "5")
    assert doc["result"]["factors"] == [[4, 1]] and doc["result"]["H"] == 0.0


def test_ideal_bad_field_spec(capsys):
    code, _, err = run(capsys, "ideal", "weird:3", "7")
    assert code == 2 and "error" in err
    code, _, err = run(capsys, "ideal", "quad:12", "7")
    assert code == 2


# --- verify -----------------------------------------------------------------


def test_verify_bounds_ok(capsys):
    code, doc, _ = run_json(capsys, "verify", "bounds", "--max", "1000")
    assert code == 0
    assert doc["status"] == "ok"
    assert doc["result"]["checked"] == 999
    assert doc["result"]["violationCount"] == 0


def test_verify_corollary_int_reports_violation(capsys):
    code, doc, _ = run_json(capsys, "verify", "corollary-int", "--max", "100")
    assert code == 1
    assert doc["status"] == "violation"
    assert doc["result"]["violationCount"] > 0
    assert any("n=60" in v for v in doc["result"]["violations"])


def test_verify_products(capsys):
    code, doc, _ = run_json(capsys, "verify", "products", "--max", "60")
    assert code == 0
    counts = doc["result"]["counts"]
    assert counts["LESS"] > 0 and counts["EQUAL"] > 0


def test_verify_unknown_suite(capsys):
    code, _, err = run(capsys, "verify", "nonsense")
    assert code == 2 and "unknown suite" in err


def test_usage_errors(capsys):
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys)[0] == 2
