import json

import pytest

from scripts.kred import EXIT_INTERNAL, EXIT_STATE, EXIT_USAGE, main
from src.utils.output import OutputEnvelope


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_kseries_text(capsys):
    code, out, _ = run(capsys, "kseries", "-p", "23", "-n", "7")
    assert code == 0
    assert out.splitlines()[1] == "-1, 11, -44, 22, 374, -572, -4224"


def test_mseries_json(capsys):
    code, out, _ = run(capsys, "mseries", "-p", "3", "-n", "3", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["payload"]["coefficients"] == ["-1", "0", "0"]
    assert data["p"] == "3" and data["theory"] == "real"
    assert int(data["timing"]["elapsed_ms"]) >= 0


def test_invalid_prime_exits_2(capsys):
    code, _, err = run(capsys, "kseries", "-p", "9", "-n", "5")
    assert code == EXIT_USAGE
    assert "p must be an odd prime" in err


def test_bad_arguments_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["kseries", "-p", "5", "-n", "0"])
    assert exc.value.code == 2


def test_reduce_csv(capsys):
    code, out, _ = run(capsys, "reduce", "--theory", "real", "-p", "23", "-n", "4", "--format", "csv")
    assert code == 0
    assert out.splitlines() == [
        "index,exponent,coefficient",
        "0,12,-1",
        "1,13,-1",
        "2,14,4",
        "3,15,1",
    ]


def test_reduce_complex_p7(capsys):
    code, out, _ = run(capsys, "reduce", "--theory", "complex", "-p", "7", "-n", "28", "--mode", "base")
    assert code == 0
    assert out.splitlines()[1].startswith("-1, 3, 3, 2, 2, 3, 1, -2, 0, 1")


def test_reduce_with_state_and_corruption(capsys, tmp_path):
    state = str(tmp_path / "p7.state")
    code, first, _ = run(capsys, "reduce", "-p", "7", "-n", "300", "--state", state)
    assert code == 0
    code, again, _ = run(capsys, "reduce", "-p", "7", "-n", "300", "--state", state)
    assert code == 0 and again == first
    with open(state, "r+", encoding="ascii") as f:
        text = f.read()
        f.seek(0)
        f.write(text.replace("done=300", "done=299"))
    code, _, err = run(capsys, "reduce", "-p", "7", "-n", "300", "--state", state)
    assert code == EXIT_STATE
    assert "digest" in err


def test_formula_display(capsys):
    code, out, _ = run(capsys, "formula", "--theory", "real", "-n", "2")
    assert code == 0
    assert "-(p^2-1)(7p^2+17)/5760" in out
    code, out, _ = run(capsys, "formula", "--theory", "real", "-n", "2", "--format", "json")
    payload = json.loads(out)["payload"]
    assert payload["display"] == "-(p^2-1)(7p^2+17)/5760"
    assert payload["min_valid_p"] == "7"


def test_bernoulli_check(capsys):
    code, out, _ = run(capsys, "bernoulli", "-n", "4", "--check")
    assert code == 0
    assert out.strip() == "B_4 = -1/30    oracle MATCH"


def test_period_scan(capsys, tmp_path):
    code, out, _ = run(
        capsys, "scan", "--theory", "complex", "-p", "3", "5", "--max-terms", "100",
        "--out-dir", str(tmp_path), "--workers", "1", "--format", "json",
    )
    assert code == 0
    reports = json.loads(out)["payload"]["reports"]
    assert [(r["p"], r["period"], r["certificate_status"]) for r in reports] == [
        ("3", "2", "PROVED"),
        ("5", "6", "PROVED"),
    ]


def test_period_not_found(capsys, tmp_path):
    code, out, _ = run(
        capsys, "period", "-p", "7", "--max-terms", "28", "--state", str(tmp_path / "s.state")
    )
    assert code == 0
    assert "NOT_FOUND" in out and "NOT_ATTEMPTED" in out


def test_period_needs_primes(capsys):
    code, _, _ = run(capsys, "period", "--max-terms", "28")
    assert code == EXIT_USAGE


def test_realification(capsys):
    code, out, _ = run(capsys, "realification", "-p", "7")
    assert code == 0
    assert "CLOSED_FORM" in out


def test_identity_terms(capsys):
    code, out, _ = run(capsys, "identity", "--theory", "real", "-p", "3", "--terms", "2:-1")
    assert code == 0 and "HOLDS" in out
    code, out, _ = run(capsys, "identity", "-p", "3", "--terms", "3:-3")
    assert code == 1 and "DOES NOT HOLD" in out


def test_bad_term_list_is_a_usage_error(capsys):
    code, _, err = run(capsys, "identity", "-p", "3", "--terms", "3:1", "3:2")
    assert code == EXIT_USAGE
    assert "appears twice" in err
    code, _, _ = run(capsys, "identity", "-p", "11", "--paper-display")
    assert code == EXIT_USAGE


def test_internal_value_error_is_not_a_usage_error(capsys, monkeypatch):
    def broken(*args, **kwargs):
        raise ValueError("band check failed")

    monkeypatch.setattr("scripts.kred.base_series", broken)
    code, _, err = run(capsys, "kseries", "-p", "5", "-n", "3")
    assert code == EXIT_INTERNAL
    assert "usage" not in err.lower()


def test_residues(capsys):
    code, out, _ = run(capsys, "residues", "-p", "7", "-n", "3", "--format", "csv")
    assert code == 0
    assert out.splitlines()[3] == "2,-4,3,-4,3"


def test_json_output_is_canonical(capsys):
    _, out, _ = run(capsys, "kseries", "-p", "5", "-n", "6", "--format", "json")
    envelope = OutputEnvelope.from_json(out)
    again = OutputEnvelope.from_json(envelope.to_json())
    assert again.canonical_json() == envelope.canonical_json()
    assert envelope.command == ["kred", "kseries", "-p", "5", "-n", "6", "--format", "json"]


def test_repeated_runs_are_identical(capsys):
    payloads = []
    for _ in range(2):
        _, out, _ = run(capsys, "reduce", "-p", "11", "-n", "80", "--format", "json")
        payloads.append(OutputEnvelope.from_json(out).canonical_json())
    assert payloads[0] == payloads[1]


@pytest.mark.slow
def test_verify_paper(capsys):
    code, out, _ = run(capsys, "verify-paper")
    assert code == 0
    assert "passed" in out.splitlines()[-1]
