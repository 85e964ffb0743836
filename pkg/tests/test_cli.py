"""CLI contract: subcommands, output schemas, exit codes, determinism."""

import csv
import io
import json

import pytest

from egfrac import cli

SYLVESTER_8 = ["2", "3", "7", "43", "1807", "3263443", "10650056950807",
               "113423713055421844361000443"]


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_expand_basic(capsys):
    code, out, _ = run_cli(capsys, "expand", "1", "7", "--m", "5")
    assert code == 0
    payload = json.loads(out)
    assert payload["terms"] == ["8", "57", "3193", "10192057", "103878015699193"]
    assert payload["error"]["num"] == "1"
    assert payload["p"] == 1 and payload["q"] == 7


def test_expand_sylvester(capsys):
    code, out, _ = run_cli(capsys, "expand", "1", "1", "--m", "8")
    assert code == 0
    assert json.loads(out)["terms"] == SYLVESTER_8


def test_expand_reduces_and_reports_indices(capsys):
    code, out, _ = run_cli(capsys, "expand", "14", "108", "--m", "3")
    assert code == 0
    payload = json.loads(out)
    assert (payload["p"], payload["q"]) == (7, 54)
    assert payload["ell"] == 2 and payload["delta"] == 1
    assert payload["terms"] == ["8", "217", "46873"]


def test_expand_digit_guard_exit_code(capsys):
    code, _, err = run_cli(capsys, "expand", "9", "28", "--m", "9", "--digit-guard", "50")
    assert code == 3
    assert "digit guard" in err
    code, out, _ = run_cli(capsys, "expand", "9", "28", "--m", "9", "--no-guard")
    assert code == 0
    assert len(json.loads(out)["terms"]) == 9


def test_domain_error_exit_code(capsys):
    code, _, err = run_cli(capsys, "expand", "3", "2", "--m", "1")
    assert code == 2
    assert "domain error" in err


def test_best_reports_tie(capsys):
    code, out, _ = run_cli(capsys, "best", "10", "17", "--m", "2")
    assert code == 0
    payload = json.loads(out)
    assert payload["optimal_tuples"] == [["2", "12"], ["3", "4"]]
    assert payload["greedy_is_best"] is True
    assert payload["unique"] is False


def test_best_budget_exit_code(capsys):
    code, _, err = run_cli(capsys, "best", "5", "16", "--m", "3", "--budget", "2")
    assert code == 4
    assert "inconclusive" in err


def test_step_command(capsys):
    code, out, _ = run_cli(capsys, "step", "1", "7", "--m", "1", "--n", "2")
    assert code == 0
    payload = json.loads(out)
    assert payload["cond_i"] is False
    assert payload["b_m"] == "15"


def test_upsilon_command(capsys):
    code, out, _ = run_cli(capsys, "upsilon", "7", "54")
    assert code == 0
    payload = json.loads(out)
    assert payload == {"p": 7, "q": 54, "upsilon": 2, "ell": 2, "delta": 1,
                       "family": "UpsilonDividesQ"}


def test_construct_command(capsys):
    code, out, _ = run_cli(capsys, "construct", "6")
    assert code == 0
    payload = json.loads(out)
    assert (payload["p"], payload["q"], payload["v"]) == (7, 330, 8)
    assert payload["beating_pair"] == ["49", "1244"]


def test_verify_pass_and_exceptions(capsys):
    code, out, _ = run_cli(capsys, "verify", "lp11", "--q-max", "100")
    assert code == 0
    payload = json.loads(out)
    assert payload["passed"] is True
    assert payload["failures"] == [[17, 2], [61, 8]]


def test_verify_threshold_json_and_csv(capsys):
    code, out, _ = run_cli(capsys, "verify", "threshold", "--q-max", "20")
    assert code == 0
    payload = json.loads(out)
    assert payload["passed"] is True
    by_pq = {(r["p"], r["q"]): r for r in payload["rows"]}
    assert by_pq[(10, 17)]["ties"] == [[3, 4]]
    assert by_pq[(5, 16)]["losses"] == [[5, 9]]

    code, out, _ = run_cli(capsys, "--format", "csv", "verify", "threshold", "--q-max", "20")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    tie = [r for r in rows if (r["p"], r["q"]) == ("10", "17")]
    assert tie and tie[0]["ties"] == "3:4"
    assert {r["q"] for r in rows} <= {str(q) for q in range(2, 21)}


def test_verify_tables_and_claims(capsys):
    code, out, _ = run_cli(capsys, "verify", "tables")
    assert code == 0
    assert json.loads(out)["points_checked"] == 16

    code, out, _ = run_cli(capsys, "verify", "claims", "--j-max", "60")
    assert code == 0
    payload = json.loads(out)
    assert [r["lemma_id"] for r in payload] == ["cls1", "cls2", "cll5"]
    assert all(r["passed"] for r in payload)


def test_verify_roots(capsys):
    code, out, _ = run_cli(capsys, "verify", "roots", "--s-max", "25")
    assert code == 0
    assert all(r["passed"] for r in json.loads(out))


def test_phi_samples_csv(capsys):
    code, out, _ = run_cli(capsys, "--format", "csv", "phi-samples", "--denom", "12")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert rows[0]["theta_num"] == "1" and rows[0]["theta_den"] == "6"
    by_theta = {(r["theta_num"], r["theta_den"]): r for r in rows}
    # phi(1/n) = 1 exactly; phi(2/3) = 2
    assert by_theta[("1", "4")]["phi_num"] == "1"
    assert by_theta[("1", "4")]["phi_den"] == "1"
    assert by_theta[("2", "3")]["phi_num"] == "2"
    # the grid k/12 for k = 2..12 collapses to reduced fractions, up to 1/1
    assert ("1", "1") in by_theta


def test_plain_format(capsys):
    code, out, _ = run_cli(capsys, "--format", "plain", "best", "5", "16", "--m", "2")
    assert code == 0
    assert "greedy_is_best = False" in out


def test_verify_failure_exit_code(capsys, monkeypatch):
    from egfrac.report import VerificationReport

    def broken(q_max, jobs=1):
        return VerificationReport("lp1", "stub", 1, failures=[(4, 2, 1, 1)],
                                  expected_exceptions=[])

    monkeypatch.setattr(cli.lemmas, "verify_lp1", broken)
    code, out, _ = run_cli(capsys, "verify", "lp1")
    assert code == 5
    assert json.loads(out)["passed"] is False


def test_csv_rejected_where_undefined(capsys):
    code, _, err = run_cli(capsys, "--format", "csv", "verify", "lp1", "--q-max", "10")
    assert code == 2
    assert "csv" in err


def test_deterministic_output(capsys):
    _, out1, _ = run_cli(capsys, "verify", "lp1", "--q-max", "60")
    _, out2, _ = run_cli(capsys, "verify", "lp1", "--q-max", "60")
    assert out1 == out2
    _, out3, _ = run_cli(capsys, "verify", "lp1", "--q-max", "60", "--jobs", "2")
    assert out1 == out3
