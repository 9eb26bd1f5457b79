import csv
import io
import json
import math
import os
import subprocess
import sys
from importlib import resources

import jsonschema
import pytest

import golden
from zetaroutes import __version__
from zetaroutes.cli import CSV_COLUMNS, MAX_EVALS_ENV, dumps, main
from zetaroutes.distributions import elliptic_moment_even, make_distribution

SCHEMA = json.loads(resources.files("zetaroutes").joinpath("schema/output.schema.json").read_text())


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def records(out):
    recs = [json.loads(line) for line in out.splitlines() if line.strip()]
    for r in recs:
        jsonschema.validate(r, SCHEMA)
    return recs


class TestEval:
    def test_euler_route(self, capsys):
        code, out, _ = run(capsys, "eval", "2", "--route", "euler")
        assert code == 0
        (rec,) = records(out)
        r = rec["results"][0]
        assert r["route"] == "euler_even"
        assert r["value"] == pytest.approx(math.pi**2 / 6, rel=1e-15)
        assert f'"value": {r["value"]:.17g}' in out

    def test_pole(self, capsys):
        code, out, err = run(capsys, "eval", "1")
        assert code == 2
        assert out == ""
        assert "s > 0" in err and "s != 1" in err

    @pytest.mark.parametrize("s", ["0", "-2"])
    def test_outside_domain(self, capsys, s):
        code, _, err = run(capsys, "eval", "--", s)
        assert code == 2
        assert "s > 0" in err

    def test_half(self, capsys):
        code, out, _ = run(capsys, "eval", "0.5")
        assert code == 0
        (rec,) = records(out)
        assert rec["results"][0]["route"] == "eta_series"
        assert rec["results"][0]["value"] == pytest.approx(-1.46035450880959, abs=1e-13)

    def test_inapplicable_route(self, capsys):
        code, _, err = run(capsys, "eval", "3", "--route", "euler")
        assert code == 2
        assert "even" in err

    def test_unknown_route(self, capsys):
        code, _, _ = run(capsys, "eval", "3", "--route", "nope")
        assert code == 2

    def test_bad_tol(self, capsys):
        assert run(capsys, "eval", "3", "--tol", "0")[0] == 2

    def test_text_format(self, capsys):
        code, out, _ = run(capsys, "eval", "3", "--format", "text")
        assert code == 0
        assert out.startswith("zeta(3) = 1.20205690315959")
        assert "±" in out


class TestCompare:
    def test_four(self, capsys):
        code, out, _ = run(capsys, "compare", "4", "--tol", "1e-9")
        assert code == 0
        (rec,) = records(out)
        assert rec["pass"] is True
        assert len(rec["results"]) >= 4

    def test_one_and_a_half(self, capsys):
        code, out, _ = run(capsys, "compare", "1.5", "--tol", "1e-8")
        assert code == 0
        (rec,) = records(out)
        assert rec["pass"] is True
        assert [r["route"] for r in rec["results"]] == [
            "integral_general",
            "integral_halfint",
            "eta_series",
            "dirichlet_series",
        ]
        for r in rec["results"]:
            assert r["value"] == pytest.approx(golden.ZETA_3_2, abs=1e-8)

    def test_injected_fault(self, capsys):
        code, out, _ = run(capsys, "compare", "2", "--inject-fault", "1e-3")
        assert code == 1
        (rec,) = records(out)
        assert rec["pass"] is False
        assert rec["max_pairwise_gap"] >= 1e-3 * 0.99

    def test_fault_on_named_route(self, capsys):
        code, out, _ = run(capsys, "compare", "3", "--inject-fault", "1e-6", "--inject-route", "dirichlet")
        assert code == 1
        faulted = [r for r in records(out)[0]["results"] if "fault" in r["notes"]]
        assert [r["route"] for r in faulted] == ["dirichlet_series"]

    def test_route_subset(self, capsys):
        code, out, _ = run(capsys, "compare", "3", "--routes", "eta,dirichlet")
        assert code == 0
        assert [r["route"] for r in records(out)[0]["results"]] == ["eta_series", "dirichlet_series"]

    def test_no_routes(self, capsys):
        assert run(capsys, "compare", "1")[0] == 2


class TestBernoulli:
    def test_examples(self, capsys):
        code, out, _ = run(capsys, "bernoulli", "10")
        assert code == 0
        rows = records(out)[0]["bernoulli"]
        assert len(rows) == 11
        as_text = {r["n"]: f"{r['numerator']}/{r['denominator']}" for r in rows}
        assert as_text[6] == "1/42"
        assert as_text[1] == "-1/2"
        assert as_text[9] == "0/1"
        assert as_text[0] == "1/1"

    def test_capacity(self, capsys):
        assert run(capsys, "bernoulli", "100000")[0] == 2

    def test_negative(self, capsys):
        assert run(capsys, "bernoulli", "--", "-1")[0] == 2

    def test_text(self, capsys):
        _, out, _ = run(capsys, "bernoulli", "6", "--format", "text")
        assert "B_6 = 1/42" in out
        assert "B_0 = 1\n" in out


class TestMonteCarlo:
    def test_half_logistic(self, capsys):
        code, out, _ = run(capsys, "mc", "half_logistic", "--k", "1", "--n", "1000000", "--seed", "42")
        assert code == 0
        (rec,) = records(out)
        assert rec["target"] == pytest.approx(2 * math.log(2), rel=1e-15)
        assert abs(rec["z"]) <= 4 and rec["pass"] is True
        assert rec["seed"] == 42 and rec["n"] == 1000000

    def test_logistic_odd(self, capsys):
        code, out, _ = run(capsys, "mc", "logistic", "--k", "3", "--n", "1000000", "--seed", "7")
        assert code == 0
        (rec,) = records(out)
        assert rec["target"] == 0.0
        assert abs(rec["z"]) <= 4

    def test_elliptic(self, capsys):
        code, out, _ = run(capsys, "mc", "elliptic_logistic", "--k", "2", "--n", "1000000", "--seed", "11")
        assert code == 0
        (rec,) = records(out)
        c = make_distribution("elliptic_logistic").c
        assert rec["target"] == pytest.approx(elliptic_moment_even(1, c), rel=1e-15)
        assert abs(rec["z"]) <= 4

    def test_small_n(self, capsys):
        assert run(capsys, "mc", "logistic", "--n", "10")[0] == 2

    def test_bad_kind(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["mc", "gumbel"])
        assert exc.value.code == 2


class TestTable:
    def test_csv(self, capsys):
        code, out, _ = run(capsys, "table", "2", "3", "4", "--format", "csv")
        assert code == 0
        rows = list(csv.reader(io.StringIO(out)))
        assert tuple(rows[0]) == CSV_COLUMNS == ("s", "route", "value", "abs_error", "converged")
        body = rows[1:]
        assert len(body) == 3
        expected = [math.pi**2 / 6, golden.ZETA_3, math.pi**4 / 90]
        for row, want in zip(body, expected):
            assert float(row[2]) == pytest.approx(want, rel=1e-14)
            assert row[4] == "true"

    def test_json_lines(self, capsys):
        code, out, _ = run(capsys, "table", "2", "3", "4")
        assert code == 0
        recs = records(out)
        assert [r["argument"] for r in recs] == [2.0, 3.0, 4.0]

    def test_all_routes(self, capsys):
        _, out, _ = run(capsys, "table", "3", "--all-routes", "--format", "csv")
        routes = [row[1] for row in csv.reader(io.StringIO(out))][1:]
        assert routes == ["integral_general", "integral_posint", "cotangent_odd", "eta_series", "dirichlet_series"]


class TestSerialization:
    @pytest.mark.parametrize("x", [math.pi, 0.1, 1 / 3, 2.0**-1074, 1.7976931348623157e308, -0.0])
    def test_round_trip(self, x):
        text = dumps({"v": x})
        assert float(json.loads(text)["v"]) == x

    def test_seventeen_digits(self):
        assert dumps(0.1) == "0.10000000000000001"
        assert dumps(1.0) == "1"

    def test_non_finite_is_null(self):
        assert dumps(math.inf) == "null"

    def test_schema_rejects_missing_fields(self):
        with pytest.raises(jsonschema.ValidationError):
            jsonschema.validate({"command": "eval", "version": __version__}, SCHEMA)


class TestEnvironment:
    def test_budget_override(self, capsys, monkeypatch):
        monkeypatch.setenv(MAX_EVALS_ENV, "50")
        code, out, _ = run(capsys, "eval", "3", "--route", "general")
        assert code == 0
        r = records(out)[0]["results"][0]
        assert r["evaluations"] < 200
        assert r["converged"] is False

    @pytest.mark.parametrize("raw", ["abc", "0", "-5"])
    def test_invalid_budget(self, capsys, monkeypatch, raw):
        monkeypatch.setenv(MAX_EVALS_ENV, raw)
        code, _, err = run(capsys, "eval", "3", "--route", "general")
        assert code == 2
        assert MAX_EVALS_ENV in err


def _subprocess(*argv):
    env = {k: v for k, v in os.environ.items() if k != MAX_EVALS_ENV}
    return subprocess.run(
        [sys.executable, "-m", "zetaroutes", *argv], capture_output=True, text=True, env=env
    )


class TestEndToEnd:
    @pytest.mark.parametrize(
        "argv, code",
        [
            (("eval", "2"), 0),
            (("eval", "1"), 2),
            (("compare", "2", "--inject-fault", "1e-3"), 1),
            (("frobnicate",), 2),
        ],
    )
    def test_exit_codes(self, argv, code):
        assert _subprocess(*argv).returncode == code

    def test_byte_identical(self):
        argv = ("mc", "elliptic_logistic", "--k", "2", "--n", "20000", "--seed", "3")
        first, second = _subprocess(*argv).stdout, _subprocess(*argv).stdout
        strip = lambda s: s.replace(f'"version": "{__version__}"', "")
        assert strip(first) == strip(second)
        a, b = _subprocess("table", "2.5", "3", "--all-routes").stdout, _subprocess("table", "2.5", "3", "--all-routes").stdout
        assert a == b
