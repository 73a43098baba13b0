"""Input parsing, CLI subcommands, exit codes, determinism, golden reports."""

import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from polarweb import FoliationData, MPoly, PlaneCurve, SymWeb
from polarweb.cli import run_command
from polarweb.errors import ParseError
from polarweb.parsing import parse_input_text, parse_point, parse_polynomial

HERE = Path(__file__).parent
GOLDEN = HERE / "golden"

x = MPoly.variable("x")
y = MPoly.variable("y")
dx = MPoly.variable("dx")
dy = MPoly.variable("dy")


class TestPolynomialParser:
    def test_spec_example(self):
        from fractions import Fraction

        got = parse_polynomial("3/2*x^2*y - dx^2*x")
        assert got == Fraction(3, 2) * x**2 * y - dx**2 * x

    def test_power_binds_tightest(self):
        assert parse_polynomial("2*x^3") == 2 * x**3

    def test_parentheses(self):
        assert parse_polynomial("(x + y)^2") == (x + y) ** 2

    def test_leading_minus(self):
        assert parse_polynomial("-x + 1") == 1 - x

    def test_rational_coefficient(self):
        from fractions import Fraction

        assert parse_polynomial("1/3") == MPoly.constant(Fraction(1, 3))

    def test_implicit_multiplication_rejected(self):
        with pytest.raises(ParseError):
            parse_polynomial("2x")

    def test_unknown_variable_rejected(self):
        with pytest.raises(ParseError):
            parse_polynomial("x + z")

    def test_round_trip_canonical_text(self):
        from polarweb.mpoly import format_mpoly

        f = (dy**2 - x * dx**2).canonical()
        assert parse_polynomial(format_mpoly(f)) == f

    def test_point(self):
        from fractions import Fraction

        p = parse_point("1/2,-3")
        assert p.a == Fraction(1, 2) and p.b == -3


class TestInputFiles:
    def test_web(self):
        obj, warnings = parse_input_text("type: web\nform: dx*dy\n")
        assert isinstance(obj, SymWeb) and obj.k == 2 and not warnings

    def test_foliation_vector_field_saturated(self):
        obj, warnings = parse_input_text("type: foliation\nA: x^2\nB: x*y\n")
        assert isinstance(obj, FoliationData)
        assert obj.A == x and obj.B == y
        assert any("saturated" in w for w in warnings)

    def test_foliation_as_form(self):
        obj, _ = parse_input_text("type: foliation\nform: x*dy - y*dx\n")
        assert isinstance(obj, FoliationData)
        # the radial field, up to the canonical-sign normalization of the form
        assert obj.A * y - obj.B * x == 0 and not obj.A.is_zero()

    def test_curve(self):
        obj, _ = parse_input_text("type: curve\nf: y^2 - x^3\n")
        assert isinstance(obj, PlaneCurve) and obj.degree == 3

    def test_comments_and_blank_lines(self):
        obj, _ = parse_input_text("# a web\n\ntype: web\nform: dx*dy  # product\n")
        assert isinstance(obj, SymWeb)

    def test_mixed_degree_rejected(self):
        with pytest.raises(ParseError):
            parse_input_text("type: web\nform: dx + x\n")

    def test_zero_form_rejected(self):
        with pytest.raises(ParseError):
            parse_input_text("type: web\nform: dx - dx\n")

    def test_missing_type_rejected(self):
        with pytest.raises(ParseError):
            parse_input_text("form: dx\n")

    def test_error_carries_line_number(self):
        with pytest.raises(ParseError) as err:
            parse_input_text("type: web\nform: dx + qq\n")
        assert "line 2" in str(err.value)


@pytest.fixture()
def inputs(tmp_path):
    web = tmp_path / "web.txt"
    web.write_text("type: web\nform: dy^2 - x*dx^2\n")
    fol = tmp_path / "fol.txt"
    fol.write_text("type: foliation\nA: x^2\nB: y^2\n")
    curve = tmp_path / "curve.txt"
    curve.write_text("type: curve\nf: y^2 - x^3\n")
    return {"web": str(web), "fol": str(fol), "curve": str(curve)}


def _body(text: str) -> str:
    return "\n".join(
        line for line in text.splitlines() if not line.startswith("timestamp")
    )


class TestSubcommands:
    def test_polar(self, inputs):
        code, text = run_command(["polar", "--in", inputs["web"], "--center", "1,2"])
        assert code == 0
        assert "polar: x^3 - 2*x^2 - y^2 + x + 4*y - 4" in text
        assert "degree: 3" in text

    def test_polar_of_radial_center(self, tmp_path):
        f = tmp_path / "radial.txt"
        f.write_text("type: web\nform: x*dy - y*dx\n")
        code, text = run_command(["polar", "--in", str(f), "--center", "0,0"])
        assert code == 0
        assert "polar is all of the plane" in text

    def test_degree(self, inputs):
        code, text = run_command(["degree", "--in", inputs["web"]])
        assert code == 0 and "degree: 1" in text

    def test_discriminant(self, inputs):
        code, text = run_command(["discriminant", "--in", inputs["web"]])
        assert code == 0 and "discriminant: x" in text

    def test_singular(self, inputs):
        code, text = run_command(["singular", "--in", inputs["fol"]])
        assert code == 0 and "singular point: (0, 0) [exact]" in text

    def test_directions(self, inputs):
        code, text = run_command(["directions", "--in", inputs["web"], "--point", "1,0"])
        assert code == 0 and "(1:1)" in text and "(1:-1)" in text

    def test_inflexion(self, inputs):
        code, text = run_command(["inflexion", "--in", inputs["fol"]])
        assert code == 0 and "inflexion divisor:" in text

    def test_classify(self, inputs):
        code, text = run_command(["classify-sing", "--in", inputs["fol"], "--point", "0,0"])
        assert code == 0 and "not quasi-radial" in text

    def test_family_dimension(self, inputs):
        code, text = run_command(["family", "--in", inputs["web"], "--dimension"])
        assert code == 0 and "verdict: PASS" in text

    def test_class_and_genus(self, inputs):
        code, text = run_command(["class", "--in", inputs["curve"]])
        assert code == 0 and "class: 3" in text
        code, text = run_command(["genus", "--in", inputs["curve"]])
        assert code == 0 and "genus: 0" in text

    def test_localsing(self, inputs):
        code, text = run_command(["localsing", "--in", inputs["curve"], "--point", "0,0"])
        assert code == 0 and "seq=[2, 1, 1]" in text

    def test_check_passes(self, inputs):
        code, text = run_command(
            ["check", "--in", inputs["web"], "--theorem", "polar-degree", "--seed", "7", "--samples", "5"]
        )
        assert code == 0 and "verdict: PASS" in text


class TestExitCodes:
    def test_parse_error_is_2(self, tmp_path):
        bad = tmp_path / "bad.txt"
        bad.write_text("type: web\nform: dx + x\n")
        code, text = run_command(["degree", "--in", str(bad)])
        assert code == 2

    def test_missing_file_is_2(self):
        code, _ = run_command(["degree", "--in", "/nonexistent/input.txt"])
        assert code == 2

    def test_wrong_input_kind_is_2(self, inputs):
        code, _ = run_command(["inflexion", "--in", inputs["web"]])
        assert code == 2

    def test_math_failure_is_1(self, inputs, monkeypatch):
        from polarweb import cli as cli_mod
        from polarweb.reports import CheckReport

        failing = CheckReport("doctored")
        failing.add("always", False, "forced failure")
        monkeypatch.setattr(cli_mod, "_run_check", lambda obj, args: failing)
        code, text = run_command(
            ["check", "--in", inputs["web"], "--theorem", "polar-degree"]
        )
        assert code == 1 and "FAIL" in text

    def test_numeric_abort_is_3(self, inputs, monkeypatch):
        from polarweb import cli as cli_mod
        from polarweb.errors import NumericAbortError

        def boom(obj, args):
            raise NumericAbortError("loop too close to a branch point")

        monkeypatch.setattr(cli_mod, "_run_check", boom)
        code, text = run_command(
            ["check", "--in", inputs["web"], "--theorem", "irreducible"]
        )
        assert code == 3 and "numeric abort" in text


class TestDeterminism:
    def test_same_seed_same_report(self, inputs):
        argv = ["check", "--in", inputs["web"], "--theorem", "sing-locus", "--seed", "3", "--samples", "4"]
        _, first = run_command(argv)
        _, second = run_command(argv)
        assert _body(first) == _body(second)

    def test_across_processes_and_hash_seeds(self, inputs):
        cmd = [
            sys.executable, "-m", "polarweb.cli",
            "check", "--in", inputs["web"], "--theorem", "branches", "--seed", "11", "--samples", "3",
        ]
        outs = []
        for hash_seed in ("0", "424242"):
            env = dict(os.environ, PYTHONHASHSEED=hash_seed)
            proc = subprocess.run(cmd, capture_output=True, text=True, env=env, timeout=300)
            assert proc.returncode == 0, proc.stderr
            outs.append(_body(proc.stdout))
        assert outs[0] == outs[1]


class TestGoldenReports:
    @pytest.mark.parametrize(
        "name,argv",
        [
            ("polar", ["polar", "--in", "{web}", "--center", "1,2", "--json"]),
            ("degree", ["degree", "--in", "{web}", "--json"]),
            ("singular", ["singular", "--in", "{fol}", "--json"]),
            ("directions", ["directions", "--in", "{web}", "--point", "1,0", "--json"]),
            ("localsing", ["localsing", "--in", "{curve}", "--point", "0,0", "--json"]),
            ("check-polar-degree",
             ["check", "--in", "{web}", "--theorem", "polar-degree", "--seed", "7", "--samples", "3", "--json"]),
            ("check-family-dim",
             ["check", "--in", "{web}", "--theorem", "family-dim", "--seed", "7", "--json"]),
        ],
    )
    def test_matches_golden(self, inputs, name, argv):
        argv = [a.format(**inputs) for a in argv]
        code, text = run_command(argv)
        assert code == 0
        doc = json.loads(text)
        doc.pop("timestamp")
        doc["command"] = " ".join(argv[:1])  # the path differs per tmpdir
        golden = json.loads((GOLDEN / f"{name}.json").read_text())
        golden.pop("timestamp")
        golden["command"] = " ".join(argv[:1])
        assert doc == golden
