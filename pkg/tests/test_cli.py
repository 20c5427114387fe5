import json
from pathlib import Path

import pytest
from hypothesis import HealthCheck, given, settings, strategies as st

from ihcalc import __version__
from ihcalc.cli import run
from ihcalc.cli.main import EXIT_SEMANTIC, EXIT_TYPE, EXIT_USAGE, create_argument_parser
from ihcalc.core.intmat import hnf, kernel_basis, pullback, pushout
from ihcalc.core.semantics import sem_cospan, sem_rel, sem_span
from ihcalc.formats.dsl import render
from ihcalc.formats.matrix import (
    matrix_from_dict,
    parse_matrices,
    parse_matrix,
    parse_subspace,
    relation_from_dict,
    render_matrix,
)
from ihcalc.utils.prefs import save_prefs

from .strategies import circuits, int_matrices

GOLDEN_CIRCUITS = [
    line.split("#")[0].strip()
    for line in (Path(__file__).parent / "data" / "golden_circuits.ih").read_text().splitlines()
    if line.split("#")[0].strip()
]

# capsys is drained by every readouterr
with_capsys = settings(
    max_examples=20,
    suppress_health_check=[HealthCheck.function_scoped_fixture, HealthCheck.too_slow],
)


@pytest.fixture
def in_tmp(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    return tmp_path


def output(capsys):
    return capsys.readouterr().out


class TestLinearAlgebraCommands:
    def test_kernel_from_file(self, in_tmp, capsys):
        (in_tmp / "a.txt").write_text("# (2 -1)\n1 2\n2 -1\n")
        assert run(["kernel", "a.txt"]) == 0
        assert output(capsys) == "2 1\n1\n2\n"

    def test_kernel_inline(self, capsys):
        assert run(["kernel", "1 2\n1 -1"]) == 0
        assert output(capsys) == "2 1\n1\n1\n"

    def test_hnf_identity(self, capsys):
        assert run(["hnf", "2 2\n1 0\n0 1"]) == 0
        assert output(capsys) == (
            "# H\n2 2\n1 0\n0 1\n# U\n2 2\n1 0\n0 1\n# r = 0\n# pivot_rows = 0 1\n"
        )

    def test_hnf_json(self, capsys):
        assert run(["hnf", "1 2\n0 3", "--json"]) == 0
        data = json.loads(output(capsys))
        assert data["r"] == 1
        assert data["pivot_rows"] == [0]
        assert data["h"]["entries"] == [["0", "1"], ["3", "1"]]

    def test_pullback_of_scalars(self, capsys):
        assert run(["pullback", "1 1\n2", "1 1\n3"]) == 0
        assert output(capsys) == "# p\n1 1\n3\n# q\n1 1\n2\n"

    def test_pushout_json(self, capsys):
        assert run(["--json", "pushout", "1 1\n2", "1 1\n3"]) == 0
        data = json.loads(output(capsys))
        assert data["p"]["entries"] == [["3", "1"]]
        assert data["q"]["entries"] == [["2", "1"]]

    def test_pullback_shape_mismatch(self, capsys):
        assert run(["pullback", "1 1\n1", "2 1\n1\n1"]) == EXIT_SEMANTIC
        assert "incompatible shapes" in capsys.readouterr().err

    def test_bad_matrix(self, capsys):
        assert run(["hnf", "not a matrix"]) == EXIT_USAGE
        assert "ROWS COLS" in capsys.readouterr().err


class TestCircuitCommands:
    def test_sem_relation(self, capsys):
        assert run(["sem", "add"]) == 0
        assert output(capsys) == "# relation 2->1\ndim 3, rank 2\n1 0 1\n0 1 1\n"

    def test_sem_dual(self, capsys):
        assert run(["sem", "add", "--dual"]) == 0
        assert output(capsys) == "# relation 2->1\ndim 3, rank 1\n1 1 1\n"

    def test_sem_span_json(self, capsys):
        assert run(["sem", "add", "--as", "span", "--json"]) == 0
        data = json.loads(output(capsys))
        assert data["kind"] == "span"
        assert (data["n"], data["m"]) == (2, 1)
        assert data["right"]["entries"] == [["1", "1"], ["1", "1"]]

    def test_sem_cospan_text(self, capsys):
        assert run(["sem", "add", "--as", "cospan"]) == 0
        assert output(capsys).startswith("# cospan 2->1, middle 1\n# left\n1 2\n1 1\n")

    def test_eq_equal(self, capsys):
        assert run(["eq", "amp(2);coamp(2)", "id"]) == 0
        assert output(capsys) == "equal\n"

    def test_eq_unequal(self, capsys):
        assert run(["eq", "add", "codup"]) == 1
        assert output(capsys).startswith("# unequal: denotations differ")

    def test_eq_interfaces(self, capsys):
        assert run(["--json", "eq", "add", "dup"]) == 1
        data = json.loads(output(capsys))
        assert data == {"equal": False, "reason": "interfaces differ: 2->1 vs 1->2"}

    def test_normalize(self, capsys):
        assert run(["normalize", "amp(2) ; coamp(3)"]) == 0
        assert output(capsys) == "coamp(3) ; amp(2)\n"

    @pytest.mark.parametrize("circuit", GOLDEN_CIRCUITS)
    @pytest.mark.parametrize("cospan", [False, True])
    def test_normal_form_is_equal(self, capsys, circuit, cospan):
        flags = ["--cospan"] if cospan else []
        assert run(["normalize", circuit, *flags]) == 0
        nf = output(capsys).strip()
        assert run(["eq", circuit, nf]) == 0
        assert output(capsys) == "equal\n"
        assert run(["normalize", nf, *flags]) == 0
        assert output(capsys).strip() == nf

    def test_golden_corpus_size(self):
        assert len(GOLDEN_CIRCUITS) == 50

    def test_circuit_file(self, in_tmp, capsys):
        (in_tmp / "double.ih").write_text("# doubling\ndup ;\nadd\n")
        assert run(["classify", "double.ih"]) == 0
        assert output(capsys) == "line(1,2)\n"

    def test_classify_json(self, capsys):
        assert run(["classify", "coamp(4) ; amp(2)", "--json"]) == 0
        data = json.loads(output(capsys))
        assert data == {"tag": "line", "k1": 2, "k2": 1, "value": "1/2"}

    def test_fmt(self, capsys):
        assert run(["fmt", "dup;(amp(2)*amp(3))"]) == 0
        assert output(capsys) == "dup ; amp(2) * amp(3)\n"


class TestOutputReparses:
    @with_capsys
    @given(int_matrices(max_dim=3))
    def test_hnf_text(self, capsys, a):
        assert run(["hnf", render_matrix(a)]) == 0
        res = hnf(a)
        assert parse_matrices(output(capsys)) == [res.h, res.u]

    @with_capsys
    @given(int_matrices(max_dim=3))
    def test_hnf_json(self, capsys, a):
        assert run(["hnf", render_matrix(a), "--json"]) == 0
        data = json.loads(output(capsys))
        res = hnf(a)
        assert matrix_from_dict(data["h"]) == res.h
        assert matrix_from_dict(data["u"]) == res.u
        assert data["pivot_rows"] == list(res.pivot_rows)

    @with_capsys
    @given(int_matrices(max_dim=3))
    def test_kernel(self, capsys, a):
        assert run(["kernel", render_matrix(a)]) == 0
        assert parse_matrix(output(capsys)) == kernel_basis(a)
        assert run(["kernel", render_matrix(a), "--json"]) == 0
        assert matrix_from_dict(json.loads(output(capsys))) == kernel_basis(a)

    @with_capsys
    @given(st.data())
    def test_pullback_and_pushout(self, capsys, data):
        z = data.draw(st.integers(0, 3))
        f = data.draw(int_matrices(rows=z, max_dim=3))
        g = data.draw(int_matrices(rows=z, max_dim=3))
        assert run(["pullback", render_matrix(f), render_matrix(g)]) == 0
        assert tuple(parse_matrices(output(capsys))) == pullback(f, g)
        assert run(["--json", "pushout", render_matrix(f.T), render_matrix(g.T)]) == 0
        legs = json.loads(output(capsys))
        assert (matrix_from_dict(legs["p"]), matrix_from_dict(legs["q"])) == pushout(f.T, g.T)

    @with_capsys
    @given(circuits())
    def test_sem(self, capsys, c):
        text = render(c)
        assert run(["sem", text]) == 0
        assert parse_subspace(output(capsys)) == sem_rel(c).space
        assert run(["sem", text, "--json"]) == 0
        assert relation_from_dict(json.loads(output(capsys))) == sem_rel(c)

    @with_capsys
    @given(circuits())
    def test_sem_legs(self, capsys, c):
        text = render(c)
        assert run(["sem", text, "--as", "cospan"]) == 0
        legs = sem_cospan(c)
        assert parse_matrices(output(capsys)) == [legs.left, legs.right]
        assert run(["sem", text, "--as", "span", "--json"]) == 0
        data = json.loads(output(capsys))
        legs = sem_span(c)
        assert (matrix_from_dict(data["left"]), matrix_from_dict(data["right"])) == (legs.left, legs.right)


class TestFractions:
    def test_mul(self, capsys):
        assert run(["frac", "mul", "2/3", "3/4"]) == 0
        assert output(capsys) == "1/2\n"

    def test_add(self, capsys):
        assert run(["frac", "add", "1/2", "1/3"]) == 0
        assert output(capsys) == "5/6\n"

    def test_negative_second_operand(self, capsys):
        assert run(["frac", "mul", "2/3", "-3/4"]) == 0
        assert output(capsys) == "-1/2\n"

    def test_negative_first_operand(self, capsys):
        assert run(["frac", "add", "-1/2", "1/3"]) == 0
        assert output(capsys) == "-1/6\n"

    def test_negative_integers(self, capsys):
        assert run(["frac", "mul", "-2", "-3"]) == 0
        assert output(capsys) == "6\n"

    def test_json(self, capsys):
        assert run(["--json", "frac", "mul", "2", "1/2"]) == 0
        data = json.loads(output(capsys))
        assert data["value"] == "1"
        assert data["circuit"] == "coamp(1) ; amp(2) ; (coamp(2) ; amp(1))"

    def test_zero_denominator(self, capsys):
        assert run(["frac", "mul", "1/0", "2"]) == EXIT_USAGE

    def test_not_a_number(self, capsys):
        assert run(["frac", "add", "x", "2"]) == EXIT_USAGE
        assert "error" in capsys.readouterr().err


class TestExitCodes:
    def test_parse_error(self, capsys):
        assert run(["sem", "add ;"]) == EXIT_USAGE
        assert "1:6" in capsys.readouterr().err

    def test_type_error(self, capsys):
        assert run(["sem", "add ; add"]) == EXIT_TYPE
        assert "type error" in capsys.readouterr().err

    def test_semantic_error(self, capsys):
        assert run(["classify", "add"]) == EXIT_SEMANTIC

    def test_usage(self, capsys):
        assert run([]) == EXIT_USAGE
        assert run(["bogus"]) == EXIT_USAGE
        assert run(["frac", "pow", "1", "2"]) == EXIT_USAGE

    def test_version(self, capsys):
        assert run(["--version"]) == 0
        assert output(capsys).strip() == f"ihcalc {__version__}"


class TestAxiomsCommand:
    def test_json(self, capsys):
        assert run(["axioms", "--json"]) == 0
        data = json.loads(output(capsys))
        assert data["ok"] is True
        assert len(data["results"]) == 192
        statuses = {r["status"] for r in data["results"]}
        assert statuses == {"paper-transcribed", "reconstructed"}

    def test_quiet_lines(self, capsys):
        assert run(["-q", "--seed", "3", "--workers", "2", "axioms"]) == 0
        lines = output(capsys).splitlines()
        assert len(lines) == 192
        assert lines[0] == "PASS A1 1->1"
        assert lines[-1].startswith("FAIL control-")


class TestPreferences:
    def test_json_preference(self, capsys):
        save_prefs({"output_format": "json"})
        assert run(["frac", "mul", "1/2", "1/2"]) == 0
        assert json.loads(output(capsys))["value"] == "1/4"

    def test_help_mentions_preferences(self):
        save_prefs({"seed": 99})
        assert "99" in create_argument_parser().format_help()

    def test_set_and_show(self, capsys):
        assert run(["prefs", "seed", "7"]) == 0
        assert output(capsys) == "output_format = text\nseed = 7\nworkers = 1\n"
        assert run(["prefs", "seed"]) == 0
        assert output(capsys) == "seed = 7\n"

    def test_negative_seed(self, capsys):
        assert run(["prefs", "seed", "-3"]) == 0
        assert run(["--json", "prefs"]) == 0
        assert json.loads(output(capsys))["seed"] == -3

    def test_stored_format_applies(self, capsys):
        assert run(["prefs", "output_format", "json"]) == 0
        output(capsys)
        assert run(["frac", "add", "1/2", "1/2"]) == 0
        assert json.loads(output(capsys))["value"] == "1"

    @pytest.mark.parametrize("argv", [
        ["prefs", "workers", "0"],
        ["prefs", "seed", "x"],
        ["prefs", "output_format", "yaml"],
        ["prefs", "colour", "red"],
        ["prefs", "colour"],
    ])
    def test_rejected(self, capsys, argv):
        assert run(argv) == EXIT_USAGE
        assert "error" in capsys.readouterr().err
        assert run(["prefs"]) == 0
        assert output(capsys) == "output_format = text\nseed = 2014\nworkers = 1\n"
