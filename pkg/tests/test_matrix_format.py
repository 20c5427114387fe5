import json
from fractions import Fraction

import pytest
from hypothesis import given

from ihcalc.core.intmat import MatZ
from ihcalc.core.linrel import MatQ, graph, relation, subspace_from_generators
from ihcalc.formats.matrix import (
    dumps,
    matrix_from_dict,
    matrix_to_dict,
    parse_matrices,
    parse_matrix,
    parse_subspace,
    relation_from_dict,
    relation_to_dict,
    render_matrix,
    render_relation,
    render_subspace,
)
from ihcalc.utils.exceptions import FormatError, MatrixFormatError

from .strategies import int_matrices, relations


class TestParseMatrix:
    def test_basic(self):
        assert parse_matrix("2 3\n1 2 3\n4 5 6\n") == MatZ.from_rows([[1, 2, 3], [4, 5, 6]])

    def test_comments_and_blank_lines(self):
        text = "# H\n2 2\n1 0  # first row\n\n0 1\n"
        assert parse_matrix(text) == MatZ.identity(2)

    def test_negative_entries(self):
        assert parse_matrix("1 2\n-3 4") == MatZ.from_rows([[-3, 4]])

    def test_empty_shapes(self):
        assert parse_matrix("0 3").shape == (0, 3)
        assert parse_matrix("2 0\n\n\n").shape == (2, 0)

    def test_rational(self):
        a = parse_matrix("1 2\n1/2 -6/4", rational=True)
        assert isinstance(a, MatQ)
        assert a == MatQ.from_rows([[Fraction(1, 2), Fraction(-3, 2)]])

    def test_several(self):
        mats = parse_matrices("# A\n1 1\n2\n# B\n1 2\n3 4\n")
        assert mats == [MatZ.from_rows([[2]]), MatZ.from_rows([[3, 4]])]


class TestParseErrors:
    def test_fraction_in_integer_matrix(self):
        with pytest.raises(MatrixFormatError) as info:
            parse_matrix("1 1\n1/2")
        assert info.value.line == 2

    def test_bad_header(self):
        with pytest.raises(MatrixFormatError) as info:
            parse_matrix("2\n1 2")
        assert info.value.line == 1

    def test_missing_rows(self):
        with pytest.raises(MatrixFormatError):
            parse_matrix("3 1\n1\n2")

    def test_wrong_entry_count(self):
        with pytest.raises(MatrixFormatError) as info:
            parse_matrix("2 2\n1 2\n\n3")
        assert info.value.line == 4
        assert "line 4" in str(info.value)

    def test_bad_entries(self):
        for token in ("x", "1.5", "1/0"):
            with pytest.raises(MatrixFormatError):
                parse_matrix(f"1 1\n{token}")

    def test_count(self):
        with pytest.raises(MatrixFormatError):
            parse_matrix("# only comments\n")
        with pytest.raises(MatrixFormatError):
            parse_matrix("1 1\n1\n1 1\n2")

    def test_hierarchy(self):
        assert issubclass(MatrixFormatError, FormatError)


class TestRender:
    def test_integer(self):
        assert render_matrix(MatZ.from_rows([[1, -2], [0, 3]])) == "2 2\n1 -2\n0 3"

    def test_rational(self):
        assert render_matrix(MatQ.from_rows([[Fraction(1, 2), 2]])) == "1 2\n1/2 2"

    def test_no_rows(self):
        assert render_matrix(MatZ.zeros(0, 2)) == "0 2"

    @given(int_matrices())
    def test_parses_back(self, a):
        assert parse_matrix(render_matrix(a)) == a


class TestSubspaces:
    def test_render(self):
        s = subspace_from_generators(2, [[2, 4]])
        assert render_subspace(s) == "dim 2, rank 1\n1 2"
        assert render_subspace(subspace_from_generators(3, [])) == "dim 3, rank 0"

    def test_parse(self):
        s = parse_subspace("dim 3, rank 2\n1 0 1/2\n0 2 0\n")
        assert s == subspace_from_generators(3, [[2, 0, 1], [0, 1, 0]])

    def test_parse_errors(self):
        with pytest.raises(MatrixFormatError):
            parse_subspace("")
        with pytest.raises(MatrixFormatError):
            parse_subspace("3 2\n1 0 0")
        with pytest.raises(MatrixFormatError):
            parse_subspace("dim 2, rank 2\n1 0")
        with pytest.raises(MatrixFormatError):
            parse_subspace("dim 2, rank 1\n1 0 0")

    def test_render_relation(self):
        assert render_relation(graph(MatZ.from_rows([[2]]))) == "# relation 1->1\ndim 2, rank 1\n1 2"

    @given(relations())
    def test_relation_text_parses_back(self, r):
        assert parse_subspace(render_relation(r)) == r.space


class TestJson:
    def test_matrix_dict(self):
        a = MatZ.from_rows([[1, -2]])
        assert matrix_to_dict(a) == {"rows": 1, "cols": 2, "entries": [["1", "1"], ["-2", "1"]]}
        assert matrix_from_dict(matrix_to_dict(a)) == a

    def test_rational_matrix_dict(self):
        data = {"rows": 1, "cols": 1, "entries": [["3", "4"]]}
        a = matrix_from_dict(data)
        assert isinstance(a, MatQ)
        assert a == MatQ.from_rows([[Fraction(3, 4)]])

    def test_bad_matrix_dict(self):
        with pytest.raises(MatrixFormatError):
            matrix_from_dict({"rows": 1})
        with pytest.raises(MatrixFormatError):
            matrix_from_dict({"rows": 1, "cols": 1, "entries": [["1", "0"]]})

    def test_relation_dict(self):
        r = relation(1, 1, [[2, 3]])
        data = relation_to_dict(r)
        assert data == {"n": 1, "m": 1, "basis": [["1", "3/2"]]}
        assert relation_from_dict(json.loads(dumps(data))) == r

    def test_bad_relation_dict(self):
        with pytest.raises(MatrixFormatError):
            relation_from_dict({"n": 1, "m": 1, "basis": [["1", "x"]]})
