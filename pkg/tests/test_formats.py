import json
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given

from framesteps.formats import SchemaError, dumps, loads, matrix_to_csv, read_matrix, to_dict
from framesteps.gt import GTPattern
from framesteps.tableaux import Tableau
from strategies import frames, gt_patterns, ssyt


def test_tableau_schema():
    t = Tableau(((3, 3), (1, 4), (3,), (3,)), (2, 1, 1))
    assert to_dict(t) == {"kind": "tableau", "inner": [2, 1, 1, 0], "rows": [[3, 3], [1, 4], [3], [3]]}
    assert "inner" not in to_dict(Tableau.straight([[1, 2]]))


def test_rationals_as_strings():
    p = GTPattern.triangle([[1], [Fraction(5, 3), Fraction(1, 3)]])
    text = dumps(p)
    assert json.loads(text)["rows"] == [[1], ["5/3", "1/3"]]
    assert loads(text) == p


@given(ssyt())
def test_tableau_round_trip(tn):
    t, _ = tn
    assert loads(dumps(t)) == t


@given(gt_patterns())
def test_gt_round_trip(p):
    assert loads(dumps(p)) == p


@pytest.mark.parametrize("text", [
    "not json",
    "[1, 2]",
    '{"rows": [[1]]}',
    '{"kind": "tableau", "rows": [[1.5]]}',
    '{"kind": "tableau", "rows": [[true]]}',
    '{"kind": "gt", "shape": "hexagon", "rows": [[1]]}',
    '{"kind": "gt", "rows": [[0.5]]}',
    '{"kind": "gt", "rows": [["x/y"]]}',
    '{"kind": "matrix", "rows": [[1, 2], [3]]}',
    '{"kind": "widget", "rows": []}',
    '{"kind": "tableau", "rows": 3}',
])
def test_schema_errors(text):
    with pytest.raises(SchemaError):
        loads(text)


@given(frames())
def test_csv_round_trip_is_exact(phi):
    assert np.array_equal(np.array([[float(x) for x in line.split(",")]
                                    for line in matrix_to_csv(phi).splitlines()]), phi)


def test_read_matrix_formats(tmp_path):
    csv_path = tmp_path / "m.csv"
    csv_path.write_text("1, 2\n3, 4\n\n")
    json_path = tmp_path / "m.json"
    json_path.write_text('{"kind": "matrix", "rows": [[1, 2], [3, 4]]}')
    assert np.array_equal(read_matrix(csv_path), read_matrix(json_path))
    bad = tmp_path / "bad.csv"
    bad.write_text("1,2\n3\n")
    with pytest.raises(SchemaError):
        read_matrix(bad)
    bad.write_text("1,a\n")
    with pytest.raises(SchemaError):
        read_matrix(bad)
