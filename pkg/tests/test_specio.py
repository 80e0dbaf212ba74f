"""The JSON problem-description format: parsing, diagnostics, round trips."""

import json
from fractions import Fraction

import pytest

from choquetrn import SpecFileError, load_problem, parse_problem, problem_to_dict


BASIC = {
    "atoms": ["a", "b"],
    "measures": {
        "nu": {"rule": "additive", "weights": {"a": "1/2", "b": "1/3"}},
        "mu": {"rule": "explicit", "table": [
            {"set": [], "value": "0"},
            {"set": ["a"], "value": "1"},
            {"set": ["b"], "value": "5/3"},
            {"set": ["a", "b"], "value": "8/3"},
        ]},
    },
    "functions": {"f": {"a": "2", "b": "5"}},
    "family": [
        {"alpha": "0", "set": ["a", "b"]},
        {"alpha": "2", "set": ["b"]},
        {"alpha": "5", "set": []},
    ],
}


def test_parse_basic():
    spec = parse_problem(BASIC)
    assert spec.space.atoms == ("a", "b")
    assert spec.measures["nu"](spec.space.full_set) == Fraction(5, 6)
    assert spec.functions["f"]("b") == 5
    assert spec.family.thresholds == (Fraction(0), Fraction(2), Fraction(5))


def test_round_trip_through_problem_to_dict():
    spec = parse_problem(BASIC)
    spec2 = parse_problem(problem_to_dict(spec))
    assert spec2.space == spec.space
    for name in spec.measures:
        assert spec2.measures[name] == spec.measures[name]
    assert spec2.functions["f"] == spec.functions["f"]
    assert spec2.family == spec.family


def test_zero_plus_round_trip():
    data = dict(BASIC)
    data["zero_plus"] = ["b"]
    spec = parse_problem(data)
    assert spec.family.zero_plus.atom_names() == ("b",)
    spec2 = parse_problem(problem_to_dict(spec))
    assert spec2.family == spec.family


def test_partition_round_trip():
    data = {
        "atoms": ["a", "b", "c"],
        "partition": [["a", "c"], ["b"]],
        "measures": {"nu": {"rule": "cardinality"}},
    }
    spec = parse_problem(data)
    assert spec.space.n_blocks == 2
    spec2 = parse_problem(problem_to_dict(spec))
    assert spec2.space == spec.space


def test_truncation_block():
    data = {
        "truncations": {
            "N_max": 4,
            "measures": {
                "mu": {"rule": "max_element"},
                "nu": {"rule": "indicator_nonempty"},
            },
        }
    }
    spec = parse_problem(data)
    assert spec.model.deepest.atoms == ("0", "1", "2", "3", "4")
    assert spec.family_generator == "threshold_tail"
    assert spec.n_max == 4


def test_error_locations():
    with pytest.raises(SpecFileError) as err:
        parse_problem({"atoms": ["a", "a"]})
    assert err.value.location == "atoms/partition"

    with pytest.raises(SpecFileError) as err:
        parse_problem({"atoms": ["a"], "measures": {"m": {"rule": "nope"}}})
    assert err.value.location == "measures.m"

    with pytest.raises(SpecFileError) as err:
        parse_problem({"atoms": ["a"], "functions": {"f": {}}})
    assert err.value.location == "functions.f"

    with pytest.raises(SpecFileError) as err:
        parse_problem({"atoms": ["a"], "family": [{"alpha": "1", "set": ["a"]}]})
    assert err.value.location == "family"

    with pytest.raises(SpecFileError) as err:
        parse_problem({"truncations": {"measures": {}}})
    assert err.value.location == "truncations"


def test_load_problem_file_errors(tmp_path):
    missing = tmp_path / "nope.json"
    with pytest.raises(SpecFileError):
        load_problem(str(missing))

    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(SpecFileError) as err:
        load_problem(str(bad))
    assert "line" in str(err.value)

    array = tmp_path / "array.json"
    array.write_text("[]")
    with pytest.raises(SpecFileError):
        load_problem(str(array))


def test_load_problem_reads_files(tmp_path):
    path = tmp_path / "prob.json"
    path.write_text(json.dumps(BASIC))
    spec = load_problem(str(path))
    assert spec.space.atoms == ("a", "b")
