import json

import pytest

from errors import FrontierError, SpaceFileError
from hopf import ZeroDatum
from simplicial import homology_dims
from spacefile import dump_space, dump_zeros, load_space, load_zeros


def test_space_document_round_trip(pinched_torus, tmp_path):
    path = tmp_path / "tp2.space"
    path.write_text(dump_space(pinched_torus))
    loaded = load_space(path)
    space = loaded.space
    assert loaded.subdivisions == 0
    assert space.complex == pinched_torus.complex
    assert space.labels == pinched_torus.labels
    assert space.strata == pinched_torus.strata
    assert dump_space(space) == dump_space(pinched_torus)


def test_top_stratum_simplices_are_implicit(pinched_torus):
    document = json.loads(dump_space(pinched_torus))
    strata = {s["id"]: s for s in document["strata"]}
    assert strata[0]["simplices"] == []
    assert strata[1]["simplices"] == [[0]]


def test_minimal_document_loads():
    text = json.dumps({
        "dimension": 2,
        "maximal_simplices": [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]],
        "strata": [{"id": 0, "dim": 2, "name": "regular"}],
        "subdivisions": 1,
    })
    loaded = load_space(text)
    assert loaded.subdivisions == 1
    assert homology_dims(loaded.space.complex) == [1, 0, 1]


def test_stratification_errors_propagate():
    text = json.dumps({
        "dimension": 2,
        "maximal_simplices": [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]],
        "strata": [{"id": 0, "dim": 2}, {"id": 1, "dim": 1, "simplices": [[0, 1]]}],
    })
    with pytest.raises(FrontierError):
        load_space(text)


@pytest.mark.parametrize("text", [
    "{not json",
    "[1, 2]",
    json.dumps({"maximal_simplices": [[0]], "strata": []}),
    json.dumps({"dimension": "two", "maximal_simplices": [[0]], "strata": []}),
    json.dumps({"dimension": 1, "maximal_simplices": [[0, 1]], "strata": [{"id": 0, "dim": 0}]}),
])
def test_malformed_documents(text):
    with pytest.raises(SpaceFileError):
        load_space(text)


def test_missing_file(tmp_path):
    with pytest.raises(SpaceFileError):
        load_space(tmp_path / "absent.space")


def test_zeros_document(tmp_path):
    zeros = [ZeroDatum(1, 0, 1, "pinch")]
    path = tmp_path / "zeros.json"
    path.write_text(dump_zeros(zeros, field_class="semi-radial"))
    document = load_zeros(path)
    assert document.zeros == tuple(zeros)
    assert document.field_class == "semi-radial"


def test_zero_without_index_is_rejected():
    with pytest.raises(SpaceFileError):
        load_zeros(json.dumps({"zeros": [{"stratum": 1}]}))


@pytest.mark.parametrize("component", ["0", 1.5, True])
def test_zero_with_a_non_integer_component_is_rejected(component):
    with pytest.raises(SpaceFileError):
        load_zeros(json.dumps({"zeros": [{"stratum": 1, "component": component, "index": 1}]}))


def test_zero_component_defaults_to_the_first():
    document = load_zeros(json.dumps({"zeros": [{"stratum": 1, "index": 1}]}))
    assert document.zeros[0].component == 0
