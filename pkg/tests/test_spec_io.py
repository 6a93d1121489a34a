import json

import pytest

from toroidal_ff.spec_io import (SpecError, bundled_field, bundled_names, load_spec, loads_spec, parse_spec,
                                 spec_of)


def test_bundled_specs_round_trip():
    names = bundled_names()
    assert len(names) == 6
    for name in names:
        F = bundled_field(name)
        assert parse_spec(spec_of(F.curve)) == F.curve


def test_extension_field_entries():
    C = parse_spec({"p": 2, "k": 2, "model": "hyperelliptic", "f": [0, 0, [0, 1], 1], "h": [1]})
    assert C.f == (0, 0, 2, 1)
    assert parse_spec(spec_of(C)) == C


@pytest.mark.parametrize("data,where", [
    ({"p": 4, "model": "rational"}, "p:"),
    ({"p": 3, "k": 0, "model": "rational"}, "k:"),
    ({"p": 3, "model": "elliptic"}, "model:"),
    ({"p": 3, "model": "hyperelliptic"}, "f:"),
    ({"p": 3, "model": "hyperelliptic", "f": [0, 5, 0, 1]}, "f[1]"),
    ({"p": 3, "model": "hyperelliptic", "f": "x^3"}, "f:"),
    ({"p": 2, "k": 2, "model": "hyperelliptic", "f": [0, 0, 0, [1]], "h": [1]}, "f[3]"),
    ({"p": 3, "model": "hyperelliptic", "f": [0, 0, 0, 1]}, "singular"),
    ({"model": "rational"}, "p:"),
])
def test_errors_name_the_field(data, where):
    with pytest.raises(SpecError) as exc:
        parse_spec(data)
    assert where in str(exc.value)


def test_json_errors_give_a_location(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"p": 3,\n "model": }')
    with pytest.raises(SpecError) as exc:
        load_spec(path)
    assert "line 2" in str(exc.value)
    with pytest.raises(SpecError):
        load_spec(tmp_path / "missing.json")


def test_singular_model_can_be_loaded_unchecked():
    C = loads_spec(json.dumps({"p": 3, "model": "hyperelliptic", "f": [0, 0, 0, 1]}), check=False)
    assert not C.is_nonsingular()
