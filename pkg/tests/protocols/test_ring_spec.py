import json

import pytest

from src.algebra.fields import PrimeField
from src.protocols.ring_spec import (BUILTIN_RINGS, builtin_ring, dump_ring, fixtures_from_json,
                                     fixtures_to_json, load_fixtures, load_ring, resolve_ring,
                                     ring_from_spec, ring_to_spec)
from src.utils.errors import IllDefinedDerivationError, SpecValidationError, UsageError
from tests.helpers import ideal, poly


@pytest.mark.parametrize("name", sorted(BUILTIN_RINGS))
def test_builtin_rings_build(name):
    R = builtin_ring(name)
    assert R.name == name
    spec = ring_to_spec(R)
    assert ring_to_spec(ring_from_spec(spec)) == spec


def test_euler_spec_is_canonical():
    assert ring_to_spec(builtin_ring("euler")) == {
        "field": {"type": "Q"},
        "vars": ["x", "y"],
        "derivations": [{"name": "d", "images": {"x": "x", "y": "y"}}],
        "name": "euler",
    }


def test_quotient_survives_spec(nilsquare):
    spec = ring_to_spec(nilsquare)
    assert spec["quotient"] == ["x^2"]
    assert spec["field"] == {"type": "Fp", "p": 2}
    again = ring_from_spec(spec)
    assert again.field == PrimeField(2)
    assert again.reduce(poly(again, "x^3 + x")) == poly(again, "x")


@pytest.mark.parametrize("bad", [
    {"vars": ["x"], "derivations": []},
    {"field": {"type": "R"}, "vars": ["x"], "derivations": []},
    {"field": {"type": "Fp"}, "vars": ["x"], "derivations": []},
    {"field": {"type": "Q"}, "vars": ["x", "x"], "derivations": []},
    {"field": {"type": "Q"}, "vars": ["1x"], "derivations": []},
    {"field": {"type": "Q"}, "vars": ["x"], "derivations": [{"images": {"x": "1"}}]},
    {"field": {"type": "Q"}, "vars": ["x"], "derivations": [], "extra": 1},
    {"field": {"type": "Q"}, "vars": ["x"], "derivations": [{"name": "d", "images": {"y": "1"}}]},
])
def test_invalid_specs(bad):
    with pytest.raises(SpecValidationError) as info:
        ring_from_spec(bad)
    assert info.value.exit_code == 2


def test_derivation_must_respect_quotient():
    spec = {"field": {"type": "Q"}, "vars": ["x"], "quotient": ["x^2"],
            "derivations": [{"name": "d", "images": {"x": "1"}}]}
    with pytest.raises(IllDefinedDerivationError):
        ring_from_spec(spec)


def test_unknown_builtin():
    with pytest.raises(UsageError):
        builtin_ring("torus")
    with pytest.raises(UsageError):
        resolve_ring("nao-existe.json")


def test_files_round_trip(tmp_path, euler):
    path = tmp_path / "euler.json"
    dump_ring(euler, str(path))
    assert ring_to_spec(load_ring(str(path))) == ring_to_spec(euler)
    assert ring_to_spec(resolve_ring(str(path))) == ring_to_spec(euler)

    broken = tmp_path / "broken.json"
    broken.write_text("{field:", encoding="utf-8")
    with pytest.raises(SpecValidationError):
        load_ring(str(broken))


def test_fixtures(tmp_path, plane):
    data = [{"name": "origin", "generators": ["x", "y"], "asserted": "prime"},
            {"name": "axis", "generators": ["y"]}]
    fixtures = fixtures_from_json(data, plane)
    assert fixtures["origin"] == ideal(plane, "y, x")
    assert fixtures_to_json({"axis": fixtures["axis"]}) == [
        {"name": "axis", "generators": ["y"], "asserted": "prime"}]

    path = tmp_path / "fixtures.json"
    path.write_text(json.dumps(data), encoding="utf-8")
    assert set(load_fixtures(str(path), plane)) == {"origin", "axis"}

    with pytest.raises(SpecValidationError):
        fixtures_from_json([{"name": "p", "generators": ["x"], "asserted": "radical"}], plane)
