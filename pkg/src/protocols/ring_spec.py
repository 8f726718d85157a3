"""
Ring Spec Module
Formato JSON dos Δ-anéis (RingSpec) e dos arquivos de fixtures, validados por jsonschema
Inclui os anéis embutidos usados pela CLI sem arquivo
"""

import json
from copy import deepcopy
from typing import Any, Dict, List, Optional, Union

import jsonschema

from .poly_grammar import parse_poly
from ..algebra.fields import field_from_json
from ..algebra.ideal import Ideal
from ..algebra.polynomial import PolyRing, format_poly
from ..differential.ring import DerivationSpec, DiffRing
from ..utils.errors import SpecValidationError, UsageError

IDENTIFIER_PATTERN = "^[A-Za-z_][A-Za-z0-9_]*$"

RING_SCHEMA: Dict[str, Any] = {
    "type": "object",
    "required": ["field", "vars", "derivations"],
    "properties": {
        "name": {"type": "string"},
        "field": {
            "oneOf": [
                {"type": "object", "required": ["type"], "additionalProperties": False,
                 "properties": {"type": {"const": "Q"}}},
                {"type": "object", "required": ["type", "p"], "additionalProperties": False,
                 "properties": {"type": {"const": "Fp"}, "p": {"type": "integer", "minimum": 2}}},
            ]
        },
        "vars": {"type": "array", "uniqueItems": True,
                 "items": {"type": "string", "pattern": IDENTIFIER_PATTERN}},
        "derivations": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["name", "images"],
                "additionalProperties": False,
                "properties": {
                    "name": {"type": "string"},
                    "images": {"type": "object",
                               "propertyNames": {"pattern": IDENTIFIER_PATTERN},
                               "additionalProperties": {"type": "string"}},
                },
            },
        },
        "quotient": {"type": "array", "items": {"type": "string"}},
    },
    "additionalProperties": False,
}

FIXTURES_SCHEMA: Dict[str, Any] = {
    "type": "array",
    "items": {
        "type": "object",
        "required": ["name", "generators"],
        "additionalProperties": False,
        "properties": {
            "name": {"type": "string"},
            "generators": {"type": "array", "items": {"type": "string"}},
            "asserted": {"enum": ["prime"]},
        },
    },
}


def _validate(data: Any, schema: Dict[str, Any], what: str):
    try:
        jsonschema.validate(data, schema)
    except jsonschema.ValidationError as exc:
        path = "/".join(str(p) for p in exc.absolute_path) or "<raiz>"
        raise SpecValidationError(f"{what} inválido em {path}: {exc.message}") from None


def validate_ring_spec(data: Any):
    """Valida um RingSpec contra RING_SCHEMA (SpecValidationError se inválido)"""
    _validate(data, RING_SCHEMA, "RingSpec")


def ring_from_spec(data: Dict[str, Any]) -> DiffRing:
    """
    Constrói o Δ-anel descrito

    Args:
        data: RingSpec

    Returns:
        DiffRing: Anel com derivações verificadas no quociente
    """
    validate_ring_spec(data)
    field = field_from_json(data["field"])
    ring = PolyRing(field, data["vars"])
    derivations = []
    for spec in data["derivations"]:
        images = {}
        for var, text in spec["images"].items():
            if not ring.has_variable(var):
                raise SpecValidationError(f"Derivação {spec['name']!r}: variável {var!r} não declarada")
            images[var] = parse_poly(text, ring)
        derivations.append(DerivationSpec(spec["name"], images))
    quotient = [parse_poly(text, ring) for text in data.get("quotient", [])]
    return DiffRing(ring, derivations, quotient, name=data.get("name", ""))


def ring_to_spec(R: DiffRing) -> Dict[str, Any]:
    """
    RingSpec canônico de um Δ-anel

    Args:
        R: Δ-anel

    Returns:
        dict: RingSpec (inverso de ring_from_spec)
    """
    data: Dict[str, Any] = {
        "field": R.field.to_json(),
        "vars": list(R.ring.variables),
        "derivations": [
            {"name": d.name, "images": {v: format_poly(d.image(v, R.ring))
                                        for v in R.ring.variables if v in d.images}}
            for d in R.derivations
        ],
    }
    if R.has_quotient:
        data["quotient"] = [format_poly(g) for g in R.quotient.gens]
    if R.name:
        data["name"] = R.name
    return data


def load_ring(path: str) -> DiffRing:
    """Lê um RingSpec de arquivo JSON (UTF-8)"""
    try:
        with open(path, "r", encoding="utf-8") as f:
            data = json.load(f)
    except OSError as exc:
        raise UsageError(f"Não foi possível ler {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise SpecValidationError(f"JSON inválido em {path}: {exc}") from None
    return ring_from_spec(data)


def dump_ring(R: DiffRing, path: str):
    with open(path, "w", encoding="utf-8") as f:
        json.dump(ring_to_spec(R), f, ensure_ascii=False, indent=2)


def fixtures_from_json(data: Any, R: DiffRing) -> Dict[str, Ideal]:
    """
    Primos nomeados de um arquivo de fixtures

    Args:
        data: Lista [{name, generators[], asserted: "prime"}]
        R: Anel dos geradores

    Returns:
        dict: Nome → ideal
    """
    _validate(data, FIXTURES_SCHEMA, "Fixtures")
    return {item["name"]: Ideal(R.ring, [parse_poly(g, R.ring) for g in item["generators"]])
            for item in data}


def fixtures_to_json(fixtures: Dict[str, Ideal]) -> List[Dict[str, Any]]:
    return [{"name": name, "generators": [format_poly(g) for g in I.gens], "asserted": "prime"}
            for name, I in fixtures.items()]


def load_fixtures(path: str, R: DiffRing) -> Dict[str, Ideal]:
    """Lê um arquivo de fixtures"""
    try:
        with open(path, "r", encoding="utf-8") as f:
            data = json.load(f)
    except OSError as exc:
        raise UsageError(f"Não foi possível ler {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise SpecValidationError(f"JSON inválido em {path}: {exc}") from None
    return fixtures_from_json(data, R)


_Q = {"type": "Q"}
_F2 = {"type": "Fp", "p": 2}

BUILTIN_RINGS: Dict[str, Dict[str, Any]] = {
    "line": {"field": _Q, "vars": ["x"], "derivations": [{"name": "d", "images": {"x": "1"}}]},
    "radial": {"field": _Q, "vars": ["x"], "derivations": [{"name": "d", "images": {"x": "x"}}]},
    "zero": {"field": _Q, "vars": ["x"], "derivations": [{"name": "d", "images": {}}]},
    "plane": {"field": _Q, "vars": ["x", "y"],
              "derivations": [{"name": "dx", "images": {"x": "1"}}, {"name": "dy", "images": {"y": "1"}}]},
    "euler": {"field": _Q, "vars": ["x", "y"],
              "derivations": [{"name": "d", "images": {"x": "x", "y": "y"}}]},
    "charp-line": {"field": _F2, "vars": ["x"], "derivations": [{"name": "d", "images": {"x": "1"}}]},
    "nilsquare": {"field": _F2, "vars": ["x"], "quotient": ["x^2"],
                  "derivations": [{"name": "d", "images": {"x": "1"}}]},
    "dual-q": {"field": _Q, "vars": ["x", "y"], "quotient": ["x^2", "x*y", "y^2"],
               "derivations": [{"name": "d", "images": {"x": "y"}}]},
    "dual-f2": {"field": _F2, "vars": ["x", "y"], "quotient": ["x^2", "x*y", "y^2"],
                "derivations": [{"name": "d", "images": {"x": "y"}}]},
    "uv": {"field": _Q, "vars": ["u", "v"], "derivations": []},
    "tensor-uv": {"field": _Q, "vars": ["u", "v", "t"], "derivations": [{"name": "d", "images": {"t": "1"}}]},
}


def builtin_ring(name: str) -> DiffRing:
    """
    Anel embutido pelo nome

    Args:
        name: Um de BUILTIN_RINGS

    Returns:
        DiffRing: Anel construído
    """
    if name not in BUILTIN_RINGS:
        raise UsageError(f"Anel embutido desconhecido {name!r}; opções: {', '.join(sorted(BUILTIN_RINGS))}")
    data = deepcopy(BUILTIN_RINGS[name])
    data["name"] = name
    return ring_from_spec(data)


def resolve_ring(ref: Union[str, Dict[str, Any]], builtin: Optional[bool] = None) -> DiffRing:
    """
    Anel a partir de um nome embutido, de um caminho JSON ou de um RingSpec já carregado

    Args:
        ref: Nome, caminho ou dicionário
        builtin: Força a interpretação como nome embutido (True) ou arquivo (False)

    Returns:
        DiffRing: Anel
    """
    if isinstance(ref, dict):
        return ring_from_spec(ref)
    if builtin or (builtin is None and ref in BUILTIN_RINGS):
        return builtin_ring(ref)
    return load_ring(ref)
