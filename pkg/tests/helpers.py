"""Atalhos de leitura usados pelos testes"""

from typing import Union

from src.algebra.ideal import Ideal
from src.algebra.polynomial import Poly, PolyRing
from src.differential.ring import DiffRing
from src.protocols.poly_grammar import parse_poly, parse_poly_list


def _ring(R: Union[DiffRing, PolyRing]) -> PolyRing:
    return R.ring if isinstance(R, DiffRing) else R


def poly(R: Union[DiffRing, PolyRing], text: str) -> Poly:
    return parse_poly(text, _ring(R))


def ideal(R: Union[DiffRing, PolyRing], text: str) -> Ideal:
    """Ideal de R (com o quociente, se R for um Δ-anel)"""
    gens = parse_poly_list(text, _ring(R))
    if isinstance(R, DiffRing):
        return R.ideal(gens)
    return Ideal(R, gens)
