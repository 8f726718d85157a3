"""
Constants Module
Anel de constantes truncado por grau e o algoritmo de constantes de frações do corpo radial x' = x
"""

from dataclasses import dataclass
from typing import List, Optional

from .ring import DiffRing, graded_stable
from ..algebra.fields import Scalar
from ..algebra.orders import DEGREVLEX, mono_divides
from ..algebra.polynomial import Poly
from ..utils.errors import RingMismatchError, ZeroDivisorArgumentError
from ..utils.linalg import kernel


def standard_monomials(R: DiffRing, degree: int) -> list:
    """Monômios de grau ≤ degree fora do ideal inicial de Q (base de R truncado)"""
    leads = [g.lm(DEGREVLEX) for g in R.quotient.groebner()]
    return [m for m in R.ring.monomials_up_to(degree)
            if not any(mono_divides(lead, m) for lead in leads)]


def constants_truncated(R: DiffRing, degree: int) -> List[Poly]:
    """
    Base do espaço {f : deg f ≤ D, ∂_i(f) ≡ 0 mod Q para todo i}

    Args:
        R: Δ-anel
        degree: Cota D ≥ 0

    Returns:
        list: Polinômios linearmente independentes módulo Q
    """
    if degree < 0:
        raise ValueError("A cota de grau deve ser não negativa")
    basis = standard_monomials(R, degree)
    images = []
    rows_index = {}
    for m in basis:
        mono = Poly(R.ring, {m: 1}, normalized=True)
        column = {}
        for i in range(R.ndelta):
            for out, c in R.derive(mono, i).terms.items():
                key = (i, out)
                rows_index.setdefault(key, len(rows_index))
                column[key] = c
        images.append(column)
    matrix = [[0] * len(basis) for _ in rows_index]
    for j, column in enumerate(images):
        for key, c in column.items():
            matrix[rows_index[key]][j] = c
    vectors = kernel(matrix, len(basis), R.field)
    return [Poly(R.ring, {m: c for m, c in zip(basis, v)}) for v in vectors]


def constants_are_exact(R: DiffRing) -> bool:
    """True se a truncagem descreve todo o anel (derivações graduadas)"""
    return graded_stable(R)


@dataclass(frozen=True)
class FractionConstancy:
    """
    Resultado do teste de constância de f/g

    Attributes:
        constant (bool): Se f/g é constante
        value: Valor de f/g quando constante
    """
    constant: bool
    value: Optional[Scalar] = None


def _is_radial(R: DiffRing) -> bool:
    if R.ring.ngens != 1 or R.ndelta != 1 or R.has_quotient or R.characteristic != 0:
        return False
    x = R.ring.gen(0)
    return R.derive(x, 0) == x


def check_constant_fraction(f: Poly, g: Poly, R: DiffRing) -> FractionConstancy:
    """
    Decide se f/g é constante no corpo de frações do anel radial Q[x], x' = x

    Se f'g - fg' = 0, reduz f/g = (f' - n·f)/(g' - n·g) com n = deg f até g ser um monômio.

    Args:
        f: Numerador
        g: Denominador não nulo
        R: Anel radial

    Returns:
        FractionConstancy: Constante c ou não constante
    """
    if not _is_radial(R):
        raise RingMismatchError("check_constant_fraction exige o corpo radial Q[x], x' = x")
    if g.is_zero():
        raise ZeroDivisorArgumentError("Denominador nulo")
    if f.is_zero():
        return FractionConstancy(True, 0)
    if not (R.derive(f, 0) * g - f * R.derive(g, 0)).is_zero():
        return FractionConstancy(False)
    while True:
        n = f.degree()
        g_next = R.derive(g, 0) - g.scale(n)
        if g_next.is_zero():
            return FractionConstancy(True, R.field.div(f.lc(), g.lc()))
        f = R.derive(f, 0) - f.scale(n)
        g = g_next
