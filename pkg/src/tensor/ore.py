"""
Ore Operators Module
Álgebra de Ore K[∂] sobre K = C[t] com t' = 1: produto com a regra ∂·a = a∂ + ∂(a),
ação sobre K, operador unidade (L•λ = 1) e operadores anuladores EqDiffLin_K(λ)
"""

from math import comb, factorial
from typing import Dict, List, Tuple

from ..algebra.polynomial import Poly, PolyRing
from ..utils.errors import RingMismatchError, ZeroDivisorArgumentError
from ..utils.linalg import kernel, rank


def _dt(lam: Poly, k: int = 1) -> Poly:
    """k-ésima derivada em K (t' = 1)"""
    for _ in range(k):
        if lam.is_zero():
            break
        lam = lam.diff(0)
    return lam


class LinDiffOp:
    """
    Operador L = Σ a_i·∂^i com coeficientes em K

    Attributes:
        ring (PolyRing): K = C[t]
        coeffs (dict): Ordem i → coeficiente a_i (sem zeros)
    """

    def __init__(self, ring: PolyRing, coeffs: Dict[int, Poly]):
        """
        Cria o operador

        Args:
            ring: Anel univariado K
            coeffs: Coeficientes por ordem
        """
        if ring.ngens != 1:
            raise RingMismatchError(f"K deve ser univariado, recebeu {ring}")
        for a in coeffs.values():
            if a.ring != ring:
                raise RingMismatchError(f"Coeficiente {a} fora de {ring}")
        self.ring = ring
        self.coeffs = {i: a for i, a in coeffs.items() if not a.is_zero()}

    @classmethod
    def scalar(cls, lam: Poly) -> "LinDiffOp":
        """Operador de ordem 0 (multiplicação por λ)"""
        return cls(lam.ring, {0: lam})

    @classmethod
    def d(cls, ring: PolyRing, order: int = 1) -> "LinDiffOp":
        """∂^order"""
        return cls(ring, {order: ring.one()})

    @property
    def order(self) -> int:
        return max(self.coeffs, default=-1)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "LinDiffOp") -> "LinDiffOp":
        out = dict(self.coeffs)
        for i, a in other.coeffs.items():
            out[i] = out.get(i, self.ring.zero()) + a
        return LinDiffOp(self.ring, out)

    def __sub__(self, other: "LinDiffOp") -> "LinDiffOp":
        return self + other.scale(-1)

    def scale(self, c) -> "LinDiffOp":
        return LinDiffOp(self.ring, {i: a.scale(c) for i, a in self.coeffs.items()})

    def __mul__(self, other: "LinDiffOp") -> "LinDiffOp":
        return ore_mul(self, other)

    def __eq__(self, other):
        return isinstance(other, LinDiffOp) and self.ring == other.ring and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ring, frozenset(self.coeffs.items())))

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i in sorted(self.coeffs, reverse=True):
            d = "" if i == 0 else ("∂" if i == 1 else f"∂^{i}")
            a = self.coeffs[i]
            if not d:
                parts.append(f"({a})")
            elif a == 1:
                parts.append(d)
            else:
                parts.append(f"({a})*{d}")
        return " + ".join(parts)

    def __repr__(self):
        return f"LinDiffOp({self})"


def ore_mul(L1: LinDiffOp, L2: LinDiffOp) -> LinDiffOp:
    """
    Produto em K[∂]: ∂^i·b = Σ_k C(i,k)·b^{(k)}·∂^{i-k}

    Args:
        L1: Fator da esquerda
        L2: Fator da direita

    Returns:
        LinDiffOp: L1·L2
    """
    if L1.ring != L2.ring:
        raise RingMismatchError(f"Operadores sobre anéis diferentes: {L1.ring} e {L2.ring}")
    ring = L1.ring
    out: Dict[int, Poly] = {}
    for i, a in L1.coeffs.items():
        for j, b in L2.coeffs.items():
            for k in range(i + 1):
                bk = _dt(b, k)
                if bk.is_zero():
                    break
                term = (a * bk).scale(comb(i, k))
                order = i - k + j
                out[order] = out.get(order, ring.zero()) + term
    return LinDiffOp(ring, out)


def op_apply(L: LinDiffOp, lam: Poly) -> Poly:
    """
    Ação L•λ = Σ a_i·λ^{(i)}

    Args:
        L: Operador
        lam: Elemento de K

    Returns:
        Poly: Elemento de K
    """
    if lam.ring != L.ring:
        raise RingMismatchError(f"{lam} não pertence a {L.ring}")
    result = L.ring.zero()
    for i, a in L.coeffs.items():
        di = _dt(lam, i)
        if not di.is_zero():
            result = result + a * di
    return result


def unit_operator(lam: Poly) -> LinDiffOp:
    """
    Operador com L•λ = 1: (1/(n!·lc(λ)))·∂^n, n = deg λ

    Args:
        lam: Elemento não nulo de K

    Returns:
        LinDiffOp: Operador unidade
    """
    if lam.is_zero():
        raise ZeroDivisorArgumentError("unit_operator exige λ ≠ 0")
    n = lam.degree()
    c = lam.ring.field.inv(factorial(n) * lam.lc())
    return LinDiffOp(lam.ring, {n: lam.ring.constant(c)})


def _op_unknowns(maxord: int, coeffdeg: int) -> List[Tuple[int, int]]:
    return [(i, m) for i in range(maxord + 1) for m in range(coeffdeg + 1)]


def ann_operator(lam: Poly, maxord: int, coeffdeg: int) -> List[LinDiffOp]:
    """
    Base de {L : ordem ≤ maxord, grau dos coeficientes ≤ coeffdeg, L•λ = 0}

    Args:
        lam: Elemento de K
        maxord: Ordem máxima
        coeffdeg: Grau máximo dos coeficientes

    Returns:
        list: Operadores linearmente independentes
    """
    ring = lam.ring
    unknowns = _op_unknowns(maxord, coeffdeg)
    rows: Dict[tuple, int] = {}
    columns = []
    for i, m in unknowns:
        column = {}
        image = ring.gen(0) ** m * _dt(lam, i)
        for mono, c in image.terms.items():
            rows.setdefault(mono, len(rows))
            column[mono] = c
        columns.append(column)
    matrix = [[0] * len(unknowns) for _ in rows]
    for j, column in enumerate(columns):
        for mono, c in column.items():
            matrix[rows[mono]][j] = c
    basis = []
    for v in kernel(matrix, len(unknowns), ring.field):
        coeffs: Dict[int, Poly] = {}
        for (i, m), c in zip(unknowns, v):
            if c != 0:
                term = Poly(ring, {(m,): c})
                coeffs[i] = coeffs.get(i, ring.zero()) + term
        basis.append(LinDiffOp(ring, coeffs))
    return basis


def _op_vector(L: LinDiffOp, index: Dict[tuple, int]) -> List:
    v = [0] * len(index)
    for i, a in L.coeffs.items():
        for (m,), c in a.terms.items():
            v[index[(i, m)]] = c
    return v


def in_span(L: LinDiffOp, basis: List[LinDiffOp]) -> bool:
    """True se L é combinação linear (sobre C) dos operadores da base"""
    ops = basis + [L]
    index: Dict[tuple, int] = {}
    for op in ops:
        for i, a in op.coeffs.items():
            for (m,) in a.terms:
                index.setdefault((i, m), len(index))
    rows = [_op_vector(op, index) for op in basis]
    field = L.ring.field
    return rank(rows + [_op_vector(L, index)], field) == rank(rows, field) if index else True
