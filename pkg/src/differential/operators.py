"""
Differential Operators Module
Monoides de operadores Θ(R) (palavras) e Θ^ab(R) (multi-índices),
coeficientes binomiais generalizados, fórmula de Kolchin-Leibniz e boas ordens
"""

from dataclasses import dataclass
from enum import Enum
from itertools import product
from math import comb
from typing import Iterator, List, Tuple

from .ring import DiffRing, is_partial
from ..algebra.polynomial import Poly
from ..utils.errors import NonCommutingError


@dataclass(frozen=True)
class ThetaWord:
    """
    Palavra θ = ∂_{i1}∂_{i2}...∂_{in} do monoide livre Θ(R)

    Attributes:
        indices (tuple): Índices das derivações, da esquerda para a direita
    """
    indices: Tuple[int, ...] = ()

    @property
    def order(self) -> int:
        """Ordem e(θ)"""
        return len(self.indices)

    def __mul__(self, other: "ThetaWord") -> "ThetaWord":
        return ThetaWord(self.indices + other.indices)

    def to_ab(self, ndelta: int) -> "ThetaAb":
        """Multi-índice da palavra"""
        exps = [0] * ndelta
        for i in self.indices:
            exps[i] += 1
        return ThetaAb(tuple(exps))

    def __str__(self):
        if not self.indices:
            return "1"
        return "".join(f"∂{i + 1}" for i in self.indices)


@dataclass(frozen=True)
class ThetaAb:
    """
    Elemento θ = ∏ ∂_i^{e_i} do monoide comutativo livre Θ^ab(R)

    Attributes:
        exps (tuple): Multi-índice (e_1, ..., e_d)
    """
    exps: Tuple[int, ...]

    def __post_init__(self):
        if any(e < 0 for e in self.exps):
            raise ValueError(f"Multi-índice negativo: {self.exps}")

    @classmethod
    def unit(cls, ndelta: int) -> "ThetaAb":
        return cls((0,) * ndelta)

    @classmethod
    def single(cls, i: int, ndelta: int) -> "ThetaAb":
        return cls(tuple(1 if j == i else 0 for j in range(ndelta)))

    @property
    def order(self) -> int:
        return sum(self.exps)

    def __mul__(self, other: "ThetaAb") -> "ThetaAb":
        _check_arity(self, other)
        return ThetaAb(tuple(a + b for a, b in zip(self.exps, other.exps)))

    def divides(self, other: "ThetaAb") -> bool:
        """True se self divide other"""
        return all(a <= b for a, b in zip(self.exps, other.exps))

    def quotient(self, other: "ThetaAb") -> "ThetaAb":
        """self / other (exige other | self)"""
        return ThetaAb(tuple(a - b for a, b in zip(self.exps, other.exps)))

    def divisors(self) -> Iterator["ThetaAb"]:
        for exps in product(*(range(e + 1) for e in self.exps)):
            yield ThetaAb(exps)

    def to_word(self) -> ThetaWord:
        """Uma palavra que representa o multi-índice"""
        return ThetaWord(tuple(i for i, e in enumerate(self.exps) for _ in range(e)))

    def __str__(self):
        parts = [f"∂{i + 1}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(self.exps) if e]
        return "".join(parts) or "1"


class ThetaOrder(Enum):
    """Boas ordens de Θ^ab(R)"""
    LEX = "lex"
    KEIGHER = "keigher"


def _check_arity(a: ThetaAb, b: ThetaAb):
    if len(a.exps) != len(b.exps):
        raise ValueError(f"Aridades diferentes: {a.exps} e {b.exps}")


def theta_key(theta: ThetaAb, order: ThetaOrder) -> tuple:
    if order is ThetaOrder.KEIGHER:
        return (theta.order, theta.exps)
    return theta.exps


def theta_compare(a: ThetaAb, b: ThetaAb, order: ThetaOrder = ThetaOrder.KEIGHER) -> int:
    """
    Compara dois multi-índices

    Args:
        a: Primeiro operador
        b: Segundo operador
        order: LEX (primeira coordenada dominante) ou KEIGHER (ordem e(θ) primeiro)

    Returns:
        int: -1, 0 ou 1
    """
    _check_arity(a, b)
    ka, kb = theta_key(a, order), theta_key(b, order)
    return (ka > kb) - (ka < kb)


def theta_binomial(theta: ThetaAb, sub: ThetaAb) -> int:
    """
    Binomial generalizado ∏ C(e_i(θ), e_i(θ')), nulo se θ' não divide θ

    Args:
        theta: θ
        sub: θ'

    Returns:
        int: Coeficiente
    """
    _check_arity(theta, sub)
    if not sub.divides(theta):
        return 0
    result = 1
    for a, b in zip(theta.exps, sub.exps):
        result *= comb(a, b)
    return result


def words_up_to(ndelta: int, max_order: int) -> Iterator[ThetaWord]:
    """Todas as palavras de ordem ≤ max_order (em ordem crescente de ordem)"""
    for n in range(max_order + 1):
        for indices in product(range(ndelta), repeat=n):
            yield ThetaWord(indices)


def multi_indices_up_to(ndelta: int, max_order: int) -> List[ThetaAb]:
    """Todos os multi-índices de ordem ≤ max_order"""
    out = [ThetaAb(exps) for exps in product(range(max_order + 1), repeat=ndelta)
           if sum(exps) <= max_order]
    return sorted(out, key=lambda t: theta_key(t, ThetaOrder.KEIGHER))


def apply_theta(f: Poly, theta: ThetaWord, R: DiffRing) -> Poly:
    """
    Aplica a palavra θ a f; em ∂_a∂_b, ∂_b é aplicada primeiro

    Args:
        f: Polinômio
        theta: Palavra de Θ(R)
        R: Δ-anel

    Returns:
        Poly: θ(f) reduzido módulo Q
    """
    result = R.reduce(f)
    for i in reversed(theta.indices):
        if result.is_zero():
            break
        result = R.derive(result, i)
    return result


def apply_ab(f: Poly, theta: ThetaAb, R: DiffRing) -> Poly:
    """Aplica um multi-índice (exige Δ-anel parcial)"""
    if not is_partial(R):
        raise NonCommutingError("Multi-índices só agem em Δ-anéis parciais")
    return apply_theta(f, theta.to_word(), R)


def leibniz_expand(f: Poly, g: Poly, theta: ThetaAb, R: DiffRing) -> Poly:
    """
    Lado direito da fórmula de Kolchin-Leibniz: Σ_{θ1θ2=θ} C(θ,θ1)·θ1(f)·θ2(g)

    Args:
        f: Primeiro fator
        g: Segundo fator
        theta: Multi-índice
        R: Δ-anel parcial

    Returns:
        Poly: Soma reduzida módulo Q
    """
    if not is_partial(R):
        raise NonCommutingError("A fórmula de Kolchin-Leibniz exige derivações que comutam")
    if len(theta.exps) != R.ndelta:
        raise ValueError(f"Multi-índice {theta.exps} com aridade diferente de {R.ndelta}")
    cache_f = {}
    cache_g = {}
    total = R.ring.zero()
    for left in theta.divisors():
        right = theta.quotient(left)
        coeff = theta_binomial(theta, left)
        if left not in cache_f:
            cache_f[left] = apply_theta(f, left.to_word(), R)
        if right not in cache_g:
            cache_g[right] = apply_theta(g, right.to_word(), R)
        if cache_f[left].is_zero() or cache_g[right].is_zero():
            continue
        total = total + (cache_f[left] * cache_g[right]).scale(coeff)
    return R.reduce(total)
