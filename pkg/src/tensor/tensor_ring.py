"""
Tensor Ring Module
Anel A ⊗_C K com K = C[t], t' = 1, e A com derivações nulas
Realizado como o Δ-anel A[t] com ∂(t) = 1; elementos na base canônica das potências de t
"""

from itertools import combinations
from typing import Dict, Iterable, List, Tuple

from .ore import LinDiffOp, op_apply
from ..algebra.fields import QQ
from ..algebra.polynomial import Poly, PolyRing
from ..differential.ring import DerivationSpec, DiffRing
from ..utils.errors import CharacteristicError, RingMismatchError
from ..utils.linalg import rank, rref


class TensorRing:
    """
    Anel tensorial A ⊗_C C[t]

    Attributes:
        base (PolyRing): A = C[variáveis]
        t (str): Nome da variável de K
        K (PolyRing): C[t]
        realization (DiffRing): A[t] com ∂(t) = 1 e ∂(A) = 0
    """

    def __init__(self, base: PolyRing, t: str = "t"):
        """
        Cria o anel tensorial

        Args:
            base: Anel A sobre Q
            t: Nome reservado da variável de K
        """
        if base.field != QQ:
            raise CharacteristicError("O anel tensorial exige C = Q")
        if base.has_variable(t):
            raise RingMismatchError(f"{t!r} é reservado para K e não pode ser variável de A")
        self.base = base
        self.t = t
        self.K = PolyRing(base.field, [t])
        ring = base.with_variables([t])
        self.realization = DiffRing(ring, [DerivationSpec("d", {t: ring.one()})], name="tensor")

    @property
    def ring(self) -> PolyRing:
        return self.realization.ring

    @property
    def t_index(self) -> int:
        return self.ring.index(self.t)

    def t_power(self, k: int) -> Poly:
        return self.K.gen(0) ** k

    def elem(self, coeffs: Dict[int, Poly]) -> "TensorElem":
        return TensorElem(self, coeffs)

    def zero(self) -> "TensorElem":
        return TensorElem(self, {})

    def pure(self, a: Poly, lam: Poly) -> "TensorElem":
        """Tensor puro a ⊗ λ"""
        return TensorElem(self, {k: a.scale(c) for (k,), c in lam.terms.items()})

    def from_pairs(self, pairs: Iterable[Tuple[Poly, Poly]]) -> "TensorElem":
        """Σ a_i ⊗ λ_i"""
        total = self.zero()
        for a, lam in pairs:
            total = total + self.pure(a, lam)
        return total

    def from_poly(self, f: Poly) -> "TensorElem":
        """Elemento da realização A[t] reescrito como Σ a_k ⊗ t^k"""
        if f.ring != self.ring:
            raise RingMismatchError(f"{f} não pertence à realização {self.ring}")
        ti = self.t_index
        coeffs: Dict[int, Dict[tuple, object]] = {}
        for m, c in f.terms.items():
            rest = m[:ti] + m[ti + 1:]
            coeffs.setdefault(m[ti], {})[rest] = c
        return TensorElem(self, {k: Poly(self.base, terms, normalized=True) for k, terms in coeffs.items()})

    def __eq__(self, other):
        return isinstance(other, TensorRing) and self.base == other.base and self.t == other.t

    def __hash__(self):
        return hash((self.base, self.t))

    def __repr__(self):
        return f"TensorRing({self.base} ⊗ {self.K})"


class TensorElem:
    """
    x = Σ a_k ⊗ t^k (forma canônica: potência de t → coeficiente em A, sem zeros)

    Attributes:
        T (TensorRing): Anel tensorial
        coeffs (dict): k → a_k
    """

    def __init__(self, T: TensorRing, coeffs: Dict[int, Poly]):
        for a in coeffs.values():
            if a.ring != T.base:
                raise RingMismatchError(f"Coeficiente {a} fora de {T.base}")
        self.T = T
        self.coeffs = {k: a for k, a in coeffs.items() if not a.is_zero()}

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "TensorElem") -> "TensorElem":
        out = dict(self.coeffs)
        for k, a in other.coeffs.items():
            out[k] = out[k] + a if k in out else a
        return TensorElem(self.T, out)

    def __neg__(self) -> "TensorElem":
        return TensorElem(self.T, {k: -a for k, a in self.coeffs.items()})

    def __sub__(self, other: "TensorElem") -> "TensorElem":
        return self + (-other)

    def __eq__(self, other):
        return isinstance(other, TensorElem) and self.T == other.T and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.T, frozenset(self.coeffs.items())))

    def to_poly(self) -> Poly:
        """Imagem na realização A[t]"""
        t = self.T.ring.gen(self.T.t)
        total = self.T.ring.zero()
        for k, a in self.coeffs.items():
            total = total + a.embed(self.T.ring) * t ** k
        return total

    def apply(self, L: LinDiffOp) -> "TensorElem":
        """L̃•(a ⊗ λ) = a ⊗ (L•λ), estendido linearmente"""
        total = self.T.zero()
        for k, a in self.coeffs.items():
            total = total + self.T.pure(a, op_apply(L, self.T.t_power(k)))
        return total

    def __str__(self):
        if not self.coeffs:
            return "0"
        return " + ".join(f"({a})⊗{self.T.t}^{k}" if k else f"({a})⊗1"
                          for k, a in sorted(self.coeffs.items(), reverse=True))

    def __repr__(self):
        return f"TensorElem({self})"


def _coefficient_matrix(x: TensorElem) -> Tuple[List[int], List[tuple], List[list]]:
    powers = sorted(x.coeffs)
    monos = sorted({m for a in x.coeffs.values() for m in a.terms})
    matrix = [[x.coeffs[k].coefficient(m) for m in monos] for k in powers]
    return powers, monos, matrix


def tensor_length(x: TensorElem) -> int:
    """
    Comprimento ℓ(x): posto da família de coeficientes {a_k} sobre C

    Args:
        x: Elemento tensorial

    Returns:
        int: Número mínimo de tensores puros
    """
    if x.is_zero():
        return 0
    _, _, matrix = _coefficient_matrix(x)
    return rank(matrix, x.T.base.field)


def decompose(x: TensorElem) -> List[Tuple[Poly, Poly]]:
    """
    Decomposição de comprimento mínimo x = Σ a_i ⊗ λ_i (a's e λ's independentes)

    Os a_i são as linhas da forma escalonada dos coeficientes; λ_i recolhe as coordenadas.

    Args:
        x: Elemento tensorial

    Returns:
        list: Pares (a_i ∈ A, λ_i ∈ K), com ℓ(x) pares
    """
    if x.is_zero():
        return []
    T = x.T
    powers, monos, matrix = _coefficient_matrix(x)
    reduced, pivots = rref(matrix, T.base.field)
    pairs = []
    for row, col in zip(reduced, pivots):
        a = Poly(T.base, {m: c for m, c in zip(monos, row)})
        lam = Poly(T.K, {(k,): matrix[r][col] for r, k in enumerate(powers)})
        pairs.append((a, lam))
    return pairs


def length_by_search(x: TensorElem) -> int:
    """
    Comprimento pela definição: menor n com x = Σ_{i≤n} a_i ⊗ λ_i

    Para coeficientes sobre um corpo, n ≥ r sse existe um menor r×r não nulo da matriz
    de coeficientes e todos os menores maiores se anulam; esta versão testa os menores.
    """
    if x.is_zero():
        return 0
    _, _, matrix = _coefficient_matrix(x)
    field = x.T.base.field
    nrows, ncols = len(matrix), len(matrix[0])
    best = 0
    for r in range(1, min(nrows, ncols) + 1):
        found = False
        for rows in combinations(range(nrows), r):
            for cols in combinations(range(ncols), r):
                if _det([[matrix[i][j] for j in cols] for i in rows], field) != 0:
                    found = True
                    break
            if found:
                break
        if not found:
            break
        best = r
    return best


def _det(m: List[list], field) -> object:
    """Determinante por expansão de Laplace (matrizes pequenas)"""
    n = len(m)
    if n == 1:
        return field.normalize(m[0][0])
    total = 0
    for j in range(n):
        if m[0][j] == 0:
            continue
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        sign = -1 if j % 2 else 1
        total = field.normalize(total + sign * m[0][j] * _det(minor, field))
    return total
