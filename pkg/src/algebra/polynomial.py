"""
Polynomial Module
Polinômios multivariados esparsos com coeficientes exatos (Q ou F_p)
Portador universal dos elementos de anel usados pelas camadas diferenciais
"""

import re
from itertools import combinations_with_replacement
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from .fields import Field, Scalar, QQ
from .orders import DEGREVLEX, Monomial, MonomialOrder, mono_mul
from ..utils.config import get_limits
from ..utils.errors import RingMismatchError, ResourceCapError

_IDENTIFIER = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")


class PolyRing:
    """
    Anel de polinômios k[x_1, ..., x_n]

    Attributes:
        field (Field): Corpo de coeficientes
        variables (tuple): Nomes das variáveis, na ordem dos expoentes
    """

    def __init__(self, field: Field, variables: Sequence[str]):
        """
        Cria o anel

        Args:
            field: Corpo de coeficientes (QQ ou PrimeField)
            variables: Nomes distintos de variáveis
        """
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise ValueError(f"Variáveis repetidas: {variables}")
        for name in variables:
            if not _IDENTIFIER.match(name):
                raise ValueError(f"Nome de variável inválido: {name!r}")
        self.field = field
        self.variables = variables
        self.ngens = len(variables)
        self._index = {name: i for i, name in enumerate(variables)}
        self._hash = hash((field, variables))

    def index(self, name: str) -> int:
        """Índice da variável `name`"""
        try:
            return self._index[name]
        except KeyError:
            raise RingMismatchError(f"Variável {name!r} não pertence ao anel {self}") from None

    def has_variable(self, name: str) -> bool:
        return name in self._index

    @property
    def one_monomial(self) -> Monomial:
        return (0,) * self.ngens

    def zero(self) -> "Poly":
        return Poly(self, {})

    def one(self) -> "Poly":
        return Poly(self, {self.one_monomial: 1})

    def constant(self, c: Scalar) -> "Poly":
        return Poly(self, {self.one_monomial: c})

    def gen(self, name: Union[str, int]) -> "Poly":
        """Variável como polinômio"""
        i = name if isinstance(name, int) else self.index(name)
        mono = tuple(1 if j == i else 0 for j in range(self.ngens))
        return Poly(self, {mono: 1})

    def gens(self) -> List["Poly"]:
        return [self.gen(i) for i in range(self.ngens)]

    def monomial(self, exponents: Dict[str, int]) -> Monomial:
        """Monômio a partir de um mapa nome → expoente"""
        mono = [0] * self.ngens
        for name, e in exponents.items():
            mono[self.index(name)] = e
        return tuple(mono)

    def fresh_variable(self, base: str = "y") -> str:
        """Nome de variável ainda não usado (base, base1, base2, ...)"""
        if base not in self._index:
            return base
        k = 1
        while f"{base}{k}" in self._index:
            k += 1
        return f"{base}{k}"

    def with_variables(self, names: Sequence[str], front: bool = False) -> "PolyRing":
        """
        Anel com variáveis adicionais

        Args:
            names: Novas variáveis
            front: Se True, as novas variáveis vêm antes das existentes

        Returns:
            PolyRing: Anel estendido
        """
        names = tuple(names)
        return PolyRing(self.field, names + self.variables if front else self.variables + names)

    def without(self, names: Iterable[str]) -> "PolyRing":
        """Anel sem as variáveis dadas (ordem das restantes preservada)"""
        drop = set(names)
        return PolyRing(self.field, [v for v in self.variables if v not in drop])

    def monomials_up_to(self, degree: int) -> List[Monomial]:
        """
        Todos os monômios de grau total ≤ degree

        Args:
            degree: Grau máximo

        Returns:
            list: Monômios em ordem degrevlex crescente
        """
        monos = []
        n = self.ngens
        for d in range(degree + 1):
            for combo in combinations_with_replacement(range(n), d):
                mono = [0] * n
                for i in combo:
                    mono[i] += 1
                monos.append(tuple(mono))
        if n == 0:
            monos = [()]
        return sorted(set(monos), key=DEGREVLEX.key)

    def __eq__(self, other):
        return isinstance(other, PolyRing) and self.field == other.field and self.variables == other.variables

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"{self.field!r}[{', '.join(self.variables)}]"


class Poly:
    """
    Polinômio esparso: mapa monômio → coeficiente não nulo

    Attributes:
        ring (PolyRing): Anel ao qual pertence
        terms (dict): Monômio (tupla de expoentes) → coeficiente
    """

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolyRing, terms: Dict[Monomial, Scalar], normalized: bool = False):
        """
        Cria o polinômio

        Args:
            ring: Anel
            terms: Coeficientes por monômio
            normalized: Se True, os coeficientes já estão reduzidos e não nulos
        """
        if not normalized:
            norm = ring.field.normalize
            terms = {m: c for m, c in ((m, norm(c)) for m, c in terms.items()) if c != 0}
        if len(terms) > get_limits().max_terms:
            raise ResourceCapError(f"Polinômio com {len(terms)} termos", cap="max_terms", value=len(terms))
        self.ring = ring
        self.terms = terms
        self._hash = None

    # ------------------------------------------------------------------
    # aritmética
    # ------------------------------------------------------------------
    def _check(self, other: "Poly"):
        if self.ring != other.ring:
            raise RingMismatchError(f"Anéis diferentes: {self.ring} e {other.ring}")

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            self._check(other)
            return other
        if isinstance(other, (int,)) or hasattr(other, "denominator"):
            return self.ring.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        norm = self.ring.field.normalize
        result = dict(self.terms)
        for m, c in other.terms.items():
            s = norm(result.get(m, 0) + c)
            if s == 0:
                result.pop(m, None)
            else:
                result[m] = s
        return Poly(self.ring, result, normalized=True)

    __radd__ = __add__

    def __neg__(self):
        norm = self.ring.field.normalize
        return Poly(self.ring, {m: norm(-c) for m, c in self.terms.items()}, normalized=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def scale(self, c: Scalar) -> "Poly":
        """Multiplicação por escalar"""
        c = self.ring.field.normalize(c)
        if c == 0:
            return self.ring.zero()
        norm = self.ring.field.normalize
        return Poly(self.ring, {m: norm(v * c) for m, v in self.terms.items()})

    def mul_term(self, mono: Monomial, c: Scalar) -> "Poly":
        """Multiplicação pelo termo c·x^mono"""
        if c == 0 or not self.terms:
            return self.ring.zero()
        self._check_degree(self.degree() + sum(mono))
        norm = self.ring.field.normalize
        return Poly(self.ring, {mono_mul(m, mono): norm(v * c) for m, v in self.terms.items()})

    def _check_degree(self, degree: int):
        cap = get_limits().max_degree
        if degree > cap:
            raise ResourceCapError(f"Grau {degree} excede o limite {cap}", cap="max_degree", value=degree)

    def __mul__(self, other):
        if not isinstance(other, Poly):
            if isinstance(other, int) or hasattr(other, "denominator"):
                return self.scale(other)
            return NotImplemented
        self._check(other)
        if not self.terms or not other.terms:
            return self.ring.zero()
        self._check_degree(self.degree() + other.degree())
        result: Dict[Monomial, Scalar] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                result[m] = result.get(m, 0) + c1 * c2
        return Poly(self.ring, result)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("Expoente deve ser inteiro não negativo")
        if n and self.terms:
            self._check_degree(self.degree() * n)
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # ------------------------------------------------------------------
    # consultas
    # ------------------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and self.ring.one_monomial in self.terms)

    def constant_value(self) -> Scalar:
        """Termo constante"""
        return self.terms.get(self.ring.one_monomial, 0)

    def degree(self) -> int:
        """Grau total (-1 para o polinômio nulo)"""
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def degree_in(self, name: str) -> int:
        """Grau na variável `name` (-1 para o nulo)"""
        i = self.ring.index(name)
        if not self.terms:
            return -1
        return max(m[i] for m in self.terms)

    def used_variables(self) -> List[str]:
        return [v for i, v in enumerate(self.ring.variables) if any(m[i] for m in self.terms)]

    def coefficient(self, mono: Monomial) -> Scalar:
        return self.terms.get(mono, 0)

    def lm(self, order: MonomialOrder = DEGREVLEX) -> Monomial:
        """Monômio líder"""
        return max(self.terms, key=order.key)

    def lc(self, order: MonomialOrder = DEGREVLEX) -> Scalar:
        """Coeficiente líder"""
        return self.terms[self.lm(order)]

    def monic(self, order: MonomialOrder = DEGREVLEX) -> "Poly":
        if not self.terms:
            return self
        return self.scale(self.ring.field.inv(self.lc(order)))

    def sorted_terms(self, order: MonomialOrder = DEGREVLEX) -> List[Tuple[Monomial, Scalar]]:
        """Termos em ordem decrescente"""
        return sorted(self.terms.items(), key=lambda mc: order.key(mc[0]), reverse=True)

    # ------------------------------------------------------------------
    # transformações
    # ------------------------------------------------------------------
    def diff(self, name: Union[str, int]) -> "Poly":
        """Derivada parcial ∂/∂name"""
        i = name if isinstance(name, int) else self.ring.index(name)
        result: Dict[Monomial, Scalar] = {}
        for m, c in self.terms.items():
            e = m[i]
            if e:
                mono = m[:i] + (e - 1,) + m[i + 1:]
                result[mono] = result.get(mono, 0) + c * e
        return Poly(self.ring, result)

    def substitute(self, values: Dict[str, "Poly"]) -> "Poly":
        """
        Substitui variáveis por polinômios do mesmo anel

        Args:
            values: Nome da variável → polinômio (ou escalar)

        Returns:
            Poly: Resultado da substituição
        """
        idx = {self.ring.index(name): (v if isinstance(v, Poly) else self.ring.constant(v))
               for name, v in values.items()}
        powers: Dict[Tuple[int, int], Poly] = {}
        result = self.ring.zero()
        for m, c in self.terms.items():
            rest = tuple(0 if i in idx else e for i, e in enumerate(m))
            term = Poly(self.ring, {rest: c}, normalized=True)
            for i, e in enumerate(m):
                if i in idx and e:
                    key = (i, e)
                    if key not in powers:
                        powers[key] = idx[i] ** e
                    term = term * powers[key]
            result = result + term
        return result

    def embed(self, ring: PolyRing) -> "Poly":
        """
        Reescreve o polinômio em outro anel (variáveis casadas pelo nome)

        Args:
            ring: Anel de destino, com o mesmo corpo e todas as variáveis usadas

        Returns:
            Poly: Mesmo polinômio no anel de destino
        """
        if ring == self.ring:
            return self
        if ring.field != self.ring.field:
            raise RingMismatchError(f"Corpos diferentes: {self.ring.field} e {ring.field}")
        used = [i for i in range(self.ring.ngens) if any(m[i] for m in self.terms)]
        target = {i: ring.index(self.ring.variables[i]) for i in used}
        result = {}
        for m, c in self.terms.items():
            mono = [0] * ring.ngens
            for i in used:
                mono[target[i]] = m[i]
            result[tuple(mono)] = c
        return Poly(ring, result, normalized=True)

    # ------------------------------------------------------------------
    # igualdade e texto
    # ------------------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, int) or hasattr(other, "denominator"):
            return self.terms == self.ring.constant(other).terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def __iter__(self) -> Iterator[Tuple[Monomial, Scalar]]:
        return iter(self.sorted_terms())

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Poly({format_poly(self)!r})"


def _format_monomial(ring: PolyRing, mono: Monomial) -> str:
    parts = []
    for name, e in zip(ring.variables, mono):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_poly(f: Poly) -> str:
    """
    Forma textual canônica (termos em degrevlex decrescente)

    Args:
        f: Polinômio

    Returns:
        str: Texto reconhecido pela gramática de polinômios
    """
    if f.is_zero():
        return "0"
    pieces = []
    for k, (mono, c) in enumerate(f.sorted_terms(DEGREVLEX)):
        negative = c < 0
        a = -c if negative else c
        body = _format_monomial(f.ring, mono)
        if not body:
            text = str(a)
        elif a == 1:
            text = body
        else:
            text = f"{a}*{body}"
        if k == 0:
            pieces.append(f"-{text}" if negative else text)
        else:
            pieces.append(f" - {text}" if negative else f" + {text}")
    return "".join(pieces)


def substitute(f: Poly, var: str, value: Union[Poly, Scalar]) -> Poly:
    """
    Substitui uma variável por um valor

    Args:
        f: Polinômio
        var: Nome da variável
        value: Polinômio do mesmo anel ou escalar

    Returns:
        Poly: f com var := value
    """
    return f.substitute({var: value})


def default_ring(variables: Sequence[str], field: Optional[Field] = None) -> PolyRing:
    """Atalho para Q[variables] (ou field[variables])"""
    return PolyRing(field or QQ, variables)
