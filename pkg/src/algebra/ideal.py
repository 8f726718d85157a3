"""
Ideal Module
Ideais de anéis de polinômios com cache de bases de Gröbner reduzidas
e as primitivas comutativas: pertinência, interseção, quociente, saturação,
pertinência ao radical e eliminação
"""

import threading
from typing import Dict, Iterable, Optional, Sequence, Tuple

from .groebner import divide, groebner, normal_form
from .orders import DEGREVLEX, MonomialOrder, elimination_order
from .polynomial import Poly, PolyRing
from ..utils.errors import RingMismatchError, ZeroDivisorArgumentError


class Ideal:
    """
    Ideal finitamente gerado

    Attributes:
        ring (PolyRing): Anel ambiente
        gens (tuple): Geradores
        delta_bound (int): Cota de ordem N em que o ideal foi certificado Δ-estável (None se não certificado)
    """

    def __init__(self, ring: PolyRing, gens: Iterable[Poly] = (), delta_bound: Optional[int] = None):
        """
        Cria o ideal

        Args:
            ring: Anel ambiente
            gens: Geradores
            delta_bound: Status de Δ-fecho (cota de ordem do certificado)
        """
        gens = tuple(g for g in gens if not g.is_zero())
        for g in gens:
            if g.ring != ring:
                raise RingMismatchError(f"Gerador {g} fora do anel {ring}")
        self.ring = ring
        self.gens = gens
        self.delta_bound = delta_bound
        self._cache: Dict[MonomialOrder, Tuple[Poly, ...]] = {}
        self._lock = threading.Lock()

    def groebner(self, order: MonomialOrder = DEGREVLEX) -> Tuple[Poly, ...]:
        """
        Base de Gröbner reduzida (calculada uma vez por ordem)

        Args:
            order: Ordem monomial

        Returns:
            tuple: Base reduzida
        """
        with self._lock:
            basis = self._cache.get(order)
        if basis is None:
            basis = tuple(groebner(self.gens, order))
            with self._lock:
                basis = self._cache.setdefault(order, basis)
        return basis

    def reduce(self, f: Poly, order: MonomialOrder = DEGREVLEX) -> Poly:
        """Forma normal de f módulo o ideal"""
        return normal_form(f, self.groebner(order), order)

    def contains(self, f: Poly) -> bool:
        """Pertinência exata"""
        return ideal_member(f, self)

    def is_zero(self) -> bool:
        return not self.groebner()

    def is_unit(self) -> bool:
        basis = self.groebner()
        return len(basis) == 1 and basis[0].is_constant()

    def with_delta_bound(self, bound: Optional[int]) -> "Ideal":
        """Mesmo ideal com o status de Δ-fecho dado (cache compartilhado)"""
        other = Ideal(self.ring, self.gens, delta_bound=bound)
        with self._lock:
            other._cache = dict(self._cache)
        return other

    def __le__(self, other: "Ideal") -> bool:
        return ideal_contains(other, self)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return ideal_equal(self, other)

    def __hash__(self):
        return hash((self.ring, self.groebner()))

    def __str__(self):
        basis = self.groebner()
        if not basis:
            return "(0)"
        return "(" + ", ".join(str(g) for g in basis) + ")"

    def __repr__(self):
        return f"Ideal{self}"


def _check_same_ring(*ideals: Ideal):
    ring = ideals[0].ring
    for I in ideals[1:]:
        if I.ring != ring:
            raise RingMismatchError(f"Ideais em anéis diferentes: {ring} e {I.ring}")


def ideal_member(f: Poly, I: Ideal) -> bool:
    """
    Decide f ∈ I pela forma normal

    Args:
        f: Polinômio
        I: Ideal do mesmo anel

    Returns:
        bool: True sse f ∈ I
    """
    if f.ring != I.ring:
        raise RingMismatchError(f"{f} não pertence ao anel {I.ring}")
    return I.reduce(f).is_zero()


def ideal_contains(I: Ideal, J: Ideal) -> bool:
    """True sse J ⊆ I"""
    _check_same_ring(I, J)
    return all(I.reduce(g).is_zero() for g in J.gens)


def ideal_equal(I: Ideal, J: Ideal) -> bool:
    """Igualdade pelas bases reduzidas degrevlex"""
    _check_same_ring(I, J)
    return I.groebner() == J.groebner()


def ideal_sum(I: Ideal, J: Ideal) -> Ideal:
    _check_same_ring(I, J)
    return Ideal(I.ring, I.gens + J.gens)


def ideal_product(I: Ideal, J: Ideal) -> Ideal:
    _check_same_ring(I, J)
    return Ideal(I.ring, [f * g for f in I.gens for g in J.gens])


def eliminate(I: Ideal, names: Sequence[str]) -> Ideal:
    """
    Interseção de I com o subanel sem as variáveis `names`

    Args:
        I: Ideal
        names: Variáveis a eliminar

    Returns:
        Ideal: Ideal do anel sem essas variáveis
    """
    names = [n for n in I.ring.variables if n in set(names)]
    for n in names:
        I.ring.index(n)
    sub = I.ring.without(names)
    if not names:
        return Ideal(sub, [g.embed(sub) for g in I.gens])
    # bloco eliminado na frente
    ordered = PolyRing(I.ring.field, list(names) + list(sub.variables))
    order = elimination_order(len(names))
    basis = groebner([g.embed(ordered) for g in I.gens], order)
    k = len(names)
    kept = [g for g in basis if all(m[:k] == (0,) * k for m in g.terms)]
    return Ideal(sub, [g.embed(sub) for g in kept])


def _with_aux(ring: PolyRing, base: str) -> Tuple[PolyRing, str]:
    name = ring.fresh_variable(base)
    return ring.with_variables([name]), name


def ideal_intersect(I: Ideal, J: Ideal) -> Ideal:
    """
    I ∩ J por eliminação de uma variável auxiliar w em w·I + (1 - w)·J

    Args:
        I: Ideal
        J: Ideal do mesmo anel

    Returns:
        Ideal: Interseção
    """
    _check_same_ring(I, J)
    big, w = _with_aux(I.ring, "w")
    wp = big.gen(w)
    gens = [wp * g.embed(big) for g in I.gens] + [(1 - wp) * g.embed(big) for g in J.gens]
    result = eliminate(Ideal(big, gens), [w])
    return Ideal(I.ring, [g.embed(I.ring) for g in result.gens])


def colon(I: Ideal, f: Poly) -> Ideal:
    """
    Ideal quociente (I : f) = (1/f)·(I ∩ (f))

    Args:
        I: Ideal
        f: Polinômio não nulo

    Returns:
        Ideal: (I : f)
    """
    if f.is_zero():
        raise ZeroDivisorArgumentError("colon exige f ≠ 0")
    inter = ideal_intersect(I, Ideal(I.ring, [f]))
    quotients = []
    for h in inter.gens:
        q, r = divide(h, f)
        if not r.is_zero():
            raise ArithmeticError(f"Divisão inexata de {h} por {f}")
        quotients.append(q)
    return Ideal(I.ring, quotients)


def saturation(I: Ideal, f: Poly) -> Ideal:
    """
    Saturação (I : f^∞) via variável auxiliar: I + (y·f - 1), eliminando y

    Args:
        I: Ideal
        f: Polinômio não nulo

    Returns:
        Ideal: (I : f^∞)
    """
    if f.is_zero():
        raise ZeroDivisorArgumentError("saturation exige f ≠ 0")
    big, y = _with_aux(I.ring, "y")
    gens = [g.embed(big) for g in I.gens] + [big.gen(y) * f.embed(big) - 1]
    result = eliminate(Ideal(big, gens), [y])
    return Ideal(I.ring, [g.embed(I.ring) for g in result.gens])


def radical_member(f: Poly, I: Ideal) -> bool:
    """
    Decide f ∈ √I testando 1 ∈ I + (1 - y·f) no anel estendido por y

    Args:
        f: Polinômio
        I: Ideal

    Returns:
        bool: True sse alguma potência de f pertence a I
    """
    if f.ring != I.ring:
        raise RingMismatchError(f"{f} não pertence ao anel {I.ring}")
    if f.is_zero():
        return True
    big, y = _with_aux(I.ring, "y")
    gens = [g.embed(big) for g in I.gens] + [1 - big.gen(y) * f.embed(big)]
    basis = groebner(gens)
    return len(basis) == 1 and basis[0].is_constant()


def substitute_ideal(I: Ideal, values: Dict[str, Poly], target: PolyRing) -> Ideal:
    """
    Imagem de I por uma substituição de variáveis (morfismo sobrejetivo)

    Args:
        I: Ideal
        values: Variável → valor (polinômio do anel de I ou escalar)
        target: Anel de destino que contém as variáveis restantes

    Returns:
        Ideal: Ideal gerado pelas imagens dos geradores
    """
    return Ideal(target, [g.substitute(values).embed(target) for g in I.gens])


def colon_ideal(I: Ideal, J: Ideal) -> Ideal:
    """
    (I : J) = ∩ (I : g) sobre os geradores g de J

    Args:
        I: Ideal
        J: Ideal não nulo do mesmo anel

    Returns:
        Ideal: (I : J)
    """
    _check_same_ring(I, J)
    if not J.gens:
        raise ZeroDivisorArgumentError("colon_ideal exige J ≠ (0)")
    result = colon(I, J.gens[0])
    for g in J.gens[1:]:
        result = ideal_intersect(result, colon(I, g))
    return result
