"""
Monomial Orders Module
Ordens monomiais para o núcleo de Gröbner: lex, degrevlex e ordem de eliminação em blocos
Monômios são tuplas de expoentes não negativos
"""

from enum import Enum
from typing import Callable, Tuple

Monomial = Tuple[int, ...]


class OrderTag(Enum):
    """Tipos de ordem monomial"""
    LEX = "lex"
    DEGREVLEX = "degrevlex"
    ELIMINATION = "elimination"


def _degrevlex_key(mono: Monomial) -> tuple:
    return (sum(mono), tuple(-e for e in reversed(mono)))


class MonomialOrder:
    """
    Ordem monomial total, multiplicativa e bem-ordenada

    Attributes:
        tag (OrderTag): Tipo da ordem
        block (int): Nas ordens de eliminação, número de variáveis iniciais eliminadas
    """

    def __init__(self, tag: OrderTag, block: int = 0):
        """
        Cria a ordem

        Args:
            tag: Tipo da ordem
            block: Tamanho do bloco eliminado (primeiras variáveis do anel)
        """
        self.tag = tag
        self.block = block
        self.key: Callable[[Monomial], tuple] = self._make_key()

    def _make_key(self) -> Callable[[Monomial], tuple]:
        if self.tag is OrderTag.LEX:
            return lambda mono: mono
        if self.tag is OrderTag.DEGREVLEX:
            return _degrevlex_key
        k = self.block
        # bloco eliminado domina; degrevlex dentro de cada bloco
        return lambda mono: (_degrevlex_key(mono[:k]), _degrevlex_key(mono[k:]))

    def compare(self, a: Monomial, b: Monomial) -> int:
        """
        Compara dois monômios

        Returns:
            int: -1, 0 ou 1
        """
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and (self.tag, self.block) == (other.tag, other.block)

    def __hash__(self):
        return hash((self.tag, self.block))

    def __repr__(self):
        if self.tag is OrderTag.ELIMINATION:
            return f"elimination({self.block})"
        return self.tag.value


LEX = MonomialOrder(OrderTag.LEX)
DEGREVLEX = MonomialOrder(OrderTag.DEGREVLEX)


def elimination_order(block: int) -> MonomialOrder:
    """Ordem de eliminação das primeiras `block` variáveis"""
    return MonomialOrder(OrderTag.ELIMINATION, block)


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


def mono_divides(b: Monomial, a: Monomial) -> bool:
    """True se b divide a"""
    return all(y <= x for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_degree(a: Monomial) -> int:
    return sum(a)
