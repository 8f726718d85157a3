"""
Fields Module
Corpos de coeficientes exatos: racionais Q e corpos primos F_p
Escalares de Q são int ou Fraction (sempre em termos mínimos); de F_p, int em [0, p)
"""

from abc import ABC, abstractmethod
from fractions import Fraction
from typing import Dict, Union

from ..utils.errors import CharacteristicError, ZeroDivisorArgumentError

Scalar = Union[int, Fraction]


class Field(ABC):
    """
    Corpo de coeficientes

    Attributes:
        characteristic (int): 0 para Q, p para F_p
    """

    characteristic: int = 0

    @abstractmethod
    def normalize(self, c: Scalar) -> Scalar:
        """Reduz um escalar à forma canônica do corpo"""

    @abstractmethod
    def inv(self, c: Scalar) -> Scalar:
        """Inverso multiplicativo"""

    @abstractmethod
    def from_rational(self, num: int, den: int = 1) -> Scalar:
        """Imagem do racional num/den no corpo"""

    @abstractmethod
    def to_json(self) -> Dict[str, object]:
        """Descrição JSON do corpo (formato RingSpec)"""

    def div(self, a: Scalar, b: Scalar) -> Scalar:
        """
        Divide dois escalares

        Args:
            a: Numerador
            b: Denominador não nulo

        Returns:
            Scalar: a / b no corpo
        """
        return self.normalize(a * self.inv(b))

    def format(self, c: Scalar) -> str:
        """Texto canônico de um escalar"""
        return str(c)


class RationalField(Field):
    """Corpo dos racionais Q (precisão arbitrária)"""

    characteristic = 0

    def normalize(self, c: Scalar) -> Scalar:
        if isinstance(c, Fraction) and c.denominator == 1:
            return c.numerator
        return c

    def inv(self, c: Scalar) -> Scalar:
        if c == 0:
            raise ZeroDivisorArgumentError("Divisão por zero em Q")
        return self.normalize(Fraction(1) / c)

    def div(self, a: Scalar, b: Scalar) -> Scalar:
        if b == 0:
            raise ZeroDivisorArgumentError("Divisão por zero em Q")
        return self.normalize(Fraction(a) / b)

    def from_rational(self, num: int, den: int = 1) -> Scalar:
        if den == 0:
            raise ZeroDivisorArgumentError("Denominador nulo")
        return self.normalize(Fraction(num, den))

    def to_json(self) -> Dict[str, object]:
        return {"type": "Q"}

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


def is_prime(n: int) -> bool:
    """Teste de primalidade por divisão (p é pequeno nos usos do motor)"""
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class PrimeField(Field):
    """
    Corpo primo F_p

    Attributes:
        p (int): Característica (primo)
    """

    def __init__(self, p: int):
        """
        Cria F_p

        Args:
            p: Número primo
        """
        if not is_prime(p):
            raise CharacteristicError(f"{p} não é primo")
        self.p = p
        self.characteristic = p

    def normalize(self, c: Scalar) -> Scalar:
        if isinstance(c, Fraction):
            return self.from_rational(c.numerator, c.denominator)
        return c % self.p

    def inv(self, c: Scalar) -> Scalar:
        c = self.normalize(c)
        if c == 0:
            raise ZeroDivisorArgumentError(f"Divisão por zero em F_{self.p}")
        return pow(c, -1, self.p)

    def from_rational(self, num: int, den: int = 1) -> Scalar:
        if den % self.p == 0:
            raise ZeroDivisorArgumentError(f"Denominador {den} nulo em F_{self.p}")
        return (num * pow(den, -1, self.p)) % self.p

    def to_json(self) -> Dict[str, object]:
        return {"type": "Fp", "p": self.p}

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"


QQ = RationalField()


def field_from_json(data: Dict[str, object]) -> Field:
    """
    Constrói um corpo a partir da descrição JSON

    Args:
        data: {"type": "Q"} ou {"type": "Fp", "p": <primo>}

    Returns:
        Field: Corpo correspondente
    """
    if data.get("type") == "Q":
        return QQ
    if data.get("type") == "Fp":
        return PrimeField(int(data["p"]))
    raise CharacteristicError(f"Corpo desconhecido: {data}")
