"""
Data Generator Module
Gera instâncias aleatórias reprodutíveis para as suítes de verificação
Polinômios, ideais, palavras de operadores, multi-índices e elementos tensoriais
"""

from fractions import Fraction
from typing import Dict, List, Optional, Sequence

import numpy as np

from ..algebra.ideal import Ideal
from ..algebra.polynomial import Poly, PolyRing
from ..differential.operators import ThetaAb, ThetaWord


class InstanceGenerator:
    """
    Gerador de instâncias com semente explícita

    Attributes:
        seed (int): Semente do numpy.random.Generator
        rng (numpy.random.Generator): Gerador
    """

    def __init__(self, seed: int = 0):
        """
        Inicializa o gerador

        Args:
            seed: Semente (mesma semente, mesmas instâncias)
        """
        self.seed = seed
        self.rng = np.random.default_rng(seed)

    def coefficient(self, low: int = -3, high: int = 3, fractions: bool = False):
        """Coeficiente inteiro não nulo (ou racional a/b com b ≤ 3)"""
        while True:
            c = int(self.rng.integers(low, high + 1))
            if c != 0:
                break
        if fractions and self.rng.random() < 0.3:
            return Fraction(c, int(self.rng.integers(1, 4)))
        return c

    def monomial(self, ring: PolyRing, max_degree: int) -> tuple:
        """Monômio uniforme entre os de grau ≤ max_degree"""
        monos = ring.monomials_up_to(max_degree)
        return monos[int(self.rng.integers(0, len(monos)))]

    def poly(self, ring: PolyRing, max_degree: int = 3, max_terms: int = 3,
             fractions: bool = False, nonzero: bool = True) -> Poly:
        """
        Polinômio aleatório

        Args:
            ring: Anel
            max_degree: Grau total máximo
            max_terms: Número máximo de termos
            fractions: Permite coeficientes racionais
            nonzero: Repete o sorteio até obter um polinômio não nulo

        Returns:
            Poly: Polinômio sorteado
        """
        while True:
            n = int(self.rng.integers(1, max_terms + 1))
            terms: Dict[tuple, object] = {}
            for _ in range(n):
                m = self.monomial(ring, max_degree)
                terms[m] = terms.get(m, 0) + self.coefficient(fractions=fractions)
            f = Poly(ring, terms)
            if not (nonzero and f.is_zero()):
                return f

    def nonconstant_poly(self, ring: PolyRing, max_degree: int = 3, max_terms: int = 3) -> Poly:
        while True:
            f = self.poly(ring, max_degree, max_terms)
            if not f.is_constant():
                return f

    def ideal(self, ring: PolyRing, max_gens: int = 2, max_degree: int = 2,
              max_terms: int = 2, extra: Sequence[Poly] = ()) -> Ideal:
        """Ideal com até max_gens geradores não constantes (mais os `extra`)"""
        n = int(self.rng.integers(1, max_gens + 1))
        gens = [self.nonconstant_poly(ring, max_degree, max_terms) for _ in range(n)]
        return Ideal(ring, gens + list(extra))

    def word(self, ndelta: int, max_order: int, min_order: int = 0) -> ThetaWord:
        """Palavra de Θ(R) com ordem sorteada em [min_order, max_order]"""
        n = int(self.rng.integers(min_order, max_order + 1))
        return ThetaWord(tuple(int(i) for i in self.rng.integers(0, ndelta, size=n)))

    def theta_ab(self, ndelta: int, max_order: int) -> ThetaAb:
        return self.word(ndelta, max_order).to_ab(ndelta)

    def tensor_terms(self, ring: PolyRing, max_t_degree: int = 2, max_degree: int = 2,
                     max_terms: int = 2) -> Dict[int, Poly]:
        """Mapa potência de t → coeficiente em A (forma canônica de um elemento tensorial)"""
        out: Dict[int, Poly] = {}
        for k in range(max_t_degree + 1):
            if self.rng.random() < 0.6:
                out[k] = self.poly(ring, max_degree, max_terms)
        return out

    def choice(self, items: Sequence, size: Optional[int] = None) -> List:
        """Subconjunto (ou um elemento quando size é None) sem reposição"""
        if size is None:
            return items[int(self.rng.integers(0, len(items)))]
        idx = self.rng.choice(len(items), size=min(size, len(items)), replace=False)
        return [items[int(i)] for i in idx]
