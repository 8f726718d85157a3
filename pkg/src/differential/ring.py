"""
Differential Ring Module
Δ-anéis finitamente apresentados: k[X]/Q com derivações dadas pelas imagens das variáveis
Inclui teste de comutação, derivação, localização e a marca de estabilidade graduada
"""

from itertools import combinations
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Union

from ..algebra.ideal import Ideal, radical_member
from ..algebra.polynomial import Poly, PolyRing
from ..utils.errors import IllDefinedDerivationError, RingMismatchError, ZeroDivisorArgumentError


class DerivationSpec:
    """
    Derivação determinada pelas imagens das variáveis

    Attributes:
        name (str): Nome da derivação
        images (dict): Variável → imagem ∂(x) no anel ambiente (ausente = 0)
    """

    def __init__(self, name: str, images: Mapping[str, Poly]):
        """
        Cria a especificação

        Args:
            name: Nome da derivação
            images: Imagens das variáveis
        """
        self.name = name
        self.images: Dict[str, Poly] = {v: p for v, p in images.items() if not p.is_zero()}

    def image(self, var: str, ring: PolyRing) -> Poly:
        """Imagem de `var` (zero se não declarada)"""
        img = self.images.get(var)
        return img if img is not None else ring.zero()

    def embed(self, ring: PolyRing) -> "DerivationSpec":
        return DerivationSpec(self.name, {v: p.embed(ring) for v, p in self.images.items()})

    def __repr__(self):
        body = ", ".join(f"{v}↦{p}" for v, p in self.images.items())
        return f"DerivationSpec({self.name}: {body or '0'})"


class DiffRing:
    """
    Δ-anel R = k[X]/Q

    Ideais de R são representados por suas pré-imagens em k[X] (que contêm Q);
    o ideal nulo de R é Q.

    Attributes:
        ring (PolyRing): Anel de polinômios ambiente k[X]
        derivations (list): Lista de DerivationSpec (indexada por Δ)
        quotient (Ideal): Ideal Q (nulo se não há quociente)
        commuting (bool): Resultado de check_commuting (None até ser calculado)
    """

    def __init__(self, ring: PolyRing, derivations: Sequence[DerivationSpec],
                 quotient: Iterable[Poly] = (), name: str = ""):
        """
        Cria o Δ-anel e verifica que cada derivação passa ao quociente

        Args:
            ring: Anel ambiente
            derivations: Derivações
            quotient: Geradores de Q
            name: Nome opcional (anéis embutidos da CLI)
        """
        self.ring = ring
        self.name = name
        self.derivations: List[DerivationSpec] = []
        for spec in derivations:
            for var, img in spec.images.items():
                ring.index(var)
                if img.ring != ring:
                    raise RingMismatchError(f"Imagem de {var} em {spec.name} fora do anel {ring}")
            self.derivations.append(spec)
        self.quotient = Ideal(ring, list(quotient))
        self.commuting: Optional[bool] = None
        self._images = [[spec.image(v, ring) for v in ring.variables] for spec in self.derivations]
        self._check_well_defined()

    # ------------------------------------------------------------------
    # propriedades
    # ------------------------------------------------------------------
    @property
    def field(self):
        return self.ring.field

    @property
    def characteristic(self) -> int:
        return self.ring.field.characteristic

    @property
    def ndelta(self) -> int:
        return len(self.derivations)

    @property
    def has_quotient(self) -> bool:
        return bool(self.quotient.gens)

    def gen(self, name: Union[str, int]) -> Poly:
        return self.ring.gen(name)

    # ------------------------------------------------------------------
    # operações básicas
    # ------------------------------------------------------------------
    def reduce(self, f: Poly) -> Poly:
        """Forma normal módulo Q"""
        if not self.has_quotient:
            return f
        return self.quotient.reduce(f)

    def is_zero(self, f: Poly) -> bool:
        """True se f ≡ 0 mod Q"""
        return self.reduce(f).is_zero()

    def ideal(self, gens: Iterable[Poly] = (), delta_bound: Optional[int] = None) -> Ideal:
        """Ideal de R gerado por gens (pré-imagem: gens + Q)"""
        return Ideal(self.ring, list(gens) + list(self.quotient.gens), delta_bound=delta_bound)

    def zero_ideal(self) -> Ideal:
        return self.ideal()

    def raw_derive(self, f: Poly, i: int) -> Poly:
        """∂_i(f) em k[X], sem reduzir módulo Q"""
        if f.ring != self.ring:
            raise RingMismatchError(f"{f} não pertence ao anel {self.ring}")
        if not 0 <= i < self.ndelta:
            raise IndexError(f"Derivação {i} fora de 0..{self.ndelta - 1}")
        result = self.ring.zero()
        for j, img in enumerate(self._images[i]):
            if img.is_zero():
                continue
            partial = f.diff(j)
            if not partial.is_zero():
                result = result + partial * img
        return result

    def derive(self, f: Poly, i: int) -> Poly:
        """∂_i(f) reduzido módulo Q"""
        return self.reduce(self.raw_derive(f, i))

    def with_derivations(self, derivations: Sequence[DerivationSpec]) -> "DiffRing":
        """Mesmo anel e quociente com outra lista de derivações (amostras de Θ̂(R))"""
        return DiffRing(self.ring, derivations, self.quotient.gens, name=self.name)

    def _check_well_defined(self):
        for q in self.quotient.gens:
            for i, spec in enumerate(self.derivations):
                image = self.raw_derive(q, i)
                if not self.quotient.reduce(image).is_zero():
                    raise IllDefinedDerivationError(
                        f"{spec.name}({q}) = {image} não pertence ao quociente {self.quotient}")

    def __repr__(self):
        quot = f"/{self.quotient}" if self.has_quotient else ""
        return f"DiffRing({self.ring}{quot}, {self.derivations})"


def derive(f: Poly, i: int, R: DiffRing) -> Poly:
    """
    Derivação ∂_i estendida por aditividade e Leibniz

    Args:
        f: Polinômio de k[X]
        i: Índice da derivação
        R: Δ-anel

    Returns:
        Poly: ∂_i(f) reduzido módulo Q
    """
    return R.derive(f, i)


def check_commuting(R: DiffRing) -> bool:
    """
    Testa [∂_i, ∂_j](x_k) ≡ 0 mod Q para todos os pares e variáveis

    Args:
        R: Δ-anel

    Returns:
        bool: True se R é um Δ-anel parcial
    """
    result = True
    for i, j in combinations(range(R.ndelta), 2):
        for k in range(R.ring.ngens):
            x = R.ring.gen(k)
            bracket = R.derive(R.derive(x, j), i) - R.derive(R.derive(x, i), j)
            if not R.is_zero(bracket):
                result = False
                break
        if not result:
            break
    R.commuting = result
    return result


def is_partial(R: DiffRing) -> bool:
    """Resultado em cache de check_commuting"""
    if R.commuting is None:
        check_commuting(R)
    return R.commuting


def graded_stable(R: DiffRing) -> bool:
    """True se cada ∂_i preserva ou abaixa o grau (imagens das variáveis de grau ≤ 1)"""
    return all(img.degree() <= 1 for row in R._images for img in row)


def localize(R: DiffRing, f: Poly) -> DiffRing:
    """
    Localização R_f = R[y]/(Q + (y·f - 1)) com ∂_i(y) = -y²·∂_i(f)

    Args:
        R: Δ-anel
        f: Elemento não nulo e não nilpotente módulo Q

    Returns:
        DiffRing: Anel localizado (y é um nome de variável novo)
    """
    if f.ring != R.ring:
        raise RingMismatchError(f"{f} não pertence ao anel {R.ring}")
    if R.is_zero(f):
        raise ZeroDivisorArgumentError(f"Localização em {f} ≡ 0")
    if radical_member(f, R.quotient):
        raise ZeroDivisorArgumentError(f"Localização em elemento nilpotente {f}")
    y = R.ring.fresh_variable("y")
    big = R.ring.with_variables([y])
    yp = big.gen(y)
    specs = []
    for i, spec in enumerate(R.derivations):
        images = {v: p.embed(big) for v, p in spec.images.items()}
        dy = -(yp * yp) * R.raw_derive(f, i).embed(big)
        if not dy.is_zero():
            images[y] = dy
        specs.append(DerivationSpec(spec.name, images))
    quotient = [q.embed(big) for q in R.quotient.gens] + [yp * f.embed(big) - 1]
    name = f"{R.name}[1/{f}]" if R.name else ""
    return DiffRing(big, specs, quotient, name=name)
