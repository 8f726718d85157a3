"""
Affine Δ-Scheme Module
ΔSpec R no caso afim: folhas (primos Δ-estáveis), trajetórias p#, interseção da
fibra sobre t = c com uma folha, bijeção entre fibra e folhas e varreduras de simplicidade
"""

from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterable, List, Optional

from ..algebra.fields import Scalar
from ..algebra.ideal import Ideal, ideal_contains, ideal_equal
from ..algebra.polynomial import Poly
from ..differential.constants import constants_truncated
from ..differential.dideal import (PrimalityWitness, PsharpResult, delta_close, is_delta_ideal,
                                   lift_ideal, primality_falsify, psharp)
from ..differential.ring import DiffRing, localize
from ..tensor.svdp import (contract_ideal, extend_ideal, fiber_j_ideal, fiber_pullback,
                           fiber_pullback_sharp)
from ..tensor.tensor_ring import TensorRing
from ..utils.errors import (CharacteristicError, ProperIdealError, UncertifiedInputError,
                            ZeroDivisorArgumentError)
from ..utils.logger import get_logger
from ..verification.report import Report


class AffineDScheme:
    """
    Δ-esquema afim ΔSpec R

    Attributes:
        ring (DiffRing): Anel de coordenadas
        fixtures (dict): Nome → ideal primo (primalidade declarada pelo chamador)
        delta_stable (dict): Nome → resultado de is_delta_ideal
    """

    def __init__(self, ring: DiffRing, fixtures: Optional[Dict[str, Ideal]] = None):
        """
        Cria o esquema

        Args:
            ring: Δ-anel de coordenadas
            fixtures: Primos nomeados
        """
        self.ring = ring
        self.fixtures: Dict[str, Ideal] = {}
        self.delta_stable: Dict[str, bool] = {}
        for name, p in (fixtures or {}).items():
            self.add_fixture(name, p)

    def add_fixture(self, name: str, p: Ideal) -> Ideal:
        """Registra um primo nomeado (deve ser próprio)"""
        lifted = lift_ideal(p, self.ring)
        if lifted.is_unit():
            raise ProperIdealError(f"Fixture {name!r} não é ideal próprio")
        self.fixtures[name] = lifted
        self.delta_stable[name] = is_delta_ideal(lifted, self.ring)
        return lifted

    def leaves(self) -> List[str]:
        """Nomes das fixtures que são folhas"""
        return [name for name, stable in self.delta_stable.items() if stable]

    def __repr__(self):
        return f"AffineDScheme({self.ring!r}, fixtures={list(self.fixtures)})"


@dataclass
class LeafReport:
    """
    Diagnóstico de um primo

    Attributes:
        ideal (Ideal): Primo analisado
        is_leaf (bool): Primo Δ-estável
        trajectory (PsharpResult): Resultado de p#
        fiber_point (Ideal): Ponto da fibra associado (quando aplicável)
        prime_witness (PrimalityWitness): Contraexemplo de primalidade, se encontrado
    """
    ideal: Ideal
    is_leaf: bool
    trajectory: Optional[PsharpResult] = None
    fiber_point: Optional[Ideal] = None
    prime_witness: Optional[PrimalityWitness] = None

    def to_json(self) -> Dict[str, object]:
        return {
            "ideal": str(self.ideal),
            "is_leaf": self.is_leaf,
            "trajectory": self.trajectory.to_json() if self.trajectory else None,
            "fiber_point": str(self.fiber_point) if self.fiber_point is not None else None,
            "prime_witness": ([str(self.prime_witness.f), str(self.prime_witness.g)]
                              if self.prime_witness else None),
        }


def is_leaf(p: Ideal, S: AffineDScheme) -> bool:
    """
    Folhas de ΔSpec R são os primos Δ-estáveis

    Args:
        p: Ideal primo próprio
        S: Esquema

    Returns:
        bool: True sse p é Δ-ideal
    """
    J = lift_ideal(p, S.ring)
    if J.is_unit():
        raise ProperIdealError(f"is_leaf exige ideal próprio, recebeu {p}")
    return is_delta_ideal(J, S.ring)


def trajectory(p: Ideal, S: AffineDScheme, D: Optional[int] = None,
               maxiter: Optional[int] = None) -> PsharpResult:
    """
    Trajetória do ponto p: o menor Δ-primo p# ⊆ p

    Args:
        p: Ideal primo
        S: Esquema de característica 0
        D: Janela de grau
        maxiter: Número máximo de passos

    Returns:
        PsharpResult: Cadeia e ideal final
    """
    if S.ring.characteristic != 0:
        raise CharacteristicError("A trajetória só é garantida em característica 0")
    return psharp(p, S.ring, D, maxiter)


def leaf_report(p: Ideal, S: AffineDScheme, D: Optional[int] = None, trials: int = 50,
                seed: int = 0) -> LeafReport:
    """
    is_leaf, trajetória e checagem pontual de primalidade de um primo

    Args:
        p: Ideal primo
        S: Esquema
        D: Janela de grau
        trials: Tentativas aleatórias de primality_falsify
        seed: Semente

    Returns:
        LeafReport: Diagnóstico
    """
    leaf = is_leaf(p, S)
    traj = trajectory(p, S, D) if S.ring.characteristic == 0 else None
    witness = primality_falsify(p, S.ring, trials=trials, degcap=2, seed=seed)
    return LeafReport(ideal=lift_ideal(p, S.ring), is_leaf=leaf, trajectory=traj, prime_witness=witness)


def specialization_order(p: Ideal, q: Ideal) -> bool:
    """True se q é especialização de p (p ⊆ q)"""
    return ideal_contains(q, p)


def _require_stable(P: Ideal, T: TensorRing):
    if P.delta_bound is None and not is_delta_ideal(P, T.realization):
        raise UncertifiedInputError(f"{P} não é Δ-estável")


def fiber_intersection(P: Ideal, c: Scalar, T: TensorRing) -> Ideal:
    """
    Ponto em que a folha 𝔭 corta a fibra t = c: j(𝔭)

    Args:
        P: Δ-primo da realização (certificado)
        c: Constante
        T: Anel tensorial

    Returns:
        Ideal: Primo de A
    """
    _require_stable(P, T)
    return fiber_j_ideal(P, c, T)


def main_theorem_check(q: Ideal, P: Ideal, c: Scalar, T: TensorRing, D: Optional[int] = None,
                       others: Iterable[Ideal] = ()) -> Report:
    """
    Bijeção entre a fibra sobre t = c e as folhas: as duas composições são a identidade

    Args:
        q: Primo de A (ponto da fibra)
        P: Δ-primo da realização (folha)
        c: Constante
        T: Anel tensorial
        D: Janela de grau
        others: Primos de A para a caracterização j(𝔭) ⊆ q' ⟺ 𝔭 ⊆ j⁻¹(q')

    Returns:
        Report: Checagens das duas direções
    """
    _require_stable(P, T)
    report = Report("main-theorem", params={"q": str(q), "P": str(P), "c": c, "D": D})

    # ponto → folha → ponto
    leaf = fiber_pullback_sharp(q, c, T, D).final
    report.check(ideal_equal(leaf, extend_ideal(q, T)), direction="point-leaf", q=str(q), leaf=str(leaf))
    back = fiber_j_ideal(leaf, c, T)
    report.check(ideal_equal(back, q), direction="point-leaf-point", q=str(q), got=str(back))

    # folha → ponto → folha
    point = fiber_intersection(P, c, T)
    report.check(ideal_equal(extend_ideal(point, T), P), direction="leaf-point", P=str(P), point=str(point))
    again = fiber_pullback_sharp(point, c, T, D).final
    report.check(ideal_equal(again, P), direction="leaf-point-leaf", P=str(P), got=str(again))
    report.check(ideal_equal(contract_ideal(P, T), point), direction="contract", P=str(P), point=str(point))

    for other in others:
        lhs = ideal_contains(other, point)
        rhs = ideal_contains(fiber_pullback(other, c, T), P)
        report.check(lhs == rhs, direction="order", other=str(other), point=str(point))
    return report


class SimplicityVerdict(Enum):
    """Resposta unilateral da varredura de simplicidade"""
    SIMPLE_CONSISTENT = "simple-consistent"
    PROPER_DELTA_IDEAL = "proper-delta-ideal"


@dataclass
class SimplicityResult:
    """
    Resultado de simplicity_scan

    Attributes:
        verdict (SimplicityVerdict): Consistente com simples ou testemunha encontrada
        witness (Ideal): Δ-ideal próprio certificado (quando houver)
        sample (Poly): Elemento que gerou a testemunha
        scanned (int): Amostras examinadas
    """
    verdict: SimplicityVerdict
    witness: Optional[Ideal] = None
    sample: Optional[Poly] = None
    scanned: int = 0

    def to_json(self) -> Dict[str, object]:
        return {
            "verdict": self.verdict.value,
            "witness": str(self.witness) if self.witness is not None else None,
            "sample": str(self.sample) if self.sample is not None else None,
            "scanned": self.scanned,
        }


def simplicity_scan(S: AffineDScheme, samples: Iterable[Poly], N: Optional[int] = None) -> SimplicityResult:
    """
    Procura um Δ-ideal próprio ⟨f⟩ entre as amostras (nunca prova simplicidade)

    Args:
        S: Esquema
        samples: Elementos f (os nulos em R são ignorados)
        N: Cota de ordem dos fechos

    Returns:
        SimplicityResult: Testemunha ou consistência
    """
    R = S.ring
    scanned = 0
    for f in samples:
        if R.is_zero(f):
            continue
        scanned += 1
        closure = delta_close(R.ideal([f]), R, N)
        if closure.certified and not closure.result.is_unit():
            get_logger().debug(f"Δ-ideal próprio encontrado a partir de {f}")
            return SimplicityResult(SimplicityVerdict.PROPER_DELTA_IDEAL, closure.result, f, scanned)
    return SimplicityResult(SimplicityVerdict.SIMPLE_CONSISTENT, scanned=scanned)


def constants_field_check(S: AffineDScheme, D: int, localize_at: Iterable[Poly] = (),
                          expect_simple: bool = False) -> Report:
    """
    Constantes truncadas de R e de suas localizações

    Se C(R) truncado tem dimensão 1, exige a mesma dimensão após localizar; caso contrário
    o relatório apenas marca o anel como não simples.

    Args:
        S: Esquema
        D: Cota de grau
        localize_at: Elementos f (localiza em R_f)
        expect_simple: Exige dim C(R) = 1

    Returns:
        Report: Dimensões e checagens
    """
    R = S.ring
    base = constants_truncated(R, D)
    report = Report("constants-field", params={"D": D, "dim": len(base)})
    if expect_simple:
        report.check(len(base) == 1, reason="dim C(R) != 1", dim=len(base))
    field_like = len(base) == 1
    report.params["non_simple"] = not field_like
    dims = {}
    for f in localize_at:
        try:
            loc = localize(R, f)
        except ZeroDivisorArgumentError:
            continue
        dim = len(constants_truncated(loc, D))
        dims[str(f)] = dim
        if field_like:
            report.check(dim == len(base), reason="constants grow after localization", f=str(f), dim=dim)
    report.params["localized"] = dims
    return report
