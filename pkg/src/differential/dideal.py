"""
Differential Ideal Module
Algoritmos de Δ-ideais: fecho ⟨I⟩ com certificado, pertinência semidecidida,
radical diferencial {I}, trajetória p# por janela de grau e busca de contraexemplos de primalidade
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Sequence

from .operators import ThetaAb, ThetaOrder, apply_ab, multi_indices_up_to, theta_key
from .ring import DerivationSpec, DiffRing, is_partial
from ..algebra.ideal import Ideal, ideal_contains, ideal_equal, radical_member
from ..algebra.orders import DEGREVLEX, mono_divides
from ..algebra.polynomial import Poly
from ..utils.config import DEFAULTS
from ..utils.data_generator import InstanceGenerator
from ..utils.errors import CharacteristicError, NonCommutingError, ProperIdealError, RingMismatchError
from ..utils.linalg import kernel
from ..utils.logger import EventType, get_logger


def lift_ideal(I: Ideal, R: DiffRing) -> Ideal:
    """
    Pré-imagem em k[X] do ideal de R gerado por I (acrescenta Q quando falta)

    Args:
        I: Ideal de k[X]
        R: Δ-anel

    Returns:
        Ideal: Ideal contendo Q
    """
    if I.ring != R.ring:
        raise RingMismatchError(f"Ideal em {I.ring}, anel diferencial em {R.ring}")
    if not R.has_quotient or all(I.reduce(q).is_zero() for q in R.quotient.gens):
        return I
    return R.ideal(I.gens, delta_bound=I.delta_bound)


def is_delta_ideal(I: Ideal, R: DiffRing) -> bool:
    """
    Testa ∂_i(g) ∈ I para todo gerador g e toda derivação

    Args:
        I: Ideal
        R: Δ-anel

    Returns:
        bool: True se I (+ Q) é um Δ-ideal
    """
    J = lift_ideal(I, R)
    return all(J.reduce(R.derive(g, i)).is_zero() for g in J.gens for i in range(R.ndelta))


# ----------------------------------------------------------------------
# fecho diferencial
# ----------------------------------------------------------------------
@dataclass
class DeltaClosure:
    """
    Fecho diferencial truncado

    Attributes:
        base (Ideal): Ideal de partida
        bound (int): Cota N de ordem
        result (Ideal): Ideal gerado por θ(g), e(θ) ≤ N
        certified (bool): ∂_i(g) ∈ result para todo gerador (result é Δ-ideal de fato)
        levels (int): Níveis de palavras efetivamente percorridos
    """
    base: Ideal
    bound: int
    result: Ideal
    certified: bool
    levels: int = 0


def delta_close(I: Ideal, R: DiffRing, N: Optional[int] = None) -> DeltaClosure:
    """
    Ideal gerado por {θ(g) : g gerador, e(θ) ≤ N}, com certificado de estabilidade

    Args:
        I: Ideal de partida
        R: Δ-anel
        N: Cota de ordem (padrão DEFAULTS.order_bound)

    Returns:
        DeltaClosure: Fecho e certificado
    """
    N = DEFAULTS.order_bound if N is None else N
    if N < 0:
        raise ValueError("A cota de ordem deve ser não negativa")
    base = lift_ideal(I, R)
    current = base
    frontier = [g for g in base.gens if not R.is_zero(g)]
    certified = False
    levels = 0
    for _ in range(N):
        if current.is_unit():
            certified = True
            break
        new: List[Poly] = []
        for g in frontier:
            for i in range(R.ndelta):
                r = current.reduce(R.derive(g, i))
                if not r.is_zero():
                    new.append(r)
        levels += 1
        if not new:
            certified = True
            break
        current = Ideal(R.ring, list(current.groebner()) + new)
        frontier = new
    if not certified:
        certified = current.is_unit() or is_delta_ideal(current, R)
    result = current.with_delta_bound(N if certified else None)
    get_logger().log_event(EventType.DELTA_CLOSURE, "Fecho diferencial",
                           {'bound': N, 'levels': levels, 'certified': certified,
                            'basis': len(result.groebner())})
    return DeltaClosure(base=base, bound=N, result=result, certified=certified, levels=levels)


class MembershipStatus(Enum):
    """Respostas da pertinência a ⟨I⟩"""
    YES = "yes"
    NOT_FOUND_AT_BOUND = "not_found_at_bound"
    NO = "no"


@dataclass
class DeltaMembership:
    """
    Resultado de delta_member

    Attributes:
        status (MembershipStatus): YES, NOT_FOUND_AT_BOUND ou NO (só com certificado)
        bound (int): Cota N usada
        closure (DeltaClosure): Fecho calculado
    """
    status: MembershipStatus
    bound: int
    closure: DeltaClosure

    @property
    def is_member(self) -> bool:
        return self.status is MembershipStatus.YES


def delta_member(f: Poly, I: Ideal, R: DiffRing, N: Optional[int] = None) -> DeltaMembership:
    """
    Semidecisão de f ∈ ⟨I⟩ pelo fecho truncado

    Args:
        f: Polinômio
        I: Ideal
        R: Δ-anel
        N: Cota de ordem

    Returns:
        DeltaMembership: YES; NO quando o fecho é certificado; senão NOT_FOUND_AT_BOUND
    """
    closure = delta_close(I, R, N)
    if closure.result.contains(f):
        status = MembershipStatus.YES
    elif closure.certified:
        status = MembershipStatus.NO
    else:
        status = MembershipStatus.NOT_FOUND_AT_BOUND
    return DeltaMembership(status=status, bound=closure.bound, closure=closure)


def bracket_closure(I: Ideal, R: DiffRing, derivs: Sequence[DerivationSpec], N: Optional[int] = None) -> Ideal:
    """
    [I] truncado: ideal gerado por θ(g) para palavras θ sobre as derivações fornecidas

    Args:
        I: Ideal
        R: Anel (quociente e variáveis)
        derivs: Derivações amostradas de Θ̂(R) (não precisam comutar)
        N: Cota de ordem

    Returns:
        Ideal: Fecho pelas palavras de ordem ≤ N
    """
    return delta_close(I, R.with_derivations(derivs), N).result


# ----------------------------------------------------------------------
# radical diferencial
# ----------------------------------------------------------------------
def _iterated_partials(g: Poly) -> List[Poly]:
    out = []
    for v in g.used_variables():
        h = g
        for _ in range(g.degree_in(v) - 1):
            h = h.diff(v)
            out.append(h)
    return out


def radical_candidates(J: Ideal, R: DiffRing) -> List[Poly]:
    """
    Candidatos a geradores de √J

    Derivadas parciais iteradas dos geradores, suas Δ-derivadas e o radical dos geradores monomiais.
    """
    cands: List[Poly] = []
    for g in J.groebner():
        if len(g.terms) == 1:
            (mono,) = g.terms
            cands.append(Poly(R.ring, {tuple(1 if e else 0 for e in mono): 1}, normalized=True))
        cands.extend(_iterated_partials(g))
        cands.extend(R.derive(g, i) for i in range(R.ndelta))
    return [c for c in cands if not c.is_zero()]


def radical_step(J: Ideal, R: DiffRing) -> Ideal:
    """Acrescenta a J os candidatos que pertencem a √J"""
    if J.is_unit():
        return J
    current = J
    for c in radical_candidates(J, R):
        if current.contains(c):
            continue
        if radical_member(c, current):
            current = Ideal(R.ring, list(current.groebner()) + [c])
    return current


def is_radical_on_candidates(J: Ideal, R: DiffRing) -> bool:
    """True se nenhum candidato de radical_candidates está em √J fora de J"""
    return all(J.contains(c) or not radical_member(c, J) for c in radical_candidates(J, R))


@dataclass
class RadicalDeltaResult:
    """
    Aproximação por baixo de {I}

    Attributes:
        ideal (Ideal): Ideal final
        rounds (int): Rodadas executadas
        fixpoint (bool): Ponto fixo atingido (Δ-estável e estável pelo passo √)
    """
    ideal: Ideal
    rounds: int
    fixpoint: bool


def radical_delta_run(I: Ideal, R: DiffRing, N: Optional[int] = None,
                      rounds: Optional[int] = None) -> RadicalDeltaResult:
    """
    Alterna √ e ⟨ ⟩ a partir de I até o ponto fixo ou o fim das rodadas

    Args:
        I: Ideal
        R: Δ-anel de característica 0
        N: Cota de ordem de cada fecho
        rounds: Número máximo de rodadas

    Returns:
        RadicalDeltaResult: Ideal final e status
    """
    if R.characteristic != 0:
        raise CharacteristicError("radical_delta exige característica 0 (√I pode não ser Δ-ideal em char p)")
    rounds = DEFAULTS.rounds if rounds is None else rounds
    current = delta_close(I, R, N).result
    fixpoint = False
    done = 0
    for done in range(1, rounds + 1):
        closure = delta_close(radical_step(current, R), R, N)
        get_logger().log_event(EventType.RADICAL_ROUND, f"Rodada {done} de {{I}}",
                               {'certified': closure.certified, 'basis': len(closure.result.groebner())})
        if closure.certified and ideal_equal(closure.result, current):
            current = closure.result
            fixpoint = True
            break
        current = closure.result
    return RadicalDeltaResult(ideal=current, rounds=done, fixpoint=fixpoint)


def radical_delta(I: Ideal, R: DiffRing, N: Optional[int] = None, rounds: Optional[int] = None) -> Ideal:
    """Ideal final de radical_delta_run (contido em {I})"""
    return radical_delta_run(I, R, N, rounds).ideal


# ----------------------------------------------------------------------
# trajetória p#
# ----------------------------------------------------------------------
class PsharpStatus(Enum):
    """Condição de parada da cadeia J_k"""
    FIXPOINT = "fixpoint"
    DEGREE_EXHAUSTED = "degree-exhausted"
    DEGREE_EXHAUSTED_STABLE = "degree-exhausted-stable"
    ITERATION_CAPPED = "iteration-capped"


@dataclass
class PsharpResult:
    """
    Resultado de psharp

    Attributes:
        p (Ideal): Ideal de entrada
        degree_bound (int): Janela de grau D
        trace (list): Cadeia J_0 = p ⊇ J_1 ⊇ ...
        final (Ideal): Ideal final
        status (PsharpStatus): Condição de parada
        final_delta_stable (bool): Certificado: final é Δ-ideal
        final_in_p (bool): Certificado: final ⊆ p
        truncated (bool): Alguma etapa perdeu informação fora da janela
    """
    p: Ideal
    degree_bound: int
    trace: List[Ideal] = field(default_factory=list)
    final: Optional[Ideal] = None
    status: PsharpStatus = PsharpStatus.ITERATION_CAPPED
    final_delta_stable: bool = False
    final_in_p: bool = False
    truncated: bool = False

    @property
    def steps(self) -> int:
        return len(self.trace) - 1

    def to_json(self) -> Dict[str, object]:
        return {
            "p": str(self.p),
            "degree_bound": self.degree_bound,
            "trace": [str(J) for J in self.trace],
            "final": str(self.final),
            "status": self.status.value,
            "certificates": {"delta_stable": self.final_delta_stable, "contained_in_p": self.final_in_p},
            "truncated": self.truncated,
        }


def _window_basis(J: Ideal, R: DiffRing, degree: int) -> List[Poly]:
    """Base de (J/Q) ∩ {grau ≤ D}: M - NF_J(M) para M ∈ LT(J) fora de LT(Q)"""
    leads_j = [g.lm(DEGREVLEX) for g in J.groebner()]
    leads_q = [g.lm(DEGREVLEX) for g in R.quotient.groebner()]
    out = []
    for m in R.ring.monomials_up_to(degree):
        if any(mono_divides(lead, m) for lead in leads_q):
            continue
        if not any(mono_divides(lead, m) for lead in leads_j):
            continue
        mono = Poly(R.ring, {m: 1}, normalized=True)
        out.append(mono - J.reduce(mono))
    return out


def _stable_kernel(J: Ideal, R: DiffRing, window: List[Poly]) -> List[Poly]:
    """Elementos f da janela com NF_J(∂_i f) = 0 para todo i"""
    rows: Dict[tuple, int] = {}
    columns = []
    for w in window:
        column = {}
        for i in range(R.ndelta):
            for m, c in J.reduce(R.derive(w, i)).terms.items():
                key = (i, m)
                rows.setdefault(key, len(rows))
                column[key] = c
        columns.append(column)
    matrix = [[0] * len(window) for _ in rows]
    for j, column in enumerate(columns):
        for key, c in column.items():
            matrix[rows[key]][j] = c
    out = []
    for v in kernel(matrix, len(window), R.field):
        f = R.ring.zero()
        for c, w in zip(v, window):
            if c != 0:
                f = f + w.scale(c)
        out.append(f)
    return out


def _regenerate(polys: List[Poly], R: DiffRing) -> Ideal:
    """Ideal (polys) + Q com geradores não redundantes"""
    current = R.zero_ideal()
    for f in sorted(polys, key=lambda h: (h.degree(), len(h.terms))):
        if not current.contains(f):
            current = Ideal(R.ring, list(current.groebner()) + [f])
    return current


def psharp(p: Ideal, R: DiffRing, D: Optional[int] = None, maxiter: Optional[int] = None) -> PsharpResult:
    """
    Trajetória p# = {f : θ(f) ∈ p para todo θ} pela cadeia J_{k+1} = {f ∈ J_k : ∂_i f ∈ J_k}

    Cada passo testa primeiro se J_k já é Δ-estável; senão calcula o núcleo de
    f ↦ (NF_{J_k}(∂_i f))_i na janela J_k ∩ {grau ≤ D} e regenera o ideal.

    Args:
        p: Ideal próprio
        R: Δ-anel
        D: Janela de grau (padrão DEFAULTS.degree_window)
        maxiter: Número máximo de passos

    Returns:
        PsharpResult: Cadeia, ideal final, status e certificados
    """
    D = DEFAULTS.degree_window if D is None else D
    maxiter = DEFAULTS.maxiter if maxiter is None else maxiter
    J = lift_ideal(p, R)
    if J.is_unit():
        raise ProperIdealError(f"psharp exige ideal próprio, recebeu {p}")
    logger = get_logger()
    result = PsharpResult(p=J, degree_bound=D, trace=[J])
    zero = R.zero_ideal()
    for step in range(maxiter + 1):
        if is_delta_ideal(J, R):
            result.final = J
            result.status = (PsharpStatus.DEGREE_EXHAUSTED_STABLE if result.truncated
                             else PsharpStatus.FIXPOINT)
            break
        if step == maxiter:
            result.final = J
            result.status = PsharpStatus.ITERATION_CAPPED
            break
        window = _window_basis(J, R, D)
        stable = _stable_kernel(J, R, window)
        logger.log_psharp_step(step, len(J.groebner()), len(window), len(stable))
        if not stable:
            result.final = zero
            result.status = PsharpStatus.DEGREE_EXHAUSTED
            break
        nxt = _regenerate(stable, R)
        gens = [g for g in J.groebner() if not R.is_zero(g)]
        if not result.truncated:
            result.truncated = any(not nxt.contains(a * b) for k, a in enumerate(gens) for b in gens[k:])
        J = nxt
        result.trace.append(J)
    result.final_delta_stable = is_delta_ideal(result.final, R)
    result.final_in_p = ideal_contains(result.p, result.final)
    return result


# ----------------------------------------------------------------------
# primalidade
# ----------------------------------------------------------------------
@dataclass(frozen=True)
class PrimalityWitness:
    """f, g ∉ J com f·g ∈ J"""
    f: Poly
    g: Poly


def primality_falsify(J: Ideal, R: DiffRing, trials: int = 200, degcap: int = 3,
                      seed: int = 0) -> Optional[PrimalityWitness]:
    """
    Procura f, g ∉ J com f·g ∈ J (busca exaustiva em monômios, depois aleatória)

    Args:
        J: Ideal próprio
        R: Anel (o quociente Q é incorporado)
        trials: Pares aleatórios testados após a busca exaustiva
        degcap: Grau máximo dos candidatos
        seed: Semente da busca aleatória

    Returns:
        PrimalityWitness ou None (nenhuma testemunha encontrada; não prova primalidade)
    """
    J = lift_ideal(J, R)
    if J.is_unit():
        raise ProperIdealError(f"primality_falsify exige ideal próprio, recebeu {J}")
    monos = [Poly(R.ring, {m: 1}, normalized=True) for m in R.ring.monomials_up_to(degcap)]
    outside = [f for f in monos if not J.contains(f)]
    for k, f in enumerate(outside):
        for g in outside[k:]:
            if J.contains(f * g):
                return PrimalityWitness(f, g)
    gen = InstanceGenerator(seed)
    for _ in range(trials):
        f = gen.poly(R.ring, degcap, 3)
        g = gen.poly(R.ring, degcap, 3)
        if J.contains(f) or J.contains(g):
            continue
        if J.contains(f * g):
            return PrimalityWitness(f, g)
    return None


@dataclass(frozen=True)
class KeigherWitness:
    """
    Operadores mínimos com θ_x(x) ∉ p e θ_y(y) ∉ p

    Attributes:
        theta_x (ThetaAb): Menor θ com θ(x) ∉ p
        theta_y (ThetaAb): Menor θ com θ(y) ∉ p
        product_outside (bool): (θ_x θ_y)(xy) ∉ p
    """
    theta_x: ThetaAb
    theta_y: ThetaAb
    product_outside: bool


def keigher_witness(p: Ideal, x: Poly, y: Poly, R: DiffRing,
                    order: ThetaOrder = ThetaOrder.KEIGHER, maxord: int = 4) -> Optional[KeigherWitness]:
    """
    Testemunha de que xy ∉ p# quando x, y ∉ p#

    Args:
        p: Ideal primo
        x: Elemento fora de p#
        y: Elemento fora de p#
        R: Δ-anel parcial
        order: Boa ordem de Θ^ab(R)
        maxord: Ordem máxima pesquisada

    Returns:
        KeigherWitness ou None se x ou y não sai de p até a ordem maxord
    """
    if not is_partial(R):
        raise NonCommutingError("keigher_witness exige Δ-anel parcial")
    p = lift_ideal(p, R)
    thetas = sorted(multi_indices_up_to(R.ndelta, maxord), key=lambda t: theta_key(t, order))

    def least(z: Poly) -> Optional[ThetaAb]:
        return next((t for t in thetas if not p.contains(apply_ab(z, t, R))), None)

    tx, ty = least(x), least(y)
    if tx is None or ty is None:
        return None
    value = apply_ab(x * y, tx * ty, R)
    return KeigherWitness(theta_x=tx, theta_y=ty, product_outside=not p.contains(value))
