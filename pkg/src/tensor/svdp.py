"""
SvdP Module
Correspondências entre ideais de A e Δ-ideais de A ⊗_C C[t]:
extensão i(I), contração i⁻¹(J), redução construtiva de x ∈ J a um certificado
Σ a_i ⊗ λ_i com a_i ∈ i⁻¹(J), fibra j (t ↦ c) e a trajetória de j⁻¹(I)
"""

from typing import List, Optional, Tuple

from .ore import LinDiffOp, ann_operator, op_apply, unit_operator
from .tensor_ring import TensorElem, TensorRing, decompose, tensor_length
from ..algebra.fields import Scalar
from ..algebra.ideal import Ideal, eliminate, ideal_member, substitute_ideal
from ..algebra.polynomial import Poly, substitute
from ..differential.dideal import PsharpResult, PsharpStatus, is_delta_ideal, psharp
from ..utils.config import DEFAULTS
from ..utils.errors import NotInIdealError, RingMismatchError, UncertifiedInputError
from ..utils.logger import EventType, get_logger

Certificate = List[Tuple[Poly, Poly]]


def extend_ideal(I: Ideal, T: TensorRing) -> Ideal:
    """
    Ideal ⟨i(I)⟩ da realização, gerado pelos geradores de I

    Como ∂ anula A, o ideal gerado já é Δ-estável (marcado com delta_bound = 0).

    Args:
        I: Ideal de A
        T: Anel tensorial

    Returns:
        Ideal: Ideal de A[t]
    """
    if I.ring != T.base:
        raise RingMismatchError(f"Ideal em {I.ring}, esperado {T.base}")
    return Ideal(T.ring, [g.embed(T.ring) for g in I.gens], delta_bound=0)


def contract_ideal(J: Ideal, T: TensorRing) -> Ideal:
    """
    i⁻¹(J) = J ∩ A por eliminação de t

    Args:
        J: Ideal da realização
        T: Anel tensorial

    Returns:
        Ideal: Ideal de A
    """
    if J.ring != T.ring:
        raise RingMismatchError(f"Ideal em {J.ring}, esperado {T.ring}")
    result = eliminate(J, [T.t])
    return Ideal(T.base, [g.embed(T.base) for g in result.gens])


def _separating_operator(lam1: Poly, lam2: Poly) -> LinDiffOp:
    """
    Operador L' com L'•λ2 = 0 e L'•λ1 = λ1

    Parte de L = λ2·∂ − λ2' (anula λ2; L•λ1 é o wronskiano, não nulo para λ's independentes)
    e recorre a ann_operator quando o wronskiano se anula.
    """
    K = lam1.ring
    L = LinDiffOp(K, {1: lam2, 0: -lam2.diff(0)})
    mu = op_apply(L, lam1)
    if mu.is_zero():
        bound = max(lam1.degree(), lam2.degree()) + 1
        L = next((op for op in ann_operator(lam2, bound, bound)
                  if not op_apply(op, lam1).is_zero()), None)
        if L is None:
            raise ArithmeticError(f"{lam1} e {lam2} têm os mesmos anuladores até a ordem {bound}")
        mu = op_apply(L, lam1)
    return LinDiffOp.scalar(lam1) * unit_operator(mu) * L


def _reduce(x: TensorElem, depth: int) -> Certificate:
    pairs = decompose(x)
    if len(pairs) <= 1:
        return pairs
    (_, lam1), (_, lam2) = pairs[0], pairs[1]
    y = x.apply(_separating_operator(lam1, lam2))
    get_logger().log_event(EventType.SVDP_REDUCTION, "Separação de λ's",
                           {'depth': depth, 'length': len(pairs),
                            'left': tensor_length(y), 'right': tensor_length(x - y)})
    return _reduce(y, depth + 1) + _reduce(x - y, depth + 1)


def svdp_reduce(x: TensorElem, J: Ideal) -> Certificate:
    """
    Certificado construtivo x = Σ a_i ⊗ λ_i com todo a_i ∈ i⁻¹(J)

    Indução no comprimento: com λ1, λ2 de anuladores distintos, um operador L'
    com L'•λ2 = 0 e L'•λ1 = λ1 divide x em L̃'•x e x − L̃'•x, ambos em J
    e de comprimento menor.

    Args:
        x: Elemento tensorial
        J: Δ-ideal da realização

    Returns:
        list: Pares (a_i, λ_i)
    """
    T = x.T
    if J.ring != T.ring:
        raise RingMismatchError(f"Ideal em {J.ring}, esperado {T.ring}")
    if J.delta_bound is None and not is_delta_ideal(J, T.realization):
        raise UncertifiedInputError(f"{J} não é Δ-estável")
    if not ideal_member(x.to_poly(), J):
        raise NotInIdealError(f"{x} ∉ {J}")
    return _reduce(x, 0)


def recompose(pairs: Certificate, T: TensorRing) -> TensorElem:
    """Σ a_i ⊗ λ_i"""
    return T.from_pairs(pairs)


def fiber_j(x: TensorElem, c: Scalar) -> Poly:
    """
    j(x) = Σ a_k·c^k (φ: t ↦ c)

    Args:
        x: Elemento tensorial
        c: Constante de C

    Returns:
        Poly: Elemento de A
    """
    T = x.T
    return substitute(x.to_poly(), T.t, c).embed(T.base)


def fiber_j_ideal(J: Ideal, c: Scalar, T: TensorRing) -> Ideal:
    """
    j(J): imagem de J por t ↦ c (gerada pelas imagens, pois j é sobrejetivo)

    Args:
        J: Ideal da realização
        c: Constante
        T: Anel tensorial

    Returns:
        Ideal: Ideal de A
    """
    if J.ring != T.ring:
        raise RingMismatchError(f"Ideal em {J.ring}, esperado {T.ring}")
    return substitute_ideal(J, {T.t: c}, T.base)


def fiber_pullback(I: Ideal, c: Scalar, T: TensorRing) -> Ideal:
    """j⁻¹(I) = ⟨i(I)⟩ + (t − c)"""
    ext = extend_ideal(I, T)
    return Ideal(T.ring, ext.gens + (T.ring.gen(T.t) - c,))


def fiber_pullback_sharp(I: Ideal, c: Scalar, T: TensorRing, D: Optional[int] = None,
                         maxiter: Optional[int] = None) -> PsharpResult:
    """
    Trajetória j⁻¹(I)_#, que deve reproduzir ⟨i(I)⟩

    Args:
        I: Ideal de A
        c: Constante
        T: Anel tensorial
        D: Janela de grau
        maxiter: Número máximo de passos

    Returns:
        PsharpResult: Resultado de psharp; para I = (1), o próprio (1) como ponto fixo
    """
    P = fiber_pullback(I, c, T)
    if P.is_unit():
        return PsharpResult(p=P, degree_bound=DEFAULTS.degree_window if D is None else D, trace=[P], final=P,
                            status=PsharpStatus.FIXPOINT, final_delta_stable=True, final_in_p=True)
    return psharp(P, T.realization, D, maxiter)
