"""
Lemmas Module
Verificadores executáveis das propriedades de Δ-ideais:
quociente, radical mínimo, lema fácil, nilpotência, super-lema, idempotentes e primos mínimos
Falhas viram contraexemplos no relatório; nenhum verificador lança exceção por falha de checagem
"""

from itertools import product
from typing import Iterable, List, Optional, Sequence, Tuple

from .dideal import (bracket_closure, delta_close, is_delta_ideal, is_radical_on_candidates,
                     lift_ideal, radical_delta)
from .operators import apply_theta, words_up_to
from .ring import DerivationSpec, DiffRing
from ..algebra.ideal import (Ideal, colon, colon_ideal, ideal_contains, ideal_equal, ideal_intersect,
                             ideal_product, ideal_sum, saturation)
from ..algebra.polynomial import Poly
from ..utils.data_generator import InstanceGenerator
from ..utils.errors import CharacteristicError, UncertifiedInputError
from ..verification.report import Report


def _require_char_zero(R: DiffRing, what: str):
    if R.characteristic != 0:
        raise CharacteristicError(f"{what} exige característica 0")


def _power_mod(f: Poly, n: int, R: DiffRing) -> Poly:
    """f^n módulo Q, reduzindo a cada produto"""
    result = R.ring.one()
    base = R.reduce(f)
    while n:
        if n & 1:
            result = R.reduce(result * base)
        n >>= 1
        if n and not base.is_zero():
            base = R.reduce(base * base)
    return R.reduce(result)


def _nonzero_gens(I: Ideal, R: DiffRing) -> List[Poly]:
    return [g for g in I.gens if not R.is_zero(g)]


def sample_product_pairs(I: Ideal, R: DiffRing, gen: InstanceGenerator,
                         samples: int, max_degree: int = 2) -> List[Tuple[Poly, Poly]]:
    """
    Pares (x, y) com xy ∈ I: x sorteado (ou variável), y um gerador de (I : x)

    Args:
        I: Ideal
        R: Anel
        gen: Gerador de instâncias
        samples: Número de pares
        max_degree: Grau dos x sorteados

    Returns:
        list: Pares com produto em I
    """
    pairs = []
    candidates = list(R.ring.gens())
    for _ in range(samples):
        if candidates and gen.rng.random() < 0.5:
            x = gen.choice(candidates)
        else:
            x = gen.poly(R.ring, max_degree, 2)
        if R.is_zero(x):
            continue
        quotient = colon(I, x)
        ys = _nonzero_gens(quotient, R) or [R.ring.zero()]
        pairs.append((x, gen.choice(ys)))
    return pairs


def verify_lemma_easy(R: DiffRing, I: Ideal, samples: int = 20, max_order: int = 4,
                      seed: int = 0) -> Report:
    """
    xy ∈ I ⟹ x^{e(θ)+1}·θ(y) ∈ I, para I Δ-ideal

    Args:
        R: Δ-anel
        I: Δ-ideal
        samples: Pares (x, y) amostrados
        max_order: Ordem máxima das palavras
        seed: Semente

    Returns:
        Report: Checagens e contraexemplos
    """
    I = lift_ideal(I, R)
    if not is_delta_ideal(I, R):
        raise UncertifiedInputError(f"{I} não é Δ-ideal")
    report = Report("lemma-easy", params={"seed": seed, "samples": samples, "max_order": max_order})
    gen = InstanceGenerator(seed)
    words = list(words_up_to(R.ndelta, max_order))
    for x, y in sample_product_pairs(I, R, gen, samples):
        for theta in words:
            value = _power_mod(x, theta.order + 1, R) * apply_theta(y, theta, R)
            report.check(I.contains(value), x=x, y=y, theta=str(theta))
    return report


def verify_nilpotency(R: DiffRing, x: Poly, n: int, derivs: Optional[Sequence[DerivationSpec]] = None,
                      max_order: int = 3) -> Report:
    """
    Para x^n ≡ 0: (∂x)^{2ℓ-1}·x^{n-ℓ} ≡ 0 (ℓ = 1..n) e θ(x)^{2^{e(θ)}(n-1)+1} ≡ 0

    Args:
        R: Δ-anel de característica 0 com quociente
        x: Elemento nilpotente
        n: Expoente com x^n ≡ 0
        derivs: Derivações a usar (padrão: as de R)
        max_order: Ordem máxima das palavras θ

    Returns:
        Report: Checagens e contraexemplos
    """
    _require_char_zero(R, "verify_nilpotency")
    if not R.is_zero(_power_mod(x, n, R)):
        raise UncertifiedInputError(f"{x}^{n} não é nulo no quociente")
    S = R.with_derivations(derivs) if derivs is not None else R
    report = Report("nilpotency", params={"x": x, "n": n, "max_order": max_order})
    for i in range(S.ndelta):
        dx = S.derive(x, i)
        for ell in range(1, n + 1):
            value = _power_mod(dx, 2 * ell - 1, S) * _power_mod(x, n - ell, S)
            report.check(S.is_zero(value), derivation=i, ell=ell)
    for theta in words_up_to(S.ndelta, max_order):
        exponent = 2 ** theta.order * (n - 1) + 1
        report.check(S.is_zero(_power_mod(apply_theta(x, theta, S), exponent, S)),
                     theta=str(theta), exponent=exponent)
    return report


def verify_super_lemma(R: DiffRing, derivs: Sequence[DerivationSpec], I: Ideal, J: Ideal,
                       maxord: int = 3) -> Report:
    """
    I ∩ J = 0 ⟹ θ(x)·θ'(y) = 0 para x ∈ I, y ∈ J e palavras θ, θ' sobre derivações arbitrárias

    Args:
        R: Anel (quociente)
        derivs: Derivações de Θ̂(R) (não precisam comutar)
        I: Ideal
        J: Ideal com I ∩ J = (0)
        maxord: Ordem máxima das palavras

    Returns:
        Report: Checagens e contraexemplos
    """
    I, J = lift_ideal(I, R), lift_ideal(J, R)
    if not ideal_equal(ideal_intersect(I, J), R.zero_ideal()):
        raise UncertifiedInputError(f"{I} ∩ {J} não é nulo")
    S = R.with_derivations(derivs)
    report = Report("super-lemma", params={"derivations": [repr(d) for d in derivs], "maxord": maxord})
    words = list(words_up_to(S.ndelta, maxord))
    for x in _nonzero_gens(I, R):
        images_x = {w: apply_theta(x, w, S) for w in words}
        for y in _nonzero_gens(J, R):
            for w2 in words:
                ty = apply_theta(y, w2, S)
                for w1 in words:
                    report.check(S.is_zero(images_x[w1] * ty), x=x, y=y, theta=str(w1), theta2=str(w2))
    return report


def verify_bracket_nil2(R: DiffRing, derivs: Sequence[DerivationSpec], I: Ideal, J: Ideal,
                        N: int = 3) -> Report:
    """
    [I] ∩ [J] ⊆ Nil₂(R): produtos de geradores da interseção são nulos

    Args:
        R: Anel
        derivs: Derivações amostradas
        I: Ideal
        J: Ideal com I ∩ J = (0)
        N: Cota de ordem dos fechos

    Returns:
        Report: Checagens e contraexemplos
    """
    bi = bracket_closure(I, R, derivs, N)
    bj = bracket_closure(J, R, derivs, N)
    inter = _nonzero_gens(ideal_intersect(bi, bj), R)
    report = Report("bracket-nil2", params={"N": N, "intersection": [str(g) for g in inter]})
    for k, a in enumerate(inter):
        for b in inter[k:]:
            report.check(R.is_zero(a * b), a=a, b=b)
    return report


def verify_colon_lemma(R: DiffRing, I: Ideal, S: Iterable[Poly], samples: int = 10, seed: int = 0,
                       radical: Optional[bool] = None) -> Report:
    """
    Propriedades (i)-(v) dos ideais quociente (I : s) e (I : s^∞)

    Args:
        R: Δ-anel
        I: Ideal (as partes (iii) e (v) só se aplicam se for Δ-ideal; (iv) e (v) se for radical)
        S: Elementos s não nulos
        samples: Elementos amostrados para a checagem de (ii) sobre ideais
        seed: Semente
        radical: Se I é radical (afirmado pelo chamador); None usa o teste nos candidatos

    Returns:
        Report: Checagens e contraexemplos
    """
    I = lift_ideal(I, R)
    delta = is_delta_ideal(I, R)
    if radical is None:
        radical = is_radical_on_candidates(I, R)
    report = Report("colon-lemma", params={"ideal": I, "delta": delta, "radical": radical, "seed": seed})
    gen = InstanceGenerator(seed)
    for s in S:
        if R.is_zero(s):
            continue
        col = colon(I, s)
        sat = saturation(I, s)
        report.check(ideal_contains(col, I) and ideal_contains(sat, col), part="i", s=s)
        report.check(all(I.contains(g * s) for g in col.gens), part="ii", s=s)
        if delta:
            report.check(is_delta_ideal(sat, R), part="iii", s=s)
        if radical:
            report.check(ideal_equal(col, sat), part="iv-a", s=s)
            report.check(is_radical_on_candidates(col, R), part="iv-b", s=s)
        if radical and delta:
            report.check(is_delta_ideal(col, R), part="v", s=s)
    for _ in range(samples):
        K = lift_ideal(gen.ideal(R.ring, max_gens=2, max_degree=1), R)
        if K.is_zero() or ideal_equal(K, R.zero_ideal()):
            continue
        col = colon_ideal(I, K)
        report.check(ideal_contains(I, ideal_product(col, K)), part="ii-ideal", J=K)
    return report


def verify_min_rad(R: DiffRing, I: Ideal, J: Ideal, N: Optional[int] = None, samples: int = 6,
                   max_order: int = 3, seed: int = 0) -> Report:
    """
    Propriedades de {I}: monotonia, xy ∈ I ⟹ θ1(x)θ2(y) ∈ {I} e {I}{J} ⊆ {IJ}

    O lado direito é sempre a truncagem calculada de {·}, que está contida no ideal verdadeiro:
    uma aprovação é correta.

    Args:
        R: Δ-anel de característica 0
        I: Ideal
        J: Ideal
        N: Cota de ordem dos fechos
        samples: Pares (x, y) amostrados
        max_order: Ordem máxima das palavras
        seed: Semente

    Returns:
        Report: Checagens e contraexemplos
    """
    _require_char_zero(R, "verify_min_rad")
    I, J = lift_ideal(I, R), lift_ideal(J, R)
    report = Report("min-rad", params={"N": N, "samples": samples, "max_order": max_order, "seed": seed})
    gen = InstanceGenerator(seed)
    rad_i = radical_delta(I, R, N)
    rad_j = radical_delta(J, R, N)
    rad_sum = radical_delta(ideal_sum(I, J), R, N)
    rad_ij = radical_delta(lift_ideal(ideal_product(I, J), R), R, N)

    # (ii) I ⊆ I + J
    report.check(ideal_contains(rad_sum, rad_i), part="ii", left=I, right=ideal_sum(I, J))

    # (iii)
    words = list(words_up_to(R.ndelta, max_order))
    for x, y in sample_product_pairs(I, R, gen, samples):
        for w1, w2 in product(words, words):
            value = apply_theta(x, w1, R) * apply_theta(y, w2, R)
            report.check(rad_i.contains(value), part="iii", x=x, y=y, theta1=str(w1), theta2=str(w2))

    # (iv)
    for a in _nonzero_gens(rad_i, R):
        for b in _nonzero_gens(rad_j, R):
            report.check(rad_ij.contains(a * b), part="iv", a=a, b=b)

    # identidade (x'y)² = (x'y)(xy)' - (xy)(x'y')
    for x, y in ((gen.poly(R.ring, 2, 2), gen.poly(R.ring, 2, 2)) for _ in range(samples)):
        for i in range(R.ndelta):
            dx, dy = R.derive(x, i), R.derive(y, i)
            left = R.reduce((dx * y) * (dx * y))
            right = R.reduce((dx * y) * R.derive(x * y, i) - (x * y) * (dx * dy))
            report.check(left == right, part="identity", x=x, y=y, derivation=i)
    return report


def verify_idempotents(R: DiffRing, candidates: Iterable[Poly]) -> Report:
    """
    Idempotentes e (e² ≡ e) são constantes: ∂_i(e) ≡ 0

    Args:
        R: Δ-anel
        candidates: Elementos candidatos (os não idempotentes são ignorados)

    Returns:
        Report: Checagens e contraexemplos
    """
    report = Report("idempotents")
    for e in candidates:
        if not R.is_zero(e * e - e):
            continue
        for i in range(R.ndelta):
            report.check(R.is_zero(R.derive(e, i)), e=e, derivation=i)
    return report


def verify_minimal_primes(R: DiffRing, primes: Iterable[Ideal]) -> Report:
    """
    Em característica 0, primos mínimos (fornecidos pelo chamador) são Δ-ideais

    Args:
        R: Δ-anel de característica 0
        primes: Primos mínimos de R

    Returns:
        Report: Checagens e contraexemplos
    """
    _require_char_zero(R, "verify_minimal_primes")
    report = Report("minimal-primes")
    for p in primes:
        report.check(is_delta_ideal(p, R), prime=lift_ideal(p, R))
    return report


def closure_monotone(I: Ideal, R: DiffRing, bounds: Sequence[int]) -> Report:
    """⟨I⟩ truncado cresce com N e é idempotente após o certificado"""
    report = Report("closure-monotone", params={"bounds": list(bounds)})
    previous = None
    for N in bounds:
        closure = delta_close(I, R, N)
        if previous is not None:
            report.check(ideal_contains(closure.result, previous), N=N)
        if closure.certified:
            again = delta_close(closure.result, R, N)
            report.check(ideal_equal(again.result, closure.result), N=N, part="idempotent")
        previous = closure.result
    return report
