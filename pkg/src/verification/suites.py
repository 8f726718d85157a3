"""
Suites Module
Suítes nomeadas de verificação executadas pela CLI (verify <suite>)
Cada suíte é determinística dada a semente e devolve um Report
"""

from itertools import product
from typing import Callable, Dict, List, Optional

from .report import Report
from ..algebra.fields import QQ, PrimeField
from ..algebra.ideal import Ideal, ideal_equal, ideal_intersect, ideal_member, radical_member
from ..algebra.polynomial import Poly, PolyRing
from ..differential.dideal import (PsharpStatus, bracket_closure, delta_close, is_delta_ideal,
                                   keigher_witness, primality_falsify, psharp, radical_delta)
from ..differential.lemmas import (verify_bracket_nil2, verify_colon_lemma, verify_idempotents,
                                   verify_min_rad, verify_minimal_primes, verify_nilpotency,
                                   verify_super_lemma)
from ..differential.operators import apply_ab, leibniz_expand
from ..differential.ring import DerivationSpec, DiffRing, is_partial
from ..protocols.poly_grammar import parse_poly
from ..protocols.ring_spec import builtin_ring
from ..schemes.affine import (AffineDScheme, SimplicityVerdict, main_theorem_check, simplicity_scan,
                              trajectory)
from ..tensor.ore import LinDiffOp, op_apply
from ..tensor.svdp import (contract_ideal, extend_ideal, fiber_j_ideal, fiber_pullback_sharp,
                           recompose, svdp_reduce)
from ..tensor.tensor_ring import TensorRing, length_by_search, tensor_length
from ..utils.data_generator import InstanceGenerator
from ..utils.errors import CharacteristicError
from ..utils.logger import get_logger

SUITE_WINDOW = 6
FIBER_CONSTANTS = (0, 1, -1, 2)


def _parse(R: DiffRing, *texts: str) -> List[Poly]:
    return [parse_poly(t, R.ring) for t in texts]


def _ideal(R: DiffRing, *texts: str) -> Ideal:
    return Ideal(R.ring, _parse(R, *texts))


def _uv_tensor() -> TensorRing:
    return TensorRing(PolyRing(QQ, ["u", "v"]))


def _uv_primes(T: TensorRing) -> Dict[str, Ideal]:
    u, v = T.base.gen("u"), T.base.gen("v")
    return {
        "(0)": Ideal(T.base, []),
        "(u)": Ideal(T.base, [u]),
        "(v)": Ideal(T.base, [v]),
        "(u^2 - v)": Ideal(T.base, [u * u - v]),
        "(u, v)": Ideal(T.base, [u, v]),
    }


# ----------------------------------------------------------------------
# Kolchin-Leibniz
# ----------------------------------------------------------------------
def _random_partial_ring(gen: InstanceGenerator, field) -> DiffRing:
    """Derivações que comutam: imagens constantes ou diagonais (∂_i x_j = c_ij x_j)"""
    ring = PolyRing(field, ["x", "y", "z"])
    ndelta = int(gen.rng.integers(1, 4))
    diagonal = gen.rng.random() < 0.5
    specs = []
    for i in range(ndelta):
        images = {}
        for name in ring.variables:
            c = int(gen.rng.integers(-2, 3))
            images[name] = ring.gen(name).scale(c) if diagonal else ring.constant(c)
        specs.append(DerivationSpec(f"d{i + 1}", images))
    return DiffRing(ring, specs)


def suite_leibniz(seed: int = 0, cases: Optional[int] = None) -> Report:
    """θ(fg) calculado diretamente = expansão de Kolchin-Leibniz, sobre Q e F_5"""
    cases = 500 if cases is None else cases
    report = Report("leibniz", params={"seed": seed, "cases": cases})
    gen = InstanceGenerator(seed)
    f5 = PrimeField(5)
    for k in range(cases):
        R = _random_partial_ring(gen, QQ if k % 2 == 0 else f5)
        if not is_partial(R):
            report.check(False, case=k, reason="derivações geradas não comutam")
            continue
        theta = gen.theta_ab(R.ndelta, 4)
        f = gen.poly(R.ring, 4, 3)
        g = gen.poly(R.ring, 4, 3)
        direct = apply_ab(f * g, theta, R)
        expanded = leibniz_expand(f, g, theta, R)
        report.check(direct == expanded, case=k, f=f, g=g, theta=theta.exps, field=repr(R.field))
    return report


# ----------------------------------------------------------------------
# lemas do apêndice
# ----------------------------------------------------------------------
def suite_colon(seed: int = 0, cases: Optional[int] = None) -> Report:
    """(I : s), (I : s^∞) e (I : J) em anéis de característica 0"""
    samples = 6 if cases is None else cases
    report = Report("colon", params={"seed": seed, "samples": samples})
    radial, line, euler, dual = (builtin_ring(n) for n in ("radial", "line", "euler", "dual-q"))
    instances = [
        (radial, _ideal(radial, "x"), _parse(radial, "x", "x + 1", "x^2 - 2"), True),
        (line, _ideal(line, "x^2"), _parse(line, "x", "x + 1"), False),
        (euler, _ideal(euler, "x*y"), _parse(euler, "x", "y", "x + y", "x - 1"), True),
        (euler, _ideal(euler, "x", "y"), _parse(euler, "x", "x + y^2", "1 + x"), True),
        (dual, _ideal(dual, "x"), _parse(dual, "y", "x + y", "1 + x"), False),
    ]
    for R, I, S, radical in instances:
        report.merge(verify_colon_lemma(R, I, S, samples=samples, seed=seed, radical=radical))
    return report


def suite_minrad(seed: int = 0, cases: Optional[int] = None) -> Report:
    """{I}: monotonia, produto de derivadas, {I}{J} ⊆ {IJ} e a identidade de indução"""
    samples = 4 if cases is None else cases
    report = Report("minrad", params={"seed": seed, "samples": samples})
    radial, line, euler = (builtin_ring(n) for n in ("radial", "line", "euler"))
    instances = [
        (line, _ideal(line, "x^2"), _ideal(line, "x")),
        (radial, _ideal(radial, "x"), _ideal(radial, "x")),
        (radial, _ideal(radial), _ideal(radial)),
        (euler, _ideal(euler, "x*y"), _ideal(euler, "x")),
    ]
    for R, I, J in instances:
        report.merge(verify_min_rad(R, I, J, samples=samples, max_order=2, seed=seed))
    return report


def suite_nilpotency(seed: int = 0, cases: Optional[int] = None) -> Report:
    """(∂x)^{2n-1} = 0 e θ(x)^{2^{e(θ)}(n-1)+1} = 0 para x^n = 0, sobre Q"""
    report = Report("nilpotency", params={"seed": seed})
    R = builtin_ring("dual-q")
    x, y = R.gen("x"), R.gen("y")
    euler = DerivationSpec("e", {"x": x, "y": y})
    swap = DerivationSpec("f", {"y": x})
    for derivs in (None, [euler], [R.derivations[0], euler], [R.derivations[0], swap]):
        for z in (x, y, x + y, x.scale(3) - y):
            report.merge(verify_nilpotency(R, z, 2, derivs=derivs, max_order=3))
    # idempotentes e primos mínimos acompanham os lemas de nilpotência
    report.merge(verify_idempotents(R, [R.ring.one(), R.ring.zero(), x, x + 1]))
    euler_ring = builtin_ring("euler")
    cross = DiffRing(euler_ring.ring, euler_ring.derivations, [euler_ring.gen("x") * euler_ring.gen("y")])
    report.merge(verify_minimal_primes(cross, [_ideal(cross, "x"), _ideal(cross, "y")]))
    return report


def suite_superlemma(seed: int = 0, cases: Optional[int] = None) -> Report:
    """θ(x)θ'(y) = 0 para I ∩ J = 0, [I] ∩ [J] ⊆ Nil₂, e [I] ∩ [J] ≠ 0 possível"""
    maxord = 3 if cases is None else cases
    report = Report("superlemma", params={"seed": seed, "maxord": maxord})
    for name in ("dual-q", "dual-f2"):
        R = builtin_ring(name)
        x, y = R.gen("x"), R.gen("y")
        I, J = _ideal(R, "x"), _ideal(R, "y")
        swap = DerivationSpec("f", {"y": x})
        euler = DerivationSpec("e", {"x": x, "y": y})
        for derivs in ([R.derivations[0]], [R.derivations[0], swap], [swap, euler]):
            report.merge(verify_super_lemma(R, derivs, I, J, maxord=maxord))
            report.merge(verify_bracket_nil2(R, derivs, I, J, N=maxord))
        # [I] ∩ [J] não nulo apesar de I ∩ J = 0
        bi = bracket_closure(I, R, R.derivations, maxord)
        bj = bracket_closure(J, R, R.derivations, maxord)
        inter = ideal_intersect(bi, bj)
        report.check(not ideal_equal(inter, R.zero_ideal()), ring=name, claim="[I] ∩ [J] != 0",
                     bracket_i=str(bi))
        report.check(ideal_equal(bi, _ideal(R, "x", "y")), ring=name, claim="[(x)] = (x, y)",
                     bracket_i=str(bi))
    return report


# ----------------------------------------------------------------------
# p#
# ----------------------------------------------------------------------
def psharp_fixtures() -> List[tuple]:
    """(anel, primo) de característica 0 usados pela suíte psharp-prime"""
    rings = {n: builtin_ring(n) for n in ("line", "radial", "euler", "plane", "tensor-uv")}
    table = {
        "line": [[], ["x"], ["x - 1"], ["x + 2"], ["x^2 + 1"]],
        "radial": [[], ["x"], ["x - 1"], ["x + 1"], ["x^2 - 2"]],
        "euler": [["x"], ["y"], ["x - y"], ["x - 1"], ["x", "y"], ["x", "y - 1"]],
        "plane": [["x"], ["y"], ["x - y"], ["x", "y"]],
        "tensor-uv": [["u", "t"], ["u^2 - v", "t - 1"], ["u", "v", "t"], ["v", "t + 1"]],
    }
    return [(rings[name], _ideal(rings[name], *gens)) for name, gens_list in table.items()
            for gens in gens_list]


def suite_psharp_prime(seed: int = 0, cases: Optional[int] = None) -> Report:
    """p# é Δ-estável, contido em p e sem testemunha de não primalidade"""
    trials = 200 if cases is None else cases
    report = Report("psharp-prime", params={"seed": seed, "trials": trials, "D": SUITE_WINDOW})
    for R, p in psharp_fixtures():
        result = psharp(p, R, SUITE_WINDOW)
        final = result.final
        label = {"ring": R.name, "p": str(p), "status": result.status.value, "final": str(final)}
        report.check(result.status is not PsharpStatus.ITERATION_CAPPED, claim="terminates", **label)
        report.check(result.final_delta_stable and result.final_in_p, claim="certificates", **label)
        if final.is_unit():
            continue
        witness = primality_falsify(final, R, trials=trials, degcap=3, seed=seed)
        report.check(witness is None, claim="prime", witness=str(witness), **label)
        for x, y in product(R.ring.gens(), repeat=2):
            if final.contains(x) or final.contains(y):
                continue
            kw = keigher_witness(p, x, y, R)
            if kw is not None:
                report.check(kw.product_outside, claim="keigher", x=x, y=y, **label)
    return report


# ----------------------------------------------------------------------
# anel tensorial
# ----------------------------------------------------------------------
def suite_svdp_roundtrip(seed: int = 0, cases: Optional[int] = None) -> Report:
    """Idas e voltas i / i⁻¹, certificados de svdp_reduce, ação de K[∂] e comprimento"""
    cases = 200 if cases is None else cases
    T = _uv_tensor()
    report = Report("svdp-roundtrip", params={"seed": seed, "cases": cases})
    gen = InstanceGenerator(seed)
    for k in range(cases):
        I = gen.ideal(T.base, max_gens=3, max_degree=2, max_terms=3)
        report.check(ideal_equal(contract_ideal(extend_ideal(I, T), T), I), part="contract-extend", I=str(I))

    certified = 0
    for k in range(cases):
        seeds = gen.ideal(T.ring, max_gens=2, max_degree=2, max_terms=2)
        closure = delta_close(seeds, T.realization, 3)
        if not closure.certified:
            continue
        certified += 1
        J = closure.result
        contracted = contract_ideal(J, T)
        report.check(ideal_equal(extend_ideal(contracted, T), J), part="extend-contract", J=str(J))
        if k % 4 or J.is_unit():
            continue
        x = sum((gen.poly(T.ring, 1, 2) * g for g in J.gens), T.ring.zero())
        if x.is_zero():
            continue
        elem = T.from_poly(x)
        pairs = svdp_reduce(elem, J)
        report.check(recompose(pairs, T) == elem, part="reduce-recompose", x=str(elem))
        report.check(all(ideal_member(a, contracted) for a, _ in pairs), part="reduce-membership",
                     x=str(elem))
    report.params["certified_closures"] = certified

    for k in range(cases):
        L = LinDiffOp(T.K, {i: gen.poly(T.K, 2, 2) for i in range(int(gen.rng.integers(1, 3)))})
        M = LinDiffOp(T.K, {i: gen.poly(T.K, 2, 2) for i in range(int(gen.rng.integers(1, 3)))})
        lam = gen.poly(T.K, 4, 3)
        report.check(op_apply(L * M, lam) == op_apply(L, op_apply(M, lam)), part="ev-equivariant",
                     L=str(L), M=str(M), lam=str(lam))

    # grade exaustiva: suporte {1, u, v} x {1, t, t^2}, coeficientes em {-1, 0, 1}
    monos = [T.base.one(), T.base.gen("u"), T.base.gen("v")]
    for coeffs in product((-1, 0, 1), repeat=9):
        terms = {}
        for k in range(3):
            a = sum((monos[j].scale(coeffs[3 * k + j]) for j in range(3)), T.base.zero())
            terms[k] = a
        elem = T.elem(terms)
        report.check(tensor_length(elem) == length_by_search(elem), part="length", x=str(elem))
    return report


def suite_prop_b(seed: int = 0, cases: Optional[int] = None) -> Report:
    """j(J) = i⁻¹(J) para J Δ-estável e j⁻¹(I)_# = ⟨i(I)⟩"""
    cases = 20 if cases is None else cases
    T = _uv_tensor()
    report = Report("propB", params={"seed": seed, "cases": cases, "D": SUITE_WINDOW})
    primes = _uv_primes(T)
    grid = {k: primes[k] for k in ("(0)", "(u)", "(u^2 - v)", "(u, v)")}
    for (name, I), c in product(grid.items(), FIBER_CONSTANTS):
        J = extend_ideal(I, T)
        report.check(ideal_equal(fiber_j_ideal(J, c, T), contract_ideal(J, T)), part="fiber-contract",
                     I=name, c=c)
        result = fiber_pullback_sharp(I, c, T, SUITE_WINDOW)
        report.check(result.status is not PsharpStatus.ITERATION_CAPPED and ideal_equal(result.final, J),
                     part="pullback-sharp", I=name, c=c, status=result.status.value, final=str(result.final))
        witness = primality_falsify(J, T.realization, trials=50, degcap=2, seed=seed)
        report.check(witness is None, part="extension-prime", I=name, witness=str(witness))
    gen = InstanceGenerator(seed)
    certified = 0
    for k in range(cases):
        closure = delta_close(gen.ideal(T.ring, max_gens=2, max_degree=2, max_terms=2), T.realization, 3)
        if not closure.certified:
            continue
        certified += 1
        c = FIBER_CONSTANTS[k % len(FIBER_CONSTANTS)]
        report.check(ideal_equal(fiber_j_ideal(closure.result, c, T), contract_ideal(closure.result, T)),
                     part="fiber-contract-random", J=str(closure.result), c=c)
    report.params["certified_closures"] = certified
    # a parte aleatória não pode passar em vazio
    report.check(cases == 0 or certified > 0, part="certified-closures", cases=cases)
    return report


def suite_main_theorem(seed: int = 0, cases: Optional[int] = None) -> Report:
    """Fibra sobre t = c ↔ folhas, nas duas direções, com a caracterização de ordem"""
    T = _uv_tensor()
    report = Report("main-theorem", params={"seed": seed, "D": SUITE_WINDOW})
    primes = _uv_primes(T)
    for (name, q), c in product(primes.items(), FIBER_CONSTANTS):
        P = extend_ideal(q, T)
        report.merge(main_theorem_check(q, P, c, T, SUITE_WINDOW, others=primes.values()))
    return report


# ----------------------------------------------------------------------
# característica p
# ----------------------------------------------------------------------
def _charp_line(p: int, nil: bool = False) -> DiffRing:
    ring = PolyRing(PrimeField(p), ["x"])
    x = ring.gen("x")
    quotient = [x ** p] if nil else []
    return DiffRing(ring, [DerivationSpec("d", {"x": ring.one()})], quotient, name=f"F{p}[x]")


def suite_charp_counterexamples(seed: int = 0, cases: Optional[int] = None) -> Report:
    """Resultados negativos em característica p se reproduzem exatamente"""
    report = Report("charp-counterexamples", params={"seed": seed})
    R = builtin_ring("charp-line")
    x = R.gen("x")
    sq = R.ideal([x * x])
    report.check(is_delta_ideal(sq, R), claim="(x^2) is a Δ-ideal in F2[x]")
    report.check(radical_member(x, sq) and not is_delta_ideal(R.ideal([x]), R),
                 claim="sqrt(x^2) = (x) is not a Δ-ideal")
    try:
        radical_delta(sq, R)
        report.check(False, claim="radical_delta refuses char p")
    except CharacteristicError:
        report.check(True)

    N = builtin_ring("nilsquare")
    xn = N.gen("x")
    result = psharp(N.ideal([xn]), N, SUITE_WINDOW)
    report.check(ideal_equal(result.final, N.zero_ideal()), claim="(x)# = (0) in F2[x]/(x^2)",
                 final=str(result.final))
    witness = primality_falsify(result.final, N, seed=seed)
    report.check(witness is not None and witness.f == xn and witness.g == xn,
                 claim="(0) not prime: witness (x, x)", witness=str(witness))
    report.check(not N.is_zero(N.derive(xn, 0) ** 3), claim="(dx)^3 != 0 although x^2 = 0")
    try:
        trajectory(N.ideal([xn]), AffineDScheme(N))
        report.check(False, claim="trajectory refuses char p")
    except CharacteristicError:
        report.check(True)

    for p in (2, 3):
        line = _charp_line(p)
        xp = line.ideal([line.gen("x") ** p])
        report.check(is_delta_ideal(xp, line) and not xp.is_unit() and not xp.is_zero(),
                     claim="(x^p) proper nonzero Δ-ideal", p=p)
        nil = _charp_line(p, nil=True)
        xv = nil.gen("x")
        samples = [xv ** k for k in range(1, p)] + [xv + 1, xv ** (p - 1) + xv]
        scan = simplicity_scan(AffineDScheme(nil), samples, N=p)
        report.check(scan.verdict is SimplicityVerdict.SIMPLE_CONSISTENT, claim="F_p[x]/(x^p) scans simple", p=p)
        report.check(nil.is_zero(xv * xv ** (p - 1)) and not nil.is_zero(xv), claim="zero divisors", p=p)
        report.check(not is_delta_ideal(nil.ideal([xv]), nil), claim="minimal prime (x) not Δ-stable", p=p)
    return report


SUITES: Dict[str, Callable[..., Report]] = {
    "leibniz": suite_leibniz,
    "colon": suite_colon,
    "minrad": suite_minrad,
    "nilpotency": suite_nilpotency,
    "superlemma": suite_superlemma,
    "psharp-prime": suite_psharp_prime,
    "svdp-roundtrip": suite_svdp_roundtrip,
    "propB": suite_prop_b,
    "main-theorem": suite_main_theorem,
    "charp-counterexamples": suite_charp_counterexamples,
}


def run_suite(name: str, seed: int = 0, cases: Optional[int] = None) -> Report:
    """
    Executa uma suíte pelo nome

    Args:
        name: Nome registrado em SUITES
        seed: Semente
        cases: Tamanho da amostra (significado depende da suíte; None = padrão)

    Returns:
        Report: Relatório da suíte
    """
    if name not in SUITES:
        raise KeyError(name)
    report = SUITES[name](seed=seed, cases=cases)
    report.lemma = name
    report.params.setdefault("seed", seed)
    get_logger().log_suite_result(name, report.instances, report.passed, len(report.counterexamples))
    return report
