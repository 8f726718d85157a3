"""
DiffAlgebra - Motor de álgebra diferencial
Linha de comando: aritmética de ideais, Δ-ideais, trajetórias p#,
correspondências entre A e A ⊗ C[t] e suítes de verificação
"""

import argparse
import json
import sys
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from src.algebra.fields import QQ
from src.algebra.ideal import (Ideal, colon, colon_ideal, eliminate, ideal_intersect, ideal_member,
                               saturation)
from src.algebra.polynomial import Poly, PolyRing
from src.differential.constants import constants_are_exact, constants_truncated
from src.differential.dideal import (delta_close, delta_member, is_delta_ideal, psharp,
                                     radical_delta_run)
from src.differential.ring import DiffRing, localize
from src.protocols.poly_grammar import (parse_operator, parse_poly, parse_poly_list, print_operator,
                                        print_poly, print_poly_list)
from src.protocols.ring_spec import BUILTIN_RINGS, load_fixtures, resolve_ring, ring_to_spec
from src.schemes.affine import (AffineDScheme, fiber_intersection, leaf_report, main_theorem_check,
                                simplicity_scan, trajectory)
from src.tensor.ore import ann_operator, ore_mul, unit_operator
from src.tensor.svdp import (contract_ideal, extend_ideal, fiber_pullback_sharp, recompose,
                             svdp_reduce)
from src.tensor.tensor_ring import TensorRing, decompose, tensor_length
from src.utils.config import DEFAULTS, limits_override
from src.utils.data_generator import InstanceGenerator
from src.utils.errors import EngineError, ResourceCapError, UsageError
from src.utils.logger import EventType, LogLevel, configure_logger
from src.verification.suites import SUITES, run_suite

# Resultado de um comando: (payload JSON, resumo em texto, passou)
Outcome = Tuple[Dict[str, Any], str, bool]

TENSOR_DEFAULT_RING = "uv"


# ----------------------------------------------------------------------
# leitura de argumentos
# ----------------------------------------------------------------------
def _require(args: argparse.Namespace, name: str) -> str:
    value = getattr(args, name, None)
    if value is None:
        raise UsageError(f"O comando {args.command} exige --{name.replace('_', '-')}")
    return value


def _ring(args: argparse.Namespace) -> DiffRing:
    return resolve_ring(_require(args, "ring"))


def _ideal(args: argparse.Namespace, R: DiffRing, name: str = "ideal") -> Ideal:
    """Ideal de R lido da opção (o quociente de R é incorporado)"""
    return R.ideal(parse_poly_list(_require(args, name), R.ring))


def _poly(args: argparse.Namespace, ring: PolyRing, name: str = "poly") -> Poly:
    return parse_poly(_require(args, name), ring)


def _scalar(text: str, ring: PolyRing):
    f = parse_poly(text, ring)
    if not f.is_constant():
        raise UsageError(f"Constante esperada, recebeu {text!r}")
    return f.constant_value()


def _tensor(args: argparse.Namespace) -> TensorRing:
    base = resolve_ring(args.ring or TENSOR_DEFAULT_RING)
    return TensorRing(base.ring, t=args.t)


def _operator_ring(args: argparse.Namespace) -> PolyRing:
    return PolyRing(QQ, [args.t])


def _basis_outcome(I: Ideal, key: str = "basis") -> Outcome:
    basis = list(I.groebner())
    return {key: [print_poly(g) for g in basis]}, print_poly_list(basis), True


# ----------------------------------------------------------------------
# comandos de ideais
# ----------------------------------------------------------------------
def cmd_gb(args) -> Outcome:
    R = _ring(args)
    return _basis_outcome(_ideal(args, R))


def cmd_nf(args) -> Outcome:
    R = _ring(args)
    r = _ideal(args, R).reduce(_poly(args, R.ring))
    return {"normal_form": print_poly(r)}, print_poly(r), True


def cmd_member(args) -> Outcome:
    R = _ring(args)
    member = ideal_member(_poly(args, R.ring), _ideal(args, R))
    return {"member": member}, "yes" if member else "no", True


def cmd_intersect(args) -> Outcome:
    R = _ring(args)
    return _basis_outcome(ideal_intersect(_ideal(args, R), _ideal(args, R, "other")))


def cmd_colon(args) -> Outcome:
    R = _ring(args)
    I = _ideal(args, R)
    if args.other is not None:
        return _basis_outcome(colon_ideal(I, _ideal(args, R, "other")))
    return _basis_outcome(colon(I, _poly(args, R.ring)))


def cmd_sat(args) -> Outcome:
    R = _ring(args)
    return _basis_outcome(saturation(_ideal(args, R), _poly(args, R.ring)))


def cmd_eliminate(args) -> Outcome:
    R = _ring(args)
    names = [v.strip() for v in _require(args, "vars").split(",") if v.strip()]
    for v in names:
        if not R.ring.has_variable(v):
            raise UsageError(f"Variável desconhecida {v!r}")
    return _basis_outcome(eliminate(_ideal(args, R), names))


# ----------------------------------------------------------------------
# comandos diferenciais
# ----------------------------------------------------------------------
def cmd_dclose(args) -> Outcome:
    R = _ring(args)
    closure = delta_close(_ideal(args, R), R, args.order_bound)
    basis = [print_poly(g) for g in closure.result.groebner()]
    payload = {"basis": basis, "bound": closure.bound, "certified": closure.certified,
               "levels": closure.levels}
    text = f"{closure.result}, certified={str(closure.certified).lower()}"
    return payload, text, True


def cmd_disideal(args) -> Outcome:
    R = _ring(args)
    stable = is_delta_ideal(_ideal(args, R), R)
    return {"delta_ideal": stable}, "yes" if stable else "no", True


def cmd_dmember(args) -> Outcome:
    R = _ring(args)
    answer = delta_member(_poly(args, R.ring), _ideal(args, R), R, args.order_bound)
    return {"status": answer.status.value, "bound": answer.bound}, answer.status.value, True


def cmd_radical_delta(args) -> Outcome:
    R = _ring(args)
    run = radical_delta_run(_ideal(args, R), R, args.order_bound, args.rounds)
    payload = {"basis": [print_poly(g) for g in run.ideal.groebner()], "rounds": run.rounds,
               "fixpoint": run.fixpoint}
    return payload, f"{run.ideal}, fixpoint={str(run.fixpoint).lower()}", True


def _psharp_outcome(result) -> Outcome:
    return result.to_json(), f"{result.final}, status={result.status.value}", True


def cmd_psharp(args) -> Outcome:
    R = _ring(args)
    return _psharp_outcome(psharp(_ideal(args, R), R, args.degree_window, args.maxiter))


def cmd_traj(args) -> Outcome:
    R = _ring(args)
    return _psharp_outcome(trajectory(_ideal(args, R), AffineDScheme(R), args.degree_window, args.maxiter))


def cmd_leaf(args) -> Outcome:
    R = _ring(args)
    fixtures = load_fixtures(args.fixtures, R) if args.fixtures else {}
    S = AffineDScheme(R, fixtures)
    targets = [(None, _ideal(args, R))] if args.ideal is not None else list(S.fixtures.items())
    if not targets:
        raise UsageError("leaf exige --ideal ou --fixtures")
    reports = []
    lines = []
    for name, p in targets:
        report = leaf_report(p, S, args.degree_window, seed=args.seed)
        entry = report.to_json()
        entry["name"] = name
        reports.append(entry)
        label = name or str(report.ideal)
        lines.append(f"{label}: leaf={str(report.is_leaf).lower()}"
                     + (f", trajectory={report.trajectory.final}" if report.trajectory else ""))
    return {"leaves": reports}, "\n".join(lines), True


def cmd_constants(args) -> Outcome:
    R = _ring(args)
    degree = DEFAULTS.degree_window if args.degree_window is None else args.degree_window
    basis = constants_truncated(R, degree)
    payload = {"degree": degree, "basis": [print_poly(f) for f in basis],
               "exact": constants_are_exact(R)}
    return payload, "span{" + ", ".join(print_poly(f) for f in basis) + "}", True


def cmd_localize(args) -> Outcome:
    R = _ring(args)
    loc = localize(R, _poly(args, R.ring))
    spec = ring_to_spec(loc)
    return {"ring": spec}, json.dumps(spec, ensure_ascii=False), True


def cmd_simple_scan(args) -> Outcome:
    R = _ring(args)
    if args.samples is not None:
        samples = parse_poly_list(args.samples, R.ring)
    else:
        gen = InstanceGenerator(args.seed)
        samples = [gen.nonconstant_poly(R.ring, max_degree=3) for _ in range(args.cases or 10)]
    result = simplicity_scan(AffineDScheme(R), samples, args.order_bound)
    text = result.verdict.value + (f" {result.witness}" if result.witness is not None else "")
    return result.to_json(), text, True


# ----------------------------------------------------------------------
# comandos tensoriais
# ----------------------------------------------------------------------
def _tensor_ideal(args, T: TensorRing, name: str = "ideal") -> Ideal:
    return Ideal(T.ring, parse_poly_list(_require(args, name), T.ring))


def _base_ideal(args, T: TensorRing, name: str = "ideal") -> Ideal:
    return Ideal(T.base, parse_poly_list(_require(args, name), T.base))


def cmd_fiber(args) -> Outcome:
    T = _tensor(args)
    c = _scalar(_require(args, "c"), T.base)
    if args.sharp:
        return _psharp_outcome(fiber_pullback_sharp(_base_ideal(args, T), c, T, args.degree_window,
                                                    args.maxiter))
    return _basis_outcome(fiber_intersection(_tensor_ideal(args, T), c, T))


def cmd_svdp_extend(args) -> Outcome:
    T = _tensor(args)
    return _basis_outcome(extend_ideal(_base_ideal(args, T), T))


def cmd_svdp_contract(args) -> Outcome:
    T = _tensor(args)
    return _basis_outcome(contract_ideal(_tensor_ideal(args, T), T))


def _pairs_json(pairs: Sequence[Tuple[Poly, Poly]]) -> List[Dict[str, str]]:
    return [{"a": print_poly(a), "lambda": print_poly(lam)} for a, lam in pairs]


def _pairs_text(pairs: Sequence[Tuple[Poly, Poly]]) -> str:
    return " + ".join(f"({print_poly(a)})⊗({print_poly(lam)})" for a, lam in pairs) or "0"


def cmd_svdp_reduce(args) -> Outcome:
    T = _tensor(args)
    x = T.from_poly(parse_poly(_require(args, "elem"), T.ring))
    J = _tensor_ideal(args, T)
    pairs = svdp_reduce(x, J)
    ok = recompose(pairs, T) == x
    return {"certificate": _pairs_json(pairs), "recomposes": ok}, _pairs_text(pairs), ok


def cmd_svdp_length(args) -> Outcome:
    T = _tensor(args)
    x = T.from_poly(parse_poly(_require(args, "elem"), T.ring))
    length = tensor_length(x)
    pairs = decompose(x)
    return {"length": length, "decomposition": _pairs_json(pairs)}, f"{length}: {_pairs_text(pairs)}", True


def cmd_main_check(args) -> Outcome:
    T = _tensor(args)
    q = _base_ideal(args, T, "q")
    P = _tensor_ideal(args, T)
    c = _scalar(_require(args, "c"), T.base)
    report = main_theorem_check(q, P, c, T, args.degree_window)
    return report.to_json(), report.to_frame().to_string(index=False), report.passed


# ----------------------------------------------------------------------
# operadores
# ----------------------------------------------------------------------
def cmd_ore(args) -> Outcome:
    K = _operator_ring(args)
    L = ore_mul(parse_operator(_require(args, "left"), K), parse_operator(_require(args, "right"), K))
    return {"product": print_operator(L), "order": L.order}, print_operator(L), True


def cmd_ann(args) -> Outcome:
    K = _operator_ring(args)
    lam = _poly(args, K)
    order = args.order if args.order is not None else max(lam.degree(), 0) + 1
    coeffdeg = args.coeffdeg if args.coeffdeg is not None else order
    basis = ann_operator(lam, order, coeffdeg)
    ops = [print_operator(L) for L in basis]
    return {"operators": ops, "order": order, "coeffdeg": coeffdeg}, "\n".join(ops) or "0", True


def cmd_unit_op(args) -> Outcome:
    K = _operator_ring(args)
    L = unit_operator(_poly(args, K))
    return {"operator": print_operator(L)}, print_operator(L), True


# ----------------------------------------------------------------------
# suítes
# ----------------------------------------------------------------------
def cmd_verify(args) -> Outcome:
    if args.suite not in SUITES:
        raise UsageError(f"Suíte desconhecida {args.suite!r}; opções: {', '.join(SUITES)}")
    report = run_suite(args.suite, seed=args.seed, cases=args.cases)
    return report.to_json(), report.to_frame().to_string(index=False), report.passed


# nome → (função, ajuda, opções extras)
COMMANDS: Dict[str, Tuple[Callable[[argparse.Namespace], Outcome], str, Tuple[str, ...]]] = {
    "gb": (cmd_gb, "Base de Gröbner reduzida", ("ideal",)),
    "nf": (cmd_nf, "Forma normal módulo o ideal", ("ideal", "poly")),
    "member": (cmd_member, "Pertinência exata", ("ideal", "poly")),
    "intersect": (cmd_intersect, "Interseção de dois ideais", ("ideal", "other")),
    "colon": (cmd_colon, "Ideal quociente (I : f) ou (I : J)", ("ideal", "poly", "other")),
    "sat": (cmd_sat, "Saturação (I : f^∞)", ("ideal", "poly")),
    "eliminate": (cmd_eliminate, "Eliminação de variáveis", ("ideal", "vars")),
    "dclose": (cmd_dclose, "Fecho diferencial truncado ⟨I⟩", ("ideal",)),
    "disideal": (cmd_disideal, "Teste exato de Δ-estabilidade", ("ideal",)),
    "dmember": (cmd_dmember, "Semidecisão de f ∈ ⟨I⟩", ("ideal", "poly")),
    "radical-delta": (cmd_radical_delta, "Aproximação de {I}", ("ideal", "rounds")),
    "psharp": (cmd_psharp, "Maior Δ-ideal contido em p", ("ideal",)),
    "traj": (cmd_traj, "Trajetória de um ponto (característica 0)", ("ideal",)),
    "leaf": (cmd_leaf, "Folhas e trajetórias de primos", ("ideal", "fixtures")),
    "fiber": (cmd_fiber, "Interseção de uma folha com a fibra t = c", ("ideal", "c", "sharp")),
    "svdp-extend": (cmd_svdp_extend, "Extensão ⟨i(I)⟩", ("ideal",)),
    "svdp-contract": (cmd_svdp_contract, "Contração i⁻¹(J)", ("ideal",)),
    "svdp-reduce": (cmd_svdp_reduce, "Certificado Σ a_i ⊗ λ_i de x ∈ J", ("ideal", "elem")),
    "svdp-length": (cmd_svdp_length, "Comprimento tensorial e decomposição mínima", ("elem",)),
    "ore": (cmd_ore, "Produto em K[∂]", ("left", "right")),
    "ann": (cmd_ann, "Anuladores de λ até uma ordem", ("poly", "order", "coeffdeg")),
    "unit-op": (cmd_unit_op, "Operador L com L•λ = 1", ("poly",)),
    "constants": (cmd_constants, "Constantes de grau limitado", ()),
    "localize": (cmd_localize, "Anel localizado R_f", ("poly",)),
    "simple-scan": (cmd_simple_scan, "Procura Δ-ideais próprios", ("samples",)),
    "main-check": (cmd_main_check, "Bijeção entre fibra e folhas", ("q", "ideal", "c")),
}

_OPTIONS: Dict[str, Tuple[Tuple[str, ...], Dict[str, Any]]] = {
    "ideal": (("--ideal", "-I"), {"help": "Geradores: \"f1, f2\" ou \"(f1, f2)\""}),
    "other": (("--other",), {"help": "Segundo ideal"}),
    "poly": (("--poly", "-f"), {"help": "Polinômio"}),
    "vars": (("--vars",), {"help": "Variáveis separadas por vírgula"}),
    "rounds": (("--rounds",), {"type": int, "default": None, "help": "Rodadas de √ e ⟨ ⟩"}),
    "fixtures": (("--fixtures",), {"help": "Arquivo JSON de primos nomeados"}),
    "c": (("--c",), {"help": "Constante da fibra t = c"}),
    "sharp": (("--sharp",), {"action": "store_true", "help": "Calcula j⁻¹(I)_# a partir de um ideal de A"}),
    "elem": (("--elem", "-x"), {"help": "Elemento de A[t]"}),
    "left": (("--left",), {"help": "Operador Σ a_i(t)·D^i"}),
    "right": (("--right",), {"help": "Operador Σ a_i(t)·D^i"}),
    "order": (("--order",), {"type": int, "default": None, "help": "Ordem máxima"}),
    "coeffdeg": (("--coeffdeg",), {"type": int, "default": None, "help": "Grau máximo dos coeficientes"}),
    "samples": (("--samples",), {"help": "Amostras \"f1, f2\" (padrão: aleatórias)"}),
    "q": (("--q",), {"help": "Primo de A (ponto da fibra)"}),
}


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--ring", "-R", help=f"Anel embutido ({', '.join(sorted(BUILTIN_RINGS))}) ou JSON")
    common.add_argument("--t", default="t", help="Nome da variável de K (padrão t)")
    common.add_argument("--seed", type=int, default=DEFAULTS.seed, help="Semente")
    common.add_argument("--cases", type=int, default=None, help="Tamanho das amostras")
    common.add_argument("--max-degree", type=int, default=None, help="Grau máximo dos polinômios")
    common.add_argument("--order-bound", "-N", type=int, default=None, help="Cota N de ordem")
    common.add_argument("--degree-window", "-D", type=int, default=None, help="Janela D de grau")
    common.add_argument("--maxiter", type=int, default=None, help="Passos máximos de p#")
    common.add_argument("--json", action="store_true", help="Saída em JSON")
    common.add_argument("--log-dir", default=None, help="Diretório de logs")
    common.add_argument("--verbose", "-v", action="store_true", help="Log detalhado no console")
    return common


def build_parser() -> argparse.ArgumentParser:
    """
    Monta o parser com um subcomando por operação

    Returns:
        ArgumentParser: Parser da CLI
    """
    common = _common_options()
    parser = argparse.ArgumentParser(prog="diffalgebra", description=__doc__.strip().splitlines()[0])
    sub = parser.add_subparsers(dest="command", metavar="command")
    sub.required = True
    for name, (_, help_text, options) in COMMANDS.items():
        cmd = sub.add_parser(name, parents=[common], help=help_text, description=help_text)
        for option in options:
            flags, kwargs = _OPTIONS[option]
            cmd.add_argument(*flags, dest=option, **kwargs)
    verify = sub.add_parser("verify", parents=[common], help="Suítes de verificação")
    verify.add_argument("suite", help=f"Uma de: {', '.join(SUITES)}")
    return parser


def dispatch(args: argparse.Namespace) -> Outcome:
    """Executa o comando já analisado"""
    handler = cmd_verify if args.command == "verify" else COMMANDS[args.command][0]
    if args.max_degree is None:
        return handler(args)
    with limits_override(max_degree=args.max_degree):
        return handler(args)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Ponto de entrada

    Args:
        argv: Argumentos (padrão sys.argv[1:])

    Returns:
        int: 0 sucesso, 1 falha de checagem, 2 uso, 3 limite de recursos
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    logger = configure_logger(log_dir=args.log_dir,
                              console_level=LogLevel.DEBUG if args.verbose else LogLevel.WARNING)
    logger.log_event(EventType.COMMAND, f"Comando {args.command}",
                     {'ring': args.ring, 'seed': args.seed}, level=LogLevel.INFO)
    try:
        payload, text, ok = dispatch(args)
    except EngineError as exc:
        if isinstance(exc, ResourceCapError):
            logger.log_event(EventType.RESOURCE_CAP, str(exc), {'cap': exc.cap, 'value': exc.value},
                             level=LogLevel.WARNING)
        logger.error(f"{type(exc).__name__}: {exc}", command=args.command)
        print(f"erro: {exc}", file=sys.stderr)
        return exc.exit_code

    print(json.dumps(payload, ensure_ascii=False, indent=2) if args.json else text)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
