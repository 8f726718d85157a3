"""
Groebner Module
Algoritmo de Buchberger com os dois critérios de Buchberger (via atualização de Gebauer-Möller)
e redução completa; produz a base de Gröbner reduzida, única para cada ordem
"""

from typing import Dict, List, Sequence, Set, Tuple

from .orders import DEGREVLEX, Monomial, MonomialOrder, mono_div, mono_divides, mono_lcm, mono_mul
from .polynomial import Poly
from ..utils.config import get_limits
from ..utils.errors import RingMismatchError, ResourceCapError
from ..utils.logger import get_logger


def _reduce_terms(terms: Dict[Monomial, object], reducers, key, norm) -> Dict[Monomial, object]:
    """Redução completa de um dicionário de termos por (lm, 1/lc, termos)"""
    p = dict(terms)
    r = {}
    while p:
        m = max(p, key=key)
        c = p[m]
        for gm, ginv, gterms in reducers:
            if mono_divides(gm, m):
                q = mono_div(m, gm)
                factor = norm(c * ginv)
                for gmono, gc in gterms.items():
                    mm = mono_mul(gmono, q)
                    v = norm(p.get(mm, 0) - factor * gc)
                    if v == 0:
                        p.pop(mm, None)
                    else:
                        p[mm] = v
                break
        else:
            r[m] = c
            del p[m]
    return r


def _reducers(basis: Sequence[Poly], order: MonomialOrder):
    out = []
    for g in basis:
        if g.is_zero():
            continue
        lm = g.lm(order)
        out.append((lm, g.ring.field.inv(g.terms[lm]), g.terms))
    return out


def normal_form(f: Poly, basis: Sequence[Poly], order: MonomialOrder = DEGREVLEX) -> Poly:
    """
    Resto da divisão completa de f pela base

    Args:
        f: Polinômio
        basis: Base de Gröbner para `order`
        order: Ordem monomial

    Returns:
        Poly: Forma normal (nula sse f pertence ao ideal)
    """
    for g in basis:
        if g.ring != f.ring:
            raise RingMismatchError(f"Anéis diferentes: {f.ring} e {g.ring}")
    if f.is_zero() or not basis:
        return f
    reducers = _reducers(basis, order)
    terms = _reduce_terms(f.terms, reducers, order.key, f.ring.field.normalize)
    return Poly(f.ring, terms, normalized=True)


def divide(h: Poly, f: Poly, order: MonomialOrder = DEGREVLEX) -> Tuple[Poly, Poly]:
    """
    Divisão de h por um único polinômio f

    Args:
        h: Dividendo
        f: Divisor não nulo
        order: Ordem monomial

    Returns:
        tuple: (quociente, resto)
    """
    ring = h.ring
    norm = ring.field.normalize
    key = order.key
    fm = f.lm(order)
    finv = ring.field.inv(f.terms[fm])
    p = dict(h.terms)
    q: Dict[Monomial, object] = {}
    r: Dict[Monomial, object] = {}
    while p:
        m = max(p, key=key)
        c = p[m]
        if mono_divides(fm, m):
            mono = mono_div(m, fm)
            factor = norm(c * finv)
            q[mono] = norm(q.get(mono, 0) + factor)
            for gmono, gc in f.terms.items():
                mm = mono_mul(gmono, mono)
                v = norm(p.get(mm, 0) - factor * gc)
                if v == 0:
                    p.pop(mm, None)
                else:
                    p[mm] = v
        else:
            r[m] = c
            del p[m]
    return Poly(ring, q), Poly(ring, r, normalized=True)


def s_polynomial(f: Poly, g: Poly, order: MonomialOrder = DEGREVLEX) -> Poly:
    """S-polinômio de f e g"""
    fm, gm = f.lm(order), g.lm(order)
    lcm = mono_lcm(fm, gm)
    field = f.ring.field
    left = f.mul_term(mono_div(lcm, fm), field.inv(f.terms[fm]))
    right = g.mul_term(mono_div(lcm, gm), field.inv(g.terms[gm]))
    return left - right


def _update(G: List[Poly], lmG: List[Monomial], P: Set[Tuple[int, int]], lmf: Monomial,
            key) -> Set[Tuple[int, int]]:
    """Novos pares ao acrescentar f (critérios do produto e da cadeia, Gebauer-Möller)"""
    n = len(G)
    P = {p for p in P if (not mono_divides(lmf, mono_lcm(lmG[p[0]], lmG[p[1]])) or
                          mono_lcm(lmG[p[0]], lmG[p[1]]) == mono_lcm(lmG[p[0]], lmf) or
                          mono_lcm(lmG[p[0]], lmG[p[1]]) == mono_lcm(lmG[p[1]], lmf))}
    lcm_dict: Dict[Monomial, List[int]] = {}
    for i in range(n):
        lcm_dict.setdefault(mono_lcm(lmG[i], lmf), []).append(i)
    minimal: List[Monomial] = []
    for L in sorted(lcm_dict.keys(), key=key):
        if all(not mono_divides(L_, L) for L_ in minimal):
            minimal.append(L)
    new_pairs = set()
    for L in minimal:
        if not any(mono_lcm(lmG[i], lmf) == mono_mul(lmG[i], lmf) for i in lcm_dict[L]):
            new_pairs.add((min(lcm_dict[L]), n))
    return P | new_pairs


def _minimalize(G: List[Poly], order: MonomialOrder) -> List[Poly]:
    Gmin: List[Poly] = []
    for f in sorted(G, key=lambda h: order.key(h.lm(order))):
        if all(not mono_divides(g.lm(order), f.lm(order)) for g in Gmin):
            Gmin.append(f)
    return Gmin


def _interreduce(G: List[Poly], order: MonomialOrder) -> List[Poly]:
    out = []
    for i, g in enumerate(G):
        others = G[:i] + G[i + 1:]
        out.append(normal_form(g, others, order).monic(order))
    return out


def groebner(gens: Sequence[Poly], order: MonomialOrder = DEGREVLEX) -> List[Poly]:
    """
    Base de Gröbner reduzida

    Args:
        gens: Geradores (todos no mesmo anel)
        order: Ordem monomial

    Returns:
        list: Base reduzida, mônica, ordenada por monômio líder crescente;
              [] para o ideal nulo e [1] para o anel todo
    """
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return []
    ring = gens[0].ring
    for g in gens:
        if g.ring != ring:
            raise RingMismatchError(f"Geradores em anéis diferentes: {ring} e {g.ring}")
    if any(g.is_constant() for g in gens):
        return [ring.one()]

    limits = get_limits()
    key = order.key
    G: List[Poly] = []
    lmG: List[Monomial] = []
    P: Set[Tuple[int, int]] = set()

    def add(f: Poly):
        nonlocal P
        f = f.monic(order)
        lmf = f.lm(order)
        P = _update(G, lmG, P, lmf, key)
        G.append(f)
        lmG.append(lmf)
        if len(G) > limits.max_basis_size:
            raise ResourceCapError(f"Base com mais de {limits.max_basis_size} elementos",
                                   cap="max_basis_size", value=len(G))

    for f in gens:
        add(f)

    processed = 0
    while P:
        i, j = min(P, key=lambda p: (key(mono_lcm(lmG[p[0]], lmG[p[1]])), p))
        P.remove((i, j))
        processed += 1
        if processed > limits.max_pairs:
            raise ResourceCapError(f"Mais de {limits.max_pairs} pares S", cap="max_pairs", value=processed)
        s = s_polynomial(G[i], G[j], order)
        r = normal_form(s, G, order)
        if not r.is_zero():
            if r.is_constant():
                return [ring.one()]
            add(r)

    basis = _interreduce(_minimalize(G, order), order)
    basis.sort(key=lambda h: key(h.lm(order)))
    get_logger().log_groebner(len(gens), len(basis), processed, repr(order))
    return basis
