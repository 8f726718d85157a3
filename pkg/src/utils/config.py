"""
Config Module
Limites de recursos e parâmetros padrão dos algoritmos diferenciais
Valores podem ser sobrescritos pela CLI (--max-degree, --order-bound, ...)
"""

import threading
from contextlib import contextmanager
from dataclasses import dataclass, replace
from typing import Iterator


@dataclass(frozen=True)
class EngineLimits:
    """
    Salvaguardas contra computações descontroladas

    Attributes:
        max_degree (int): Grau total máximo de um polinômio
        max_terms (int): Número máximo de termos de um polinômio
        max_basis_size (int): Tamanho máximo de uma base de Gröbner intermediária
        max_pairs (int): Número máximo de pares S processados
    """
    max_degree: int = 64
    max_terms: int = 20000
    max_basis_size: int = 400
    max_pairs: int = 20000


@dataclass(frozen=True)
class DiffDefaults:
    """
    Cotas padrão das rotinas diferenciais

    Attributes:
        order_bound (int): N, ordem máxima dos operadores θ
        degree_window (int): D, janela de grau do cálculo de p#
        maxiter (int): Número máximo de passos da cadeia de p#
        rounds (int): Rodadas de √ / ⟨ ⟩ em radical_delta
        seed (int): Semente padrão das amostragens
    """
    order_bound: int = 4
    degree_window: int = 8
    maxiter: int = 16
    rounds: int = 6
    seed: int = 0


DEFAULTS = DiffDefaults()

_lock = threading.Lock()
_current_limits = EngineLimits()


def get_limits() -> EngineLimits:
    """
    Retorna os limites correntes

    Returns:
        EngineLimits: Limites em vigor
    """
    return _current_limits


def set_limits(**overrides) -> EngineLimits:
    """
    Substitui campos dos limites correntes

    Args:
        **overrides: Campos de EngineLimits a alterar

    Returns:
        EngineLimits: Novos limites
    """
    global _current_limits
    with _lock:
        _current_limits = replace(_current_limits, **overrides)
        return _current_limits


@contextmanager
def limits_override(**overrides) -> Iterator[EngineLimits]:
    """Aplica limites temporários dentro de um bloco with"""
    previous = get_limits()
    try:
        yield set_limits(**overrides)
    finally:
        global _current_limits
        with _lock:
            _current_limits = previous
