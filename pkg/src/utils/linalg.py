"""
Linear Algebra Module
Eliminação de Gauss exata sobre Q ou F_p com matrizes numpy
F_p usa int64 com redução % p; Q usa dtype=object com escalares do corpo (int/Fraction)
Usada por constantes truncadas, núcleo de p#, posto tensorial e operadores anuladores
"""

from typing import List, Optional, Sequence, Tuple

import numpy as np

from ..algebra.fields import Field, Scalar

Matrix = List[List[Scalar]]

# produtos de dois resíduos precisam caber em int64
INT64_PRIME_LIMIT = 2 ** 31


def _is_modular(field: Field) -> bool:
    return 0 < field.characteristic < INT64_PRIME_LIMIT


def to_array(matrix: Sequence[Sequence[Scalar]], field: Field, ncols: Optional[int] = None) -> np.ndarray:
    """
    Matriz numpy com entradas normalizadas no corpo

    Args:
        matrix: Linhas da matriz
        field: Corpo dos coeficientes
        ncols: Número de colunas (necessário quando não há linhas)

    Returns:
        ndarray: int64 para F_p pequeno, object nos demais casos
    """
    nrows = len(matrix)
    if ncols is None:
        ncols = len(matrix[0]) if nrows else 0
    dtype = np.int64 if _is_modular(field) else object
    m = np.zeros((nrows, ncols), dtype=dtype)
    for i, row in enumerate(matrix):
        for j, c in enumerate(row):
            m[i, j] = field.normalize(c)
    return m


def _rref_array(m: np.ndarray, field: Field) -> Tuple[np.ndarray, List[int]]:
    """Escalona m no lugar; devolve as linhas pivô e as colunas pivô"""
    n_rows, n_cols = m.shape
    modular = m.dtype != object
    p = field.characteristic
    norm = np.frompyfunc(field.normalize, 1, 1)
    pivots: List[int] = []
    r = 0
    for c in range(n_cols):
        if r >= n_rows:
            break
        nonzero = np.flatnonzero((m[r:, c] != 0).astype(bool))
        if nonzero.size == 0:
            continue
        pivot = r + int(nonzero[0])
        if pivot != r:
            m[[r, pivot]] = m[[pivot, r]]
        if modular:
            inv = field.inv(int(m[r, c]))
            m[r] = (m[r] * inv) % p
        else:
            m[r] = norm(m[r] * field.inv(m[r, c]))
        for i in np.flatnonzero((m[:, c] != 0).astype(bool)):
            if i == r:
                continue
            factor = m[i, c]
            if modular:
                m[i] = (m[i] - factor * m[r]) % p
            else:
                m[i] = norm(m[i] - factor * m[r])
        pivots.append(c)
        r += 1
    return m[:r], pivots


def rref(matrix: Sequence[Sequence[Scalar]], field: Field) -> Tuple[Matrix, List[int]]:
    """
    Forma escalonada reduzida por linhas

    Args:
        matrix: Linhas da matriz
        field: Corpo dos coeficientes

    Returns:
        tuple: (linhas não nulas escalonadas, colunas pivô)
    """
    if not matrix:
        return [], []
    reduced, pivots = _rref_array(to_array(matrix, field), field)
    return reduced.tolist(), pivots


def rank(matrix: Sequence[Sequence[Scalar]], field: Field) -> int:
    """Posto exato"""
    if not matrix:
        return 0
    return len(_rref_array(to_array(matrix, field), field)[1])


def kernel(matrix: Sequence[Sequence[Scalar]], ncols: int, field: Field) -> Matrix:
    """
    Base do núcleo {v : M·v = 0}

    Args:
        matrix: Linhas de M
        ncols: Número de colunas (necessário quando M não tem linhas)
        field: Corpo dos coeficientes

    Returns:
        list: Vetores da base (um por coluna livre)
    """
    reduced, pivots = _rref_array(to_array(matrix, field, ncols), field)
    free = [j for j in range(ncols) if j not in set(pivots)]
    if not free:
        return []
    basis = np.zeros((len(free), ncols), dtype=reduced.dtype)
    for k, j in enumerate(free):
        basis[k, j] = 1
        if pivots:
            basis[k, pivots] = -reduced[:, j]
    if reduced.dtype != object:
        basis %= field.characteristic
    else:
        basis = np.frompyfunc(field.normalize, 1, 1)(basis)
    return basis.tolist()


def solve(matrix: Sequence[Sequence[Scalar]], rhs: Sequence[Scalar], field: Field):
    """
    Uma solução de M·v = b

    Args:
        matrix: Linhas de M
        rhs: Vetor b
        field: Corpo dos coeficientes

    Returns:
        list: Solução particular (variáveis livres nulas) ou None se inconsistente
    """
    if not matrix:
        return None if any(field.normalize(b) != 0 for b in rhs) else []
    ncols = len(matrix[0])
    augmented = np.hstack([to_array(matrix, field, ncols), to_array([[b] for b in rhs], field, 1)])
    reduced, pivots = _rref_array(augmented, field)
    if ncols in pivots:
        return None
    v = [0] * ncols
    for row, col in zip(reduced.tolist(), pivots):
        v[col] = row[ncols]
    return v
