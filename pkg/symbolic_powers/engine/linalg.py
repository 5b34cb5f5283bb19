"""
Exact Linear Algebra
====================
Rango esatto di matrici intere su GF(p) oppure sui razionali.

GF(p): eliminazione di Gauss vettorizzata con numpy (int64, p < 2^31).
QQ: DomainMatrix di sympy.
"""

from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np
from sympy import isprime
from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix


DEFAULT_PRIME = 32003
_INT64_PRIME_LIMIT = 2 ** 31


@dataclass(frozen=True)
class FieldSpec:
    """Campo dei coefficienti: 0 = razionali esatti, altrimenti GF(p)."""
    characteristic: int = DEFAULT_PRIME

    def __post_init__(self):
        p = self.characteristic
        if p != 0 and (p < 2 or not isprime(p)):
            raise ValueError(f"La caratteristica {p} non è un numero primo")

    @classmethod
    def parse(cls, text: Union[str, 'FieldSpec', None]) -> 'FieldSpec':
        """Accetta `gf:32003`, `gf32003`, `32003`, `qq` oppure `0`."""
        if isinstance(text, FieldSpec):
            return text
        if text is None:
            return cls()
        raw = str(text).strip().lower()
        if raw in ("qq", "q", "rationals", "0"):
            return cls(0)
        raw = raw.removeprefix("gf").lstrip(":")
        try:
            return cls(int(raw))
        except ValueError:
            raise ValueError(f"Campo '{text}' non riconosciuto (usa gf:p oppure qq)")

    @property
    def is_rational(self) -> bool:
        return self.characteristic == 0

    @property
    def tag(self) -> str:
        return "qq" if self.is_rational else f"gf:{self.characteristic}"

    def __str__(self) -> str:
        return self.tag


def _rank_mod_p(A: np.ndarray, p: int) -> int:
    dtype = np.int64 if p < _INT64_PRIME_LIMIT else object
    A = np.array(A, dtype=dtype) % p
    rows, cols = A.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nonzero = np.nonzero(A[r:, c])[0]
        if nonzero.size == 0:
            continue
        pivot = r + int(nonzero[0])
        if pivot != r:
            A[[r, pivot], :] = A[[pivot, r], :]
        inv = pow(int(A[r, c]), -1, p)
        A[r, :] = (A[r, :] * inv) % p
        below = A[r + 1:, c].copy()
        mask = below != 0
        if np.any(mask):
            A[r + 1:][mask] = (A[r + 1:][mask] - np.outer(below[mask], A[r, :])) % p
        r += 1
    return r


def _rank_rational(A: np.ndarray) -> int:
    rows, cols = A.shape
    data = [[QQ(int(v)) for v in row] for row in A.tolist()]
    return DomainMatrix(data, (rows, cols), QQ).rank()


def rank(matrix: Union[np.ndarray, Sequence[Sequence[int]]], field: FieldSpec = FieldSpec()) -> int:
    """Rango esatto di una matrice a coefficienti interi."""
    A = np.asarray(matrix, dtype=np.int64)
    if A.ndim != 2:
        raise ValueError("Serve una matrice bidimensionale")
    if A.size == 0 or not np.any(A):
        return 0
    if field.is_rational:
        return _rank_rational(A)
    return _rank_mod_p(A, field.characteristic)
