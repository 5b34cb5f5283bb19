"""
Betti Oracle
============
Numeri di Betti graduati di R/I calcolati come omologia del complesso di
Koszul K(x_1..x_m) ⊗ R/I, blocco multigraduato per blocco multigraduato.

Nel multigrado b la base in grado omologico i è
    { e_F ⊗ x^{b - e_F} : F ⊆ supp(b), |F| = i, x^{b - e_F} ∉ I }
e il differenziale manda e_F ⊗ u in Σ_{k∈F} ± e_{F∖k} ⊗ x_k u
(termine nullo se x_k u ∈ I). La striscia di grado totale j è la somma
dei blocchi con |b| = j. Servono solo i multigradi del reticolo degli lcm,
cioè b ≤ lcm(𝒢(I)) con ogni coordinata non nulla uguale a un esponente di
un generatore.
"""

from concurrent.futures import ProcessPoolExecutor
from itertools import product as cartesian
from math import prod
from typing import Dict, List, Optional, Sequence, Tuple
import time

import numpy as np

from .errors import CapExceededError
from .limits import Limits
from .linalg import FieldSpec, rank
from .logger import ComputationLogger, maybe_log
from .monomial import MonomialIdeal
from .table import BettiTable


Block = Tuple[int, ...]


def default_degree_cap(I: MonomialIdeal) -> int:
    """max(deg lcm(𝒢(I)), grado massimo dei generatori + m)."""
    return max(I.lcm_all().degree, I.max_degree() + I.ambient)


def _lattice_blocks(gens: np.ndarray) -> List[Block]:
    values = []
    for column in gens.T:
        values.append(sorted({0} | {int(v) for v in column if v > 0}))
    return [tuple(b) for b in cartesian(*values)]


def _block_betti(gens: np.ndarray, b: Block, field: FieldSpec) -> Dict[int, int]:
    support = [k for k, e in enumerate(b) if e > 0]
    n = len(support)
    masks = range(1 << n)
    # x^{b - e_F} per ogni F ⊆ supp(b), F codificato come maschera su support
    monomials = np.tile(np.array(b, dtype=np.int64), (1 << n, 1))
    for pos, k in enumerate(support):
        monomials[[mask for mask in masks if mask >> pos & 1], k] -= 1
    in_ideal = np.zeros(1 << n, dtype=bool)
    for g in gens:
        in_ideal |= np.all(monomials >= g, axis=1)

    basis: List[List[int]] = [[] for _ in range(n + 1)]
    for mask in masks:
        if not in_ideal[mask]:
            basis[bin(mask).count("1")].append(mask)
    if not any(basis):
        return {}

    index = [{mask: row for row, mask in enumerate(level)} for level in basis]
    ranks = [0] * (n + 2)
    for i in range(1, n + 1):
        if not basis[i] or not basis[i - 1]:
            continue
        matrix = np.zeros((len(basis[i - 1]), len(basis[i])), dtype=np.int64)
        for col, mask in enumerate(basis[i]):
            sign = 1
            for pos in range(n):
                if not mask >> pos & 1:
                    continue
                target = index[i - 1].get(mask & ~(1 << pos))
                if target is not None:
                    matrix[target, col] = sign
                sign = -sign
        ranks[i] = rank(matrix, field)

    result = {}
    for i in range(n + 1):
        beta = len(basis[i]) - ranks[i] - ranks[i + 1]
        if beta:
            result[i] = beta
    return result


def _betti_of_blocks(gens: np.ndarray, blocks: Sequence[Block],
                     characteristic: int) -> Dict[Tuple[int, int], int]:
    field = FieldSpec(characteristic)
    entries: Dict[Tuple[int, int], int] = {}
    for b in blocks:
        j = sum(b)
        for i, beta in _block_betti(gens, b, field).items():
            entries[(i, j)] = entries.get((i, j), 0) + beta
    return entries


def _split_work(blocks: List[Block], parts: int) -> List[List[Block]]:
    return [blocks[k::parts] for k in range(parts) if blocks[k::parts]]


def betti_oracle(I: MonomialIdeal, field: FieldSpec = FieldSpec(),
                 degree_cap: Optional[int] = None, limits: Optional[Limits] = None,
                 logger: Optional[ComputationLogger] = None,
                 threads: Optional[int] = None) -> BettiTable:
    """Tabella di Betti di R/I (convenzione quotient), indipendente dall'ordine dei generatori."""
    limits = limits or Limits()
    threads = threads or limits.threads
    m = I.ambient
    if I.is_zero:
        return BettiTable("quotient", m, {(0, 0): 1}, field.tag)
    if I.is_unit:
        return BettiTable("quotient", m, {}, field.tag)

    cap = degree_cap if degree_cap is not None else default_degree_cap(I)
    gens = I.array
    count = prod(len({0} | {int(v) for v in column if v > 0}) for column in gens.T)
    if count > limits.max_multidegrees:
        raise CapExceededError("blocchi multigraduati dell'oracolo", count, limits.max_multidegrees)

    start = time.perf_counter()
    blocks = _lattice_blocks(gens)
    if threads > 1 and len(blocks) > threads:
        entries: Dict[Tuple[int, int], int] = {}
        with ProcessPoolExecutor(max_workers=threads) as pool:
            futures = [pool.submit(_betti_of_blocks, gens, chunk, field.characteristic)
                       for chunk in _split_work(blocks, threads)]
            for future in futures:
                for key, beta in future.result().items():
                    entries[key] = entries.get(key, 0) + beta
    else:
        entries = _betti_of_blocks(gens, blocks, field.characteristic)

    beyond = sorted(j for (_, j) in entries if j > cap)
    if beyond:
        raise CapExceededError("grado interno della tabella di Betti", beyond[-1], cap,
                               "aumenta --degree-cap")

    maybe_log(logger, "log_oracle_run", m, len(I), len(blocks), field.tag,
              (time.perf_counter() - start) * 1000)
    return BettiTable("quotient", m, entries, field.tag)
