"""
Betti Engine
============
Numeri di Betti graduati per potenze simboliche di ideali degli archi:

- combinazione E-K: β_{i,j}(I) = β_{i,j}(J) + β_{i,j}(K) + β_{i-1,j}(J∩K)
  (convenzione ideal);
- ricorsione memoizzata per I(K_m)^(s) lungo la catena di splitting, con
  l'oracolo come ripiego nei casi esclusi;
- tabelle in forma chiusa per K_2, K_3, K_4;
- gradi dello zoccolo, identità della serie di Hilbert, stabilità rispetto al campo;
- confronto tra G e la parallelizzazione G^α.
"""

from dataclasses import dataclass, field
from math import ceil, comb
from typing import Any, Dict, List, Optional, Sequence, Tuple
import threading

import pandas as pd

from .errors import ConventionMismatchError, FieldDiscrepancyError, ProjectiveDimensionError
from .graph import ParallelizationSpec, SimpleGraph
from .limits import Limits
from .linalg import FieldSpec
from .logger import ComputationLogger, maybe_log
from .monomial import MonomialIdeal, degree_histogram, graded_dimension
from .oracle import betti_oracle, default_degree_cap
from .symbolic import (
    RestrictedIdealSpec, complete_symbolic_gens, parallel_symbolic_gens, restricted_ideal,
    symbolic_power,
)
from .table import BettiTable


# ============================================
# OPERAZIONI SULLE TABELLE
# ============================================

def betti_table_from_generators(I: MonomialIdeal, field_tag: str = "gf:32003") -> BettiTable:
    """Riga 0 in convenzione ideal: istogramma dei gradi di 𝒢(I)."""
    entries = {(0, d): c for d, c in degree_histogram(I).items()}
    return BettiTable("ideal", I.ambient, entries, field_tag)


def shift_degree(table: BettiTable, d: int) -> BettiTable:
    """Tabella di w·I con deg w = d: j -> j + d (in quotient solo le righe i >= 1)."""
    if table.convention == "ideal":
        entries = {(i, j + d): b for (i, j), b in table.entries.items()}
    else:
        entries = {(i, j + d if i > 0 else j): b for (i, j), b in table.entries.items()}
    return BettiTable(table.convention, table.ambient, entries, table.field_tag)


def shift_homological(table: BettiTable, k: int = 1) -> BettiTable:
    """i -> i + k (convenzione ideal)."""
    table.require("ideal")
    entries = {(i + k, j): b for (i, j), b in table.entries.items()}
    return BettiTable("ideal", table.ambient, entries, table.field_tag)


def _add(tables: Sequence[BettiTable]) -> BettiTable:
    entries: Dict[Tuple[int, int], int] = {}
    for table in tables:
        for key, beta in table.entries.items():
            entries[key] = entries.get(key, 0) + beta
    first = tables[0]
    return BettiTable(first.convention, first.ambient, entries, first.field_tag)


def ek_combine(J_table: BettiTable, K_table: BettiTable, JK_table: BettiTable) -> BettiTable:
    """β_{i,j}(I) = β_{i,j}(J) + β_{i,j}(K) + β_{i-1,j}(J∩K), tutte in convenzione ideal."""
    for table in (J_table, K_table, JK_table):
        if table.convention != "ideal":
            raise ConventionMismatchError("ideal", table.convention)
    return _add([J_table, K_table, shift_homological(JK_table, 1)])


# ============================================
# RICORSIONE PER I GRAFI COMPLETI
# ============================================

_RECURSION_MEMO: Dict[Tuple[int, int, int, str, str], BettiTable] = {}
_MEMO_LOCK = threading.Lock()


def clear_recursion_cache():
    with _MEMO_LOCK:
        _RECURSION_MEMO.clear()


def _restricted_table(m: int, r: int, s: int, field: FieldSpec, limits: Limits,
                      logger: Optional[ComputationLogger]) -> BettiTable:
    """Tabella (ideal) di I_{K_m∖K_r,s}."""
    key = (m, r, s, field.tag, "ideal")
    with _MEMO_LOCK:
        cached = _RECURSION_MEMO.get(key)
    if cached is not None:
        return cached

    if s <= 0:
        table = BettiTable("ideal", m, {(0, 0): 1}, field.tag)
    elif m == 1:
        table = BettiTable("ideal", m, {}, field.tag)
    elif m == 2:
        # I_{K_2∖K_r,s} = ⟨x1^s x2^s⟩ per ogni r
        maybe_log(logger, "log_recursion_step", m, r, s, "K2")
        table = BettiTable("ideal", m, {(0, 2 * s): 1}, field.tag)
    elif r == 0:
        # x_1···x_m · I(K_m)^(s-m+1)
        maybe_log(logger, "log_recursion_step", m, r, s, "product")
        inner = _restricted_table(m, m, s - m + 1, field, limits, logger)
        table = shift_degree(inner, m)
    elif s == 1 or r == m - s - 1:
        reason = "s=1" if s == 1 else "r=m-s-1"
        maybe_log(logger, "log_fallback", m, r, s, reason)
        ideal = restricted_ideal(RestrictedIdealSpec.outside(m, r, s), limits)
        table = betti_oracle(ideal, field, limits=limits, logger=logger).to_ideal()
    else:
        # L1 = I_{K_m∖K_{r-1},s}, L2 ≅ I_{K_{m-1}∖K_{r-1},s}, L1 ∩ L2 = x_r L2
        maybe_log(logger, "log_recursion_step", m, r, s, "split")
        left = _restricted_table(m, r - 1, s, field, limits, logger)
        right = _restricted_table(m - 1, r - 1, s, field, limits, logger)
        table = ek_combine(left, right, shift_degree(right, 1))

    table = BettiTable("ideal", m, table.entries, field.tag)
    with _MEMO_LOCK:
        return _RECURSION_MEMO.setdefault(key, table)


def recursive_betti_complete(m: int, s: int, fallback: FieldSpec = FieldSpec(),
                             limits: Optional[Limits] = None,
                             logger: Optional[ComputationLogger] = None) -> BettiTable:
    """Tabella (ideal) di I(K_m)^(s) tramite la catena di splitting."""
    if m < 2:
        raise ValueError(f"La ricorsione richiede m >= 2, trovato {m}")
    if s < 1:
        raise ValueError(f"La ricorsione richiede s >= 1, trovato {s}")
    return _restricted_table(m, m, s, fallback, limits or Limits(), logger)


# ============================================
# FORME CHIUSE
# ============================================

def closed_form_K2(s: int, field_tag: str = "gf:32003") -> BettiTable:
    """R/⟨x1^s x2^s⟩."""
    if s < 1:
        raise ValueError(f"s deve essere >= 1, trovato {s}")
    return BettiTable("quotient", 2, {(0, 0): 1, (1, 2 * s): 1}, field_tag)


def closed_form_K3(s: int, field_tag: str = "gf:32003") -> BettiTable:
    """
    R/I(K_3)^(s): β_{1,3s/2} = 1 e β_{2,(3s+3)/2} = 2 quando l'indice è intero;
    β_{1,j} = 3 per ⌈(3s+1)/2⌉ <= j <= 2s; β_{2,j} = 3 per ⌈(3s+4)/2⌉ <= j <= 2s+1.
    """
    if s < 1:
        raise ValueError(f"s deve essere >= 1, trovato {s}")
    entries: Dict[Tuple[int, int], int] = {(0, 0): 1}

    def add(i: int, j: int, beta: int):
        entries[(i, j)] = entries.get((i, j), 0) + beta

    if (3 * s) % 2 == 0:
        add(1, 3 * s // 2, 1)
    if (3 * s + 3) % 2 == 0:
        add(2, (3 * s + 3) // 2, 2)
    for j in range(ceil((3 * s + 1) / 2), 2 * s + 1):
        add(1, j, 3)
    for j in range(ceil((3 * s + 4) / 2), 2 * s + 2):
        add(2, j, 3)
    return BettiTable("quotient", 3, entries, field_tag)


def closed_form_K4(s: int, field: FieldSpec = FieldSpec(), limits: Optional[Limits] = None,
                   logger: Optional[ComputationLogger] = None) -> BettiTable:
    """
    R/I(K_4)^(s) per s >= 4: β_{1,2s} = 6, β_{2,2s+1} = 12, β_{3,2s+2} = 6 più
    β_{i,j-4}(I(K_4)^(s-3)) + 4β_{i-1,j-4}(I(K_3)^(s-2)) + 4β_{i,j-3}(I(K_3)^(s-2)).
    """
    if s < 4:
        raise ValueError(f"La formula per K_4 vale per s >= 4, trovato {s}")
    if s - 3 >= 4:
        lower = closed_form_K4(s - 3, field, limits, logger)
    else:
        lower = betti_oracle(complete_symbolic_gens(4, s - 3), field, limits=limits, logger=logger)
    k3 = closed_form_K3(s - 2, field.tag).to_ideal()
    constants = BettiTable("ideal", 4, {(0, 2 * s): 6, (1, 2 * s + 1): 12, (2, 2 * s + 2): 6},
                           field.tag)
    parts = [
        constants,
        shift_degree(lower.to_ideal(), 4),
        BettiTable("ideal", 4, {(i + 1, j + 4): 4 * b for (i, j), b in k3.entries.items()}, field.tag),
        BettiTable("ideal", 4, {(i, j + 3): 4 * b for (i, j), b in k3.entries.items()}, field.tag),
    ]
    return _add(parts).to_quotient()


def closed_form_complete(m: int, s: int, field: FieldSpec = FieldSpec(),
                         limits: Optional[Limits] = None,
                         logger: Optional[ComputationLogger] = None) -> BettiTable:
    if m == 2:
        return closed_form_K2(s, field.tag)
    if m == 3:
        return closed_form_K3(s, field.tag)
    if m == 4 and s >= 4:
        return closed_form_K4(s, field, limits, logger)
    raise ValueError(f"Nessuna formula chiusa per m={m}, s={s} (disponibili: K2, K3, K4 con s >= 4)")


# ============================================
# ZOCCOLO
# ============================================

def socle_degrees(table: BettiTable, m: int) -> Dict[int, int]:
    """Gradi dello zoccolo a - (m-1) con molteplicità, dalle torsioni dell'ultima riga."""
    table.require("quotient")
    last = table.last_row()
    if last != m - 1:
        raise ProjectiveDimensionError(m - 1, last)
    return {j - (m - 1): b for j, b in sorted(table.row(m - 1).items())}


def min_socle_degree(table: BettiTable, m: int) -> int:
    return min(socle_degrees(table, m))


# ============================================
# CONTROLLI
# ============================================

def hilbert_series_check(table: BettiTable, I: MonomialIdeal, cap: Optional[int] = None,
                         limits: Optional[Limits] = None) -> bool:
    """
    Σ (-1)^i β_{i,j} t^j = (1-t)^m Σ_j dim(R/I)_j t^j fino al grado cap.

    Di default si arriva oltre deg lcm(𝒢(I)), dove il numeratore è nullo:
    una tabella a cui mancano le voci di grado massimo non passa.
    Aritmetica intera esatta.
    """
    limits = limits or Limits()
    m = I.ambient
    numerator = table.to_quotient().euler_numerator()
    top = cap
    if top is None:
        top = max((j for _, j in table.entries), default=0)
        if not I.is_zero:
            top = max(top, default_degree_cap(I))
    hilbert = [graded_dimension(I, d, "quotient", limits.degree_cap, limits.max_candidates)
               for d in range(top + 1)]
    for d in range(top + 1):
        expected = sum((-1) ** k * comb(m, k) * hilbert[d - k] for k in range(min(m, d) + 1))
        if numerator.get(d, 0) != expected:
            return False
    return True


def field_stability(I: MonomialIdeal, fields: Sequence[FieldSpec],
                    limits: Optional[Limits] = None,
                    logger: Optional[ComputationLogger] = None) -> Dict[str, BettiTable]:
    """Tabelle su più campi; FieldDiscrepancyError se non coincidono."""
    tables = {f.tag: betti_oracle(I, f, limits=limits, logger=logger) for f in fields}
    tags = list(tables)
    for tag in tags[1:]:
        differences = tables[tags[0]].differences(tables[tag])
        maybe_log(logger, "log_comparison", tags[0], tag, not differences, len(differences))
        if differences:
            raise FieldDiscrepancyError([tags[0], tag], differences)
    return tables


# ============================================
# PARALLELIZZAZIONI
# ============================================

@dataclass
class ParallelBoundReport:
    """
    Confronto tra β(I(G)^(s)) e β(I(G^α)^(s)) (convenzione quotient, i >= 1).

    Il limite dimostrato (β(G^α) >= β(G)) è verificabile; il fattore ∏α_i
    congetturale e il fattore min(α_i) sono solo riportati.
    """
    alpha: Tuple[int, ...]
    s: int
    base: BettiTable
    parallel: BettiTable
    rows: List[Dict[str, Any]] = field(default_factory=list)

    @property
    def proven_holds(self) -> bool:
        return all(r["proven"] for r in self.rows)

    @property
    def conjectured_holds(self) -> bool:
        return all(r["conjectured"] for r in self.rows)

    @property
    def weak_holds(self) -> bool:
        return all(r["weak"] for r in self.rows)

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(self.rows, columns=["i", "j", "base", "parallel", "proven",
                                                "conjectured", "weak"])

    def to_dict(self) -> Dict[str, Any]:
        return {
            "alpha": list(self.alpha),
            "s": self.s,
            "base": self.base.to_dict(),
            "parallel": self.parallel.to_dict(),
            "proven_bound_holds": self.proven_holds,
            "conjectured_bound_holds": self.conjectured_holds,
            "weak_bound_holds": self.weak_holds,
            "entries": self.rows,
        }


def parallel_bound_report(G: SimpleGraph, alpha: Sequence[int], s: int,
                          field: FieldSpec = FieldSpec(), limits: Optional[Limits] = None,
                          logger: Optional[ComputationLogger] = None) -> ParallelBoundReport:
    limits = limits or Limits()
    alpha = tuple(alpha)
    base = betti_oracle(symbolic_power(G, s, limits, logger), field, limits=limits, logger=logger)
    lifted = parallel_symbolic_gens(G, alpha, s, limits, logger)
    parallel = betti_oracle(lifted, field, limits=limits, logger=logger)

    factor = ParallelizationSpec.from_alpha(alpha).factor
    weak = min(alpha)
    rows = []
    for i, j in sorted(set(base.entries) | set(parallel.entries)):
        if i == 0:
            continue
        b, p = base.get(i, j), parallel.get(i, j)
        rows.append({
            "i": i, "j": j, "base": b, "parallel": p,
            "proven": p >= b,
            "conjectured": p >= factor * b,
            "weak": p >= weak * b,
        })
    report = ParallelBoundReport(alpha, s, base, parallel, rows)
    maybe_log(logger, "log_event", "parallel_bound", {
        "alpha": list(alpha), "s": s, "proven": report.proven_holds,
        "conjectured": report.conjectured_holds, "weak": report.weak_holds
    })
    return report
