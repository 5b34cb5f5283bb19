"""
Symbolic Powers
===============
Potenze simboliche di ideali degli archi.

- caso generale: I(G)^(s) = ∩ ⟨W⟩^s sui ricoprimenti minimali W;
- appartenenza: per ogni ricoprimento W la somma degli esponenti su W è >= s;
- grafi completi: generatori espliciti di I(K_m)^(s);
- ideali ristretti I_{H,s} e I_{G∖H,s} con H = K_r;
- parallelizzazioni: generatori di I(G^α)^(s) da quelli di I(G)^(s).

Convenzione: I^(t) = ⟨1⟩ per t <= 0.
"""

from dataclasses import dataclass
from itertools import product as cartesian
from math import comb, prod
from typing import Optional, Sequence
import time

from .errors import AmbientMismatchError, CapExceededError
from .graph import (
    SimpleGraph, ParallelizationSpec, edge_ideal, is_complete,
    minimal_vertex_covers,
)
from .limits import Limits
from .logger import ComputationLogger, maybe_log
from .monomial import (
    Monomial, MonomialIdeal, compositions, contains_ideal, intersect, power, principal,
)


METHODS = ("intersection", "fast_path_complete")
KINDS = ("inside", "outside")


@dataclass(frozen=True)
class SymbolicPowerRequest:
    graph: SimpleGraph
    s: int
    method: str = "intersection"

    def __post_init__(self):
        if self.s < 1:
            raise ValueError(f"La potenza simbolica richiede s >= 1, trovato {self.s}")
        if self.method not in METHODS:
            raise ValueError(f"Metodo '{self.method}' non valido. Disponibili: {list(METHODS)}")
        if self.method == "fast_path_complete" and not is_complete(self.graph):
            raise ValueError("Il metodo fast_path_complete vale solo per grafi completi")


@dataclass(frozen=True)
class RestrictedIdealSpec:
    """I_{H,s} (inside) oppure I_{G∖H,s} (outside) per H = K_r ⊆ G = K_m."""
    m: int
    r: int
    s: int
    kind: str = "outside"

    def __post_init__(self):
        if self.m < 2:
            raise ValueError(f"Servono almeno 2 vertici, trovato m={self.m}")
        if not 0 <= self.r <= self.m:
            raise ValueError(f"r={self.r} fuori da 0..{self.m}")
        if self.s < 1:
            raise ValueError(f"s deve essere >= 1, trovato {self.s}")
        if self.kind not in KINDS:
            raise ValueError(f"Tipo '{self.kind}' non valido. Disponibili: {list(KINDS)}")

    @classmethod
    def inside(cls, m: int, r: int, s: int) -> 'RestrictedIdealSpec':
        return cls(m, r, s, "inside")

    @classmethod
    def outside(cls, m: int, r: int, s: int) -> 'RestrictedIdealSpec':
        return cls(m, r, s, "outside")


def _prime_power(cover: Sequence[int], s: int, m: int, cap: int) -> MonomialIdeal:
    """⟨W⟩^s: tutti i monomi di grado s nelle variabili di W."""
    count = comb(s + len(cover) - 1, len(cover) - 1)
    if count > cap:
        raise CapExceededError("generatori di ⟨W⟩^s", count, cap)
    rows = []
    for exps in compositions(s, len(cover)):
        row = [0] * m
        for v, e in zip(cover, exps):
            row[v - 1] = e
        rows.append(tuple(row))
    return MonomialIdeal(m, rows)


def symbolic_power(G: SimpleGraph, s: int, limits: Optional[Limits] = None,
                   logger: Optional[ComputationLogger] = None) -> MonomialIdeal:
    """𝒢(I(G)^(s)) come intersezione delle potenze dei primi minimali."""
    limits = limits or Limits()
    m = G.vertex_count
    if s <= 0:
        return MonomialIdeal.unit(m)
    if not G.edges:
        return MonomialIdeal.zero(m)
    if s == 1:
        return edge_ideal(G)

    start = time.perf_counter()
    covers = sorted(minimal_vertex_covers(G, limits.vertex_cap), key=len)
    result = _prime_power(covers[0], s, m, limits.max_candidates)
    for cover in covers[1:]:
        result = intersect(result, _prime_power(cover, s, m, limits.max_candidates),
                           limits.max_candidates)
    maybe_log(logger, "log_event", "symbolic_power", {
        "m": m, "s": s, "covers": len(covers), "generators": len(result),
        "duration_ms": round((time.perf_counter() - start) * 1000, 3)
    })
    return result


def membership_symbolic(w: Monomial, G: SimpleGraph, s: int,
                        limits: Optional[Limits] = None) -> bool:
    """w ∈ I(G)^(s) se e solo se ogni ricoprimento minimale pesa almeno s."""
    limits = limits or Limits()
    if w.ambient != G.vertex_count:
        raise AmbientMismatchError(w.ambient, G.vertex_count)
    if s <= 0:
        return True
    return all(sum(w.exponents[v - 1] for v in cover) >= s
               for cover in minimal_vertex_covers(G, limits.vertex_cap))


def complete_symbolic_gens(m: int, s: int) -> MonomialIdeal:
    """
    𝒢(I(K_m)^(s)): vettori con un indice i tale che Σ_{j≠i} a_j = s
    e a_i = max_{j≠i} a_j. I gradi cadono tra s+1 e 2s.
    """
    if m < 2:
        raise ValueError(f"Servono almeno 2 vertici, trovato m={m}")
    if s <= 0:
        return MonomialIdeal.unit(m)
    rows = set()
    for i in range(m):
        for others in compositions(s, m - 1):
            row = list(others)
            row.insert(i, max(others))
            rows.add(tuple(row))
    return MonomialIdeal(m, rows)


def restricted_ideal(spec: RestrictedIdealSpec,
                     limits: Optional[Limits] = None) -> MonomialIdeal:
    """
    inside: generatori di I(K_m)^(s) non divisibili da x_{r+1},...,x_m;
    outside: I(K_m)^(s) ∩ ⟨x_{r+1}···x_m⟩. Per r = m entrambi danno I(K_m)^(s).
    """
    limits = limits or Limits()
    base = complete_symbolic_gens(spec.m, spec.s)
    if spec.r == spec.m:
        return base
    if spec.kind == "inside":
        kept = [g for g in base.generators if not any(g.exponents[spec.r:])]
        return MonomialIdeal(spec.m, kept)
    tail = Monomial.product_of(range(spec.r + 1, spec.m + 1), spec.m)
    return intersect(base, principal(tail), limits.max_candidates)


def parallel_symbolic_gens(G: SimpleGraph, alpha: Sequence[int], s: int,
                           limits: Optional[Limits] = None,
                           logger: Optional[ComputationLogger] = None) -> MonomialIdeal:
    """
    𝒢(I(G^α)^(s)) dai generatori di I(G)^(s): ogni esponente a_i viene
    distribuito in tutti i modi ordinati sulle α_i copie del vertice i.
    """
    limits = limits or Limits()
    spec = ParallelizationSpec.from_alpha(alpha)
    if len(spec.alpha) != G.vertex_count:
        raise ValueError(f"α ha {len(spec.alpha)} componenti, il grafo {G.vertex_count} vertici")
    base = symbolic_power(G, s, limits, logger)
    n = spec.vertex_count
    if base.is_zero:
        return MonomialIdeal.zero(n)

    total = sum(prod(comb(a + k - 1, k - 1) for a, k in zip(g.exponents, spec.alpha))
                for g in base.generators)
    if total > limits.max_candidates:
        raise CapExceededError("monomi della parallelizzazione", total, limits.max_candidates)

    rows = []
    for g in base.generators:
        pieces = [list(compositions(a, k)) for a, k in zip(g.exponents, spec.alpha)]
        for choice in cartesian(*pieces):
            rows.append(tuple(e for block in choice for e in block))
    return MonomialIdeal(n, rows)


def ordinary_power_contained(G: SimpleGraph, s: int, limits: Optional[Limits] = None) -> bool:
    """Verifica I(G)^s ⊆ I(G)^(s)."""
    limits = limits or Limits()
    if s < 1:
        raise ValueError(f"L'esponente deve essere >= 1, trovato {s}")
    ordinary = power(edge_ideal(G), s, limits.max_candidates)
    return contains_ideal(symbolic_power(G, s, limits), ordinary)


def compute_symbolic(request: SymbolicPowerRequest, limits: Optional[Limits] = None,
                     logger: Optional[ComputationLogger] = None) -> MonomialIdeal:
    if request.method == "fast_path_complete":
        if request.graph.vertex_count == 1:
            return MonomialIdeal.zero(1)
        return complete_symbolic_gens(request.graph.vertex_count, request.s)
    return symbolic_power(request.graph, request.s, limits, logger)

