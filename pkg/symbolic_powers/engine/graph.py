"""
Graph Engine
============
Grafi semplici finiti, ideali degli archi, ricoprimenti minimali
(complementi degli insiemi indipendenti massimali) e parallelizzazioni G^α.

I vertici sono numerati da 1 e coincidono con le variabili x_1..x_m.
"""

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from math import prod
from pathlib import Path
from typing import FrozenSet, List, Optional, Sequence, Tuple, Union

from .errors import CapExceededError, ParseError
from .monomial import Monomial, MonomialIdeal


DEFAULT_VERTEX_CAP = 24

Cover = Tuple[int, ...]


@dataclass(frozen=True)
class SimpleGraph:
    """Grafo non orientato senza cappi né archi multipli."""
    vertex_count: int
    edges: Tuple[Tuple[int, int], ...] = ()
    labels: Optional[Tuple[str, ...]] = None

    def __post_init__(self):
        if self.vertex_count < 1:
            raise ValueError("Un grafo richiede almeno un vertice")
        normalized = set()
        for u, v in self.edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"Cappio non ammesso sul vertice {u}")
            for w in (u, v):
                if not 1 <= w <= self.vertex_count:
                    raise ValueError(f"Vertice {w} fuori da 1..{self.vertex_count}")
            edge = (min(u, v), max(u, v))
            if edge in normalized:
                raise ValueError(f"Arco multiplo {edge}")
            normalized.add(edge)
        object.__setattr__(self, "edges", tuple(sorted(normalized)))
        if self.labels is not None:
            if len(self.labels) != self.vertex_count:
                raise ValueError("Servono tante etichette quanti vertici")
            object.__setattr__(self, "labels", tuple(self.labels))

    @cached_property
    def adjacency(self) -> Tuple[int, ...]:
        """Maschere di adiacenza: bit k-1 acceso se k è vicino."""
        masks = [0] * self.vertex_count
        for u, v in self.edges:
            masks[u - 1] |= 1 << (v - 1)
            masks[v - 1] |= 1 << (u - 1)
        return tuple(masks)

    def neighbors(self, v: int) -> FrozenSet[int]:
        mask = self.adjacency[v - 1]
        return frozenset(k + 1 for k in range(self.vertex_count) if mask >> k & 1)

    def variable_names(self) -> List[str]:
        if self.labels:
            return list(self.labels)
        return [f"x{i}" for i in range(1, self.vertex_count + 1)]

    def __str__(self) -> str:
        return f"G(m={self.vertex_count}, |E|={len(self.edges)})"


# ============================================
# COSTRUTTORI
# ============================================

def complete_graph(m: int) -> SimpleGraph:
    return SimpleGraph(m, tuple(combinations(range(1, m + 1), 2)))


def path_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, tuple((i, i + 1) for i in range(1, n)))


def cycle_graph(n: int) -> SimpleGraph:
    if n < 3:
        raise ValueError("Un ciclo richiede almeno 3 vertici")
    return SimpleGraph(n, tuple((i, i % n + 1) for i in range(1, n + 1)))


def is_complete(G: SimpleGraph) -> bool:
    m = G.vertex_count
    return len(G.edges) == m * (m - 1) // 2


def edge_ideal(G: SimpleGraph) -> MonomialIdeal:
    """I(G) = ⟨x_u x_v : {u,v} ∈ E(G)⟩."""
    m = G.vertex_count
    return MonomialIdeal(m, [Monomial.product_of(edge, m) for edge in G.edges])


# ============================================
# RICOPRIMENTI
# ============================================

def is_vertex_cover(G: SimpleGraph, W) -> bool:
    chosen = set(W)
    return all(u in chosen or v in chosen for u, v in G.edges)


def _mask_to_cover(mask: int, m: int) -> Cover:
    return tuple(k + 1 for k in range(m) if mask >> k & 1)


def minimal_vertex_covers(G: SimpleGraph, vertex_cap: int = DEFAULT_VERTEX_CAP) -> List[Cover]:
    """
    Ricoprimenti minimali come complementi degli insiemi indipendenti massimali.

    Gli insiemi indipendenti massimali sono le cricche massimali del
    complementare (Bron-Kerbosch su maschere di bit). Un vertice isolato sta
    in ogni indipendente massimale, quindi non entra mai in un ricoprimento.
    """
    m = G.vertex_count
    if m > vertex_cap:
        raise CapExceededError("vertici nella ricerca dei ricoprimenti", m, vertex_cap)
    full = (1 << m) - 1
    non_adjacent = [full & ~G.adjacency[k] & ~(1 << k) for k in range(m)]
    independent: List[int] = []

    def extend(chosen: int, candidates: int, excluded: int):
        if not candidates and not excluded:
            independent.append(chosen)
            return
        while candidates:
            bit = candidates & -candidates
            k = bit.bit_length() - 1
            extend(chosen | bit, candidates & non_adjacent[k], excluded & non_adjacent[k])
            candidates &= ~bit
            excluded |= bit

    extend(0, full, 0)
    return sorted(_mask_to_cover(full & ~mask, m) for mask in independent)


def brute_force_vertex_covers(G: SimpleGraph, vertex_cap: int = 20) -> List[Cover]:
    """Ricoprimenti minimali per ricerca esaustiva su tutti i sottoinsiemi."""
    m = G.vertex_count
    if m > vertex_cap:
        raise CapExceededError("vertici nella ricerca esaustiva", m, vertex_cap)
    found: List[FrozenSet[int]] = []
    for size in range(m + 1):
        for subset in combinations(range(1, m + 1), size):
            chosen = frozenset(subset)
            if any(smaller <= chosen for smaller in found):
                continue
            if is_vertex_cover(G, chosen):
                found.append(chosen)
    return sorted(tuple(sorted(c)) for c in found)


# ============================================
# PARALLELIZZAZIONE
# ============================================

@dataclass(frozen=True)
class ParallelizationSpec:
    """
    Duplicazioni di G^α: il vertice i di G diventa il blocco V_i di α_i copie.

    Le copie sono appiattite nell'ordine delle variabili (prima il blocco 1),
    quindi x_{i,t} è la variabile blocks[i-1][t-1].
    """
    alpha: Tuple[int, ...]
    blocks: Tuple[Tuple[int, ...], ...]

    @classmethod
    def from_alpha(cls, alpha: Sequence[int]) -> 'ParallelizationSpec':
        alpha = tuple(int(a) for a in alpha)
        if not alpha or any(a < 1 for a in alpha):
            raise ValueError(f"Ogni α_i deve essere >= 1, trovato {alpha}")
        blocks, start = [], 1
        for a in alpha:
            blocks.append(tuple(range(start, start + a)))
            start += a
        return cls(alpha, tuple(blocks))

    @property
    def vertex_count(self) -> int:
        return sum(self.alpha)

    @property
    def factor(self) -> int:
        """∏ α_i."""
        return prod(self.alpha)

    @property
    def is_identity(self) -> bool:
        return all(a == 1 for a in self.alpha)

    def labels(self) -> Tuple[str, ...]:
        return tuple(f"x{i}_{t}" for i, block in enumerate(self.blocks, start=1)
                     for t in range(1, len(block) + 1))

    def origin(self, v: int) -> Tuple[int, int]:
        """(i, t) tale che v = x_{i,t}."""
        for i, block in enumerate(self.blocks, start=1):
            if v in block:
                return i, block.index(v) + 1
        raise ValueError(f"Vertice {v} fuori da 1..{self.vertex_count}")


def parallelize(G: SimpleGraph, alpha: Sequence[int]) -> Tuple[SimpleGraph, ParallelizationSpec]:
    """G^α: {x_{i,t}, x_{j,l}} è un arco se e solo se {x_i, x_j} ∈ E(G)."""
    if len(alpha) != G.vertex_count:
        raise ValueError(f"α ha {len(alpha)} componenti, il grafo {G.vertex_count} vertici")
    spec = ParallelizationSpec.from_alpha(alpha)
    edges = [(a, b) for u, v in G.edges
             for a in spec.blocks[u - 1] for b in spec.blocks[v - 1]]
    return SimpleGraph(spec.vertex_count, tuple(edges), spec.labels()), spec


def lifted_minimal_covers(G: SimpleGraph, spec: ParallelizationSpec,
                          vertex_cap: int = DEFAULT_VERTEX_CAP) -> List[Cover]:
    """Ricoprimenti minimali di G^α come unioni di blocchi V_i."""
    lifted = []
    for cover in minimal_vertex_covers(G, vertex_cap):
        lifted.append(tuple(sorted(v for i in cover for v in spec.blocks[i - 1])))
    return sorted(lifted)


def complete_multipartite(sizes: Sequence[int]) -> Tuple[SimpleGraph, ParallelizationSpec]:
    """K_{a_1..a_n} come parallelizzazione di K_n."""
    return parallelize(complete_graph(len(sizes)), sizes)


# ============================================
# INPUT
# ============================================

def read_edge_list(path: Union[str, Path]) -> SimpleGraph:
    """
    Formato: prima riga `m`, poi una coppia `u v` per riga (indici da 1).
    Righe vuote e commenti `#` sono ignorati.
    """
    path = Path(path)
    if not path.exists():
        raise ParseError(f"File del grafo non trovato: {path}")
    lines = []
    for raw in path.read_text(encoding="utf-8").splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise ParseError(f"File del grafo vuoto: {path}")
    current = lines[0]
    try:
        m = int(current)
        edges = []
        for current in lines[1:]:
            u, v = current.split()
            edges.append((int(u), int(v)))
    except ValueError:
        raise ParseError(f"Riga non valida in {path}: '{current}'")
    try:
        return SimpleGraph(m, tuple(edges))
    except ValueError as exc:
        raise ParseError(f"Grafo non valido in {path}: {exc}")


_BUILTINS = {
    "complete": complete_graph,
    "path": path_graph,
    "cycle": cycle_graph,
}


def parse_graph(source: str) -> SimpleGraph:
    """`complete:m`, `path:n`, `cycle:n`, `multipartite:a,b,c` oppure un file."""
    kind, sep, arg = source.partition(":")
    if sep and kind in _BUILTINS:
        try:
            n = int(arg)
        except ValueError:
            raise ParseError(f"Dimensione non valida in '{source}'")
        try:
            return _BUILTINS[kind](n)
        except ValueError as exc:
            raise ParseError(str(exc))
    if sep and kind == "multipartite":
        return complete_multipartite(parse_alpha(arg))[0]
    return read_edge_list(source)


def parse_alpha(text: str) -> Tuple[int, ...]:
    """`2,1,1` -> (2, 1, 1)."""
    try:
        alpha = tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise ParseError(f"α non valido: '{text}'")
    if not alpha or any(a < 1 for a in alpha):
        raise ParseError(f"Ogni componente di α deve essere >= 1: '{text}'")
    return alpha

