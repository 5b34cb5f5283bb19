"""
Monomial Core
=============
Aritmetica dei monomi come vettori di esponenti e operazioni sugli
ideali monomiali (insieme minimale di generatori 𝒢(I)).

Tutti i valori sono immutabili: le operazioni restituiscono nuovi oggetti.
"""

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from math import comb
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union
import re

import numpy as np

from .errors import AmbientMismatchError, CapExceededError, ParseError


DEFAULT_DEGREE_CAP = 64
DEFAULT_CANDIDATE_CAP = 2_000_000

_FACTOR_RE = re.compile(r"^x(\d+)(?:\^(\d+))?$")


@dataclass(frozen=True, order=True)
class Monomial:
    """Monomio x_1^{a_1}···x_m^{a_m} come vettore di esponenti."""
    exponents: Tuple[int, ...]

    def __post_init__(self):
        exps = tuple(int(e) for e in self.exponents)
        if not exps:
            raise ValueError("Un monomio richiede almeno una variabile")
        if any(e < 0 for e in exps):
            raise ValueError(f"Esponenti negativi non ammessi: {exps}")
        object.__setattr__(self, "exponents", exps)

    @classmethod
    def unit(cls, m: int) -> 'Monomial':
        return cls((0,) * m)

    @classmethod
    def variable(cls, index: int, m: int) -> 'Monomial':
        """La variabile x_index (indici da 1)."""
        _check_index(index, m)
        exps = [0] * m
        exps[index - 1] = 1
        return cls(tuple(exps))

    @classmethod
    def product_of(cls, indices: Iterable[int], m: int) -> 'Monomial':
        """Prodotto senza quadrati delle variabili indicate."""
        exps = [0] * m
        for index in indices:
            _check_index(index, m)
            exps[index - 1] += 1
        return cls(tuple(exps))

    @property
    def ambient(self) -> int:
        return len(self.exponents)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    def support(self) -> Tuple[int, ...]:
        """Indici (da 1) delle variabili con esponente positivo."""
        return tuple(i + 1 for i, e in enumerate(self.exponents) if e > 0)

    def exponent(self, index: int) -> int:
        _check_index(index, self.ambient)
        return self.exponents[index - 1]

    def __mul__(self, other: 'Monomial') -> 'Monomial':
        _check_ambient(self.ambient, other.ambient)
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def to_text(self, names: Optional[Sequence[str]] = None) -> str:
        """Forma testuale `x1^2*x2*x3^4`; `1` per l'unità."""
        parts = []
        for i, e in enumerate(self.exponents):
            if e == 0:
                continue
            name = names[i] if names else f"x{i + 1}"
            parts.append(name if e == 1 else f"{name}^{e}")
        return "*".join(parts) if parts else "1"

    def __str__(self) -> str:
        return self.to_text()


MonomialLike = Union[Monomial, Sequence[int]]


def _check_ambient(left: int, right: int):
    if left != right:
        raise AmbientMismatchError(left, right)


def _check_index(index: int, m: int):
    if not 1 <= index <= m:
        raise ValueError(f"Indice di variabile {index} fuori da 1..{m}")


def _as_row(g: MonomialLike) -> Tuple[int, ...]:
    return g.exponents if isinstance(g, Monomial) else tuple(int(e) for e in g)


def _minimal_rows(rows: List[Tuple[int, ...]]) -> List[Tuple[int, ...]]:
    """Elementi minimali per divisibilità (righe distinte, qualsiasi ordine)."""
    if len(rows) <= 1:
        return list(rows)
    # ordinando per grado, un divisore precede sempre i suoi multipli
    ordered = sorted(rows, key=lambda r: (sum(r), r))
    arr = np.array(ordered, dtype=np.int64)
    kept = np.empty_like(arr)
    count = 0
    result = []
    for row, original in zip(arr, ordered):
        if count and np.any(np.all(kept[:count] <= row, axis=1)):
            continue
        kept[count] = row
        count += 1
        result.append(original)
    return result


@dataclass(frozen=True)
class MonomialIdeal:
    """
    Ideale monomiale dato dal suo insieme minimale di generatori 𝒢(I).

    Il costruttore minimizza e ordina (lessicograficamente) i generatori,
    quindi l'uguaglianza tra ideali è l'uguaglianza dei generatori salvati.
    Nessun generatore indica l'ideale nullo; il monomio 1 l'ideale unità.
    """
    ambient: int
    generators: Tuple[Monomial, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.ambient < 1:
            raise ValueError("Il numero di variabili deve essere positivo")
        rows = set()
        for g in self.generators:
            row = _as_row(g)
            _check_ambient(self.ambient, len(row))
            if any(e < 0 for e in row):
                raise ValueError(f"Esponenti negativi non ammessi: {row}")
            rows.add(row)
        minimal = sorted(_minimal_rows(list(rows)))
        object.__setattr__(self, "generators", tuple(Monomial(r) for r in minimal))

    @classmethod
    def zero(cls, m: int) -> 'MonomialIdeal':
        return cls(m, ())

    @classmethod
    def unit(cls, m: int) -> 'MonomialIdeal':
        return cls(m, (Monomial.unit(m),))

    @cached_property
    def array(self) -> np.ndarray:
        """Generatori come matrice (n x m) di esponenti."""
        if not self.generators:
            return np.zeros((0, self.ambient), dtype=np.int64)
        return np.array([g.exponents for g in self.generators], dtype=np.int64)

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_unit(self) -> bool:
        return len(self.generators) == 1 and self.generators[0].degree == 0

    def degrees(self) -> List[int]:
        return [g.degree for g in self.generators]

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def lcm_all(self) -> Monomial:
        """Minimo comune multiplo di tutti i generatori."""
        if self.is_zero:
            return Monomial.unit(self.ambient)
        return Monomial(tuple(int(e) for e in self.array.max(axis=0)))

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self.generators)

    def __contains__(self, w: Monomial) -> bool:
        return membership(w, self)

    def to_text(self, names: Optional[Sequence[str]] = None) -> str:
        if self.is_zero:
            return "0"
        return ", ".join(g.to_text(names) for g in self.generators)

    def __str__(self) -> str:
        return f"⟨{self.to_text()}⟩"


# ============================================
# OPERAZIONI SUI MONOMI
# ============================================

def divides(a: Monomial, b: Monomial) -> bool:
    """True se a divide b (esponenti componente per componente)."""
    _check_ambient(a.ambient, b.ambient)
    return all(x <= y for x, y in zip(a.exponents, b.exponents))


def lcm(a: Monomial, b: Monomial) -> Monomial:
    _check_ambient(a.ambient, b.ambient)
    return Monomial(tuple(max(x, y) for x, y in zip(a.exponents, b.exponents)))


def quotient_monomial(w: Monomial, v: Monomial) -> Monomial:
    """w / v, definito solo se v divide w."""
    if not divides(v, w):
        raise ValueError(f"{v} non divide {w}")
    return Monomial(tuple(a - b for a, b in zip(w.exponents, v.exponents)))


def compositions(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
    """Composizioni ordinate di total in parts addendi non negativi (stelle e barre)."""
    if parts < 1:
        raise ValueError("Servono almeno una parte")
    if total < 0:
        return
    for bars in combinations(range(total + parts - 1), parts - 1):
        previous = -1
        counts = []
        for bar in bars:
            counts.append(bar - previous - 1)
            previous = bar
        counts.append(total + parts - 1 - previous - 1)
        yield tuple(counts)


def count_compositions(total: int, parts: int) -> int:
    return comb(total + parts - 1, parts - 1) if total >= 0 else 0


# ============================================
# OPERAZIONI SUGLI IDEALI
# ============================================

def minimize(gens: Iterable[MonomialLike], ambient: Optional[int] = None,
             cap: int = DEFAULT_CANDIDATE_CAP) -> MonomialIdeal:
    """Sottoinsieme dei generatori minimali per divisibilità."""
    rows = [_as_row(g) for g in gens]
    if ambient is None:
        if not rows:
            raise ValueError("Numero di variabili necessario per un insieme vuoto")
        ambient = len(rows[0])
    if len(rows) > cap:
        raise CapExceededError("candidati da minimizzare", len(rows), cap)
    return MonomialIdeal(ambient, rows)


def _rows_ideal(ambient: int, arr: np.ndarray, cap: int, what: str) -> MonomialIdeal:
    if arr.shape[0] > cap:
        raise CapExceededError(what, arr.shape[0], cap)
    if arr.shape[0] == 0:
        return MonomialIdeal.zero(ambient)
    unique = np.unique(arr, axis=0)
    return MonomialIdeal(ambient, [tuple(r) for r in unique.tolist()])


def intersect(I: MonomialIdeal, J: MonomialIdeal, cap: int = DEFAULT_CANDIDATE_CAP) -> MonomialIdeal:
    """𝒢(I ∩ J) tramite lcm a coppie e minimizzazione."""
    _check_ambient(I.ambient, J.ambient)
    n, k = len(I), len(J)
    if n * k > cap:
        raise CapExceededError("lcm a coppie nell'intersezione", n * k, cap)
    pairs = np.maximum(I.array[:, None, :], J.array[None, :, :]).reshape(-1, I.ambient)
    return _rows_ideal(I.ambient, pairs, cap, "lcm a coppie nell'intersezione")


def product(I: MonomialIdeal, J: MonomialIdeal, cap: int = DEFAULT_CANDIDATE_CAP) -> MonomialIdeal:
    """Prodotto I·J minimizzato."""
    _check_ambient(I.ambient, J.ambient)
    n, k = len(I), len(J)
    if n * k > cap:
        raise CapExceededError("prodotti a coppie", n * k, cap)
    sums = (I.array[:, None, :] + J.array[None, :, :]).reshape(-1, I.ambient)
    return _rows_ideal(I.ambient, sums, cap, "prodotti a coppie")


def power(I: MonomialIdeal, s: int, cap: int = DEFAULT_CANDIDATE_CAP) -> MonomialIdeal:
    """Potenza ordinaria I^s come prodotto iterato."""
    if s < 1:
        raise ValueError(f"L'esponente della potenza deve essere >= 1, trovato {s}")
    result = I
    for _ in range(s - 1):
        result = product(result, I, cap)
    return result


def scale(index: int, I: MonomialIdeal) -> MonomialIdeal:
    """x_index · I."""
    _check_index(index, I.ambient)
    x = Monomial.variable(index, I.ambient)
    return MonomialIdeal(I.ambient, [g * x for g in I.generators])


def membership(w: Monomial, I: MonomialIdeal) -> bool:
    """True se qualche generatore di I divide w."""
    _check_ambient(w.ambient, I.ambient)
    if I.is_zero:
        return False
    row = np.array(w.exponents, dtype=np.int64)
    return bool(np.any(np.all(I.array <= row, axis=1)))


def prime_ideal(vertices: Iterable[int], m: int) -> MonomialIdeal:
    """⟨x_w : w ∈ W⟩."""
    return MonomialIdeal(m, [Monomial.variable(v, m) for v in vertices])


def principal(w: Monomial) -> MonomialIdeal:
    return MonomialIdeal(w.ambient, (w,))


def degree_histogram(I: MonomialIdeal) -> Dict[int, int]:
    histogram: Dict[int, int] = {}
    for d in I.degrees():
        histogram[d] = histogram.get(d, 0) + 1
    return dict(sorted(histogram.items()))


def contains_ideal(big: MonomialIdeal, small: MonomialIdeal) -> bool:
    """True se small ⊆ big."""
    _check_ambient(big.ambient, small.ambient)
    return all(membership(g, big) for g in small.generators)


def graded_dimension(I: MonomialIdeal, j: int, mode: str = "quotient",
                     cap: int = DEFAULT_DEGREE_CAP,
                     candidate_cap: int = DEFAULT_CANDIDATE_CAP) -> int:
    """
    Numero di monomi di grado j dentro I (mode 'ideal') o fuori (mode 'quotient').

    Le due modalità sommano a C(j+m-1, m-1).
    """
    if mode not in ("ideal", "quotient"):
        raise ValueError(f"Modalità '{mode}' non valida (ideal | quotient)")
    if j < 0:
        raise ValueError("Il grado deve essere non negativo")
    if j > cap:
        raise CapExceededError("grado dell'enumerazione graduata", j, cap)
    m = I.ambient
    total = count_compositions(j, m)
    if total > candidate_cap:
        raise CapExceededError("monomi di grado fissato", total, candidate_cap)

    if I.is_zero:
        inside = 0
    else:
        monomials = np.array(list(compositions(j, m)), dtype=np.int64).reshape(-1, m)
        in_ideal = np.zeros(monomials.shape[0], dtype=bool)
        for g in I.array:
            in_ideal |= np.all(monomials >= g, axis=1)
        inside = int(in_ideal.sum())
    return inside if mode == "ideal" else total - inside


# ============================================
# FORMA TESTUALE
# ============================================

def parse_monomial(text: str, ambient: Optional[int] = None) -> Monomial:
    """Interpreta `x1^2*x2*x3^4` (oppure `1`)."""
    text = text.strip().replace(" ", "")
    if not text:
        raise ParseError("Monomio vuoto")
    factors: Dict[int, int] = {}
    if text != "1":
        for part in text.split("*"):
            match = _FACTOR_RE.match(part)
            if not match:
                raise ParseError(f"Fattore non valido '{part}' in '{text}'")
            index = int(match.group(1))
            if index < 1:
                raise ParseError(f"Le variabili partono da x1, trovato '{part}'")
            factors[index] = factors.get(index, 0) + int(match.group(2) or 1)
    needed = max(factors, default=1)
    m = ambient if ambient is not None else needed
    if needed > m:
        raise ParseError(f"La variabile x{needed} eccede le {m} variabili dichiarate")
    exps = [0] * m
    for index, e in factors.items():
        exps[index - 1] = e
    return Monomial(tuple(exps))


def parse_ideal(text: str, ambient: Optional[int] = None) -> MonomialIdeal:
    """Interpreta una lista di monomi separati da virgole (`0` per l'ideale nullo)."""
    pieces = [p for p in (t.strip() for t in text.split(",")) if p]
    if not pieces or pieces == ["0"]:
        if ambient is None:
            raise ParseError("L'ideale nullo richiede il numero di variabili")
        return MonomialIdeal.zero(ambient)
    if ambient is None:
        ambient = max(parse_monomial(p).ambient for p in pieces)
    return MonomialIdeal(ambient, [parse_monomial(p, ambient) for p in pieces])


def quotient_by_variable(w: Monomial, index: int) -> Monomial:
    """w / x_index; errore se x_index non divide w."""
    return quotient_monomial(w, Monomial.variable(index, w.ambient))
