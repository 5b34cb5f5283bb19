"""
Eliahou-Kervaire Splittings
===========================
Costruzione esplicita dello splitting I_{K_m∖K_r,s} = L1 + L2
(L1 = I ∩ ⟨x_r⟩, L2 = generatori non divisibili per x_r) e verifica delle due
condizioni E-K su certificati qualsiasi.

Un certificato conserva la mappa w -> (φ(w), φ̂(w)) in forma estesa,
quindi si può serializzare e riverificare.
"""

from dataclasses import dataclass, field, asdict
from typing import Any, Dict, List, Optional, Tuple
import random
import time

import numpy as np

from .errors import (
    CapExceededError, ChainBrokenError, ExcludedParameterError, SplitConstructionError,
)
from .limits import Limits
from .logger import ComputationLogger, maybe_log
from .monomial import (
    Monomial, MonomialIdeal, intersect, lcm, parse_monomial, principal, quotient_monomial,
)
from .symbolic import RestrictedIdealSpec, restricted_ideal


MapEntry = Tuple[Monomial, Monomial, Monomial]  # (w, φ(w), φ̂(w))


@dataclass(frozen=True)
class SplitCertificate:
    """Partizione 𝒢(I) = 𝒢(J) ⊔ 𝒢(K) più la funzione di splitting su 𝒢(J∩K)."""
    ideal: MonomialIdeal
    left: MonomialIdeal
    right: MonomialIdeal
    mapping: Tuple[MapEntry, ...]
    params: Optional[Tuple[int, int, int]] = None  # (m, r, s) se costruito da theorem_split

    @property
    def domain(self) -> Tuple[Monomial, ...]:
        return tuple(w for w, _, _ in self.mapping)

    def phi(self, w: Monomial) -> Monomial:
        return self._lookup(w)[1]

    def phi_hat(self, w: Monomial) -> Monomial:
        return self._lookup(w)[2]

    def _lookup(self, w: Monomial) -> MapEntry:
        for entry in self.mapping:
            if entry[0] == w:
                return entry
        raise KeyError(f"{w} non appartiene al dominio della mappa")

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "ambient": self.ideal.ambient,
            "ideal": [g.to_text() for g in self.ideal],
            "left": [g.to_text() for g in self.left],
            "right": [g.to_text() for g in self.right],
            "map": [{"w": w.to_text(), "phi": p.to_text(), "phi_hat": q.to_text()}
                    for w, p, q in self.mapping],
        }
        if self.params:
            data["m"], data["r"], data["s"] = self.params
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'SplitCertificate':
        m = data["ambient"]

        def ideal(key: str) -> MonomialIdeal:
            return MonomialIdeal(m, [parse_monomial(t, m) for t in data.get(key, [])])

        mapping = tuple(
            (parse_monomial(e["w"], m), parse_monomial(e["phi"], m), parse_monomial(e["phi_hat"], m))
            for e in data.get("map", [])
        )
        params = (data["m"], data["r"], data["s"]) if "r" in data else None
        return cls(ideal("ideal"), ideal("left"), ideal("right"), mapping, params)


@dataclass
class Violation:
    kind: str
    witness: Tuple[str, ...]
    detail: str = ""


@dataclass
class EKVerdict:
    """Esito della verifica E-K; exhaustive=False se i sottoinsiemi sono campionati."""
    valid: bool
    exhaustive: bool
    subsets_checked: int
    domain_size: int
    violations: List[Violation] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)

    def summary(self) -> str:
        mode = "esaustiva" if self.exhaustive else "campionata (NON esaustiva)"
        if self.valid:
            return f"valido ({mode}, {self.subsets_checked} sottoinsiemi)"
        first = self.violations[0]
        return f"violazione {first.kind}: {', '.join(first.witness)} {first.detail}".strip()


# ============================================
# COSTRUZIONE
# ============================================

def _phi(w: Monomial, r: int, s: int) -> Monomial:
    """
    j = indice minimo ≠ r con Σa - a_r - a_j = s e a_j massimo fra gli indici ≠ r, j;
    t = indice minimo ∉ {j, r} con a_t = a_max.
    φ(w) = w/x_j se un altro ℓ ∉ {j, t, r} ha a_ℓ = a_max, altrimenti w/(x_j x_t).
    """
    a = w.exponents
    m = len(a)
    total = sum(a)
    for j in range(1, m + 1):
        if j == r:
            continue
        others = [a[k - 1] for k in range(1, m + 1) if k not in (j, r)]
        if not others:
            continue
        a_max = max(others)
        if total - a[r - 1] - a[j - 1] == s and a[j - 1] == a_max:
            break
    else:
        raise SplitConstructionError(f"Nessun indice j valido per {w} (r={r}, s={s})")

    t = next(k for k in range(1, m + 1) if k not in (j, r) and a[k - 1] == a_max)
    if any(a[k - 1] == a_max for k in range(1, m + 1) if k not in (j, t, r)):
        return quotient_monomial(w, Monomial.variable(j, m))
    return quotient_monomial(w, Monomial.product_of((j, t), m))


def theorem_split(m: int, s: int, r: int, allow_excluded: bool = False,
                  limits: Optional[Limits] = None,
                  logger: Optional[ComputationLogger] = None) -> SplitCertificate:
    """
    Splitting di I_{K_m∖K_r,s} in L1 = I ∩ ⟨x_r⟩ = I_{K_m∖K_{r-1},s} e L2.
    Fuori dal caso escluso 𝒢(L1) sono proprio i generatori di I divisibili per x_r.

    Con allow_excluded=True il caso r = m-s-1 viene costruito comunque,
    così che verify_ek possa mostrare dove fallisce.
    """
    if m < 3:
        raise ValueError(f"Lo splitting richiede m >= 3, trovato {m}")
    if s < 2:
        raise ValueError(f"Lo splitting richiede s >= 2, trovato {s}")
    if not 1 <= r <= m:
        raise ValueError(f"r={r} fuori da 1..{m}")
    if r == m - s - 1 and not allow_excluded:
        raise ExcludedParameterError(m, s, r)

    limits = limits or Limits()
    ideal = restricted_ideal(RestrictedIdealSpec.outside(m, r, s), limits)
    x_r = Monomial.variable(r, m)
    left = intersect(ideal, principal(x_r), limits.max_candidates)
    right = MonomialIdeal(m, [g for g in ideal if g.exponents[r - 1] == 0])
    both = intersect(left, right, limits.max_candidates)

    mapping = tuple((w, _phi(w, r, s), quotient_monomial(w, x_r)) for w in both)
    maybe_log(logger, "log_split", m, r, s, len(both))
    return SplitCertificate(ideal, left, right, mapping, (m, r, s))


def split_chain(m: int, s: int, limits: Optional[Limits] = None,
                logger: Optional[ComputationLogger] = None) -> List[SplitCertificate]:
    """Splitting ripetuti per r = m, ..., 1; L1 di ogni passo è l'input del successivo."""
    if s < 2:
        raise ValueError(f"La catena richiede s >= 2, trovato {s}")
    for r in range(m, 0, -1):
        if r == m - s - 1:
            raise ChainBrokenError(m, s, r)
    return [theorem_split(m, s, r, limits=limits, logger=logger) for r in range(m, 0, -1)]


# ============================================
# VERIFICA
# ============================================

def _subset_lcm_table(rows: np.ndarray) -> np.ndarray:
    """table[mask] = lcm delle righe selezionate da mask (riga 0 = insieme vuoto)."""
    n, width = rows.shape
    table = np.zeros((1 << n, width), dtype=np.int32)
    for k in range(n):
        table[1 << k: 1 << (k + 1)] = np.maximum(table[:1 << k], rows[k])
    return table


def _strict(part: np.ndarray, whole: np.ndarray) -> np.ndarray:
    return np.all(part <= whole, axis=1) & np.any(part < whole, axis=1)


def _witness(domain: Tuple[Monomial, ...], mask: int) -> Tuple[str, ...]:
    return tuple(w.to_text() for k, w in enumerate(domain) if mask >> k & 1)


def _check_subsets_exhaustive(domain, W, P, Q, violations: List[Violation]) -> int:
    lcm_w = _subset_lcm_table(W)[1:]
    for name, rows in (("phi", P), ("phi_hat", Q)):
        failing = np.nonzero(~_strict(_subset_lcm_table(rows)[1:], lcm_w))[0]
        if failing.size:
            violations.append(Violation(
                f"strict_{name}", _witness(domain, int(failing[0]) + 1),
                f"lcm({name}(S)) non divide strettamente lcm(S)"
            ))
    return lcm_w.shape[0]


def _check_subsets_sampled(domain, W, P, Q, sample: int, seed: Optional[int],
                           violations: List[Violation]) -> int:
    rng = random.Random(seed)
    n = len(domain)
    reported = set()
    for _ in range(sample):
        mask = 0
        while mask == 0:
            mask = rng.getrandbits(n)
        picked = [k for k in range(n) if mask >> k & 1]
        whole = W[picked].max(axis=0)
        for name, rows in (("phi", P), ("phi_hat", Q)):
            if name in reported:
                continue
            part = rows[picked].max(axis=0)
            if not _strict(part[None, :], whole[None, :])[0]:
                reported.add(name)
                violations.append(Violation(
                    f"strict_{name}", _witness(domain, mask),
                    f"lcm({name}(S)) non divide strettamente lcm(S)"
                ))
    return sample


def verify_ek(cert: SplitCertificate, subset_cap: int = 20, sample: Optional[int] = None,
              seed: Optional[int] = None, limits: Optional[Limits] = None,
              logger: Optional[ComputationLogger] = None) -> EKVerdict:
    """
    Verifica un certificato:
    - 𝒢(I) = 𝒢(J) ⊔ 𝒢(K) e dominio della mappa = 𝒢(J∩K);
    - φ(w) ∈ 𝒢(J), φ̂(w) ∈ 𝒢(K);
    - (1) lcm(φ(w), φ̂(w)) = w;
    - (2) per ogni S non vuoto, lcm(φ(S)) e lcm(φ̂(S)) dividono strettamente lcm(S).

    Oltre subset_cap elementi serve `sample` (con `seed`): il verdetto
    risulta allora non esaustivo.
    """
    limits = limits or Limits()
    start = time.perf_counter()
    violations: List[Violation] = []

    left_set, right_set = set(cert.left), set(cert.right)
    ideal_set = set(cert.ideal)
    if left_set & right_set or left_set | right_set != ideal_set:
        stray = (left_set & right_set) | ((left_set | right_set) ^ ideal_set)
        violations.append(Violation(
            "partition", tuple(g.to_text() for g in sorted(stray)),
            "𝒢(I) non è unione disgiunta di 𝒢(J) e 𝒢(K)"
        ))

    expected = set(intersect(cert.left, cert.right, limits.max_candidates))
    domain = cert.domain
    if set(domain) != expected or len(domain) != len(expected):
        missing = sorted(expected - set(domain))
        violations.append(Violation(
            "domain", tuple(g.to_text() for g in missing),
            "il dominio della mappa differisce da 𝒢(J∩K)"
        ))

    for w, p, q in cert.mapping:
        if p not in left_set:
            violations.append(Violation("phi_membership", (w.to_text(),), f"φ(w)={p} ∉ 𝒢(J)"))
        if q not in right_set:
            violations.append(Violation("phi_hat_membership", (w.to_text(),), f"φ̂(w)={q} ∉ 𝒢(K)"))
        if lcm(p, q) != w:
            violations.append(Violation("lcm", (w.to_text(),), f"lcm({p}, {q}) ≠ w"))

    n = len(domain)
    exhaustive = True
    checked = 0
    if n:
        W = np.array([w.exponents for w in domain], dtype=np.int32)
        P = np.array([p.exponents for _, p, _ in cert.mapping], dtype=np.int32)
        Q = np.array([q.exponents for _, _, q in cert.mapping], dtype=np.int32)
        if n <= subset_cap:
            checked = _check_subsets_exhaustive(domain, W, P, Q, violations)
        elif sample:
            exhaustive = False
            checked = _check_subsets_sampled(domain, W, P, Q, sample, seed, violations)
        else:
            raise CapExceededError("elementi di 𝒢(J∩K) per la verifica esaustiva", n, subset_cap,
                                   "usa sample e seed per una verifica campionata")

    verdict = EKVerdict(not violations, exhaustive, checked, n, violations)
    maybe_log(logger, "log_event", "verify_ek", {
        "domain_size": n, "valid": verdict.valid, "exhaustive": exhaustive,
        "subsets_checked": checked,
        "duration_ms": round((time.perf_counter() - start) * 1000, 3)
    })
    return verdict
