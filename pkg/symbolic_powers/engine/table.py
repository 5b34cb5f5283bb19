"""
Betti Table
===========
Tabella dei numeri di Betti graduati β_{i,j} con convenzione esplicita:

- ideal: la riga i = 0 conta i generatori minimali di I;
- quotient: tabella di R/I, con β_{0,0} = 1 e β^{R/I}_{i,j} = β^{I}_{i-1,j}.

L'ideale unità è il caso speciale: tabella ideal {(0,0): 1}, tabella quotient vuota.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

import pandas as pd

from .errors import ConventionMismatchError


CONVENTIONS = ("ideal", "quotient")

Entry = Tuple[int, int]


@dataclass
class BettiTable:
    convention: str
    ambient: int
    entries: Dict[Entry, int] = field(default_factory=dict)
    field_tag: str = field(default="gf:32003", compare=False)

    def __post_init__(self):
        if self.convention not in CONVENTIONS:
            raise ValueError(f"Convenzione '{self.convention}' non valida. "
                             f"Disponibili: {list(CONVENTIONS)}")
        cleaned = {}
        for (i, j), beta in self.entries.items():
            if i < 0 or j < 0 or beta < 0:
                raise ValueError(f"Voce non valida β_{{{i},{j}}} = {beta}")
            if beta:
                cleaned[(int(i), int(j))] = int(beta)
        self.entries = dict(sorted(cleaned.items()))

    # ============================================
    # ACCESSO
    # ============================================

    def get(self, i: int, j: int) -> int:
        return self.entries.get((i, j), 0)

    def row(self, i: int) -> Dict[int, int]:
        return {j: b for (k, j), b in self.entries.items() if k == i}

    def homological_indices(self) -> List[int]:
        return sorted({i for i, _ in self.entries})

    def last_row(self) -> Optional[int]:
        """Indice dell'ultima riga non nulla (dimensione proiettiva)."""
        return max((i for i, _ in self.entries), default=None)

    def totals(self) -> Dict[int, int]:
        """Numeri di Betti totali per indice omologico."""
        totals: Dict[int, int] = {}
        for (i, _), beta in self.entries.items():
            totals[i] = totals.get(i, 0) + beta
        return totals

    def regularity(self) -> Optional[int]:
        """max(j - i) sulle voci non nulle."""
        return max((j - i for i, j in self.entries), default=None)

    def is_empty(self) -> bool:
        return not self.entries

    def require(self, convention: str) -> 'BettiTable':
        if self.convention != convention:
            raise ConventionMismatchError(convention, self.convention)
        return self

    # ============================================
    # CONVERSIONI
    # ============================================

    def to_quotient(self) -> 'BettiTable':
        if self.convention == "quotient":
            return self
        if self.entries == {(0, 0): 1}:
            return BettiTable("quotient", self.ambient, {}, self.field_tag)
        shifted = {(i + 1, j): b for (i, j), b in self.entries.items()}
        shifted[(0, 0)] = 1
        return BettiTable("quotient", self.ambient, shifted, self.field_tag)

    def to_ideal(self) -> 'BettiTable':
        if self.convention == "ideal":
            return self
        if not self.entries:
            return BettiTable("ideal", self.ambient, {(0, 0): 1}, self.field_tag)
        row0 = self.row(0)
        if row0 != {0: 1}:
            raise ValueError(f"Riga 0 non standard in una tabella di R/I: {row0}")
        shifted = {(i - 1, j): b for (i, j), b in self.entries.items() if i > 0}
        return BettiTable("ideal", self.ambient, shifted, self.field_tag)

    def as_convention(self, convention: str) -> 'BettiTable':
        if convention == "quotient":
            return self.to_quotient()
        if convention == "ideal":
            return self.to_ideal()
        raise ValueError(f"Convenzione '{convention}' non valida")

    def differences(self, other: 'BettiTable') -> List[Dict[str, int]]:
        """Voci diverse tra due tabelle nella stessa convenzione."""
        other = other.as_convention(self.convention)
        keys = sorted(set(self.entries) | set(other.entries))
        return [{"i": i, "j": j, "left": self.get(i, j), "right": other.get(i, j)}
                for i, j in keys if self.get(i, j) != other.get(i, j)]

    def same_entries(self, other: 'BettiTable') -> bool:
        return not self.differences(other)

    def euler_numerator(self) -> Dict[int, int]:
        """Σ (-1)^i β_{i,j} t^j (convenzione quotient) come dizionario j -> coefficiente."""
        coefficients: Dict[int, int] = {}
        for (i, j), beta in self.to_quotient().entries.items():
            coefficients[j] = coefficients.get(j, 0) + (-1) ** i * beta
        return {j: c for j, c in sorted(coefficients.items()) if c}

    # ============================================
    # SERIALIZZAZIONE
    # ============================================

    def to_dict(self) -> Dict[str, Any]:
        return {
            "convention": self.convention,
            "ambient": self.ambient,
            "field": self.field_tag,
            "entries": [{"i": i, "j": j, "beta": b} for (i, j), b in self.entries.items()],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'BettiTable':
        entries = {(e["i"], e["j"]): e["beta"] for e in data.get("entries", [])}
        return cls(data["convention"], data["ambient"], entries, data.get("field", "gf:32003"))

    def to_frame(self) -> pd.DataFrame:
        rows = [{"i": i, "j": j, "beta": b} for (i, j), b in self.entries.items()]
        return pd.DataFrame(rows, columns=["i", "j", "beta"])

    def to_csv(self, path: Optional[str] = None) -> Optional[str]:
        """CSV con colonne i,j,beta; senza path restituisce il testo."""
        return self.to_frame().to_csv(path, index=False, lineterminator="\n")

    def pretty(self) -> str:
        """Tabella in stile Macaulay: colonne i, righe j - i, '.' per gli zeri."""
        banner = (f"convenzione: {self.convention} "
                  f"({'R/I' if self.convention == 'quotient' else 'I'})  "
                  f"campo: {self.field_tag}  variabili: {self.ambient}")
        if not self.entries:
            return banner + "\n(tabella vuota)"
        columns = list(range(0, (self.last_row() or 0) + 1))
        offsets = sorted({j - i for i, j in self.entries})
        offsets = list(range(offsets[0], offsets[-1] + 1))
        totals = self.totals()

        cells = [[str(totals.get(i, 0)) for i in columns]]
        cells += [[str(self.get(i, d + i)) if self.get(i, d + i) else "." for i in columns]
                  for d in offsets]
        labels = ["total:"] + [f"{d}:" for d in offsets]
        width = max(len(c) for row in cells for c in row + [str(columns[-1])])
        label_width = max(len(lab) for lab in labels)

        lines = [banner, " " * (label_width + 1) + " ".join(str(i).rjust(width) for i in columns)]
        for label, row in zip(labels, cells):
            lines.append(label.rjust(label_width) + " " + " ".join(c.rjust(width) for c in row))
        return "\n".join(lines)
