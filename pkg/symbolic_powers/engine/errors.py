"""
Errori di dominio
=================
Gerarchia di eccezioni usata da tutti i moduli del motore.
Derivano tutte da ValueError, così il codice chiamante può continuare
a intercettare ValueError come per qualsiasi parametro non valido.
"""

from typing import Optional


class SymbolicError(ValueError):
    """Base di tutti gli errori del calcolatore."""


class AmbientMismatchError(SymbolicError):
    """Monomi o ideali definiti su un numero diverso di variabili."""

    def __init__(self, left: int, right: int):
        super().__init__(f"Numero di variabili incompatibile: {left} vs {right}")
        self.left = left
        self.right = right


class CapExceededError(SymbolicError):
    """Un limite configurato (grado, vertici, sottoinsiemi, candidati) è stato superato."""

    def __init__(self, what: str, value: int, cap: int, hint: str = ""):
        message = f"Limite superato per {what}: {value} > {cap}"
        if hint:
            message += f" ({hint})"
        super().__init__(message)
        self.what = what
        self.value = value
        self.cap = cap


class ParseError(SymbolicError):
    """Testo di monomio, ideale o grafo non interpretabile."""


class ExcludedParameterError(SymbolicError):
    """Il caso r = m - s - 1 non ammette lo splitting costruttivo."""

    def __init__(self, m: int, s: int, r: int):
        super().__init__(
            f"Parametri esclusi: r = m - s - 1 ({r} = {m} - {s} - 1), "
            f"lo splitting non è garantito"
        )
        self.m, self.s, self.r = m, s, r


class ChainBrokenError(SymbolicError):
    """La catena di splitting incontra r = m - s - 1 e non può proseguire."""

    def __init__(self, m: int, s: int, r: int):
        super().__init__(f"Catena interrotta a r={r} per m={m}, s={s} (r = m - s - 1)")
        self.m, self.s, self.r = m, s, r


class SplitConstructionError(SymbolicError):
    """La regola di scelta degli indici j, t non trova un candidato."""


class ConventionMismatchError(SymbolicError):
    """Tabelle di Betti con convenzioni diverse (ideal / quotient)."""

    def __init__(self, expected: str, found: str):
        super().__init__(f"Convenzione attesa '{expected}', trovata '{found}'")
        self.expected = expected
        self.found = found


class ProjectiveDimensionError(SymbolicError):
    """L'ultima riga non nulla della tabella non è quella attesa."""

    def __init__(self, expected: int, found: Optional[int]):
        super().__init__(
            f"Dimensione proiettiva {found} diversa da {expected}: "
            f"il quoziente non sembra Cohen-Macaulay di dimensione 1"
        )
        self.expected = expected
        self.found = found


class FieldDiscrepancyError(SymbolicError):
    """Le tabelle calcolate su campi diversi non coincidono."""

    def __init__(self, fields, differences):
        super().__init__(f"Tabelle diverse sui campi {fields}: {differences}")
        self.fields = fields
        self.differences = differences
