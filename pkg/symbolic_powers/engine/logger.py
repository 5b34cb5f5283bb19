"""
Computation Logger
==================
Registro degli eventi di calcolo (oracolo, ricorsione, splitting).
Gli eventi restano in memoria e possono essere salvati in JSON dalla CLI.
"""

from typing import List, Dict, Any, Optional
from datetime import datetime
from collections import Counter


class ComputationLogger:
    """Logger per la cronologia di un calcolo."""

    def __init__(self, run_id: str = "run"):
        self.run_id = run_id
        self.events: List[Dict[str, Any]] = []

    def log_event(self, event_type: str, data: Dict[str, Any]):
        """Registra un evento."""
        self.events.append({
            "timestamp": datetime.now().isoformat(),
            "type": event_type,
            "data": data
        })

    def log_oracle_run(self, ambient: int, generators: int, blocks: int, field: str, duration_ms: float):
        self.log_event("oracle_run", {
            "ambient": ambient,
            "generators": generators,
            "multidegree_blocks": blocks,
            "field": field,
            "duration_ms": round(duration_ms, 3)
        })

    def log_split(self, m: int, r: int, s: int, intersection_size: int):
        self.log_event("split", {
            "m": m,
            "r": r,
            "s": s,
            "intersection_generators": intersection_size
        })

    def log_recursion_step(self, m: int, r: int, s: int, rule: str):
        self.log_event("recursion_step", {"m": m, "r": r, "s": s, "rule": rule})

    def log_fallback(self, m: int, r: int, s: int, reason: str):
        self.log_event("oracle_fallback", {"m": m, "r": r, "s": s, "reason": reason})

    def log_comparison(self, left: str, right: str, equal: bool, differences: int = 0):
        self.log_event("comparison", {
            "left": left,
            "right": right,
            "equal": equal,
            "differences": differences
        })

    def count(self, event_type: str) -> int:
        return sum(1 for e in self.events if e["type"] == event_type)

    def get_summary(self) -> Dict[str, Any]:
        """Restituisce un riepilogo del calcolo."""
        return {
            "run_id": self.run_id,
            "total_events": len(self.events),
            "by_type": dict(sorted(Counter(e["type"] for e in self.events).items())),
            "events": self.events
        }


def maybe_log(logger: Optional[ComputationLogger], method: str, *args, **kwargs):
    """Chiama il metodo del logger solo se un logger è presente."""
    if logger is not None:
        getattr(logger, method)(*args, **kwargs)
