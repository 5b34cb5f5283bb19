"""
Limits
======
Profili di limiti per i calcoli (gradi, vertici, sottoinsiemi, thread).
I profili si leggono da YAML; se il file manca si usano quelli di default.
"""

from dataclasses import dataclass, replace, asdict
from typing import Dict, Any, Optional, List
from pathlib import Path
import os
import yaml


THREADS_ENV = "SYMBOLIC_THREADS"
DEFAULT_PROFILES_PATH = Path(__file__).resolve().parent.parent / "config" / "limits.yaml"


@dataclass(frozen=True)
class Limits:
    """Limiti di calcolo di un profilo."""
    name: str = "default"
    description: str = ""

    degree_cap: int = 64            # enumerazione graduata
    vertex_cap: int = 24            # ricerca esaustiva dei ricoprimenti
    subset_cap: int = 20            # verifica E-K esaustiva
    max_candidates: int = 2_000_000  # monomi generati in un singolo passo
    max_multidegrees: int = 500_000  # blocchi di Koszul per l'oracolo
    threads: int = 1
    field: str = "gf:32003"

    def __post_init__(self):
        for key in ("degree_cap", "vertex_cap", "subset_cap", "max_candidates",
                    "max_multidegrees", "threads"):
            if getattr(self, key) < 1:
                raise ValueError(f"Il limite '{key}' deve essere positivo")

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'Limits':
        """Crea un profilo da dizionario."""
        caps = data.get('caps', {})
        return cls(
            name=data.get('name', 'default'),
            description=data.get('description', ''),
            degree_cap=caps.get('degree', 64),
            vertex_cap=caps.get('vertices', 24),
            subset_cap=caps.get('subsets', 20),
            max_candidates=caps.get('candidates', 2_000_000),
            max_multidegrees=caps.get('multidegrees', 500_000),
            threads=data.get('threads', 1),
            field=data.get('field', 'gf:32003')
        )

    @classmethod
    def from_yaml(cls, path: Optional[Path] = None, profile: str = "default") -> 'Limits':
        """Legge un profilo dal file YAML (default: config/limits.yaml)."""
        return LimitsFactory(Path(path) if path else None).get(profile)

    def with_overrides(self, **overrides) -> 'Limits':
        """Copia del profilo con i valori non nulli sostituiti."""
        return replace(self, **{k: v for k, v in overrides.items() if v is not None})

    def with_env(self) -> 'Limits':
        """Applica l'override del numero di thread dalla variabile d'ambiente."""
        raw = os.environ.get(THREADS_ENV)
        if not raw:
            return self
        try:
            threads = int(raw)
        except ValueError:
            raise ValueError(f"{THREADS_ENV} deve essere un intero, trovato '{raw}'")
        return replace(self, threads=threads)

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


class LimitsFactory:
    """Factory dei profili di limiti."""

    def __init__(self, profiles_path: Optional[Path] = None):
        self.profiles: Dict[str, Limits] = {}

        path = profiles_path or DEFAULT_PROFILES_PATH
        if path and path.exists():
            self._load_profiles(path)
        else:
            self._create_default_profiles()

    def _load_profiles(self, path: Path):
        """Carica i profili dal file YAML."""
        with open(path, 'r', encoding='utf-8') as f:
            data = yaml.safe_load(f) or {}

        for profile_id, profile_data in data.get('profiles', {}).items():
            self.profiles[profile_id] = Limits.from_dict({"name": profile_id, **profile_data})

        if not self.profiles:
            self._create_default_profiles()

    def _create_default_profiles(self):
        """Crea profili di default se nessun file è fornito."""
        self.profiles = {
            "default": Limits(name="default", description="Limiti standard"),
            "desk": Limits(
                name="desk",
                description="Calcoli piccoli, errori rapidi",
                degree_cap=32,
                vertex_cap=16,
                subset_cap=16,
                max_candidates=200_000,
                max_multidegrees=50_000
            ),
            "large": Limits(
                name="large",
                description="Griglie di accettazione complete",
                degree_cap=96,
                subset_cap=22,
                max_candidates=10_000_000,
                max_multidegrees=5_000_000,
                threads=4
            )
        }

    def get(self, profile_name: str = "default") -> Limits:
        """Restituisce il profilo richiesto."""
        if profile_name not in self.profiles:
            raise ValueError(f"Profilo '{profile_name}' non trovato. "
                             f"Disponibili: {list(self.profiles.keys())}")
        return self.profiles[profile_name]

    def list_profiles(self) -> List[str]:
        """Restituisce la lista dei profili disponibili."""
        return list(self.profiles.keys())
