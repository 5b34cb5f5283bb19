"""
Calculator - Operazioni della CLI e analisi batch
=================================================
Facciata che collega grafi, potenze simboliche, splitting e tabelle di Betti,
più un'indagine batch su molti casi con indicatori riassuntivi.
"""

from typing import List, Dict, Any, Optional, Tuple
from dataclasses import dataclass, field, replace
from pathlib import Path
from datetime import datetime
import statistics

import pandas as pd

from .engine import (
    BettiTable, ComputationLogger, EKVerdict, FieldSpec, Limits, LimitsFactory, MonomialIdeal,
    ParallelBoundReport, SimpleGraph, SplitCertificate,
    betti_oracle, closed_form_complete, complete_graph, parallel_bound_report,
    parallel_symbolic_gens, parallelize, parse_graph, recursive_betti_complete,
    socle_degrees, split_chain, symbolic_power, theorem_split, verify_ek,
)
from .engine.graph import is_complete


METHODS = ("oracle", "recursive", "formula")
FORMATS = ("json", "csv", "pretty")


@dataclass
class RunConfig:
    """Configurazione di un comando (costruita da argparse)."""
    graph: str = "complete:3"
    s: int = 2
    alpha: Optional[Tuple[int, ...]] = None
    method: str = "oracle"
    compare: Optional[str] = None
    field: Optional[str] = None
    profile: str = "default"
    degree_cap: Optional[int] = None
    vertex_cap: Optional[int] = None
    subset_cap: Optional[int] = None
    threads: Optional[int] = None
    output_format: str = "pretty"
    convention: str = "quotient"
    seed: Optional[int] = None
    sample: Optional[int] = None
    # split
    m: Optional[int] = None
    r: Optional[int] = None
    chain: bool = False
    verify: bool = False
    allow_excluded: bool = False
    # parallel
    check_bound: bool = False

    def __post_init__(self):
        if self.s < 1:
            raise ValueError(f"L'esponente simbolico deve essere >= 1, trovato {self.s}")
        for key in ("degree_cap", "vertex_cap", "subset_cap", "threads", "sample"):
            value = getattr(self, key)
            if value is not None and value < 1:
                raise ValueError(f"'{key}' deve essere positivo, trovato {value}")
        if self.method not in METHODS:
            raise ValueError(f"Metodo '{self.method}' non valido. Disponibili: {list(METHODS)}")
        if self.compare is not None and self.compare not in METHODS:
            raise ValueError(f"Metodo di confronto '{self.compare}' non valido")
        if self.output_format not in FORMATS:
            raise ValueError(f"Formato '{self.output_format}' non valido. Disponibili: {list(FORMATS)}")
        if self.convention not in ("ideal", "quotient"):
            raise ValueError(f"Convenzione '{self.convention}' non valida")
        if self.sample is not None and self.seed is None:
            raise ValueError("Il campionamento dei sottoinsiemi richiede --seed")


@dataclass
class GensResult:
    graph: SimpleGraph
    s: int
    alpha: Optional[Tuple[int, ...]]
    ideal: MonomialIdeal

    def to_dict(self) -> Dict[str, Any]:
        return {
            "graph": {"vertices": self.graph.vertex_count, "edges": [list(e) for e in self.graph.edges]},
            "s": self.s,
            "alpha": list(self.alpha) if self.alpha else None,
            "generators": [{"monomial": g.to_text(self.graph.variable_names()), "degree": g.degree}
                           for g in self.ideal],
        }


@dataclass
class BettiResult:
    table: BettiTable
    method: str
    compared_with: Optional[str] = None
    differences: List[Dict[str, int]] = field(default_factory=list)

    @property
    def equal(self) -> bool:
        return not self.differences


@dataclass
class SplitResult:
    certificates: List[SplitCertificate]
    verdicts: List[Optional[EKVerdict]]

    @property
    def all_valid(self) -> bool:
        return all(v.valid for v in self.verdicts if v is not None)


@dataclass
class SocleResult:
    m: int
    s: int
    table: BettiTable
    degrees: Dict[int, int]

    @property
    def minimum(self) -> int:
        return min(self.degrees)


@dataclass
class SurveyResult:
    """Risultato di un'indagine su più casi."""
    started: str
    records: List[Dict[str, Any]] = field(default_factory=list)
    kpis: Dict[str, Any] = field(default_factory=dict)

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(self.records)


class Calculator:
    """Esegue le operazioni della CLI su una configurazione."""

    def __init__(self, profiles_path: Optional[Path] = None,
                 logger: Optional[ComputationLogger] = None):
        self.limits_factory = LimitsFactory(profiles_path)
        self.logger = logger

    # ============================================
    # CONFIGURAZIONE
    # ============================================

    def limits_for(self, config: RunConfig) -> Limits:
        base = self.limits_factory.get(config.profile).with_env()
        return base.with_overrides(
            degree_cap=config.degree_cap,
            vertex_cap=config.vertex_cap,
            subset_cap=config.subset_cap,
            threads=config.threads,
            field=config.field,
        )

    def _graph(self, config: RunConfig) -> SimpleGraph:
        return parse_graph(config.graph)

    def _ideal(self, config: RunConfig, limits: Limits) -> MonomialIdeal:
        G = self._graph(config)
        if config.alpha:
            return parallel_symbolic_gens(G, config.alpha, config.s, limits, self.logger)
        return symbolic_power(G, config.s, limits, self.logger)

    def _oracle_cap(self, config: RunConfig, G: SimpleGraph) -> Optional[int]:
        if config.degree_cap:
            return config.degree_cap
        if is_complete(G) and not config.alpha:
            return 2 * config.s + G.vertex_count + 2
        return None

    # ============================================
    # COMANDI
    # ============================================

    def gens(self, config: RunConfig) -> GensResult:
        limits = self.limits_for(config)
        G = self._graph(config)
        if config.alpha:
            G = parallelize(G, config.alpha)[0]
        return GensResult(G, config.s, config.alpha, self._ideal(config, limits))

    def _table(self, config: RunConfig, method: str) -> BettiTable:
        limits = self.limits_for(config)
        field = FieldSpec.parse(limits.field)
        G = self._graph(config)
        if method == "oracle":
            return betti_oracle(self._ideal(config, limits), field, self._oracle_cap(config, G),
                                limits, self.logger)
        if config.alpha or not is_complete(G):
            raise ValueError(f"Il metodo '{method}' vale solo per grafi completi senza α")
        m = G.vertex_count
        if method == "recursive":
            return recursive_betti_complete(m, config.s, field, limits, self.logger)
        return closed_form_complete(m, config.s, field, limits, self.logger)

    def betti(self, config: RunConfig) -> BettiResult:
        table = self._table(config, config.method).as_convention(config.convention)
        result = BettiResult(table, config.method)
        if config.compare:
            other = self._table(config, config.compare)
            result.compared_with = config.compare
            result.differences = table.differences(other)
            if self.logger:
                self.logger.log_comparison(config.method, config.compare, result.equal,
                                           len(result.differences))
        return result

    def split(self, config: RunConfig) -> SplitResult:
        limits = self.limits_for(config)
        if config.m is None:
            raise ValueError("Lo splitting richiede --m")
        if config.chain:
            certificates = split_chain(config.m, config.s, limits, self.logger)
        else:
            if config.r is None:
                raise ValueError("Lo splitting richiede --r oppure --chain")
            certificates = [theorem_split(config.m, config.s, config.r, config.allow_excluded,
                                          limits, self.logger)]
        verdicts: List[Optional[EKVerdict]] = [None] * len(certificates)
        if config.verify:
            verdicts = [verify_ek(c, limits.subset_cap, config.sample, config.seed, limits, self.logger)
                        for c in certificates]
        return SplitResult(certificates, verdicts)

    def socle(self, config: RunConfig) -> SocleResult:
        G = self._graph(config)
        if not is_complete(G):
            raise ValueError("Lo zoccolo è definito solo per I(K_m)^(s): serve un grafo completo")
        table = self._table(replace(config, alpha=None), config.method).to_quotient()
        return SocleResult(G.vertex_count, config.s, table, socle_degrees(table, G.vertex_count))

    def parallel(self, config: RunConfig) -> ParallelBoundReport:
        if not config.alpha:
            raise ValueError("Il comando parallel richiede --alpha")
        limits = self.limits_for(config)
        return parallel_bound_report(self._graph(config), config.alpha, config.s,
                                     FieldSpec.parse(limits.field), limits, self.logger)

    # ============================================
    # INDAGINE BATCH
    # ============================================

    def run_survey(self, plan: Dict[str, Any], profile: str = "default",
                   verbose: bool = False) -> SurveyResult:
        """
        Piano: {"recursion": [{"m":..,"s":..}], "parallel": [{"graph":..,"alpha":[..],"s":..}]}.
        """
        survey = SurveyResult(started=datetime.now().isoformat())
        limits = self.limits_factory.get(profile).with_env()
        field = FieldSpec.parse(plan.get("field", limits.field))

        for case in plan.get("recursion", []):
            m, s = case["m"], case["s"]
            start = datetime.now()
            recursive = recursive_betti_complete(m, s, field, limits, self.logger)
            mid = datetime.now()
            oracle = betti_oracle(symbolic_power(complete_graph(m), s, limits), field,
                                  2 * s + m + 2, limits, self.logger)
            end = datetime.now()
            differences = recursive.differences(oracle)
            survey.records.append({
                "kind": "recursion", "case": f"K{m}^({s})", "m": m, "s": s,
                "agree": not differences, "differences": len(differences),
                "recursive_ms": (mid - start).total_seconds() * 1000,
                "oracle_ms": (end - mid).total_seconds() * 1000,
            })
            if verbose:
                print(f"  K{m}^({s}): {'ok' if not differences else 'DIVERSO'}")

        for case in plan.get("parallel", []):
            G = parse_graph(case["graph"])
            alpha, s = tuple(case["alpha"]), case["s"]
            start = datetime.now()
            report = parallel_bound_report(G, alpha, s, field, limits, self.logger)
            duration = (datetime.now() - start).total_seconds() * 1000
            rows = report.rows
            positive = [r for r in rows if r["base"] > 0]
            survey.records.append({
                "kind": "parallel", "case": f"{case['graph']} α={list(alpha)} s={s}",
                "s": s, "entries": len(rows),
                "proven": report.proven_holds,
                "conjectured_share": (sum(r["conjectured"] for r in rows) / len(rows)) if rows else 1.0,
                "weak_share": (sum(r["weak"] for r in rows) / len(rows)) if rows else 1.0,
                "tight_share": (sum(r["parallel"] == r["base"] for r in positive) / len(positive))
                if positive else 0.0,
                "mean_ratio": statistics.mean(r["parallel"] / r["base"] for r in positive)
                if positive else 0.0,
                "duration_ms": duration,
            })
            if verbose:
                print(f"  {case['graph']} α={list(alpha)}: limite dimostrato "
                      f"{'ok' if report.proven_holds else 'VIOLATO'}")

        survey.kpis = self.calculate_kpis(survey.records)
        return survey

    def calculate_kpis(self, records: List[Dict[str, Any]]) -> Dict[str, Any]:
        """Indicatori riassuntivi dell'indagine."""
        recursion = [r for r in records if r["kind"] == "recursion"]
        parallel = [r for r in records if r["kind"] == "parallel"]
        kpis: Dict[str, Any] = {}
        if recursion:
            kpis["recursion"] = {
                "cases": len(recursion),
                "agreement_rate": sum(r["agree"] for r in recursion) / len(recursion),
                "avg_recursive_ms": statistics.mean(r["recursive_ms"] for r in recursion),
                "avg_oracle_ms": statistics.mean(r["oracle_ms"] for r in recursion),
                "max_oracle_ms": max(r["oracle_ms"] for r in recursion),
            }
        if parallel:
            kpis["parallel"] = {
                "cases": len(parallel),
                "proven_bound_rate": sum(r["proven"] for r in parallel) / len(parallel),
                "avg_conjectured_share": statistics.mean(r["conjectured_share"] for r in parallel),
                "avg_weak_share": statistics.mean(r["weak_share"] for r in parallel),
                "avg_tight_share": statistics.mean(r["tight_share"] for r in parallel),
                "avg_duration_ms": statistics.mean(r["duration_ms"] for r in parallel),
            }
        return kpis
