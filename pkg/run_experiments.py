"""
Experiment Runner
=================
Esegue il piano di esperimenti definito in esperimenti.yaml:
ricorsione contro oracolo per grafi completi e limiti di Betti per le
parallelizzazioni. Stampa gli indicatori e salva JSON + CSV.
"""

import argparse
import json
import sys
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, List, Optional

import yaml

from symbolic_powers import Calculator, ComputationLogger
from symbolic_powers.calculator import SurveyResult


def load_plan(path: Path) -> Dict[str, Any]:
    """Legge il piano e controlla la forma dei casi."""
    with open(path, 'r', encoding='utf-8') as f:
        plan = yaml.safe_load(f) or {}

    for case in plan.get("recursion", []):
        if "m" not in case or "s" not in case:
            raise ValueError(f"Caso di ricorsione incompleto: {case}")
    for case in plan.get("parallel", []):
        missing = {"graph", "alpha", "s"} - set(case)
        if missing:
            raise ValueError(f"Caso di parallelizzazione incompleto, mancano {sorted(missing)}: {case}")
    return plan


def expand_plan(plan: Dict[str, Any]) -> Dict[str, Any]:
    """Espande le voci con 's' come lista ({"m": 3, "s": [2, 3]}) in casi singoli."""
    expanded = dict(plan)
    for kind in ("recursion", "parallel"):
        cases: List[Dict[str, Any]] = []
        for case in plan.get(kind, []):
            powers = case["s"] if isinstance(case["s"], list) else [case["s"]]
            cases.extend({**case, "s": s} for s in powers)
        expanded[kind] = cases
    return expanded


def _print_kpi_report(survey: SurveyResult, name: str):
    kpis = survey.kpis
    print(f"\n📊 REPORT: {name}")
    print(f"{'='*60}")
    rec = kpis.get("recursion")
    if rec:
        print("🔁 RICORSIONE vs ORACOLO")
        print(f"  Casi: {rec['cases']} | Accordo: {rec['agreement_rate']*100:.1f}%")
        print(f"  Tempo medio ricorsione: {rec['avg_recursive_ms']:.1f} ms")
        print(f"  Tempo medio oracolo: {rec['avg_oracle_ms']:.1f} ms (max {rec['max_oracle_ms']:.1f} ms)")
    par = kpis.get("parallel")
    if par:
        print("\n🧩 PARALLELIZZAZIONI")
        print(f"  Casi: {par['cases']} | Limite dimostrato: {par['proven_bound_rate']*100:.1f}%")
        print(f"  Voci con fattore ∏α (congettura): {par['avg_conjectured_share']*100:.1f}%")
        print(f"  Voci con fattore min α: {par['avg_weak_share']*100:.1f}%")
        print(f"  Voci con uguaglianza: {par['avg_tight_share']*100:.1f}%")
    print(f"{'='*60}\n")


def _save_results(path: str, survey: SurveyResult, plan: Dict[str, Any], profile: str):
    data = {
        "timestamp": datetime.now().isoformat(),
        "started": survey.started,
        "name": plan.get("name"),
        "profile": profile,
        "field": plan.get("field"),
        "kpis": survey.kpis,
        "records": survey.records,
    }
    with open(path, 'w', encoding='utf-8') as f:
        json.dump(data, f, indent=2, ensure_ascii=False)
    print(f"💾 Risultati salvati in: {path}")


def run_plan(plan_path: Path, profile: str = "default", verbose: bool = False,
             output_file: Optional[str] = None, csv_file: Optional[str] = None,
             log_file: Optional[str] = None) -> SurveyResult:
    """Esegue l'intero piano e salva i risultati."""
    plan = expand_plan(load_plan(plan_path))
    name = plan.get("name", plan_path.stem)
    print(f"🔄 Caricamento piano: {name}")

    logger = ComputationLogger(run_id=name) if log_file else None
    calc = Calculator(logger=logger)
    survey = calc.run_survey(plan, profile=profile, verbose=verbose)

    _print_kpi_report(survey, name)
    stamp = datetime.now().strftime('%Y%m%d_%H%M%S')
    slug = name.lower().replace(' ', '_')
    _save_results(output_file or f"results_{slug}_{stamp}.json", survey, plan, profile)

    csv_path = csv_file or f"results_{slug}_{stamp}.csv"
    survey.to_frame().to_csv(csv_path, index=False, lineterminator="\n")
    print(f"💾 Tabella salvata in: {csv_path}")

    if logger is not None:
        with open(log_file, 'w', encoding='utf-8') as f:
            json.dump(logger.get_summary(), f, indent=2, ensure_ascii=False)
    return survey


def main(argv: Optional[List[str]] = None) -> int:
    parser = argparse.ArgumentParser(description="Esperimenti su potenze simboliche")
    parser.add_argument("--plan", default="esperimenti.yaml")
    parser.add_argument("--profile", default="default")
    parser.add_argument("--verbose", "-v", action="store_true")
    parser.add_argument("--output", "-o", default=None, help="File JSON dei risultati")
    parser.add_argument("--csv", default=None, help="File CSV dei casi")
    parser.add_argument("--log", default=None, help="File JSON per il registro degli eventi")

    args = parser.parse_args(argv)
    plan_path = Path(args.plan)
    if not plan_path.exists():
        print(f"File non trovato: {args.plan}")
        return 2
    try:
        survey = run_plan(plan_path, args.profile, args.verbose, args.output, args.csv, args.log)
    except ValueError as exc:
        print(f"❌ {exc}", file=sys.stderr)
        return 2
    agreement = survey.kpis.get("recursion", {}).get("agreement_rate", 1.0)
    proven = survey.kpis.get("parallel", {}).get("proven_bound_rate", 1.0)
    return 0 if agreement == 1.0 and proven == 1.0 else 1


if __name__ == "__main__":
    sys.exit(main())
