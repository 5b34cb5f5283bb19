"""
Symbolic Powers - CLI
=====================
Script principale: generatori, tabelle di Betti, splitting E-K, zoccolo e
parallelizzazioni da linea di comando.

Codici di uscita: 0 successo, 1 verifica/confronto fallito,
2 errore d'uso, 3 limite superato.
"""

import argparse
import json
import sys
from typing import List, Optional

from symbolic_powers import Calculator, ComputationLogger, RunConfig
from symbolic_powers.engine import (
    CapExceededError, FieldDiscrepancyError, ProjectiveDimensionError,
)
from symbolic_powers.engine.graph import parse_alpha


EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_CAP = 3


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--profile", default="default", help="Profilo di limiti (default: default)")
    common.add_argument("--field", default=None, help="Campo: gf:<primo> oppure qq")
    common.add_argument("--threads", type=int, default=None, help="Processi per l'oracolo")
    common.add_argument("--format", dest="output_format", choices=["json", "csv", "pretty"],
                        default="pretty", help="Formato di output (default: pretty)")
    common.add_argument("--convention", choices=["ideal", "quotient"], default="quotient",
                        help="Convenzione delle tabelle di Betti (default: quotient)")
    common.add_argument("--log", default=None, help="File JSON per il registro degli eventi")
    common.add_argument("--verbose", "-v", action="store_true", help="Progressi su stderr")
    common.add_argument("--degree-cap", type=int, default=None, help="Limite sul grado interno")
    common.add_argument("--vertex-cap", type=int, default=None, help="Limite sui vertici")
    common.add_argument("--subset-cap", type=int, default=None,
                        help="Limite per la verifica E-K esaustiva")
    common.add_argument("--seed", type=int, default=None, help="Seed per il campionamento")
    common.add_argument("--sample", type=int, default=None,
                        help="Sottoinsiemi campionati oltre il limite (richiede --seed)")
    return common


def _graph_options(parser: argparse.ArgumentParser, alpha_required: bool = False):
    parser.add_argument("--graph", "-g", default="complete:3",
                        help="complete:m, path:n, cycle:n, multipartite:a,b,c oppure file")
    parser.add_argument("--power", "-s", type=int, required=True, help="Esponente simbolico s")
    parser.add_argument("--alpha", type=parse_alpha, default=None, required=alpha_required,
                        help="Parallelizzazione, es. 2,1,1")


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(description="Symbolic Powers - potenze simboliche di ideali degli archi")
    commands = parser.add_subparsers(dest="command", required=True)

    gens = commands.add_parser("gens", parents=[common], help="Generatori minimali di I(G)^(s)")
    _graph_options(gens)

    betti = commands.add_parser("betti", parents=[common], help="Tabella di Betti graduata")
    _graph_options(betti)
    betti.add_argument("--method", choices=["oracle", "recursive", "formula"], default="oracle")
    betti.add_argument("--compare", choices=["oracle", "recursive", "formula"], default=None,
                       help="Secondo metodo da confrontare (uscita 1 se diversi)")

    split = commands.add_parser("split", parents=[common], help="Splitting E-K di I_{K_m∖K_r,s}")
    split.add_argument("--m", type=int, required=True)
    split.add_argument("--r", type=int, default=None)
    split.add_argument("--power", "-s", type=int, required=True)
    split.add_argument("--chain", action="store_true", help="Catena completa r = m..1")
    split.add_argument("--verify", action="store_true", help="Verifica le condizioni E-K")
    split.add_argument("--allow-excluded", action="store_true",
                       help="Costruisce comunque il caso r = m-s-1")

    socle = commands.add_parser("socle", parents=[common], help="Grado minimo dello zoccolo")
    _graph_options(socle)
    socle.add_argument("--method", choices=["oracle", "recursive", "formula"], default="oracle")

    parallel = commands.add_parser("parallel", parents=[common], help="Confronto G vs G^α")
    _graph_options(parallel, alpha_required=True)
    parallel.add_argument("--check-bound", action="store_true",
                          help="Uscita 1 se il limite dimostrato non vale")

    commands.add_parser("profiles", help="Mostra i profili di limiti disponibili")
    return parser


def _config(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        graph=getattr(args, "graph", "complete:3"),
        s=args.power,
        alpha=getattr(args, "alpha", None),
        method=getattr(args, "method", "oracle"),
        compare=getattr(args, "compare", None),
        field=args.field,
        profile=args.profile,
        degree_cap=args.degree_cap,
        vertex_cap=args.vertex_cap,
        subset_cap=args.subset_cap,
        threads=args.threads,
        output_format=args.output_format,
        convention=args.convention,
        seed=args.seed,
        sample=args.sample,
        m=getattr(args, "m", None),
        r=getattr(args, "r", None),
        chain=getattr(args, "chain", False),
        verify=getattr(args, "verify", False),
        allow_excluded=getattr(args, "allow_excluded", False),
        check_bound=getattr(args, "check_bound", False),
    )


# ============================================
# COMANDI
# ============================================

def cmd_gens(calc: Calculator, config: RunConfig) -> int:
    result = calc.gens(config)
    names = result.graph.variable_names()
    if config.output_format == "json":
        print(json.dumps(result.to_dict(), ensure_ascii=False, indent=2))
    elif config.output_format == "csv":
        print("monomial,degree")
        for g in result.ideal:
            print(f"{g.to_text(names)},{g.degree}")
    else:
        print(f"𝒢(I(G)^({config.s})): {len(result.ideal)} generatori")
        for g in result.ideal:
            print(f"  {g.degree:>3}  {g.to_text(names)}")
    return EXIT_OK


def _print_table(table, output_format: str):
    if output_format == "json":
        print(json.dumps(table.to_dict(), ensure_ascii=False))
    elif output_format == "csv":
        print(table.to_csv(), end="")
    else:
        print(table.pretty())


def cmd_betti(calc: Calculator, config: RunConfig) -> int:
    result = calc.betti(config)
    if config.output_format == "json" and result.compared_with:
        print(json.dumps({
            "table": result.table.to_dict(),
            "compared_with": result.compared_with,
            "equal": result.equal,
            "differences": result.differences,
        }, ensure_ascii=False))
    else:
        _print_table(result.table, config.output_format)
        if result.compared_with and config.output_format == "pretty":
            status = "uguali" if result.equal else f"{len(result.differences)} differenze"
            print(f"confronto {config.method} vs {result.compared_with}: {status}")
    return EXIT_OK if result.equal else EXIT_FAILED


def cmd_split(calc: Calculator, config: RunConfig) -> int:
    result = calc.split(config)
    if config.output_format == "json":
        payload = []
        for cert, verdict in zip(result.certificates, result.verdicts):
            entry = {"certificate": cert.to_dict()}
            if verdict is not None:
                entry["verdict"] = verdict.to_dict()
            payload.append(entry)
        print(json.dumps(payload, ensure_ascii=False, indent=2))
    else:
        if config.output_format == "csv":
            print("m,r,s,ideal,left,right,intersection,verdict")
        for cert, verdict in zip(result.certificates, result.verdicts):
            m, r, s = cert.params
            status = verdict.summary() if verdict is not None else "non verificato"
            if config.output_format == "csv":
                valid = "" if verdict is None else str(verdict.valid).lower()
                print(f"{m},{r},{s},{len(cert.ideal)},{len(cert.left)},{len(cert.right)},"
                      f"{len(cert.mapping)},{valid}")
            else:
                print(f"m={m} r={r} s={s}: |𝒢(I)|={len(cert.ideal)} |𝒢(L1)|={len(cert.left)} "
                      f"|𝒢(L2)|={len(cert.right)} |𝒢(L1∩L2)|={len(cert.mapping)} -> {status}")
    return EXIT_OK if result.all_valid else EXIT_FAILED


def cmd_socle(calc: Calculator, config: RunConfig) -> int:
    result = calc.socle(config)
    if config.output_format == "json":
        print(json.dumps({
            "m": result.m, "s": result.s,
            "min_socle_degree": result.minimum,
            "socle_degrees": {str(d): c for d, c in result.degrees.items()},
        }, ensure_ascii=False))
    elif config.output_format == "csv":
        print("degree,multiplicity")
        for d, c in result.degrees.items():
            print(f"{d},{c}")
    else:
        print(f"min_socle_degree: {result.minimum}")
        print("socle_degrees: " + ", ".join(f"{d}^{c}" for d, c in result.degrees.items()))
    return EXIT_OK


def cmd_parallel(calc: Calculator, config: RunConfig) -> int:
    report = calc.parallel(config)
    if config.output_format == "json":
        print(json.dumps(report.to_dict(), ensure_ascii=False, indent=2))
    elif config.output_format == "csv":
        print(report.to_frame().to_csv(index=False, lineterminator="\n"), end="")
    else:
        print("G:")
        print(report.base.pretty())
        print(f"G^α, α={list(report.alpha)}:")
        print(report.parallel.pretty())
        print("   i    j  base  par  dimostrato  congettura  debole")
        for row in report.rows:
            print(f"{row['i']:>4} {row['j']:>4} {row['base']:>5} {row['parallel']:>4} "
                  f"{str(row['proven']):>11} {str(row['conjectured']):>11} {str(row['weak']):>7}")
        print(f"limite dimostrato: {'vale' if report.proven_holds else 'VIOLATO'}")
        print(f"congettura (fattore ∏α): {'vale' if report.conjectured_holds else 'non vale'} (solo riportata)")
    if config.check_bound and not report.proven_holds:
        return EXIT_FAILED
    return EXIT_OK


COMMANDS = {
    "gens": cmd_gens,
    "betti": cmd_betti,
    "split": cmd_split,
    "socle": cmd_socle,
    "parallel": cmd_parallel,
}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK

    calc = Calculator()
    if args.command == "profiles":
        print("Profili disponibili:")
        for name in calc.limits_factory.list_profiles():
            print(f"  - {name}: {calc.limits_factory.get(name).description}")
        return EXIT_OK

    logger = ComputationLogger(run_id=args.command) if args.log else None
    calc.logger = logger
    code = EXIT_OK
    try:
        config = _config(args)
        if args.verbose:
            print(f"▶ {args.command} (profilo {config.profile})", file=sys.stderr)
        code = COMMANDS[args.command](calc, config)
    except CapExceededError as exc:
        print(f"errore: {exc}", file=sys.stderr)
        code = EXIT_CAP
    except (ProjectiveDimensionError, FieldDiscrepancyError) as exc:
        print(f"errore: {exc}", file=sys.stderr)
        code = EXIT_FAILED
    except ValueError as exc:
        print(f"errore: {exc}", file=sys.stderr)
        code = EXIT_USAGE
    finally:
        if logger is not None:
            with open(args.log, "w", encoding="utf-8") as f:
                json.dump(logger.get_summary(), f, indent=2, ensure_ascii=False)
            if args.verbose:
                print(f"✅ Log salvato in: {args.log}", file=sys.stderr)
    if args.verbose:
        print(f"codice di uscita: {code}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
