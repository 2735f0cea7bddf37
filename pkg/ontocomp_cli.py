"""
Command-line interface for ontocomp.

Subcommands: validate, ebms, diff, import-check, export and reify. Results go
to stdout; diagnostics and status lines go to stderr. Exit codes are a stable
contract (see ExitCode).
"""

import argparse
import sys
from dataclasses import replace
from enum import IntEnum
from pathlib import Path
from typing import List, Optional

from dotenv import load_dotenv
from pydantic import TypeAdapter

from bridge import ReificationError, Side, reify_general_axiom
from config import OntoCompConfig
from engines.impact import import_impact
from engines.meaning import MeaningEngine
from engines.tableau import ReasonerBudgetExceeded
from engines.versioning import diff_collections, diff_components
from language import ConceptSyntaxError, ParseDiagnostic, Severity, parse_axiom, parse_collection, serialize_statement
from models.reports import DiffReport, EbmsOutput, ImpactVerdict
from models.statements import Collection, sorted_statements
from models.terms import Oid
from utils.console import status
from utils.export import export_json, export_owl_functional
from utils.rendering import render_diff, render_ebms, render_impact, render_theory

load_dotenv(override=True)


class ExitCode(IntEnum):
    OK = 0
    INPUT_ERROR = 1
    INCOHERENT = 2
    IO_ERROR = 3
    MEANING_CHANGED = 4


IMPACT_EXIT_CODES = {
    ImpactVerdict.NO_CHANGE: ExitCode.OK,
    ImpactVerdict.EXTENDED: ExitCode.OK,
    ImpactVerdict.MEANING_ALTERED: ExitCode.MEANING_CHANGED,
    ImpactVerdict.INCOHERENCE_INTRODUCED: ExitCode.INCOHERENT,
}


class _ArgumentParser(argparse.ArgumentParser):
    """Usage errors exit with INPUT_ERROR; exit code 2 is reserved for incoherence."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(int(ExitCode.INPUT_ERROR), f"{self.prog}: error: {message}\n")


class InputFailure(Exception):
    """Aborts a command with a message and an exit code."""

    def __init__(self, message: str, code: ExitCode = ExitCode.INPUT_ERROR):
        super().__init__(message)
        self.code = code


def _emit(lines) -> None:
    for line in lines:
        print(line)


def _error(message: str) -> None:
    print(f"❌ {message}", file=sys.stderr)


def read_collection(path: str, config: OntoCompConfig) -> tuple[Collection, List[ParseDiagnostic]]:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        raise InputFailure(f"Cannot read {path}: {e}", ExitCode.IO_ERROR) from e
    status(f"📄 Loading {path}", config)
    return parse_collection(text, strict=config.strict_profile)


def load_clean(path: str, config: OntoCompConfig) -> Collection:
    """Load a collection that must parse without errors; diagnostics go to stderr."""
    collection, diagnostics = read_collection(path, config)
    errors = [d for d in diagnostics if d.is_error]
    for diagnostic in errors:
        print(diagnostic.render(path), file=sys.stderr)
    if errors:
        raise InputFailure(f"{path} has {len(errors)} parse errors")
    return collection


def parse_oid(text: str) -> Oid:
    try:
        return Oid.parse(text)
    except ValueError as e:
        raise InputFailure(str(e)) from e


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

def cmd_validate(args, config: OntoCompConfig) -> ExitCode:
    collection, diagnostics = read_collection(args.file, config)
    primitives = collection.list_primitives()
    if primitives:
        diagnostics.append(ParseDiagnostic(
            0, 0, Severity.INFO, "Primitive references: " + ", ".join(str(o) for o in primitives), "primitives"
        ))
    _emit(d.render(args.file) for d in diagnostics)
    if any(d.is_error for d in diagnostics):
        return ExitCode.INPUT_ERROR

    if args.coherence:
        engine = MeaningEngine(config)
        incoherent = [oid for oid in collection.oids() if not engine.is_coherent(collection, oid)]
        _emit(
            ParseDiagnostic(0, 0, Severity.ERROR, f"{oid} is unsatisfiable under its analytic theory",
                            "incoherent").render(args.file)
            for oid in incoherent
        )
        if incoherent:
            return ExitCode.INCOHERENT
    return ExitCode.OK


def cmd_ebms(args, config: OntoCompConfig) -> ExitCode:
    collection = load_clean(args.file, config)
    if args.all:
        oids = collection.oids()
    elif args.oid:
        oid = parse_oid(args.oid)
        if not collection.knows(oid):
            raise InputFailure(f"Unknown OID {oid} in {args.file}")
        oids = [oid]
    else:
        raise InputFailure("ebms requires --oid OID or --all")

    engine = MeaningEngine(config)
    results = engine.compute_all(collection, oids, report=args.report or None)
    theories = {oid: engine.analytic_theory(collection, oid) for oid in oids} if args.show_theory else {}

    if args.json:
        outputs = []
        for oid, e in results.items():
            output = EbmsOutput.from_ebms(e, theories.get(oid))
            if args.asserted_only:
                output = output.model_copy(update={"inferred": [], "non_reverse_translatable": []})
            outputs.append(output)
        if args.all:
            print(TypeAdapter(List[EbmsOutput]).dump_json(outputs, indent=2).decode())
        else:
            print(outputs[0].model_dump_json(indent=2))
    else:
        for i, (oid, e) in enumerate(results.items()):
            if args.all:
                if i:
                    print()
                print(f"# {oid}")
            if oid in theories:
                _emit(render_theory(theories[oid], args.unicode))
            _emit(render_ebms(e, args.asserted_only, args.unicode))

    if not all(e.coherent for e in results.values()):
        return ExitCode.INCOHERENT
    return ExitCode.OK


def cmd_diff(args, config: OntoCompConfig) -> ExitCode:
    old = load_clean(args.old, config)
    new = load_clean(args.new, config)
    engine = MeaningEngine(config)
    if args.oid:
        oid = parse_oid(args.oid)
        reports = [diff_components((old, oid), (new, oid), engine)]
    else:
        reports = diff_collections(old, new, engine)

    if args.json:
        print(TypeAdapter(List[DiffReport]).dump_json(reports, indent=2).decode())
    else:
        _emit(render_diff(reports))
    if any(report.kind.changes_meaning for report in reports):
        return ExitCode.MEANING_CHANGED
    return ExitCode.OK


def cmd_import_check(args, config: OntoCompConfig) -> ExitCode:
    base = load_clean(args.base, config)
    incoming = load_clean(args.incoming, config)
    report = import_impact(base, incoming.components.values(), MeaningEngine(config))
    if args.json:
        print(report.model_dump_json(indent=2))
    else:
        _emit(render_impact(report))
    return IMPACT_EXIT_CODES[report.verdict]


def cmd_export(args, config: OntoCompConfig) -> ExitCode:
    collection = load_clean(args.file, config)
    if args.format == "json":
        print(export_json(collection, config.iri_base))
    else:
        sys.stdout.write(export_owl_functional(collection, config.iri_base))
    return ExitCode.OK


def cmd_reify(args, config: OntoCompConfig) -> ExitCode:
    collection = load_clean(args.file, config) if args.file else None
    try:
        axiom = parse_axiom(args.axiom)
    except ConceptSyntaxError as e:
        raise InputFailure(f"Bad axiom at column {e.column}: {e}") from e
    fresh = parse_oid(args.fresh)
    try:
        _, statements = reify_general_axiom(axiom, fresh, Side(args.side), collection)
    except ReificationError as e:
        raise InputFailure(str(e)) from e
    _emit(serialize_statement(s) for s in sorted_statements(statements))
    return ExitCode.OK


# ---------------------------------------------------------------------------
# Argument parsing
# ---------------------------------------------------------------------------

def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--node-budget", type=int, default=argparse.SUPPRESS,
                        help="Tableau node limit per reasoning query")
    common.add_argument("--workers", type=int, default=argparse.SUPPRESS,
                        help="Concurrent per-OID computations")
    common.add_argument("--strict", action="store_true", default=argparse.SUPPRESS,
                        help="Reject bottom/only in characterizations")
    common.add_argument("--verbose", action="store_true", default=argparse.SUPPRESS,
                        help="Print status lines on stderr")
    common.add_argument("--iri-base", default=argparse.SUPPRESS,
                        help="IRI prefix for export when the file has no @base")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = _ArgumentParser(prog="ontocomp", parents=[common],
                                     description="Ontological components and their meaning specifications")
    sub = parser.add_subparsers(dest="command", required=True)

    validate = sub.add_parser("validate", parents=[common], help="Parse a collection and report diagnostics")
    validate.add_argument("file")
    validate.add_argument("--coherence", action="store_true", help="Check every component for satisfiability")
    validate.set_defaults(handler=cmd_validate)

    ebms = sub.add_parser("ebms", parents=[common], help="Compute entailment-based meaning specifications")
    ebms.add_argument("file")
    target = ebms.add_mutually_exclusive_group()
    target.add_argument("--oid")
    target.add_argument("--all", action="store_true", help="Every component, in canonical OID order")
    ebms.add_argument("--asserted-only", action="store_true")
    ebms.add_argument("--show-theory", action="store_true")
    ebms.add_argument("--json", action="store_true")
    ebms.add_argument("--report", action="store_true", help="List non-reverse-translatable entailments")
    ebms.add_argument("--unicode", action="store_true", help="Render expressions in DL notation")
    ebms.set_defaults(handler=cmd_ebms)

    diff = sub.add_parser("diff", parents=[common], help="Classify component changes between two versions")
    diff.add_argument("old")
    diff.add_argument("new")
    diff.add_argument("--oid")
    diff.add_argument("--json", action="store_true")
    diff.set_defaults(handler=cmd_diff)

    check = sub.add_parser("import-check", parents=[common], help="Check the meaning impact of an import")
    check.add_argument("base")
    check.add_argument("incoming", metavar="import")
    check.add_argument("--json", action="store_true")
    check.set_defaults(handler=cmd_import_check)

    export = sub.add_parser("export", parents=[common], help="Export a collection")
    export.add_argument("file")
    export.add_argument("--format", choices=["owl-functional", "json"], default="owl-functional")
    export.set_defaults(handler=cmd_export)

    reify = sub.add_parser("reify", parents=[common], help="Reify a general class axiom into a component")
    reify.add_argument("file", nargs="?")
    reify.add_argument("--axiom", required=True)
    reify.add_argument("--fresh", required=True)
    reify.add_argument("--side", choices=[side.value for side in Side], default=Side.LHS.value)
    reify.set_defaults(handler=cmd_reify)
    return parser


def resolve_config(args) -> OntoCompConfig:
    overrides = {}
    for option, field_name in (("node_budget", "node_budget"), ("workers", "workers"),
                               ("strict", "strict_profile"), ("verbose", "verbose"),
                               ("iri_base", "iri_base")):
        if hasattr(args, option):
            overrides[field_name] = getattr(args, option)
    return replace(OntoCompConfig.from_env(), **overrides)


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = resolve_config(args)
        return int(args.handler(args, config))
    except InputFailure as e:
        _error(str(e))
        return int(e.code)
    except ReasonerBudgetExceeded as e:
        _error(f"{e}; raise --node-budget to retry")
        return int(ExitCode.INPUT_ERROR)
    except ValueError as e:
        _error(str(e))
        return int(ExitCode.INPUT_ERROR)


if __name__ == "__main__":
    sys.exit(main())
