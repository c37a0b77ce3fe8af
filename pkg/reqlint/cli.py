"""
Command-Line Interface

    reqlint check    FILE   consistency plus connectivity warnings
    reqlint explain  FILE   consistency plus a minimal inconsistent subset
    reqlint vacuity  FILE   consistency plus trigger vacuity
    reqlint graph    FILE   connected components only
    reqlint emit     FILE --format smv|ltl

Exit codes: 0 consistent (or graph/emit done), 1 inconsistent, 2 parse error
or usage, 3 indeterminate (resource cap).
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from reqlint import __version__
from reqlint.analyzer import RequirementAnalyzer
from reqlint.config import DEFAULT_CONFIG_FILE, Config
from reqlint.emitters import EmitTarget
from reqlint.report import ReportWriter

logger = logging.getLogger("reqlint.cli")

EXIT_USAGE = 2


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("file", help="Requirements file (.req)")
    common.add_argument("--json", metavar="PATH", default=None,
                        help="Also write the JSON report to PATH")
    common.add_argument("--max-states", type=int, default=None,
                        help="Tableau state cap per check (default: 1000000)")
    common.add_argument("--timeout", type=float, default=None,
                        help="Time cap per check in seconds (default: 60)")
    common.add_argument("--no-connectivity", action="store_true",
                        help="Skip the connected-requirements check")
    common.add_argument("--config", metavar="PATH", default=None,
                        help=f"Configuration file (default: ./{DEFAULT_CONFIG_FILE} if present)")
    common.add_argument("-v", "--verbose", action="count", default=0,
                        help="More logging (-v info, -vv debug)")

    parser = argparse.ArgumentParser(
        prog="reqlint",
        description="Consistency, vacuity and connectivity analysis of pattern-based requirements",
    )
    parser.add_argument("--version", action="version", version=f"reqlint {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True)

    subparsers.add_parser("check", parents=[common], help="Check that the requirements are consistent")
    subparsers.add_parser("explain", parents=[common], help="Explain an inconsistency with a minimal subset")
    subparsers.add_parser("vacuity", parents=[common], help="Find requirements satisfied vacuously")
    subparsers.add_parser("graph", parents=[common], help="Show requirements sharing no variables")
    emit = subparsers.add_parser("emit", parents=[common], help="Write the problem for a model checker")
    emit.add_argument("--format", choices=[t.value for t in EmitTarget], default=EmitTarget.SMV.value,
                      help="Output format (default: smv)")
    emit.add_argument("-o", "--output", metavar="PATH", default=None,
                      help="Write the emitted model to PATH instead of standard output")
    return parser


def load_config(path: Optional[str]) -> Config:
    """Explicit config file, else ./reqlint.yaml if it exists, else defaults"""
    if path is not None:
        return Config(path)
    default = Path(DEFAULT_CONFIG_FILE)
    return Config(str(default) if default.exists() else None)


def configure_logging(config: Config, verbose: int):
    if verbose >= 2:
        level = logging.DEBUG
    elif verbose == 1:
        level = logging.INFO
    else:
        level = getattr(logging, str(config.get("logging.level", "WARNING")).upper(), logging.WARNING)
    logging.basicConfig(
        level=level,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    )
    logging.getLogger("reqlint").setLevel(level)


def read_input(path: str) -> Optional[str]:
    """
    Read a requirements file

    Returns:
        str: File contents or None if it cannot be read
    """
    try:
        with open(path, "r", encoding="utf-8") as f:
            return f.read()
    except Exception as e:
        logger.error(f"Failed to read {path}: {e}")
        return None


def run(argv: Optional[List[str]] = None) -> int:
    """
    Run one reqlint command

    Args:
        argv: Command-line arguments without the program name

    Returns:
        int: Process exit code
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    config = load_config(args.config)
    if args.max_states is not None:
        config.set("engine.max_states", args.max_states)
    if args.timeout is not None:
        config.set("engine.timeout", args.timeout)
    if args.no_connectivity:
        config.set("analyses.connectivity", False)
    configure_logging(config, args.verbose)
    if config.validate():
        return EXIT_USAGE

    text = read_input(args.file)
    if text is None:
        print(f"reqlint: cannot read {args.file}", file=sys.stderr)
        return EXIT_USAGE

    analyzer = RequirementAnalyzer.from_config(config)
    writer = ReportWriter(indent=config.get("report.json_indent", 2), color=config.get("report.color"))

    if args.command == "emit":
        output, report = analyzer.emit(text, EmitTarget(args.format), input_path=args.file)
        if output is None:
            sys.stderr.write(writer.render_text(report))
        elif args.output:
            try:
                Path(args.output).write_text(output, encoding="utf-8")
            except Exception as e:
                logger.error(f"Failed to write {args.output}: {e}")
                return EXIT_USAGE
        else:
            sys.stdout.write(output)
    else:
        report = analyzer.analyze(text, args.command, input_path=args.file)
        sys.stdout.write(writer.render_text(report))

    if args.json and not writer.save_json(args.json, report):
        return EXIT_USAGE
    return report.exit_code


def main():
    """Main entry point for the reqlint command"""
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
