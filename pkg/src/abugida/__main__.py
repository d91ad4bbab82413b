"""
Command-line interface of the `abugida` package.

Usage examples:

    abugida normalize --script bn --input corpus.txt --output clean.txt --report fixes.jsonl
    abugida parse --script bn --components --input clean.txt
    abugida stats --script deva --input corpus.txt --format json
    abugida attack --script bn --intensity 2 --seed 7 --strict --input clean.txt
    abugida bench --script bn --words 100000
    abugida roots --script bn

Exit status is 0 on success, 1 on data errors (invalid spec file, unreadable
input, words that cannot be parsed), and 2 on usage errors.
"""

# Import Python standard libraries
from typing import List, Optional
import argparse
import contextlib
import io
import logging
import sys

# Import local modules
from . import __version__
from .cli import cmd_attack, cmd_bench, cmd_normalize, cmd_parse, cmd_roots, cmd_stats
from .common import AbugidaError, OptionsError
from .noise import AttackConfig
from .normalizer import NormalizerOptions
from .script_spec import SCRIPTS, load_bundled_spec, load_script_spec


@contextlib.contextmanager
def _open_input(path: str):
    if path == "-":
        stream = io.TextIOWrapper(sys.stdin.buffer, encoding="utf-8", newline="")
        try:
            yield stream
        finally:
            stream.detach()
    else:
        with open(path, encoding="utf-8", newline="") as handler:
            yield handler


@contextlib.contextmanager
def _open_output(path: Optional[str], fallback=None):
    if path is None:
        yield fallback
    elif path == "-":
        stream = io.TextIOWrapper(sys.stdout.buffer, encoding="utf-8", newline="")
        try:
            yield stream
        finally:
            stream.flush()
            stream.detach()
    else:
        with open(path, "w", encoding="utf-8", newline="") as handler:
            yield handler


def _positive_int(value: str) -> int:
    number = int(value)
    if number < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return number


def build_parser() -> argparse.ArgumentParser:
    """
    Builds the argument parser with one subcommand per stream command.
    """

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--script", choices=SCRIPTS, default="bn", help="script of the input (default: bn)"
    )
    common.add_argument("--spec", help="path to a script spec file replacing the bundled one")
    common.add_argument("--input", default="-", help="input file, or - for stdin (default)")
    common.add_argument("--output", default="-", help="output file, or - for stdout (default)")
    verbosity = common.add_mutually_exclusive_group()
    verbosity.add_argument("-v", "--verbose", action="store_true", help="log debug messages")
    verbosity.add_argument("-q", "--quiet", action="store_true", help="only log errors")

    normalizer = argparse.ArgumentParser(add_help=False)
    normalizer.add_argument(
        "--map-legacy", action="store_true", help="replace legacy codepoints by their lookalikes"
    )
    normalizer.add_argument(
        "--no-bangla-extensions", action="store_true", help="skip the Bangla-specific rules"
    )

    parser = argparse.ArgumentParser(
        prog="abugida",
        description="Normalize and parse text in Indic Abugida scripts.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True)

    normalize = subparsers.add_parser(
        "normalize", parents=[common, normalizer], help="normalize words"
    )
    normalize.add_argument("--report", help="write one JSON record per changed word to this file")

    parse = subparsers.add_parser("parse", parents=[common, normalizer], help="segment words into graphemes")
    parse.add_argument(
        "--components", action="store_true", help="add root, vowel and consonant diacritic columns"
    )
    parse.add_argument(
        "--auto-normalize", action="store_true", help="normalize every word before parsing it"
    )

    stats = subparsers.add_parser(
        "stats", parents=[common, normalizer], help="corpus normalization statistics"
    )
    stats.add_argument("--format", choices=("table", "json"), default="table")
    stats.add_argument("--progress", action="store_true", help="show a progress bar")

    attack = subparsers.add_parser("attack", parents=[common, normalizer], help="inject errors into words")
    attack.add_argument("--p-connector", type=float, default=0.3, help="(default: 0.3)")
    attack.add_argument("--p-nukta", type=float, default=0.5, help="(default: 0.5)")
    attack.add_argument("--p-diacritic", type=float, default=0.5, help="(default: 0.5)")
    attack.add_argument("--p-vowel", type=float, default=0.5, help="(default: 0.5)")
    attack.add_argument("--intensity", type=int, default=1, help="protocol passes (default: 1)")
    attack.add_argument("--seed", type=int, default=0, help="(default: 0)")
    attack.add_argument(
        "--strict", action="store_true", help="only inject errors the normalizer repairs"
    )
    attack.add_argument(
        "--recovery", action="store_true", help="print the recovery report to stderr"
    )

    bench = subparsers.add_parser("bench", parents=[common, normalizer], help="time parser or normalizer")
    bench.add_argument("--words", type=_positive_int, default=10000, help="(default: 10000)")
    bench.add_argument("--mode", choices=("parse", "normalize"), default="parse")
    bench.add_argument("--seed", type=int, default=0, help="(default: 0)")

    roots = subparsers.add_parser("roots", parents=[common], help="count possible grapheme roots")
    roots.add_argument(
        "--consonants", type=int, help="consonant count (default: from the script spec)"
    )

    return parser


def _setup_logging(args):
    if args.verbose:
        level = logging.DEBUG
    elif args.quiet:
        level = logging.ERROR
    else:
        level = logging.WARNING
    logging.basicConfig(level=level, format="%(levelname)s: %(message)s", stream=sys.stderr)


def _run(args, parser) -> int:
    spec = load_script_spec(args.spec) if args.spec else load_bundled_spec(args.script)

    options = None
    if hasattr(args, "map_legacy"):
        options = NormalizerOptions(
            map_legacy=args.map_legacy,
            bangla_extensions=False if args.no_bangla_extensions else None,
        )

    if args.command == "roots":
        with _open_output(args.output) as outstream:
            cmd_roots(outstream, None if args.consonants is not None else spec, args.consonants)
        return 0

    if args.command == "bench":
        with _open_output(args.output) as outstream:
            cmd_bench(spec, args.words, outstream, args.mode, args.seed, options)
        return 0

    if args.command == "attack":
        try:
            cfg = AttackConfig(
                p_connector_nonglyph=args.p_connector,
                p_break_nukta=args.p_nukta,
                p_break_diacritic=args.p_diacritic,
                p_vowel_vd=args.p_vowel,
                intensity=args.intensity,
                seed=args.seed,
                strict=args.strict,
            )
        except OptionsError as exc:
            parser.error(str(exc))
        with _open_input(args.input) as instream, _open_output(args.output) as outstream:
            recovery = sys.stderr if args.recovery else None
            return cmd_attack(spec, instream, outstream, cfg, recovery, options)

    with _open_input(args.input) as instream, _open_output(args.output) as outstream:
        if args.command == "normalize":
            with _open_output(args.report) as report_stream:
                return cmd_normalize(spec, instream, outstream, options, report_stream)
        if args.command == "parse":
            return cmd_parse(
                spec,
                instream,
                outstream,
                sys.stderr,
                components=args.components,
                auto_normalize=args.auto_normalize,
                options=options,
            )
        if args.command == "stats":
            cmd_stats(spec, instream, outstream, options, args.format, args.progress)
            return 0

    parser.error(f"unknown command `{args.command}`")


def main(argv: Optional[List[str]] = None) -> int:
    """
    Runs the command-line interface and returns the exit status.
    """

    parser = build_parser()
    args = parser.parse_args(argv)
    _setup_logging(args)

    try:
        return _run(args, parser)
    except (AbugidaError, OSError, UnicodeDecodeError) as exc:
        logging.error("%s", exc)
        return 1


if __name__ == "__main__":
    sys.exit(main())
