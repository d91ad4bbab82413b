"""
Module with the stream commands behind the command-line interface.

Each `cmd_*` function reads from and writes to already opened text streams,
so that they can be used from the command line (see `__main__.py`), from
other programs, and from tests. Input is processed line by line; except for
`cmd_stats`, which keeps the set of distinct words, memory use does not
depend on the size of the input.
"""

# Import Python standard libraries
from typing import Iterable, List, Optional, TextIO
import json
import logging

# Import local modules
from .common import NotNormalized
from .corpus import (
    BenchReport,
    CorpusStats,
    bench_table,
    benchmark,
    corpus_stats,
    possible_roots,
    roots_table,
    stats_table,
)
from .noise import AttackConfig, attack_word, recovery_report, word_rng
from .normalizer import WHITESPACE, NormalizerOptions, normalize_text, normalize_word
from .parser import parse_word
from .script_spec import CodepointClass, ScriptSpec


def cmd_normalize(
    spec: ScriptSpec,
    instream: Iterable[str],
    outstream: TextIO,
    options: Optional[NormalizerOptions] = None,
    report_stream: Optional[TextIO] = None,
) -> int:
    """
    Normalizes every word of the input, preserving its whitespace.

    When a report stream is given, one JSON record is written to it for
    every changed word, with the fields `line`, `word`, `normalized`, and
    `fixes` (a list of `fix`, `position`, `removed`, `inserted` records).

    :return: The exit status.
    """

    for lineno, line in enumerate(instream, start=1):
        changes: List = []
        outstream.write(normalize_text(spec, line, options, changes))
        if report_stream is None:
            continue
        for word, normalized, report in changes:
            record = {
                "line": lineno,
                "word": word,
                "normalized": normalized,
                "fixes": report.to_records(),
            }
            report_stream.write(json.dumps(record, ensure_ascii=False) + "\n")

    return 0


def cmd_parse(
    spec: ScriptSpec,
    instream: Iterable[str],
    outstream: TextIO,
    errstream: TextIO,
    components: bool = False,
    auto_normalize: bool = False,
    options: Optional[NormalizerOptions] = None,
) -> int:
    """
    Writes the graphemes of every word of the input, one word per line.

    Each line holds the word and its graphemes separated by `|`; with
    `components`, three more columns list the roots, the vowel diacritics,
    and the consonant diacritics of the graphemes, also separated by `|`.
    Words that are not normalized are reported on the error stream.

    :return: The exit status, 1 if any word could not be parsed.
    """

    failures = 0
    for lineno, line in enumerate(instream, start=1):
        for word in line.split():
            if auto_normalize:
                word, _ = normalize_word(spec, word, options)
                if not word:
                    logging.warning("Line %i: word normalized to nothing, skipped.", lineno)
                    continue
            try:
                result = parse_word(spec, word)
            except NotNormalized as exc:
                failures += 1
                errstream.write(f"line {lineno}: {word}: {exc}\n")
                continue

            fields = [word, "|".join(result.texts)]
            if components:
                fields.append("|".join(grapheme.root for grapheme in result.graphemes))
                fields.append(
                    "|".join(grapheme.vowel_diacritic or "" for grapheme in result.graphemes)
                )
                fields.append(
                    "|".join(grapheme.consonant_diacritics for grapheme in result.graphemes)
                )
            outstream.write("\t".join(fields) + "\n")

    if failures:
        errstream.write(f"{failures} word(s) could not be parsed.\n")
        return 1

    return 0


def cmd_stats(
    spec: ScriptSpec,
    instream: Iterable[str],
    outstream: TextIO,
    options: Optional[NormalizerOptions] = None,
    fmt: str = "table",
    progress: bool = False,
) -> CorpusStats:
    """
    Writes the normalization statistics of the input, as a table or as a
    JSON record.
    """

    stats = corpus_stats(spec, instream, options, progress=progress)
    if fmt == "json":
        outstream.write(json.dumps(stats.to_record(), ensure_ascii=False) + "\n")
    else:
        outstream.write(stats_table([stats]) + "\n")

    return stats


def cmd_attack(
    spec: ScriptSpec,
    instream: Iterable[str],
    outstream: TextIO,
    cfg: AttackConfig,
    recovery_stream: Optional[TextIO] = None,
    options: Optional[NormalizerOptions] = None,
) -> int:
    """
    Injects errors into every word of the input, preserving its whitespace.

    Words are numbered across the whole input, and each word is attacked
    with a generator seeded from the attack seed and its number. With a
    recovery stream, the recovery report of the run is written to it.

    :return: The exit status.
    """

    index = 0
    words = [] if recovery_stream is not None else None
    for line in instream:
        tokens = WHITESPACE.split(line)
        for idx in range(0, len(tokens), 2):
            if not tokens[idx]:
                continue
            if words is not None:
                words.append(tokens[idx])
            tokens[idx] = attack_word(spec, tokens[idx], cfg, rng=word_rng(cfg.seed, index))
            index += 1
        outstream.write("".join(tokens))

    if recovery_stream is not None:
        report = recovery_report(spec, words, cfg, options)
        recovery_stream.write(report.table() + "\n")

    return 0


def cmd_bench(
    spec: ScriptSpec,
    n: int,
    outstream: TextIO,
    mode: str = "parse",
    seed: int = 0,
    options: Optional[NormalizerOptions] = None,
) -> BenchReport:
    """
    Times the parser or the normalizer over `n` synthetic words and writes
    the report.
    """

    report = benchmark(spec, n, mode, seed, options)
    outstream.write(bench_table(report) + "\n")

    return report


def cmd_roots(
    outstream: TextIO,
    spec: Optional[ScriptSpec] = None,
    n_c: Optional[int] = None,
) -> int:
    """
    Writes the number of possible grapheme roots, for a given consonant
    count or, by default, for the consonants of a script.

    :return: The number of possible roots.
    """

    if n_c is None:
        if spec is None:
            raise ValueError("Either a script or a consonant count is needed.")
        n_c = len(spec.members(CodepointClass.CONSONANT))
    roots = possible_roots(n_c)

    label = spec.script_code if spec is not None else "-"
    outstream.write(roots_table([[label, n_c, roots]]) + "\n")

    return roots
