"""
Module with corpus-level tools: normalization statistics, throughput
benchmarks, synthetic corpora, and the count of possible grapheme roots.

The statistics follow the layout of the word-level corpus summary
(total unique words, words affected by the normalizer, and their
percentage), with an additional histogram of the applied fixes.
"""

# Import Python standard libraries
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence
import logging
import time

# Import 3rd-party libraries
import numpy as np
import tabulate
import tqdm

# Import local modules
from .common import DomainError
from .noise import word_rng
from .normalizer import NormalizerOptions, normalize_word
from .parser import parse_word
from .script_spec import CodepointClass, ScriptSpec

# Lengths used for the scaling profile of the parser
SCALING_LENGTHS = (10, 100, 1000, 10000)

# Probabilities used when building synthetic graphemes
P_VOWEL_ROOT = 0.15
P_CONJUNCT_ROOT = 0.2
P_VOWEL_DIACRITIC = 0.5
P_CONSONANT_DIACRITIC = 0.15


@dataclass
class CorpusStats:
    """
    Normalization statistics of a corpus.

    :param script: The script code.
    :param total_unique_words: The number of distinct whitespace-separated
        words.
    :param affected_words: The number of distinct words changed by the
        normalizer.
    :param affected_percent: The percentage of affected words, rounded to
        two decimal places.
    :param fix_histogram: For each fix kind label, the number of distinct
        words whose report includes it.
    """

    script: str
    total_unique_words: int
    affected_words: int
    affected_percent: float
    fix_histogram: Dict[str, int] = field(default_factory=dict)

    def to_record(self) -> Dict:
        return {
            "script": self.script,
            "total_unique_words": self.total_unique_words,
            "affected_words": self.affected_words,
            "affected_percent": self.affected_percent,
            "fix_histogram": dict(sorted(self.fix_histogram.items())),
        }


@dataclass
class BenchReport:
    """
    Throughput of a single-threaded run over a synthetic corpus.
    """

    mode: str
    words_processed: int
    wall_time: float
    words_per_second: float


@dataclass
class ScalingProfile:
    """
    Parse time per word at several word lengths, compared with a
    proportional fit.

    :param lengths: The mean word length at each point.
    :param seconds: The parse time per word at each point.
    :param slope: The slope of the proportional fit (seconds per codepoint),
        the median of the per-codepoint times.
    :param ratios: For each point, the measured time over the fitted time.
    """

    lengths: List[float]
    seconds: List[float]
    slope: float
    ratios: List[float]

    def is_linear(self, tolerance: float = 2.0) -> bool:
        return all(1.0 / tolerance <= ratio <= tolerance for ratio in self.ratios)


def corpus_stats(
    spec: ScriptSpec,
    lines: Iterable[str],
    options: Optional[NormalizerOptions] = None,
    progress: bool = False,
) -> CorpusStats:
    """
    Computes the normalization statistics of a corpus.

    Lines are split on whitespace, the distinct words are normalized, and
    the words that change are counted.

    Example
    ********

    .. code-block:: python

        >>> bn = abugida.script_spec.load_bundled_spec("bn")
        >>> abugida.corpus.corpus_stats(bn, ["কলম আমার্ দুই"]).affected_percent
        33.33

    :param spec: The script specification.
    :param lines: An iterable of text lines, such as an open file.
    :param options: The normalizer options.
    :param progress: Whether to show a progress bar on stderr (default:
        False).
    :return: The statistics.
    """

    words = set()
    for line in lines:
        words.update(line.split())

    affected = 0
    histogram: Counter = Counter()
    for word in tqdm.tqdm(sorted(words), disable=not progress, unit="word"):
        normalized, report = normalize_word(spec, word, options)
        if normalized != word:
            affected += 1
        for kind in report.kinds():
            histogram[kind.value] += 1

    total = len(words)
    percent = round(100.0 * affected / total, 2) if total else 0.0
    logging.debug("%i of %i unique words affected.", affected, total)

    return CorpusStats(spec.script_code, total, affected, percent, dict(histogram))


def stats_table(stats: Sequence[CorpusStats], tablefmt: str = "github") -> str:
    """
    Returns a table with one row of statistics per corpus.
    """

    rows = [
        [entry.script, entry.total_unique_words, entry.affected_words, f"{entry.affected_percent:.2f}"]
        for entry in stats
    ]

    return tabulate.tabulate(
        rows,
        headers=["Script", "Total unique words", "Affected words", "Affected (%)"],
        tablefmt=tablefmt,
        disable_numparse=True,
    )


class _GraphemeSource:
    """
    Draws random graphemes that follow the grapheme grammar.
    """

    def __init__(self, spec: ScriptSpec, rng: np.random.Generator):
        self.spec = spec
        self.rng = rng
        # Letters the normalizer would replace are left out
        self.consonants = [
            char for char in spec.members(CodepointClass.CONSONANT) if char not in spec.assamese_map
        ]
        self.vowels = spec.members(CodepointClass.VOWEL)
        self.vowel_diacritics = spec.members(CodepointClass.VOWEL_DIACRITIC)
        self.consonant_diacritics = spec.members(CodepointClass.CONSONANT_DIACRITIC)
        self.conjuncts = sorted(spec.conjunct_whitelist)

    def _pick(self, seq):
        return seq[int(self.rng.integers(len(seq)))]

    def grapheme(self) -> str:
        rng = self.rng
        connector = self.spec.connector

        if self.vowels and rng.random() < P_VOWEL_ROOT:
            text = self._pick(self.vowels)
        else:
            if rng.random() < P_CONJUNCT_ROOT:
                if self.conjuncts:
                    letters = self._pick(self.conjuncts)
                else:
                    letters = self._pick(self.consonants) + self._pick(self.consonants)
                text = connector.join(letters)
            else:
                text = self._pick(self.consonants)
            if self.vowel_diacritics and rng.random() < P_VOWEL_DIACRITIC:
                text += self._pick(self.vowel_diacritics)

        if self.consonant_diacritics and rng.random() < P_CONSONANT_DIACRITIC:
            text += self._pick(self.consonant_diacritics)

        return text

    def word(self, min_length: int = 1, max_graphemes: int = 4) -> str:
        graphemes = int(self.rng.integers(1, max_graphemes + 1))
        parts = [self.grapheme() for _ in range(graphemes)]
        length = sum(len(part) for part in parts)
        while length < min_length:
            parts.append(self.grapheme())
            length += len(parts[-1])
        return "".join(parts)


def synthetic_words(
    spec: ScriptSpec,
    n: int,
    seed: int = 0,
    min_length: int = 1,
    max_graphemes: int = 4,
) -> List[str]:
    """
    Returns normalized words built from random graphemes.

    Words are built by concatenating graphemes drawn from the grapheme
    grammar of the script, and then normalized once. Words that normalize
    to fewer than `min_length` codepoints are extended with more graphemes.

    :param spec: The script specification.
    :param n: The number of words.
    :param seed: The seed of the generator (default: 0).
    :param min_length: The minimum length of a word in codepoints, after
        normalization (default: 1).
    :param max_graphemes: The maximum number of graphemes drawn at first
        (default: 4).
    :return: A list of `n` normalized words.
    """

    source = _GraphemeSource(spec, word_rng(seed))
    words = []
    while len(words) < n:
        word, _ = normalize_word(spec, source.word(min_length, max_graphemes))
        while len(word) < min_length:
            word, _ = normalize_word(spec, word + source.word(min_length - len(word), 1))
        if word:
            words.append(word)

    return words


def benchmark(
    spec: ScriptSpec,
    n: int,
    mode: str = "parse",
    seed: int = 0,
    options: Optional[NormalizerOptions] = None,
) -> BenchReport:
    """
    Times the parser or the normalizer over a synthetic corpus.

    Only the selected operation is timed, not the generation of the corpus.

    :param spec: The script specification.
    :param n: The number of words, at least one.
    :param mode: Either `"parse"` or `"normalize"` (default: `"parse"`).
    :param seed: The seed of the synthetic corpus (default: 0).
    :param options: The normalizer options, for the normalize mode.
    :return: The benchmark report.
    """

    if n < 1:
        raise ValueError("The benchmark needs at least one word.")
    if mode not in ("parse", "normalize"):
        raise ValueError(f"Unknown benchmark mode `{mode}`.")

    words = synthetic_words(spec, n, seed)

    start = time.perf_counter()
    if mode == "parse":
        for word in words:
            parse_word(spec, word)
    else:
        for word in words:
            normalize_word(spec, word, options)
    # Guard against clocks with a coarse resolution
    wall_time = max(time.perf_counter() - start, 1e-9)

    return BenchReport(mode, len(words), wall_time, len(words) / wall_time)


def bench_table(report: BenchReport, tablefmt: str = "github") -> str:
    return tabulate.tabulate(
        [[report.mode, report.words_processed, report.wall_time, report.words_per_second]],
        headers=["Mode", "Words", "Wall time (s)", "Words/s"],
        tablefmt=tablefmt,
        floatfmt=".3f",
    )


def parse_scaling(
    spec: ScriptSpec,
    lengths: Sequence[int] = SCALING_LENGTHS,
    seed: int = 0,
    budget: int = 20000,
    repeats: int = 3,
) -> ScalingProfile:
    """
    Measures how the parse time grows with the word length.

    For each length, words of at least that many codepoints are parsed, with
    the number of words chosen so that every point handles about `budget`
    codepoints; the best of `repeats` runs is kept. The times per word are
    compared with a proportional fit, whose slope is the median of the times
    per codepoint.

    :param spec: The script specification.
    :param lengths: The word lengths to measure.
    :param seed: The seed of the synthetic words (default: 0).
    :param budget: The number of codepoints parsed at each point (default:
        20000).
    :param repeats: The number of timed runs per point (default: 3).
    :return: The scaling profile.
    """

    mean_lengths = []
    seconds = []
    for idx, length in enumerate(lengths):
        count = max(1, budget // length)
        words = synthetic_words(spec, count, seed=seed + idx, min_length=length, max_graphemes=1)
        best = float("inf")
        for _ in range(repeats):
            start = time.perf_counter()
            for word in words:
                parse_word(spec, word)
            best = min(best, time.perf_counter() - start)
        mean_lengths.append(sum(len(word) for word in words) / count)
        seconds.append(max(best, 1e-9) / count)

    per_codepoint = np.array(seconds) / np.array(mean_lengths)
    slope = float(np.median(per_codepoint))

    return ScalingProfile(mean_lengths, seconds, slope, list(per_codepoint / slope))


def possible_roots(n_c: int) -> int:
    """
    Returns the number of possible grapheme roots for a script with `n_c`
    consonants.

    The count is `((n_c - 3)^3 + (n_c - 3)^2 + (n_c - 3)) + 3`. For Bangla, a
    total of 3,883,894 roots has been reported; that figure does not follow
    from the formula for any consonant count and is not reproduced here.

    :param n_c: The number of consonants, at least three.
    :return: The number of possible roots.
    """

    if isinstance(n_c, bool) or not isinstance(n_c, int):
        raise DomainError(f"The consonant count must be an integer, got {n_c!r}.")
    if n_c < 3:
        raise DomainError(f"The consonant count must be at least 3, got {n_c}.")

    k = n_c - 3
    return k**3 + k**2 + k + 3


def roots_table(rows: Sequence[Sequence], tablefmt: str = "github") -> str:
    return tabulate.tabulate(rows, headers=["Script", "Consonants", "Possible roots"], tablefmt=tablefmt)
