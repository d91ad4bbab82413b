"""
Module implementing the error-injection ("attack") protocol.

Noisy variants of normalized words are produced by four operations, each
fired independently with its own probability in every pass of the protocol:

  1. inserting the script connector or a non-glyph codepoint at a random
     position;
  2. breaking a precomposed nukta letter into its base and nukta;
  3. breaking a composed vowel diacritic into a pair of diacritics;
  4. adding a random vowel diacritic after a random vowel.

Running the protocol `x` times over a word gives the "attack-x" variant of
that word. Random numbers come from a counter-based generator (Philox) seeded
per word from the attack seed and the word index, so that results do not
depend on the order or parallelism of the processing.

In strict mode, insertions are restricted to the positions where the
normalizer can always undo them; for instance, a connector is never placed
between two consonants, as the result would be a valid conjunct.
"""

# Import Python standard libraries
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional, Sequence
import logging

# Import 3rd-party libraries
import numpy as np
import tabulate
import textdistance

# Import local modules
from .common import OptionsError
from .normalizer import NormalizerOptions, normalize_word
from .script_spec import CodepointClass, ScriptSpec

# Non-glyph codepoints for insertion: zero width space, zero width
# non-joiner, and a Latin letter
NON_GLYPHS = ("\u200b", "\u200c", "x")

# Codepoints mixed into random words as foreign noise
FOREIGN_NOISE = ("A", "z", "\u200b", "\u200c", "\u200d", "\ufeff", "\u0416", "\u4e00")

_MAX_SEED = 2**64 - 1

_VOWEL = CodepointClass.VOWEL
_CONSONANT = CodepointClass.CONSONANT
_CONNECTOR = CodepointClass.CONNECTOR
_NUKTA = CodepointClass.NUKTA
_FOREIGN = CodepointClass.FOREIGN


class AttackKind(Enum):
    """
    The four injection operations.
    """

    CONNECTOR_NONGLYPH = "connector_nonglyph"
    BREAK_NUKTA = "break_nukta"
    BREAK_DIACRITIC = "break_diacritic"
    VOWEL_DIACRITIC = "vowel_diacritic"


@dataclass(frozen=True)
class AttackConfig:
    """
    Parameters of the attack protocol.

    :param p_connector_nonglyph: Probability of inserting a connector or a
        non-glyph codepoint (default: 0.3).
    :param p_break_nukta: Probability of breaking a nukta letter (default:
        0.5).
    :param p_break_diacritic: Probability of breaking a composed vowel
        diacritic (default: 0.5).
    :param p_vowel_vd: Probability of adding a vowel diacritic after a vowel
        (default: 0.5).
    :param intensity: Number of passes of the protocol (default: 1).
    :param seed: Seed of the random number generator, a 64-bit unsigned
        integer (default: 0).
    :param strict: Whether to restrict insertions to positions that the
        normalizer repairs (default: False).
    """

    p_connector_nonglyph: float = 0.3
    p_break_nukta: float = 0.5
    p_break_diacritic: float = 0.5
    p_vowel_vd: float = 0.5
    intensity: int = 1
    seed: int = 0
    strict: bool = False

    def __post_init__(self):
        for name in ("p_connector_nonglyph", "p_break_nukta", "p_break_diacritic", "p_vowel_vd"):
            value = getattr(self, name)
            if not 0.0 <= value <= 1.0:
                raise OptionsError(f"Probability `{name}` must be in [0, 1], got {value}.")
        if isinstance(self.intensity, bool) or not isinstance(self.intensity, int):
            raise OptionsError("The intensity must be an integer.")
        if self.intensity < 1:
            raise OptionsError(f"The intensity must be at least 1, got {self.intensity}.")
        if not 0 <= self.seed <= _MAX_SEED:
            raise OptionsError(f"The seed must be a 64-bit unsigned integer, got {self.seed}.")

    def probability(self, kind: AttackKind) -> float:
        return {
            AttackKind.CONNECTOR_NONGLYPH: self.p_connector_nonglyph,
            AttackKind.BREAK_NUKTA: self.p_break_nukta,
            AttackKind.BREAK_DIACRITIC: self.p_break_diacritic,
            AttackKind.VOWEL_DIACRITIC: self.p_vowel_vd,
        }[kind]


def word_rng(seed: int, index: int = 0) -> np.random.Generator:
    """
    Returns the generator for the word at a given corpus index.
    """

    return np.random.Generator(np.random.Philox(np.random.SeedSequence([seed, index])))


def _inverse(mapping: Dict[str, str]) -> Dict[str, str]:
    # The smallest decomposition wins when several compose to the same value
    inverse: Dict[str, str] = {}
    for key in sorted(mapping):
        inverse.setdefault(mapping[key], key)
    return inverse


def _neighbor(classes, chars: List[str], start: int, step: int, skip) -> Optional[str]:
    """
    Returns the first codepoint from `start` in direction `step` whose class
    is not in `skip`.
    """

    idx = start
    while 0 <= idx < len(chars):
        if classes.get(chars[idx], _FOREIGN) not in skip:
            return chars[idx]
        idx += step
    return None


def _allowed_positions(spec: ScriptSpec, chars: List[str], insert: str) -> List[int]:
    """
    Returns the insertion positions the normalizer is guaranteed to repair.
    """

    classes = spec.classes
    khanda_base = spec.khanda_ta.base if spec.khanda_ta else None
    positions = []
    for pos in range(len(chars) + 1):
        prev_char = chars[pos - 1] if pos > 0 else None
        next_char = chars[pos] if pos < len(chars) else None
        if next_char is not None and classes.get(next_char) is _NUKTA:
            continue
        if insert == spec.connector:
            left = _neighbor(classes, chars, pos - 1, -1, (_FOREIGN, _CONNECTOR, _NUKTA))
            right = _neighbor(classes, chars, pos, 1, (_FOREIGN, _CONNECTOR))
            if left is not None and left == khanda_base:
                continue
            if classes.get(left) is _CONSONANT and classes.get(right) is _CONSONANT:
                continue
        elif prev_char is not None and classes.get(prev_char) is _CONNECTOR:
            continue
        positions.append(pos)

    return positions


def _insert_connector_nonglyph(spec, chars, cfg, rng) -> bool:
    pool = (spec.connector,) + NON_GLYPHS
    insert = pool[int(rng.integers(len(pool)))]
    if cfg.strict:
        positions = _allowed_positions(spec, chars, insert)
        if not positions:
            return False
        pos = positions[int(rng.integers(len(positions)))]
    else:
        pos = int(rng.integers(len(chars) + 1))
    chars.insert(pos, insert)
    return True


def _break_composition(chars, inverse, rng) -> bool:
    sites = [idx for idx, char in enumerate(chars) if char in inverse]
    if not sites:
        return False
    idx = sites[int(rng.integers(len(sites)))]
    chars[idx : idx + 1] = list(inverse[chars[idx]])
    return True


def _add_vowel_diacritic(spec, chars, diacritics, rng) -> bool:
    classes = spec.classes
    sites = [idx for idx, char in enumerate(chars) if classes.get(char) is _VOWEL]
    if not sites or not diacritics:
        return False
    idx = sites[int(rng.integers(len(sites)))]
    chars.insert(idx + 1, diacritics[int(rng.integers(len(diacritics)))])
    return True


def attack_word(
    spec: ScriptSpec,
    word: str,
    cfg: Optional[AttackConfig] = None,
    rng: Optional[np.random.Generator] = None,
    trace: Optional[Counter] = None,
) -> str:
    """
    Injects errors into a normalized word.

    Each operation is fired with its probability once per pass; operations
    with no applicable site are skipped.

    Example
    ********

    .. code-block:: python

        >>> bn = abugida.script_spec.load_bundled_spec("bn")
        >>> cfg = abugida.noise.AttackConfig(0.0, 1.0, 0.0, 0.0)
        >>> abugida.noise.attack_word(bn, "\\u09df", cfg) == "\\u09af\\u09bc"
        True

    :param spec: The script specification.
    :param word: A normalized word.
    :param cfg: The attack configuration; defaults are used if not provided.
    :param rng: The random number generator; by default, one is seeded from
        `cfg.seed` (as for the first word of a corpus).
    :param trace: An optional counter incremented, for each kind, every time
        an operation is fired.
    :return: The noisy word.
    """

    if cfg is None:
        cfg = AttackConfig()
    if rng is None:
        rng = word_rng(cfg.seed)

    nukta_inverse = _inverse(spec.nukta_compositions)
    diacritic_inverse = _inverse(spec.diacritic_compositions)
    diacritics = spec.members(CodepointClass.VOWEL_DIACRITIC)

    chars = list(word)
    for _ in range(cfg.intensity):
        if rng.random() < cfg.p_connector_nonglyph:
            if trace is not None:
                trace[AttackKind.CONNECTOR_NONGLYPH] += 1
            _insert_connector_nonglyph(spec, chars, cfg, rng)
        if rng.random() < cfg.p_break_nukta:
            if trace is not None:
                trace[AttackKind.BREAK_NUKTA] += 1
            _break_composition(chars, nukta_inverse, rng)
        if rng.random() < cfg.p_break_diacritic:
            if trace is not None:
                trace[AttackKind.BREAK_DIACRITIC] += 1
            _break_composition(chars, diacritic_inverse, rng)
        if rng.random() < cfg.p_vowel_vd:
            if trace is not None:
                trace[AttackKind.VOWEL_DIACRITIC] += 1
            _add_vowel_diacritic(spec, chars, diacritics, rng)

    return "".join(chars)


def attack_corpus(
    spec: ScriptSpec,
    words: Sequence[str],
    cfg: Optional[AttackConfig] = None,
    trace: Optional[Counter] = None,
) -> List[str]:
    """
    Injects errors into every word of a corpus.

    The generator of each word is seeded from the attack seed and the index
    of the word, so the output only depends on the words and the
    configuration.

    :param spec: The script specification.
    :param words: The normalized words.
    :param cfg: The attack configuration.
    :param trace: An optional counter of fired operations.
    :return: The noisy words, in the same order.
    """

    if cfg is None:
        cfg = AttackConfig()

    return [
        attack_word(spec, word, cfg, rng=word_rng(cfg.seed, idx), trace=trace)
        for idx, word in enumerate(words)
    ]


def random_codepoint_words(
    spec: ScriptSpec,
    count: int,
    seed: int = 0,
    foreign_rate: float = 0.05,
    max_length: int = 10,
) -> List[str]:
    """
    Returns random words drawn from the block of a script.

    Codepoints are drawn uniformly from the Unicode block of the script
    (including its unassigned codepoints); each codepoint is replaced, with
    probability `foreign_rate`, by a codepoint from `FOREIGN_NOISE`. The words
    are mostly malformed and are meant as normalizer input.

    :param spec: The script specification.
    :param count: The number of words.
    :param seed: The seed of the generator (default: 0).
    :param foreign_rate: The rate of foreign noise (default: 0.05).
    :param max_length: The maximum length of a word (default: 10).
    :return: A list of non-empty words without whitespace.
    """

    if spec.block is not None:
        lo, hi = ord(spec.block[0]), ord(spec.block[1])
        alphabet = np.arange(lo, hi + 1)
    else:
        alphabet = np.array(sorted(ord(char) for char in spec.classes))

    rng = word_rng(seed)
    words = []
    for _ in range(count):
        length = int(rng.integers(1, max_length + 1))
        codes = rng.choice(alphabet, size=length)
        noise = rng.random(length) < foreign_rate
        picks = rng.integers(len(FOREIGN_NOISE), size=length)
        words.append(
            "".join(
                FOREIGN_NOISE[pick] if is_noise else chr(int(code))
                for code, is_noise, pick in zip(codes, noise, picks)
            )
        )

    return words


@dataclass
class RecoveryReport:
    """
    Outcome of normalizing attacked words back.

    :param words: The number of words.
    :param recovered: The number of words restored exactly.
    :param recovery_rate: The fraction of words restored exactly.
    :param mean_distance: The mean normalized Levenshtein distance between
        the original and the restored words.
    """

    words: int
    recovered: int
    recovery_rate: float
    mean_distance: float

    def table(self, tablefmt: str = "github") -> str:
        return tabulate.tabulate(
            [[self.words, self.recovered, self.recovery_rate, self.mean_distance]],
            headers=["Words", "Recovered", "Recovery rate", "Mean distance"],
            tablefmt=tablefmt,
            floatfmt=".4f",
        )


def recovery_report(
    spec: ScriptSpec,
    words: Sequence[str],
    cfg: Optional[AttackConfig] = None,
    options: Optional[NormalizerOptions] = None,
) -> RecoveryReport:
    """
    Attacks normalized words, normalizes them again, and measures how many
    are restored.

    In strict mode every word is expected to be restored; outside of it,
    some insertions create valid conjuncts, and the rate is only reported.

    :param spec: The script specification.
    :param words: The normalized words.
    :param cfg: The attack configuration.
    :param options: The normalizer options.
    :return: The recovery report.
    """

    levenshtein = textdistance.Levenshtein(external=False)

    recovered = 0
    distances = []
    attacked = attack_corpus(spec, words, cfg)
    for original, noisy in zip(words, attacked):
        restored, _ = normalize_word(spec, noisy, options)
        if restored == original:
            recovered += 1
            distances.append(0.0)
        else:
            logging.debug("Attacked `%s` restored as `%s`.", original, restored)
            distances.append(levenshtein.normalized_distance(original, restored))

    total = len(words)
    return RecoveryReport(
        words=total,
        recovered=recovered,
        recovery_rate=recovered / total if total else 1.0,
        mean_distance=float(np.mean(distances)) if distances else 0.0,
    )
