"""
Module implementing the grapheme parser.

A normalized word is segmented into graphemes (orthographic syllables), each
made of a root (a vowel, a consonant, or a conjunct of consonants joined by
connectors), at most one vowel diacritic, and any number of consonant
diacritics. The parser does not need a list of conjuncts: it finds the
connectors, merges each connector with its two neighboring consonants into
spans, collapses the spans into root units, and attaches the diacritic units
to the root on their left. All four steps are single linear scans.

`parse_word()` runs the same grammar in one go: the word is translated into
a string of class letters and matched with a compiled expression, and the
step functions only run on words it rejects, to report the error.

The module also provides a brute-force segmenter that enumerates every
split of a short word and keeps those matching the grapheme grammar; it is
used to check the parser.
"""

# Import Python standard libraries
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple
import functools
import re

# Import local modules
from .common import (
    AmbiguousSegmentation,
    DanglingDiacritic,
    NoSegmentation,
    NotNormalized,
    describe,
)
from .script_spec import CodepointClass, ScriptSpec

# Longest word accepted by the brute-force segmenter
ORACLE_MAX_LENGTH = 12

# Grapheme grammar over class signatures: V(owel), C(onsonant), (c)O(nnector),
# v(owel diacritic), d (consonant diacritic)
_GRAPHEME = re.compile(r"(?:V|C(?:OC)*v?)d*")
_ROOT = re.compile(r"V|C(?:OC)*")
_SIGNATURE = {
    CodepointClass.VOWEL: "V",
    CodepointClass.CONSONANT: "C",
    CodepointClass.CONNECTOR: "O",
    CodepointClass.VOWEL_DIACRITIC: "v",
    CodepointClass.CONSONANT_DIACRITIC: "d",
}

# Unit kind of each codepoint class; missing classes are not allowed in
# normalized words outside of spans
_UNIT_KIND = {
    CodepointClass.VOWEL: "gc",
    CodepointClass.CONSONANT: "gc",
    CodepointClass.VOWEL_DIACRITIC: "vd",
    CodepointClass.CONSONANT_DIACRITIC: "cd",
    CodepointClass.DIGIT: "other",
    CodepointClass.SYMBOL: "other",
    CodepointClass.LEGACY: "other",
}

# Whole-word grammar used by `parse_word()`; digits, symbols, and legacy
# codepoints are signed "x" and stand alone
_TOKEN = re.compile(r"(?P<root>V|C(?:OC)*)(?P<vd>v?)d*|x")
_WORD = re.compile(r"(?:Vd*|C(?:OC)*v?d*|x)*")


class Grapheme(NamedTuple):
    """
    One orthographic syllable.

    Digits, symbols, and legacy codepoints form graphemes of their own,
    marked by `other` and holding the codepoint as root.
    """

    root: str
    vowel_diacritic: Optional[str] = None
    consonant_diacritics: str = ""
    other: bool = False

    @property
    def text(self) -> str:
        return self.root + (self.vowel_diacritic or "") + self.consonant_diacritics


class ParseResult(NamedTuple):
    """
    The graphemes of a word, in order, together with the word itself.
    """

    graphemes: Tuple[Grapheme, ...]
    source: str

    @property
    def texts(self) -> List[str]:
        return [grapheme.text for grapheme in self.graphemes]


class Unit(NamedTuple):
    """
    A segment of a word: a root (`gc`), a vowel diacritic (`vd`), a
    consonant diacritic (`cd`), or a digit or symbol (`other`).
    """

    kind: str
    text: str


def connector_positions(spec: ScriptSpec, word: str) -> List[int]:
    """
    Returns the positions of the connectors in a word, in ascending order.

    Example
    ********

    .. code-block:: python

        >>> bn = abugida.script_spec.load_bundled_spec("bn")
        >>> abugida.parser.connector_positions(bn, "ক্ষ্ণ")
        [1, 3]

    :param spec: The script specification.
    :param word: A normalized word.
    :return: The list of indices; every connector has a consonant on both
        sides.
    """

    classes = spec.classes
    connector = spec.connector
    consonant = CodepointClass.CONSONANT
    last = len(word) - 1

    positions = []
    for idx, char in enumerate(word):
        if char != connector:
            continue
        if (
            idx == 0
            or idx == last
            or classes.get(word[idx - 1]) is not consonant
            or classes.get(word[idx + 1]) is not consonant
        ):
            raise NotNormalized(f"Connector at position {idx} of `{word}` joins no consonants.")
        positions.append(idx)

    return positions


def merge_connector_spans(positions: Sequence[int]) -> List[Tuple[int, ...]]:
    """
    Merges the connector positions into spans of consecutive indices.

    Each connector at `i` spans the triplet `(i - 1, i, i + 1)`; two triplets
    are merged when the last index of the first is the first index of the
    second. The resulting spans are disjoint and have an odd length of at
    least three.

    Example
    ********

    .. code-block:: python

        >>> abugida.parser.merge_connector_spans([1, 3])
        [(0, 1, 2, 3, 4)]

    :param positions: Connector positions in ascending order.
    :return: The list of spans.
    """

    spans = []
    start = end = None
    for pos in positions:
        if end is not None and pos - 1 == end:
            end = pos + 1
            continue
        if end is not None:
            spans.append(tuple(range(start, end + 1)))
        start, end = pos - 1, pos + 1
    if end is not None:
        spans.append(tuple(range(start, end + 1)))

    return spans


def segment_units(
    spec: ScriptSpec, word: str, spans: Sequence[Tuple[int, ...]]
) -> List[Unit]:
    """
    Collapses each span into a root unit and tags every other codepoint.

    :param spec: The script specification.
    :param word: A normalized word.
    :param spans: The spans returned by `merge_connector_spans()`.
    :return: The list of units.
    """

    classes = spec.classes
    vowel = CodepointClass.VOWEL
    span_end = {span[0]: span[-1] for span in spans}

    units = []
    idx = 0
    size = len(word)
    while idx < size:
        end = span_end.get(idx)
        if end is not None:
            units.append(Unit("gc", word[idx : end + 1]))
            idx = end + 1
            continue

        char = word[idx]
        cls = classes.get(char, CodepointClass.FOREIGN)
        kind = _UNIT_KIND.get(cls)
        if kind is None:
            raise NotNormalized(
                f"Unexpected {cls.value} codepoint {describe(char)} at position {idx} of `{word}`."
            )
        if kind == "vd" and idx > 0 and classes.get(word[idx - 1]) is vowel:
            raise NotNormalized(f"Vowel diacritic after a vowel at position {idx} of `{word}`.")
        units.append(Unit(kind, char))
        idx += 1

    return units


def assemble_graphemes(units: Sequence[Unit]) -> List[Grapheme]:
    """
    Builds graphemes from units, attaching every diacritic unit to the root
    unit on its left.

    :param units: The units returned by `segment_units()`.
    :return: The list of graphemes.
    """

    graphemes = []
    root = None
    vowel_diacritic = None
    consonant_diacritics = ""
    other = False

    for kind, text in units:
        if kind == "gc" or kind == "other":
            if root is not None:
                graphemes.append(Grapheme(root, vowel_diacritic, consonant_diacritics, other))
            root, vowel_diacritic, consonant_diacritics = text, None, ""
            other = kind == "other"
            continue

        if root is None or other:
            raise DanglingDiacritic(f"Diacritic {describe(text)} has no root to attach to.")
        if kind == "vd":
            if vowel_diacritic is not None or consonant_diacritics:
                raise NotNormalized(
                    f"Vowel diacritic {describe(text)} follows another diacritic of `{root}`."
                )
            vowel_diacritic = text
        elif kind == "cd":
            consonant_diacritics += text
        else:
            raise ValueError(f"Unknown unit kind `{kind}`.")

    if root is not None:
        graphemes.append(Grapheme(root, vowel_diacritic, consonant_diacritics, other))

    return graphemes


class _SignatureTable(dict):
    # Codepoints missing from the table (foreign ones, nukta) sign as "?",
    # which no rule of the grammar accepts
    def __missing__(self, key):
        return "?"


@functools.lru_cache(maxsize=64)
def _signature_table(spec: ScriptSpec) -> Dict[int, str]:
    table = _SignatureTable()
    for char, cls in spec.classes.items():
        if cls in _SIGNATURE:
            table[ord(char)] = _SIGNATURE[cls]
        elif _UNIT_KIND.get(cls) == "other":
            table[ord(char)] = "x"
    return table


def parse_word(spec: ScriptSpec, word: str) -> ParseResult:
    """
    Segments a normalized word into graphemes.

    The word is first translated into its class signature and matched
    against the grapheme grammar as a whole; only words that fail the match
    go through the step functions, which locate and report the error.

    Example
    ********

    .. code-block:: python

        >>> bn = abugida.script_spec.load_bundled_spec("bn")
        >>> abugida.parser.parse_word(bn, "সংস্কৃতি").texts
        ['সং', 'স্কৃ', 'তি']

    :param spec: The script specification.
    :param word: A normalized word, e.g. as returned by
        `abugida.normalizer.normalize_word()`.
    :return: The parse result; concatenating the graphemes returns the word.
    """

    signature = word.translate(_signature_table(spec))
    if _WORD.fullmatch(signature) is None:
        spans = merge_connector_spans(connector_positions(spec, word))
        graphemes = assemble_graphemes(segment_units(spec, word, spans))
        # The step functions raise for every word the grammar rejects
        return ParseResult(tuple(graphemes), word)

    graphemes = []
    for match in _TOKEN.finditer(signature):
        start, end = match.span()
        root_end = match.end("root")
        if root_end < 0:
            graphemes.append(Grapheme(word[start], None, "", True))
            continue
        vd_end = match.end("vd")
        graphemes.append(
            Grapheme(
                word[start:root_end],
                word[root_end:vd_end] or None,
                word[vd_end:end],
            )
        )

    return ParseResult(tuple(graphemes), word)


def reconstruct(result: ParseResult) -> str:
    """
    Returns the word obtained by concatenating the graphemes of a parse.
    """

    return "".join(grapheme.text for grapheme in result.graphemes)


def _signature(spec: ScriptSpec, word: str) -> str:
    classes = spec.classes
    return "".join(
        _SIGNATURE.get(classes.get(char, CodepointClass.FOREIGN), "?") for char in word
    )


def _enumerate(signature: str, start: int) -> List[List[int]]:
    """
    Returns the end positions of every accepted split of a signature suffix.
    """

    if start == len(signature):
        return [[]]

    splits = []
    for end in range(start + 1, len(signature) + 1):
        if _GRAPHEME.fullmatch(signature, start, end):
            splits.extend([end] + rest for rest in _enumerate(signature, end))

    return splits


def oracle_segment(spec: ScriptSpec, word: str) -> List[Grapheme]:
    """
    Segments a word by brute force over all of its splits.

    Every way of cutting the word into substrings is tried, and only those
    where each substring matches the grapheme grammar (a vowel, or a
    consonant optionally joined to further consonants by connectors and
    followed by at most one vowel diacritic, then any number of consonant
    diacritics) are accepted. Digits and symbols are not part of the
    grammar.

    :param spec: The script specification.
    :param word: The word, of at most `ORACLE_MAX_LENGTH` codepoints.
    :return: The graphemes of the single accepted split.
    """

    if len(word) > ORACLE_MAX_LENGTH:
        raise ValueError(
            f"The brute-force segmenter accepts at most {ORACLE_MAX_LENGTH} codepoints."
        )

    signature = _signature(spec, word)
    splits = _enumerate(signature, 0)
    if not splits:
        raise NoSegmentation(f"No segmentation of `{word}` matches the grammar.")
    if len(splits) > 1:
        raise AmbiguousSegmentation(f"{len(splits)} segmentations of `{word}` match the grammar.")

    graphemes = []
    start = 0
    for end in splits[0]:
        root_end = _ROOT.match(signature, start, end).end()
        tail = root_end
        vowel_diacritic = None
        if tail < end and signature[tail] == "v":
            vowel_diacritic = word[tail]
            tail += 1
        graphemes.append(Grapheme(word[start:root_end], vowel_diacritic, word[tail:end]))
        start = end

    return graphemes
