"""
Module implementing the word normalizer.

The normalizer repairs the most common malformations of Unicode text in
Abugida scripts: codepoints that should be composed, nuktas and diacritics
typed apart from their base, connectors that cannot join anything, stray
invisible codepoints, and diacritics typed in the wrong order or in places
where they cannot be rendered. Each correction is a separate rule, exposed
as a function that takes and returns a word; `normalize_word()` combines all
of them in a fixed order and iterates until the word no longer changes.

Four rules only apply to Bangla (the "Bangla extensions"): the replacement of
Assamese lookalike letters, the removal of unwanted doubled connectors and
diacritics, the normalization of complex grapheme roots to frequently used
conjuncts, and the normalization of khanda ta.

All rules can record their edits in a `NormalizationReport`. The position of
an entry is an index into the word as it was immediately before that edit, so
that replaying the entries in order over the input reproduces the output.
"""

# Import Python standard libraries
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, NamedTuple, Optional, Set, Tuple
import logging
import re

# Import local modules
from .common import NotAWord, OptionsError, PassLimitExceeded, describe
from .script_spec import MAX_CONJUNCT, CodepointClass, ScriptSpec

# Shorthands for the classes, used in the scanning loops
VOWEL = CodepointClass.VOWEL
CONSONANT = CodepointClass.CONSONANT
VD = CodepointClass.VOWEL_DIACRITIC
CD = CodepointClass.CONSONANT_DIACRITIC
CONNECTOR = CodepointClass.CONNECTOR
NUKTA = CodepointClass.NUKTA
DIGIT = CodepointClass.DIGIT
SYMBOL = CodepointClass.SYMBOL
LEGACY = CodepointClass.LEGACY
FOREIGN = CodepointClass.FOREIGN

# Classes after which no diacritic can be rendered
_NO_HOST = (DIGIT, SYMBOL, LEGACY)

# Whitespace splitting that keeps the separators
WHITESPACE = re.compile(r"(\s+)")


class FixKind(Enum):
    """
    Kinds of corrections, with the short labels used in reports.
    """

    LEGACY = "Legacy"
    BROKEN_DIACRITIC = "BD"
    BROKEN_NUKTA = "BN"
    INVALID_UNICODE = "IU"
    INVALID_CONNECTOR = "IC"
    DIACRITIC_FORM = "FD"
    VOWEL_VOWEL_DIACRITIC = "VDV"
    UNWANTED_DOUBLE = "UD"
    COMPLEX_ROOT = "CRN"
    ASSAMESE_REPLACEMENT = "AR"
    TO_HOSONTO = "THN"


class ReportEntry(NamedTuple):
    """
    One edit: `removed` was replaced by `inserted` at `position`.

    Entries where `removed` equals `inserted` do not edit the word; they flag
    legacy codepoints which have no replacement.
    """

    fix: FixKind
    position: int
    removed: str
    inserted: str


@dataclass
class NormalizationReport:
    """
    Ordered record of the edits applied to a word.
    """

    entries: List[ReportEntry] = field(default_factory=list)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def add(self, fix: FixKind, position: int, removed: str, inserted: str):
        self.entries.append(ReportEntry(fix, position, removed, inserted))

    def kinds(self) -> Set[FixKind]:
        """
        Returns the set of fix kinds with at least one entry.
        """

        return {entry.fix for entry in self.entries}

    def replay(self, word: str) -> str:
        """
        Applies the entries, in order, to a word.

        Replaying the report of a normalization over its input reproduces
        the output exactly.

        :param word: The word the report was computed for.
        :return: The edited word.
        """

        for entry in self.entries:
            end = entry.position + len(entry.removed)
            if word[entry.position : end] != entry.removed:
                raise ValueError(
                    f"Report entry {entry.fix.value}@{entry.position} does not match "
                    f"the word (expected {describe(entry.removed) or 'nothing'})."
                )
            word = word[: entry.position] + entry.inserted + word[end:]

        return word

    def to_records(self) -> List[Dict]:
        """
        Returns the entries as JSON-serializable dictionaries.
        """

        return [
            {
                "fix": entry.fix.value,
                "position": entry.position,
                "removed": entry.removed,
                "inserted": entry.inserted,
            }
            for entry in self.entries
        ]


@dataclass(frozen=True)
class NormalizerOptions:
    """
    Options of `normalize_word()`.

    :param map_legacy: Whether to replace legacy codepoints by their visually
        similar counterparts (default: False).
    :param bangla_extensions: Whether to run the four Bangla-specific rules.
        The default of `None` enables them for Bangla only; enabling them
        for any other script raises `OptionsError`.
    :param max_passes: Maximum number of pipeline passes (default: 8).
    """

    map_legacy: bool = False
    bangla_extensions: Optional[bool] = None
    max_passes: int = 8

    def __post_init__(self):
        if isinstance(self.max_passes, bool) or not isinstance(self.max_passes, int):
            raise OptionsError("`max_passes` must be an integer.")
        if self.max_passes < 1:
            raise OptionsError("`max_passes` must be a positive integer.")

    def extensions_for(self, spec: ScriptSpec) -> bool:
        """
        Resolves the Bangla extensions flag for a given script.
        """

        if self.bangla_extensions is None:
            return spec.script_code == "bn"
        if self.bangla_extensions and spec.script_code != "bn":
            raise OptionsError(
                f"Bangla extensions cannot be enabled for script `{spec.script_code}`."
            )

        return bool(self.bangla_extensions)


def _record(report, fix, position, removed, inserted):
    if report is not None:
        report.add(fix, position, removed, inserted)


def fix_legacy(
    spec: ScriptSpec,
    word: str,
    report: Optional[NormalizationReport] = None,
    flag_unmapped: bool = True,
) -> str:
    """
    Maps legacy codepoints to their visually similar counterparts.

    Legacy codepoints without an entry in the legacy map of the spec are left
    untouched; they are flagged in the report (with an entry that replaces
    the codepoint by itself) and logged.

    Example
    ********

    .. code-block:: python

        >>> bn = abugida.script_spec.load_bundled_spec("bn")
        >>> abugida.normalizer.fix_legacy(bn, "\\u098c")
        '৯'

    :param spec: The script specification.
    :param word: The word to fix.
    :param report: An optional report collecting the edits.
    :param flag_unmapped: Whether to flag and log unmapped legacy codepoints
        (default: True).
    :return: The fixed word.
    """

    classes = spec.classes
    chars = list(word)
    for idx, char in enumerate(chars):
        if classes.get(char) is not LEGACY:
            continue
        target = spec.legacy_map.get(char)
        if target is not None:
            chars[idx] = target
            _record(report, FixKind.LEGACY, idx, char, target)
        elif flag_unmapped:
            logging.warning(
                "No replacement for legacy codepoint %s in script `%s`.",
                describe(char),
                spec.script_code,
            )
            _record(report, FixKind.LEGACY, idx, char, char)

    return "".join(chars)


def replace_assamese(
    spec: ScriptSpec, word: str, report: Optional[NormalizationReport] = None
) -> str:
    """
    Replaces Assamese letters by the Bangla letters they closely resemble.

    :param spec: The script specification.
    :param word: The word to fix.
    :param report: An optional report collecting the edits.
    :return: The fixed word.
    """

    chars = list(word)
    for idx, char in enumerate(chars):
        target = spec.assamese_map.get(char)
        if target is not None:
            chars[idx] = target
            _record(report, FixKind.ASSAMESE_REPLACEMENT, idx, char, target)

    return "".join(chars)


def fix_broken_diacritics(
    spec: ScriptSpec, word: str, report: Optional[NormalizationReport] = None
) -> str:
    """
    Composes pairs of vowel diacritics that have a single-codepoint form.

    Pairs are composed left to right; a composed diacritic is compared again
    with its left neighbor, so that chains are fully reduced.

    Example
    ********

    .. code-block:: python

        >>> deva = abugida.script_spec.load_bundled_spec("deva")
        >>> abugida.normalizer.fix_broken_diacritics(deva, "क\\u093e\\u0947")
        'को'

    :param spec: The script specification.
    :param word: The word to fix.
    :param report: An optional report collecting the edits.
    :return: The fixed word.
    """

    compositions = spec.diacritic_compositions
    if not compositions:
        return word

    chars = list(word)
    idx = 1
    while idx < len(chars):
        pair = chars[idx - 1] + chars[idx]
        composed = compositions.get(pair)
        if composed is None:
            idx += 1
            continue
        chars[idx - 1 : idx + 1] = [composed]
        _record(report, FixKind.BROKEN_DIACRITIC, idx - 1, pair, composed)
        idx = max(idx - 1, 1)

    return "".join(chars)


def fix_nukta(spec: ScriptSpec, word: str, report: Optional[NormalizationReport] = None) -> str:
    """
    Replaces every base consonant followed by a nukta with its precomposed
    codepoint. A nukta that cannot be composed with its predecessor is
    removed.

    :param spec: The script specification.
    :param word: The word to fix.
    :param report: An optional report collecting the edits.
    :return: The fixed word.
    """

    classes = spec.classes
    chars = list(word)
    idx = 0
    while idx < len(chars):
        char = chars[idx]
        if classes.get(char) is not NUKTA:
            idx += 1
            continue
        pair = chars[idx - 1] + char if idx > 0 else None
        composed = spec.nukta_compositions.get(pair) if pair else None
        if composed is not None:
            chars[idx - 1 : idx + 1] = [composed]
            _record(report, FixKind.BROKEN_NUKTA, idx - 1, pair, composed)
        else:
            del chars[idx]
            _record(report, FixKind.BROKEN_NUKTA, idx, char, "")

    return "".join(chars)


def normalize_khanda_ta(
    spec: ScriptSpec, word: str, report: Optional[NormalizationReport] = None
) -> str:
    """
    Replaces ta followed by a connector with khanda ta, when the connector
    is followed by the zero width non-joiner or by anything but a consonant
    (including the end of the word).

    Example
    ********

    .. code-block:: python

        >>> bn = abugida.script_spec.load_bundled_spec("bn")
        >>> abugida.normalizer.normalize_khanda_ta(bn, "উত\\u09cd")
        'উৎ'

    :param spec: The script specification; it must define `khanda_ta`,
        otherwise the word is returned unchanged.
    :param word: The word to fix.
    :param report: An optional report collecting the edits.
    :return: The fixed word.
    """

    if spec.khanda_ta is None:
        return word

    base, form, joiner = spec.khanda_ta
    classes = spec.classes
    connector = spec.connector
    chars = list(word)
    idx = 0
    while idx < len(chars) - 1:
        if chars[idx] != base or chars[idx + 1] != connector:
            idx += 1
            continue
        follower = chars[idx + 2] if idx + 2 < len(chars) else None
        if follower == joiner:
            chars[idx : idx + 3] = [form]
            _record(report, FixKind.TO_HOSONTO, idx, base + connector + joiner, form)
        elif follower is None or classes.get(follower) is not CONSONANT:
            chars[idx : idx + 2] = [form]
            _record(report, FixKind.TO_HOSONTO, idx, base + connector, form)
        idx += 1

    return "".join(chars)


def remove_invalid_unicode(
    spec: ScriptSpec,
    word: str,
    report: Optional[NormalizationReport] = None,
    keep_referenced: bool = False,
) -> str:
    """
    Removes non-glyph codepoints and codepoints from other scripts.

    :param spec: The script specification.
    :param word: The word to fix.
    :param report: An optional report collecting the edits.
    :param keep_referenced: Whether to keep the foreign codepoints the spec
        marks as referenced by rules (default: False).
    :return: The fixed word; it can be empty.
    """

    classes = spec.classes
    chars = list(word)
    idx = 0
    while idx < len(chars):
        char = chars[idx]
        if char in classes or (keep_referenced and char in spec.rule_referenced):
            idx += 1
            continue
        del chars[idx]
        _record(report, FixKind.INVALID_UNICODE, idx, char, "")

    return "".join(chars)


def dedup_unwanted_doubles(
    spec: ScriptSpec, word: str, report: Optional[NormalizationReport] = None
) -> str:
    """
    Collapses immediately repeated connectors and vowel diacritics.

    :param spec: The script specification.
    :param word: The word to fix.
    :param report: An optional report collecting the edits.
    :return: The fixed word.
    """

    classes = spec.classes
    chars = list(word)
    idx = 1
    while idx < len(chars):
        char = chars[idx]
        if char == chars[idx - 1] and classes.get(char) in (CONNECTOR, VD):
            del chars[idx]
            _record(report, FixKind.UNWANTED_DOUBLE, idx, char, "")
        else:
            idx += 1

    return "".join(chars)


def fix_invalid_connectors(
    spec: ScriptSpec,
    word: str,
    report: Optional[NormalizationReport] = None,
    keep_khanda_ta: bool = False,
) -> str:
    """
    Removes every connector that is not placed between two consonants.

    Example
    ********

    .. code-block:: python

        >>> bn = abugida.script_spec.load_bundled_spec("bn")
        >>> abugida.normalizer.fix_invalid_connectors(bn, "আমার\\u09cd")
        'আমার'

    :param spec: The script specification.
    :param word: The word to fix.
    :param report: An optional report collecting the edits.
    :param keep_khanda_ta: Whether to leave a word-final connector after the
        khanda ta base consonant for `normalize_khanda_ta()` (default: False).
    :return: The fixed word.
    """

    classes = spec.classes
    connector = spec.connector
    khanda_base = spec.khanda_ta.base if keep_khanda_ta and spec.khanda_ta else None
    chars = list(word)
    idx = 0
    while idx < len(chars):
        if chars[idx] != connector:
            idx += 1
            continue
        prev_char = chars[idx - 1] if idx > 0 else None
        next_char = chars[idx + 1] if idx + 1 < len(chars) else None
        if classes.get(prev_char) is CONSONANT and classes.get(next_char) is CONSONANT:
            idx += 1
        elif next_char is None and prev_char is not None and prev_char == khanda_base:
            idx += 1
        else:
            del chars[idx]
            _record(report, FixKind.INVALID_CONNECTOR, idx, connector, "")

    return "".join(chars)


def _conjunct_runs(spec: ScriptSpec, chars: List[str]) -> List[List[int]]:
    """
    Returns the letter indices of every maximal run of consonants joined by
    connectors, for runs of at least two consonants.
    """

    classes = spec.classes
    connector = spec.connector
    runs = []
    idx = 0
    size = len(chars)
    while idx < size:
        if classes.get(chars[idx]) is not CONSONANT:
            idx += 1
            continue
        run = [idx]
        while (
            run[-1] + 2 < size
            and chars[run[-1] + 1] == connector
            and classes.get(chars[run[-1] + 2]) is CONSONANT
        ):
            run.append(run[-1] + 2)
        if len(run) > 1:
            runs.append(run)
        idx = run[-1] + 1

    return runs


def normalize_complex_roots(
    spec: ScriptSpec, word: str, report: Optional[NormalizationReport] = None
) -> str:
    """
    Restricts conjuncts to the combinations in the whitelist of the spec.

    Each maximal run of connector-joined consonants is scanned left to right.
    The longest prefix of the remaining letters that is a whitelisted
    conjunct is kept, and the connector joining it to the next letter is
    removed; a letter that starts no whitelisted conjunct loses the
    connector to its successor.

    Example
    ********

    .. code-block:: python

        >>> bn = abugida.script_spec.load_bundled_spec("bn")
        >>> abugida.normalizer.normalize_complex_roots(bn, "বিষ্প্দ")
        'বিষ্পদ'

    :param spec: The script specification.
    :param word: The word to fix.
    :param report: An optional report collecting the edits.
    :return: The fixed word.
    """

    whitelist = spec.conjunct_whitelist
    chars = list(word)
    severed: List[int] = []
    for run in _conjunct_runs(spec, chars):
        letters = [chars[idx] for idx in run]
        start = 0
        while start < len(letters) - 1:
            matched = 1
            for size in range(min(MAX_CONJUNCT, len(letters) - start), 1, -1):
                if "".join(letters[start : start + size]) in whitelist:
                    matched = size
                    break
            end = start + matched - 1
            if end < len(letters) - 1:
                # The connector follows the last letter of the kept conjunct
                severed.append(run[end] + 1)
            start = end + 1

    for shift, position in enumerate(severed):
        del chars[position - shift]
        _record(report, FixKind.COMPLEX_ROOT, position - shift, spec.connector, "")

    return "".join(chars)


def fix_diacritic_forms(
    spec: ScriptSpec, word: str, report: Optional[NormalizationReport] = None
) -> str:
    """
    Fixes the order and placement of diacritics.

    The function removes diacritics that have no host (at the start of the
    word, or following a digit, a symbol, or a legacy codepoint), removes a
    vowel diacritic that follows another one unless the pair can be
    composed, and moves a vowel diacritic that follows consonant diacritics
    in front of them.

    Example
    ********

    .. code-block:: python

        >>> bn = abugida.script_spec.load_bundled_spec("bn")
        >>> abugida.normalizer.fix_diacritic_forms(bn, "দুুই")
        'দুই'

    :param spec: The script specification.
    :param word: The word to fix.
    :param report: An optional report collecting the edits.
    :return: The fixed word.
    """

    classes = spec.classes
    compositions = spec.diacritic_compositions
    chars = list(word)
    idx = 0
    while idx < len(chars):
        char = chars[idx]
        cls = classes.get(char)
        if cls is not VD and cls is not CD:
            idx += 1
            continue

        prev_cls = classes.get(chars[idx - 1]) if idx > 0 else None
        if prev_cls is None or prev_cls in _NO_HOST:
            del chars[idx]
            _record(report, FixKind.DIACRITIC_FORM, idx, char, "")
            continue

        if cls is VD and prev_cls is VD:
            if chars[idx - 1] + char in compositions:
                idx += 1
            else:
                del chars[idx]
                _record(report, FixKind.DIACRITIC_FORM, idx, char, "")
            continue

        if cls is VD and prev_cls is CD:
            start = idx - 1
            while start > 0 and classes.get(chars[start - 1]) is CD:
                start -= 1
            removed = "".join(chars[start : idx + 1])
            chars[start : idx + 1] = [char] + chars[start:idx]
            _record(report, FixKind.DIACRITIC_FORM, start, removed, char + removed[:-1])
            # The moved diacritic is checked again at its new position
            idx = start
            continue

        idx += 1

    return "".join(chars)


def remove_vowel_vowel_diacritic(
    spec: ScriptSpec, word: str, report: Optional[NormalizationReport] = None
) -> str:
    """
    Removes vowel diacritics that directly follow a vowel.

    :param spec: The script specification.
    :param word: The word to fix.
    :param report: An optional report collecting the edits.
    :return: The fixed word.
    """

    classes = spec.classes
    chars = list(word)
    idx = 1
    while idx < len(chars):
        char = chars[idx]
        if classes.get(char) is VD and classes.get(chars[idx - 1]) is VOWEL:
            del chars[idx]
            _record(report, FixKind.VOWEL_VOWEL_DIACRITIC, idx, char, "")
        else:
            idx += 1

    return "".join(chars)


def _single_pass(
    spec: ScriptSpec,
    word: str,
    options: NormalizerOptions,
    extensions: bool,
    report: Optional[NormalizationReport],
    first: bool,
) -> str:
    """
    Applies every rule once, in pipeline order.

    Compositions and the khanda ta rule come before the deletion rules, so
    that the invalid Unicode cleaner does not remove the zero width
    non-joiner before it is consumed.
    """

    if options.map_legacy:
        word = fix_legacy(spec, word, report, flag_unmapped=first)
    if extensions:
        word = replace_assamese(spec, word, report)
    word = fix_broken_diacritics(spec, word, report)
    word = fix_nukta(spec, word, report)
    if extensions:
        word = normalize_khanda_ta(spec, word, report)
    word = remove_invalid_unicode(spec, word, report)
    if extensions:
        word = dedup_unwanted_doubles(spec, word, report)
    word = fix_invalid_connectors(spec, word, report, keep_khanda_ta=extensions)
    if extensions and spec.conjunct_whitelist:
        word = normalize_complex_roots(spec, word, report)
    word = fix_diacritic_forms(spec, word, report)
    word = remove_vowel_vowel_diacritic(spec, word, report)

    return word


def normalize_word(
    spec: ScriptSpec, word: str, options: Optional[NormalizerOptions] = None
) -> Tuple[str, NormalizationReport]:
    """
    Normalizes a single word.

    The rules are applied in the order legacy mapping (if enabled), Assamese
    replacement, broken diacritics, broken nukta, khanda ta, invalid
    Unicode, unwanted doubles, invalid connectors, complex roots, diacritic
    forms, and vowel followed by vowel diacritic, where the Bangla-specific
    rules only run with the Bangla extensions enabled. The pipeline is
    repeated until a pass leaves the word unchanged, so the result is
    idempotent.

    Every rule either shortens the word or keeps its length while reducing
    the number of consonant diacritics placed before a vowel diacritic;
    the fixpoint is therefore reached in a few passes, and
    `PassLimitExceeded` signals a defect in a script specification.

    Example
    ********

    .. code-block:: python

        >>> bn = abugida.script_spec.load_bundled_spec("bn")
        >>> word, report = abugida.normalizer.normalize_word(bn, "আমার্")
        >>> word
        'আমার'
        >>> report.entries
        [ReportEntry(fix=<FixKind.INVALID_CONNECTOR: 'IC'>, position=4, removed='্', inserted='')]

    :param spec: The script specification.
    :param word: The word to normalize, a non-empty string without
        whitespace.
    :param options: The normalizer options; defaults are used if not
        provided.
    :return: A tuple with the normalized word (which is empty if the word
        only held invalid codepoints) and the report of the applied fixes.
    """

    if not word:
        raise NotAWord("Cannot normalize an empty word.")
    if any(char.isspace() for char in word):
        raise NotAWord(f"Not a single word: `{word}`.")

    if options is None:
        options = NormalizerOptions()
    extensions = options.extensions_for(spec)

    report = NormalizationReport()
    current = word
    for pass_idx in range(options.max_passes):
        updated = _single_pass(spec, current, options, extensions, report, pass_idx == 0)
        if updated == current:
            logging.debug("Normalized `%s` in %i pass(es).", word, pass_idx + 1)
            return updated, report
        current = updated

    raise PassLimitExceeded(
        f"No fixpoint for `{word}` ({describe(word)}) within {options.max_passes} passes."
    )


def normalize_text(
    spec: ScriptSpec,
    text: str,
    options: Optional[NormalizerOptions] = None,
    changes: Optional[List[Tuple[str, str, NormalizationReport]]] = None,
) -> str:
    """
    Normalizes every whitespace-separated word of a text, preserving the
    whitespace exactly.

    :param spec: The script specification.
    :param text: The text to normalize.
    :param options: The normalizer options.
    :param changes: An optional list collecting, for every word that was
        changed, a tuple with the word, its normalized form, and the report.
    :return: The normalized text.
    """

    tokens = WHITESPACE.split(text)
    # Odd positions hold the separators
    for idx in range(0, len(tokens), 2):
        token = tokens[idx]
        if not token:
            continue
        normalized, report = normalize_word(spec, token, options)
        if normalized != token:
            tokens[idx] = normalized
            if changes is not None:
                changes.append((token, normalized, report))

    return "".join(tokens)
