"""
Main module of the `abugida` package.

The package normalizes Unicode text written in Indic Abugida scripts and
segments normalized words into graphemes (a root, optionally followed by a
vowel diacritic, optionally followed by consonant diacritics). Script
knowledge is kept in declarative specifications, one per script, so that
the same normalizer and parser serve Bangla, Devanagari, Gurmukhi,
Gujarati, Odia, Tamil, and Malayalam.

The functions in this module are wrappers for the most common tasks; the
individual rules, the parser internals, the noise injector, and the corpus
tools are available in the submodules.
"""

# Version of the `abugida` package
__version__ = "0.1.0"  # remember to sync with setup.py and docs/conf.py

# Import Python standard libraries
from typing import List, Optional

# Import local modules
from .common import AbugidaError, NotAWord, NotNormalized
from .normalizer import FixKind, NormalizationReport, NormalizerOptions, normalize_text
from .normalizer import normalize_word
from .parser import Grapheme, ParseResult, parse_word
from .script_spec import SCRIPTS, ScriptSpec, load_bundled_spec, load_script_spec


def normalize(
    text: str,
    script: str = "bn",
    map_legacy: bool = False,
    bangla_extensions: Optional[bool] = None,
) -> str:
    """
    Normalizes a text written in one of the bundled scripts.

    Whitespace is preserved exactly; words that only hold invalid codepoints
    are normalized to nothing.

    Example
    ********

    .. code-block:: python

        >>> abugida.normalize("আমার্ দুই")
        'আমার দুই'

    :param text: The text to normalize.
    :param script: The script code, one of `SCRIPTS` (default: `"bn"`).
    :param map_legacy: Whether to replace legacy codepoints by their
        visually similar counterparts (default: False).
    :param bangla_extensions: Whether to run the Bangla-specific rules; by
        default they only run for Bangla.
    :return: The normalized text.
    """

    options = NormalizerOptions(map_legacy=map_legacy, bangla_extensions=bangla_extensions)

    return normalize_text(load_bundled_spec(script), text, options)


def parse(word: str, script: str = "bn", normalize_first: bool = True) -> ParseResult:
    """
    Segments a word written in one of the bundled scripts into graphemes.

    :param word: The word to parse.
    :param script: The script code, one of `SCRIPTS` (default: `"bn"`).
    :param normalize_first: Whether to normalize the word before parsing it
        (default: True). Parsing a word that is not normalized raises
        `NotNormalized`.
    :return: The parse result of the (normalized) word.
    """

    spec = load_bundled_spec(script)
    if normalize_first:
        word, _ = normalize_word(spec, word)
        if not word:
            raise NotAWord("The word only holds invalid codepoints.")

    return parse_word(spec, word)


def graphemes(word: str, script: str = "bn") -> List[str]:
    """
    Returns the graphemes of a word as strings, normalizing it first.

    Example
    ********

    .. code-block:: python

        >>> abugida.graphemes("সংস্কৃতি")
        ['সং', 'স্কৃ', 'তি']

    :param word: The word to segment.
    :param script: The script code, one of `SCRIPTS` (default: `"bn"`).
    :return: A list of graphemes whose concatenation is the normalized word.
    """

    return list(parse(word, script).texts)


# Build namespace
__all__ = [
    "AbugidaError",
    "FixKind",
    "Grapheme",
    "NormalizationReport",
    "NormalizerOptions",
    "NotAWord",
    "NotNormalized",
    "ParseResult",
    "SCRIPTS",
    "ScriptSpec",
    "graphemes",
    "load_bundled_spec",
    "load_script_spec",
    "normalize",
    "normalize_word",
    "parse",
    "parse_word",
]
