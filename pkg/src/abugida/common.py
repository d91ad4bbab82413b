"""
Module for defining common functions and variables used in different circumstances.

This module works as a repository of the errors raised by the package and of
the small helpers that are used by different modules, such as for parsing the
codepoint notation accepted in script specifications or for describing
codepoints in log messages and reports.
"""

# Import Python standard libraries
from typing import Iterable, List, Union
import re
import unicodedata

# Codepoint notation accepted in configuration files, as in the Unicode
# code charts ("U+09CD"); an optional "0x" prefix is tolerated
_HEX_TOKEN = re.compile(r"^(?:U\+|0x)([0-9A-Fa-f]{4,6})$")


class AbugidaError(Exception):
    """
    Base class for all errors raised by the `abugida` package.
    """


class SchemaError(AbugidaError, ValueError):
    """
    A script specification does not conform to the expected schema.
    """


class ClassConflict(SchemaError):
    """
    A codepoint is listed in more than one class of a script specification.
    """


class UnknownConnector(SchemaError):
    """
    The connector of a script specification is not listed in its classes.
    """


class UnknownScript(AbugidaError, ValueError):
    """
    There is no bundled specification for the requested script code.
    """


class OptionsError(AbugidaError, ValueError):
    """
    Invalid normalizer or attack options.
    """


class NotAWord(AbugidaError, ValueError):
    """
    The normalizer received an empty sequence or one containing whitespace.
    """


class PassLimitExceeded(AbugidaError, RuntimeError):
    """
    The normalizer did not reach a fixpoint within the allowed passes.
    """


class NotNormalized(AbugidaError, ValueError):
    """
    The parser received a word that violates the normalized-word contract.
    """


class DanglingDiacritic(NotNormalized):
    """
    A diacritic unit has no preceding grapheme to attach to.
    """


class NoSegmentation(AbugidaError, ValueError):
    """
    The brute-force oracle found no segmentation matching the grammar.
    """


class AmbiguousSegmentation(AbugidaError, ValueError):
    """
    The brute-force oracle found more than one segmentation.
    """


class DomainError(AbugidaError, ValueError):
    """
    An argument is outside the domain of a formula.
    """


def parse_codepoint(value: Union[str, int]) -> str:
    """
    Parses a single codepoint written in one of the accepted notations.

    Script specifications can refer to codepoints in the notation of the
    Unicode code charts (`"U+09CD"`), as decimal integers (e.g. `2509`),
    or as the literal character.

    Example
    ********

    .. code-block:: python

        >>> abugida.common.parse_codepoint("U+09CD") == abugida.common.parse_codepoint(2509)
        True

    :param value: The codepoint in any of the accepted notations.
    :return: The codepoint as a one-character string.
    """

    if isinstance(value, bool):
        raise SchemaError(f"Invalid codepoint `{value}`.")

    if isinstance(value, int):
        if not 0 <= value <= 0x10FFFF:
            raise SchemaError(f"Codepoint `{value}` is out of the Unicode range.")
        return chr(value)

    if not isinstance(value, str):
        raise SchemaError(f"Invalid codepoint `{value!r}`.")

    value = value.strip()
    match = _HEX_TOKEN.match(value)
    if match:
        return chr(int(match.group(1), 16))
    if len(value) == 1:
        return value

    raise SchemaError(f"Invalid codepoint `{value}`.")


def parse_codepoints(value: Union[str, int, Iterable]) -> str:
    """
    Parses a sequence of codepoints written in the accepted notations.

    Sequences can be given as a list of individual codepoints, as a string of
    space-separated codepoint tokens (`"U+09A1 U+09BC"`), or as a literal
    string of characters (`"ক্ষ"`).

    :param value: The sequence in any of the accepted notations.
    :return: The sequence as a string.
    """

    if isinstance(value, int):
        return parse_codepoint(value)

    if isinstance(value, str):
        tokens = value.split()
        if len(tokens) > 1 or (tokens and _HEX_TOKEN.match(tokens[0])):
            return "".join(parse_codepoint(token) for token in tokens)
        return value.strip()

    return "".join(parse_codepoint(element) for element in value)


def format_codepoint(char: str) -> str:
    """
    Returns the code chart notation of a codepoint, e.g. `U+09CD`.
    """

    return f"U+{ord(char):04X}"


def describe(seq: str) -> str:
    """
    Returns a human-readable description of a codepoint sequence.

    Indic combining marks are hard to read in logs and error messages, so
    each codepoint is listed with its code chart notation and, when
    available, its Unicode name.

    :param seq: The sequence to describe.
    :return: A description such as `U+09CD (BENGALI SIGN VIRAMA)`.
    """

    parts: List[str] = []
    for char in seq:
        name = unicodedata.name(char, "")
        if name:
            parts.append(f"{format_codepoint(char)} ({name})")
        else:
            parts.append(format_codepoint(char))

    return ", ".join(parts)
