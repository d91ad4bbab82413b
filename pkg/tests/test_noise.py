"""
test_noise
==========

Tests for the `noise` module of the `abugida` package.
"""

# Import Python standard libraries
from collections import Counter

# Import 3rd-party libraries
import pytest

# Import the library being tested
from abugida import common
from abugida import noise
from abugida.corpus import synthetic_words
from abugida.noise import AttackConfig, AttackKind
from abugida.normalizer import normalize_word
from abugida.script_spec import SCRIPTS, CodepointClass, load_bundled_spec

QUIET = dict(p_connector_nonglyph=0.0, p_break_nukta=0.0, p_break_diacritic=0.0, p_vowel_vd=0.0)


def _config(**changes):
    return AttackConfig(**{**QUIET, **changes})


def test_attack_config_defaults():
    cfg = AttackConfig()
    assert cfg.p_connector_nonglyph == 0.3
    assert cfg.p_break_nukta == 0.5
    assert cfg.p_break_diacritic == 0.5
    assert cfg.p_vowel_vd == 0.5
    assert cfg.intensity == 1
    assert cfg.strict is False
    assert cfg.probability(AttackKind.CONNECTOR_NONGLYPH) == 0.3


@pytest.mark.parametrize(
    "changes",
    [
        {"p_connector_nonglyph": -0.1},
        {"p_break_nukta": 1.5},
        {"intensity": 0},
        {"intensity": 1.5},
        {"intensity": True},
        {"seed": -1},
        {"seed": 2**64},
    ],
)
def test_attack_config_invalid(changes):
    with pytest.raises(common.OptionsError):
        AttackConfig(**changes)


def test_attack_word_identity(bn):
    for word in ["কলম", "সংস্কৃতি", "অং", "\u09df"]:
        assert noise.attack_word(bn, word, _config(intensity=5)) == word


def test_attack_word_break_nukta(bn):
    cfg = _config(p_break_nukta=1.0)
    assert noise.attack_word(bn, "\u09df", cfg) == "\u09af\u09bc"
    assert noise.attack_word(bn, "কলম", cfg) == "কলম"


def test_attack_word_break_diacritic(bn):
    cfg = _config(p_break_diacritic=1.0)
    assert noise.attack_word(bn, "\u0995\u09cb", cfg) == "\u0995\u09c7\u09be"
    assert noise.attack_word(bn, "\u0995\u09cc", cfg) == "\u0995\u09c7\u09d7"


def test_attack_word_vowel_diacritic(bn):
    cfg = _config(p_vowel_vd=1.0)
    attacked = noise.attack_word(bn, "অক", cfg)
    assert len(attacked) == 3
    assert attacked[0] == "অ" and attacked[2] == "ক"
    assert bn.classes[attacked[1]] is CodepointClass.VOWEL_DIACRITIC

    # No vowel, no insertion
    assert noise.attack_word(bn, "কলম", cfg) == "কলম"


def test_attack_word_connector_nonglyph(bn):
    cfg = _config(p_connector_nonglyph=1.0)
    attacked = noise.attack_word(bn, "কলম", cfg)
    assert len(attacked) == 4
    inserted = [char for char in attacked if char not in "কলম"]
    assert len(inserted) == 1
    assert inserted[0] in (bn.connector,) + noise.NON_GLYPHS


def test_attack_word_determinism(bn):
    cfg = AttackConfig(intensity=3, seed=42)
    words = synthetic_words(bn, 200, seed=1)
    first = noise.attack_corpus(bn, words, cfg)
    second = noise.attack_corpus(bn, words, cfg)
    assert first == second
    assert first != words

    # Each word only depends on its own index
    assert noise.attack_corpus(bn, words[:50], cfg) == first[:50]
    assert noise.attack_word(bn, words[7], cfg, rng=noise.word_rng(42, 7)) == first[7]

    # A different seed gives a different corpus
    assert noise.attack_corpus(bn, words, AttackConfig(intensity=3, seed=43)) != first


def test_attack_corpus_empty(bn):
    assert noise.attack_corpus(bn, []) == []


@pytest.mark.parametrize("script_code", SCRIPTS)
@pytest.mark.parametrize("intensity", [1, 2, 5])
def test_strict_recovery(script_code, intensity, fuzz_words):
    """
    In strict mode, normalizing an attacked word restores it.
    """

    spec = load_bundled_spec(script_code)
    words = synthetic_words(spec, fuzz_words, seed=intensity)
    cfg = AttackConfig(intensity=intensity, seed=11, strict=True)
    for word, attacked in zip(words, noise.attack_corpus(spec, words, cfg)):
        assert normalize_word(spec, attacked)[0] == word


@pytest.mark.parametrize("script_code", SCRIPTS)
@pytest.mark.parametrize("probability", [0.5, 1.0])
def test_strict_recovery_random_words(script_code, probability, fuzz_words):
    """
    Strict attacks are also undone on normalized random words, which hold
    digits, symbols, unmapped legacy codepoints, and (in Bangla) khanda ta.
    """

    spec = load_bundled_spec(script_code)
    words = []
    for word in noise.random_codepoint_words(spec, fuzz_words, seed=23):
        normalized, _ = normalize_word(spec, word)
        if normalized:
            words.append(normalized)
    assert words

    cfg = AttackConfig(probability, probability, probability, probability, 3, seed=5, strict=True)
    for word, attacked in zip(words, noise.attack_corpus(spec, words, cfg)):
        assert normalize_word(spec, attacked)[0] == word


def test_random_words_hold_rare_classes(bn, fuzz_words):
    words = noise.random_codepoint_words(bn, fuzz_words, seed=23)
    text = "".join(normalize_word(bn, word)[0] for word in words)
    classes = {bn.classes[char] for char in text}
    assert CodepointClass.DIGIT in classes
    assert CodepointClass.SYMBOL in classes
    assert bn.khanda_ta.form in text


def test_strict_positions(bn):
    # Never between two consonants, never after the khanda ta base
    positions = noise._allowed_positions(bn, list("কত"), bn.connector)
    assert positions == [0]

    # Never before a nukta, never after a connector for non-glyphs
    chars = ["য", "\u09bc", "ক", bn.connector, "ষ"]
    assert noise._allowed_positions(bn, chars, "x") == [0, 2, 3, 5]


def test_coverage(bn):
    cfg = AttackConfig(intensity=2, seed=5)
    words = synthetic_words(bn, 1000, seed=5)
    trace = Counter()
    noise.attack_corpus(bn, words, cfg, trace=trace)

    draws = len(words) * cfg.intensity
    for kind in AttackKind:
        assert trace[kind] / draws == pytest.approx(cfg.probability(kind), abs=0.05)


@pytest.mark.parametrize("script_code", SCRIPTS)
def test_random_codepoint_words(script_code):
    spec = load_bundled_spec(script_code)
    words = noise.random_codepoint_words(spec, 300, seed=3, max_length=6)
    assert len(words) == 300
    assert all(1 <= len(word) <= 6 for word in words)
    assert all(not any(char.isspace() for char in word) for word in words)
    assert words == noise.random_codepoint_words(spec, 300, seed=3, max_length=6)

    lo, hi = spec.block
    for word in words:
        for char in word:
            assert lo <= char <= hi or char in noise.FOREIGN_NOISE


def test_recovery_report(bn):
    words = synthetic_words(bn, 200, seed=2)

    report = noise.recovery_report(bn, words, AttackConfig(intensity=2, strict=True))
    assert report.words == 200
    assert report.recovered == 200
    assert report.recovery_rate == 1.0
    assert report.mean_distance == 0.0

    # Outside of strict mode, some connectors form valid conjuncts
    report = noise.recovery_report(bn, words, AttackConfig(p_connector_nonglyph=1.0, intensity=5))
    assert 0.0 <= report.recovery_rate <= 1.0
    assert 0.0 <= report.mean_distance <= 1.0
    assert "Recovery rate" in report.table()

    empty = noise.recovery_report(bn, [])
    assert empty.words == 0
    assert empty.recovery_rate == 1.0
