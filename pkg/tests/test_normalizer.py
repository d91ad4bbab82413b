"""
test_normalizer
===============

Tests for the `normalizer` module of the `abugida` package.

Expected values are hard-coded; codepoints that are invisible or easily
confused with a precomposed form are written as escapes.
"""

# Import Python standard libraries
import logging

# Import 3rd-party libraries
import pytest

# Import the library being tested
from abugida import common
from abugida import normalizer
from abugida.noise import random_codepoint_words
from abugida.normalizer import FixKind, NormalizationReport, NormalizerOptions
from abugida.script_spec import SCRIPTS, CodepointClass, load_bundled_spec

ZWNJ = "\u200c"
ZWSP = "\u200b"


# Examples of every kind of correction for Bangla, as input, expected
# output, and a fix kind that must be reported
@pytest.mark.parametrize(
    "word,expected,fix",
    [
        ["আমার্", "আমার", FixKind.INVALID_CONNECTOR],
        ["চু্ক্তি", "চুক্তি", FixKind.INVALID_CONNECTOR],
        ["যুদ্্ধ", "যুদ্ধ", FixKind.UNWANTED_DOUBLE],
        ["উত্" + ZWNJ + "স", "উৎস", FixKind.TO_HOSONTO],
        ["উত্", "উৎ", FixKind.TO_HOSONTO],
        ["বি্ষ্প্দ", "বিষ্পদ", FixKind.COMPLEX_ROOT],
        ["ক্ক্ক", "ক্কক", FixKind.COMPLEX_ROOT],
        ["ৰাজা", "রাজা", FixKind.ASSAMESE_REPLACEMENT],
        ["ৱন", "বন", FixKind.ASSAMESE_REPLACEMENT],
        ["য়", "য়", FixKind.BROKEN_NUKTA],
        ["ড়", "ড়", FixKind.BROKEN_NUKTA],
        ["কো", "কো", FixKind.BROKEN_DIACRITIC],
        ["কৌ", "কৌ", FixKind.BROKEN_DIACRITIC],
        ["ক" + ZWSP + "ল", "কল", FixKind.INVALID_UNICODE],
        ["এে", "এ", FixKind.VOWEL_VOWEL_DIACRITIC],
        ["কঁা", "কাঁ", FixKind.DIACRITIC_FORM],
        ["১া", "১", FixKind.DIACRITIC_FORM],
        ["কিু", "কি", FixKind.DIACRITIC_FORM],
    ],
)
def test_normalize_word_bn(bn, word, expected, fix):
    normalized, report = normalizer.normalize_word(bn, word)
    assert normalized == expected
    assert fix in report.kinds()
    assert report.replay(word) == expected


@pytest.mark.parametrize(
    "word",
    ["কলম", "সংস্কৃতি", "ক্ষ", "উৎস", "রক্ষা", "কর্তব্য", "স্বাধীন", "১২৩", "ক্ত", "ঌ"],
)
def test_normalize_word_unchanged(bn, word):
    normalized, report = normalizer.normalize_word(bn, word)
    assert normalized == word
    assert len(report) == 0


def test_normalize_word_report(bn):
    normalized, report = normalizer.normalize_word(bn, "আমার্")
    assert normalized == "আমার"
    assert report.entries == [
        normalizer.ReportEntry(FixKind.INVALID_CONNECTOR, 4, "্", "")
    ]
    assert report.to_records() == [
        {"fix": "IC", "position": 4, "removed": "্", "inserted": ""}
    ]


def test_normalize_word_errors(bn):
    with pytest.raises(common.NotAWord):
        normalizer.normalize_word(bn, "")
    with pytest.raises(common.NotAWord):
        normalizer.normalize_word(bn, "আমার দুই")
    with pytest.raises(common.NotAWord):
        normalizer.normalize_word(bn, "আমার\n")

    # The trailing connector needs a second pass to confirm the fixpoint
    with pytest.raises(common.PassLimitExceeded):
        normalizer.normalize_word(bn, "আমার্", NormalizerOptions(max_passes=1))


def test_normalize_word_only_foreign(bn):
    normalized, report = normalizer.normalize_word(bn, "abc")
    assert normalized == ""
    assert report.kinds() == {FixKind.INVALID_UNICODE}
    assert len(report) == 3


@pytest.mark.parametrize(
    "script_code,word,expected",
    [
        ["deva", "काे", "को"],
        ["deva", "केा", "को"],
        ["deva", "ज़", "ज़"],
        ["deva", "किताब्", "किताब"],
        ["deva", "अाम", "अम"],
        ["deva", "नमस्ते", "नमस्ते"],
        ["deva", "पुु", "पु"],
        ["guru", "ਸ਼ੇਰ", "ਸ਼ੇਰ"],
        ["gu", "કેા", "કો"],
        ["or", "ଡ଼", "ଡ଼"],
        ["ta", "கொ", "கொ"],
        ["ml", "കൊ", "കൊ"],
    ],
)
def test_normalize_word_other_scripts(script_code, word, expected):
    spec = load_bundled_spec(script_code)
    normalized, report = normalizer.normalize_word(spec, word)
    assert normalized == expected
    assert report.replay(word) == expected


def test_bangla_extensions_only_for_bn(bn, deva):
    with pytest.raises(common.OptionsError):
        normalizer.normalize_word(deva, "क", NormalizerOptions(bangla_extensions=True))

    # Without the extensions, the doubled connector is a plain invalid connector
    options = NormalizerOptions(bangla_extensions=False)
    normalized, report = normalizer.normalize_word(bn, "যুদ্্ধ", options)
    assert normalized == "যুদ্ধ"
    assert report.kinds() == {FixKind.INVALID_CONNECTOR}

    # Assamese letters are kept without the extensions
    assert normalizer.normalize_word(bn, "ৰাজা", options)[0] == "ৰাজা"


@pytest.mark.parametrize("max_passes", [0, -1, 2.5, True])
def test_options_validation(max_passes):
    with pytest.raises(common.OptionsError):
        NormalizerOptions(max_passes=max_passes)


def test_map_legacy(bn, caplog):
    options = NormalizerOptions(map_legacy=True)
    assert normalizer.normalize_word(bn, "ঌ", options)[0] == "৯"
    assert normalizer.normalize_word(bn, "ৡ", options)[0] == "৯"

    guru = load_bundled_spec("guru")
    assert normalizer.normalize_word(guru, "ਕੵ", options)[0] == "ਕਯ"

    # Unmapped legacy codepoints are kept, flagged, and logged
    deva = load_bundled_spec("deva")
    with caplog.at_level(logging.WARNING):
        normalized, report = normalizer.normalize_word(deva, "ऌ", options)
    assert normalized == "ऌ"
    assert report.entries == [normalizer.ReportEntry(FixKind.LEGACY, 0, "ऌ", "ऌ")]
    assert "U+090C" in caplog.text


@pytest.mark.parametrize(
    "word,expected",
    [
        ["ঌ", "৯"],
        ["কলৡ", "কল৯"],
        ["কলম", "কলম"],
    ],
)
def test_fix_legacy(bn, word, expected):
    assert normalizer.fix_legacy(bn, word) == expected


@pytest.mark.parametrize(
    "word,expected",
    [
        ["ৰ", "র"],
        ["ৱ", "ব"],
        ["কলম", "কলম"],
    ],
)
def test_replace_assamese(bn, word, expected):
    assert normalizer.replace_assamese(bn, word) == expected


@pytest.mark.parametrize(
    "word,expected",
    [
        ["\u09c7\u09be", "\u09cb"],
        ["ক\u09c7\u09be", "ক\u09cb"],
        ["ক\u09cb", "ক\u09cb"],
        ["ক\u09be\u09c7", "ক\u09be\u09c7"],
    ],
)
def test_fix_broken_diacritics(bn, word, expected):
    assert normalizer.fix_broken_diacritics(bn, word) == expected


def test_fix_broken_diacritics_chain(deva):
    # Pairs are composed left to right
    assert normalizer.fix_broken_diacritics(deva, "काेा") == "कोा"
    assert normalizer.fix_broken_diacritics(deva, "केा") == "को"


@pytest.mark.parametrize(
    "word,expected",
    [
        ["য়", "য়"],
        ["ঢ়া", "ঢ়া"],
        ["ক়", "ক"],
        ["়ক", "ক"],
        ["কলম", "কলম"],
    ],
)
def test_fix_nukta(bn, word, expected):
    assert normalizer.fix_nukta(bn, word) == expected


def test_fix_nukta_deva(deva):
    assert normalizer.fix_nukta(deva, "ज़") == "ज़"
    assert normalizer.fix_nukta(deva, "क़लम") == "क़लम"


@pytest.mark.parametrize(
    "word,expected",
    [
        ["ত্" + ZWNJ, "ৎ"],
        ["উত্", "উৎ"],
        ["উত্া", "উৎা"],
        ["ত্ত", "ত্ত"],
        ["কলম", "কলম"],
    ],
)
def test_normalize_khanda_ta(bn, word, expected):
    assert normalizer.normalize_khanda_ta(bn, word) == expected


def test_normalize_khanda_ta_other_scripts(deva):
    assert normalizer.normalize_khanda_ta(deva, "त्") == "त्"


@pytest.mark.parametrize(
    "word,expected",
    [
        ["ক" + ZWSP + "ল", "কল"],
        ["কলম" + ZWNJ, "কলম"],
        ["abc", ""],
        ["কখ", "কখ"],
        ["কक", "ক"],
    ],
)
def test_remove_invalid_unicode(bn, word, expected):
    assert normalizer.remove_invalid_unicode(bn, word) == expected


def test_remove_invalid_unicode_referenced(bn):
    word = "ত্" + ZWNJ
    assert normalizer.remove_invalid_unicode(bn, word, keep_referenced=True) == word
    assert normalizer.remove_invalid_unicode(bn, word) == "ত্"


@pytest.mark.parametrize(
    "word,expected",
    [
        ["যুদ্্ধ", "যুদ্ধ"],
        ["কাা", "কা"],
        ["কাাা", "কা"],
        ["কংং", "কংং"],
        ["কলম", "কলম"],
    ],
)
def test_dedup_unwanted_doubles(bn, word, expected):
    assert normalizer.dedup_unwanted_doubles(bn, word) == expected


@pytest.mark.parametrize(
    "word,expected",
    [
        ["আমার্", "আমার"],
        ["চু্ক্তি", "চুক্তি"],
        ["্ক", "ক"],
        ["অ্ক", "অক"],
        ["ক্১", "ক১"],
        ["ক্ষ", "ক্ষ"],
        ["ক্ষ্ণ", "ক্ষ্ণ"],
        ["ক্্ষ", "ক্ষ"],
    ],
)
def test_fix_invalid_connectors(bn, word, expected):
    assert normalizer.fix_invalid_connectors(bn, word) == expected


def test_fix_invalid_connectors_khanda_ta(bn):
    assert normalizer.fix_invalid_connectors(bn, "উত্", keep_khanda_ta=True) == "উত্"
    assert normalizer.fix_invalid_connectors(bn, "উত্") == "উত"
    assert normalizer.fix_invalid_connectors(bn, "উত্া", keep_khanda_ta=True) == "উতা"


@pytest.mark.parametrize(
    "word,expected",
    [
        ["বিষ্প্দ", "বিষ্পদ"],
        ["ক্ক্ক", "ক্কক"],
        ["ক্ষ", "ক্ষ"],
        ["ক্ষ্ণ", "ক্ষ্ণ"],
        ["প্র", "প্র"],
        ["র্ক্ষ্য", "র্ক্ষ্য"],
        ["ঢ্ঢ", "ঢঢ"],
        ["সংস্কৃতি", "সংস্কৃতি"],
    ],
)
def test_normalize_complex_roots(bn, word, expected):
    report = NormalizationReport()
    assert normalizer.normalize_complex_roots(bn, word, report) == expected
    assert report.replay(word) == expected


@pytest.mark.parametrize(
    "word,expected",
    [
        ["দুুই", "দুই"],
        ["কঁা", "কাঁ"],
        ["কংঃা", "কাংঃ"],
        ["১া", "১"],
        ["।ং", "।"],
        ["\u09beক", "ক"],
        ["ক\u09c7\u09be", "ক\u09c7\u09be"],
        ["কিুু", "কি"],
        ["কাং", "কাং"],
    ],
)
def test_fix_diacritic_forms(bn, word, expected):
    report = NormalizationReport()
    assert normalizer.fix_diacritic_forms(bn, word, report) == expected
    assert report.replay(word) == expected


def test_fix_diacritic_forms_move_entry(bn):
    report = NormalizationReport()
    normalizer.fix_diacritic_forms(bn, "কংঃা", report)
    assert report.entries == [normalizer.ReportEntry(FixKind.DIACRITIC_FORM, 1, "ংঃা", "াংঃ")]


@pytest.mark.parametrize(
    "word,expected",
    [
        ["এে", "এ"],
        ["কে", "কে"],
        ["একে", "একে"],
        ["অাি", "অ"],
    ],
)
def test_remove_vowel_vowel_diacritic(bn, word, expected):
    assert normalizer.remove_vowel_vowel_diacritic(bn, word) == expected


def test_normalize_text(bn):
    changes = []
    text = "আমার্ দুই  কলম\tযুদ্্ধ\n"
    assert normalizer.normalize_text(bn, text, changes=changes) == "আমার দুই  কলম\tযুদ্ধ\n"
    assert [change[:2] for change in changes] == [("আমার্", "আমার"), ("যুদ্্ধ", "যুদ্ধ")]

    assert normalizer.normalize_text(bn, "") == ""
    assert normalizer.normalize_text(bn, " \n") == " \n"
    assert normalizer.normalize_text(bn, "abc কলম") == " কলম"


def test_report_replay_mismatch():
    report = NormalizationReport()
    report.add(FixKind.INVALID_CONNECTOR, 4, "্", "")
    with pytest.raises(ValueError):
        report.replay("আমার")


def test_fix_kind_labels():
    assert sorted(kind.value for kind in FixKind) == sorted(
        ["Legacy", "BD", "BN", "IU", "IC", "FD", "VDV", "UD", "CRN", "AR", "THN"]
    )


def _check_normalized(spec, word):
    classes = spec.classes
    for idx, char in enumerate(word):
        cls = classes.get(char)
        assert cls is not None and cls is not CodepointClass.FOREIGN
        prev_cls = classes.get(word[idx - 1]) if idx > 0 else None
        next_cls = classes.get(word[idx + 1]) if idx + 1 < len(word) else None
        if cls is CodepointClass.CONNECTOR:
            assert prev_cls is CodepointClass.CONSONANT
            assert next_cls is CodepointClass.CONSONANT
        if cls is CodepointClass.VOWEL_DIACRITIC:
            assert prev_cls not in (
                None,
                CodepointClass.VOWEL,
                CodepointClass.VOWEL_DIACRITIC,
                CodepointClass.CONSONANT_DIACRITIC,
            )


@pytest.mark.parametrize("script_code", SCRIPTS)
def test_normalizer_properties(script_code, fuzz_words):
    """
    Check idempotence, alphabet closure, connector and diacritic legality,
    and report replay over random codepoint sequences.
    """

    spec = load_bundled_spec(script_code)
    for word in random_codepoint_words(spec, fuzz_words, seed=13):
        normalized, report = normalizer.normalize_word(spec, word)
        assert report.replay(word) == normalized
        _check_normalized(spec, normalized)
        if normalized:
            again, again_report = normalizer.normalize_word(spec, normalized)
            assert again == normalized
            assert len(again_report) == 0


@pytest.mark.parametrize("script_code", SCRIPTS)
def test_normalizer_properties_legacy(script_code):
    spec = load_bundled_spec(script_code)
    options = NormalizerOptions(map_legacy=True)
    for word in random_codepoint_words(spec, 500, seed=29):
        normalized, report = normalizer.normalize_word(spec, word, options)
        assert report.replay(word) == normalized
        if normalized:
            assert normalizer.normalize_word(spec, normalized, options)[0] == normalized
