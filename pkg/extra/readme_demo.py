"""
Command-line script for generating the demo table for README files.
"""

import abugida
import tabulate

# One broken word per script, with the error it carries
DEMO = [
    ["bn", "আমার্", "trailing connector"],
    ["bn", "যুদ্্ধ", "doubled connector"],
    ["bn", "উত্", "khanda ta"],
    ["bn", "ৰাজা", "Assamese ra"],
    ["bn", "\u09af\u09bc\u09be", "decomposed nukta"],
    ["bn", "\u0995\u09c7\u09be", "decomposed vowel sign"],
    ["deva", "पुुस्तक", "doubled vowel sign"],
    ["guru", "ਅਾਮ", "vowel sign after vowel"],
    ["ta", "\u0b95\u0bc6\u0bbe\u0b9f\u0bc1", "decomposed vowel sign"],
]


def main():
    ret = []
    for script, word, error in DEMO:
        normalized, report = abugida.normalize_word(abugida.load_bundled_spec(script), word)
        fixes = ", ".join(entry.fix.value for entry in report)
        ret.append([script, error, fixes, " | ".join(abugida.graphemes(normalized, script))])

    print(
        tabulate.tabulate(
            ret,
            headers=["Script", "Error", "Fixes", "Graphemes"],
            tablefmt="github",
        )
    )


if __name__ == "__main__":
    main()
