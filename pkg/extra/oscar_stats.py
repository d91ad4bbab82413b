"""
Command-line script for the word-level statistics of a local OSCAR dump.

The dump is not downloaded: point the script to one or more `.jsonl` (or
`.jsonl.gz`) files, whose records hold the document text in the `content`
field (or in `text`, for older releases).

    python extra/oscar_stats.py --script bn bn_meta_part_1.jsonl.gz bn_meta_part_2.jsonl.gz
"""

import argparse
import gzip
import json

import abugida
from abugida.corpus import corpus_stats, stats_table


def iter_lines(paths):
    for path in paths:
        opener = gzip.open if path.endswith(".gz") else open
        with opener(path, "rt", encoding="utf-8") as handler:
            for line in handler:
                if not line.strip():
                    continue
                record = json.loads(line)
                text = record.get("content", record.get("text", ""))
                yield from text.splitlines()


def main():
    parser = argparse.ArgumentParser(description="Normalization statistics of OSCAR files.")
    parser.add_argument("files", nargs="+", help="jsonl files, optionally gzipped")
    parser.add_argument("--script", choices=abugida.SCRIPTS, default="bn")
    parser.add_argument("--format", choices=("table", "json"), default="table")
    args = parser.parse_args()

    spec = abugida.load_bundled_spec(args.script)
    stats = corpus_stats(spec, iter_lines(args.files), progress=True)

    if args.format == "json":
        print(json.dumps(stats.to_record(), ensure_ascii=False))
    else:
        print(stats_table([stats]))


if __name__ == "__main__":
    main()
