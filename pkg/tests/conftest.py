"""
Shared fixtures for the tests of the `abugida` package.

The size of the fuzzing runs can be raised through environment variables,
e.g. `ABUGIDA_FUZZ_WORDS=100000 ABUGIDA_ORACLE_LENGTH=8 pytest`. The parser
throughput floor, in words per second, is set with `ABUGIDA_MIN_THROUGHPUT`;
zero skips the throughput test on slow machines.
"""

# Import Python standard libraries
import os

# Import 3rd-party libraries
import pytest

# Import the library being tested
from abugida.script_spec import load_bundled_spec

FUZZ_WORDS = int(os.environ.get("ABUGIDA_FUZZ_WORDS", "2000"))
ORACLE_LENGTH = int(os.environ.get("ABUGIDA_ORACLE_LENGTH", "4"))
MIN_THROUGHPUT = float(os.environ.get("ABUGIDA_MIN_THROUGHPUT", "100000"))


@pytest.fixture
def bn():
    return load_bundled_spec("bn")


@pytest.fixture
def deva():
    return load_bundled_spec("deva")


@pytest.fixture
def fuzz_words():
    return FUZZ_WORDS


@pytest.fixture
def oracle_length():
    return ORACLE_LENGTH


@pytest.fixture
def min_throughput():
    if MIN_THROUGHPUT <= 0:
        pytest.skip("throughput test disabled by ABUGIDA_MIN_THROUGHPUT")
    return MIN_THROUGHPUT

