import random
from textwrap import dedent

import pytest

from seqpat._core.general import load_global_config
from seqpat._core.sequence import Sequence, SequenceSet

# Three length-5 level-3 sequences; cross sections [1,3,1] [1,3,1] [3,1,2] [2,2,2] [1,3,1]
_THREE_SEQUENCES = """\
# q1, q2 and q3
level: 3
1 1 3 2 1
3,3,1,2,3
1 1 2 2 1
"""


@pytest.fixture(name="three_sequences")
def fix_three_sequences() -> SequenceSet:
    return SequenceSet(
        (
            Sequence((1, 1, 3, 2, 1), 3),
            Sequence((3, 3, 1, 2, 3), 3),
            Sequence((1, 1, 2, 2, 1), 3),
        )
    )


@pytest.fixture(name="three_sequences_file")
def fix_three_sequences_file(tmp_path):
    path = tmp_path / "three.txt"
    path.write_text(_THREE_SEQUENCES)
    return str(path)


@pytest.fixture(name="write_document")
def fix_write_document(tmp_path):
    """Write some text to a fresh file and return its path"""
    counter = iter(range(1000))

    def write(text: str) -> str:
        path = tmp_path / f"doc_{next(counter)}.txt"
        path.write_text(dedent(text), encoding="utf-8")
        return str(path)

    return write


@pytest.fixture(name="settings")
def fix_settings():
    return load_global_config()


@pytest.fixture(name="random_set")
def fix_random_set():
    """Random sequence sets from a seeded generator"""

    def make(rng: random.Random, n: int, level: int, k: int) -> SequenceSet:
        return SequenceSet(
            tuple(
                Sequence(tuple(rng.randint(1, level) for _ in range(n)), level)
                for _ in range(k)
            )
        )

    return make
