"""
Reading and writing sequence files, and loading YAML settings

A sequence file looks like::

    # anything after a hash is a comment
    level: 3
    1 1 3 2 1
    3,3,1,2,3
    1 1 2 2 1

The first non-comment line declares the level. It may be followed by
``alphabet: letters``, in which case rows are written with letters (a = 1, b = 2, ...).
Every remaining line is one sequence. Sequences are rows, not columns.
"""

import dataclasses
import logging
import os
import re
import string
from collections.abc import Iterable
from typing import Union

import yaml

from seqpat._core import exceptions
from seqpat._core.sequence import Sequence, SequenceSet

logger: logging.Logger = logging.getLogger(__name__)

_HEADER = re.compile(r"^(?P<key>[a-z_]+)\s*:\s*(?P<value>\S+)$")
_SEPARATORS = re.compile(r"[\s,]+")

ALPHABETS = ("numbers", "letters")


@dataclasses.dataclass(frozen=True)
class InputDocument:
    """Parsed sequence file

    Attributes:
        level: declared level
        rows: one sequence per line, all of equal length
        alphabet: how symbols were written in the file
    """

    level: int
    rows: tuple[Sequence, ...]
    alphabet: str = "numbers"

    def sequence_set(self) -> SequenceSet:
        """Raises ArityError when the file holds fewer than two rows"""
        return SequenceSet(self.rows)


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0].strip()


def _parse_row(text: str, alphabet: str, lineno: int) -> list[int]:
    if alphabet == "letters":
        letters = [ch for ch in text if not ch.isspace() and ch != ","]
        symbols = []
        for ch in letters:
            if ch.lower() not in string.ascii_lowercase:
                raise exceptions.InputParseError(f"'{ch}' is not a letter", lineno)
            symbols.append(string.ascii_lowercase.index(ch.lower()) + 1)
        return symbols

    symbols = []
    for token in _SEPARATORS.split(text):
        if not token:
            continue
        if not (token.isascii() and token.isdigit()):
            raise exceptions.InputParseError(f"'{token}' is not a positive integer", lineno)
        symbols.append(int(token))
    return symbols


def parse_document(text: str) -> InputDocument:
    """Parse the contents of a sequence file

    Raises:
        InputParseError: missing header, bad symbols or rows of different lengths
    """
    level = None
    alphabet = "numbers"
    rows: list[Sequence] = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line:
            continue

        header = _HEADER.match(line)
        if level is None:
            if not header or header.group("key") != "level":
                raise exceptions.InputParseError("expected 'level: <n>' header", lineno)
            try:
                level = int(header.group("value"))
            except ValueError as e:
                raise exceptions.InputParseError("level must be an integer", lineno) from e
            if level < 1:
                raise exceptions.InputParseError("level must be >= 1", lineno)
            continue

        if header and not rows:
            if header.group("key") != "alphabet" or header.group("value") not in ALPHABETS:
                raise exceptions.InputParseError(f"unknown header '{line}'", lineno)
            alphabet = header.group("value")
            continue

        symbols = _parse_row(line, alphabet, lineno)
        if rows and len(symbols) != rows[0].length:
            raise exceptions.InputParseError(
                f"row has {len(symbols)} symbols, expected {rows[0].length}", lineno
            )
        try:
            rows.append(Sequence(tuple(symbols), level))
        except exceptions.SeqpatException as e:
            raise exceptions.InputParseError(str(e), lineno) from e

    if level is None:
        raise exceptions.InputParseError("empty document, expected 'level: <n>' header")
    if not rows:
        raise exceptions.InputParseError("document has no sequences")

    logger.debug("parsed %d sequences of length %d, level %d", len(rows), rows[0].length, level)
    return InputDocument(level=level, rows=tuple(rows), alphabet=alphabet)


def load_document(filename: Union[str, os.PathLike]) -> InputDocument:
    try:
        with open(filename, encoding="utf-8") as fileobj:
            text = fileobj.read()
    except OSError as e:
        raise exceptions.InputParseError(f"cannot read '{filename}': {e}") from e
    return parse_document(text)


def dump_document(
    sequences: Iterable[Sequence], level: int, comments: Iterable[str] = ()
) -> str:
    """Render sequences as a sequence file that parse_document reads back"""
    lines = [f"level: {level}"]
    lines.extend(" ".join(str(e) for e in q.elements) for q in sequences)
    lines.extend(f"# {comment}" for comment in comments)
    return "\n".join(lines) + "\n"


def load_single_document_yaml(filename: Union[str, os.PathLike]) -> dict:
    """
    Load a yaml file and expect only one document

    Args:
        filename: path to document

    Returns:
        content of file

    Raises:
        UnexpectedDocumentsError: If more than one document was in the file
        InvalidSettingsError: If the file could not be read or parsed
    """
    try:
        with open(filename, encoding="utf-8") as fileobj:
            documents = list(yaml.safe_load_all(fileobj))
    except OSError as e:
        raise exceptions.InvalidSettingsError(f"cannot read settings file '{filename}'") from e
    except yaml.YAMLError as e:
        raise exceptions.InvalidSettingsError(f"invalid YAML in '{filename}'") from e

    if len(documents) > 1:
        msg = "Expected only one document in this file but found multiple"
        raise exceptions.UnexpectedDocumentsError(msg)

    return documents[0] if documents else {}
