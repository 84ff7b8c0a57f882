class SeqpatException(Exception):
    """Base exception

    Fields are internal and might change in future without warning
    """


class SymbolOutOfRange(SeqpatException, ValueError):
    """A sequence element was outside of 1..level"""


class EmptySequence(SeqpatException, ValueError):
    """Tried to build a sequence with no elements"""


class LevelMismatch(SeqpatException, ValueError):
    """A permutation was applied to a sequence of a different level"""


class ShapeMismatch(SeqpatException, ValueError):
    """Sequences, patterns or cross sections did not share length and level"""


class ArityError(SeqpatException, ValueError):
    """Wrong number of sequences/patterns for the operation (usually k < 2)"""


class InvalidParameter(SeqpatException, ValueError):
    """Length, level or set size out of range"""


class InvalidPermutation(SeqpatException, ValueError):
    """Image table or cycle notation did not describe a bijection"""


class NotConnected(SeqpatException):
    """Cross sections passed to the witness construction were not pairwise connected"""

    def __init__(self, first, second) -> None:
        super().__init__(
            f"cross sections {list(first)} and {list(second)} are neither identical nor incompatible"
        )
        self.pair = (first, second)


class TooManySections(SeqpatException):
    """More distinct pairwise incompatible cross sections than there are symbols"""


class NotInFirstClass(SeqpatException, ValueError):
    """A link can only be generated from a cross section whose first element is 1"""


class SearchSpaceTooLarge(SeqpatException):
    """A brute force check would exceed the configured search budget"""

    def __init__(self, size: int, budget: int) -> None:
        super().__init__(
            f"search space of {size} permutation tuples exceeds budget of {budget}"
        )
        self.size = size
        self.budget = budget


class InputParseError(SeqpatException):
    """Input document could not be parsed"""

    def __init__(self, msg: str, lineno: int | None = None) -> None:
        if lineno is not None:
            msg = f"line {lineno}: {msg}"
        super().__init__(msg)
        self.lineno = lineno


class BadSchemaError(SeqpatException):
    """Schema mismatch"""


class InvalidSettingsError(SeqpatException):
    """Settings were passed incorrectly in some fashion"""


class UnexpectedDocumentsError(SeqpatException):
    """Multiple documents were found in a YAML file when only one was expected"""


class PluginLoadError(SeqpatException):
    """Error loading a distance backend"""


class VerificationError(SeqpatException):
    """Independent routes to the same quantity disagreed"""

    def __init__(self, msg, results=None) -> None:
        super().__init__(msg)
        self.results = results or {}
