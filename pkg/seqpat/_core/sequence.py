"""
Sequences, permutations, patterns and cross sections

A sequence of length n and level l is a function from {1..n} to the symbols {1..l},
stored as a tuple of 1-based integers. A pattern is the class of all sequences that
can be reached from each other by relabelling symbols with a permutation of {1..l};
it is represented by its unique sequence in standard order.

All values here are immutable and every function is pure.
"""

import dataclasses
import itertools
import logging
from collections.abc import Iterable, Iterator, Sequence as _SequenceABC

from seqpat._core import exceptions

logger: logging.Logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class Sequence:
    """A length-n level-l sequence

    Attributes:
        elements: symbols, each in 1..level
        level: size of the symbol set, independent of which symbols occur
    """

    elements: tuple[int, ...]
    level: int

    def __post_init__(self) -> None:
        if not isinstance(self.elements, tuple):
            object.__setattr__(self, "elements", tuple(self.elements))

        if self.level < 1:
            raise exceptions.InvalidParameter(f"level must be >= 1, got {self.level}")
        if not self.elements:
            raise exceptions.EmptySequence("a sequence needs at least one element")

        for index, e in enumerate(self.elements, start=1):
            if not 1 <= e <= self.level:
                raise exceptions.SymbolOutOfRange(
                    f"element {e} at index {index} is outside 1..{self.level}"
                )

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __getitem__(self, index: int) -> int:
        return self.elements[index]

    @property
    def length(self) -> int:
        return len(self.elements)

    def __str__(self) -> str:
        return "[" + ",".join(str(e) for e in self.elements) + "]"


def new_sequence(elements: Iterable[int], level: int) -> Sequence:
    """Validate and build a sequence

    Example:

        >>> new_sequence([1, 1, 3, 2, 1], 3).length
        5

    Raises:
        SymbolOutOfRange: an element is not in 1..level
        EmptySequence: no elements were given
    """
    return Sequence(tuple(elements), level)


@dataclasses.dataclass(frozen=True)
class Permutation:
    """A bijection on {1..l} stored as an image table

    ``images[s - 1]`` is the image of symbol ``s``.
    """

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.images, tuple):
            object.__setattr__(self, "images", tuple(self.images))

        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise exceptions.InvalidPermutation(
                f"{list(self.images)} is not a bijection on 1..{len(self.images)}"
            )

    @property
    def order(self) -> int:
        """Number of symbols the permutation acts on"""
        return len(self.images)

    def __call__(self, symbol: int) -> int:
        return self.images[symbol - 1]

    def compose(self, other: "Permutation") -> "Permutation":
        """self after other, ie. s -> self(other(s))"""
        if other.order != self.order:
            raise exceptions.LevelMismatch(
                f"cannot compose permutations of order {self.order} and {other.order}"
            )
        return Permutation(tuple(self(other(s)) for s in range(1, self.order + 1)))

    def inverse(self) -> "Permutation":
        inverted = [0] * self.order
        for source, image in enumerate(self.images, start=1):
            inverted[image - 1] = source
        return Permutation(tuple(inverted))

    def is_identity(self) -> bool:
        return all(image == s for s, image in enumerate(self.images, start=1))


def identity(level: int) -> Permutation:
    return Permutation(tuple(range(1, level + 1)))


def compose(phi: Permutation, psi: Permutation) -> Permutation:
    return phi.compose(psi)


def inverse(phi: Permutation) -> Permutation:
    return phi.inverse()


def all_permutations(level: int) -> Iterator[Permutation]:
    """Every element of S_level, in lexicographic order of image tables"""
    for images in itertools.permutations(range(1, level + 1)):
        yield Permutation(images)


def apply_permutation(q: Sequence, phi: Permutation) -> Sequence:
    """Relabel every element of q with phi

    Raises:
        LevelMismatch: phi does not act on exactly q.level symbols
    """
    if phi.order != q.level:
        raise exceptions.LevelMismatch(
            f"permutation of order {phi.order} applied to a level {q.level} sequence"
        )
    return Sequence(tuple(phi.images[e - 1] for e in q.elements), q.level)


def standardize(q: Sequence) -> Sequence:
    """Relabel symbols by order of first occurrence

    Example:

        >>> str(standardize(new_sequence([2, 2, 1, 3, 2], 3)))
        '[1,1,2,3,1]'
    """
    relabel: dict[int, int] = {}
    out = []
    for e in q.elements:
        if e not in relabel:
            relabel[e] = len(relabel) + 1
        out.append(relabel[e])
    return Sequence(tuple(out), q.level)


def is_standard(q: Sequence) -> bool:
    """Every symbol v > 1 is preceded somewhere by v - 1"""
    running_max = 0
    for e in q.elements:
        if e > running_max + 1:
            return False
        running_max = max(running_max, e)
    return True


def _check_same_shape(q: Sequence, p: Sequence) -> None:
    if q.length != p.length or q.level != p.level:
        raise exceptions.ShapeMismatch(
            f"(length {q.length}, level {q.level}) vs (length {p.length}, level {p.level})"
        )


def equivalent(q: Sequence, p: Sequence) -> bool:
    """Whether some permutation maps q onto p

    Raises:
        ShapeMismatch: lengths or levels differ
    """
    _check_same_shape(q, p)
    return standardize(q) == standardize(p)


@dataclasses.dataclass(frozen=True)
class Pattern:
    """Equivalence class of sequences under relabelling, keyed by its standard sequence"""

    canonical: Sequence

    def __post_init__(self) -> None:
        if not is_standard(self.canonical):
            raise exceptions.InvalidParameter(
                f"{self.canonical} is not in standard order, use pattern_of()"
            )

    @property
    def level(self) -> int:
        return self.canonical.level

    @property
    def length(self) -> int:
        return self.canonical.length

    def representatives(self) -> Iterator[Sequence]:
        """Every distinct sequence in the class"""
        seen: set[Sequence] = set()
        for phi in all_permutations(self.level):
            image = apply_permutation(self.canonical, phi)
            if image not in seen:
                seen.add(image)
                yield image

    def __str__(self) -> str:
        return f"[{self.canonical}]"


def pattern_of(q: Sequence) -> Pattern:
    return Pattern(standardize(q))


def is_constant_pattern(t: Pattern) -> bool:
    """A pattern is constant if it contains a constant sequence"""
    return all(e == 1 for e in t.canonical.elements)


@dataclasses.dataclass(frozen=True)
class CrossSection:
    """The i-th elements of k sequences, read across the set"""

    elements: tuple[int, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.elements, tuple):
            object.__setattr__(self, "elements", tuple(self.elements))

        if len(self.elements) < 2:
            raise exceptions.ArityError(
                f"a cross section needs at least 2 elements, got {len(self.elements)}"
            )
        if any(e < 1 for e in self.elements):
            raise exceptions.SymbolOutOfRange(
                f"cross section {list(self.elements)} contains a symbol below 1"
            )

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __getitem__(self, index: int) -> int:
        return self.elements[index]

    def __str__(self) -> str:
        return "[" + ",".join(str(e) for e in self.elements) + "]"


def is_constant(c: CrossSection) -> bool:
    return len(set(c.elements)) == 1


@dataclasses.dataclass(frozen=True)
class SequenceSet:
    """An ordered set Q of k >= 2 sequences sharing length and level"""

    sequences: tuple[Sequence, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.sequences, tuple):
            object.__setattr__(self, "sequences", tuple(self.sequences))

        if len(self.sequences) < 2:
            raise exceptions.ArityError(
                f"a sequence set needs k >= 2 sequences, got {len(self.sequences)}"
            )

        first = self.sequences[0]
        for other in self.sequences[1:]:
            _check_same_shape(first, other)

    @classmethod
    def from_cross_sections(
        cls, rows: _SequenceABC[_SequenceABC[int]], level: int
    ) -> "SequenceSet":
        """Build Q from its cross sections, ie. transpose rows into sequences"""
        if not rows:
            raise exceptions.EmptySequence("no cross sections given")
        columns = zip(*rows, strict=True)
        return cls(tuple(Sequence(tuple(column), level) for column in columns))

    @property
    def k(self) -> int:
        return len(self.sequences)

    @property
    def length(self) -> int:
        return self.sequences[0].length

    @property
    def level(self) -> int:
        return self.sequences[0].level

    def __iter__(self) -> Iterator[Sequence]:
        return iter(self.sequences)

    def __len__(self) -> int:
        return len(self.sequences)

    def apply(self, perms: _SequenceABC[Permutation]) -> "SequenceSet":
        """Phi(Q): apply the i-th permutation to the i-th sequence"""
        if len(perms) != self.k:
            raise exceptions.ArityError(
                f"{len(perms)} permutations given for {self.k} sequences"
            )
        return SequenceSet(
            tuple(apply_permutation(q, phi) for q, phi in zip(self.sequences, perms))
        )

    def standardized(self) -> "SequenceSet":
        """Same patterns, canonical representatives"""
        return SequenceSet(tuple(standardize(q) for q in self.sequences))

    def patterns(self) -> list[Pattern]:
        return [pattern_of(q) for q in self.sequences]


def cross_sections(Q: SequenceSet) -> list[CrossSection]:
    """The n cross sections of Q in index order"""
    return [CrossSection(row) for row in zip(*(q.elements for q in Q.sequences))]
