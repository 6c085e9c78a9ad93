"""Alphabets, words, presentations, and shapes.

Words are plain Python strings over single-character symbols; the empty
string is the empty word. A presentation pairs a finite alphabet with an
ordered sequence of relations (ordered pairs of words) and a kind, monoid
or semigroup; semigroup presentations must not contain an empty relation
word.

A presentation with k relations and total relation-word length n is
equivalent to the pair (concatenated word of length n, shape), where the
shape records the lengths of the 2k relation words in the fixed slot
order lhs1, rhs1, lhs2, rhs2, ...  ``assemble`` and ``decompose`` realize
the two directions of that correspondence.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

MONOID = "monoid"
SEMIGROUP = "semigroup"
KINDS = (MONOID, SEMIGROUP)

#: Text-format token for the empty word.
EMPTY_WORD_TOKEN = "1"

_RESERVED_SYMBOLS = {EMPTY_WORD_TOKEN, "="}

_DEFAULT_SYMBOLS = "abcdefghijklmnopqrstuvwxyz"


class ParseError(ValueError):
    """Malformed ``.pres`` text; carries the 1-based source line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class Alphabet:
    """Ordered finite alphabet of distinct single-character symbols.

    Symbols must be printable, non-whitespace, and distinct from the
    reserved tokens ``1`` (empty word) and ``=``. The position of a
    symbol in ``symbols`` is its index; word comparisons are by length,
    then lexicographically by index.
    """

    symbols: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "symbols", tuple(self.symbols))
        if not self.symbols:
            raise ValueError("alphabet must contain at least one symbol")
        seen = set()
        for sym in self.symbols:
            if len(sym) != 1 or not sym.isprintable() or sym.isspace():
                raise ValueError(f"invalid alphabet symbol {sym!r}")
            if sym in _RESERVED_SYMBOLS:
                raise ValueError(f"symbol {sym!r} is reserved")
            if sym in seen:
                raise ValueError(f"duplicate alphabet symbol {sym!r}")
            seen.add(sym)

    @classmethod
    def default(cls, size: int) -> "Alphabet":
        """The alphabet a, b, c, ... of the given size (at most 26)."""
        if not 1 <= size <= len(_DEFAULT_SYMBOLS):
            raise ValueError(f"default alphabet size must be in 1..26, got {size}")
        return cls(tuple(_DEFAULT_SYMBOLS[:size]))

    @property
    def size(self) -> int:
        return len(self.symbols)

    @cached_property
    def _index(self) -> dict[str, int]:
        return {sym: i for i, sym in enumerate(self.symbols)}

    def index(self, symbol: str) -> int:
        return self._index[symbol]

    def contains_word(self, word: str) -> bool:
        index = self._index
        return all(c in index for c in word)

    def word_key(self, word: str) -> tuple[int, tuple[int, ...]]:
        """Sort key realizing the canonical order: length, then index-lex."""
        index = self._index
        return (len(word), tuple(index[c] for c in word))

    def words_of_length(self, length: int) -> Iterator[str]:
        """All words of the given length in index-lexicographic order."""
        for letters in itertools.product(self.symbols, repeat=length):
            yield "".join(letters)

    def word_count(self, max_length: int, min_length: int = 0) -> int:
        """Number of words with min_length <= |w| <= max_length."""
        if max_length < min_length:
            return 0
        return sum(self.size**i for i in range(min_length, max_length + 1))

    def unrank_word(self, rank: int, length: int) -> str:
        """The rank-th word of the given length, in index-lex order."""
        letters = []
        for _ in range(length):
            rank, digit = divmod(rank, self.size)
            letters.append(self.symbols[digit])
        return "".join(reversed(letters))


@dataclass(frozen=True)
class Shape:
    """Ordered relation-word lengths of a presentation: a weak composition
    of the total length into 2k blocks."""

    blocks: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(self.blocks))
        if len(self.blocks) % 2 != 0:
            raise ValueError("shape must have an even number of blocks (2 per relation)")
        if any(b < 0 for b in self.blocks):
            raise ValueError("shape blocks must be non-negative")

    @property
    def total(self) -> int:
        """Sum of the relation-word lengths."""
        return sum(self.blocks)

    @property
    def min_block(self) -> int:
        """Length of the shortest relation word."""
        return min(self.blocks)

    @property
    def max_block(self) -> int:
        return max(self.blocks)

    @property
    def relation_count(self) -> int:
        return len(self.blocks) // 2


@dataclass(frozen=True)
class Presentation:
    """A finite monoid or semigroup presentation.

    ``relations`` is an ordered sequence of (lhs, rhs) word pairs; order
    and orientation are significant, and repeats are allowed.
    """

    alphabet: Alphabet
    relations: tuple[tuple[str, str], ...]
    kind: str = MONOID

    def __post_init__(self):
        object.__setattr__(
            self, "relations", tuple((lhs, rhs) for lhs, rhs in self.relations)
        )
        if self.kind not in KINDS:
            raise ValueError(f"kind must be one of {KINDS}, got {self.kind!r}")
        for lhs, rhs in self.relations:
            for word in (lhs, rhs):
                if self.kind == SEMIGROUP and not word:
                    raise ValueError("semigroup relation words must be non-empty")
                if not self.alphabet.contains_word(word):
                    raise ValueError(f"word {word!r} uses symbols outside the alphabet")

    @property
    def relation_count(self) -> int:
        return len(self.relations)

    @property
    def relation_words(self) -> tuple[str, ...]:
        """The 2k relation words in slot order lhs1, rhs1, lhs2, rhs2, ..."""
        return tuple(w for pair in self.relations for w in pair)

    @property
    def sum_length(self) -> int:
        return sum(len(w) for w in self.relation_words)

    @property
    def max_length(self) -> int:
        return max((len(w) for w in self.relation_words), default=0)

    def shape(self) -> Shape:
        return Shape(tuple(len(w) for w in self.relation_words))


@dataclass(frozen=True)
class UnorderedPresentation:
    """Canonical form of a presentation after forgetting relation order.

    Each relation is stored as a pair sorted by the canonical word order,
    the pairs themselves are sorted, and duplicates are removed, so two
    unordered presentations are equal iff they have the same relation set.
    """

    alphabet: Alphabet
    relation_set: tuple[tuple[str, str], ...]
    kind: str = MONOID

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"kind must be one of {KINDS}, got {self.kind!r}")
        canonical = _canonical_relation_set(self.alphabet, self.relation_set)
        object.__setattr__(self, "relation_set", canonical)

    @property
    def relation_count(self) -> int:
        return len(self.relation_set)

    @property
    def relation_words(self) -> tuple[str, ...]:
        return tuple(w for pair in self.relation_set for w in pair)

    @property
    def sum_length(self) -> int:
        return sum(len(w) for w in self.relation_words)

    @property
    def max_length(self) -> int:
        return max((len(w) for w in self.relation_words), default=0)


def _canonical_relation_set(
    alphabet: Alphabet, pairs: Sequence[tuple[str, str]]
) -> tuple[tuple[str, str], ...]:
    key = alphabet.word_key
    canonical = {tuple(sorted(pair, key=key)) for pair in pairs}
    return tuple(sorted(canonical, key=lambda p: (key(p[0]), key(p[1]))))


def assemble(
    alphabet: Alphabet, word: str, shape: Shape, kind: str = MONOID
) -> Presentation:
    """Rebuild the presentation whose concatenated relation words are
    ``word`` and whose relation-word lengths are ``shape``.

    Inverse of :func:`decompose`.
    """
    if len(word) != shape.total:
        raise ValueError(
            f"word length {len(word)} does not match shape total {shape.total}"
        )
    slices = []
    offset = 0
    for block in shape.blocks:
        slices.append(word[offset : offset + block])
        offset += block
    relations = tuple(zip(slices[::2], slices[1::2]))
    return Presentation(alphabet, relations, kind)


def decompose(presentation: Presentation) -> tuple[str, Shape]:
    """The (concatenated word, shape) pair determining the presentation."""
    words = presentation.relation_words
    return "".join(words), Shape(tuple(len(w) for w in words))


def forget_order(presentation: Presentation) -> UnorderedPresentation:
    """Forget relation order and orientation; collapse duplicate relations."""
    return UnorderedPresentation(
        presentation.alphabet, presentation.relations, presentation.kind
    )


def semigroup_as_monoid(presentation: Presentation) -> Presentation:
    """View a semigroup presentation as the monoid presentation with the
    same relations. Injective and shape-preserving."""
    if presentation.kind != SEMIGROUP:
        raise ValueError("expected a semigroup presentation")
    return Presentation(presentation.alphabet, presentation.relations, MONOID)


def _parse_word(token: str, alphabet: Alphabet, line_no: int) -> str:
    if token == EMPTY_WORD_TOKEN:
        return ""
    for c in token:
        if not alphabet.contains_word(c):
            raise ParseError(f"unknown symbol {c!r} in word {token!r}", line_no)
    return token


def parse(text: str) -> Presentation:
    """Parse the ``.pres`` text format.

    Line-oriented: an ``alphabet:`` line first, a ``kind:`` line, then one
    ``rel: <word> = <word>`` line per relation. ``1`` denotes the empty
    word. Lines starting with ``#`` and blank lines are ignored.
    """
    alphabet: Alphabet | None = None
    kind: str | None = None
    relations: list[tuple[str, str]] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if alphabet is None:
            if not line.startswith("alphabet:"):
                raise ParseError("expected 'alphabet:' as the first directive", line_no)
            symbols = line[len("alphabet:") :].split()
            if not symbols:
                raise ParseError("alphabet line lists no symbols", line_no)
            try:
                alphabet = Alphabet(tuple(symbols))
            except ValueError as exc:
                raise ParseError(str(exc), line_no) from exc
        elif kind is None:
            if not line.startswith("kind:"):
                raise ParseError("expected 'kind:' after the alphabet", line_no)
            value = line[len("kind:") :].strip()
            if value not in KINDS:
                raise ParseError(f"kind must be 'monoid' or 'semigroup', got {value!r}", line_no)
            kind = value
        else:
            if not line.startswith("rel:"):
                raise ParseError("expected a 'rel:' line", line_no)
            tokens = line[len("rel:") :].split()
            if len(tokens) != 3 or tokens[1] != "=":
                raise ParseError("relation must have the form 'rel: <word> = <word>'", line_no)
            lhs = _parse_word(tokens[0], alphabet, line_no)
            rhs = _parse_word(tokens[2], alphabet, line_no)
            if kind == SEMIGROUP and ("" in (lhs, rhs)):
                raise ParseError("empty relation word in a semigroup presentation", line_no)
            relations.append((lhs, rhs))
    if alphabet is None:
        raise ParseError("missing 'alphabet:' line")
    if kind is None:
        raise ParseError("missing 'kind:' line")
    return Presentation(alphabet, tuple(relations), kind)


def serialize(presentation: Presentation) -> str:
    """Canonical ``.pres`` text; ``parse(serialize(p)) == p``."""
    lines = [
        "alphabet: " + " ".join(presentation.alphabet.symbols),
        f"kind: {presentation.kind}",
    ]
    for lhs, rhs in presentation.relations:
        lines.append(
            f"rel: {lhs or EMPTY_WORD_TOKEN} = {rhs or EMPTY_WORD_TOKEN}"
        )
    return "\n".join(lines) + "\n"
