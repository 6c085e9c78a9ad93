"""Pieces and small overlap conditions.

A piece of a presentation is a non-empty word occurring as a factor of
the relation words at two or more distinct (slot, position) places,
where the slots are the 2k relation words in order; duplicate relation
words occupy distinct slots, and overlapping occurrences inside one word
count separately. The presentation satisfies C(m) if no relation word is
a product of strictly fewer than m pieces (the empty word is the product
of zero pieces).

The piece set is closed under non-empty factors, so greedy longest-match
decomposition is minimal; a dynamic-programming oracle is provided for
independent verification.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple

from .core import Presentation


class Occurrence(NamedTuple):
    """One occurrence of a factor: which relation word, and where."""

    slot: int
    start: int


class PieceIndex:
    """Factor-occurrence queries over the relation words of a presentation.

    Occurrence counting scans the slot words directly (``str.find``), and
    longest-piece queries binary-search on length, using that every
    non-empty prefix of a piece is a piece.
    """

    def __init__(self, words: Iterable[str]):
        self.words = tuple(words)
        self.max_word_length = max((len(w) for w in self.words), default=0)

    def occurrences(self, factor: str) -> list[Occurrence]:
        """All distinct (slot, start) occurrences of ``factor``."""
        if not factor:
            raise ValueError("occurrences of the empty word are not tracked")
        found = []
        for slot, word in enumerate(self.words):
            start = word.find(factor)
            while start != -1:
                found.append(Occurrence(slot, start))
                start = word.find(factor, start + 1)
        return found

    def occurrence_count(self, factor: str, limit: int | None = None) -> int:
        """Number of distinct occurrences, stopping early at ``limit``."""
        if not factor:
            raise ValueError("occurrences of the empty word are not tracked")
        count = 0
        for word in self.words:
            start = word.find(factor)
            while start != -1:
                count += 1
                if limit is not None and count >= limit:
                    return count
                start = word.find(factor, start + 1)
        return count

    def is_piece(self, word: str) -> bool:
        return bool(word) and self.occurrence_count(word, limit=2) >= 2

    def longest_piece_prefix(self, text: str, start: int = 0) -> int:
        """Length of the longest piece that prefixes ``text[start:]`` (0 if none)."""
        hi = min(len(text) - start, self.max_word_length)
        if hi <= 0 or not self.is_piece(text[start : start + 1]):
            return 0
        lo = 1
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if self.is_piece(text[start : start + mid]):
                lo = mid
            else:
                hi = mid - 1
        return lo

    def longest_piece_at(self, slot: int, start: int) -> int:
        """Length of the longest piece beginning at (slot, start)."""
        return self.longest_piece_prefix(self.words[slot], start)

    def has_piece_of_length(self, length: int) -> bool:
        """Whether some factor of the given length occurs at two places."""
        if length <= 0:
            raise ValueError("piece lengths are positive")
        seen = set()
        for word in self.words:
            for i in range(len(word) - length + 1):
                gram = word[i : i + length]
                if gram in seen:
                    return True
                seen.add(gram)
        return False

    def max_piece_length(self) -> int:
        """0 if the presentation has no pieces, else the longest piece length."""
        if self.max_word_length == 0 or not self.has_piece_of_length(1):
            return 0
        lo, hi = 1, self.max_word_length
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if self.has_piece_of_length(mid):
                lo = mid
            else:
                hi = mid - 1
        return lo

    def pieces(self) -> dict[str, int]:
        """All pieces with their occurrence counts.

        Builds the full factor-occurrence table, so this is quadratic in
        memory; fine at desk scale, not for bulk scans.
        """
        table: dict[str, int] = {}
        for word in self.words:
            for i in range(len(word)):
                for j in range(i + 1, len(word) + 1):
                    factor = word[i:j]
                    table[factor] = table.get(factor, 0) + 1
        return {factor: count for factor, count in table.items() if count >= 2}

    def greedy_decomposition_count(self, word: str, stop: int | None = None) -> int | None:
        """Minimal number of pieces multiplying to ``word`` (greedy, hence
        minimal), or None if no decomposition exists.

        With ``stop`` set, returns as soon as the count reaches it; the
        caller then only learns the count is >= stop (or None later).
        """
        position = 0
        count = 0
        length = len(word)
        while position < length:
            step = self.longest_piece_prefix(word, position)
            if step == 0:
                return None
            count += 1
            if stop is not None and count >= stop:
                return count
            position += step
        return count


def build_piece_index(presentation: Presentation) -> PieceIndex:
    """Piece index over the presentation's relation words (slot order)."""
    return PieceIndex(presentation.relation_words)


def max_piece_length(presentation: Presentation) -> int:
    return build_piece_index(presentation).max_piece_length()


def min_piece_decomposition(presentation: Presentation, word: str) -> int | None:
    """Minimal t such that ``word`` is a product of t pieces, or None if
    unreachable. The empty word is the product of zero pieces."""
    return build_piece_index(presentation).greedy_decomposition_count(word)


def min_piece_decomposition_dp(presentation: Presentation, word: str) -> int | None:
    """Dynamic-programming oracle for :func:`min_piece_decomposition`.

    Independent of the greedy path: tries every piece at every position.
    """
    index = build_piece_index(presentation)
    length = len(word)
    unreachable = length + 1
    best = [unreachable] * (length + 1)
    best[length] = 0
    for i in range(length - 1, -1, -1):
        limit = min(length - i, index.max_word_length)
        for step in range(1, limit + 1):
            if best[i + step] < unreachable and index.is_piece(word[i : i + step]):
                best[i] = min(best[i], 1 + best[i + step])
    return None if best[0] >= unreachable else best[0]


def _words_satisfy_c(index: PieceIndex, m: int) -> bool:
    for word in index.words:
        count = index.greedy_decomposition_count(word, stop=m)
        if count is not None and count < m:
            return False
    return True


def satisfies_c(presentation: Presentation, m: int) -> bool:
    """Whether the presentation satisfies the small overlap condition C(m)."""
    if m < 1:
        raise ValueError("C(m) requires m >= 1")
    return _words_satisfy_c(build_piece_index(presentation), m)


def overlap_degree(presentation: Presentation) -> int | None:
    """Largest m such that C(m) holds; None if C(m) holds for every m.

    Equals the minimum over relation words of their piece-decomposition
    counts; the degree is unbounded exactly when no relation word is a
    product of pieces at all.
    """
    index = build_piece_index(presentation)
    counts = [index.greedy_decomposition_count(w) for w in index.words]
    finite = [c for c in counts if c is not None]
    if not finite:
        return None
    return min(finite)
