"""Constraint words: finite strings over the two-letter alphabet {a, b}.

Words index the standard-module basis of the Grothendieck ring.  They are
stored as plain Python strings, which are immutable and hashable; the empty
string is a valid word (it is the class of the unit module and prints as
"1" in ring contexts).
"""

from __future__ import annotations

from typing import Iterable, Iterator

A = "a"
B = "b"

_CONJUGATE = str.maketrans("ab", "ba")


def check_word(w: str) -> str:
    """Validate that ``w`` matches /[ab]*/ and return it."""
    if not isinstance(w, str):
        raise ValueError(f"word must be a string, got {type(w).__name__}")
    for ch in w:
        if ch not in ("a", "b"):
            raise ValueError(f"invalid letter {ch!r} in word {w!r}")
    return w


def rank(w: str) -> int:
    """Number of occurrences of the letter ``a`` in ``w``."""
    return w.count("a")


def gap_decomposition(w: str) -> tuple[int, ...]:
    """The unique (g0, ..., gr) with w = b^g0 a b^g1 a ... a b^gr.

    The tuple has length rank(w) + 1.
    """
    return tuple(len(run) for run in w.split("a"))


def from_gaps(gaps: Iterable[int]) -> str:
    """Reassemble a word from its gap decomposition."""
    return "a".join("b" * g for g in gaps)


def conjugate(w: str) -> str:
    """Swap the letters a and b throughout."""
    return w.translate(_CONJUGATE)


def reverse(w: str) -> str:
    return w[::-1]


def concat(w1: str, w2: str) -> str:
    return w1 + w2


def sort_key(w: str) -> tuple[int, int, str]:
    """Canonical ordering key: by rank, then length, then lexicographic."""
    return (rank(w), len(w), w)


def words_up_to(max_len: int) -> Iterator[str]:
    """All words of length <= max_len, in canonical order."""
    out = []
    for n in range(max_len + 1):
        for bits in range(1 << n):
            out.append("".join("a" if (bits >> i) & 1 else "b" for i in range(n)))
    out.sort(key=sort_key)
    return iter(out)


def pretty(w: str) -> str:
    """Textual form with repeated letters contracted, e.g. "abbb" -> "ab^3".

    The empty word prints as "1".
    """
    if not w:
        return "1"
    pieces = []
    i = 0
    while i < len(w):
        j = i
        while j < len(w) and w[j] == w[i]:
            j += 1
        run = j - i
        pieces.append(w[i] if run == 1 else f"{w[i]}^{run}")
        i = j
    return "".join(pieces)
