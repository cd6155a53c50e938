"""The Grothendieck ring Z{a,b} in the standard-module word basis.

A :class:`KElement` is an integer linear combination of constraint words.
Multiplication is the bilinear extension of word concatenation, so the ring
is the non-commutative polynomial ring on the two letters.  The operators in
this module (psi, gamma, xi, sigma, dual, transpose, pi, kappa, the beta
functionals) are defined on basis words and extended by linearity; every
result is fully normalized, so structural equality is semantic equality.
"""

from __future__ import annotations

from math import comb
from typing import Callable, Iterator, Mapping

from . import words
from .words import check_word, conjugate as _conj, gap_decomposition, sort_key


class KElement:
    """An element of the Grothendieck ring: a finite map word -> int.

    Immutable; zero coefficients are never stored.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[str, int] | None = None):
        clean: dict[str, int] = {}
        if coeffs:
            for w, c in coeffs.items():
                check_word(w)
                if c:
                    clean[w] = c
        self._coeffs = clean

    @classmethod
    def zero(cls) -> "KElement":
        return cls()

    @classmethod
    def one(cls) -> "KElement":
        return cls({"": 1})

    @classmethod
    def word(cls, w: str) -> "KElement":
        return cls({w: 1})

    def coefficient(self, w: str) -> int:
        return self._coeffs.get(check_word(w), 0)

    def items(self) -> Iterator[tuple[str, int]]:
        """Terms in canonical order (rank, length, lexicographic)."""
        for w in sorted(self._coeffs, key=sort_key):
            yield w, self._coeffs[w]

    def support(self) -> list[str]:
        return sorted(self._coeffs, key=sort_key)

    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __add__(self, other: "KElement") -> "KElement":
        if not isinstance(other, KElement):
            return NotImplemented
        out = dict(self._coeffs)
        for w, c in other._coeffs.items():
            out[w] = out.get(w, 0) + c
        return KElement(out)

    def __sub__(self, other: "KElement") -> "KElement":
        return self + (-other)

    def __neg__(self) -> "KElement":
        return KElement({w: -c for w, c in self._coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return scale(other, self)
        if not isinstance(other, KElement):
            return NotImplemented
        out: dict[str, int] = {}
        for w1, c1 in self._coeffs.items():
            for w2, c2 in other._coeffs.items():
                w = w1 + w2
                out[w] = out.get(w, 0) + c1 * c2
        return KElement(out)

    def __rmul__(self, other):
        if isinstance(other, int):
            return scale(other, self)
        return NotImplemented

    def __pow__(self, n: int) -> "KElement":
        if n < 0:
            raise ValueError("negative ring power")
        out = KElement.one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, KElement):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self._coeffs.items()))

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        pieces = []
        for i, (w, c) in enumerate(self.items()):
            mag = abs(c)
            body = words.pretty(w) if (mag == 1 and w) else (
                str(mag) if not w else f"{mag}*{words.pretty(w)}")
            if i == 0:
                pieces.append(("-" if c < 0 else "") + body)
            else:
                pieces.append((" - " if c < 0 else " + ") + body)
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"KElement({self._coeffs!r})"


ZERO = KElement.zero()
ONE = KElement.one()


def add(x: KElement, y: KElement) -> KElement:
    return x + y


def scale(n: int, x: KElement) -> KElement:
    return KElement({w: n * c for w, c in x._coeffs.items()})


def mul(x: KElement, y: KElement) -> KElement:
    return x * y


def coefficient(x: KElement, w: str) -> int:
    return x.coefficient(w)


def _extend(word_map: Callable[[str], KElement]) -> Callable[[KElement], KElement]:
    """Extend a basis-word map to KElements by integer linearity."""

    def op(x: KElement) -> KElement:
        out = KElement.zero()
        for w, c in x._coeffs.items():
            out = out + scale(c, word_map(w))
        return out

    return op


def _split_trailing_a(w: str) -> tuple[str, int]:
    """Write w = prefix . a^n with prefix empty or ending in b."""
    stripped = w.rstrip("a")
    return stripped, len(w) - len(stripped)


transpose = _extend(lambda w: KElement.word(w[::-1]))

psi = _extend(lambda w: KElement.word(w[:-1]) if w.endswith("a") else ZERO)

gamma = _extend(lambda w: KElement.word(w + "a"))


def _xi_word(w: str) -> KElement:
    prefix, n = _split_trailing_a(w)
    return KElement({prefix + "a" * i: 1 for i in range(n + 1)})


def _xires_word(w: str) -> KElement:
    prefix, n = _split_trailing_a(w)
    return KElement({prefix + "a" * i: 1 for i in range(n)})


xi = _extend(_xi_word)
xires = _extend(_xires_word)
# Residual and coresidual completion have the same class on every word.
xicor = xires


def _sigma_word(w: str) -> KElement:
    if not w:
        return ZERO
    if w[0] == "a":
        return KElement({w: 1, w[1:]: 1})
    return KElement.word(w[1:])


sigma = _extend(_sigma_word)

dual = _extend(lambda w: KElement({_conj(w): (-1) ** len(w)}))

pi = _extend(lambda w: KElement.word(w) if w.startswith("a") else ZERO)


def kappa(x: KElement) -> KElement:
    return transpose(xi(psi(transpose(x))))


beta_a = _extend(lambda w: KElement.word(w[1:]) if w.startswith("a") else ZERO)
beta_b = _extend(lambda w: KElement.word(w[1:]) if w.startswith("b") else ZERO)


def beta_word(lam: str, x: KElement) -> KElement:
    """Letterwise composition: strip lam from the front of each basis word."""
    for letter in check_word(lam):
        x = beta_a(x) if letter == "a" else beta_b(x)
    return x


def jclass(n: int) -> KElement:
    """Class of the finite-length injective envelope of the degree-n simple.

    jclass(0) = 1; for n >= 1 the multiplicity of the word b^m is C(n-1, m-1).
    """
    if n < 0:
        raise ValueError("negative index")
    if n == 0:
        return ONE
    return KElement({"b" * (i + 1): comb(n - 1, i) for i in range(n)})


def injective_class(lam: str) -> KElement:
    """Class of the indecomposable injective indexed by the word lam."""
    gaps = gap_decomposition(check_word(lam))
    out = jclass(gaps[0])
    for g in gaps[1:]:
        out = out * KElement.word("a") * jclass(g)
    return out


def std_local_cohomology(lam: str, s: int) -> KElement:
    """Local cohomology class of a standard module below level s."""
    check_word(lam)
    return KElement.word(lam) if s >= words.rank(lam) else ZERO


def std_saturation(lam: str, s: int) -> KElement:
    """Saturation class of a standard module away from level s."""
    check_word(lam)
    return KElement.word(lam) if s < words.rank(lam) else ZERO
