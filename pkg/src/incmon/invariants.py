"""Recurrence engine for multiplicity and Ext-pairing series.

The two series attached to a ring element x are computed by structural
recursion on basis words:

  * G-series (multiplicities):   G(b.x) = b G(x)
                                 G(a^n x) = a G((1+a+...+a^(n-1)) x)
                                            + b/(1-b) G(a^(n-1) x)
  * F-series (Ext pairings):     F(b.x) = b/(1+b) F(x)
                                 F(a^n x) = a F((1+a+...+a^(n-1)) x)
                                            + b F(a^(n-1) x)

with base case G(1) = F(1) = 1 for the empty word.  The base cases are
forced: maps out of the unit module pick out degree-0 parts, and the unit is
both projective and injective in the graded category, so the only nonzero
pairing against the unit is with itself.

Smooth (ungraded) variants are obtained by completing first: the smooth
series of x equal the graded series of xi(x).
"""

from __future__ import annotations

from dataclasses import dataclass

from . import kgroup, ncseries
from .kgroup import KElement
from .ncseries import NCSeries, RationalFactor
from .words import check_word, conjugate, rank, words_up_to


@dataclass(frozen=True)
class EffectivityVerdict:
    """Outcome of the bounded effectivity test.

    A negative multiplicity coefficient refutes effectivity outright; absence
    of one up to the search bound confirms it for all words that short.
    """

    effective: bool
    bound: int
    witness: str | None = None
    coefficient: int | None = None

    def __str__(self) -> str:
        if self.effective:
            return f"effective up to length {self.bound}"
        from .words import pretty
        return f"NOT effective; witness {pretty(self.witness)} (coefficient {self.coefficient})"

    def to_json(self) -> dict:
        if self.effective:
            return {"verdict": "effective_up_to", "bound": self.bound}
        from .words import pretty
        return {"verdict": "not_effective", "witness": pretty(self.witness),
                "coefficient": self.coefficient}


_B_OVER_ONE_MINUS = RationalFactor((0, 1), dm=1)   # b/(1-b)
_B_OVER_ONE_PLUS = RationalFactor((0, 1), dp=1)    # b/(1+b)
_B = RationalFactor((0, 1))


class InvariantEngine:
    """Computes G- and F-series with per-instance memo caches.

    All methods are pure from the caller's point of view; the caches only
    store per-word results keyed by the canonical word string.
    """

    def __init__(self) -> None:
        self._gcache: dict[str, NCSeries] = {}
        self._fcache: dict[str, NCSeries] = {}

    # -- the two recurrences -------------------------------------------------

    def _series_word(self, w: str, cache: dict[str, NCSeries],
                     b_factor: RationalFactor, a_block_extra: RationalFactor) -> NCSeries:
        hit = cache.get(w)
        if hit is not None:
            return hit
        if not w:
            out = NCSeries.one()
        elif w[0] == "b":
            sub = self._series_word(w[1:], cache, b_factor, a_block_extra)
            out = ncseries.left_mul_rf(b_factor, sub)
        else:
            n = len(w) - len(w.lstrip("a"))
            tail = w[n:]
            acc = NCSeries.zero()
            for i in range(n):
                sub = self._series_word("a" * i + tail, cache, b_factor, a_block_extra)
                assert len("a" * i + tail) < len(w)
                acc = ncseries.series_add(acc, sub)
            head = ncseries.left_mul_a(acc)
            prev = self._series_word("a" * (n - 1) + tail, cache, b_factor, a_block_extra)
            out = ncseries.series_add(head, ncseries.left_mul_rf(a_block_extra, prev))
        cache[w] = out
        return out

    def _linear(self, x: KElement, word_series) -> NCSeries:
        out = NCSeries.zero()
        for w, c in x.items():
            out = ncseries.series_add(out, ncseries.series_scale(c, word_series(w)))
        return out

    def gser(self, x: KElement) -> NCSeries:
        """Multiplicity series of a graded class."""
        return self._linear(
            x, lambda w: self._series_word(w, self._gcache, _B, _B_OVER_ONE_MINUS))

    def fser(self, x: KElement) -> NCSeries:
        """Ext Euler-characteristic pairing series of a graded class."""
        return self._linear(
            x, lambda w: self._series_word(w, self._fcache, _B_OVER_ONE_PLUS, _B))

    def gser_smooth(self, x: KElement) -> NCSeries:
        return self.gser(kgroup.xi(x))

    def fser_smooth(self, x: KElement) -> NCSeries:
        return self.fser(kgroup.xi(x))

    # -- pairings and multiplicities ----------------------------------------

    def pair_right(self, x: KElement, lam: str, smooth: bool = False) -> int:
        series = self.fser_smooth(x) if smooth else self.fser(x)
        return series.word_coefficient(check_word(lam))

    def pair_left(self, lam: str, x: KElement, smooth: bool = False) -> int:
        """Pairing with a basis word on the left, via the duality substitution."""
        check_word(lam)
        if smooth:
            x = kgroup.transpose(kgroup.sigma(kgroup.transpose(kgroup.gamma(x))))
        series = self.fser(kgroup.dual(x))
        return ((-1) ** len(lam)) * series.word_coefficient(conjugate(lam))

    def pair(self, x: KElement, y: KElement, smooth: bool = False) -> int:
        series = self.fser_smooth(x) if smooth else self.fser(x)
        return sum(c * series.word_coefficient(w) for w, c in y.items())

    def mult(self, x: KElement, lam: str, smooth: bool = False) -> int:
        series = self.gser_smooth(x) if smooth else self.gser(x)
        return series.word_coefficient(check_word(lam))

    # -- classical Hilbert series, level, effectivity ------------------------

    def hilbert(self, x: KElement, smooth: bool = False) -> tuple[RationalFactor, int]:
        """Ordinary Hilbert series as a rational function of t, plus its pole
        order at t = 1 (the level of the class when x is a module class)."""
        if smooth:
            x = kgroup.xi(x)
        total = RationalFactor()
        for w, c in x.items():
            n = rank(w)
            num = [0] * len(w) + [c]
            total = total + RationalFactor(num, dm=n)
        return total, total.pole_order_at_one()

    def level_upper(self, x: KElement) -> int | None:
        """Max rank across the support; None for the zero class."""
        if x.is_zero():
            return None
        return max(rank(w) for w in x.support())

    def effective(self, x: KElement, bound: int, smooth: bool = False) -> EffectivityVerdict:
        """Scan multiplicity coefficients for all words of length <= bound.

        A negative coefficient is an unconditional refutation; a clean scan
        is a confirmation up to the bound only.
        """
        if bound < 0:
            raise ValueError("bound must be non-negative")
        series = self.gser_smooth(x) if smooth else self.gser(x)
        for w in words_up_to(bound):
            c = series.word_coefficient(w)
            if c < 0:
                return EffectivityVerdict(False, bound, witness=w, coefficient=c)
        return EffectivityVerdict(True, bound)
