"""Rational non-commutative series in the letters a and b.

The series handled here are finite sums of alternating products

    f0(b) a f1(b) a ... a fk(b)

where each factor is a univariate rational function of b whose denominator
is (1-b)^dm (1+b)^dp.  This is exactly the shape produced by the
multiplicity and pairing recurrences, so no other denominators are allowed.

Equality of series is decided exactly: a factor with numerator degree N and
denominator exponents dm, dp is pinned down by its first N + dm + dp + 1
power-series coefficients, so comparing finitely many word coefficients
decides equality of the whole series.
"""

from __future__ import annotations

from math import comb
from typing import Iterable, Iterator, Sequence

from .words import gap_decomposition, words_up_to

# Integer polynomials in b as tuples of coefficients, low degree first,
# normalized with no trailing zeros; () is the zero polynomial.
Poly = tuple[int, ...]


def _ptrim(p: Sequence[int]) -> Poly:
    n = len(p)
    while n and p[n - 1] == 0:
        n -= 1
    return tuple(p[:n])


def _padd(p: Poly, q: Poly) -> Poly:
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, c in enumerate(q):
        out[i] += c
    return _ptrim(out)


def _pmul(p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return ()
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return _ptrim(out)


def _pscale(n: int, p: Poly) -> Poly:
    if n == 0:
        return ()
    return tuple(n * c for c in p)


def _pdiv_one_minus(p: Poly) -> Poly | None:
    """Exact quotient p / (1 - b), or None if not divisible."""
    if not p:
        return ()
    if sum(p) != 0:  # p(1) must vanish
        return None
    q = [0] * (len(p) - 1)
    acc = 0
    for i in range(len(p) - 1):
        acc += p[i]
        q[i] = acc
    return _ptrim(q)


def _pdiv_one_plus(p: Poly) -> Poly | None:
    """Exact quotient p / (1 + b), or None if not divisible."""
    if not p:
        return ()
    if sum(c if i % 2 == 0 else -c for i, c in enumerate(p)) != 0:  # p(-1)
        return None
    q = [0] * (len(p) - 1)
    prev = 0
    for i in range(len(p) - 1):
        q[i] = p[i] - prev
        prev = q[i]
    return _ptrim(q)


class RationalFactor:
    """num(b) / ((1-b)^dm (1+b)^dp), kept in lowest terms."""

    __slots__ = ("num", "dm", "dp")

    def __init__(self, num: Iterable[int] = (), dm: int = 0, dp: int = 0):
        if dm < 0 or dp < 0:
            raise ValueError("denominator exponents must be non-negative")
        p = _ptrim(tuple(num))
        if not p:
            dm = dp = 0
        while dm > 0:
            q = _pdiv_one_minus(p)
            if q is None:
                break
            p, dm = q, dm - 1
        while dp > 0:
            q = _pdiv_one_plus(p)
            if q is None:
                break
            p, dp = q, dp - 1
        self.num = p
        self.dm = dm
        self.dp = dp

    @classmethod
    def constant(cls, c: int) -> "RationalFactor":
        return cls((c,))

    @classmethod
    def one(cls) -> "RationalFactor":
        return cls((1,))

    @classmethod
    def b(cls) -> "RationalFactor":
        return cls((0, 1))

    def is_zero(self) -> bool:
        return not self.num

    def __add__(self, other: "RationalFactor") -> "RationalFactor":
        dm = max(self.dm, other.dm)
        dp = max(self.dp, other.dp)
        p = self.num
        for _ in range(dm - self.dm):
            p = _pmul(p, (1, -1))
        for _ in range(dp - self.dp):
            p = _pmul(p, (1, 1))
        q = other.num
        for _ in range(dm - other.dm):
            q = _pmul(q, (1, -1))
        for _ in range(dp - other.dp):
            q = _pmul(q, (1, 1))
        return RationalFactor(_padd(p, q), dm, dp)

    def __neg__(self) -> "RationalFactor":
        return RationalFactor(_pscale(-1, self.num), self.dm, self.dp)

    def __sub__(self, other: "RationalFactor") -> "RationalFactor":
        return self + (-other)

    def __mul__(self, other: "RationalFactor") -> "RationalFactor":
        return RationalFactor(
            _pmul(self.num, other.num), self.dm + other.dm, self.dp + other.dp)

    def scale(self, n: int) -> "RationalFactor":
        return RationalFactor(_pscale(n, self.num), self.dm, self.dp)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalFactor):
            return NotImplemented
        return (self.num, self.dm, self.dp) == (other.num, other.dm, other.dp)

    def __hash__(self) -> int:
        return hash((self.num, self.dm, self.dp))

    @property
    def complexity(self) -> int:
        """Numerator degree plus denominator exponents; series of this factor
        are determined by their first complexity + 1 coefficients."""
        return (len(self.num) - 1 if self.num else 0) + self.dm + self.dp

    def series_coeff(self, c: int) -> int:
        """Coefficient of b^c in the power-series expansion."""
        if c < 0 or not self.num:
            return 0
        total = 0
        for i, a in enumerate(self.num):
            if not a or i > c:
                continue
            # convolve 1/(1-b)^dm with 1/(1+b)^dp at index c - i
            rem = c - i
            if self.dm and self.dp:
                s = 0
                for k in range(rem + 1):
                    s += comb(k + self.dm - 1, self.dm - 1) * (
                        (-1) ** (rem - k)) * comb(rem - k + self.dp - 1, self.dp - 1)
            elif self.dm:
                s = comb(rem + self.dm - 1, self.dm - 1)
            elif self.dp:
                s = ((-1) ** rem) * comb(rem + self.dp - 1, self.dp - 1)
            else:
                s = 1 if rem == 0 else 0
            total += a * s
        return total

    def pole_order_at_one(self) -> int:
        return self.dm

    def to_string(self, var: str = "b") -> str:
        if not self.num:
            return "0"
        mono = []
        for i, c in enumerate(self.num):
            if not c:
                continue
            if i == 0:
                body = str(abs(c))
            else:
                head = "" if abs(c) == 1 else f"{abs(c)}*"
                body = f"{head}{var}" if i == 1 else f"{head}{var}^{i}"
            if not mono:
                mono.append(("-" if c < 0 else "") + body)
            else:
                mono.append((" - " if c < 0 else " + ") + body)
        s = "".join(mono)
        for exp, root in ((self.dm, f"1-{var}"), (self.dp, f"1+{var}")):
            if exp == 1:
                s += f"/({root})"
            elif exp > 1:
                s += f"/({root})^{exp}"
        return s

    def __str__(self) -> str:
        return self.to_string()

    def __repr__(self) -> str:
        return f"RationalFactor({self.num!r}, dm={self.dm}, dp={self.dp})"

    def to_json(self) -> dict:
        return {"num": list(self.num), "dm": self.dm, "dp": self.dp}


class NCTerm:
    """One alternating product f0 a f1 a ... a fk; k = a-count."""

    __slots__ = ("factors",)

    def __init__(self, factors: Sequence[RationalFactor]):
        if not factors:
            raise ValueError("a term needs at least one factor")
        self.factors = tuple(factors)

    @property
    def a_count(self) -> int:
        return len(self.factors) - 1

    def is_zero(self) -> bool:
        return any(f.is_zero() for f in self.factors)

    def __eq__(self, other) -> bool:
        if not isinstance(other, NCTerm):
            return NotImplemented
        return self.factors == other.factors

    def __hash__(self) -> int:
        return hash(self.factors)

    def __str__(self) -> str:
        return "a".join(f"({f})" for f in self.factors)


class NCSeries:
    """A finite sum of alternating-product terms.

    Canonicalization is opportunistic; ``equals`` is the ground truth for
    semantic equality.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Iterable[NCTerm] = ()):
        self.terms = tuple(t for t in terms if not t.is_zero())

    @classmethod
    def zero(cls) -> "NCSeries":
        return cls()

    @classmethod
    def one(cls) -> "NCSeries":
        return cls([NCTerm([RationalFactor.one()])])

    @classmethod
    def from_factor(cls, f: RationalFactor) -> "NCSeries":
        return cls([NCTerm([f])])

    def is_zero(self) -> bool:
        return not self.terms

    def merged(self) -> "NCSeries":
        """Combine terms whose factor sequences differ in at most one slot."""
        terms = list(self.terms)
        changed = True
        while changed:
            changed = False
            for i in range(len(terms)):
                for j in range(i + 1, len(terms)):
                    t, u = terms[i], terms[j]
                    if len(t.factors) != len(u.factors):
                        continue
                    diff = [k for k, (f, g) in enumerate(zip(t.factors, u.factors))
                            if f != g]
                    if len(diff) > 1:
                        continue
                    k = diff[0] if diff else 0
                    merged = list(t.factors)
                    merged[k] = t.factors[k] + u.factors[k]
                    del terms[j], terms[i]
                    new = NCTerm(merged)
                    if not new.is_zero():
                        terms.append(new)
                    changed = True
                    break
                if changed:
                    break
        return NCSeries(terms)

    def word_coefficient(self, w: str) -> int:
        gaps = gap_decomposition(w)
        k = len(gaps) - 1
        total = 0
        for t in self.terms:
            if t.a_count != k:
                continue
            prod = 1
            for f, c in zip(t.factors, gaps):
                prod *= f.series_coeff(c)
                if not prod:
                    break
            total += prod
        return total

    def expand(self, max_len: int) -> dict[str, int]:
        """Nonzero word coefficients for all words of length <= max_len."""
        out = {}
        for w in words_up_to(max_len):
            c = self.word_coefficient(w)
            if c:
                out[w] = c
        return out

    def equals(self, other: "NCSeries") -> bool:
        """Exact semantic equality, decided by finitely many coefficients."""
        s, o = self.merged(), other.merged()
        if s.terms == o.terms:
            return True
        bound = 1
        for t in s.terms + o.terms:
            for f in t.factors:
                bound = max(bound, f.complexity + 1)
        counts = {t.a_count for t in s.terms} | {t.a_count for t in o.terms}
        for k in sorted(counts):
            if not _coeffs_match(s, o, k, bound):
                return False
        return True

    def hilbert_specialize(self) -> RationalFactor:
        """Substitute a -> 0: the sum of f0 over terms with no a."""
        out = RationalFactor()
        for t in self.terms:
            if t.a_count == 0:
                out = out + t.factors[0]
        return out

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(str(t) for t in self.terms)

    def __repr__(self) -> str:
        return f"NCSeries({list(self.terms)!r})"

    def to_json(self) -> dict:
        return {"terms": [{"factors": [f.to_json() for f in t.factors]}
                          for t in self.terms]}


def _coeffs_match(s: NCSeries, o: NCSeries, k: int, bound: int) -> bool:
    gaps = [()]
    for _ in range(k + 1):
        gaps = [g + (c,) for g in gaps for c in range(bound + 1)]
    from .words import from_gaps
    for g in gaps:
        w = from_gaps(g)
        if s.word_coefficient(w) != o.word_coefficient(w):
            return False
    return True


def series_add(s1: NCSeries, s2: NCSeries) -> NCSeries:
    return NCSeries(s1.terms + s2.terms).merged()


def series_scale(n: int, s: NCSeries) -> NCSeries:
    return NCSeries(
        [NCTerm((t.factors[0].scale(n),) + t.factors[1:]) for t in s.terms])


def left_mul_a(s: NCSeries) -> NCSeries:
    return NCSeries([NCTerm((RationalFactor.one(),) + t.factors) for t in s.terms])


def left_mul_rf(f: RationalFactor, s: NCSeries) -> NCSeries:
    return NCSeries(
        [NCTerm((f * t.factors[0],) + t.factors[1:]) for t in s.terms])


def right_mul_a(s: NCSeries) -> NCSeries:
    return NCSeries([NCTerm(t.factors + (RationalFactor.one(),)) for t in s.terms])


def right_mul_rf(f: RationalFactor, s: NCSeries) -> NCSeries:
    return NCSeries(
        [NCTerm(t.factors[:-1] + (t.factors[-1] * f,)) for t in s.terms])


def rf_coeff(f: RationalFactor, c: int) -> int:
    return f.series_coeff(c)


def pole_order_at_one(f: RationalFactor) -> int:
    return f.pole_order_at_one()
