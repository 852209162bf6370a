"""Exact arithmetic and order on Fermat reals.

A Fermat real is a class of little-oh polynomials ``r + sum a_i t^e_i``
modulo functions that are o(t) as t -> 0+.  Every term with exponent > 1 is
o(t) and every term with exponent in (0, 1] is not, so each class has one
canonical representative: a rational standard part plus terms with distinct
exponents in (0, 1] and nonzero coefficients.  Exponents and coefficients are
:class:`fractions.Fraction`.

Order: ``x <= y`` iff ``x_t <= y_t + z_t`` near 0+ for some o(t) function
``z``.  Let ``d = x - y`` in canonical form.  If ``d`` is zero the two are
equal.  Otherwise its lowest-exponent term ``c t^e`` (the standard part
counting as exponent 0) has ``e <= 1``, so ``|d_t| >= |c| t^e / 2 > |z_t|``
for small t whatever ``z`` is; the sign of ``c`` decides.

The text form is ``r + c1*t^(p1/q1) + ...``; :func:`parse` accepts any
exponent >= 0 and canonicalises, ``str`` prints the canonical form.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import InputError
from .nests import Relation
from .space import FiniteSpace

ONE = Fraction(1)


def _frac(v) -> Fraction:
    try:
        return Fraction(v)
    except (TypeError, ValueError, ZeroDivisionError) as e:
        raise InputError(f"not an exact rational: {v!r}") from e


@dataclass(frozen=True)
class RawLittleOh:
    """Uncanonicalised input: (coefficient, exponent) pairs, repeats allowed."""

    terms: tuple[tuple[Fraction, Fraction], ...]

    def __init__(self, terms: Iterable = ()):
        object.__setattr__(self, "terms", tuple((_frac(c), _frac(e)) for c, e in terms))


@dataclass(frozen=True)
class FermatReal:
    standard_part: Fraction = Fraction(0)
    terms: tuple[tuple[Fraction, Fraction], ...] = ()   # (exponent, coefficient)

    def __post_init__(self):
        object.__setattr__(self, "standard_part", _frac(self.standard_part))
        terms = tuple((_frac(e), _frac(c)) for e, c in self.terms)
        object.__setattr__(self, "terms", terms)
        prev = Fraction(0)
        for e, c in terms:
            if not prev < e <= 1:
                raise InputError("exponents must increase strictly within (0, 1]")
            if c == 0:
                raise InputError("canonical coefficients are nonzero")
            prev = e

    @classmethod
    def of(cls, value) -> "FermatReal":
        if isinstance(value, FermatReal):
            return value
        if isinstance(value, str):
            return parse(value)
        return cls(_frac(value))

    @property
    def is_zero(self) -> bool:
        return self.standard_part == 0 and not self.terms

    def leading(self) -> tuple[Fraction, Fraction] | None:
        """(exponent, coefficient) of the lowest-order nonzero term, or None."""
        if self.standard_part:
            return Fraction(0), self.standard_part
        return self.terms[0] if self.terms else None

    def denominator_lcm(self) -> int:
        return math.lcm(1, *(e.denominator for e, _ in self.terms))

    def __add__(self, other):
        return add(self, FermatReal.of(other))

    __radd__ = __add__

    def __neg__(self):
        return negate(self)

    def __sub__(self, other):
        return add(self, negate(FermatReal.of(other)))

    def __rsub__(self, other):
        return add(FermatReal.of(other), negate(self))

    def __mul__(self, other):
        return mul(self, FermatReal.of(other))

    __rmul__ = __mul__

    def __lt__(self, other):
        return compare(self, FermatReal.of(other)) < 0

    def __le__(self, other):
        return compare(self, FermatReal.of(other)) <= 0

    def __gt__(self, other):
        return compare(self, FermatReal.of(other)) > 0

    def __ge__(self, other):
        return compare(self, FermatReal.of(other)) >= 0

    def __str__(self):
        return format_fermat(self)

    def __repr__(self):
        return f"FermatReal({format_fermat(self)!r})"


T = FermatReal(0, ((ONE, ONE),))


def canonicalize(raw) -> FermatReal:
    """Canonical representative of a raw little-oh polynomial.

    Accepts a :class:`RawLittleOh` or an iterable of (coefficient, exponent).
    """
    terms = raw.terms if isinstance(raw, RawLittleOh) else RawLittleOh(raw).terms
    acc: dict[Fraction, Fraction] = {}
    for c, e in terms:
        if e < 0:
            raise InputError(f"negative exponent {e}")
        if e > 1:
            continue
        acc[e] = acc.get(e, Fraction(0)) + c
    std = acc.pop(Fraction(0), Fraction(0))
    kept = tuple((e, c) for e, c in sorted(acc.items()) if c != 0)
    return FermatReal(std, kept)


def is_zero(x: FermatReal) -> bool:
    return x.is_zero


def _raw(x: FermatReal) -> list[tuple[Fraction, Fraction]]:
    return [(x.standard_part, Fraction(0))] + [(c, e) for e, c in x.terms]


def add(x: FermatReal, y: FermatReal) -> FermatReal:
    return canonicalize(_raw(x) + _raw(y))


def negate(x: FermatReal) -> FermatReal:
    return FermatReal(-x.standard_part, tuple((e, -c) for e, c in x.terms))


def mul_raw(a: Iterable, b: Iterable) -> FermatReal:
    """Multiply two raw representatives term by term, then canonicalise."""
    a, b = RawLittleOh(a).terms, RawLittleOh(b).terms
    return canonicalize([(c1 * c2, e1 + e2) for c1, e1 in a for c2, e2 in b])


def mul(x: FermatReal, y: FermatReal) -> FermatReal:
    return mul_raw(_raw(x), _raw(y))


def compare(x: FermatReal, y: FermatReal) -> int:
    """-1, 0 or 1 as x is less than, equal to or greater than y."""
    lead = add(x, negate(y)).leading()
    if lead is None:
        return 0
    return -1 if lead[1] < 0 else 1


LESS, EQUAL, GREATER = -1, 0, 1


def lt_f(x: FermatReal, y: FermatReal) -> bool:
    """The strict order on distinct Fermat reals.

    Its first case (some down-set {k <= l} contains x but not y) holds iff
    x < y, with l = x as witness.  The other two cases ask for y = x + h with
    h > 0 and so imply the first; on canonical values the order is x < y.
    """
    c = compare(x, y)
    if c == 0:
        raise InputError(f"lt_f compares distinct Fermat reals, got {x} twice")
    return c < 0


def in_monad(x: FermatReal, r) -> bool:
    return x.standard_part == _frac(r)


def _iroot(n: int, k: int) -> int | None:
    """Exact integer k-th root of n >= 0, or None."""
    if n < 2:
        return n
    lo, hi = 1, 1 << (n.bit_length() // k + 1)
    while lo <= hi:
        mid = (lo + hi) // 2
        p = mid ** k
        if p == n:
            return mid
        if p < n:
            lo = mid + 1
        else:
            hi = mid - 1
    return None


def sample_at(x: FermatReal, t) -> Fraction:
    """Exact value of the canonical representative at ``t``.

    ``t`` must be ``s**D`` for a rational ``s`` in (0, 1), where ``D`` is
    the least common multiple of the exponent denominators of ``x``.
    """
    t = _frac(t)
    d = x.denominator_lcm()
    if not 0 < t < 1:
        raise InputError(f"sample point {t} must lie in (0, 1)")
    num, den = _iroot(t.numerator, d), _iroot(t.denominator, d)
    if num is None or den is None:
        raise InputError(f"sample point {t} is not an exact {d}-th power (need t = s^{d})")
    s = Fraction(num, den)
    total = x.standard_part
    for e, c in x.terms:
        total += c * s ** int(e * d)
    return total


def sample_order(points: list[FermatReal]) -> Relation:
    """Strict linear order of a finite sample, indexed by position."""
    n = len(points)
    if n == 0:
        raise InputError("a sample needs at least one point")
    rows = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            c = compare(points[i], points[j])
            if c == 0:
                raise InputError(f"duplicate sample points {i} and {j}: {points[i]}")
            if c < 0:
                rows[i] |= 1 << j
            else:
                rows[j] |= 1 << i
    return Relation(FiniteSpace(n), tuple(rows))


# -- text form -------------------------------------------------------------

_NUM = r"\d+(?:\.\d+)?(?:/\d+)?"
_TERM = re.compile(
    rf"""\s*(?P<sign>[+-])?\s*
    (?:
        (?P<coef>{_NUM}|\(\s*-?\s*{_NUM}\s*\))?\s*(?P<star>\*)?\s*
        (?P<t>t)(?:\s*\^\s*(?P<exp>{_NUM}|\(\s*{_NUM}\s*\)))?
      | (?P<const>{_NUM}|\(\s*-?\s*{_NUM}\s*\))
    )\s*""", re.VERBOSE)


def _literal(text: str) -> Fraction:
    return _frac(text.strip().strip("()").replace(" ", ""))


def parse_raw(text: str) -> RawLittleOh:
    pos, terms = 0, []
    text = text.strip()
    if not text:
        raise InputError("empty Fermat-real expression")
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos or (terms and not m.group("sign")):
            raise InputError(f"cannot parse Fermat real {text!r} at column {pos + 1}")
        sign = -1 if m.group("sign") == "-" else 1
        if m.group("t"):
            if m.group("star") and not m.group("coef"):
                raise InputError(f"dangling '*' in {text!r} at column {pos + 1}")
            coef = _literal(m.group("coef")) if m.group("coef") else ONE
            exp = _literal(m.group("exp")) if m.group("exp") else ONE
        else:
            coef, exp = _literal(m.group("const")), Fraction(0)
        terms.append((sign * coef, exp))
        pos = m.end()
    return RawLittleOh(terms)


def parse(text: str) -> FermatReal:
    return canonicalize(parse_raw(text))


def _fmt_q(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_fermat(x: FermatReal) -> str:
    parts = []
    if x.standard_part or not x.terms:
        parts.append(_fmt_q(x.standard_part))
    for e, c in x.terms:
        power = "t" if e == 1 else (f"t^{e.numerator}" if e.denominator == 1 else f"t^({_fmt_q(e)})")
        mag = abs(c)
        body = power if mag == 1 else f"{_fmt_q(mag)}*{power}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts)
