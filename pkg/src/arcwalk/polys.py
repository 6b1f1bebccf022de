"""Univariate polynomials with exact rational coefficients.

Coefficients are gmpy2.mpq values stored ascending by degree with
trailing zeros stripped, so equal polynomials compare equal.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from gmpy2 import mpq

from .errors import ArcwalkError


class PolynomialError(ArcwalkError, ValueError):
    pass


def _coerce(value) -> mpq:
    if isinstance(value, str):
        return mpq(value)
    return mpq(value)


class RatPoly:
    """Immutable dense polynomial over the rationals."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_coerce(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *_):
        raise AttributeError("RatPoly is immutable")

    def __reduce__(self):
        return (RatPoly, (self.coeffs,))

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls) -> "RatPoly":
        return cls(())

    @classmethod
    def one(cls) -> "RatPoly":
        return cls((1,))

    @classmethod
    def x(cls) -> "RatPoly":
        return cls((0, 1))

    @classmethod
    def from_roots(cls, roots: Sequence) -> "RatPoly":
        p = cls.one()
        for r in roots:
            p = p * cls((-_coerce(r), 1))
        return p

    @classmethod
    def parse_coefficients(cls, text: str) -> "RatPoly":
        """Parse a comma-separated ascending coefficient list, e.g. "2,1,1"
        for x^2 + x + 2.  Entries may be "num/den" rationals."""
        parts = [p.strip() for p in text.split(",")]
        if not parts or any(not p for p in parts):
            raise PolynomialError(f"bad coefficient list {text!r}")
        try:
            return cls(parts)
        except (ValueError, ZeroDivisionError) as exc:
            raise PolynomialError(f"bad coefficient list {text!r}: {exc}") from exc

    # -- basic queries ----------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> mpq:
        if not self.coeffs:
            raise PolynomialError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __eq__(self, other) -> bool:
        return isinstance(other, RatPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: "RatPoly") -> "RatPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return RatPoly(out)

    def __neg__(self) -> "RatPoly":
        return RatPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "RatPoly") -> "RatPoly":
        return self + (-other)

    def __mul__(self, other) -> "RatPoly":
        if not isinstance(other, RatPoly):
            return RatPoly(tuple(c * _coerce(other) for c in self.coeffs))
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return RatPoly.zero()
        out = [mpq(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return RatPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "RatPoly":
        if e < 0:
            raise PolynomialError("negative power")
        result, base = RatPoly.one(), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other: "RatPoly") -> tuple["RatPoly", "RatPoly"]:
        if other.is_zero:
            raise PolynomialError("division by the zero polynomial")
        rem = list(self.coeffs)
        d = other.degree
        lead = other.coeffs[-1]
        if len(rem) <= d:
            return RatPoly.zero(), self
        quot = [mpq(0)] * (len(rem) - d)
        for i in range(len(rem) - 1, d - 1, -1):
            c = rem[i]
            if not c:
                continue
            q = c / lead
            quot[i - d] = q
            for j, oc in enumerate(other.coeffs):
                rem[i - d + j] -= q * oc
        return RatPoly(quot), RatPoly(rem)

    def __floordiv__(self, other: "RatPoly") -> "RatPoly":
        return divmod(self, other)[0]

    def __mod__(self, other: "RatPoly") -> "RatPoly":
        return divmod(self, other)[1]

    def derivative(self) -> "RatPoly":
        return RatPoly(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def monic(self) -> "RatPoly":
        if self.is_zero:
            raise PolynomialError("cannot normalize the zero polynomial")
        lead = self.coeffs[-1]
        if lead == 1:
            return self
        return RatPoly(tuple(c / lead for c in self.coeffs))

    def evaluate(self, x) -> mpq:
        acc = mpq(0)
        for c in reversed(self.coeffs):
            acc = acc * _coerce(x) + c
        return acc

    # -- presentation -----------------------------------------------------

    def coefficient_strings(self) -> list[str]:
        """Ascending "num/den" coefficient list (report wire format)."""
        return [f"{c.numerator}/{c.denominator}" for c in self.coeffs]

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            if i == 0:
                body = _fmt_q(abs(c))
            else:
                mag = abs(c)
                coef = "" if mag == 1 else _fmt_q(mag) + "*"
                body = f"{coef}x" if i == 1 else f"{coef}x^{i}"
            terms.append(("-" if c < 0 else "+", body))
        sign, first = terms[0]
        out = ("-" if sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"RatPoly({self})"


def _fmt_q(q: mpq) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


# ---------------------------------------------------------------------------
# gcd machinery and squarefree analysis
# ---------------------------------------------------------------------------


def poly_gcd(p: RatPoly, q: RatPoly) -> RatPoly:
    """Monic greatest common divisor (gcd(0, 0) = 0)."""
    a, b = p, q
    while not b.is_zero:
        a, b = b, a % b
    return a.monic() if not a.is_zero else a


def poly_lcm(p: RatPoly, q: RatPoly) -> RatPoly:
    if p.is_zero or q.is_zero:
        return RatPoly.zero()
    return ((p * q) // poly_gcd(p, q)).monic()


def poly_divides(q: RatPoly, p: RatPoly) -> bool:
    """True iff q divides p exactly."""
    if q.is_zero:
        raise PolynomialError("divisibility by the zero polynomial")
    return (p % q).is_zero


def squarefree_analysis(p: RatPoly) -> tuple[bool, RatPoly]:
    """(is_squarefree, gcd(p, p')) for a monic nonzero polynomial.

    The second component is the monic repeated part: an irreducible q
    divides it exactly when q^2 divides p.
    """
    if p.is_zero:
        raise PolynomialError("squarefree analysis of the zero polynomial")
    if not p.is_monic:
        raise PolynomialError("squarefree analysis requires a monic polynomial")
    rep = poly_gcd(p, p.derivative())
    return rep == RatPoly.one(), rep
