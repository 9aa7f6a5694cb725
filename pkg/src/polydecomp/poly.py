"""Dense univariate polynomials over a coefficient domain.

Coefficients are stored ascending: ``coeffs[i]`` is the coefficient of
``variable**i``.  The tuple never ends in a zero, so the zero polynomial
is the empty tuple and otherwise ``degree == len(coeffs) - 1``.  The
degree of the zero polynomial is the sentinel ``NEG_INF``, which
compares below every integer.

A Poly is immutable; every operation returns a new instance.  A Poly
over ``PolynomialRing(D, v)`` has coefficients that are themselves
polynomial elements, which is how multivariate polynomials are
represented, one variable per tower level.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .domain import Domain, Element
from .errors import DomainMismatch, VariableMismatch


class _NegInf:
    """Degree of the zero polynomial; ordered below every integer."""

    __slots__ = ()

    def __lt__(self, other):
        return not isinstance(other, _NegInf)

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return isinstance(other, _NegInf)

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __repr__(self):
        return "-inf"


NEG_INF = _NegInf()


class Poly:
    """A polynomial in one variable with coefficients in a Domain."""

    __slots__ = ("domain", "variable", "coeffs")

    def __init__(self, domain: Domain, variable: str, coeffs: Iterable[Element] = ()):
        cs = tuple(coeffs)
        n = len(cs)
        while n and cs[n - 1].is_zero:
            n -= 1
        self.domain = domain
        self.variable = variable
        self.coeffs = cs[:n]

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def zero(cls, domain: Domain, variable: str) -> "Poly":
        return cls(domain, variable, ())

    @classmethod
    def constant(cls, domain: Domain, variable: str, value) -> "Poly":
        return cls(domain, variable, (domain.element(value),))

    @classmethod
    def gen(cls, domain: Domain, variable: str) -> "Poly":
        """The polynomial ``variable`` itself."""
        return cls(domain, variable, (domain.zero, domain.one))

    @classmethod
    def monomial(cls, domain: Domain, variable: str, coeff, exponent: int) -> "Poly":
        c = domain.element(coeff)
        return cls(domain, variable, (domain.zero,) * exponent + (c,))

    @classmethod
    def from_coeffs(cls, domain: Domain, variable: str, values: Iterable) -> "Poly":
        """Build from ascending coefficient values, coercing each one."""
        return cls(domain, variable, tuple(domain.element(v) for v in values))

    # ------------------------------------------------------------------
    # structure

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading_coefficient(self) -> Element:
        if not self.coeffs:
            raise ValueError("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.domain.one

    def coeff(self, i: int) -> Element:
        """Coefficient of variable**i, zero beyond the degree."""
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.domain.zero

    # ------------------------------------------------------------------
    # arithmetic

    def _check(self, other: "Poly") -> None:
        if self.domain is not other.domain and self.domain != other.domain:
            raise DomainMismatch(f"{self.domain} vs {other.domain}")
        if self.variable != other.variable:
            raise VariableMismatch(f"{self.variable!r} vs {other.variable!r}")

    def __add__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(self.domain, self.variable, out)

    def __sub__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        self._check(other)
        zero = self.domain.zero
        out = [zero] * max(len(self.coeffs), len(other.coeffs))
        for i, c in enumerate(self.coeffs):
            out[i] = c
        for i, c in enumerate(other.coeffs):
            out[i] = out[i] - c
        return Poly(self.domain, self.variable, out)

    def __neg__(self):
        return Poly(self.domain, self.variable, tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, Element):
            if self.domain is not other.domain and self.domain != other.domain:
                raise DomainMismatch(f"{self.domain} vs {other.domain}")
            return Poly(self.domain, self.variable, tuple(c * other for c in self.coeffs))
        if not isinstance(other, Poly):
            return NotImplemented
        self._check(other)
        if not self.coeffs or not other.coeffs:
            return Poly(self.domain, self.variable, ())
        zero = self.domain.zero
        out = [zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(self.domain, self.variable, out)

    def __rmul__(self, other):
        if isinstance(other, Element):
            return self.__mul__(other)
        return NotImplemented

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = Poly.constant(self.domain, self.variable, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def compose(self, inner: "Poly") -> "Poly":
        """Substitute ``inner`` for this polynomial's variable (Horner)."""
        if self.domain is not inner.domain and self.domain != inner.domain:
            raise DomainMismatch(f"{self.domain} vs {inner.domain}")
        out = Poly.zero(self.domain, inner.variable)
        for c in reversed(self.coeffs):
            out = out * inner + Poly.constant(self.domain, inner.variable, c)
        return out

    def evaluate(self, point: Element) -> Element:
        """Value at a point of the coefficient domain (Horner)."""
        if self.domain is not point.domain and self.domain != point.domain:
            raise DomainMismatch(f"{self.domain} vs {point.domain}")
        acc = self.domain.zero
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return acc

    # ------------------------------------------------------------------
    # comparison and display

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return (
            self.variable == other.variable
            and self.coeffs == other.coeffs
            and (self.domain is other.domain or self.domain == other.domain)
        )

    def __hash__(self):
        return hash((self.variable, self.coeffs))

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c.is_zero:
                continue
            sign, body = _term_text(c, self.variable, i)
            if not parts:
                parts.append(body if sign == "+" else "-" + body)
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    def __repr__(self):
        return f"<Poly {self} over {self.domain}>"


def _term_text(c: Element, variable: str, exponent: int) -> tuple[str, str]:
    """Sign and body of one printed term, suitable for re-parsing."""
    sign, text, is_unit = _coeff_text(c)
    if exponent == 0:
        return sign, text
    power = variable if exponent == 1 else f"{variable}^{exponent}"
    if is_unit:
        return sign, power
    return sign, f"{text}*{power}"


def _coeff_text(c: Element) -> tuple[str, str, bool]:
    if c.is_ground:
        g = c.ground_value().value
        if isinstance(g, Fraction) and g < 0:
            return "-", str(-g), g == -1
        return "+", str(g), g == 1
    # tower coefficient with an actual variable in it: parenthesize
    return "+", f"({c.value})", False


def lift(p: Poly, domain: Domain) -> Poly:
    """Reinterpret p over a tower whose ground contains p's coefficients."""
    return Poly(domain, p.variable, tuple(domain.element(c) for c in p.coeffs))
